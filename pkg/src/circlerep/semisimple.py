"""The semisimplification: signed bigraded vector spaces.

The simple object k(n, m) corresponds to Omega^m(M(n)), i.e. J+(n-m, n+m) for
m >= 0 and J-(n+m, n-m) for m <= 0.  Tensor products add bidegrees; the
braiding on k(n, m) x k(r, s) carries the sign (-1)^((n+m)(r+s)).
"""
from __future__ import annotations

from collections import Counter

from .specialblock import Label, label_dimension, label_of_ss, ss_index
from .weights import CyclicClass, Generic, SpecialM, Trivial, generic_zetas, pi


def ss_image(lab: Label) -> tuple[int, int] | None:
    return ss_index(lab)


def ss_preimage(n: int, m: int) -> Label:
    return label_of_ss(n, m)


class BigradedObject(Counter):
    """Multiset of bidegrees (n, m), one entry per copy of k(n, m)."""

    def dimension(self) -> int:
        return sum(c * ss_dimension(u) for u, c in self.items())

    def to_json(self) -> list[dict]:
        return [{"n": n, "m": m, "mult": c} for (n, m), c in sorted(self.items()) if c]


def ss_dimension(u: tuple[int, int]) -> int:
    return -1 if (u[0] + u[1]) % 2 else 1


def ss_tensor(A: BigradedObject, B: BigradedObject) -> BigradedObject:
    out = BigradedObject()
    for (n, m), a in A.items():
        for (r, s), b in B.items():
            out[n + r, m + s] += a * b
    return out


def ss_braiding_sign(u: tuple[int, int], v: tuple[int, int]) -> int:
    return -1 if ((u[0] + u[1]) * (v[0] + v[1])) % 2 else 1


def ss_ring_product(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Omega^r(M(n)) x Omega^s(M(m)) = Omega^(r+s)(M(n+m)), written on (n, r), (m, s)."""
    return a[0] + b[0], a[1] + b[1]


def tensor_with_M1(n: int) -> Counter:
    """M(1) x M(n) for n >= 1 or n = -1, as a multiset of simples."""
    if n >= 1:
        out = Counter({SpecialM(n + 1): 1})
        cls = CyclicClass.of(pi(n + 1))
        for z in generic_zetas(cls):
            out[Generic(cls, z)] += 1
        return out
    if n == -1:
        return Counter({Trivial(): 1, Generic(CyclicClass.of("bw"), 0): 1})
    raise ValueError(f"M(1) x M({n}) is only available for n >= 1 or n = -1")


def ss_of_simple(s) -> BigradedObject:
    """Image of a simple of the circle category: generic simples vanish."""
    if isinstance(s, Generic):
        return BigradedObject()
    if isinstance(s, Trivial):
        return BigradedObject({(0, 0): 1})
    if isinstance(s, SpecialM):
        return BigradedObject({(s.n, 0): 1})
    raise TypeError(s)


def ss_of_decomp(dec: Counter) -> BigradedObject:
    out = BigradedObject()
    for s, c in dec.items():
        for u, k in ss_of_simple(s).items():
            out[u] += c * k
    return out


def dimension_compatible(lab: Label) -> bool:
    """Categorical dimension of lab equals that of its image (0 if it has none)."""
    u = ss_image(lab)
    return label_dimension(lab) == (0 if u is None else ss_dimension(u))
