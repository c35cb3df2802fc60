"""Decompositions on the circle side: simples, standard modules, projectives.

Indecomposable projectives are the generic simples ``M_{cls,zeta}`` (labelled
by :class:`~circlerep.weights.Generic`) and the special projective covers
``P(n)`` (:class:`SpecialP`).  A decomposition into projectives is a
``Counter`` over these labels.

The multiplicity of a generic simple in a Schwartz space is always obtained by
flattening induced modules.  :func:`schwartz_multiplicity_closed_form` keeps
both printed readings of the closed formula so they can be compared.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Union

from .branching import Abar_decomp, canonical, h_length
from .weights import BLACK, WHITE, CyclicClass, Generic, SpecialM, Trivial, all_classes, \
    all_weights, check_weight, class_of_special, generic_zetas, is_special, pi, special_simple, \
    transpose_weight


@dataclass(frozen=True)
class SpecialP:
    """P(n), the projective cover of M(n)."""

    n: int

    def __str__(self):
        return f"P({self.n})"


ProjLabel = Union[Generic, SpecialP]


def proj_sort_key(p: ProjLabel):
    if isinstance(p, SpecialP):
        return (0, abs(p.n), p.n < 0, "", 0)
    return (1, len(p.cls), False, p.cls.rep, p.zeta)


def sorted_decomp(dec: Counter) -> list[tuple[ProjLabel, int]]:
    return [(p, dec[p]) for p in sorted(dec, key=proj_sort_key) if dec[p]]


def label_to_json(label) -> dict:
    if isinstance(label, SpecialP):
        return {"kind": "P", "n": label.n}
    if isinstance(label, Generic):
        return {"kind": "generic", "class": label.cls.rep, "zeta": label.zeta}
    if isinstance(label, SpecialM):
        return {"kind": "M", "n": label.n}
    if isinstance(label, Trivial):
        return {"kind": "trivial"}
    raise TypeError(label)


def label_from_json(obj: dict):
    kind = obj["kind"]
    if kind == "P":
        return SpecialP(int(obj["n"]))
    if kind == "generic":
        return Generic(CyclicClass.of(check_weight(obj["class"])), int(obj["zeta"]))
    if kind == "M":
        return special_simple(int(obj["n"]))
    if kind == "trivial":
        return Trivial()
    raise ValueError(f"unknown label kind {kind!r}")


def decomp_to_json(dec: Counter) -> list[dict]:
    return [{"label": label_to_json(p), "mult": k} for p, k in sorted_decomp(dec)]


# -- simples and standard modules ------------------------------------------

def classify(cls: CyclicClass, zeta: int) -> str:
    return "special" if is_special(cls, zeta) else "generic"


def _special_index(cls: CyclicClass) -> int:
    return len(cls) if cls.rep[0] == BLACK else -len(cls)


@dataclass(frozen=True)
class StdModuleData:
    cls: CyclicClass
    zeta: int
    h_decomp: dict
    length: int
    sub: object            # SimpleGLabel or None
    invariant_dim: int
    tau_power_eigenvalue: int


def standard_data(cls: CyclicClass, zeta: int) -> StdModuleData:
    """Invariants of the standard module Delta_{cls,zeta}."""
    h = canonical(Abar_decomp(cls.rep))
    if is_special(cls, zeta):
        n = _special_index(cls)
        # sub is M(pi(n-1), eps(n-1)) for n > 0, and its transpose for n < 0
        sub = special_simple(n - 1 if n > 0 else n + 1)
        length = 2
    else:
        sub, length = None, 1
    return StdModuleData(cls, zeta, h, length, sub, cls.N, zeta)


@dataclass(frozen=True)
class DeltaFiltration:
    subs: tuple[str, str]
    quotient: str
    lengths: tuple[int, int, int]

    @property
    def total_length(self) -> int:
        return sum(self.lengths)


def delta_filtration(lam: str) -> DeltaFiltration:
    """0 -> Delta_{lam.} + Delta_{lam o} -> I_lam -> Delta_lam -> 0, at label level."""
    check_weight(lam)
    if not lam:
        raise ValueError("the standard filtration is not exact for the empty weight")
    subs = (lam + BLACK, lam + WHITE)
    # Delta_mu restricts to A(mu), of length 2 len(mu)
    lengths = (2 * len(subs[0]), 2 * len(subs[1]), 2 * len(lam))
    return DeltaFiltration(subs, lam, lengths)


def restrict_simple(s) -> Counter:
    if isinstance(s, Trivial):
        return Counter({"": 1})
    if isinstance(s, SpecialM):
        return Counter({pi(s.n): 1})
    if isinstance(s, Generic):
        return Abar_decomp(s.cls.rep)
    raise TypeError(s)


def restrict_projective(p: ProjLabel) -> Counter:
    if isinstance(p, Generic):
        return Abar_decomp(p.cls.rep)
    # P(n) has constituents M(n) twice, M(n - 1) and M(n + 1)
    return Counter({pi(p.n): 2}) + Counter({pi(p.n - 1): 1}) + Counter({pi(p.n + 1): 1})


def categorical_dim(s) -> int:
    if isinstance(s, Trivial):
        return 1
    if isinstance(s, SpecialM):
        return (-1) ** (s.n % 2)
    if isinstance(s, Generic):
        return 0
    raise TypeError(s)


def transpose_label(s):
    if isinstance(s, Trivial):
        return s
    if isinstance(s, SpecialM):
        return SpecialM(-s.n)
    if isinstance(s, Generic):
        cls = CyclicClass.of(transpose_weight(s.cls.rep))
        return Generic(cls, (-s.zeta) % cls.g)
    if isinstance(s, SpecialP):
        return SpecialP(-s.n)
    raise TypeError(s)


def dual_special(n: int):
    """M(n)^dual = M(-n).  Duals of generic simples are not provided."""
    if not isinstance(n, int):
        raise TypeError("dual_special takes the index n of M(n)")
    return special_simple(-n)


def dual_label(s):
    if isinstance(s, Trivial):
        return s
    if isinstance(s, SpecialM):
        return dual_special(s.n)
    if isinstance(s, SpecialP):
        return SpecialP(-s.n)
    raise ValueError(f"dual of the generic simple {s} is not available")


# -- induced modules and Schwartz spaces ------------------------------------

def _special_n_of_weight(mu: str) -> int | None:
    if not mu:
        return 0
    if mu == BLACK * len(mu):
        return len(mu)
    if mu == WHITE * len(mu):
        return -len(mu)
    return None


def induced_proj_decomp(mu: str) -> Counter:
    """I_mu as a sum of indecomposable projectives (Frobenius reciprocity).

    P(n) occurs iff mu = pi(n).  A generic M_{cls,zeta} occurs iff mu is a
    rotation of cls or one of its N contractions, i.e. cls is [mu], [mu.] or
    [mu o]; then exactly once for each generic zeta.
    """
    check_weight(mu)
    out = Counter()
    n = _special_n_of_weight(mu)
    if n is not None:
        out[SpecialP(n)] += 1
    classes = [CyclicClass.of(mu + BLACK), CyclicClass.of(mu + WHITE)]
    if mu:
        classes.insert(0, CyclicClass.of(mu))
    for cls in classes:
        for z in generic_zetas(cls):
            out[Generic(cls, z)] += 1
    return out


def schwartz_g_decomp(n: int) -> Counter:
    """Schwartz space of n cyclically ordered points: sum of I_lam^binom(n-1, len lam)."""
    if n < 1:
        raise ValueError("schwartz_g_decomp needs n >= 1")
    out = Counter()
    for k in range(n):
        for lam in all_weights(k):
            for p, c in induced_proj_decomp(lam).items():
                out[p] += comb(n - 1, k) * c
    return out


def schwartz_multiplicity_closed_form(n: int, reading: str = "N") -> Counter:
    """Closed forms: P(m) with binom(n-1, |m|); generics with X(lam) binom(n, len lam).

    ``reading="N"`` uses the number of rotations N(lam) (what flattening
    gives); ``reading="g"`` uses the symmetry order g(lam) as printed.
    """
    if reading not in ("N", "g"):
        raise ValueError("reading must be 'N' or 'g'")
    out = Counter()
    for m in range(-(n - 1), n):
        out[SpecialP(m)] = comb(n - 1, abs(m))
    for k in range(1, n + 1):
        for cls in all_classes(k):
            factor = cls.N if reading == "N" else cls.g
            for z in generic_zetas(cls):
                out[Generic(cls, z)] = factor * comb(n, k)
    return +out


def hom_dim_projectives(P: ProjLabel, Q: ProjLabel) -> int:
    if isinstance(P, Generic) or isinstance(Q, Generic):
        return 1 if P == Q else 0
    d = abs(P.n - Q.n)
    return 2 if d == 0 else 1 if d == 1 else 0


def hom_dim_between(A: Counter, B: Counter) -> int:
    """dim Hom between two sums of indecomposable projectives."""
    total = 0
    for P, a in A.items():
        for Q, b in B.items():
            total += a * b * hom_dim_projectives(P, Q)
    return total


def hom_dim_schwartz(n: int, m: int) -> int:
    return hom_dim_between(schwartz_g_decomp(n), schwartz_g_decomp(m))


def proj_h_length(dec: Counter) -> int:
    return sum(k * h_length(restrict_projective(p)) for p, k in dec.items())


def special_projective_of(n: int) -> tuple[CyclicClass, int] | None:
    return None if n == 0 else class_of_special(n)
