"""The Delannoy-loop diagram category.

``Hom(n, m)`` has basis the loops ``Lambda(n, m)``.  For ``p1 in Lambda(n, m)``
and ``p2 in Lambda(m, l)``::

    [p1] o [p2] = sum over q in Lambda(n, m, l) with pi12(q) = p1, pi23(q) = p2
                  of (-1)^(len(q) + len(pi13(q))) [pi13(q)]

where ``len`` counts steps.  That length convention is a choice; it is the one
under which identities exist (see :func:`identity`).
"""
from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import linalg
from .lattice import TorusLoop, diagonal_loop, enumerate_loops, enumerate_loops3, loop_action, project


class LoopCategoryError(RuntimeError):
    pass


class Morphism:
    """A rational combination of loops in Hom(src, dst).  Zero terms are dropped."""

    __slots__ = ("src", "dst", "coeffs")

    def __init__(self, src: int, dst: int, coeffs: Mapping[TorusLoop, object] | None = None):
        self.src, self.dst = src, dst
        clean = {}
        for p, c in (coeffs or {}).items():
            if (p.n, p.m) != (src, dst):
                raise ValueError(f"loop on {p.n}x{p.m} torus in Hom({src}, {dst})")
            c = Fraction(c)
            if c:
                clean[p] = c
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def basis(cls, p: TorusLoop) -> "Morphism":
        return cls(p.n, p.m, {p: 1})

    def __eq__(self, other):
        return (isinstance(other, Morphism) and (self.src, self.dst) == (other.src, other.dst)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.src, self.dst, tuple(self.coeffs.items())))

    def __add__(self, other: "Morphism") -> "Morphism":
        self._same_hom(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return Morphism(self.src, self.dst, out)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return Morphism(self.src, self.dst, {p: c * Fraction(scalar) for p, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def _same_hom(self, other):
        if (self.src, self.dst) != (other.src, other.dst):
            raise ValueError("morphisms live in different Hom spaces")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return f"Morphism({self.src}->{self.dst}: 0)"
        terms = " + ".join(f"{c}*[{p.start}:{p.steps}]" for p, c in self.coeffs.items())
        return f"Morphism({self.src}->{self.dst}: {terms})"

    def to_json(self) -> dict:
        return {
            "src": self.src,
            "dst": self.dst,
            "terms": [{"loop": p.to_json(), "coeff": linalg.fmt(c)} for p, c in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, obj) -> "Morphism":
        terms = obj["terms"]
        coeffs = {}
        for t in terms:
            p = TorusLoop.from_json(t["loop"])
            coeffs[p] = coeffs.get(p, 0) + Fraction(str(t["coeff"]))
        return cls(int(obj["src"]), int(obj["dst"]), coeffs)


@lru_cache(maxsize=None)
def composition_table(n: int, m: int, l: int) -> dict:
    """``{(p1, p2): {p3: structure constant}}`` for Hom(n, m) x Hom(m, l)."""
    table: dict = defaultdict(lambda: defaultdict(int))
    for q in enumerate_loops3(n, m, l):
        p1, p2, p3 = project(q, "12"), project(q, "23"), project(q, "13")
        table[p1, p2][p3] += -1 if (len(q) + len(p3)) % 2 else 1
    return {k: {p: c for p, c in v.items() if c} for k, v in table.items()}


def compose_basis(p1: TorusLoop, p2: TorusLoop) -> dict[TorusLoop, int]:
    if p1.m != p2.n:
        raise ValueError(f"cannot compose Hom({p1.n},{p1.m}) with Hom({p2.n},{p2.m})")
    return composition_table(p1.n, p1.m, p2.m).get((p1, p2), {})


def compose(f: Morphism, g: Morphism) -> Morphism:
    """The composite in Hom(f.src, g.dst) of f in Hom(n, m) and g in Hom(m, l)."""
    if f.dst != g.src:
        raise ValueError(f"index mismatch: Hom({f.src},{f.dst}) then Hom({g.src},{g.dst})")
    out: dict[TorusLoop, Fraction] = {}
    for p1, c1 in f.coeffs.items():
        for p2, c2 in g.coeffs.items():
            for p3, c in compose_basis(p1, p2).items():
                out[p3] = out.get(p3, 0) + c1 * c2 * c
    return Morphism(f.src, g.dst, out)


@lru_cache(maxsize=None)
def identity(n: int) -> Morphism:
    """Solve e o [p] = [p] = [p] o e over the loop basis of End(n).

    Raises LoopCategoryError when there is no solution, more than one, or the
    solution is not the all-diagonal loop through (0, 0).
    """
    basis = enumerate_loops(n, n)
    index = {p: i for i, p in enumerate(basis)}
    size = len(basis)
    rows: dict[int, dict[int, int]] = {}
    rhs: dict[int, int] = {}
    for pi_, p in enumerate(basis):
        for side in (0, 1):
            for qi, q in enumerate(basis):
                prod = compose_basis(q, p) if side == 0 else compose_basis(p, q)
                for r, c in prod.items():
                    row = (side * size + pi_) * size + index[r]
                    rows.setdefault(row, {})[qi] = c
            for r in (pi_,):
                row = (side * size + pi_) * size + r
                rhs[row] = 1
                rows.setdefault(row, {})
    order = sorted(rows)
    renum = {r: i for i, r in enumerate(order)}
    A = linalg.sparse({renum[r]: rows[r] for r in order}, (len(order), size))
    b = linalg.sparse({renum[r]: {0: v} for r, v in rhs.items()}, (len(order), 1))
    sol, nullity = linalg.solve_unique(A, b)
    if sol is None:
        raise LoopCategoryError(f"End({n}) has no two-sided identity")
    if nullity:
        raise LoopCategoryError(f"End({n}) identity is not unique (nullity {nullity})")
    e = Morphism(n, n, {p: linalg.to_fraction(x) for p, x in zip(basis, sol)})
    if e != Morphism.basis(diagonal_loop(n)):
        raise LoopCategoryError(f"identity of End({n}) is not the diagonal loop: {e}")
    return e


def end_algebra(n: int) -> tuple[list[TorusLoop], dict[tuple[int, int, int], int]]:
    """Basis of End(n) and its nonzero structure constants ``{(i, j, k): c}``."""
    basis = enumerate_loops(n, n)
    index = {p: i for i, p in enumerate(basis)}
    consts = {}
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            for r, c in compose_basis(p, q).items():
                consts[i, j, index[r]] = c
    return basis, consts


def shift_outer(f: Morphism, a: int, c: int) -> Morphism:
    """Relabel the source coordinate by a and the target coordinate by c."""
    return Morphism(f.src, f.dst, {loop_action(p, a, c): x for p, x in f.coeffs.items()})


def random_basis_morphism(n: int, m: int, rng: random.Random) -> Morphism:
    return Morphism.basis(rng.choice(enumerate_loops(n, m)))
