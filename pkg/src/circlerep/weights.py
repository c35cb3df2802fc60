"""Weights: cyclic words over the two-letter alphabet {b, w}.

A weight is stored as a plain ``str`` over ``"b"`` (filled dot) and ``"w"``
(hollow dot).  The order ``b < w`` is the string order, so the canonical
representative of a cyclic class is simply ``min`` over rotations.

Simple objects of the circle category are labelled by :class:`Trivial`,
:class:`Generic` and :class:`SpecialM`.  Roots of unity never appear as
numbers: a root ``exp(2*pi*i*j/g)`` is stored as its exponent ``j`` mod ``g``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Union

BLACK = "b"
WHITE = "w"

_GLYPHS = {"●": BLACK, "○": WHITE, BLACK: BLACK, WHITE: WHITE}


def parse_weight(text: str) -> str:
    """Accept ``b``/``w`` strings or the dot glyphs; ``""`` or ``"-"`` is empty."""
    if text in ("-", "∅"):
        return ""
    try:
        return "".join(_GLYPHS[c] for c in text)
    except KeyError:
        raise ValueError(f"not a weight: {text!r}") from None


def check_weight(lam: str) -> str:
    if not isinstance(lam, str) or any(c not in (BLACK, WHITE) for c in lam):
        raise ValueError(f"not a weight: {lam!r}")
    return lam


def all_weights(n: int) -> Iterator[str]:
    """All 2**n weights of length n, in string order."""
    for letters in product(BLACK + WHITE, repeat=n):
        yield "".join(letters)


def cyclic_shift(lam: str, i: int = 1) -> str:
    # sigma(l1...ln) = ln l1 ... l(n-1)
    n = len(lam)
    if n == 0:
        return lam
    i %= n
    return lam[n - i:] + lam[:n - i]


def cyclic_contraction(lam: str, i: int) -> str:
    """Delete letter ``i`` (1-based, taken mod n) and read on cyclically.

    ``gamma_i(l) = l(i+1) ... ln l1 ... l(i-1)``.
    """
    n = len(lam)
    if n == 0:
        raise ValueError("cyclic contraction of the empty weight")
    i = (i - 1) % n
    return lam[i + 1:] + lam[:i]


def aut_order(lam: str) -> tuple[int, int]:
    """Return ``(g, N)``: the stabilizer order and the number of rotations."""
    n = len(lam)
    if n == 0:
        raise ValueError("aut_order of the empty weight")
    g = sum(1 for i in range(n) if cyclic_shift(lam, i) == lam)
    return g, n // g


def rotations(lam: str) -> list[str]:
    """The N(lam) distinct rotations sigma^i(lam), i = 1..N."""
    _, N = aut_order(lam)
    return [cyclic_shift(lam, i) for i in range(1, N + 1)]


def contractions(lam: str) -> list[str]:
    """The N(lam) distinct contractions gamma_i(lam), i = 1..N."""
    _, N = aut_order(lam)
    return [cyclic_contraction(lam, i) for i in range(1, N + 1)]


def transpose_weight(lam: str) -> str:
    swap = {BLACK: WHITE, WHITE: BLACK}
    return "".join(swap[c] for c in reversed(lam))


def pi(n: int) -> str:
    return (BLACK if n >= 0 else WHITE) * abs(n)


def epsilon(n: int) -> int:
    return -1 if n % 2 == 0 else 1


@lru_cache(maxsize=None)
def canonical_rotation(lam: str) -> str:
    if not lam:
        return lam
    return min(cyclic_shift(lam, i) for i in range(len(lam)))


@dataclass(frozen=True, order=True)
class CyclicClass:
    """A rotation class of nonempty weights, keyed by its least rotation."""

    rep: str

    def __post_init__(self):
        check_weight(self.rep)
        if not self.rep:
            raise ValueError("cyclic classes are of nonempty weights")
        if canonical_rotation(self.rep) != self.rep:
            raise ValueError(f"{self.rep!r} is not the least rotation; use CyclicClass.of")

    @classmethod
    def of(cls, lam: str) -> "CyclicClass":
        return cls(canonical_rotation(check_weight(lam)))

    def __len__(self):
        return len(self.rep)

    @property
    def g(self) -> int:
        return aut_order(self.rep)[0]

    @property
    def N(self) -> int:
        return aut_order(self.rep)[1]

    def transpose(self) -> "CyclicClass":
        return CyclicClass.of(transpose_weight(self.rep))

    def __str__(self):
        return self.rep


def all_classes(n: int) -> list[CyclicClass]:
    """Every cyclic class of length n (the binary necklaces)."""
    return sorted({CyclicClass.of(lam) for lam in all_weights(n)})


def special_zeta(cls: CyclicClass) -> int | None:
    """Exponent j of epsilon(+-len) for a constant class, None for mixed classes."""
    rep = cls.rep
    if rep.count(rep[0]) != len(rep):
        return None
    ell = len(rep)
    # a constant word has g = ell, and epsilon = -1 exactly when ell is even
    return ell // 2 if ell % 2 == 0 else 0


def is_special(cls: CyclicClass, zeta: int) -> bool:
    check_zeta(cls, zeta)
    return special_zeta(cls) == zeta


def check_zeta(cls: CyclicClass, zeta: int) -> int:
    if not isinstance(zeta, int) or not 0 <= zeta < cls.g:
        raise ValueError(f"zeta exponent {zeta!r} invalid for class {cls} (g={cls.g})")
    return zeta


def generic_zetas(cls: CyclicClass) -> list[int]:
    sp = special_zeta(cls)
    return [j for j in range(cls.g) if j != sp]


def class_of_special(n: int) -> tuple[CyclicClass, int]:
    """The special pair (pi(n), epsilon(n)) as (class, exponent), n != 0."""
    if n == 0:
        raise ValueError("pi(0) is empty; M(0) is the trivial module")
    cls = CyclicClass.of(pi(n))
    return cls, special_zeta(cls)


# -- simple labels -----------------------------------------------------------

@dataclass(frozen=True)
class Trivial:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Generic:
    cls: CyclicClass
    zeta: int

    def __post_init__(self):
        check_zeta(self.cls, self.zeta)
        if is_special(self.cls, self.zeta):
            raise ValueError(f"({self.cls}, zeta^{self.zeta}) is special, not generic")

    def __str__(self):
        return f"M[{self.cls},{self.zeta}/{self.cls.g}]"


@dataclass(frozen=True)
class SpecialM:
    n: int

    def __post_init__(self):
        if self.n == 0:
            raise ValueError("M(0) is the trivial module; use special_simple(0)")

    def __str__(self):
        return f"M({self.n})"


SimpleGLabel = Union[Trivial, Generic, SpecialM]


def special_simple(n: int) -> SimpleGLabel:
    """M(n), with M(0) normalized to the trivial module."""
    return Trivial() if n == 0 else SpecialM(n)


def simple_label(cls: CyclicClass, zeta: int) -> SimpleGLabel:
    """The simple M_{cls,zeta}, returned as SpecialM when the pair is special."""
    if is_special(cls, zeta):
        n = len(cls) if cls.rep[0] == BLACK else -len(cls)
        return SpecialM(n)
    return Generic(cls, zeta)


def label_sort_key(s: SimpleGLabel):
    if isinstance(s, Trivial):
        return (0, 0, "", 0)
    if isinstance(s, SpecialM):
        return (1, s.n, "", 0)
    return (2, len(s.cls), s.cls.rep, s.zeta)
