"""Delannoy paths, Delannoy loops on a torus, and their counting formulas.

A Delannoy path to ``(n, m)`` is a word over ``R = (1,0)``, ``U = (0,1)``,
``D = (1,1)``.  A Delannoy loop on ``Z/n x Z/m`` is a cyclic step word with a
start vertex that winds once around each direction.  Loops are unbased, so
they are stored in canonical form: over all rotations of the word, with the
start advanced accordingly, keep the least ``(start, steps)`` pair.

Three-dimensional loops use the step alphabet ``X, Y, Z, XY, XZ, YZ, XYZ``
(the coordinates that increase).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

STEPS2 = {"R": (1, 0), "U": (0, 1), "D": (1, 1)}
_VEC2 = {v: k for k, v in STEPS2.items()}

STEPS3 = {
    "X": (1, 0, 0), "Y": (0, 1, 0), "Z": (0, 0, 1),
    "XY": (1, 1, 0), "XZ": (1, 0, 1), "YZ": (0, 1, 1), "XYZ": (1, 1, 1),
}
_VEC3 = {v: k for k, v in STEPS3.items()}

AXES = {"12": (0, 1), "23": (1, 2), "13": (0, 2)}


# -- paths -------------------------------------------------------------------

def enumerate_paths(n: int, m: int) -> list[str]:
    """All (n, m)-Delannoy paths as step words, in lexicographic order."""
    if n < 0 or m < 0:
        raise ValueError("path endpoint must be nonnegative")
    return list(_paths(n, m))


@lru_cache(maxsize=None)
def _paths(n: int, m: int) -> tuple[str, ...]:
    if n == 0 and m == 0:
        return ("",)
    out = []
    if n and m:
        out += ["D" + w for w in _paths(n - 1, m - 1)]
    if n:
        out += ["R" + w for w in _paths(n - 1, m)]
    if m:
        out += ["U" + w for w in _paths(n, m - 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def delannoy(n: int, m: int) -> int:
    """D(n, m) by the three-term recurrence; zero off the quadrant."""
    if n < 0 or m < 0:
        return 0
    if n == 0 or m == 0:
        return 1
    return delannoy(n, m - 1) + delannoy(n - 1, m) + delannoy(n - 1, m - 1)


def count_paths_formula(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError("path endpoint must be nonnegative")
    return sum(comb(n, k) * comb(m, k) * 2**k for k in range(min(n, m) + 1))


# -- loops -------------------------------------------------------------------

def _canonical(shape: Sequence[int], start: tuple, steps: tuple, vecs: dict) -> tuple[tuple, tuple]:
    pos = list(start)
    best = (tuple(pos), steps)
    L = len(steps)
    for k in range(1, L):
        for a, d in enumerate(vecs[steps[k - 1]]):
            pos[a] = (pos[a] + d) % shape[a]
        cand = (tuple(pos), steps[k:] + steps[:k])
        if cand < best:
            best = cand
    return best


def _check_winding(shape, steps, vecs):
    totals = [0] * len(shape)
    for s in steps:
        for a, d in enumerate(vecs[s]):
            totals[a] += d
    if tuple(totals) != tuple(shape):
        raise ValueError(f"steps wind {tuple(totals)}, expected {tuple(shape)}")


@dataclass(frozen=True, order=True)
class TorusLoop:
    """A canonical Delannoy loop on Z/n x Z/m.  Build with :meth:`make`."""

    n: int
    m: int
    start: tuple[int, int]
    steps: str

    @classmethod
    def make(cls, n: int, m: int, start, steps: str) -> "TorusLoop":
        if n < 1 or m < 1:
            raise ValueError("torus sides must be positive")
        if any(s not in STEPS2 for s in steps):
            raise ValueError(f"bad step word {steps!r}")
        _check_winding((n, m), steps, STEPS2)
        start = (start[0] % n, start[1] % m)
        st, word = _canonical((n, m), start, tuple(steps), STEPS2)
        return cls(n, m, st, "".join(word))

    def __len__(self):
        return len(self.steps)

    def vertices(self) -> list[tuple[int, int]]:
        """Vertices in visiting order, one per step (the step leaves that vertex)."""
        x, y = self.start
        out = []
        for s in self.steps:
            out.append((x, y))
            dx, dy = STEPS2[s]
            x, y = (x + dx) % self.n, (y + dy) % self.m
        return out

    def is_canonical(self) -> bool:
        return TorusLoop.make(self.n, self.m, self.start, self.steps) == self

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "start": list(self.start), "steps": self.steps}

    @classmethod
    def from_json(cls, obj: dict) -> "TorusLoop":
        return cls.make(int(obj["n"]), int(obj["m"]), tuple(obj["start"]), str(obj["steps"]))


@dataclass(frozen=True, order=True)
class TorusLoop3:
    n: int
    m: int
    l: int
    start: tuple[int, int, int]
    steps: tuple[str, ...]

    @classmethod
    def make(cls, n, m, l, start, steps) -> "TorusLoop3":
        if min(n, m, l) < 1:
            raise ValueError("torus sides must be positive")
        steps = tuple(steps)
        if any(s not in STEPS3 for s in steps):
            raise ValueError(f"bad step word {steps!r}")
        shape = (n, m, l)
        _check_winding(shape, steps, STEPS3)
        start = tuple(s % k for s, k in zip(start, shape))
        st, word = _canonical(shape, start, steps, STEPS3)
        return cls(n, m, l, st, word)

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "l": self.l, "start": list(self.start),
                "steps": list(self.steps)}


def diagonal_loop(n: int) -> TorusLoop:
    """The all-diagonal loop through (0, 0) on the n x n torus."""
    return TorusLoop.make(n, n, (0, 0), "D" * n)


@lru_cache(maxsize=None)
def _loops(n: int, m: int) -> tuple[TorusLoop, ...]:
    # every loop crosses the column x = 0, so starts (0, b) suffice
    found = set()
    for b in range(m):
        for word in _paths(n, m):
            found.add(TorusLoop.make(n, m, (0, b), word))
    return tuple(sorted(found))


def enumerate_loops(n: int, m: int) -> list[TorusLoop]:
    """Lambda(n, m), sorted by canonical form."""
    if n < 1 or m < 1:
        raise ValueError("enumerate_loops needs n, m >= 1")
    return list(_loops(n, m))


def loop_action(p: TorusLoop, a: int, b: int) -> TorusLoop:
    return TorusLoop.make(p.n, p.m, (p.start[0] + a, p.start[1] + b), p.steps)


def loop_orbits(n: int, m: int, group: str = "both") -> list[list[TorusLoop]]:
    """Orbits of Z/n x Z/m (``both``), Z/n (``x``) or Z/m (``y``) on Lambda(n, m)."""
    shifts = {
        "both": [(a, b) for a in range(n) for b in range(m)],
        "x": [(a, 0) for a in range(n)],
        "y": [(0, b) for b in range(m)],
    }[group]
    seen = set()
    orbits = []
    for p in _loops(n, m):
        if p in seen:
            continue
        orbit = sorted({loop_action(p, a, b) for a, b in shifts})
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def self_touchings(p: TorusLoop) -> int:
    """Number of extra visits to already-visited vertices."""
    verts = p.vertices()
    return len(verts) - len(set(verts))


def _paths3(n: int, m: int, l: int) -> Iterable[tuple[str, ...]]:
    @lru_cache(maxsize=None)
    def rec(a, b, c):
        if a == b == c == 0:
            return ((),)
        out = []
        for name, (dx, dy, dz) in STEPS3.items():
            if a >= dx and b >= dy and c >= dz:
                out += [(name,) + w for w in rec(a - dx, b - dy, c - dz)]
        return tuple(out)
    return rec(n, m, l)


@lru_cache(maxsize=None)
def _loops3(n: int, m: int, l: int) -> tuple[TorusLoop3, ...]:
    words = _paths3(n, m, l)
    found = set()
    for b in range(m):
        for c in range(l):
            for word in words:
                found.add(TorusLoop3.make(n, m, l, (0, b, c), word))
    return tuple(sorted(found))


def enumerate_loops3(n: int, m: int, l: int) -> list[TorusLoop3]:
    if min(n, m, l) < 1:
        raise ValueError("enumerate_loops3 needs positive sides")
    return list(_loops3(n, m, l))


def project(q: TorusLoop3, axes: str) -> TorusLoop:
    """Forget one coordinate; steps that become (0, 0) are deleted."""
    i, j = AXES[axes]
    shape = (q.n, q.m, q.l)
    steps = []
    for s in q.steps:
        v = STEPS3[s]
        w = (v[i], v[j])
        if w != (0, 0):
            steps.append(_VEC2[w])
    return TorusLoop.make(shape[i], shape[j], (q.start[i], q.start[j]), "".join(steps))


# -- counting ----------------------------------------------------------------

def count_loops_formula(n: int, m: int) -> int:
    if n < 1 or m < 1:
        raise ValueError("count_loops_formula needs n, m >= 1")
    return n * (delannoy(n, m - 1) + delannoy(n - 1, m - 1))


def count_loops_difference(n: int, m: int) -> int:
    return n * (delannoy(n, m) - delannoy(n - 1, m))


def count_loops_sum(n: int, m: int) -> int:
    return sum(comb(n, k) * comb(m, k) * k * 2**k for k in range(1, min(n, m) + 1))


class PowerSeries2:
    """Bivariate power series over Z, truncated to degree <= ``deg`` in each variable."""

    def __init__(self, coeffs: dict[tuple[int, int], int], deg: int = 16):
        self.deg = deg
        self.c = [[0] * (deg + 1) for _ in range(deg + 1)]
        for (i, j), v in coeffs.items():
            if i <= deg and j <= deg:
                self.c[i][j] = v

    def __getitem__(self, ij):
        i, j = ij
        if 0 <= i <= self.deg and 0 <= j <= self.deg:
            return self.c[i][j]
        raise IndexError(f"coefficient {ij} beyond truncation degree {self.deg}")

    def __mul__(self, other):
        if not isinstance(other, PowerSeries2):
            return PowerSeries2({(i, j): other * v for i, row in enumerate(self.c)
                                 for j, v in enumerate(row)}, self.deg)
        d = min(self.deg, other.deg)
        out = {}
        for i1 in range(d + 1):
            for j1 in range(d + 1):
                a = self.c[i1][j1]
                if not a:
                    continue
                for i2 in range(d + 1 - i1):
                    row = other.c[i2]
                    for j2 in range(d + 1 - j1):
                        if row[j2]:
                            key = (i1 + i2, j1 + j2)
                            out[key] = out.get(key, 0) + a * row[j2]
        return PowerSeries2(out, d)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries2":
        c0 = self.c[0][0]
        if c0 not in (1, -1):
            raise ValueError("only series with constant term +-1 are invertible over Z")
        d = self.deg
        inv = [[0] * (d + 1) for _ in range(d + 1)]
        for i in range(d + 1):
            for j in range(d + 1):
                if i == j == 0:
                    inv[0][0] = c0
                    continue
                acc = 0
                for a in range(i + 1):
                    for b in range(j + 1):
                        if (a or b) and self.c[a][b]:
                            acc += self.c[a][b] * inv[i - a][j - b]
                inv[i][j] = -acc * c0
        return PowerSeries2({(i, j): inv[i][j] for i in range(d + 1) for j in range(d + 1)}, d)


@lru_cache(maxsize=None)
def circular_genfun(deg: int = 16) -> PowerSeries2:
    """2xy / (1 - x - y - xy)^2, truncated."""
    base = PowerSeries2({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): -1}, deg)
    g = base.inverse()
    return PowerSeries2({(1, 1): 2}, deg) * (g * g)


def genfun_coefficient(n: int, m: int, deg: int = 16) -> int:
    if n < 1 or m < 1:
        raise ValueError("genfun_coefficient needs n, m >= 1")
    deg = max(deg, n, m)
    return circular_genfun(deg)[n, m]


def delannoy_table(max_n: int) -> list[list[int]]:
    """Rows m = 0..max_n, columns n = 0..max_n."""
    return [[delannoy(n, m) for n in range(max_n + 1)] for m in range(max_n + 1)]


def circular_table(max_n: int) -> list[list[int]]:
    """C(n, m) with the boundary row and column filled by 1."""
    return [[1 if n == 0 or m == 0 else count_loops_formula(n, m)
             for n in range(max_n + 1)] for m in range(max_n + 1)]


def orbit_sizes(n: int, m: int, group: str = "both") -> Counter:
    return Counter(len(o) for o in loop_orbits(n, m, group))
