"""Graded modules over R = k[x, y]/(x^2, y^2), a model of the special block.

A graded R-module is a representation of the doubly infinite quiver with
``a_i: V_i -> V_{i-1}`` (multiplication by x) and ``b_i: V_i -> V_{i+1}``
(multiplication by y) subject to::

    a_{i-1} a_i = 0,   b_{i+1} b_i = 0,   a_{i+1} b_i = b_{i-1} a_i

Indecomposables are the free modules R(n) and the zigzags J+(n, m),
J-(n, m).  In J+(n, m) the top (generating) vertices are those of the parity
of n; in J-(n, m) those of the other parity.  With this convention
Delta(n) = J-(n-1, n) and Nabla(n) = J+(n-1, n).
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from . import linalg
from .linalg import Matrix


class RelationError(ValueError):
    pass


class DecompositionError(RuntimeError):
    pass


# -- labels ------------------------------------------------------------------

@dataclass(frozen=True)
class Zigzag:
    sign: str
    n: int
    m: int

    def __post_init__(self):
        if self.sign not in "+-" or len(self.sign) != 1:
            raise ValueError(f"zigzag sign must be '+' or '-', got {self.sign!r}")
        if self.n > self.m:
            raise ValueError(f"zigzag needs n <= m, got ({self.n}, {self.m})")
        if self.n == self.m and self.sign == "-":
            object.__setattr__(self, "sign", "+")      # J+(n, n) = J-(n, n)

    @property
    def dim(self) -> int:
        return self.m - self.n + 1

    def tops(self) -> list[int]:
        parity = self.n % 2 if self.sign == "+" else (self.n + 1) % 2
        return [i for i in range(self.n, self.m + 1) if i % 2 == parity]

    def __str__(self):
        if self.n == self.m:
            return f"M({self.n})"
        return f"J{self.sign}({self.n},{self.m})"


@dataclass(frozen=True)
class FreeR:
    n: int

    dim = 4

    def __str__(self):
        return f"R({self.n})"


Label = Union[Zigzag, FreeR]


def simple_label(n: int) -> Zigzag:
    return Zigzag("+", n, n)


def delta_label(n: int) -> Zigzag:
    return Zigzag("-", n - 1, n)


def nabla_label(n: int) -> Zigzag:
    return Zigzag("+", n - 1, n)


def label_sort_key(lab: Label):
    if isinstance(lab, FreeR):
        return (1, lab.n, 0, "")
    return (0, lab.n, lab.m, lab.sign)


def sorted_labels(dec: Counter) -> list[tuple[Label, int]]:
    return [(lab, dec[lab]) for lab in sorted(dec, key=label_sort_key) if dec[lab]]


def label_to_json(lab: Label) -> dict:
    if isinstance(lab, FreeR):
        return {"R": lab.n}
    return {"J": lab.sign, "n": lab.n, "m": lab.m}


def label_from_json(obj: dict) -> Label:
    if "R" in obj:
        return FreeR(int(obj["R"]))
    return Zigzag(obj["J"], int(obj["n"]), int(obj["m"]))


def decomp_to_json(dec: Counter) -> list[dict]:
    return [{"label": label_to_json(lab), "mult": k} for lab, k in sorted_labels(dec)]


def parse_label(text: str) -> Label:
    """Accepts J+(n,m), J-(n,m), R(n), M(n) (simple), D(n) (Delta), N(n) (Nabla)."""
    s = text.replace(" ", "")
    head, _, rest = s.partition("(")
    if not rest.endswith(")"):
        raise ValueError(f"cannot parse label {text!r}")
    try:
        args = [int(x) for x in rest[:-1].split(",")]
    except ValueError:
        raise ValueError(f"cannot parse label {text!r}") from None
    if head in ("J+", "J-") and len(args) == 2:
        return Zigzag(head[1], *args)
    if len(args) == 1:
        n = args[0]
        if head == "R":
            return FreeR(n)
        if head == "M":
            return simple_label(n)
        if head == "D":
            return delta_label(n)
        if head == "N":
            return nabla_label(n)
    raise ValueError(f"cannot parse label {text!r}")


# -- modules -----------------------------------------------------------------

class GradedRModule:
    """Finite-dimensional graded R-module; immutable, relations checked on construction."""

    __slots__ = ("dims", "down", "up")

    def __init__(self, dims: dict, down: dict | None = None, up: dict | None = None, check: bool = True):
        self.dims = {int(i): int(d) for i, d in sorted(dims.items()) if d}
        if any(d < 0 for d in self.dims.values()):
            raise ValueError("negative dimension")
        self.down = self._clean(down or {}, -1)
        self.up = self._clean(up or {}, +1)
        if check:
            self.check_relations()

    def _clean(self, maps: dict, step: int) -> dict:
        out = {}
        for i, M in maps.items():
            i = int(i)
            shape = (self.d(i + step), self.d(i))
            if not isinstance(M, Matrix):
                M = linalg.mat(M, shape)
            if M.shape != shape:
                raise ValueError(f"map at degree {i} has shape {M.shape}, expected {shape}")
            if 0 not in shape and not linalg.is_zero(M):
                out[i] = M.to_dense()
        return dict(sorted(out.items()))

    def d(self, i: int) -> int:
        return self.dims.get(i, 0)

    def a(self, i: int) -> Matrix:
        A = self.down.get(i)
        return A if A is not None else linalg.zeros(self.d(i - 1), self.d(i))

    def b(self, i: int) -> Matrix:
        B = self.up.get(i)
        return B if B is not None else linalg.zeros(self.d(i + 1), self.d(i))

    def xy(self, i: int) -> Matrix:
        """Multiplication by xy on V_i, i.e. a_{i+1} b_i."""
        return _mul(self.a(i + 1), self.b(i))

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    @property
    def support(self) -> tuple[int, int] | None:
        if not self.dims:
            return None
        return min(self.dims), max(self.dims)

    def check_relations(self) -> None:
        for i in self.dims:
            if not linalg.is_zero(_mul(self.a(i - 1), self.a(i))):
                raise RelationError(f"x^2 != 0 at degree {i}")
            if not linalg.is_zero(_mul(self.b(i + 1), self.b(i))):
                raise RelationError(f"y^2 != 0 at degree {i}")
            if _mul(self.a(i + 1), self.b(i)) != _mul(self.b(i - 1), self.a(i)):
                raise RelationError(f"xy != yx at degree {i}")

    def __eq__(self, other):
        return (isinstance(other, GradedRModule) and self.dims == other.dims
                and self.down == other.down and self.up == other.up)

    def __repr__(self):
        return f"GradedRModule(dims={self.dims})"

    def to_json(self) -> dict:
        return {
            "dims": {str(i): d for i, d in self.dims.items()},
            "down": {str(i): _mat_json(M) for i, M in self.down.items()},
            "up": {str(i): _mat_json(M) for i, M in self.up.items()},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GradedRModule":
        dims = {int(i): int(d) for i, d in obj["dims"].items()}

        def load(maps, step):
            out = {}
            for i, rows in maps.items():
                i = int(i)
                out[i] = linalg.mat([[Fraction(str(x)) for x in row] for row in rows],
                                    (dims.get(i + step, 0), dims.get(i, 0)))
            return out
        return cls(dims, load(obj.get("down", {}), -1), load(obj.get("up", {}), +1))


def _mat_json(M: Matrix) -> list[list[str]]:
    return [[linalg.fmt(x) for x in row] for row in linalg.entries(M)]


def _mul(A: Matrix, B: Matrix) -> Matrix:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    if 0 in A.shape or 0 in B.shape:
        return linalg.zeros(A.shape[0], B.shape[1])
    return A * B


def _block_diag(blocks: list[Matrix], rows: list[int], cols: list[int]) -> Matrix:
    entries = {}
    r0 = c0 = 0
    for B, r, c in zip(blocks, rows, cols):
        if B is not None:
            for i, row in enumerate(linalg.entries(B)):
                for j, x in enumerate(row):
                    if x:
                        entries.setdefault(r0 + i, {})[c0 + j] = x
        r0 += r
        c0 += c
    return linalg.sparse(entries, (r0, c0))


def direct_sum(*mods: GradedRModule) -> GradedRModule:
    degrees = sorted(set().union(*(m.dims for m in mods))) if mods else []
    dims = {i: sum(m.d(i) for m in mods) for i in degrees}
    down, up = {}, {}
    for i in degrees:
        down[i] = _block_diag([m.down.get(i) for m in mods], [m.d(i - 1) for m in mods],
                              [m.d(i) for m in mods])
        up[i] = _block_diag([m.up.get(i) for m in mods], [m.d(i + 1) for m in mods],
                            [m.d(i) for m in mods])
    return GradedRModule(dims, down, up, check=False)


def change_basis(M: GradedRModule, g: dict[int, Matrix]) -> GradedRModule:
    """Transport M along invertible g_i: V_i -> V_i; new a_i = g_{i-1} a_i g_i^-1."""
    ginv = {i: linalg.inverse(g[i]) for i in M.dims}
    down = {i: g[i - 1] * A * ginv[i] for i, A in M.down.items()}
    up = {i: g[i + 1] * B * ginv[i] for i, B in M.up.items()}
    return GradedRModule(M.dims, down, up)


def random_invertible(n: int, rng: random.Random, bound: int = 2) -> Matrix:
    """Permutation times unit lower times unit upper triangular; small integer entries."""
    L = [[1 if i == j else (rng.randint(-bound, bound) if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[1 if i == j else (rng.randint(-bound, bound) if j > i else 0) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    P = [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
    return linalg.mat(P, (n, n)) * linalg.mat(L, (n, n)) * linalg.mat(U, (n, n))


def scramble(M: GradedRModule, rng: random.Random) -> GradedRModule:
    return change_basis(M, {i: random_invertible(d, rng) for i, d in M.dims.items()})


def dual(M: GradedRModule) -> GradedRModule:
    """Graded dual: (DM)_i = (V_{-i})*, with a^D_i = (a_{1-i})^T and b^D_i = (b_{-1-i})^T."""
    dims = {-i: d for i, d in M.dims.items()}
    down = {1 - i: A.transpose() for i, A in M.down.items()}
    up = {-1 - i: B.transpose() for i, B in M.up.items()}
    return GradedRModule(dims, down, up)


# -- constructors --------------------------------------------------------------

def simple(n: int) -> GradedRModule:
    return GradedRModule({n: 1})


def delta(n: int) -> GradedRModule:
    """k in degrees n-1, n with a_n = id: sub M(n-1), top M(n)."""
    return GradedRModule({n - 1: 1, n: 1}, down={n: [[1]]})


def nabla(n: int) -> GradedRModule:
    """k in degrees n-1, n with b_{n-1} = id: sub M(n), top M(n-1)."""
    return GradedRModule({n - 1: 1, n: 1}, up={n - 1: [[1]]})


def free(n: int) -> GradedRModule:
    """R(n): basis x (degree n-1), [1, xy] (degree n), y (degree n+1)."""
    return GradedRModule(
        {n - 1: 1, n: 2, n + 1: 1},
        down={n: [[1, 0]], n + 1: [[0], [1]]},
        up={n - 1: [[0], [1]], n: [[1, 0]]},
    )


def zigzag(sign: str, n: int, m: int) -> GradedRModule:
    lab = Zigzag(sign, n, m)
    tops = set(lab.tops())
    down = {i: [[1]] for i in range(n + 1, m + 1) if i in tops}
    up = {i: [[1]] for i in range(n, m) if i in tops}
    return GradedRModule({i: 1 for i in range(n, m + 1)}, down, up)


def make(label: Label) -> GradedRModule:
    if isinstance(label, FreeR):
        return free(label.n)
    if isinstance(label, Zigzag):
        return zigzag(label.sign, label.n, label.m)
    raise TypeError(f"not a special-block label: {label!r}")


def make_sum(labels: Iterable[Label]) -> GradedRModule:
    return direct_sum(*(make(lab) for lab in labels))


# -- sub, quotient, homs -------------------------------------------------------

Hom = dict  # degree -> matrix V^A_i -> V^B_i


def submodule(M: GradedRModule, basis: dict[int, Matrix]) -> GradedRModule:
    """Module structure on an R-stable family of subspaces given by column bases."""
    basis = {i: basis.get(i, linalg.zeros(M.d(i), 0)) for i in M.dims}
    dims = {i: B.shape[1] for i, B in basis.items()}
    down, up = {}, {}
    for i, B in basis.items():
        if not dims[i]:
            continue
        if dims.get(i - 1):
            down[i] = linalg.coordinates(basis[i - 1], _mul(M.a(i), B))
        elif not linalg.is_zero(_mul(M.a(i), B)):
            raise ValueError(f"subspace not stable under x at degree {i}")
        if dims.get(i + 1):
            up[i] = linalg.coordinates(basis[i + 1], _mul(M.b(i), B))
        elif not linalg.is_zero(_mul(M.b(i), B)):
            raise ValueError(f"subspace not stable under y at degree {i}")
    return GradedRModule(dims, down, up)


def quotient(M: GradedRModule, basis: dict[int, Matrix]) -> GradedRModule:
    """M modulo an R-stable family of subspaces; representatives are standard vectors."""
    sub = {i: basis.get(i, linalg.zeros(M.d(i), 0)) for i in M.dims}
    comp = {i: linalg.complement(sub[i], M.d(i)) for i in M.dims}
    dims = {i: C.shape[1] for i, C in comp.items()}

    def induced(i, step, F):
        j = i + step
        if not dims.get(i) or not dims.get(j):
            return None
        coords = linalg.coordinates(linalg.hstack(sub[j], comp[j]) if sub[j].shape[1] else comp[j],
                                    _mul(F, comp[i]))
        k = sub[j].shape[1]
        return coords.extract(list(range(k, k + dims[j])), list(range(dims[i])))

    down = {i: induced(i, -1, M.a(i)) for i in M.dims}
    up = {i: induced(i, +1, M.b(i)) for i in M.dims}
    return GradedRModule(dims, {i: A for i, A in down.items() if A is not None},
                         {i: B for i, B in up.items() if B is not None})


def kernel_module(A: GradedRModule, f: Hom) -> GradedRModule:
    """Kernel of a degree-0 homomorphism f: A -> B."""
    basis = {}
    for i in A.dims:
        F = f.get(i)
        basis[i] = linalg.eye(A.d(i)) if F is None or 0 in F.shape else linalg.kernel(F)
    return submodule(A, basis)


def _hom_system(A: GradedRModule, B: GradedRModule):
    degs = [i for i in A.dims if B.d(i)]
    offset, nvars = {}, 0
    for i in degs:
        offset[i] = nvars
        nvars += B.d(i) * A.d(i)

    def var(i, r, c):
        return offset[i] + r * A.d(i) + c

    rows: list[dict[int, Fraction]] = []

    def add_equations(i, step, FA: Matrix, FB: Matrix):
        # f_{i+step} FA_i - FB_i f_i = 0, as maps V^A_i -> V^B_{i+step}
        j = i + step
        if not B.d(j) or not A.d(i):
            return
        fa = linalg.entries(FA) if A.d(j) and j in offset else None
        fb = linalg.entries(FB) if i in offset else None
        for r in range(B.d(j)):
            for c in range(A.d(i)):
                row: dict[int, Fraction] = {}
                if fa is not None:
                    for k in range(A.d(j)):
                        if fa[k][c]:
                            row[var(j, r, k)] = row.get(var(j, r, k), 0) + fa[k][c]
                if fb is not None:
                    for k in range(B.d(i)):
                        if fb[r][k]:
                            row[var(i, k, c)] = row.get(var(i, k, c), 0) - fb[r][k]
                if any(row.values()):
                    rows.append(row)

    for i in A.dims:
        add_equations(i, -1, A.a(i), B.a(i))
        add_equations(i, +1, A.b(i), B.b(i))
    system = linalg.sparse(dict(enumerate(rows)), (len(rows), nvars))
    return degs, offset, nvars, system


def hom_dim(A: GradedRModule, B: GradedRModule) -> int:
    """Dimension of the space of degree-0 R-module maps A -> B."""
    _, _, nvars, system = _hom_system(A, B)
    return nvars - linalg.rank(system)


def hom_basis(A: GradedRModule, B: GradedRModule) -> list[Hom]:
    degs, offset, nvars, system = _hom_system(A, B)
    if nvars == 0:
        return []
    K = linalg.entries(linalg.kernel(system))
    out = []
    for col in range(len(K[0]) if K else 0):
        f = {}
        for i in degs:
            f[i] = linalg.mat([[K[offset[i] + r * A.d(i) + c][col] for c in range(A.d(i))]
                               for r in range(B.d(i))], (B.d(i), A.d(i)))
        out.append(f)
    return out


def compose_homs(g: Hom, f: Hom) -> Hom:
    """g o f, f applied first."""
    return {i: _mul(g[i], f[i]) for i in f if i in g}


def is_hom(A: GradedRModule, B: GradedRModule, f: Hom) -> bool:
    def F(i):
        return f.get(i, linalg.zeros(B.d(i), A.d(i)))
    return all(_mul(F(i - 1), A.a(i)) == _mul(B.a(i), F(i))
               and _mul(F(i + 1), A.b(i)) == _mul(B.b(i), F(i)) for i in A.dims)


# -- decomposition -------------------------------------------------------------

def split_free(M: GradedRModule) -> tuple[Counter, GradedRModule]:
    """Split off all free summands.  R(i) occurs rank(xy on V_i) times.

    Generators are standard vectors v with xy v independent; the submodule
    they generate is free and injective, hence a summand, and M is the sum of
    it and the returned quotient.
    """
    gens = {}
    for i in M.dims:
        piv = linalg.pivots(M.xy(i))
        if piv:
            gens[i] = linalg.eye(M.d(i)).extract(list(range(M.d(i))), list(piv))
    if not gens:
        return Counter(), M
    span: dict[int, list[Matrix]] = {}
    for i, G in gens.items():
        span.setdefault(i, []).append(G)
        span.setdefault(i - 1, []).append(_mul(M.a(i), G))
        span.setdefault(i + 1, []).append(_mul(M.b(i), G))
        span.setdefault(i, []).append(M.xy(i) * G)
    basis = {i: linalg.column_space(linalg.hstack(*blocks)) for i, blocks in span.items()}
    free_part = Counter({FreeR(i): G.shape[1] for i, G in gens.items()})
    if sum(B.shape[1] for B in basis.values()) != 4 * sum(free_part.values()):
        raise DecompositionError("generated submodule is not free")
    return free_part, quotient(M, basis)


class _Line:
    """One component of the separated quiver of a module with xy = 0.

    Position p holds the top T_p = V_p / rad_p when p = c (mod 2) and rad_p
    otherwise.  Arrows run from tops to radicals.
    """

    def __init__(self, dims: dict[int, int], edges: dict[int, tuple[int, int, list]]):
        self.dims = dims
        self.edges = edges           # p -> (src, dst, matrix) for the edge {p, p+1}
        self._cache: dict[tuple[int, int], int] = {}

    def d(self, p):
        return self.dims.get(p, 0)

    def rank(self, s: int, t: int) -> int:
        """Generalized rank: rank of lim -> colim of the restriction to [s, t]."""
        if (s, t) not in self._cache:
            self._cache[s, t] = self._rank(s, t)
        return self._cache[s, t]

    def _rank(self, s: int, t: int) -> int:
        offset, D = {}, 0
        for p in range(s, t + 1):
            offset[p] = D
            D += self.d(p)
        if D == 0 or self.d(s) == 0:
            return 0
        cons, rel = {}, {}
        nc = nr = 0
        for p in range(s, t):
            if p not in self.edges:
                continue
            u, w, F = self.edges[p]
            for r in range(self.d(w)):
                row = {offset[u] + c: F[r][c] for c in range(self.d(u)) if F[r][c]}
                row[offset[w] + r] = -1
                cons[nc] = row
                nc += 1
            for c in range(self.d(u)):
                col = {offset[w] + r: F[r][c] for r in range(self.d(w)) if F[r][c]}
                col[offset[u] + c] = -1
                for r, x in col.items():
                    rel.setdefault(r, {})[nr] = x
                nr += 1
        # vertices with no edge inside [s, t] contribute no constraint
        lim = linalg.kernel(linalg.sparse(cons, (nc, D))) if nc else linalg.eye(D)
        if lim.shape[1] == 0:
            return 0
        L = linalg.entries(lim)
        at_s = {offset[s] + r: {j: x for j, x in enumerate(L[offset[s] + r]) if x} for r in range(self.d(s))}
        proj = linalg.sparse(at_s, (D, lim.shape[1]))
        if nr == 0:
            return linalg.rank(proj)
        R = linalg.sparse(rel, (D, nr))
        return linalg.rank(linalg.hstack(R, proj)) - linalg.rank(R)


def _lines(M: GradedRModule) -> tuple[_Line, _Line]:
    rad, top = {}, {}
    for i in M.dims:
        rad[i] = linalg.column_space(linalg.hstack(M.a(i + 1), M.b(i - 1), linalg.zeros(M.d(i), 1)))
        top[i] = linalg.complement(rad[i], M.d(i))
    lines = []
    for c in (0, 1):
        dims, edges = {}, {}
        for i in M.dims:
            dims[i] = top[i].shape[1] if (i - c) % 2 == 0 else rad[i].shape[1]
        lo, hi = M.support
        for p in range(lo - 1, hi + 1):
            if (p - c) % 2 == 0:
                u, w, F = p, p + 1, M.b(p)
            else:
                u, w, F = p + 1, p, M.a(p + 1)
            # edges into or out of a zero vertex still impose relations
            if dims.get(u) and dims.get(w):
                F = linalg.entries(linalg.coordinates(rad[w], _mul(F, top[u])))
            else:
                F = [[0] * dims.get(u, 0) for _ in range(dims.get(w, 0))]
            edges[p] = (u, w, F)
        lines.append(_Line({p: d for p, d in dims.items() if d}, edges))
    return lines[0], lines[1]


def _decompose_radical_square_zero(M: GradedRModule) -> Counter:
    out = Counter()
    if not M.dims:
        return out
    lo, hi = M.support
    for c, line in enumerate(_lines(M)):
        rk = line.rank
        for s in range(lo, hi + 1):
            for t in range(s, hi + 1):
                mult = rk(s, t) - rk(s - 1, t) - rk(s, t + 1) + rk(s - 1, t + 1)
                if mult < 0:
                    raise DecompositionError(f"negative interval multiplicity at [{s}, {t}]")
                if not mult:
                    continue
                if s == t and (s - c) % 2:
                    raise DecompositionError(f"radical vertex {s} splits off as a summand")
                sign = "+" if (s - c) % 2 == 0 else "-"
                out[Zigzag(sign, s, t)] += mult
    return out


def decompose(M: GradedRModule) -> Counter:
    """Multiset of indecomposable labels whose direct sum is isomorphic to M."""
    free_part, rest = split_free(M)
    for i in rest.dims:
        if not linalg.is_zero(rest.xy(i)):
            raise DecompositionError("xy survives after splitting free summands")
    out = free_part + _decompose_radical_square_zero(rest)
    if sum(k * lab.dim for lab, k in out.items()) != M.dim:
        raise DecompositionError("decomposition does not account for the full dimension")
    return out


# -- projective covers and Heller shifts -----------------------------------------

def projective_cover(M: GradedRModule) -> tuple[GradedRModule, Hom, list[int]]:
    """Minimal free module P with a surjection phi: P -> M, and the generator degrees."""
    gens: list[tuple[int, Matrix]] = []
    for i in M.dims:
        rad = linalg.hstack(M.a(i + 1), M.b(i - 1), linalg.zeros(M.d(i), 1))
        C = linalg.complement(linalg.column_space(rad), M.d(i))
        for j in range(C.shape[1]):
            gens.append((i, C.extract(list(range(M.d(i))), [j])))
    P = direct_sum(*(free(i) for i, _ in gens))
    # images of the free basis x | 1, xy | y of each generator, block by block
    cols: dict[int, list[Matrix]] = {}
    for i, v in gens:
        cols.setdefault(i - 1, []).append(_mul(M.a(i), v))
        cols.setdefault(i, []).extend([v, M.xy(i) * v])
        cols.setdefault(i + 1, []).append(_mul(M.b(i), v))
    phi = {i: linalg.hstack(*cols[i]) if M.d(i) else linalg.zeros(0, P.d(i)) for i in P.dims}
    return P, phi, [i for i, _ in gens]


def omega(M: GradedRModule) -> GradedRModule:
    """Kernel of the projective cover."""
    P, phi, _ = projective_cover(M)
    return kernel_module(P, phi)


def omega_inverse(M: GradedRModule) -> GradedRModule:
    """Cokernel of the injective envelope, computed as D(Omega(D M))."""
    return dual(omega(dual(M)))


def heller_module(M: GradedRModule, k: int) -> tuple[GradedRModule, Counter]:
    """Omega^k(M) with free summands removed; also returns the removed free part."""
    discarded, cur = split_free(M)
    step = omega if k >= 0 else omega_inverse
    for _ in range(abs(k)):
        free_part, cur = split_free(step(cur))
        discarded += free_part
    return cur, discarded


def heller(x, k: int):
    """Heller shift of a label (closed form) or of a module (computed).

    A label J(a, b) with a = b (mod 2) is Omega^m(M(n)) with (n, m) its
    semisimplification index, so it shifts to the label of (n, m + k).  Other
    labels, label multisets and modules go through :func:`heller_module`;
    modules and multisets return the multiset of non-free summands.
    """
    if isinstance(x, Counter):
        x = make_sum(lab for lab, c in x.items() for _ in range(c))
    if isinstance(x, GradedRModule):
        return decompose(heller_module(x, k)[0])
    if isinstance(x, FreeR):
        return None
    if isinstance(x, Zigzag) and (x.m - x.n) % 2 == 0:
        n, m = ss_index(x)
        return label_of_ss(n, m + k)
    result = decompose(heller_module(make(x), k)[0])
    if sum(result.values()) == 1:
        return next(iter(result))
    return result


def ss_index(lab: Label) -> tuple[int, int] | None:
    """(n, m) with lab = Omega^m(M(n)), or None for labels of categorical dimension 0."""
    if isinstance(lab, FreeR) or (lab.m - lab.n) % 2:
        return None
    n, half = (lab.n + lab.m) // 2, (lab.m - lab.n) // 2
    return (n, half) if lab.sign == "+" else (n, -half)


def label_of_ss(n: int, m: int) -> Zigzag:
    """J+(n-m, n+m) for m >= 0 and J-(n+m, n-m) for m < 0."""
    if m >= 0:
        return Zigzag("+", n - m, n + m)
    return Zigzag("-", n + m, n - m)


def label_dimension(lab: Label) -> int:
    """Categorical dimension: (-1)^n for J(n, m) with n = m (mod 2), else 0."""
    if isinstance(lab, FreeR) or (lab.m - lab.n) % 2:
        return 0
    return -1 if lab.n % 2 else 1


def transpose_label(lab: Label) -> Label:
    """Known transposes only: P(n) -> P(-n), M(n) -> M(-n), Delta(n) -> Nabla(1-n)."""
    if isinstance(lab, FreeR):
        return FreeR(-lab.n)
    if lab.n == lab.m:
        return simple_label(-lab.n)
    if lab == delta_label(lab.m):
        return nabla_label(1 - lab.m)
    if lab == nabla_label(lab.m):
        return delta_label(1 - lab.m)
    raise ValueError(f"transpose of {lab} is not available")
