from __future__ import annotations

import random
from collections import defaultdict
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from circlerep.lattice import STEPS3, diagonal_loop, enumerate_loops
from circlerep.loopcat import (
    Morphism,
    compose,
    compose_basis,
    end_algebra,
    identity,
    random_basis_morphism,
    shift_outer,
)


def one_point_oracle():
    """Structure constants of End(1) by brute force over cyclic step words with total (1,1,1).

    On the 1x1 torus a loop is determined by its cyclic word; a 2d loop is
    'diag' if it is the single step (1,1), else 'sq'.
    """
    words = []

    def rec(total, word):
        if total == (1, 1, 1):
            words.append(tuple(word))
            return
        for name, v in STEPS3.items():
            t = tuple(a + b for a, b in zip(total, v))
            if max(t) <= 1:
                rec(t, word + [name])
    rec((0, 0, 0), [])
    necklaces = {min(w[k:] + w[:k] for k in range(len(w))) for w in words}
    assert len(necklaces) == 6

    def proj(word, i, j):
        steps = [(STEPS3[s][i], STEPS3[s][j]) for s in word]
        steps = [s for s in steps if s != (0, 0)]
        return "diag" if steps == [(1, 1)] else "sq"

    table = defaultdict(lambda: defaultdict(int))
    for q in necklaces:
        p1, p2, p3 = proj(q, 0, 1), proj(q, 1, 2), proj(q, 0, 2)
        table[p1, p2][p3] += (-1) ** (len(q) + (1 if p3 == "diag" else 2))
    return table


def test_one_point_composition_matches_oracle():
    oracle = one_point_oracle()
    loops = {("diag" if p.steps == "D" else "sq"): p for p in enumerate_loops(1, 1)}
    for a, b in product(loops, repeat=2):
        got = {k: v for k, v in compose_basis(loops[a], loops[b]).items()}
        want = {loops[k]: v for k, v in oracle[a, b].items() if v}
        assert got == want


def test_one_point_examples():
    d = Morphism.basis(diagonal_loop(1))
    s = Morphism.basis([p for p in enumerate_loops(1, 1) if p.steps != "D"][0])
    assert d @ d == d
    assert d @ s == s == s @ d
    assert s @ s == -d - 2 * s
    z = s + d
    assert (z @ z).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_identity_is_diagonal(n):
    e = identity(n)
    assert e == Morphism.basis(diagonal_loop(n))
    assert e @ e == e


def test_identity_is_two_sided_unit():
    for n in (1, 2, 3):
        e = identity(n)
        for m in (1, 2, 3):
            if n == 3 and m == 3:
                continue
            for p in enumerate_loops(n, m):
                assert e @ Morphism.basis(p) == Morphism.basis(p)
            for p in enumerate_loops(m, n):
                assert Morphism.basis(p) @ e == Morphism.basis(p)


def test_associativity_exhaustive_two():
    for n, m, l, k in product((1, 2), repeat=4):
        for p1 in enumerate_loops(n, m):
            for p2 in enumerate_loops(m, l):
                f, g = Morphism.basis(p1), Morphism.basis(p2)
                fg = f @ g
                for p3 in enumerate_loops(l, k):
                    h = Morphism.basis(p3)
                    assert fg @ h == f @ (g @ h)


def test_associativity_random_three():
    rng = random.Random(7)
    for _ in range(40):
        f, g, h = (random_basis_morphism(3, 3, rng) for _ in range(3))
        assert (f @ g) @ h == f @ (g @ h)


def test_end_algebra_dimensions():
    for n, want in [(1, 2), (2, 16)]:
        basis, consts = end_algebra(n)
        assert len(basis) == want
    basis, consts = end_algebra(1)
    assert all(c in (-2, -1, 1) for c in consts.values())


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1), st.integers(0, 1), st.data())
def test_compose_equivariant(a, c, data):
    p1 = data.draw(st.sampled_from(enumerate_loops(2, 1)))
    p2 = data.draw(st.sampled_from(enumerate_loops(1, 2)))
    f, g = Morphism.basis(p1), Morphism.basis(p2)
    assert compose(shift_outer(f, a, 0), shift_outer(g, 0, c)) == shift_outer(compose(f, g), a, c)


def test_morphism_arithmetic_and_json():
    loops = enumerate_loops(2, 1)
    f = Morphism(2, 1, {loops[0]: "1/2", loops[1]: -3})
    g = Morphism(2, 1, {loops[0]: "1/2"})
    assert (f - g).coeffs == {loops[1]: -3}
    assert Morphism.from_json(f.to_json()) == f
    assert f.to_json()["terms"][0]["coeff"] == "1/2"
    assert (f * 0).is_zero()
    with pytest.raises(ValueError):
        f + Morphism(1, 2)
    with pytest.raises(ValueError):
        Morphism(1, 1, {loops[0]: 1})
    with pytest.raises(ValueError):
        compose(f, f)
