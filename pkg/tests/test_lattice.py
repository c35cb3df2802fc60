from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from circlerep.lattice import (
    STEPS3,
    TorusLoop,
    count_loops_difference,
    count_loops_formula,
    count_loops_sum,
    count_paths_formula,
    delannoy,
    diagonal_loop,
    enumerate_loops,
    enumerate_loops3,
    enumerate_paths,
    genfun_coefficient,
    loop_action,
    loop_orbits,
    orbit_sizes,
    project,
    self_touchings,
)


def based_loop_oracle(n: int, m: int) -> int:
    """C(n, m) from based loops: n*m start vertices, each loop counted once per step."""
    total = Fraction(0)
    for d in range(min(n, m) + 1):
        k = n + m - d
        total += Fraction(factorial(k), factorial(d) * factorial(n - d) * factorial(m - d) * k)
    assert (n * m * total).denominator == 1
    return int(n * m * total)


def test_paths_examples():
    assert len(enumerate_paths(2, 2)) == 13
    assert enumerate_paths(4, 0) == ["RRRR"]
    assert len(enumerate_paths(3, 3)) == 63
    assert count_paths_formula(2, 2) == 13
    assert count_paths_formula(0, 5) == 1
    assert count_paths_formula(4, 4) == 321
    assert len(enumerate_paths(4, 4)) == 321


def test_recurrence_and_sum_agree():
    for n in range(13):
        for m in range(13):
            assert delannoy(n, m) == count_paths_formula(n, m)
            assert delannoy(n, m) == sum(comb(n, k) * comb(m, k) * 2**k for k in range(min(n, m) + 1))


@pytest.mark.parametrize("n,m,want", [(2, 2, 16), (1, 1, 2), (3, 2, 36), (2, 3, 36)])
def test_enumerate_loops_examples(n, m, want):
    assert len(enumerate_loops(n, m)) == want


def test_one_by_one_loops():
    assert sorted(p.steps for p in enumerate_loops(1, 1)) == ["D", "RU"]


@pytest.mark.parametrize("n,m,want", [(3, 3, 114), (4, 4, 768), (9, 9, 7777314)])
def test_count_formula_examples(n, m, want):
    assert count_loops_formula(n, m) == want


@pytest.mark.parametrize("n,m,want", [(1, 1, 2), (2, 3, 36), (5, 5, 5010)])
def test_genfun_examples(n, m, want):
    assert genfun_coefficient(n, m) == want


def test_counts_agree_with_oracle():
    for n in range(1, 7):
        for m in range(1, 7):
            c = len(enumerate_loops(n, m))
            assert c == based_loop_oracle(n, m) == count_loops_formula(n, m) == genfun_coefficient(n, m)


def test_counting_identities():
    for n in range(1, 13):
        for m in range(1, 13):
            assert count_loops_formula(n, m) == count_loops_difference(n, m) == count_loops_sum(n, m)
            assert count_loops_formula(n, m) == based_loop_oracle(n, m)


def test_two_by_two_orbits():
    assert len(loop_orbits(2, 2)) == 5
    assert orbit_sizes(2, 2) == Counter({4: 3, 2: 2})


def test_x_orbits_are_free_with_unique_representative():
    for n in range(1, 5):
        for m in range(1, 5):
            for orbit in loop_orbits(n, m, "x"):
                assert len(orbit) == n
                reps = []
                for p in orbit:
                    verts = p.vertices()
                    reps += [p for v, s in zip(verts, p.steps) if v == (0, 0) and s in "UD"]
                assert len(reps) == 1


def test_action_identity_and_canonical_forms():
    for p in enumerate_loops(3, 2):
        assert loop_action(p, 0, 0) == p
        assert p.is_canonical()
        assert TorusLoop.from_json(p.to_json()) == p


@settings(max_examples=100)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_canonicalization_idempotent(n, m, data):
    word = data.draw(st.sampled_from(enumerate_paths(n, m)))
    start = (data.draw(st.integers(-5, 5)), data.draw(st.integers(-5, 5)))
    k = data.draw(st.integers(0, len(word)))
    p = TorusLoop.make(n, m, start, word)
    # rotating the word while advancing the start gives the same unbased loop
    x, y = start
    for s in word[:k]:
        x += s in "RD"
        y += s in "UD"
    q = TorusLoop.make(n, m, (x, y), word[k:] + word[:k])
    assert p == q
    assert TorusLoop.make(p.n, p.m, p.start, p.steps) == p


def test_bad_loops_rejected():
    with pytest.raises(ValueError):
        TorusLoop.make(2, 2, (0, 0), "RU")
    with pytest.raises(ValueError):
        TorusLoop.make(1, 1, (0, 0), "X")


def test_three_dimensional_loops():
    one = enumerate_loops3(1, 1, 1)
    assert len(one) == 6
    no_diag = [q for q in one if all(len(s) == 1 for s in q.steps)]
    assert len(no_diag) == 2
    sq = [p for p in enumerate_loops(1, 1) if p.steps != "D"][0]
    for q in no_diag:
        assert {project(q, ax) for ax in ("12", "23", "13")} == {sq}
    single = [q for q in one if q.steps == ("XYZ",)][0]
    assert {project(single, ax) for ax in ("12", "23", "13")} == {diagonal_loop(1)}


def test_three_dimensional_count_oracle():
    # based 3d loops: each of n*m*l starts, each loop counted once per step
    def oracle(n, m, l):
        counts = Counter()

        def rec(a, b, c, k):
            if (a, b, c) == (n, m, l):
                counts[k] += 1
                return
            for dx, dy, dz in STEPS3.values():
                if a + dx <= n and b + dy <= m and c + dz <= l:
                    rec(a + dx, b + dy, c + dz, k + 1)
        rec(0, 0, 0, 0)
        return n * m * l * sum(Fraction(v, k) for k, v in counts.items())

    for shape in [(1, 1, 1), (1, 2, 1), (2, 2, 1), (2, 2, 2)]:
        assert len(enumerate_loops3(*shape)) == oracle(*shape)
    assert len(enumerate_loops3(2, 2, 2)) == 704


def test_projections_land_in_the_right_sets():
    for shape in [(1, 2, 2), (2, 1, 2), (2, 2, 2)]:
        n, m, l = shape
        L12, L23, L13 = set(enumerate_loops(n, m)), set(enumerate_loops(m, l)), set(enumerate_loops(n, l))
        for q in enumerate_loops3(*shape):
            assert project(q, "12") in L12
            assert project(q, "23") in L23
            assert project(q, "13") in L13


def test_self_touching_at_most_once():
    for n, m in product(range(1, 5), repeat=2):
        assert max(self_touchings(p) for p in enumerate_loops(n, m)) <= 1
