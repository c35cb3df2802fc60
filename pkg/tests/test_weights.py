from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from circlerep.weights import (
    CyclicClass,
    Generic,
    SpecialM,
    Trivial,
    all_classes,
    all_weights,
    aut_order,
    canonical_rotation,
    contractions,
    cyclic_contraction,
    cyclic_shift,
    epsilon,
    generic_zetas,
    is_special,
    parse_weight,
    pi,
    rotations,
    simple_label,
    special_simple,
    transpose_weight,
)

weights = st.text(alphabet="bw", max_size=9)
nonempty = st.text(alphabet="bw", min_size=1, max_size=9)


def test_parse_weight_glyphs():
    assert parse_weight("●○○") == "bww"
    assert parse_weight("∅") == ""
    assert parse_weight("-") == ""
    with pytest.raises(ValueError):
        parse_weight("bx")


@pytest.mark.parametrize("lam,i,want", [("bww", 1, "wbw"), ("bww", 3, "bww"), ("", 5, "")])
def test_cyclic_shift_examples(lam, i, want):
    assert cyclic_shift(lam, i) == want


@pytest.mark.parametrize("lam,i,want", [("bww", 1, "ww"), ("bww", 2, "wb"), ("b", 1, "")])
def test_cyclic_contraction_examples(lam, i, want):
    assert cyclic_contraction(lam, i) == want


def test_contraction_of_empty_rejected():
    with pytest.raises(ValueError):
        cyclic_contraction("", 1)


@pytest.mark.parametrize("lam,want", [("bwbw", (2, 2)), ("bb", (2, 1)), ("bww", (1, 3))])
def test_aut_order_examples(lam, want):
    assert aut_order(lam) == want


@pytest.mark.parametrize("lam,want", [("bww", "bbw"), ("bb", "ww"), ("", "")])
def test_transpose_examples(lam, want):
    assert transpose_weight(lam) == want


def test_pi_epsilon_examples():
    assert (pi(2), epsilon(2)) == ("bb", -1)
    assert (pi(-1), epsilon(-1)) == ("w", 1)
    assert pi(0) == ""


def test_is_special_examples():
    bb = CyclicClass.of("bb")
    assert is_special(bb, 1)
    assert not is_special(bb, 0)
    assert not is_special(CyclicClass.of("bw"), 0)


def test_special_pairs_are_pi_epsilon():
    # exponent j of epsilon(n) as a g-th root of unity, with g = |n|
    for n in range(-7, 8):
        if n == 0:
            continue
        cls = CyclicClass.of(pi(n))
        j = 0 if epsilon(n) == 1 else len(cls) // 2
        assert [z for z in range(cls.g) if is_special(cls, z)] == [j]


@settings(max_examples=200)
@given(weights, st.integers(-20, 20), st.integers(-20, 20))
def test_shift_is_a_group_action(lam, i, j):
    assert cyclic_shift(cyclic_shift(lam, i), j) == cyclic_shift(lam, i + j)


@settings(max_examples=200)
@given(nonempty, st.integers(1, 30))
def test_contraction_is_first_contraction_after_inverse_shift(lam, i):
    # right rotation sigma: gamma_i = gamma_1 o sigma^-(i-1)
    assert cyclic_contraction(lam, i) == cyclic_contraction(cyclic_shift(lam, -(i - 1)), 1)


@settings(max_examples=200)
@given(nonempty)
def test_orders_and_distinctness(lam):
    g, N = aut_order(lam)
    assert g * N == len(lam)
    assert len(set(rotations(lam))) == N
    assert len(set(contractions(lam))) == N


def test_equal_contractions_force_equal_shifts():
    for n in range(1, 9):
        for lam in all_weights(n):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if cyclic_contraction(lam, i) == cyclic_contraction(lam, j):
                        assert cyclic_shift(lam, i) == cyclic_shift(lam, j)


@settings(max_examples=200)
@given(weights)
def test_transpose_involution_and_classes(lam):
    assert transpose_weight(transpose_weight(lam)) == lam
    if lam:
        assert CyclicClass.of(lam).transpose() == CyclicClass.of(transpose_weight(lam))


@settings(max_examples=200)
@given(nonempty, st.integers(0, 20))
def test_class_is_rotation_invariant(lam, i):
    assert CyclicClass.of(cyclic_shift(lam, i)) == CyclicClass.of(lam)
    assert canonical_rotation(lam) == min(cyclic_shift(lam, k) for k in range(len(lam)))


def test_class_rejects_non_canonical_rep():
    with pytest.raises(ValueError):
        CyclicClass("wb")
    with pytest.raises(ValueError):
        CyclicClass("")


def test_necklace_counts():
    # binary necklaces of length 1..8
    assert [len(all_classes(n)) for n in range(1, 9)] == [2, 3, 4, 6, 8, 14, 20, 36]


def test_labels():
    assert special_simple(0) == Trivial()
    with pytest.raises(ValueError):
        SpecialM(0)
    with pytest.raises(ValueError):
        Generic(CyclicClass.of("bb"), 1)
    assert simple_label(CyclicClass.of("bb"), 1) == SpecialM(2)
    assert simple_label(CyclicClass.of("ww"), 1) == SpecialM(-2)
    assert generic_zetas(CyclicClass.of("bbb")) == [1, 2]
    with pytest.raises(ValueError):
        Generic(CyclicClass.of("bw"), 1)


def test_every_pair_is_special_or_generic_once():
    for n, k in product(range(1, 6), range(2)):
        for cls in all_classes(n):
            specials = [z for z in range(cls.g) if is_special(cls, z)]
            assert len(specials) == (1 if len(set(cls.rep)) == 1 else 0)
