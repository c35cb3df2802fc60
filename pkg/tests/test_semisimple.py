from __future__ import annotations

from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from circlerep import specialblock as sb
from circlerep.semisimple import (
    BigradedObject,
    dimension_compatible,
    ss_braiding_sign,
    ss_dimension,
    ss_image,
    ss_of_decomp,
    ss_of_simple,
    ss_preimage,
    ss_ring_product,
    ss_tensor,
    tensor_with_M1,
)
from circlerep.weights import CyclicClass, Generic, SpecialM, Trivial

bideg = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


def test_ss_image_examples():
    assert ss_image(sb.Zigzag("+", 0, 2)) == (1, 1)
    assert ss_image(sb.Zigzag("+", 0, 1)) is None
    assert ss_image(sb.simple_label(4)) == (4, 0)
    assert ss_image(sb.FreeR(0)) is None


def test_dimension_parity_all_labels():
    for s in "+-":
        for a in range(-5, 6):
            for b in range(a, 6):
                lab = sb.Zigzag(s, a, b)
                assert dimension_compatible(lab)
                u = ss_image(lab)
                if u is not None:
                    assert ss_preimage(*u) == lab


def test_tensor_examples():
    assert ss_tensor(BigradedObject({(1, 0): 1}), BigradedObject({(0, 1): 1})) == BigradedObject({(1, 1): 1})
    assert ss_braiding_sign((1, 0), (1, 0)) == -1
    A = BigradedObject({(1, 0): 2, (0, 0): 1})
    B = BigradedObject({(2, 1): 1, (0, 1): 3})
    assert sum(ss_tensor(A, B).values()) == 3 * 4
    assert ss_tensor(A, B).dimension() == A.dimension() * B.dimension()


@given(bideg, bideg)
def test_braiding_and_dimension(u, v):
    assert ss_braiding_sign(u, v) == (-1) ** ((u[0] + u[1]) * (v[0] + v[1]))
    assert ss_braiding_sign(u, v) == ss_braiding_sign(v, u)
    assert ss_dimension(ss_ring_product(u, v)) == ss_dimension(u) * ss_dimension(v)


def test_ring_product_examples():
    assert ss_ring_product((1, 0), (-1, 0)) == (0, 0)
    assert ss_ring_product((0, 1), (0, -1)) == (0, 0)
    assert ss_ring_product((2, 3), (-1, 1)) == (1, 4)


def test_tensor_with_M1():
    assert tensor_with_M1(1) == Counter({SpecialM(2): 1, Generic(CyclicClass.of("bb"), 0): 1})
    assert tensor_with_M1(-1) == Counter({Trivial(): 1, Generic(CyclicClass.of("bw"), 0): 1})
    assert tensor_with_M1(2) == Counter({SpecialM(3): 1, Generic(CyclicClass.of("bbb"), 1): 1,
                                         Generic(CyclicClass.of("bbb"), 2): 1})
    for bad in (0, -2):
        with pytest.raises(ValueError):
            tensor_with_M1(bad)


def test_tensor_lemmas_after_semisimplification():
    for n in list(range(1, 8)) + [-1]:
        image = ss_of_decomp(tensor_with_M1(n))
        assert image == BigradedObject({ss_ring_product((1, 0), (n, 0)): 1})
        # H-lengths are multiplicative too: generic summands carry the excess
        assert sum(tensor_with_M1(n).values()) >= 1


def test_ss_of_simples():
    assert ss_of_simple(Generic(CyclicClass.of("bw"), 0)) == BigradedObject()
    assert ss_of_simple(Trivial()) == BigradedObject({(0, 0): 1})
    assert ss_of_simple(SpecialM(-3)) == BigradedObject({(-3, 0): 1})


def test_heller_tensor_rule_on_labels():
    # Omega^r(M(m)) x Omega^s(M(n)) = Omega^(r+s)(M(m+n)): images add
    for (m, r), (n, s) in product(product(range(-2, 3), repeat=2), repeat=2):
        a = ss_image(sb.heller(sb.simple_label(m), r))
        b = ss_image(sb.heller(sb.simple_label(n), s))
        assert ss_ring_product(a, b) == ss_image(sb.heller(sb.simple_label(m + n), r + s))


def test_bigraded_json():
    assert BigradedObject({(1, -1): 2, (0, 0): 1}).to_json() == [
        {"n": 0, "m": 0, "mult": 1}, {"n": 1, "m": -1, "mult": 2}]
