import itertools

import pytest
from hypothesis import given, strategies as st

from surreal.errors import OrdinalRangeError, ParseError
from surreal.ordinal import (OMEGA, ONE, ZERO, Ordinal, format_ordinal, is_add_indecomposable,
                             is_mul_indecomposable, omega_to, ord_add, ord_cmp, ord_divmod_power,
                             ord_mul, ord_sub, parse_ordinal)

from oracles import (blocks_add, blocks_from_coeffs, blocks_key, blocks_mul, blocks_to_ordinal,
                     small_grid)

W = OMEGA


def cnf(c2, c1, c0):
    return ord_add(ord_add(omega_to(2, c2) if c2 else ZERO, omega_to(1, c1) if c1 else ZERO),
                   Ordinal.of(c0))


ordinals = st.recursive(
    st.integers(0, 5).map(Ordinal.of),
    lambda inner: st.builds(lambda e, c, rest: ord_add(omega_to(e, c), rest),
                            inner, st.integers(1, 3), st.integers(0, 3).map(Ordinal.of)),
    max_leaves=4,
)


def test_cmp_examples():
    assert ord_cmp(W, W) == 0
    assert ord_cmp(W + 1, W * 2) < 0
    assert ord_cmp(omega_to(W), omega_to(2, 5) + 3) > 0


def test_add_examples():
    assert ord_add(ONE, W) == W
    assert ord_add(W, ONE) == parse_ordinal("w + 1")
    assert ord_add(W + 1, W + 1) == parse_ordinal("w*2 + 1")


def test_mul_examples():
    assert ord_mul(W * 2, W) == omega_to(2)
    assert ord_mul(W, ZERO) == ZERO
    assert ord_mul(W, W) == omega_to(2)
    assert ord_mul(Ordinal.of(2), W) == W
    assert ord_mul(W, Ordinal.of(2)) == W * 2


def test_sub_and_divmod():
    assert ord_sub(W + 3, W) == 3
    assert ord_sub(W, ONE) == W
    assert ord_sub(omega_to(2) + W, W * 2) == omega_to(2) + W
    with pytest.raises(OrdinalRangeError):
        ord_sub(ONE, W)
    q, r = ord_divmod_power(omega_to(3) * 2 + omega_to(1) + 4, 1)
    assert q == omega_to(2) * 2 + 1 and r == 4


def test_indecomposable_examples():
    assert is_add_indecomposable(ONE)
    assert not is_add_indecomposable(W + 1)
    assert is_add_indecomposable(omega_to(2))
    assert is_mul_indecomposable(W)
    assert not is_mul_indecomposable(omega_to(2))
    assert is_mul_indecomposable(omega_to(W))
    with pytest.raises(OrdinalRangeError):
        is_add_indecomposable(ZERO)
    with pytest.raises(OrdinalRangeError):
        is_mul_indecomposable(ONE)


def test_two_is_indecomposable_only_by_the_quantifier_clause():
    assert is_mul_indecomposable(Ordinal.of(2))
    assert not is_mul_indecomposable(Ordinal.of(2), form=True)
    assert is_mul_indecomposable(W, form=True)


def test_format_parse_round_trip():
    for text in ["0", "5", "w", "w + 1", "w^2*3 + w + 5", "w^(w)", "w^(w + 1)*2 + 7"]:
        assert format_ordinal(parse_ordinal(text)) == text
    assert parse_ordinal("ω^2") == omega_to(2)
    assert parse_ordinal("w*1") == W
    with pytest.raises(ParseError):
        parse_ordinal("w +")


def test_constructor_rejects_bad_terms():
    with pytest.raises(OrdinalRangeError):
        Ordinal([(ZERO, 1), (ONE, 1)])
    with pytest.raises(OrdinalRangeError):
        Ordinal([(ONE, 0)])
    with pytest.raises(OrdinalRangeError):
        Ordinal.of(-1)


def test_cnf_matches_order_type_oracle_below_w3():
    grid = small_grid(3)
    for a, b in itertools.product(grid, repeat=2):
        oa, ob = blocks_from_coeffs(*a), blocks_from_coeffs(*b)
        x, y = cnf(*a), cnf(*b)
        assert ord_add(x, y) == blocks_to_ordinal(blocks_add(oa, ob))
        assert ord_cmp(x, y) == (blocks_key(oa) > blocks_key(ob)) - (blocks_key(oa) < blocks_key(ob))
        assert ord_mul(x, y) == blocks_to_ordinal(blocks_mul(oa, ob))


@given(ordinals, ordinals, ordinals)
def test_associativity(a, b, c):
    assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))
    assert ord_mul(ord_mul(a, b), c) == ord_mul(a, ord_mul(b, c))


@given(ordinals, ordinals, ordinals)
def test_left_distributivity(a, b, c):
    assert ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c))


@given(ordinals, ordinals, ordinals)
def test_right_monotonicity(a, b, c):
    if ord_cmp(b, c) < 0:
        assert ord_cmp(ord_add(a, b), ord_add(a, c)) < 0
        if a:
            assert ord_cmp(ord_mul(a, b), ord_mul(a, c)) < 0


@given(ordinals, ordinals)
def test_left_subtraction_inverts_addition(a, b):
    assert ord_sub(ord_add(a, b), a) == b


@given(ordinals)
def test_text_round_trip(a):
    assert parse_ordinal(format_ordinal(a)) == a
