import itertools
import random

import pytest
from hypothesis import given, strategies as st

from surreal.errors import CutViolation, FuelExhausted, ParseError, UnsupportedFragment
from surreal.ordinal import OMEGA, Ordinal
from surreal.signexp import (SignExpansion, common_prefix, format_signs, parse_signs, se_cmp,
                             se_predecessors, se_rank, se_simpler, se_simplest_between)

from oracles import brute_simplest, string_value, strings_up_to

S = SignExpansion.from_string
W = OMEGA

finite_strings = st.text(alphabet="+-", max_size=8)


def test_cmp_examples():
    assert se_cmp(S("+-"), S("+")) < 0
    assert se_cmp(S("+"), S("-")) > 0
    assert se_cmp(SignExpansion([("+", W)]), SignExpansion([("+", W), ("-", 1)])) > 0


def test_simpler_examples():
    assert se_simpler(S("+"), S("+-"))
    assert se_simpler(SignExpansion([("+", W)]), SignExpansion([("+", W + 1)]))
    assert not se_simpler(S("+-"), S("-"))
    assert not se_simpler(S("+"), S("+"))


def test_rank_examples():
    assert se_rank(S("")) == 0
    assert se_rank(S("+-+")) == 3
    # 1 + w = w: the reciprocal of omega is born on day omega
    assert se_rank(SignExpansion([("+", 1), ("-", W)])) == W
    assert se_rank(SignExpansion([("+", W), ("-", 1)])) == W + 1


def test_simplest_between_examples():
    assert se_simplest_between([], []) == S("")
    assert se_simplest_between([S("+")], [S("++")]) == S("++-")
    assert se_simplest_between([S("")], [S("+")]) == S("+-")
    n = 5
    assert se_simplest_between([S("+" * k) for k in range(n)], []) == S("+" * n)


def test_simplest_between_transfinite():
    w = SignExpansion([("+", W)])
    assert se_simplest_between([S("++++++++")], [w]) == S("+++++++++")
    assert se_simplest_between([w], []) == SignExpansion([("+", W + 1)])
    inf = SignExpansion([("+", 1), ("-", W)])
    assert se_simplest_between([S("")], [inf]) == SignExpansion([("+", 1), ("-", W + 1)])


def test_cut_violation_names_the_pair():
    with pytest.raises(CutViolation) as info:
        se_simplest_between([S("+")], [S("")])
    assert info.value.left == S("+") and info.value.right == S("")


def test_fuel():
    with pytest.raises(FuelExhausted):
        se_simplest_between([S("+-+-")] * 3, [S("++")], fuel=2)


def test_predecessors_examples():
    assert se_predecessors(S("+-+")) == ([S(""), S("+-")], [S("+")])
    assert se_predecessors(S("+")) == ([S("")], [])
    assert se_predecessors(S("")) == ([], [])
    with pytest.raises(UnsupportedFragment):
        se_predecessors(SignExpansion([("+", W)]))


def test_runs_are_canonical():
    a = SignExpansion([("+", 1), ("+", 2), ("-", 0), ("-", W)])
    assert a.runs == (("+", Ordinal.of(3)), ("-", W))
    assert SignExpansion([("+", 2), ("+", W)]).runs == (("+", W),)


def test_text_round_trip():
    for text in ["+-+", "(+,w)-", "+(-,w)", "(+,w)(-,w^2)", "(+,w^2*3 + 1)"]:
        assert format_signs(parse_signs(text)) == text
    assert parse_signs("0") == S("")
    with pytest.raises(ParseError):
        parse_signs("+x")


def test_prefix_and_positions():
    a = SignExpansion([("+", W), ("-", 2)])
    assert a.prefix(W) == SignExpansion([("+", W)])
    assert a.prefix(W + 1) == SignExpansion([("+", W), ("-", 1)])
    assert a.sign_at(Ordinal.of(5)) == "+"
    assert a.sign_at(W + 1) == "-"
    assert a.sign_at(W + 2) is None
    assert common_prefix(a, SignExpansion([("+", W), ("+", 1)])) == SignExpansion([("+", W)])


def test_string_oracle_orders_like_values():
    strs = list(strings_up_to(5))
    for a, b in itertools.product(strs, repeat=2):
        k = se_cmp(S(a), S(b))
        va, vb = string_value(a), string_value(b)
        assert k == (va > vb) - (va < vb)


def test_reconstruction_from_predecessors():
    for s in strings_up_to(6):
        left, right = se_predecessors(S(s))
        assert se_simplest_between(left, right) == S(s)


def test_prefix_characterization_exhaustive():
    strs = list(strings_up_to(5))
    for a in strs:
        left, right = se_predecessors(S(a))
        for b in strs:
            inside = all(se_cmp(l, S(b)) < 0 for l in left) and all(se_cmp(S(b), r) < 0 for r in right)
            assert se_simpler(S(a), S(b)) == (inside and a != b)


def test_tree_law_exhaustive():
    strs = list(strings_up_to(5))
    for a, b in itertools.product(strs, repeat=2):
        if a == b:
            continue
        comparable = se_simpler(S(a), S(b)) or se_simpler(S(b), S(a))
        c = common_prefix(S(a), S(b))
        lo, hi = (S(a), S(b)) if se_cmp(S(a), S(b)) < 0 else (S(b), S(a))
        between = c != S(a) and c != S(b) and se_cmp(lo, c) < 0 < se_cmp(hi, c)
        assert comparable != between


def test_simplest_between_matches_enumeration():
    rng = random.Random(7)
    strs = list(strings_up_to(5))
    for _ in range(500):
        picks = rng.sample(strs, rng.randint(0, 4))
        vals = sorted(picks, key=string_value)
        cut = rng.randint(0, len(vals))
        left, right = vals[:cut], vals[cut:]
        if left and right and string_value(left[-1]) >= string_value(right[0]):
            continue
        expected = brute_simplest([string_value(x) for x in left], [string_value(x) for x in right], 7)
        got = se_simplest_between([S(x) for x in left], [S(x) for x in right])
        assert expected == [got.to_string()]


@given(finite_strings, finite_strings)
def test_cmp_is_antisymmetric(a, b):
    assert se_cmp(S(a), S(b)) == -se_cmp(S(b), S(a))
    assert (se_cmp(S(a), S(b)) == 0) == (a == b)


@given(finite_strings)
def test_negation_reverses_order(a):
    assert se_cmp(-S(a), S("")) == -se_cmp(S(a), S(""))
