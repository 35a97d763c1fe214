from fractions import Fraction

import pytest

from surreal.coeffs import DYADICS, INTEGERS, dyadics_plus, generated_by, scaled
from surreal.errors import ParseError, PreconditionError
from surreal.fixtures import FIXTURES
from surreal.specfile import format_spec, parse_descriptor, parse_spec, verdict_record
from surreal.structures import SECTION9_GROUP, is_initial

SECTION9_TEXT = """\
# the group {d + a/w}
kind: group
gamma: finite {0, -1}
coeff 0 => dyadics
coeff -1 => integers
"""


def test_parse_section9():
    assert parse_spec(SECTION9_TEXT) == SECTION9_GROUP


def test_semicolons_and_below():
    spec = parse_spec("kind: domain; gamma: monoid {1, w^-1 + 2}; below: w; default => integers")
    assert spec.gamma.variant == "monoid" and spec.gamma.below is not None
    assert spec.default == INTEGERS


@pytest.mark.parametrize("text,desc", [
    ("trivial", generated_by([])),
    ("integers", INTEGERS),
    ("dyadics", DYADICS),
    ("scaled(3)", scaled(3)),
    ("dyadics+{1/3}", dyadics_plus([Fraction(1, 3)])),
    ("gen{1/3, 2/5}", generated_by([Fraction(1, 3), Fraction(2, 5)])),
])
def test_descriptors(text, desc):
    got = parse_descriptor(text)
    if text == "trivial":
        assert got.variant == "trivial"
    else:
        assert got == desc


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_round_trip(name):
    spec = FIXTURES[name]
    assert parse_spec(format_spec(spec)) == spec


@pytest.mark.parametrize("text", [
    "kind: ring\ngamma: finite {0}",
    "kind: group\ngamma: finite 0",
    "kind: group\ngamma: finite {0}\ncoeff 0 integers",
    "kind: group\ngamma: finite {0}\ncoeff 0 => rationals",
    "kind: group\ngamma: finite {0}\nwhat",
    "kind: group\ngamma: finite {0, w^}\ndefault => integers",
])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_spec(text)


def test_semantic_errors():
    with pytest.raises(PreconditionError):
        parse_spec("kind: group")
    with pytest.raises(PreconditionError):
        parse_spec("kind: group\ngamma: finite {0}\nbelow: 1\ndefault => integers")
    with pytest.raises(PreconditionError):
        parse_spec("kind: group\ngamma: finite {0}\ncoeff 1 => integers\ndefault => integers")


def test_verdict_record():
    rec = verdict_record(is_initial(FIXTURES["thirds"]))
    assert rec["status"] == "fail"
    assert rec["condition"] == "coefficient-initial"
    assert rec["witness"] == {"exponent": "0", "member": "1/3", "missing": "1/2"}
    assert verdict_record(is_initial(SECTION9_GROUP))["status"] == "pass"
