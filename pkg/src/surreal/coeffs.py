"""Descriptors for the coefficient sets R_y of a cross-sectional structure.

A descriptor names a subset of the rationals.  How ``GeneratedBy`` and
``DyadicsPlus`` are read depends on the kind of structure: in a group the
generators span an additive subgroup, in a domain they generate a subring
(with 1).  Everything else is the same set in both readings.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .dyadic import is_dyadic, real_prefixes

__all__ = [
    "CoeffGroupDesc",
    "TRIVIAL",
    "INTEGERS",
    "DYADICS",
    "scaled",
    "dyadics_plus",
    "generated_by",
    "canonical",
    "coeff_contains",
    "coeff_samples",
    "classify_real_subgroup",
    "classify_real_subdomain",
    "Classification",
    "format_coeff",
]

_VARIANTS = ("trivial", "scaled", "dyadics", "dyadics_plus", "generated")


@dataclass(frozen=True)
class CoeffGroupDesc:
    variant: str
    m: int = 0
    gens: tuple = field(default=())

    def __post_init__(self):
        if self.variant not in _VARIANTS:
            raise ValueError("unknown descriptor variant %r" % (self.variant,))
        if self.m < 0:
            raise ValueError("scale exponent must be a natural number")
        gens = tuple(sorted(set(Fraction(g) for g in self.gens)))
        if any(g == 0 for g in gens):
            raise ValueError("generators must be nonzero")
        object.__setattr__(self, "gens", gens)

    def __str__(self):
        return format_coeff(self)


TRIVIAL = CoeffGroupDesc("trivial")
INTEGERS = CoeffGroupDesc("scaled", 0)
DYADICS = CoeffGroupDesc("dyadics")


def scaled(m):
    return CoeffGroupDesc("scaled", m)


def dyadics_plus(extras):
    return CoeffGroupDesc("dyadics_plus", gens=tuple(extras))


def generated_by(gens):
    return CoeffGroupDesc("generated", gens=tuple(gens))


def _odd_part(n):
    while n % 2 == 0:
        n //= 2
    return n


def _primes(n):
    out = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def _rational_gcd(values):
    den = lcm(*(v.denominator for v in values))
    num = 0
    for v in values:
        num = gcd(num, abs(v.numerator) * (den // v.denominator))
    return Fraction(num, den)


def _ring_primes(gens):
    primes = set()
    for g in gens:
        primes |= _primes(g.denominator)
    return primes


def canonical(desc, kind="group"):
    """Normalize ``desc`` under the group or domain reading."""
    if desc.variant == "generated":
        if kind == "domain":
            primes = _ring_primes(desc.gens)
            if not primes:
                return INTEGERS
            if primes == {2}:
                return DYADICS
            odd = tuple(Fraction(1, p) for p in sorted(primes - {2}))
            if 2 in primes:
                return dyadics_plus(odd)
            return generated_by(odd)
        if not desc.gens:
            return TRIVIAL
        g = _rational_gcd(desc.gens)
        if g.numerator == 1 and is_dyadic(g):
            return scaled(g.denominator.bit_length() - 1)
        return generated_by((g,))
    if desc.variant == "dyadics_plus":
        extras = tuple(e for e in desc.gens if not is_dyadic(e))
        if not extras:
            return DYADICS
        if kind == "domain":
            odd = sorted(_ring_primes(extras) - {2})
            return dyadics_plus(Fraction(1, p) for p in odd)
        return dyadics_plus(extras)
    return desc


def _class_mod_dyadics(r, q):
    # r * q is dyadic; its image in D/qD, which is Z/q since 2 is a unit mod q
    v = r * q
    k = v.denominator.bit_length() - 1
    return (v.numerator * pow(2, -k, q)) % q if q > 1 else 0


def coeff_contains(desc, r, kind="group"):
    """Exact membership of the rational r."""
    r = Fraction(r)
    desc = canonical(desc, kind)
    v = desc.variant
    if r == 0:
        return True
    if v == "trivial":
        return False
    if v == "scaled":
        return (r * 2 ** desc.m).denominator == 1
    if v == "dyadics":
        return is_dyadic(r)
    if v == "dyadics_plus":
        if kind == "domain":
            allowed = _ring_primes(desc.gens) | {2}
            return _primes(r.denominator) <= allowed
        q = lcm(_odd_part(r.denominator), *(_odd_part(e.denominator) for e in desc.gens))
        g = q
        for e in desc.gens:
            g = gcd(g, _class_mod_dyadics(e, q))
        return _class_mod_dyadics(r, q) % g == 0
    # generated, already canonical
    if kind == "domain":
        return _primes(r.denominator) <= _ring_primes(desc.gens)
    return (r / desc.gens[0]).denominator == 1


def coeff_samples(desc, kind="group"):
    """A few characteristic nonzero members (used by sampled checks)."""
    desc = canonical(desc, kind)
    v = desc.variant
    if v == "trivial":
        return []
    if v == "scaled":
        u = Fraction(1, 2 ** desc.m)
        return [u, -u, Fraction(1), 3 * u]
    base = [Fraction(1), Fraction(-1, 2), Fraction(3, 4), Fraction(5, 8)]
    if v == "dyadics":
        return base
    if v == "dyadics_plus":
        return base + list(desc.gens)
    if kind == "domain":
        return [Fraction(1)] + list(desc.gens)
    return [desc.gens[0], -desc.gens[0], 2 * desc.gens[0]]


@dataclass(frozen=True)
class Classification:
    """Outcome of a coefficient classifier.

    ``arm`` is one of Trivial, Scaled, Integers, ContainsDyadics,
    NotInitial.  For NotInitial, ``witness`` is a member and ``missing`` a
    sign-expansion prefix of it that is absent (None when the set has no
    nonzero member to offer).
    """

    arm: str
    m: int = 0
    witness: Fraction = None
    missing: Fraction = None
    reason: str = ""

    def __str__(self):
        if self.arm == "Scaled":
            return "Scaled(%d)" % self.m
        if self.arm == "NotInitial":
            return "NotInitial(witness %s, missing %s)" % (self.witness, self.missing)
        return self.arm


def _first_missing_prefix(r, desc, kind, limit=256):
    for _, value in real_prefixes(r, limit):
        if not coeff_contains(desc, value, kind):
            return value
    return None


def classify_real_subgroup(desc):
    """Which arm of the trichotomy {0} / z/2^m / contains D the group is in."""
    desc = canonical(desc, "group")
    v = desc.variant
    if v == "trivial":
        return Classification("Trivial")
    if v == "scaled":
        return Classification("Scaled", m=desc.m)
    if v in ("dyadics", "dyadics_plus"):
        return Classification("ContainsDyadics")
    g = desc.gens[0]
    w = abs(g)
    return Classification("NotInitial", witness=w, missing=_first_missing_prefix(w, desc, "group"),
                          reason="a sign-expansion prefix of a member is absent")


def classify_real_subdomain(desc):
    """Integers / contains D / not an initial subdomain."""
    desc = canonical(desc, "domain")
    v = desc.variant
    if v == "trivial":
        return Classification("NotInitial", missing=Fraction(1), reason="a domain contains 1")
    if v == "scaled":
        if desc.m == 0:
            return Classification("Integers")
        u = Fraction(1, 2 ** desc.m)
        return Classification("NotInitial", witness=u, missing=u * u,
                              reason="not closed under products")
    if v in ("dyadics", "dyadics_plus"):
        return Classification("ContainsDyadics")
    w = desc.gens[0]
    return Classification("NotInitial", witness=w, missing=_first_missing_prefix(w, desc, "domain"),
                          reason="a sign-expansion prefix of a member is absent")


def _fmt(r):
    return str(r.numerator) if r.denominator == 1 else "%d/%d" % (r.numerator, r.denominator)


def format_coeff(desc):
    v = desc.variant
    if v == "trivial":
        return "trivial"
    if v == "scaled":
        return "integers" if desc.m == 0 else "scaled(%d)" % desc.m
    if v == "dyadics":
        return "dyadics"
    body = ", ".join(_fmt(g) for g in desc.gens)
    if v == "dyadics_plus":
        return "dyadics+{%s}" % body
    return "gen{%s}" % body
