"""Decision procedures for initial subgroups and subdomains of No.

A structure is given symbolically, in the shape of a truncation closed,
cross sectional subgroup of a power series group: an exponent class
Gamma plus, for each exponent y, a coefficient set R_y.  Its members are
the normal forms whose exponents lie in Gamma and whose coefficients lie
in the matching R_y.

Generated exponent classes are infinite, so every "for all members"
check walks the members produced within a fuel budget.  Verdicts are
three-valued: pass, fail (with witnesses that can be checked on their
own), or indeterminate.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import coeffs
from .coeffs import DYADICS, INTEGERS, classify_real_subdomain, classify_real_subgroup, coeff_contains
from .conway import OMEGA, Surreal, _coerce, from_ordinal, is_omnific, monomial, srl_cmp, to_ordinal
from .errors import FuelExhausted, InvariantBreach, PreconditionError, UnsupportedFragment
from .expansion import from_sign_expansion, sign_expansion
from .ordinal import ONE as O_ONE, Ordinal, is_mul_indecomposable, omega_to, ord_add, ord_cmp
from .signexp import se_rank

__all__ = [
    "ExponentClassDesc",
    "StructureSpec",
    "Verdict",
    "Height",
    "finite_set",
    "generated_monoid",
    "generated_group",
    "gamma_contains",
    "gamma_members",
    "member",
    "gamma_is_initial",
    "is_initial_group",
    "is_initial_domain",
    "is_initial",
    "is_discrete",
    "is_subdomain_of_oz",
    "convex_restrict",
    "convex_verdicts",
    "archimedean_height",
    "is_archimedean",
    "section9_isomorphism_check",
    "section9_map",
    "sample_members",
    "DEFAULT_FUEL",
]

DEFAULT_FUEL = 64
_RADIUS = 3


# -- exponent classes --------------------------------------------------

@dataclass(frozen=True)
class ExponentClassDesc:
    """Gamma: a finite set, or the monoid/group spanned by generators.

    ``below`` (optional) keeps only the exponents strictly below it; it is
    how convex restrictions of generated classes are described.
    """

    variant: str
    elements: tuple = ()
    below: Surreal = None

    def __post_init__(self):
        if self.variant not in ("finite", "monoid", "group"):
            raise ValueError("unknown exponent class %r" % (self.variant,))
        elems = tuple(_coerce(e) for e in self.elements)
        if self.variant == "finite":
            uniq = {}
            for e in elems:
                uniq[e] = e
            elems = tuple(sorted(uniq.values(), key=_sort_key))
        else:
            elems = tuple(sorted({e for e in elems if e}, key=_sort_key))
        object.__setattr__(self, "elements", elems)
        if self.below is not None:
            object.__setattr__(self, "below", _coerce(self.below))


def _sort_key(x):
    from functools import cmp_to_key

    return cmp_to_key(srl_cmp)(x)


def finite_set(elements):
    return ExponentClassDesc("finite", tuple(elements))


def generated_monoid(gens, below=None):
    return ExponentClassDesc("monoid", tuple(gens), below)


def generated_group(gens, below=None):
    return ExponentClassDesc("group", tuple(gens), below)


def _vector(x):
    return {e: c for e, c in x.terms}


def _solve(gens, target):
    """Rational solutions of sum n_i g_i = target.

    Returns (unique, solution) where solution is a list of Fractions, or
    None when inconsistent.  ``unique`` is False when the generators are
    dependent (solution is then one particular solution or None).
    """
    keys = []
    for v in [target] + list(gens):
        for e in v.terms:
            if e[0] not in keys:
                keys.append(e[0])
    cols = [_vector(g) for g in gens]
    tv = _vector(target)
    rows = [[col.get(k, Fraction(0)) for col in cols] + [tv.get(k, Fraction(0))] for k in keys]
    n = len(gens)
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][n] != 0:
            return len(pivots) == n, None
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = rows[i][n]
    return len(pivots) == n, sol


def _in_lattice(gens, target):
    """Integer-span membership, by echelon reduction over the integers."""
    keys = sorted({e for v in [target] + list(gens) for e, _ in v.terms}, key=_sort_key)
    den = 1
    for v in [target] + list(gens):
        for _, c in v.terms:
            den = den * c.denominator // gcd(den, c.denominator)
    rows = [[int(_vector(v).get(k, 0) * den) for k in keys] for v in gens]
    t = [int(_vector(target).get(k, 0) * den) for k in keys]
    r = 0
    for c in range(len(keys)):
        # gcd-combine the rows below r into a single pivot for column c
        for i in range(r + 1, len(rows)):
            while rows[i][c]:
                q = rows[r][c] // rows[i][c]
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[i])]
                rows[r], rows[i] = rows[i], rows[r]
        if r >= len(rows) or rows[r][c] == 0:
            if t[c]:
                return False
            continue
        if t[c] % rows[r][c]:
            return False
        q = t[c] // rows[r][c]
        t = [a - q * b for a, b in zip(t, rows[r])]
        r += 1
    return not any(t)


def _bounded_monoid_search(gens, target):
    """Exact monoid membership when every generator has the target's sign
    and is not infinitely smaller than it; None when that does not apply."""
    s = target.sign()
    if any(e.sign() != s for e in gens):
        return None
    lead = target.leading_exponent
    bounds = []
    for e in gens:
        k = srl_cmp(e.leading_exponent, lead)
        if k < 0:
            return None
        bounds.append(0 if k > 0 else int(abs(target.terms[0][1] / e.terms[0][1])))

    def search(i, rest):
        if not rest:
            return True
        if i == len(gens) or rest.sign() != s:
            return False
        for n in range(bounds[i], -1, -1):
            if search(i + 1, rest - gens[i] * n):
                return True
        return False

    return search(0, target)


def _combos(n, radius, signed):
    rng = range(-radius, radius + 1) if signed else range(0, radius + 1)
    for t in itertools.product(rng, repeat=n):
        if sum(abs(v) for v in t) <= radius:
            yield t


def gamma_contains(g, y, fuel=DEFAULT_FUEL):
    """Exact membership when decidable; FuelExhausted otherwise."""
    return _gamma_contains(g, _coerce(y), fuel)


@lru_cache(maxsize=4096)
def _gamma_contains(g, y, fuel):
    if g.below is not None and srl_cmp(y, g.below) >= 0:
        return False
    if g.variant == "finite":
        return y in g.elements
    if not y:
        return True
    if not g.elements:
        return False
    signed = g.variant == "group"
    unique, sol = _solve(g.elements, y)
    if sol is None:
        return False
    if unique:
        return all(v.denominator == 1 and (signed or v >= 0) for v in sol)
    # rationals of both signs span a group even as a monoid
    if signed or (all(e.is_real() for e in g.elements)
                  and len({e.sign() for e in g.elements}) > 1):
        return _in_lattice(g.elements, y)
    found = _bounded_monoid_search(g.elements, y)
    if found is not None:
        return found
    # dependent generators of mixed size: search small combinations
    keys = sorted({e for v in (y,) + g.elements for e, _ in v.terms}, key=_sort_key)
    cols = [[_vector(v).get(k, 0) for k in keys] for v in g.elements]
    want = [_vector(y).get(k, 0) for k in keys]
    seen = 0
    radius = 1
    while True:
        for t in _combos(len(cols), radius, signed):
            seen += 1
            if seen > fuel * fuel:
                raise FuelExhausted("membership of %s in a dependent generated class" % y)
            if all(sum(k * col[i] for k, col in zip(t, cols)) == w for i, w in enumerate(want)):
                return True
        radius += 1


def gamma_members(g, radius=_RADIUS, fuel=DEFAULT_FUEL):
    """Members produced within the budget, in increasing order.

    Returns (members, complete).
    """
    if g.variant == "finite":
        out = list(g.elements)
        complete = True
    else:
        signed = g.variant == "group"
        found = {}
        complete = not g.elements
        for t in _combos(len(g.elements), radius, signed):
            v = sum((e * k for e, k in zip(g.elements, t)), Surreal())
            found[v] = v
            if len(found) > fuel * 4:
                break
        out = sorted(found.values(), key=_sort_key)
    if g.below is not None:
        out = [y for y in out if srl_cmp(y, g.below) < 0]
    return out, complete


def gamma_minimum(g):
    """The least exponent, or None when there is none."""
    if g.variant == "finite":
        return g.elements[0] if g.elements else None
    if g.variant == "monoid":
        return Surreal() if all(e > 0 for e in g.elements) else None
    return Surreal() if not g.elements else None


# -- structure specs ---------------------------------------------------

@dataclass(frozen=True)
class StructureSpec:
    """kind ('group' or 'domain'), Gamma, and the coefficient map y -> R_y."""

    kind: str
    gamma: ExponentClassDesc
    coeff: tuple = ()
    default: coeffs.CoeffGroupDesc = None

    def __post_init__(self):
        if self.kind not in ("group", "domain"):
            raise ValueError("kind must be 'group' or 'domain'")
        items = self.coeff.items() if isinstance(self.coeff, dict) else self.coeff
        pairs = tuple(sorted(((_coerce(y), d) for y, d in items), key=lambda p: _sort_key(p[0])))
        object.__setattr__(self, "coeff", pairs)
        for y, _ in pairs:
            try:
                ok = gamma_contains(self.gamma, y)
            except FuelExhausted:
                ok = True
            if not ok:
                raise PreconditionError("coefficient entry for %s, which is not in Gamma" % y)
        if self.gamma.variant == "finite" and self.default is None:
            listed = {y for y, _ in pairs}
            missing = [y for y in self.gamma.elements if y not in listed]
            if missing:
                raise PreconditionError("no coefficient descriptor for exponent %s" % missing[0])

    def ring_for(self, y):
        y = _coerce(y)
        for e, d in self.coeff:
            if e == y:
                return d
        if self.default is None:
            raise PreconditionError("no coefficient descriptor for exponent %s" % y)
        return self.default

    def with_gamma(self, gamma):
        coeff = tuple((y, d) for y, d in self.coeff
                      if gamma.below is None or srl_cmp(y, gamma.below) < 0)
        if gamma.variant == "finite":
            coeff = tuple((y, d) for y, d in coeff if y in gamma.elements)
        return StructureSpec(self.kind, gamma, coeff, self.default)


def member(x, spec, fuel=DEFAULT_FUEL):
    """Membership of the normal form x."""
    x = _coerce(x)
    for y, r in x.terms:
        if not gamma_contains(spec.gamma, y, fuel):
            return False
        if not coeff_contains(spec.ring_for(y), r, spec.kind):
            return False
    return True


def sample_members(spec, rng, count, radius=_RADIUS, terms=3):
    """Random members built from enumerated exponents and sampled coefficients."""
    gam, _ = gamma_members(spec.gamma, radius)
    out = []
    for _ in range(count):
        k = rng.randint(0, min(terms, len(gam)))
        ys = rng.sample(gam, k)
        parts = []
        for y in ys:
            samples = coeffs.coeff_samples(spec.ring_for(y), spec.kind)
            if samples:
                parts.append((y, rng.choice(samples) * rng.randint(1, 3)))
        out.append(Surreal(parts))
    return out


# -- verdicts ----------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure.

    ``status`` is 'pass', 'fail' or 'indeterminate'.  On failure
    ``condition`` names what broke and ``witness`` maps roles (member,
    missing, ...) to surreals.
    """

    status: str
    condition: str = ""
    witness: tuple = ()
    note: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    def get(self, role):
        for k, v in self.witness:
            if k == role:
                return v
        return None

    def __str__(self):
        text = self.status
        if self.condition:
            text += " [%s]" % self.condition
        if self.witness:
            text += " " + ", ".join("%s=%s" % (k, v) for k, v in self.witness)
        if self.note:
            text += " (%s)" % self.note
        return text


PASS = Verdict("pass")


def _fail(condition, note="", **witness):
    return Verdict("fail", condition, tuple(witness.items()), note)


def _indeterminate(condition, note):
    return Verdict("indeterminate", condition, (), note)


def _strict_prefixes(se, sample=6):
    """Strict prefixes of a sign expansion with the sign that follows each.

    All of them for finite expansions; otherwise every run start plus a
    few finite offsets into each run.
    """
    if se.is_finite():
        s = se.to_string()
        return [(se.prefix(n), s[n]) for n in range(len(s))]
    out = []
    seen = set()
    rank = se_rank(se)
    start = Ordinal.of(0)
    for _, c in se.runs:
        for k in range(sample):
            p = ord_add(start, Ordinal.of(k))
            if ord_cmp(p, rank) < 0 and p not in seen:
                seen.add(p)
                out.append((se.prefix(p), se.sign_at(p)))
        start = ord_add(start, c)
    return out


def gamma_is_initial(g, radius=_RADIUS, fuel=DEFAULT_FUEL):
    """Every strict sign-expansion prefix of a member of Gamma is a member."""
    members, _ = gamma_members(g, radius, fuel)
    try:
        for x in members:
            for p, _ in _strict_prefixes(sign_expansion(x, fuel)):
                y = from_sign_expansion(p)
                if not gamma_contains(g, y, fuel):
                    return _fail("gamma-initial", member=x, missing=y)
    except (FuelExhausted, UnsupportedFragment) as exc:
        return _indeterminate("gamma-initial", str(exc))
    return PASS


def _coefficient_check(spec, members, classify):
    for y in members:
        cls = classify(spec.ring_for(y))
        if cls.arm == "Trivial":
            return _fail("cross-sectional", "R_y is trivial for an exponent in Gamma",
                         exponent=y, missing=monomial(y))
        if cls.arm == "NotInitial":
            w = {"exponent": y}
            if cls.witness is not None:
                w["member"] = monomial(y, cls.witness)
            w["missing"] = monomial(y, cls.missing)
            return _fail("coefficient-initial", cls.reason, **w)
    return PASS


def _right_pairs(members, fuel):
    """Pairs (x, y) of members with y a strict prefix of x followed by '-'."""
    for x in members:
        for p, sign in _strict_prefixes(sign_expansion(x, fuel)):
            if sign == "-":
                yield x, from_sign_expansion(p)


def _dyadic_condition(spec, members, fuel):
    for x, y in _right_pairs(members, fuel):
        cls = classify_real_subgroup(coeffs.canonical(spec.ring_for(y), spec.kind))
        if cls.arm != "ContainsDyadics":
            n = cls.m + 1 if cls.arm == "Scaled" else 1
            return _fail("dyadic-coefficients", "D must lie in R_y for y right of x",
                         x=x, y=y, member=monomial(x), missing=monomial(y, Fraction(1, 2 ** n)))
    return PASS


def is_initial_group(spec, radius=_RADIUS, fuel=DEFAULT_FUEL):
    """Theorem-11 style test: prefix-closed Gamma, initial R_y, and D in
    R_y whenever y is a right predecessor of another exponent x."""
    if spec.kind != "group":
        raise PreconditionError("is_initial_group needs a group spec")
    return _initial(spec, radius, fuel, classify_real_subgroup)


def _initial(spec, radius, fuel, classify):
    v = gamma_is_initial(spec.gamma, radius, fuel)
    if v.status == "fail":
        x, y = v.get("member"), v.get("missing")
        return _fail("gamma-initial", "a prefix of an exponent is not an exponent",
                     exponent=x, member=monomial(x), missing=monomial(y))
    if not v.passed:
        return v
    members, _ = gamma_members(spec.gamma, radius, fuel)
    try:
        v = _coefficient_check(spec, members, classify)
        if not v.passed:
            return v
        return _dyadic_condition(spec, members, fuel)
    except (FuelExhausted, UnsupportedFragment) as exc:
        return _indeterminate("coefficients", str(exc))


def _closure_check(spec, radius, fuel):
    g = spec.gamma
    if not gamma_contains(g, Surreal(), fuel):
        return _fail("monoid-closure", "0 is not in Gamma", missing=monomial(0))
    members, _ = gamma_members(g, radius, fuel)
    for x in members:
        for y in members:
            s = x + y
            if (g.below is None or srl_cmp(s, g.below) < 0) and not gamma_contains(g, s, fuel):
                return _fail("monoid-closure", "Gamma is not closed under +",
                             x=monomial(x), y=monomial(y), missing=monomial(s))
            if not gamma_contains(g, s, fuel):
                continue
            for a in coeffs.coeff_samples(spec.ring_for(x), "domain"):
                for b in coeffs.coeff_samples(spec.ring_for(y), "domain"):
                    if not coeff_contains(spec.ring_for(s), a * b, "domain"):
                        return _fail("product-closure", "R_x R_y is not inside R_(x+y)",
                                     x=monomial(x, a), y=monomial(y, b), missing=monomial(s, a * b))
    return PASS


def is_initial_domain(spec, radius=_RADIUS, fuel=DEFAULT_FUEL):
    """As is_initial_group, plus closure of Gamma under + and of the
    coefficients under products, with the subdomain classifier."""
    if spec.kind != "domain":
        raise PreconditionError("is_initial_domain needs a domain spec")
    try:
        v = _closure_check(spec, radius, fuel)
    except FuelExhausted as exc:
        return _indeterminate("monoid-closure", str(exc))
    if not v.passed:
        return v
    return _initial(spec, radius, fuel, classify_real_subdomain)


def is_initial(spec, radius=_RADIUS, fuel=DEFAULT_FUEL):
    if spec.kind == "group":
        return is_initial_group(spec, radius, fuel)
    return is_initial_domain(spec, radius, fuel)


def _require_initial(spec, what):
    v = is_initial(spec)
    if not v.passed:
        raise PreconditionError("%s needs an initial structure; check gave: %s" % (what, v))


# -- discreteness ------------------------------------------------------

@dataclass(frozen=True)
class Discreteness:
    """'Discrete' with the least positive member, or 'Dense'."""

    kind: str
    least: Surreal = None

    def __str__(self):
        return "Discrete(%s)" % self.least if self.kind == "Discrete" else "Dense"


def _route_definitional(spec):
    low = gamma_minimum(spec.gamma)
    if low is None:
        return Discreteness("Dense")
    cls = classify_real_subgroup(coeffs.canonical(spec.ring_for(low), spec.kind))
    if cls.arm == "Scaled":
        return Discreteness("Discrete", monomial(low, Fraction(1, 2 ** cls.m)))
    return Discreteness("Dense")


def _is_negated_ordinal(y):
    try:
        to_ordinal(-y)
    except Exception:
        return False
    return True


def _route_successor(spec, radius, fuel, depth=16):
    """Look for a member 2^-n w^(-a) whose left immediate successor (its
    expansion with one more minus) is not a member."""
    members, _ = gamma_members(spec.gamma, radius, fuel)
    for y in members:
        if y > 0 or not _is_negated_ordinal(y):
            continue
        for n in range(depth):
            c = monomial(y, Fraction(1, 2 ** n))
            if not member(c, spec, fuel):
                continue
            succ = from_sign_expansion(sign_expansion(c, fuel).append("-"))
            if not member(succ, spec, fuel):
                return c
    return None


def is_discrete(spec, radius=_RADIUS, fuel=DEFAULT_FUEL):
    """Discrete(least positive member) or Dense, decided two ways.

    The first route reads the least positive member off the smallest
    exponent; the second searches for a member of the form 2^-n w^(-a)
    without a left immediate successor.  Disagreement is an internal error.
    """
    _require_initial(spec, "is_discrete")
    a = _route_definitional(spec)
    b = _route_successor(spec, radius, fuel)
    if (a.kind == "Discrete") != (b is not None):
        raise InvariantBreach("discreteness routes disagree: %s versus successor witness %s" % (a, b))
    return a


def is_subdomain_of_oz(spec, fuel=DEFAULT_FUEL):
    """All exponents >= 0 and R_0 inside the integers."""
    if spec.kind != "domain":
        raise PreconditionError("is_subdomain_of_oz needs a domain spec")
    _require_initial(spec, "is_subdomain_of_oz")
    g = spec.gamma
    if g.variant == "finite":
        nonneg = all(y >= 0 for y in g.elements)
    elif g.variant == "monoid":
        nonneg = all(y > 0 for y in g.elements)
    else:
        nonneg = not g.elements
    if not nonneg:
        return False
    d = coeffs.canonical(spec.ring_for(0), "domain")
    return d.variant == "trivial" or (d.variant == "scaled" and d.m == 0)


# -- heights and convex pieces -----------------------------------------

@dataclass(frozen=True)
class Height:
    """Archimedean height w^phi of the ordinal members.

    ``exact`` is False when only the lower bound ``ordinal`` could be
    established within fuel.
    """

    ordinal: Ordinal
    exponent: Ordinal
    exact: bool = True

    def __str__(self):
        from .ordinal import format_ordinal

        text = format_ordinal(self.ordinal)
        return text if self.exact else ">= " + text


def _ordinal_ladder(fuel):
    for n in range(fuel):
        yield Ordinal.of(n)


def archimedean_height(spec, fuel=DEFAULT_FUEL):
    """Supremum of beta + 1 over ordinal members beta, as w^phi.

    In an initial structure the ordinal exponents form an initial segment
    of On, so phi is the least ordinal missing from Gamma.
    """
    g = spec.gamma
    below = g.below
    phi = None
    for o in _ordinal_ladder(fuel):
        if not gamma_contains(g, from_ordinal(o), fuel):
            phi = o
            break
    if phi is not None:
        return Height(omega_to(phi), phi)
    # every natural number below the fuel is in Gamma
    generated = g.variant != "finite"
    if generated and gamma_contains(g, 1, fuel):
        w = omega_to(1)
        if below is not None and srl_cmp(below, OMEGA) <= 0:
            return Height(omega_to(w), w)
        if not gamma_contains(g, OMEGA, fuel):
            return Height(omega_to(w), w)
    bound = Ordinal.of(fuel)
    return Height(omega_to(bound), bound, exact=False)


def convex_restrict(spec, tau, fuel=DEFAULT_FUEL):
    """A[w^tau]: keep the exponents below tau (1 <= tau <= height exponent)."""
    tau = Ordinal.of(tau)
    h = archimedean_height(spec, fuel)
    if ord_cmp(tau, O_ONE) < 0 or (h.exact and ord_cmp(tau, h.exponent) > 0):
        raise PreconditionError("tau = %s is outside 1..%s" % (tau, h.exponent))
    t = from_ordinal(tau)
    g = spec.gamma
    if g.variant == "finite":
        new = finite_set(y for y in g.elements if srl_cmp(y, t) < 0)
    else:
        b = t if g.below is None or srl_cmp(t, g.below) < 0 else g.below
        new = ExponentClassDesc(g.variant, g.elements, b)
    return spec.with_gamma(new)


@dataclass(frozen=True)
class ConvexReport:
    tau: Ordinal
    initial: Verdict
    group_closed: bool
    convex: bool
    product_closed: bool
    product_witness: tuple
    expected_product_closed: bool

    @property
    def agrees(self):
        return self.product_closed == self.expected_product_closed


def _ordinal_exponents(g, fuel):
    out = []
    for o in _ordinal_ladder(fuel):
        if gamma_contains(g, from_ordinal(o), fuel):
            out.append(o)
        else:
            break
    return out


def convex_verdicts(spec, tau, samples=200, seed=0, fuel=DEFAULT_FUEL):
    """Initiality, sampled group closure and convexity of A[w^tau], and
    whether it is closed under products (with a witness when not)."""
    tau = Ordinal.of(tau)
    sub = convex_restrict(spec, tau, fuel)
    initial = is_initial(sub)
    rng = random.Random(seed)
    xs = sample_members(sub, rng, samples)
    ys = sample_members(sub, rng, samples)
    group_closed = all(member(x - y, sub, fuel) for x, y in zip(xs, ys))
    convex = True
    ambient = sample_members(spec, rng, samples)
    for x, z, y in zip(xs, ys, ambient):
        lo, hi = (x, z) if x < z else (z, x)
        if lo < y < hi and not member(y, sub, fuel):
            convex = False
            break
    # ordinal exponents below tau; products of leaders w^mu w^nu = w^(mu+nu)
    exps = _ordinal_exponents(sub.gamma, min(fuel, 16))
    witness = ()
    for total in range(2 * len(exps)):
        for mu in exps:
            nu_i = total - int(mu) if mu.is_finite() else None
            if nu_i is None or nu_i < int(mu) or nu_i >= len(exps):
                continue
            nu = exps[nu_i]
            prod = monomial(from_ordinal(mu)) * monomial(from_ordinal(nu))
            if not member(prod, sub, fuel):
                witness = (monomial(from_ordinal(mu)), monomial(from_ordinal(nu)), prod)
                break
        if witness:
            break
    return ConvexReport(tau, initial, group_closed, convex, not witness, witness,
                        is_mul_indecomposable(omega_to(tau)))


def is_archimedean(spec, samples=200, seed=0, fuel=DEFAULT_FUEL):
    """Sampled: for 0 < x < y members, some n <= fuel has n x > y."""
    rng = random.Random(seed)
    pool = [abs_(x) for x in sample_members(spec, rng, samples) if x]
    for x in pool:
        for y in pool[:20]:
            if x < y and not any(x * n > y for n in range(1, fuel + 1)):
                return False
    return True


def abs_(x):
    return -x if x.sign() < 0 else x


# -- the example group {d + a/w} ---------------------------------------

SECTION9_GROUP = StructureSpec("group", finite_set([0, -1]), {0: DYADICS, -1: INTEGERS})
SECTION9_IMAGE = StructureSpec("group", finite_set([0, 1]), {0: INTEGERS, 1: DYADICS})


def section9_map(x):
    """f(d + a/w) = w d + a."""
    x = _coerce(x)
    d = x.coefficient(0)
    a = x.coefficient(-1)
    if x != monomial(0, d) + monomial(-1, a):
        raise PreconditionError("%s is not of the form d + a/w" % x)
    return monomial(1, d) + monomial(0, a)


@dataclass(frozen=True)
class Section9Report:
    pairs: int
    additive: bool
    order_preserving: bool
    injective: bool
    into_oz: bool
    image_members: bool
    image_initial: Verdict
    discreteness: Discreteness

    @property
    def passed(self):
        return (self.additive and self.order_preserving and self.injective and self.into_oz
                and self.image_members and self.image_initial.passed
                and self.discreteness.kind == "Discrete")


def section9_isomorphism_check(pairs=1000, seed=0):
    rng = random.Random(seed)

    def draw():
        d = Fraction(rng.randint(-64, 64), 2 ** rng.randint(0, 5))
        return monomial(0, d) + monomial(-1, rng.randint(-20, 20))

    additive = order = inj = oz = image = True
    for _ in range(pairs):
        x, y = draw(), draw()
        fx, fy = section9_map(x), section9_map(y)
        additive &= section9_map(x + y) == fx + fy
        order &= srl_cmp(x, y) == srl_cmp(fx, fy)
        inj &= (x == y) == (fx == fy)
        oz &= is_omnific(fx)
        image &= member(fx, SECTION9_IMAGE)
    return Section9Report(pairs, additive, order, inj, oz, image,
                          is_initial_group(SECTION9_IMAGE), is_discrete(SECTION9_GROUP))
