"""Conversions between Conway normal forms and sign expansions.

Forward direction.  A term ``w^y * r`` following a previous exponent
``p`` (or leading, when there is none) contributes, in order:

* one ``+``;
* for each plus-run of ``y`` of length ``c`` with ``a`` pluses before it,
  ``w^(a+c)`` pluses;
* for each minus-run of ``y`` with ``a`` pluses before it, ``w^(a+1)``
  minuses per position, except positions whose prefix of ``y`` lies
  above ``p`` (those right options of ``y`` are already dominated by the
  previous term and contribute nothing);
* the signs of ``r`` after its first, each repeated ``w^(y+)`` times,
  ``y+`` being the number of pluses of ``y``;

with every sign flipped when ``r < 0``.  Leaders alone come from
``{0, n w^(y^L) | 2^-n w^(y^R)}``; the coefficient rule from the cuts
``{w^y r^L | w^y r^R}`` and ``{w^y r^L + n w^(y^L) | w^y r^R - n w^(y^L)}``.

Only hereditarily dyadic normal forms have finite run-length expansions;
anything else raises :class:`UnsupportedFragment`.  The backward
direction decodes term by term and re-encodes to confirm the result.
"""

from fractions import Fraction
from functools import lru_cache

from . import conway
from .conway import Surreal, monomial
from .dyadic import dyadic_signs, is_dyadic, signs_to_dyadic, real_prefixes
from .errors import CutViolation, FuelExhausted, UnsupportedFragment
from .ordinal import (ONE as O_ONE, ZERO as O_ZERO, Ordinal, omega_to, ord_add, ord_cmp,
                      ord_divmod_power, ord_mul, ord_sub)
from .signexp import SignExpansion, _walk, se_cmp, se_simpler, se_rank, se_simplest_between

__all__ = [
    "sign_expansion",
    "from_sign_expansion",
    "srl_simpler",
    "birthday",
    "srl_simplest_between",
    "leader_cut",
    "term_cut",
    "DEFAULT_FUEL",
]

DEFAULT_FUEL = 64

_FLIP = {"+": "-", "-": "+"}


def _flip(runs):
    return tuple((_FLIP[s], c) for s, c in runs)


def _run_at(se, pos):
    """(sign, remaining count) of the run of se covering ordinal pos."""
    start = O_ZERO
    for s, c in se.runs:
        end = ord_add(start, c)
        if ord_cmp(pos, end) < 0:
            return s, ord_sub(c, ord_sub(pos, start))
        start = end
    return None, O_ZERO


def _dropped(prefix, prev, count):
    """How many leading positions of a minus run starting after ``prefix``
    have prefixes lying above ``prev`` (these contribute no signs)."""
    if prev is None:
        return O_ZERO
    pos, sp, sq = _walk(prefix, prev)
    if sp is None:
        if sq != "-":
            return O_ZERO
        _, m = _run_at(prev, pos)
        return m if ord_cmp(m, count) < 0 else count
    # prefix runs past prev or diverges from it: all or nothing
    return count if sp == "+" else O_ZERO


def _term_runs(y_se, r, prev):
    """Runs contributed by the term w^y * r after exponent ``prev``."""
    runs = [("+", O_ONE)]
    a = O_ZERO
    pos = O_ZERO
    for s, c in y_se.runs:
        if s == "+":
            runs.append(("+", omega_to(ord_add(a, c))))
            a = ord_add(a, c)
        else:
            k = _dropped(y_se.prefix(pos), prev, c)
            kept = ord_sub(c, k)
            if kept:
                runs.append(("-", ord_mul(omega_to(ord_add(a, O_ONE)), kept)))
        pos = ord_add(pos, c)
    unit = omega_to(a)
    tail = dyadic_signs(abs(r))[1:]
    for ch in tail:
        runs.append((ch, unit))
    if r < 0:
        runs = [(_FLIP[s], c) for s, c in runs]
    return runs


@lru_cache(maxsize=65536)
def _sign_expansion(x):
    runs = []
    prev = None
    for y, r in x.terms:
        if not is_dyadic(r):
            raise UnsupportedFragment(
                "coefficient %s of %s is not dyadic; its expansion is not finitely run-length "
                "encodable (use term_cut for its canonical cut)" % (r, x))
        y_se = _sign_expansion(y)
        runs.extend(_term_runs(y_se, r, prev))
        prev = y_se
    return SignExpansion(runs)


def sign_expansion(x, fuel=DEFAULT_FUEL):
    """Run-length sign expansion of a hereditarily dyadic normal form."""
    if fuel is not None and x.depth() > fuel:
        raise FuelExhausted("exponent nesting depth %d exceeds fuel %d" % (x.depth(), fuel))
    return _sign_expansion(x)


def birthday(x, fuel=DEFAULT_FUEL):
    return se_rank(sign_expansion(x, fuel))


def srl_simpler(x, y, fuel=DEFAULT_FUEL):
    """x <_s y: x's expansion is a strict prefix of y's."""
    return se_simpler(sign_expansion(x, fuel), sign_expansion(y, fuel))


# -- decoding ----------------------------------------------------------

def _drop(runs, amount):
    """Remove the first ``amount`` positions from a run tuple."""
    out = list(runs)
    while amount and out:
        s, c = out[0]
        if ord_cmp(amount, c) >= 0:
            amount = ord_sub(amount, c)
            out.pop(0)
        else:
            out[0] = (s, ord_sub(c, amount))
            amount = O_ZERO
    if amount:
        raise ValueError("dropping past the end")
    return tuple(out)


class _Budget:
    def __init__(self, fuel):
        self.left = fuel

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise FuelExhausted("sign-expansion decoding ran out of fuel")


def _leader_states(view, prev):
    """Greedy chain of leader decodings, each a prefix of the next.

    Yields (y_runs, plus_count, rest) longest first.
    """
    rest = _drop(view, O_ONE)
    y_runs = []
    a = O_ZERO
    states = [((), a, rest)]
    while True:
        y_se = SignExpansion(y_runs)
        free = O_ZERO
        cap = None
        if prev is not None:
            pos, sp, sq = _walk(y_se, prev)
            if sp is None and sq == "-":
                _, free = _run_at(prev, pos)
            elif sp is None and sq == "+":
                # staying below prev means not outrunning its plus run
                _, cap = _run_at(prev, pos)
        head = rest[0] if rest else None
        unit_minus = omega_to(ord_add(a, O_ONE))
        if free:
            kept = O_ZERO
            if head is not None and head[0] == "-":
                kept, _ = ord_divmod_power(head[1], ord_add(a, O_ONE))
            y_runs.append(("-", ord_add(free, kept)))
            if kept:
                rest = _drop(rest, ord_mul(unit_minus, kept))
        elif head is not None and head[0] == "+" and ord_cmp(head[1], unit_minus) >= 0:
            e = head[1].leading_exponent
            c = ord_sub(e, a)
            if cap is not None and ord_cmp(cap, c) < 0:
                c = cap
                e = ord_add(a, c)
            y_runs.append(("+", c))
            rest = _drop(rest, omega_to(e))
            a = e
        elif head is not None and head[0] == "-" and ord_cmp(head[1], unit_minus) >= 0:
            kept, _ = ord_divmod_power(head[1], ord_add(a, O_ONE))
            y_runs.append(("-", kept))
            rest = _drop(rest, ord_mul(unit_minus, kept))
        else:
            break
        states.append((tuple(SignExpansion(y_runs).runs), a, rest))
    return reversed(states)


def _tail_options(rest, a, limit=64):
    """Possible coefficient tails: (tail_string, remaining runs), longest first."""
    unit = omega_to(a)
    chunks = []
    cur = rest
    while cur:
        s, n = cur[0]
        q, rem = ord_divmod_power(n, a)
        if not q or not q.is_finite():
            break
        q = int(q)
        chunks.append((s, q))
        if rem:
            break
        cur = cur[1:]
    options = []
    tail = ""
    cur = rest
    options.append((tail, cur))
    for s, q in chunks:
        for _ in range(q):
            if len(tail) >= limit:
                break
            tail += s
            cur = _drop(cur, unit)
            options.append((tail, cur))
    return reversed(options)


def _decode_terms(runs, prev, budget):
    if not runs:
        yield []
        return
    budget.spend()
    negative = runs[0][0] == "-"
    view = _flip(runs) if negative else tuple(runs)
    for y_runs, a, rest in _leader_states(view, prev):
        y_se = SignExpansion(y_runs)
        if prev is not None and se_cmp(y_se, prev) >= 0:
            continue
        try:
            y = _decode(y_se, budget)
        except UnsupportedFragment:
            continue
        for tail, remaining in _tail_options(rest, a):
            r = signs_to_dyadic("+" + tail)
            if negative:
                r = -r
                remaining = _flip(remaining)
            for more in _decode_terms(remaining, y_se, budget):
                yield [(y, r)] + more


def _decode(se, budget):
    for terms in _decode_terms(se.runs, None, budget):
        x = Surreal._raw(terms)
        if _sign_expansion(x) == se:
            return x
    raise UnsupportedFragment("%s is not the expansion of a hereditarily dyadic normal form" % se)


def from_sign_expansion(se, fuel=10000):
    """Normal form of a sign expansion; inverse of :func:`sign_expansion`."""
    return _decode(se, _Budget(fuel))


def srl_simplest_between(left, right, fuel=DEFAULT_FUEL):
    """The simplest surreal strictly between finite sets ``left`` and ``right``."""
    left = [conway._coerce(x) for x in left]
    right = [conway._coerce(x) for x in right]
    if left and right:
        a, b = max(left), min(right)
        if a >= b:
            raise CutViolation(a, b)
    ls = [sign_expansion(x, fuel) for x in left]
    rs = [sign_expansion(x, fuel) for x in right]
    return from_sign_expansion(se_simplest_between(ls, rs))


# -- canonical cuts ----------------------------------------------------

def _option_prefixes(y_se, n):
    """A finite sample of y's strict prefixes: positions below n and run starts."""
    out = []
    seen = set()
    rank = se_rank(y_se)
    positions = [Ordinal.of(k) for k in range(n)]
    start = O_ZERO
    for _, c in y_se.runs:
        positions.append(start)
        for k in range(1, n):
            positions.append(ord_add(start, Ordinal.of(k)))
        start = ord_add(start, c)
    for p in positions:
        if ord_cmp(p, rank) >= 0 or p in seen:
            continue
        seen.add(p)
        out.append((y_se.prefix(p), y_se.sign_at(p)))
    return out


class LeaderCut:
    """Symbolic form of ``w^y = {0, n w^(y^L) | 2^-n w^(y^R)}``.

    ``left_exponents``/``right_exponents`` hold the options of y used; a
    finite realization takes n = 1..bound.
    """

    def __init__(self, y, left_exponents, right_exponents, complete):
        self.y = y
        self.left_exponents = left_exponents
        self.right_exponents = right_exponents
        self.complete = complete

    def realize(self, bound):
        left = [conway.ZERO]
        right = []
        for yl in self.left_exponents:
            left.extend(monomial(yl, n) for n in range(1, bound + 1))
        for yr in self.right_exponents:
            right.extend(monomial(yr, Fraction(1, 2 ** n)) for n in range(1, bound + 1))
        return left, right

    def __repr__(self):
        return "LeaderCut(y=%s, L=%s, R=%s)" % (
            self.y, [str(v) for v in self.left_exponents], [str(v) for v in self.right_exponents])


def leader_cut(y, sample=8, fuel=DEFAULT_FUEL):
    """Options of y feeding the leader cut of w^y.

    Finite-rank y gives the complete option sets; for transfinite y a
    finite sample of predecessors is used and ``complete`` is False.
    """
    y = conway._coerce(y)
    y_se = sign_expansion(y, fuel)
    complete = y_se.is_finite()
    left, right = [], []
    for p, s in _option_prefixes(y_se, sample):
        v = from_sign_expansion(p)
        (left if s == "+" else right).append(v)
    return LeaderCut(y, left, right, complete)


def term_cut(y, r, depth=8, bound=8, fuel=DEFAULT_FUEL):
    """Finite realization of the canonical cut of w^y * r (r not an integer).

    For non-dyadic r, or dyadic r when y has no left options, this is
    ``{w^y r^L | w^y r^R}``; otherwise ``{w^y r^L + n w^(y^L) | w^y r^R - n w^(y^L)}``.
    ``depth`` limits how many sign-prefixes of r are used.
    """
    y = conway._coerce(y)
    r = Fraction(r)
    if r.denominator == 1:
        raise ValueError("integer coefficients have no such cut")
    r_left, r_right = [Fraction(0)] if r > 0 else [], [Fraction(0)] if r < 0 else []
    for _, value in real_prefixes(r, depth):
        if value == r:
            break
        (r_left if value < r else r_right).append(value)
    y_left = []
    if is_dyadic(r):
        y_se = sign_expansion(y, fuel)
        y_left = [from_sign_expansion(p) for p, s in _option_prefixes(y_se, bound) if s == "+"]
    left = [monomial(y, v) for v in r_left]
    right = [monomial(y, v) for v in r_right]
    if y_left:
        left = [monomial(y, v) + monomial(yl, n) for v in r_left for yl in y_left
                for n in range(0, bound + 1)]
        right = [monomial(y, v) - monomial(yl, n) for v in r_right for yl in y_left
                 for n in range(0, bound + 1)]
    return left, right
