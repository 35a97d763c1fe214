"""Exact rationals on the real line of the surreal tree.

Finite-birthday surreals are exactly the dyadic rationals; every other
rational has an infinite (length omega) sign expansion whose finite
prefixes are dyadic.  Both directions go through the same bisection: the
next prefix is the simplest dyadic strictly between the current left and
right bounds (an integer step while one side is open, the midpoint once
both sides are closed).
"""

from fractions import Fraction
from math import floor, ceil

__all__ = ["is_dyadic", "real_signs", "dyadic_signs", "signs_to_dyadic", "real_prefixes"]


def is_dyadic(r):
    r = Fraction(r)
    d = r.denominator
    return d & (d - 1) == 0


def _next(lo, hi):
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(0) if hi > 0 else Fraction(ceil(hi) - 1)
    if hi is None:
        return Fraction(0) if lo < 0 else Fraction(floor(lo) + 1)
    return (lo + hi) / 2


def real_prefixes(r, limit=None):
    """Yield ``(sign, prefix_value)`` pairs along r's sign expansion.

    ``prefix_value`` is the number whose expansion ends with ``sign``.
    Stops when r is reached (dyadic r) or after ``limit`` signs.
    """
    r = Fraction(r)
    lo = hi = None
    cur = Fraction(0)
    n = 0
    while cur != r:
        if limit is not None and n >= limit:
            return
        if r > cur:
            lo = cur
            sign = "+"
        else:
            hi = cur
            sign = "-"
        cur = _next(lo, hi)
        n += 1
        yield sign, cur


def real_signs(r, limit=None):
    return "".join(s for s, _ in real_prefixes(r, limit))


def dyadic_signs(r):
    """Finite ``+-`` string of a dyadic rational."""
    if not is_dyadic(r):
        raise ValueError("%s is not dyadic" % (r,))
    return real_signs(r)


def signs_to_dyadic(s):
    lo = hi = None
    cur = Fraction(0)
    for ch in s:
        if ch == "+":
            lo = cur
        elif ch == "-":
            hi = cur
        else:
            raise ValueError("bad sign %r" % (ch,))
        cur = _next(lo, hi)
    return cur
