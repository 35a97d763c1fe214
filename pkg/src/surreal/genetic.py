"""Brute-force genetic arithmetic on finite sign strings.

These oracles never touch normal forms internally: numbers are plain
``+-`` strings, options are their proper prefixes, and every operation
is the textbook recursion

    x + y = {x^L + y, x + y^L | x^R + y, x + y^R}
    x y   = {x^L y + x y^L - x^L y^L, x^R y + x y^R - x^R y^R |
             x^L y + x y^R - x^L y^R, x^R y + x y^L - x^R y^L}

closed off by a string-level simplest-between.  They exist to check the
fast Hahn-series arithmetic on dyadics.
"""

import threading
from functools import lru_cache

from .dyadic import dyadic_signs, is_dyadic, signs_to_dyadic
from .errors import PreconditionError

__all__ = ["genetic_add_oracle", "genetic_mul_oracle", "DEFAULT_BOUND", "string_add", "string_mul"]

DEFAULT_BOUND = 7

_KEY = str.maketrans("-+", "02")
_FLIP = str.maketrans("-+", "+-")


def _key(s):
    # '-' < end < '+' becomes a plain string comparison
    return s.translate(_KEY) + "1"


def _options(s):
    left, right = [], []
    for i, ch in enumerate(s):
        (left if ch == "+" else right).append(s[:i])
    return left, right


def _simplest(left, right):
    a = max(left, key=_key) if left else None
    b = min(right, key=_key) if right else None
    if a is not None and b is not None and _key(a) >= _key(b):
        raise ValueError("empty cut")
    # walk down from the root: take the sign pointing into the gap
    s = ""
    while True:
        if a is not None and _key(s) <= _key(a):
            s += "+"
        elif b is not None and _key(s) >= _key(b):
            s += "-"
        else:
            return s


def _neg(s):
    return s.translate(_FLIP)


@lru_cache(maxsize=None)
def string_add(x, y):
    if x > y:
        x, y = y, x
    xl, xr = _options(x)
    yl, yr = _options(y)
    left = [string_add(a, y) for a in xl] + [string_add(x, b) for b in yl]
    right = [string_add(a, y) for a in xr] + [string_add(x, b) for b in yr]
    return _simplest(left, right)


def _sub(x, y):
    return string_add(x, _neg(y))


@lru_cache(maxsize=None)
def string_mul(x, y):
    if x > y:
        x, y = y, x
    xl, xr = _options(x)
    yl, yr = _options(y)

    def opt(a, b):
        return _sub(string_add(string_mul(a, y), string_mul(x, b)), string_mul(a, b))

    left = [opt(a, b) for a in xl for b in yl] + [opt(a, b) for a in xr for b in yr]
    right = [opt(a, b) for a in xl for b in yr] + [opt(a, b) for a in xr for b in yl]
    return _simplest(left, right)


_lock = threading.Lock()


def _to_string(x, bound):
    from .conway import _coerce

    x = _coerce(x)
    if not x.is_real() or not is_dyadic(x.real_value()):
        raise PreconditionError("genetic oracles take dyadic rationals, got %s" % x)
    s = dyadic_signs(x.real_value())
    if len(s) > bound:
        raise PreconditionError("birthday %d exceeds the oracle bound %d" % (len(s), bound))
    return s


def _from_string(s):
    from .conway import Surreal

    return Surreal.from_rational(signs_to_dyadic(s))


def genetic_add_oracle(x, y, bound=DEFAULT_BOUND):
    """x + y by the genetic recursion (dyadic arguments of birthday <= bound)."""
    a, b = _to_string(x, bound), _to_string(y, bound)
    with _lock:
        return _from_string(string_add(a, b))


def genetic_mul_oracle(x, y, bound=DEFAULT_BOUND):
    """x * y by the genetic recursion (dyadic arguments of birthday <= bound)."""
    a, b = _to_string(x, bound), _to_string(y, bound)
    with _lock:
        return _from_string(string_mul(a, b))
