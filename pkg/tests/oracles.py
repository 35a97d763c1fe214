"""Independent reference implementations used only by the tests."""

import itertools
from fractions import Fraction

# -- ordinals below w^3 as order types ----------------------------------
# An ordinal is a list of blocks, each the exponent k of a copy of w^k,
# laid end to end.  A block swallows every smaller block in front of it.


def blocks_norm(bs):
    out = []
    for k in bs:
        while out and out[-1] < k:
            out.pop()
        out.append(k)
    return out


def blocks_add(a, b):
    return blocks_norm(a + b)


def blocks_mul(a, b):
    """a * b: b copies of a, one block of b at a time."""
    if not a:
        return []
    top = max(a)
    out = []
    for k in b:
        out = blocks_norm(out + (list(a) if k == 0 else [top + k]))
    return out


def blocks_key(a):
    # normalized lists are non-increasing, so this is the CNF order
    return tuple(a) + (-1,)


def blocks_from_coeffs(c2, c1, c0):
    return [2] * c2 + [1] * c1 + [0] * c0


def blocks_to_ordinal(bs):
    from surreal.ordinal import Ordinal, omega_to, ord_add

    out = Ordinal.of(0)
    for k in bs:
        out = ord_add(out, omega_to(k))
    return out


def small_grid(limit=3):
    """All (c2, c1, c0) with entries in 0..limit."""
    return list(itertools.product(range(limit + 1), repeat=3))


# -- brute-force cuts over finite sign strings ---------------------------

def strings_up_to(rank):
    for n in range(rank + 1):
        for t in itertools.product("-+", repeat=n):
            yield "".join(t)


def string_value(s):
    """Dyadic value by the birth-order recursion (0, then +-1, then midpoints)."""
    lo = hi = None
    cur = Fraction(0)
    for ch in s:
        if ch == "+":
            lo = cur
        else:
            hi = cur
        if lo is None:
            cur = cur - 1 if hi <= 0 else Fraction(0)
        elif hi is None:
            cur = cur + 1 if lo >= 0 else Fraction(0)
        else:
            cur = (lo + hi) / 2
    return cur


def brute_simplest(left, right, rank):
    """First string by rank (then value) strictly between the given values."""
    for n in range(rank + 1):
        found = []
        for t in itertools.product("-+", repeat=n):
            s = "".join(t)
            v = string_value(s)
            if all(v > a for a in left) and all(v < b for b in right):
                found.append(s)
        if found:
            return found
    return None


# -- Hahn-series convolution over plain dicts ---------------------------

def hahn_dict(x):
    return {e: c for c, e in x.terms}


def convolve(a, b):
    """Product of two finite-support series {exponent: coeff}."""
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}
