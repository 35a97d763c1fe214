"""Sign expansions: the tree coordinates of surreal numbers.

A sign expansion is stored run-length encoded as a tuple of
``(sign, count)`` pairs, ``sign`` being ``'+'`` or ``'-'`` and ``count``
an :class:`~surreal.ordinal.Ordinal` >= 1.  Adjacent runs alternate in
sign, so every value has exactly one encoding and transfinite expansions
such as ``(+,w)(-,1)`` (that is, omega - 1) are ordinary values.

The lexicographic order puts ``-`` below "undefined" below ``+``; the
simplicity order is the strict-prefix relation.
"""

import re

from .errors import CutViolation, FuelExhausted, ParseError, UnsupportedFragment
from .ordinal import ONE, ZERO, Ordinal, ord_add, ord_cmp, ord_sub, parse_ordinal, format_ordinal

__all__ = [
    "SignExpansion",
    "se_cmp",
    "se_simpler",
    "se_rank",
    "se_simplest_between",
    "se_predecessors",
    "parse_signs",
]

_FLIP = {"+": "-", "-": "+"}


class SignExpansion:
    __slots__ = ("runs", "_hash")

    def __init__(self, runs=()):
        merged = []
        for sign, count in runs:
            if sign not in _FLIP:
                raise ValueError("bad sign %r" % (sign,))
            count = Ordinal.of(count)
            if count.is_zero():
                continue
            if merged and merged[-1][0] == sign:
                merged[-1] = (sign, ord_add(merged[-1][1], count))
            else:
                merged.append((sign, count))
        self.runs = tuple(merged)
        self._hash = None

    @classmethod
    def from_string(cls, text):
        """Finite expansion from a plain ``+-`` string."""
        return cls((ch, 1) for ch in text)

    def is_finite(self):
        return all(c.is_finite() for _, c in self.runs)

    def to_string(self):
        """Plain ``+-`` string (finite expansions only)."""
        if not self.is_finite():
            raise UnsupportedFragment("transfinite sign expansion has no plain string")
        return "".join(s * int(c) for s, c in self.runs)

    def __len__(self):
        raise TypeError("use se_rank(); the length is an ordinal")

    def __eq__(self, other):
        if not isinstance(other, SignExpansion):
            return NotImplemented
        return self.runs == other.runs

    def __lt__(self, other):
        return se_cmp(self, other) < 0

    def __le__(self, other):
        return se_cmp(self, other) <= 0

    def __gt__(self, other):
        return se_cmp(self, other) > 0

    def __ge__(self, other):
        return se_cmp(self, other) >= 0

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.runs)
        return self._hash

    def __neg__(self):
        return SignExpansion((_FLIP[s], c) for s, c in self.runs)

    def __add__(self, other):
        """Concatenation."""
        return SignExpansion(self.runs + other.runs)

    def __bool__(self):
        return bool(self.runs)

    def __repr__(self):
        return "SignExpansion(%r)" % format_signs(self)

    def __str__(self):
        return format_signs(self)

    # -- positional helpers --------------------------------------------

    def sign_at(self, pos):
        """Sign at ordinal position ``pos`` or None past the end."""
        start = ZERO
        for s, c in self.runs:
            end = ord_add(start, c)
            if ord_cmp(pos, end) < 0:
                return s
            start = end
        return None

    def prefix(self, length):
        """The initial segment of the given ordinal length."""
        length = Ordinal.of(length)
        out = []
        start = ZERO
        for s, c in self.runs:
            if not length or ord_cmp(start, length) >= 0:
                break
            end = ord_add(start, c)
            if ord_cmp(end, length) <= 0:
                out.append((s, c))
            else:
                out.append((s, ord_sub(length, start)))
                break
            start = end
        return SignExpansion(out)

    def append(self, sign, count=1):
        return SignExpansion(self.runs + ((sign, count),))

    def positive_count(self):
        """Ordinal number of plus signs."""
        total = ZERO
        for s, c in self.runs:
            if s == "+":
                total = ord_add(total, c)
        return total


def se_rank(a):
    total = ZERO
    for _, c in a.runs:
        total = ord_add(total, c)
    return total


def _walk(a, b):
    """Advance through a and b together.

    Returns ``(pos, sa, sb)`` where pos is the first position at which
    they differ (either sign differs or one has ended) and sa/sb the signs
    there (None for "ended"); sa == sb == None means equal.
    """
    ra, rb = list(a.runs), list(b.runs)
    i = j = 0
    pos = ZERO
    ca = ra[0][1] if ra else None
    cb = rb[0][1] if rb else None
    while i < len(ra) and j < len(rb):
        sa, sb = ra[i][0], rb[j][0]
        if sa != sb:
            return pos, sa, sb
        k = ord_cmp(ca, cb)
        if k == 0:
            pos = ord_add(pos, ca)
            i += 1
            j += 1
            ca = ra[i][1] if i < len(ra) else None
            cb = rb[j][1] if j < len(rb) else None
        elif k < 0:
            pos = ord_add(pos, ca)
            cb = ord_sub(cb, ca)
            i += 1
            ca = ra[i][1] if i < len(ra) else None
        else:
            pos = ord_add(pos, cb)
            ca = ord_sub(ca, cb)
            j += 1
            cb = rb[j][1] if j < len(rb) else None
    sa = ra[i][0] if i < len(ra) else None
    sb = rb[j][0] if j < len(rb) else None
    return pos, sa, sb


_RANK = {"-": 0, None: 1, "+": 2}


def se_cmp(a, b):
    """Lexicographic comparison with ``-`` < undefined < ``+``."""
    _, sa, sb = _walk(a, b)
    ka, kb = _RANK[sa], _RANK[sb]
    return (ka > kb) - (ka < kb)


def se_simpler(a, b):
    """True iff a is a strict initial segment of b."""
    _, sa, sb = _walk(a, b)
    return sa is None and sb is not None


def se_prefix_or_equal(a, b):
    _, sa, _ = _walk(a, b)
    return sa is None


def common_prefix(a, b):
    pos, _, _ = _walk(a, b)
    return a.prefix(pos)


def _first_sign_from(a, sign, start_at):
    """Position of the first ``sign`` in a at or after ordinal start_at."""
    start = ZERO
    for s, c in a.runs:
        end = ord_add(start, c)
        if s == sign and ord_cmp(end, start_at) > 0:
            return start if ord_cmp(start, start_at) >= 0 else start_at
        start = end
    return None


def _above(a):
    """Simplest expansion strictly above a."""
    p = _first_sign_from(a, "-", ZERO)
    return a.append("+") if p is None else a.prefix(p)


def _below(b):
    p = _first_sign_from(b, "+", ZERO)
    return b.append("-") if p is None else b.prefix(p)


def se_simplest_between(left, right, fuel=None):
    """Simplest expansion x with every l < x < every r (finite sets).

    ``fuel`` bounds the number of runs in the operands that may be
    scanned; exceeding it raises FuelExhausted.
    """
    left, right = list(left), list(right)
    if fuel is not None:
        used = sum(len(x.runs) for x in left + right)
        if used > fuel:
            raise FuelExhausted("cut operands hold %d runs, budget %d" % (used, fuel))
    a = b = None
    for x in left:
        if a is None or se_cmp(x, a) > 0:
            a = x
    for y in right:
        if b is None or se_cmp(y, b) < 0:
            b = y
    if a is not None and b is not None and se_cmp(a, b) >= 0:
        raise CutViolation(a, b)
    if a is None and b is None:
        return SignExpansion()
    if b is None:
        return _above(a)
    if a is None:
        return _below(b)
    pos, sa, sb = _walk(a, b)
    if sa is not None and sb is not None:
        # a has '-' and b has '+' at pos: the common prefix sits between
        return a.prefix(pos)
    if sa is None:
        # a is a prefix of b and b continues with '+'
        p = ord_add(pos, ONE)
        q = _first_sign_from(b, "+", p)
        return b.append("-") if q is None else b.prefix(q)
    p = ord_add(pos, ONE)
    q = _first_sign_from(a, "-", p)
    return a.append("+") if q is None else a.prefix(q)


def se_predecessors(a):
    """Strict prefixes of a split into (left, right) by the order.

    Only finite-rank inputs are accepted.
    """
    if not a.is_finite():
        raise UnsupportedFragment("transfinite expansion has infinitely many predecessors")
    s = a.to_string()
    left, right = [], []
    for n in range(len(s)):
        p = SignExpansion.from_string(s[:n])
        (left if s[n] == "+" else right).append(p)
    return left, right


# -- text form ---------------------------------------------------------

def format_signs(a, omega="w"):
    out = []
    for s, c in a.runs:
        if c.is_finite():
            out.append(s * int(c))
        else:
            out.append("(%s,%s)" % (s, format_ordinal(c, omega)))
    return "".join(out)


_RUN = re.compile(r"\(\s*([+-])\s*,([^()]*(?:\([^()]*(?:\([^()]*\))*[^()]*\))*[^()]*)\)|([+-])|(\s+)")


def parse_signs(text):
    """Parse ``+-+`` or ``(+,w)(-,1)`` forms; ``0`` or empty is the root."""
    stripped = text.strip()
    if stripped in ("", "0", "()"):
        return SignExpansion()
    runs = []
    pos = 0
    while pos < len(text):
        m = _RUN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("bad sign expansion", text, pos)
        if m.group(1):
            runs.append((m.group(1), parse_ordinal(m.group(2))))
        elif m.group(3):
            runs.append((m.group(3), ONE))
        pos = m.end()
    return SignExpansion(runs)
