"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` pairs with strictly
decreasing exponents (themselves ordinals) and positive integer
coefficients.  Every finitely nested CNF expression denotes an ordinal
below epsilon_0, so the cap is enforced by construction.

Only the Cantorian (non-commutative) operations are provided.
"""

import re
from functools import total_ordering

from .errors import OrdinalRangeError, ParseError

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "ord_cmp",
    "ord_add",
    "ord_mul",
    "ord_sub",
    "ord_divmod_power",
    "omega_to",
    "is_add_indecomposable",
    "is_mul_indecomposable",
    "parse_ordinal",
]


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        terms = tuple(terms)
        prev = None
        for e, c in terms:
            if not isinstance(e, Ordinal):
                raise TypeError("exponent must be an Ordinal")
            if not isinstance(c, int) or c < 1:
                raise OrdinalRangeError("coefficients must be positive integers, got %r" % (c,))
            if prev is not None and not ord_cmp(e, prev) < 0:
                raise OrdinalRangeError("exponents must be strictly decreasing")
            prev = e
        self.terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = tuple(terms)
        obj._hash = None
        return obj

    @classmethod
    def of(cls, value):
        """Coerce an int or Ordinal."""
        if isinstance(value, Ordinal):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError("cannot make an ordinal from %r" % (value,))
        if value < 0:
            raise OrdinalRangeError("negative integer %d is not an ordinal" % value)
        if value == 0:
            return ZERO
        return cls._raw(((ZERO, value),))

    # -- predicates and accessors --------------------------------------

    def is_zero(self):
        return not self.terms

    def is_finite(self):
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def is_limit(self):
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def is_successor(self):
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def __int__(self):
        if not self.is_finite():
            raise OrdinalRangeError("%s is infinite" % self)
        return self.terms[0][1] if self.terms else 0

    @property
    def leading_exponent(self):
        if not self.terms:
            raise OrdinalRangeError("zero has no leading exponent")
        return self.terms[0][0]

    def finite_part(self):
        if self.terms and self.terms[-1][0].is_zero():
            return self.terms[-1][1]
        return 0

    # -- dunder plumbing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other < 0:
                return False
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other < 0:
                return False
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_cmp(self, other) < 0

    def __hash__(self):
        if self._hash is None:
            if self.is_finite():
                self._hash = hash(int(self))
            else:
                self._hash = hash(("ord", self.terms))
        return self._hash

    def __add__(self, other):
        return ord_add(self, Ordinal.of(other))

    def __radd__(self, other):
        return ord_add(Ordinal.of(other), self)

    def __mul__(self, other):
        return ord_mul(self, Ordinal.of(other))

    def __rmul__(self, other):
        return ord_mul(Ordinal.of(other), self)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "Ordinal(%s)" % self

    def __str__(self):
        return format_ordinal(self)


ZERO = Ordinal._raw(())
ONE = Ordinal._raw(((ZERO, 1),))
OMEGA = Ordinal._raw(((ONE, 1),))


def omega_to(e, coeff=1):
    """The ordinal omega^e * coeff."""
    e = Ordinal.of(e)
    if coeff == 0:
        return ZERO
    return Ordinal._raw(((e, coeff),))


def ord_cmp(a, b):
    ta, tb = a.terms, b.terms
    for (ea, ca), (eb, cb) in zip(ta, tb):
        if ea is not eb:
            c = ord_cmp(ea, eb)
            if c:
                return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(ta) == len(tb):
        return 0
    return -1 if len(ta) < len(tb) else 1


def ord_add(a, b):
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead = b.terms[0][0]
    keep = []
    for e, c in a.terms:
        k = ord_cmp(e, lead)
        if k > 0:
            keep.append((e, c))
        elif k == 0:
            keep.append((e, c + b.terms[0][1]))
            return Ordinal._raw(keep + list(b.terms[1:]))
        else:
            break
    return Ordinal._raw(keep + list(b.terms))


def ord_mul(a, b):
    if not a.terms or not b.terms:
        return ZERO
    a_lead, a_coeff = a.terms[0]
    out = ZERO
    for e, c in b.terms:
        if e.is_zero():
            piece = Ordinal._raw(((a_lead, a_coeff * c),) + a.terms[1:])
        else:
            piece = Ordinal._raw(((ord_add(a_lead, e), c),))
        out = ord_add(out, piece)
    return out


def ord_sub(b, a):
    """Left subtraction: the unique d with a + d == b (requires a <= b)."""
    if ord_cmp(a, b) > 0:
        raise OrdinalRangeError("cannot subtract %s from smaller %s" % (a, b))
    if not a.terms:
        return b
    ta, tb = a.terms, b.terms
    i = 0
    while i < len(ta) and i < len(tb) and ta[i] == tb[i]:
        i += 1
    if i == len(ta):
        return Ordinal._raw(tb[i:])
    # first difference: a's term is smaller (a < b)
    ea, ca = ta[i]
    eb, cb = tb[i]
    if ord_cmp(ea, eb) == 0:
        return Ordinal._raw(((eb, cb - ca),) + tb[i + 1:])
    return Ordinal._raw(tb[i:])


def ord_divmod_power(n, g):
    """Split n = omega^g * q + r with r < omega^g; returns (q, r)."""
    g = Ordinal.of(g)
    q, r = [], []
    for e, c in n.terms:
        if ord_cmp(e, g) >= 0:
            q.append((ord_sub(e, g), c))
        else:
            r.append((e, c))
    return Ordinal._raw(q), Ordinal._raw(r)


def ord_max(*xs):
    best = xs[0]
    for x in xs[1:]:
        if ord_cmp(x, best) > 0:
            best = x
    return best


def is_add_indecomposable(a):
    """True iff ``a`` is omega^phi for some ordinal phi."""
    a = Ordinal.of(a)
    if a.is_zero():
        raise OrdinalRangeError("additive indecomposability is defined for a > 0")
    return len(a.terms) == 1 and a.terms[0][1] == 1


def is_mul_indecomposable(a, form=False):
    """True iff mu * nu < a for all mu, nu < a (a > 1).

    Those ordinals are 2 and the ordinals omega^(omega^phi).  With
    ``form=True`` only the latter count, so 2 is reported False.
    """
    a = Ordinal.of(a)
    if ord_cmp(a, ONE) <= 0:
        raise OrdinalRangeError("multiplicative indecomposability is defined for a > 1")
    if a == 2:
        return not form
    if not is_add_indecomposable(a):
        return False
    e = a.terms[0][0]
    return not e.is_zero() and is_add_indecomposable(e)


# -- text form ---------------------------------------------------------

def format_ordinal(a, omega="w"):
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero():
            parts.append(str(c))
            continue
        if e == ONE:
            base = omega
        elif e.is_finite():
            base = "%s^%d" % (omega, int(e))
        else:
            base = "%s^(%s)" % (omega, format_ordinal(e, omega))
        parts.append(base if c == 1 else "%s*%d" % (base, c))
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def parse_ordinal(text):
    """Parse ``w^2*3 + w*1 + 5`` style CNF text (``ω`` also accepted)."""
    toks = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("sym", m.group(2), m.start(2)))
    toks.append(("end", None, len(text)))
    pos = [0]

    def peek():
        return toks[pos[0]]

    def take(kind, value=None):
        t = toks[pos[0]]
        if t[0] != kind or (value is not None and t[1] != value):
            raise ParseError("expected %s" % (value or kind), text, t[2])
        pos[0] += 1
        return t

    def expr():
        total = term()
        while peek()[:2] == ("sym", "+"):
            pos[0] += 1
            total = ord_add(total, term())
        return total

    def term():
        t = peek()
        if t[0] == "num":
            pos[0] += 1
            return Ordinal.of(t[1])
        if t[0] == "sym" and t[1] in ("w", "ω"):
            pos[0] += 1
            e = ONE
            if peek()[:2] == ("sym", "^"):
                pos[0] += 1
                if peek()[0] == "num":
                    e = Ordinal.of(take("num")[1])
                elif peek()[:2] == ("sym", "("):
                    pos[0] += 1
                    e = expr()
                    take("sym", ")")
                else:
                    e = term()
            c = 1
            if peek()[:2] == ("sym", "*"):
                pos[0] += 1
                c = take("num")[1]
            return omega_to(e, c)
        if t[0] == "sym" and t[1] == "(":
            pos[0] += 1
            v = expr()
            take("sym", ")")
            return v
        raise ParseError("unexpected %r" % (t[1],), text, t[2])

    value = expr()
    take("end")
    return value
