"""Surreal numbers in Conway normal form.

A :class:`Surreal` is a finite sum ``sum(w^y_i * r_i)`` with strictly
decreasing surreal exponents ``y_i`` and nonzero rational coefficients
``r_i``.  Arithmetic is Hahn-series arithmetic: the order is decided by
the leading term of the difference, addition merges like exponents, and
multiplication convolves.  Every constructor returns the canonical form.
"""

from fractions import Fraction
from functools import cmp_to_key
from math import floor

from .errors import FuelExhausted, OrdinalRangeError
from .ordinal import Ordinal

__all__ = [
    "Surreal",
    "ZERO",
    "ONE",
    "OMEGA",
    "srl_cmp",
    "srl_add",
    "srl_neg",
    "srl_sub",
    "srl_mul",
    "omega_power",
    "monomial",
    "truncations",
    "is_omnific",
    "oz_truncation",
    "from_ordinal",
    "to_ordinal",
    "HahnSeries",
    "to_hahn",
    "from_hahn",
]


def _coerce(x):
    if isinstance(x, Surreal):
        return x
    if isinstance(x, Ordinal):
        return from_ordinal(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Surreal.from_rational(x)
    raise TypeError("cannot make a surreal from %r" % (x,))


class Surreal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        acc = {}
        for exp, coeff in terms:
            exp = _coerce(exp)
            coeff = Fraction(coeff)
            acc[exp] = acc.get(exp, 0) + coeff
        items = [(e, c) for e, c in acc.items() if c != 0]
        items.sort(key=cmp_to_key(lambda s, t: srl_cmp(t[0], s[0])))
        self.terms = tuple(items)
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = tuple(terms)
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, r):
        r = Fraction(r)
        if r == 0:
            return ZERO
        return cls._raw(((ZERO, r),))

    # -- inspection ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_real(self):
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def real_value(self):
        """The rational value of a real surreal."""
        if not self.is_real():
            raise ValueError("%s is not real" % self)
        return self.terms[0][1] if self.terms else Fraction(0)

    def is_ordinal(self):
        return all(c > 0 and c.denominator == 1 and e.is_ordinal() for e, c in self.terms)

    def sign(self):
        if not self.terms:
            return 0
        return 1 if self.terms[0][1] > 0 else -1

    @property
    def leading_exponent(self):
        return self.terms[0][0]

    def depth(self):
        """Nesting depth of the exponent tree (0 for reals)."""
        if self.is_real():
            return 0
        return 1 + max(e.depth() for e, _ in self.terms)

    def coefficient(self, exponent):
        exponent = _coerce(exponent)
        for e, c in self.terms:
            if e == exponent:
                return c
        return Fraction(0)

    # -- dunder plumbing -----------------------------------------------

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_real():
                self._hash = hash(self.real_value())
            else:
                self._hash = hash(self.terms)
        return self._hash

    def __lt__(self, other):
        return srl_cmp(self, _coerce(other)) < 0

    def __le__(self, other):
        return srl_cmp(self, _coerce(other)) <= 0

    def __gt__(self, other):
        return srl_cmp(self, _coerce(other)) > 0

    def __ge__(self, other):
        return srl_cmp(self, _coerce(other)) >= 0

    def __neg__(self):
        return srl_neg(self)

    def __pos__(self):
        return self

    def __add__(self, other):
        return srl_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return srl_sub(self, _coerce(other))

    def __rsub__(self, other):
        return srl_sub(_coerce(other), self)

    def __mul__(self, other):
        return srl_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "Surreal(%r)" % format_surreal(self)

    def __str__(self):
        return format_surreal(self)


ZERO = Surreal._raw(())
ONE = Surreal._raw(((ZERO, Fraction(1)),))
OMEGA = Surreal._raw(((ONE, Fraction(1)),))


def srl_cmp(x, y):
    """Order of No transported from the Hahn-series order."""
    tx, ty = x.terms, y.terms
    for (ex, cx), (ey, cy) in zip(tx, ty):
        if ex is not ey:
            k = srl_cmp(ex, ey)
            if k > 0:
                return 1 if cx > 0 else -1
            if k < 0:
                return -1 if cy > 0 else 1
        if cx != cy:
            return 1 if cx > cy else -1
    n = min(len(tx), len(ty))
    if len(tx) > n:
        return 1 if tx[n][1] > 0 else -1
    if len(ty) > n:
        return -1 if ty[n][1] > 0 else 1
    return 0


def srl_add(x, y):
    if not x.terms:
        return y
    if not y.terms:
        return x
    out = []
    i = j = 0
    tx, ty = x.terms, y.terms
    while i < len(tx) and j < len(ty):
        k = srl_cmp(tx[i][0], ty[j][0])
        if k > 0:
            out.append(tx[i])
            i += 1
        elif k < 0:
            out.append(ty[j])
            j += 1
        else:
            c = tx[i][1] + ty[j][1]
            if c:
                out.append((tx[i][0], c))
            i += 1
            j += 1
    out.extend(tx[i:])
    out.extend(ty[j:])
    return Surreal._raw(out)


def srl_neg(x):
    return Surreal._raw((e, -c) for e, c in x.terms)


def srl_sub(x, y):
    return srl_add(x, srl_neg(y))


def srl_mul(x, y, fuel=None):
    """Hahn convolution of two normal forms.

    ``fuel`` caps the exponent nesting depth of the result.
    """
    if not x.terms or not y.terms:
        return ZERO
    acc = {}
    for ex, cx in x.terms:
        for ey, cy in y.terms:
            e = srl_add(ex, ey)
            acc[e] = acc.get(e, 0) + cx * cy
    result = Surreal((e, c) for e, c in acc.items())
    if fuel is not None and result.depth() > fuel:
        raise FuelExhausted("product nesting depth %d exceeds %d" % (result.depth(), fuel))
    return result


def monomial(y, r=1):
    """The single term w^y * r."""
    r = Fraction(r)
    if r == 0:
        return ZERO
    return Surreal._raw(((_coerce(y), r),))


def omega_power(y):
    """The leader w^y."""
    return monomial(y, 1)


def truncations(x):
    """All proper truncations of x's normal form, shortest first."""
    return [Surreal._raw(x.terms[:k]) for k in range(len(x.terms))]


# -- ordinals ----------------------------------------------------------

def from_ordinal(a):
    a = Ordinal.of(a)
    return Surreal._raw((from_ordinal(e), Fraction(c)) for e, c in a.terms)


def to_ordinal(x):
    if not x.is_ordinal():
        raise OrdinalRangeError("%s is not an ordinal" % x)
    return Ordinal((to_ordinal(e), int(c)) for e, c in x.terms)


# -- omnific integers --------------------------------------------------

def is_omnific(x):
    """True iff x is an omnific integer: exponents >= 0, integer constant."""
    for e, c in x.terms:
        s = e.sign()
        if s < 0:
            return False
        if s == 0 and c.denominator != 1:
            return False
    return True


def oz_truncation(a):
    """An omnific integer b with b - 1 < a < b + 1 that is simpler than a.

    Terms with positive exponent are kept, negative-exponent terms are
    dropped, and the constant becomes the largest integer strictly below
    it.  When the constant is an integer and the dropped infinitesimal
    tail is positive, that choice would leave a >= b + 1, so the constant
    itself is kept instead.
    """
    if is_omnific(a):
        return a
    out = []
    tail = [(e, c) for e, c in a.terms if e.sign() < 0]
    for e, c in a.terms:
        s = e.sign()
        if s > 0:
            out.append((e, c))
        elif s == 0:
            if c.denominator != 1:
                n = floor(c)
            elif tail and tail[0][1] > 0:
                n = int(c)
            else:
                n = int(c) - 1
            if n:
                out.append((e, Fraction(n)))
    return Surreal._raw(out)


# -- Hahn series -------------------------------------------------------

class HahnSeries:
    """An element of R((t^No)) with finite support: sum of r * t^y."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        for coeff, exp in terms:
            exp = _coerce(exp)
            acc[exp] = acc.get(exp, 0) + Fraction(coeff)
        items = [(c, e) for e, c in acc.items() if c != 0]
        items.sort(key=cmp_to_key(lambda s, t: srl_cmp(t[1], s[1])))
        self.terms = tuple(items)

    def __eq__(self, other):
        if not isinstance(other, HahnSeries):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(("hahn", self.terms))

    def __add__(self, other):
        return HahnSeries(self.terms + other.terms)

    def __mul__(self, other):
        return HahnSeries((a * b, srl_add(x, y)) for a, x in self.terms for b, y in other.terms)

    def __repr__(self):
        if not self.terms:
            return "HahnSeries(0)"
        return "HahnSeries(%s)" % " + ".join("%s*t^(%s)" % (c, e) for c, e in self.terms)


def to_hahn(x):
    return HahnSeries((c, e) for e, c in x.terms)


def from_hahn(h):
    return Surreal._raw((e, c) for c, e in h.terms)


# -- text --------------------------------------------------------------

def _fmt_rat(r):
    return str(r.numerator) if r.denominator == 1 else "%d/%d" % (r.numerator, r.denominator)


def format_surreal(x, omega="w", explicit=False):
    """Deterministic normal-form text, reparseable by the expression parser.

    ``explicit`` prints every term as ``w^(e)*c``, including 1s and w^(0).
    """
    if not x.terms:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(x.terms):
        mag = abs(c)
        if explicit:
            fmt = "%s^(%s)*%s" if mag.denominator == 1 else "%s^(%s)*(%s)"
            body = fmt % (omega, format_surreal(e, omega), _fmt_rat(mag))
        elif e.is_zero():
            body = _fmt_rat(mag)
        else:
            if e == ONE:
                base = omega
            elif e.is_real() and e.real_value() > 0 and e.real_value().denominator == 1:
                base = "%s^%d" % (omega, e.real_value())
            else:
                base = "%s^(%s)" % (omega, format_surreal(e, omega))
            if mag == 1:
                body = base
            elif mag.denominator == 1:
                body = "%s*%s" % (base, _fmt_rat(mag))
            else:
                body = "%s*(%s)" % (base, _fmt_rat(mag))
        if idx == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
