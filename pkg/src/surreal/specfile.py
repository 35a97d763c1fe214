"""Text format for structure specs.

One directive per line (or per ``;``-separated chunk); ``#`` starts a
comment::

    kind: group
    gamma: finite {0, -1}
    coeff 0 => dyadics
    coeff -1 => integers

``gamma`` is ``finite {...}``, ``monoid {...}`` or ``group {...}`` with
members in the expression grammar; an optional ``below: expr`` bounds a
generated class.  Descriptors are ``trivial``, ``integers``, ``dyadics``,
``scaled(m)``, ``dyadics+{r, ...}`` and ``gen{r, ...}``.  ``default =>``
gives the descriptor for exponents without their own ``coeff`` line.
"""

import re

from . import coeffs
from .conway import format_surreal
from .errors import ParseError, PreconditionError
from .lang import evaluate, parse_expr
from .structures import ExponentClassDesc, StructureSpec

__all__ = ["parse_spec", "format_spec", "parse_descriptor", "verdict_record"]


def _split_top(text):
    """Split on commas that are not nested inside brackets."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        parts.append(cur)
    return [p.strip() for p in parts]


def _values(text, line, offset):
    out = []
    for part in _split_top(text):
        try:
            out.append(evaluate(parse_expr(part)))
        except ParseError as exc:
            raise ParseError("in %r: %s" % (part, exc.message), line, offset) from None
    return out


_DESC = re.compile(r"^(trivial|integers|dyadics|scaled\s*\(\s*(\d+)\s*\)|"
                   r"(dyadics\s*\+|gen)\s*\{(.*)\})$", re.DOTALL)


def parse_descriptor(text, line=None, offset=0):
    text = text.strip()
    m = _DESC.match(text)
    if not m:
        raise ParseError("unknown coefficient descriptor %r" % text, line or text, offset)
    word = m.group(1)
    if word == "trivial":
        return coeffs.TRIVIAL
    if word == "integers":
        return coeffs.INTEGERS
    if word == "dyadics":
        return coeffs.DYADICS
    if m.group(2) is not None:
        return coeffs.scaled(int(m.group(2)))
    gens = []
    for v in _values(m.group(4), line or text, offset):
        if not v.is_real() or v.is_zero():
            raise ParseError("generators must be nonzero rationals", line or text, offset)
        gens.append(v.real_value())
    if m.group(3).startswith("gen"):
        if not gens:
            raise ParseError("gen{...} needs at least one generator", line or text, offset)
        return coeffs.generated_by(gens)
    return coeffs.dyadics_plus(gens)


_GAMMA = re.compile(r"^(finite|monoid|group)\s*\{(.*)\}$", re.DOTALL)


def _chunks(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        for piece in body.split(";"):
            if piece.strip():
                yield lineno, piece.strip()


def parse_spec(text):
    kind = gamma = below = default = None
    entries = []
    for lineno, chunk in _chunks(text):
        if chunk.startswith("kind:"):
            kind = chunk[5:].strip()
            if kind not in ("group", "domain"):
                raise ParseError("kind must be group or domain", chunk, 5)
        elif chunk.startswith("gamma:"):
            m = _GAMMA.match(chunk[6:].strip())
            if not m:
                raise ParseError("gamma must be finite/monoid/group {...}", chunk, 6)
            gamma = (m.group(1), _values(m.group(2), chunk, 6))
        elif chunk.startswith("below:"):
            below = _values(chunk[6:], chunk, 6)[0]
        elif chunk.startswith("default"):
            _, _, rhs = chunk.partition("=>")
            if not rhs:
                raise ParseError("expected 'default => descriptor'", chunk, len(chunk))
            default = parse_descriptor(rhs, chunk, chunk.index("=>") + 2)
        elif chunk.startswith("coeff"):
            lhs, arrow, rhs = chunk[5:].partition("=>")
            if not arrow:
                raise ParseError("expected 'coeff exponent => descriptor'", chunk, len(chunk))
            exps = _values(lhs, chunk, 5)
            if len(exps) != 1:
                raise ParseError("one exponent per coeff line", chunk, 5)
            entries.append((exps[0], parse_descriptor(rhs, chunk, chunk.index("=>") + 2)))
        else:
            raise ParseError("unknown directive (line %d)" % lineno, chunk, 0)
    if kind is None or gamma is None:
        raise PreconditionError("a spec needs both 'kind:' and 'gamma:'")
    if below is not None and gamma[0] == "finite":
        raise PreconditionError("'below:' applies to generated classes only")
    g = ExponentClassDesc(gamma[0], tuple(gamma[1]), below)
    return StructureSpec(kind, g, tuple(entries), default)


def format_spec(spec):
    g = spec.gamma
    lines = ["kind: %s" % spec.kind,
             "gamma: %s {%s}" % (g.variant, ", ".join(format_surreal(e) for e in g.elements))]
    if g.below is not None:
        lines.append("below: %s" % format_surreal(g.below))
    for y, d in spec.coeff:
        lines.append("coeff %s => %s" % (format_surreal(y), coeffs.format_coeff(d)))
    if spec.default is not None:
        lines.append("default => %s" % coeffs.format_coeff(spec.default))
    return "\n".join(lines) + "\n"


def verdict_record(v):
    """Plain-dict form of a Verdict for structured output."""
    return {
        "status": v.status,
        "condition": v.condition,
        "witness": {k: format_surreal(x) for k, x in v.witness},
        "note": v.note,
    }
