"""Named structure specs used by the tests and available from the CLI."""

from fractions import Fraction

from .coeffs import DYADICS, INTEGERS, generated_by, scaled
from .structures import (SECTION9_GROUP, SECTION9_IMAGE, StructureSpec, finite_set,
                         generated_monoid)

__all__ = ["FIXTURES", "INITIAL_DOMAINS", "NON_INITIAL"]

FIXTURES = {
    "integers": StructureSpec("group", finite_set([0]), {0: INTEGERS}),
    "dyadics": StructureSpec("group", finite_set([0]), {0: DYADICS}),
    "halves": StructureSpec("group", finite_set([0]), {0: scaled(1)}),
    "eighths": StructureSpec("group", finite_set([0]), {0: scaled(3)}),
    "section9": SECTION9_GROUP,
    "section9-image": SECTION9_IMAGE,
    "z-omega": StructureSpec("domain", generated_monoid([1]), default=INTEGERS),
    "d-omega": StructureSpec("domain", generated_monoid([1]), default=DYADICS),
    "z-plus-omega-d": StructureSpec("domain", generated_monoid([1]), {0: INTEGERS}, DYADICS),
    "z-domain": StructureSpec("domain", finite_set([0]), {0: INTEGERS}),
    "d-domain": StructureSpec("domain", finite_set([0]), {0: DYADICS}),
    "half-powers": StructureSpec("domain", generated_monoid([Fraction(1, 2)]), {0: INTEGERS}, DYADICS),
    "d-inverse-omega": StructureSpec("domain", generated_monoid([-1]), default=DYADICS),
    "four-exponents": StructureSpec("group", finite_set([-1, 0, 1, 2]), default=DYADICS),
    "naturals-d": StructureSpec("group", generated_monoid([1]), default=DYADICS),
    # not initial
    "thirds": StructureSpec("group", finite_set([0]), {0: generated_by([Fraction(1, 3)])}),
    "z-over-omega": StructureSpec("group", finite_set([0, -1]), {0: INTEGERS, -1: INTEGERS}),
    "not-monoid": StructureSpec("domain", finite_set([0, 1]), default=INTEGERS),
    "z-third-domain": StructureSpec("domain", finite_set([0]), {0: generated_by([Fraction(1, 3)])}),
    "half-gamma": StructureSpec("group", finite_set([0, Fraction(1, 2)]), default=DYADICS),
}

INITIAL_DOMAINS = ["z-omega", "d-omega", "z-plus-omega-d", "z-domain", "d-domain",
                   "half-powers", "d-inverse-omega"]

NON_INITIAL = ["thirds", "z-over-omega", "not-monoid", "z-third-domain", "half-gamma"]
