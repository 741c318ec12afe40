"""Exact rational scalar backend.

All coordinates, radii and distances in this package are exact rationals.
Two interchangeable backends provide the scalar type:

* ``gmpy2.mpq`` -- a compiled (GMP-backed) rational, much faster on the
  big-numerator arithmetic the distance solvers produce;
* ``fractions.Fraction`` -- the pure-Python fallback.

The backend is selected once at import time via the ``HLAB_SCALAR_BACKEND``
environment variable (``auto``, ``gmpy2`` or ``fraction``).  Both types keep
values in lowest terms with positive denominators and interoperate with
Python ints, so the rest of the package is backend-agnostic.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Any

Rat = Any  # gmpy2.mpq or fractions.Fraction

_requested = os.environ.get("HLAB_SCALAR_BACKEND", "auto").lower()

if _requested not in ("auto", "gmpy2", "fraction"):
    raise RuntimeError(
        "HLAB_SCALAR_BACKEND must be 'auto', 'gmpy2' or 'fraction', "
        f"got {_requested!r}"
    )

if _requested in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as _mpq

        BACKEND = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise
        BACKEND = "fraction"
else:
    BACKEND = "fraction"

if BACKEND == "gmpy2":

    def rat(numerator: Any, denominator: Any = 1) -> Rat:
        """Build an exact rational from ints, a Fraction, or a 'p/q' string."""
        if isinstance(numerator, Fraction):
            return _mpq(numerator.numerator, numerator.denominator * denominator)
        if isinstance(numerator, str):
            return _mpq(numerator) / denominator
        return _mpq(numerator, denominator)

else:

    def rat(numerator: Any, denominator: Any = 1) -> Rat:
        """Build an exact rational from ints, a Fraction, or a 'p/q' string."""
        return Fraction(numerator) / denominator if denominator != 1 else Fraction(numerator)


R0: Rat = rat(0)
R1: Rat = rat(1)


def rat_floor(q: Rat) -> int:
    """Largest integer <= q."""
    return int(q.numerator) // int(q.denominator)


def rat_ceil(q: Rat) -> int:
    """Smallest integer >= q."""
    return -((-int(q.numerator)) // int(q.denominator))


def as_fraction(q: Rat) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def format_rat(q: Rat) -> str:
    """Canonical string form: 'p' for integers, 'p/q' otherwise."""
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"
