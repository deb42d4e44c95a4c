__doc__ = """Errors, record objects and integer helpers shared by every submodule.

The exception classes map onto the command line exit codes, :class:`Bunch`
is the base of every result record, and the helpers cover squarefree
parts, valuations and the comma separated polynomial format.
"""
# -------------------------------------------------------
# Errors, records and integer arithmetic
# -------------------------------------------------------

import json
from collections import OrderedDict
from fractions import Fraction

import numpy as np
from sympy import factorint, integer_nthroot, multiplicity

# -------------------------------------------------------
# Custom exceptions
# -------------------------------------------------------

class RecipError(Exception):
    """Base class for errors raised by recipgalois."""


class ShapeError(RecipError, ValueError):
    """Input has the wrong degree, symmetry or layout."""


class DomainError(RecipError, ValueError):
    """Input lies outside the domain of an operation (zero polynomial,
    non-prime modulus, ...)."""


class SeparabilityError(RecipError):
    """Polynomial is not separable (or degenerate), so the square
    conditions do not apply."""


class ResourceError(RecipError):
    """An enumeration, transform or factorization budget was exceeded."""

    def __init__(self, message, checkpoint=None):
        super(ResourceError, self).__init__(message)
        self.checkpoint = checkpoint


class VerificationError(RecipError):
    """An invariant suite reported a failure."""

# -------------------------------------------------------
# Useful Classes
# -------------------------------------------------------

class Bunch:
    """Classic bunch object for constructing records.

    Subclasses list their attributes, in output order, in ``_fields``
    together with defaults in ``_defaults``.
    """
    _fields = ()
    _defaults = {}

    def __init__(self, **kwds):
        for key in self._fields:
            setattr(self, key, self._defaults.get(key))
        unknown = set(kwds) - set(self._fields)
        if unknown:
            raise TypeError("Unknown fields for {}: {}".format(
                type(self).__name__, sorted(unknown)))
        self.__dict__.update(kwds)

    def update(self, **kwargs):
        """Update fields, casting values to the type of the current value."""
        types = dict([(key, type(val)) for key, val in self.__dict__.items()])
        for key, value in kwargs.items():
            if key not in self._fields:
                raise TypeError("Unknown field {}".format(key))
            if value is None or self.__dict__[key] is None:
                typed_val = value
            elif types[key] == bool and isinstance(value, str):
                typed_val = value.lower() in ("1", "true", "yes", "on")
            else:
                typed_val = types[key](value)
            setattr(self, key, typed_val)
        return self

    def to_dict(self):
        """Fields as an ordered dictionary."""
        return OrderedDict((key, getattr(self, key)) for key in self._fields)

    def to_json(self, **kwargs):
        return json.dumps(jsonable(self.to_dict()), **kwargs)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        body = ", ".join("{}={!r}".format(k, v) for k, v in self.to_dict().items())
        return "{}({})".format(type(self).__name__, body)

# -------------------------------------------------------
# Useful methods
# -------------------------------------------------------

def jsonable(obj):
    """Convert nested records, Fractions, numpy scalars and tuples into
    plain JSON types. Rationals become strings like "3/4"."""
    if isinstance(obj, Bunch):
        return jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return OrderedDict((str(k), jsonable(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    return obj


def parse_coefficients(text):
    """Parse the comma separated, ascending coefficient format, e.g.
    "1,3,1" for 1 + 3x + x^2.
    """
    text = text.strip()
    if text in ("", "0"):
        return []
    try:
        coeffs = [int(c) for c in text.split(",")]
    except ValueError:
        raise ShapeError("Malformed polynomial text: {!r}".format(text))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def format_coefficients(coeffs):
    """Inverse of parse_coefficients."""
    if len(coeffs) == 0:
        return "0"
    return ",".join(str(int(c)) for c in coeffs)


def isqrt_exact(m):
    """Return the integer square root of m if m is a perfect square,
    otherwise None."""
    if m < 0:
        return None
    root, exact = integer_nthroot(m, 2)
    if exact:
        return int(root)
    return None


def squarefree_part(m):
    """Signed squarefree part of a nonzero integer: m = s * k**2 with s
    squarefree, sign carried by s."""
    if m == 0:
        raise DomainError("Squarefree part of 0 is undefined.")
    s = -1 if m < 0 else 1
    for p, e in factorint(abs(m)).items():
        if e % 2 == 1:
            s *= p
    return s


def valuation(m, p):
    """p-adic valuation of a nonzero integer."""
    if m == 0:
        raise DomainError("Valuation of 0 is infinite.")
    return int(multiplicity(p, abs(m)))
