"""Exception hierarchy with machine-readable codes.

Every error carries a short ``code`` (stable across releases, used by the
CLI diagnostics) and a ``details`` dict naming the first violated law or
the offending elements.
"""

from __future__ import annotations

from typing import Any


class FiltrumError(Exception):
    code = "error"

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.details = details

    def as_dict(self) -> dict[str, Any]:
        return {"code": self.code, "message": str(self), "details": self.details}


class ValidationError(FiltrumError):
    """A structure failed one of its defining laws."""

    code = "validation"


class ShapeError(ValidationError):
    code = "shape"


class NonAssociative(ValidationError):
    code = "non_associative"


class NonCommutative(ValidationError):
    code = "non_commutative"


class BadIdentity(ValidationError):
    code = "bad_identity"


class BadZero(ValidationError):
    code = "bad_zero"


class IndexOutOfRange(ValidationError):
    code = "index_out_of_range"


class NoZeroElement(ValidationError):
    code = "no_zero_element"


class ZeroEqualsOne(ValidationError):
    code = "zero_equals_one"


class NotAFilter(ValidationError):
    code = "not_a_filter"


class NotMultiplicativelyClosed(ValidationError):
    code = "not_multiplicatively_closed"


class NotPseudoideal(ValidationError):
    code = "not_pseudoideal"


class NotDisjoint(ValidationError):
    code = "not_disjoint"


class CarrierMismatch(ValidationError):
    code = "carrier_mismatch"


class SizeOverflow(ValidationError):
    code = "size_overflow"


class NotAnIdeal(ValidationError):
    code = "not_an_ideal"


class NotBoolean(ValidationError):
    code = "not_boolean"


class ZeroRing(ValidationError):
    code = "zero_ring"


class NotClosedUnderOps(ValidationError):
    code = "not_closed_under_ops"


class NotContinuous(ValidationError):
    code = "not_continuous"


class TypeMismatch(ValidationError):
    code = "type_mismatch"


class ArityMismatch(ValidationError):
    code = "arity_mismatch"


class EmptyList(ValidationError):
    code = "empty_list"


class DivisionByZero(ValidationError):
    code = "division_by_zero"


class ZeroElement(ValidationError):
    code = "zero_element"


class BadBound(ValidationError):
    code = "bad_bound"


class CapExceeded(FiltrumError):
    """An enumeration would exceed the configured size cap."""

    code = "cap_exceeded"
