"""Size caps for enumeration-backed operations.

Validation never caps; anything that walks a powerset does.  The closure
enumeration is polynomial in the number of filters and is allowed up to
ENUM_CAP elements; the full subset scan is 2^|M| and gets its own, lower
cap.  ``FILTRUM_ENUM_CAP`` overrides the former at process start-up.
"""

from __future__ import annotations

import os

from .errors import CapExceeded

DEFAULT_ENUM_CAP = 24
DEFAULT_SCAN_CAP = 20
DEFAULT_SPACE_CAP = 4096  # materialized open-set families


def enum_cap() -> int:
    raw = os.environ.get("FILTRUM_ENUM_CAP")
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_ENUM_CAP
    return value if value > 0 else DEFAULT_ENUM_CAP


def scan_cap() -> int:
    return min(DEFAULT_SCAN_CAP, enum_cap())


def check_enum_cap(size: int, what: str) -> None:
    cap = enum_cap()
    if size > cap:
        raise CapExceeded(f"{what}: size {size} exceeds cap {cap}", size=size, cap=cap)


def check_scan_cap(size: int, what: str) -> None:
    cap = scan_cap()
    if size > cap:
        raise CapExceeded(f"{what}: size {size} exceeds scan cap {cap}", size=size, cap=cap)
