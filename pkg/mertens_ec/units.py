from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from .config import DEFAULT_CONFIG
from .surd import Surd

# Value kinds:
# - int: exact integer, emitted as a decimal string
# - ratio: float, emitted with precision.ratio_digits significant digits (15)
# - fraction: exact rational, emitted as "n/d"
# - surd: exact r*sqrt(d), emitted symbolically
# - bool / None pass through


def fmt_int(v: int) -> str:
    return str(int(v))


def fmt_ratio(v: float, digits: int = 0) -> str:
    digits = digits or DEFAULT_CONFIG.precision.ratio_digits
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if v == 0:
        return "0"
    return f"{v:.{digits}g}"


def fmt_fraction(v: Fraction) -> str:
    return str(v)


def fmt(value: Any, digits: int = 0) -> Any:
    """Serialise one payload value; exact library values never become floats."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return fmt_int(value)
    if isinstance(value, float):
        return fmt_ratio(value, digits)
    if isinstance(value, Fraction):
        return fmt_fraction(value)
    if isinstance(value, Surd):
        return str(value)
    if isinstance(value, dict):
        return {str(k): fmt(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [fmt(v, digits) for v in value]
    try:
        # numpy / pandas scalars
        return fmt(value.item(), digits)
    except Exception:
        return str(value)
