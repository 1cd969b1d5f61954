from __future__ import annotations

from typing import List, Optional

from ..config import DEFAULT_CONFIG
from ..errors import RangeExceeded
from ..isogeny import IsogenyClass
from ..zeta import euler_product, extension_counts


def product_oracle(cls: IsogenyClass, n_max: int, max_degree: Optional[int] = None) -> List[int]:
    """c_0..c_{n_max} from prod_d (1 - u^d)^{b_d}, expanded with exact binomials.

    Independent of the recurrence: the only input is the closed-point counts b_d.
    """
    cap = DEFAULT_CONFIG.limits.product_max_degree if max_degree is None else max_degree
    if n_max > cap:
        raise RangeExceeded(f"product oracle truncation {n_max} exceeds the cap {cap}")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if n_max == 0:
        return [1]
    counts = extension_counts(cls, n_max)
    return euler_product(counts.closed_points, n_max, sign=1)
