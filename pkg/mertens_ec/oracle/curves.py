"""Long Weierstrass curves over small fields and the exhaustive trace census."""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from ..config import DEFAULT_CONFIG
from ..errors import ConsistencyError, FieldTooLarge, SingularCurve
from ..finite_field import FieldElement, FiniteField, PrimePower, field_of_order, prime_power
from ..isogeny import admissible_traces, hasse_range

log = logging.getLogger("mertens.census")


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    field: FiniteField
    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement

    @classmethod
    def from_ints(cls, field: FiniteField, a1=0, a2=0, a3=0, a4=0, a6=0) -> "WeierstrassCurve":
        return cls(field, field(a1), field(a2), field(a3), field(a4), field(a6))

    @property
    def b2(self) -> FieldElement:
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self) -> FieldElement:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> FieldElement:
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self) -> FieldElement:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def discriminant(self) -> FieldElement:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -(b2 * b2 * b8) - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def is_singular(self) -> bool:
        return self.discriminant.is_zero()

    def contains(self, x: FieldElement, y: FieldElement) -> bool:
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x * x * x + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs


def count_points(curve: WeierstrassCurve) -> Tuple[int, int]:
    """(N1, trace) by exhausting F_q^2, plus the point at infinity."""
    if curve.is_singular():
        raise SingularCurve(f"{curve} has zero discriminant")
    elements = list(curve.field.elements())
    affine = sum(1 for x in elements for y in elements if curve.contains(x, y))
    n1 = affine + 1
    return n1, curve.field.q + 1 - n1


@dataclass(frozen=True)
class TraceCensus:
    q: PrimePower
    realized_traces: List[int]
    counts: Dict[int, int]

    @property
    def curve_count(self) -> int:
        return sum(self.counts.values())

    def to_frame(self) -> pd.DataFrame:
        admissible = set(admissible_traces(self.q))
        return pd.DataFrame(
            [{"trace": t, "curves": self.counts[t], "admissible": t in admissible} for t in self.realized_traces],
            columns=["trace", "curves", "admissible"],
        )


class _Tables:
    """Addition/multiplication tables over element indices, built from FieldElement arithmetic."""

    def __init__(self, field: FiniteField):
        q = field.q
        elements = list(field.elements())
        self.q = q
        self.add = np.empty((q, q), dtype=np.int64)
        self.mul = np.empty((q, q), dtype=np.int64)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                self.add[i, j] = (x + y).index
                self.mul[i, j] = (x * y).index
        self.neg = np.array([(-x).index for x in elements], dtype=np.int64)
        self.const = {n: field(n).index for n in (2, 4, 8, 9, 27)}
        idx = np.arange(q)
        self.square = self.mul[idx, idx]
        self.cube = self.mul[self.square, idx]
        # solutions[b, c] = #{y : y^2 + b y = c}
        self.solutions = np.zeros((q, q), dtype=np.int64)
        for b in range(q):
            lhs = self.add[self.square, self.mul[b, idx]]
            np.add.at(self.solutions[b], lhs, 1)

    def sum(self, *terms):
        return reduce(lambda u, v: self.add[u, v], terms)

    def prod(self, *terms):
        return reduce(lambda u, v: self.mul[u, v], terms)


def _census_chunk(t: _Tables, a1: int) -> Counter:
    q = t.q
    a2, a3, a4, a6 = (g.ravel() for g in np.indices((q, q, q, q)))
    a1 = np.full(a2.shape, a1, dtype=np.int64)
    c = t.const

    b2 = t.sum(t.prod(a1, a1), t.prod(c[4], a2))
    b4 = t.sum(t.prod(c[2], a4), t.prod(a1, a3))
    b6 = t.sum(t.prod(a3, a3), t.prod(c[4], a6))
    b8 = t.sum(
        t.prod(a1, a1, a6),
        t.prod(c[4], a2, a6),
        t.neg[t.prod(a1, a3, a4)],
        t.prod(a2, a3, a3),
        t.neg[t.prod(a4, a4)],
    )
    disc = t.sum(
        t.neg[t.prod(b2, b2, b8)],
        t.neg[t.prod(c[8], b4, b4, b4)],
        t.neg[t.prod(c[27], b6, b6)],
        t.prod(c[9], b2, b4, b6),
    )
    keep = disc != 0

    affine = np.zeros(a2.shape, dtype=np.int64)
    for x in range(q):
        b = t.sum(t.prod(a1, x), a3)
        rhs = t.sum(t.cube[x], t.prod(a2, t.square[x]), t.prod(a4, x), a6)
        affine += t.solutions[b, rhs]
    traces = q - affine[keep]  # q + 1 - (affine + 1)
    values, counts = np.unique(traces, return_counts=True)
    return Counter({int(v): int(n) for v, n in zip(values, counts)})


def trace_census(
    q: Union[int, PrimePower],
    force: bool = False,
    threads: Optional[int] = None,
    max_order: Optional[int] = None,
    field_max_order: Optional[int] = None,
) -> TraceCensus:
    """Traces realised by every nonsingular long Weierstrass curve over F_q."""
    order = prime_power(q)
    cap = DEFAULT_CONFIG.limits.census_max_order if max_order is None else max_order
    if order.q > cap and not force:
        raise FieldTooLarge(f"census over F_{order.q} enumerates {order.q ** 5} curves; cap is q <= {cap}")
    field = field_of_order(order, max_order=field_max_order)
    tables = _Tables(field)

    total: Counter = Counter()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for a1, chunk in enumerate(pool.map(lambda a1: _census_chunk(tables, a1), range(order.q))):
            log.debug("q=%d a1=%d: %d nonsingular curves", order.q, a1, sum(chunk.values()))
            total.update(chunk)

    bound = hasse_range(order)
    outside = [t for t in total if t not in bound]
    if outside:
        raise ConsistencyError(f"census over F_{order.q} produced traces outside the Hasse range: {outside}")
    realized = sorted(total)
    log.debug("q=%d: %d curves, traces %s", order.q, sum(total.values()), realized)
    return TraceCensus(q=order, realized_traces=realized, counts=dict(sorted(total.items())))
