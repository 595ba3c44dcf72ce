"""Brute-force hook censuses over odd and distinct partitions.

``census_total`` and ``census_refined`` enumerate partitions one by one and
count hooks cell by cell; they are the ground truth that the generating
functions are tested against.

For the large unbounded scans (n up to 100 and beyond, every t up to 10)
enumeration in pure Python is too slow, so :func:`hook_totals` counts the
same quantity without listing partitions: a cell with arm ``a`` and leg
``l`` in a row of length ``k`` splits its partition into the rows above
(parts ``>= k``), the row itself, the ``l`` rows reaching column
``k - a`` and the rows below (parts ``< k - a``).  Each block is counted by
a small product of one-part factors.  The two routes are cross-checked in
the test suite.
"""
from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .errors import DomainError
from .partitions import PartitionClass, enumerate_partitions, hook_count

SIDES = ("odd", "distinct")


def side_class(side: str, L: Optional[int]) -> PartitionClass:
    """Odd parts at most ``2L - 1`` or distinct parts at most ``L``; ``L=None`` is unbounded."""
    if side == "odd":
        return PartitionClass.odd_bounded(L)
    if side == "distinct":
        return PartitionClass.distinct_bounded(L)
    raise DomainError(f"side must be 'odd' or 'distinct', got {side!r}")


@dataclass
class CensusTable:
    """Exact census values, indexed by ``n`` (totals) or ``(m, n)`` (refined)."""

    side: str
    L: Optional[int]
    n_max: int
    t: Optional[int] = None
    values: Union[list[int], dict[tuple[int, int], int]] = field(default_factory=list)

    @property
    def refined(self) -> bool:
        return isinstance(self.values, dict)

    def __getitem__(self, key):
        if self.refined:
            return self.values.get(key, 0)
        return self.values[key]

    def column_totals(self) -> list[int]:
        """Number of partitions of each ``n`` (refined tables only)."""
        out = [0] * (self.n_max + 1)
        for (_, n), v in self.values.items():
            out[n] += v
        return out

    def rows(self):
        if self.refined:
            return [(m, n, v) for (m, n), v in sorted(self.values.items(), key=lambda kv: (kv[0][1], kv[0][0]))]
        return list(enumerate(self.values))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", "value"] if self.refined else ["n", "value"])
        writer.writerows(self.rows())
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"side": self.side, "L": self.L, "n_max": self.n_max, "t": self.t,
                "rows": [list(r) for r in self.rows()]}


def census_total(side: str, t: int, L: Optional[int], n_max: int) -> CensusTable:
    """Entry ``n``: total number of hooks of length ``t`` over the class partitions of ``n``."""
    if t < 1:
        raise DomainError("t must be positive")
    cls = side_class(side, L)
    values = [sum(hook_count(p, t) for p in enumerate_partitions(n, cls))
              for n in range(n_max + 1)]
    return CensusTable(side, L, n_max, t, values)


def census_refined(side: str, L: Optional[int], n_max: int) -> CensusTable:
    """Entry ``(m, n)``: class partitions of ``n`` with exactly ``m`` hooks of length two."""
    cls = side_class(side, L)
    counts: Counter = Counter()
    for n in range(n_max + 1):
        for p in enumerate_partitions(n, cls):
            counts[(hook_count(p, 2), n)] += 1
    return CensusTable(side, L, n_max, None, dict(counts))


WEIGHTS: dict[str, Callable[[int], int]] = {
    "m": lambda m: m,
    "binom2": lambda m: math.comb(m, 2),
}


def weighted_census(table: CensusTable, weight="binom2") -> list[int]:
    if not table.refined:
        raise DomainError("weighted_census needs a refined table")
    w = WEIGHTS[weight] if isinstance(weight, str) else weight
    out = [0] * (table.n_max + 1)
    for (m, n), v in table.values.items():
        out[n] += w(m) * v
    return out


# --------------------------------------------------------------------------
# Counting without enumeration
# --------------------------------------------------------------------------

def _mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(n + 1 - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
    return out


def _times_factor(poly: list[int], part: int, distinct: bool, n: int) -> list[int]:
    """Multiply by the one-part factor ``1 + q^p`` (distinct) or ``1/(1 - q^p)``."""
    out = poly[:]
    if distinct:
        for s in range(n, part - 1, -1):
            out[s] += out[s - part]
    else:
        for s in range(part, n + 1):
            out[s] += out[s - part]
    return out


def _exact_parts(parts: list[int], count: int, distinct: bool, n: int) -> list[list[int]]:
    """``table[l][s]``: ways to pick ``l <= count`` parts from ``parts`` summing to ``s``."""
    table = [[0] * (n + 1) for _ in range(count + 1)]
    table[0][0] = 1
    for p in parts:
        if distinct:
            for l in range(count, 0, -1):
                prev, cur = table[l - 1], table[l]
                for s in range(n, p - 1, -1):
                    if prev[s - p]:
                        cur[s] += prev[s - p]
        else:
            for l in range(1, count + 1):
                prev, cur = table[l - 1], table[l]
                for s in range(p, n + 1):
                    if prev[s - p]:
                        cur[s] += prev[s - p]
    return table


def hook_totals(cls: PartitionClass, t_max: int, n_max: int) -> dict[int, list[int]]:
    """``{t: [total hooks of length t over class partitions of n] for n <= n_max}``.

    Same numbers as :func:`census_total`, computed by splitting each
    partition around the cell that carries the hook.
    """
    if cls.max_parts is not None or cls.min_part != 1:
        raise DomainError("hook_totals supports classes bounded only by parts and largest part")
    n = n_max
    allowed = cls.allowed_parts(n)
    allowed_set = set(allowed)
    distinct = cls.distinct
    top = allowed[-1] if allowed else 0

    # below[j]: class partitions with all parts < j
    below = [None] * (top + 2)
    poly = [1] + [0] * n
    for j in range(1, top + 2):
        below[j] = poly
        if j in allowed_set:
            poly = _times_factor(poly, j, distinct, n)
    # above[k]: class partitions with parts >= k (> k when distinct)
    above = [None] * (top + 2)
    poly = [1] + [0] * n
    for k in range(top, 0, -1):
        if distinct:
            above[k] = poly
        if k in allowed_set:
            poly = _times_factor(poly, k, distinct, n)
        if not distinct:
            above[k] = poly

    totals = {t: [0] * (n + 1) for t in range(1, t_max + 1)}
    for k in allowed:
        upper = [0] * k + above[k][: n + 1 - k]
        for a in range(0, min(t_max, k)):
            j = k - a
            hi = k if not distinct else k - 1
            mids = [p for p in allowed if j <= p <= hi]
            max_leg = t_max - 1 - a
            outer = _mul(upper, below[j], n)
            if not any(outer):
                continue
            mid_table = _exact_parts(mids, max_leg, distinct, n)
            for leg in range(max_leg + 1):
                mid = mid_table[leg]
                if not any(mid):
                    continue
                contrib = _mul(mid, outer, n)
                target = totals[a + leg + 1]
                for s, v in enumerate(contrib):
                    target[s] += v
    return totals


def hook_totals_side(side: str, t: int, L: Optional[int], n_max: int) -> list[int]:
    return hook_totals(side_class(side, L), t, n_max)[t]


def crossover_scan(t: int, n_max: int, *, method: str = "count"):
    """Largest ``n <= n_max`` with ``a_t(n) < b_t(n)`` (``-1`` if none) and the
    table of differences ``a_t(n) - b_t(n)``.

    ``method="count"`` uses :func:`hook_totals`; ``method="enumerate"``
    walks every partition.
    """
    if t < 1:
        raise DomainError("t must be positive")
    if method == "count":
        a = hook_totals_side("odd", t, None, n_max)
        b = hook_totals_side("distinct", t, None, n_max)
    elif method == "enumerate":
        a = census_total("odd", t, None, n_max).values
        b = census_total("distinct", t, None, n_max).values
    else:
        raise DomainError(f"unknown method {method!r}")
    diffs = [x - y for x, y in zip(a, b)]
    last = max((n for n, d in enumerate(diffs) if d < 0), default=-1)
    return last, diffs
