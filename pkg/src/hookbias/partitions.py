"""Integer partitions, Young-diagram geometry and hook lengths.

A :class:`Partition` is an immutable, non-increasing tuple of positive
integers.  Families of partitions (odd parts with a bound on the largest
part, distinct parts, ...) are described by :class:`PartitionClass`, which
knows both its membership predicate and how to enumerate its members of a
given size.
"""
from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional

from .errors import DomainError


class Partition(tuple):
    """A non-increasing sequence of positive integers.

    >>> p = Partition((5, 3, 2))
    >>> p.size, p.num_parts, p.largest_part
    (10, 3, 5)
    >>> Partition()
    Partition()
    """

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise DomainError(f"parts must be integers, got {p!r}")
            if p <= 0:
                raise DomainError(f"parts must be positive, got {p}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # Skips validation; callers guarantee a valid part sequence.
        return tuple.__new__(cls, parts)

    @cached_property
    def size(self) -> int:
        return sum(self)

    @property
    def num_parts(self) -> int:
        return len(self)

    @property
    def largest_part(self) -> int:
        return self[0] if self else 0

    def is_odd(self) -> bool:
        return all(p % 2 for p in self)

    def is_distinct(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self):
        return format_partition(self)


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated literal such as ``"7,5,3,3"``; ``"-"`` is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise DomainError(f"malformed partition literal: {text!r}") from None
    return Partition(parts)


def format_partition(pi) -> str:
    return ",".join(map(str, pi)) if len(pi) else "-"


# --------------------------------------------------------------------------
# Diagram geometry
# --------------------------------------------------------------------------

def conjugate(pi) -> Partition:
    """Return the conjugate partition (rows and columns exchanged).

    >>> conjugate(Partition((5, 3, 2)))
    Partition(3, 3, 2, 1, 1)
    """
    if not pi:
        return Partition()
    cols = [0] * pi[0]
    for part in pi:
        for j in range(part):
            cols[j] += 1
    return Partition._trusted(cols)


def hook_length(pi, i: int, j: int) -> int:
    """Hook length of the cell in row ``i``, column ``j`` (both 1-based)."""
    if i < 1 or j < 1 or i > len(pi) or j > pi[i - 1]:
        raise DomainError(f"({i}, {j}) is not a cell of {tuple(pi)}")
    conj = conjugate(pi)
    return pi[i - 1] + conj[j - 1] - i - j + 1


def hook_lengths(pi) -> list[list[int]]:
    """All hook lengths, row by row."""
    conj = conjugate(pi)
    return [[part + conj[j] - i - j - 1 for j in range(part)]
            for i, part in enumerate(pi)]


def hook_count(pi, t: int) -> int:
    """Number of cells of ``pi`` whose hook length is exactly ``t``."""
    if t < 1:
        raise DomainError("hook length t must be positive")
    if not pi:
        return 0
    conj = conjugate(pi)
    count = 0
    for i, part in enumerate(pi):
        # hook length decreases along a row, so scan from the row end
        for j in range(part - 1, -1, -1):
            h = part + conj[j] - i - j - 1
            if h == t:
                count += 1
            elif h > t:
                break
    return count


def alternating_sum(pi) -> int:
    """``pi[0] - pi[1] + pi[2] - ...``; zero for the empty partition."""
    return sum(pi[0::2]) - sum(pi[1::2])


def hook2_profile_odd(pi) -> int:
    """Hooks of length two in a partition into odd parts, counted from multiplicities.

    Equals the number of part sizes greater than one plus the number of part
    sizes that repeat.
    """
    if any(p % 2 == 0 for p in pi):
        raise DomainError(f"{tuple(pi)} has an even part")
    mult = Counter(pi)
    return sum(1 for p in mult if p > 1) + sum(1 for c in mult.values() if c >= 2)


def hook2_profile_distinct(pi) -> int:
    """Hooks of length two in a partition into distinct parts: the gaps of at least two."""
    if not Partition(pi).is_distinct():
        raise DomainError(f"{tuple(pi)} has a repeated part")
    padded = list(pi) + [0]
    return sum(1 for a, b in zip(padded, padded[1:]) if a - b >= 2)


def render_young(pi, labels: Optional[str] = None) -> str:
    """ASCII Young diagram; ``labels="hooks"`` writes each cell's hook length.

    >>> print(render_young(Partition((3, 1)), labels="hooks"))
    |4|2|1|
    |1|
    """
    if not pi:
        return ""
    if labels is None:
        return "\n".join("|" + "_|" * part for part in pi)
    if labels not in ("hooks", "hook-lengths"):
        raise DomainError(f"unknown label mode {labels!r}")
    rows = hook_lengths(pi)
    width = len(str(rows[0][0]))
    return "\n".join("|" + "".join(f"{h:>{width}}|" for h in row) for row in rows)


# --------------------------------------------------------------------------
# Partition classes and enumeration
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionClass:
    """A family of partitions closed under nothing in particular.

    ``max_part`` and ``max_parts`` of ``None`` mean unbounded.  The empty
    partition belongs to every class.
    """

    name: str
    odd: bool = False
    distinct: bool = False
    min_part: int = 1
    max_part: Optional[int] = None
    max_parts: Optional[int] = None

    # factories ------------------------------------------------------------
    @classmethod
    def unrestricted(cls):
        return cls("Unrestricted")

    @classmethod
    def odd_bounded(cls, L: Optional[int]):
        """Odd parts, largest part at most ``2L - 1`` (``L=None``: unbounded)."""
        if L is None:
            return cls.odd_unbounded()
        return cls(f"OddBounded({L})", odd=True, max_part=2 * L - 1)

    @classmethod
    def distinct_bounded(cls, L: Optional[int]):
        if L is None:
            return cls.distinct_unbounded()
        return cls(f"DistinctBounded({L})", distinct=True, max_part=L)

    @classmethod
    def odd_unbounded(cls):
        return cls("OddUnbounded", odd=True)

    @classmethod
    def distinct_unbounded(cls):
        return cls("DistinctUnbounded", distinct=True)

    @classmethod
    def box(cls, max_part: int, max_parts: int):
        return cls(f"BoxBounded({max_part},{max_parts})", max_part=max_part,
                   max_parts=max_parts)

    @classmethod
    def blue_a(cls, L: int):
        return cls(f"BlueA({L})", odd=True, max_part=2 * L - 1)

    @classmethod
    def red_a(cls, L: int):
        return cls(f"RedA({L})", odd=True, max_part=2 * L - 3, max_parts=1)

    @classmethod
    def blue_b(cls, L: int):
        return cls(f"BlueB({L})", distinct=True, min_part=2, max_part=L - 1)

    @classmethod
    def red_b(cls, L: int):
        return cls(f"RedB({L})", max_part=L - 2, max_parts=1)

    # predicate ------------------------------------------------------------
    def contains(self, pi) -> bool:
        if not pi:
            return True
        if self.max_parts is not None and len(pi) > self.max_parts:
            return False
        if self.max_part is not None and pi[0] > self.max_part:
            return False
        if pi[-1] < self.min_part:
            return False
        if self.odd and any(p % 2 == 0 for p in pi):
            return False
        if self.distinct and any(a == b for a, b in zip(pi, pi[1:])):
            return False
        return True

    __contains__ = contains

    def allowed_parts(self, n: int) -> list[int]:
        """Part sizes usable in partitions of size at most ``n``, ascending."""
        hi = n if self.max_part is None else min(n, self.max_part)
        step = 2 if self.odd else 1
        lo = self.min_part
        if self.odd and lo % 2 == 0:
            lo += 1
        return list(range(lo, hi + 1, step))

    def enumerate(self, n: int) -> Iterator[Partition]:
        return enumerate_partitions(n, self)

    def count(self, n: int) -> int:
        return sum(1 for _ in enumerate_partitions(n, self))


def enumerate_partitions(n: int, cls: PartitionClass = PartitionClass.unrestricted()
                         ) -> Iterator[Partition]:
    """Yield every partition of ``n`` in ``cls`` once, in reverse-lexicographic order.

    >>> [tuple(p) for p in enumerate_partitions(7, PartitionClass.distinct_bounded(5))]
    [(5, 2), (4, 3), (4, 2, 1)]
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    allowed = cls.allowed_parts(n)
    slots = n if cls.max_parts is None else cls.max_parts
    buf: list[int] = []

    def rec(rem: int, hi: int, slots: int):
        # hi: exclusive upper index into `allowed`
        if rem == 0:
            yield Partition._trusted(buf)
            return
        if slots == 0:
            return
        top = min(hi, bisect_right(allowed, rem))
        for idx in range(top - 1, -1, -1):
            part = allowed[idx]
            buf.append(part)
            yield from rec(rem - part, idx if cls.distinct else idx + 1, slots - 1)
            buf.pop()

    yield from rec(n, len(allowed), slots)


def count_beck(n: int) -> int:
    """Partitions of ``n`` in which exactly one part size occurs three times and
    every other part size occurs once."""
    if n < 0:
        raise DomainError("n must be non-negative")
    # plain[s]: parts all distinct; tripled[s]: exactly one size used three times
    plain = [1] + [0] * n
    tripled = [0] * (n + 1)
    for k in range(1, n + 1):
        new_plain = plain[:]
        new_tripled = tripled[:]
        for s in range(n + 1):
            if s + k <= n:
                new_plain[s + k] += plain[s]
                new_tripled[s + k] += tripled[s]
            if s + 3 * k <= n:
                new_tripled[s + 3 * k] += plain[s]
        plain, tripled = new_plain, new_tripled
    return tripled[n]
