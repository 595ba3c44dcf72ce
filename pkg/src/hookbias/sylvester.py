"""Sylvester's bijection between odd and distinct partitions, and the
size-preserving injection from the B pair set into the A pair set.

Both directions work on the *symmetric diagram* of an odd partition: each
part ``2c + 1`` is drawn as a centred row occupying columns ``-c..c``, so
column 0 is the spine.  :func:`psi` reads nested hooks off that diagram and
:func:`sigma` rebuilds it piece by piece; neither is derived from the other,
so a round trip is a real check.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError
from .partitions import (Partition, PartitionClass, alternating_sum,
                         enumerate_partitions)
from .report import VerificationReport


def _symmetric_cells(pi_o) -> set[tuple[int, int]]:
    """Cells ``(row, column)`` of the centred diagram, rows 1-based, spine at 0."""
    cells = set()
    for row, part in enumerate(pi_o, start=1):
        half = part // 2
        for col in range(-half, half + 1):
            cells.add((row, col))
    return cells


def _read_hook(cells, used, column, top_row, direction):
    """Walk up ``column`` from the bottom to ``top_row``, then along ``top_row``."""
    taken = []
    bottom = max((r for r, c in cells if c == column), default=0)
    for row in range(bottom, top_row - 1, -1):
        if (row, column) in cells:
            taken.append((row, column))
    col = column + direction
    while (top_row, col) in cells:
        taken.append((top_row, col))
        col += direction
    for cell in taken:
        if cell in used:
            raise AssertionError(f"cell {cell} read twice")
        used.add(cell)
    return len(taken)


def psi(pi_o) -> Partition:
    """Map a partition into odd parts to one into distinct parts of the same size.

    Reads the centre hook (spine upward, then right along the top row), then
    alternately the hook left of the spine and the hook right of it, each
    time moving one column outward and, for right-hand hooks, one row down.

    >>> psi(Partition((7, 5, 3, 3)))
    Partition(7, 6, 4, 1)
    """
    pi_o = Partition(pi_o)
    if not pi_o.is_odd():
        raise DomainError(f"{tuple(pi_o)} has an even part")
    cells = _symmetric_cells(pi_o)
    used: set[tuple[int, int]] = set()
    readings = [_read_hook(cells, used, 0, 1, +1)] if cells else []
    k = 1
    while len(used) < len(cells):
        readings.append(_read_hook(cells, used, -k, k, -1))
        readings.append(_read_hook(cells, used, k, k + 1, +1))
        k += 1
    while readings and readings[-1] == 0:
        readings.pop()
    out = Partition(readings)
    if not out.is_distinct():
        raise AssertionError(f"psi produced repeated parts from {tuple(pi_o)}: {readings}")
    return out


def sigma(pi_d) -> Partition:
    """Inverse of :func:`psi`, built by inserting cells into a symmetric diagram.

    A spine of ``gamma`` cells is laid down, gamma being the alternating sum
    of ``pi_d``.  Pieces of sizes ``d_1 = l_1 - gamma``, ``d_k = l_k - d_{k-1}``
    then go alternately horizontally (row ``r``, rightward from column ``r``)
    and vertically (column ``r``, downward from row ``r + 1``), mirrored on the
    left of the spine.  The odd parts are the row lengths.

    >>> sigma(Partition((6, 5, 1)))
    Partition(9, 3)
    """
    pi_d = Partition(pi_d)
    if not pi_d.is_distinct():
        raise DomainError(f"{tuple(pi_d)} has a repeated part")
    if not pi_d:
        return Partition()
    gamma = alternating_sum(pi_d)
    right = {(row, 0) for row in range(1, gamma + 1)}
    prev = gamma
    for k, part in enumerate(pi_d, start=1):
        d = part - prev
        if d < 0:
            raise AssertionError(f"negative insertion {d} while inverting {tuple(pi_d)}")
        if k % 2:
            r = (k + 1) // 2
            piece = {(r, col) for col in range(r, r + d)}
        else:
            r = k // 2
            piece = {(row, r) for row in range(r + 1, r + 1 + d)}
        if piece & right:
            raise AssertionError(f"overlapping insertion while inverting {tuple(pi_d)}")
        right |= piece
        prev = d
    if prev != 0:
        raise AssertionError(f"insertions for {tuple(pi_d)} do not close up")
    rows = []
    for row in range(1, gamma + 1):
        width = sum(1 for r, c in right if r == row and c > 0)
        if any((row, c) not in right for c in range(width + 1)):
            raise AssertionError(f"row {row} is not contiguous for {tuple(pi_d)}")
        rows.append(2 * width + 1)
    if len(right) != sum(w // 2 + 1 for w in rows):
        raise AssertionError(f"cells below the spine while inverting {tuple(pi_d)}")
    return Partition(rows)


# --------------------------------------------------------------------------
# Pair partitions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PairPartition:
    pi1: Partition
    pi2: Partition

    @property
    def size(self) -> int:
        return self.pi1.size + self.pi2.size

    def in_a(self, L: int) -> bool:
        return self.pi1 in PartitionClass.blue_a(L) and self.pi2 in PartitionClass.red_a(L)

    def in_b(self, L: int) -> bool:
        return self.pi1 in PartitionClass.blue_b(L) and self.pi2 in PartitionClass.red_b(L)

    def __str__(self):
        return f"{self.pi1}|{self.pi2}"


def _pairs(n, first: PartitionClass, second: PartitionClass) -> Iterator[PairPartition]:
    for n1 in range(n, -1, -1):
        seconds = list(enumerate_partitions(n - n1, second))
        if not seconds:
            continue
        for p1 in enumerate_partitions(n1, first):
            for p2 in seconds:
                yield PairPartition(p1, p2)


def enumerate_a(L: int, n: int) -> Iterator[PairPartition]:
    """Pairs (odd parts <= 2L-1, at most one odd part <= 2L-3) of total size ``n``."""
    if L < 1:
        raise DomainError("L must be positive")
    return _pairs(n, PartitionClass.blue_a(L), PartitionClass.red_a(L))


def enumerate_b(L: int, n: int) -> Iterator[PairPartition]:
    """Pairs (distinct parts in 2..L-1, at most one part <= L-2) of total size ``n``."""
    if L < 1:
        raise DomainError("L must be positive")
    return _pairs(n, PartitionClass.blue_b(L), PartitionClass.red_b(L))


def phi(L: int, pair: PairPartition) -> PairPartition:
    """Size-preserving injection from the B pairs into the A pairs.

    An odd red part is kept.  An even red part loses one cell, which becomes
    a new smallest blue part 1 before the blue part goes through ``sigma``.
    """
    if not pair.in_b(L):
        raise DomainError(f"{pair} is not a B pair for L={L}")
    pi1, pi2 = pair.pi1, pair.pi2
    if not pi2 or pi2[0] % 2:
        return PairPartition(sigma(pi1), pi2)
    # blue parts are all >= 2, so appending 1 keeps them distinct
    starred = Partition(tuple(pi1) + (1,))
    assert starred.is_distinct()
    return PairPartition(sigma(starred), Partition((pi2[0] - 1,)))


def verify_injection(L: int, n_max: int) -> VerificationReport:
    """Apply :func:`phi` to every B pair of size ``n <= n_max`` and check images."""
    start = time.perf_counter()
    table = []
    violation = None
    for n in range(n_max + 1):
        images = set()
        size_b = 0
        for pair in enumerate_b(L, n):
            size_b += 1
            image = phi(L, pair)
            if image.size != n or not image.in_a(L):
                violation = {"L": L, "n": n, "lhs": str(pair), "rhs": f"image {image} outside A"}
                break
            if image in images:
                violation = {"L": L, "n": n, "lhs": str(pair), "rhs": f"image {image} repeated"}
                break
            images.add(image)
        if violation:
            break
        size_a = sum(1 for _ in enumerate_a(L, n))
        table.append([n, size_b, size_a])
        if size_b > size_a:
            violation = {"L": L, "n": n, "lhs": str(size_b), "rhs": str(size_a)}
            break
    return VerificationReport(
        target="Lem3.2",
        params={"L": L, "n_max": n_max},
        status="violated" if violation else "verified",
        first_violation=violation,
        details={"columns": ["n", "|B|", "|A|"], "table": table},
        elapsed=time.perf_counter() - start,
    )
