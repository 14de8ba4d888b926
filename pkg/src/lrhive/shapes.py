"""Partitions, skew shapes and Gelfand-Tsetlin patterns.

Partitions are plain tuples of weakly decreasing nonnegative integers.  The
canonical form carries no trailing zeros; functions that need a fixed length
take it explicitly and pad on the fly.  All public cell coordinates are
1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Partition = tuple[int, ...]
Cell = tuple[int, int]


def canonical(parts) -> Partition:
    """Validate a weakly decreasing nonnegative sequence and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def padded(parts, n: int) -> Partition:
    """Length-n view of a partition, padding with zeros."""
    parts = tuple(parts)
    if len(parts) > n:
        if any(parts[n:]):
            raise ValueError(f"{parts} does not fit in length {n}")
        return parts[:n]
    return parts + (0,) * (n - len(parts))


def length(parts) -> int:
    """Number of strictly positive parts."""
    return sum(1 for p in parts if p > 0)


def weight(parts) -> int:
    return sum(parts)


def contains(inner, outer) -> bool:
    """Componentwise containment of Young diagrams (padded comparison)."""
    n = max(len(inner), len(outer))
    inner = padded(inner, n)
    outer = padded(outer, n)
    return all(a <= b for a, b in zip(inner, outer))


@dataclass(frozen=True)
class SkewShape:
    """A skew Young diagram outer/inner, both stored canonically."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", canonical(self.outer))
        object.__setattr__(self, "inner", canonical(self.inner))
        if not contains(self.inner, self.outer):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def cells(self) -> tuple[Cell, ...]:
        """Cells (row, column) in row-major order; 1-based."""
        inner = padded(self.inner, len(self.outer))
        out = []
        for i, lam_i in enumerate(self.outer, start=1):
            out.extend((i, j) for j in range(inner[i - 1] + 1, lam_i + 1))
        return tuple(out)

    def size(self) -> int:
        return weight(self.outer) - weight(self.inner)


def skew_cells(shape: SkewShape) -> tuple[Cell, ...]:
    return shape.cells()


@dataclass(frozen=True)
class GTPattern:
    """Triangular array with betweenness, rows listed longest first.

    ``rows[0]`` has length n and is the type of the pattern; ``rows[-1]`` has
    length 1.  The optional orientation tag records which hive edge family
    (alpha, beta or gamma) a pattern extracted from a hive was read from.
    """

    rows: tuple[tuple[int, ...], ...]
    orientation: str | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for k, row in enumerate(rows):
            if len(row) != n - k:
                raise ValueError(f"row {k} has length {len(row)}, expected {n - k}")
        for upper, lower in zip(rows, rows[1:]):
            for j, x in enumerate(lower):
                if not (upper[j] >= x >= upper[j + 1]):
                    raise ValueError(
                        f"betweenness violated: {upper[j]} >= {x} >= {upper[j + 1]} fails"
                    )

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def type(self) -> Partition:
        return canonical(self.rows[0]) if self.rows else ()

    def row_of_length(self, i: int) -> tuple[int, ...]:
        return self.rows[self.n - i]


def gt_weight(p: GTPattern) -> tuple[int, ...]:
    """Weight vector: successive row-sum differences, shortest row first."""
    sums = [0] + [sum(p.row_of_length(i)) for i in range(1, p.n + 1)]
    return tuple(b - a for a, b in zip(sums, sums[1:]))
