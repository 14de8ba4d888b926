"""Skew tableaux with semistandard and lattice validation.

Storage is row-major ragged rows *including* the inner cells as sentinel
zeros, so row i has exactly outer_i slots.  This keeps row scans for the
deletion operators linear and makes serialization direct.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import GTPattern, Partition, canonical, padded

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SkewTableau:
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        outer = []
        inner = []
        for row in rows:
            if any(x < 0 for x in row):
                raise ValueError("negative entry")
            z = 0
            while z < len(row) and row[z] == 0:
                z += 1
            if any(x == 0 for x in row[z:]):
                raise ValueError("inner zeros must form a prefix of each row")
            outer.append(len(row))
            inner.append(z)
        if any(b > a for a, b in zip(outer, outer[1:])):
            raise ValueError(f"outer shape {outer} is not a partition")
        if any(b > a for a, b in zip(inner, inner[1:])):
            raise ValueError(f"inner shape {inner} is not a partition")

    @property
    def outer(self) -> Partition:
        return canonical(len(row) for row in self.rows)

    @property
    def inner(self) -> Partition:
        return canonical(_leading_zeros(row) for row in self.rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based cell (i, j); inner cells read as 0."""
        return self.rows[i - 1][j - 1]

    def weight(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        top = 0
        for row in self.rows:
            for x in row:
                if x:
                    counts[x] = counts.get(x, 0) + 1
                    top = max(top, x)
        return tuple(counts.get(s, 0) for s in range(1, top + 1))

    def is_straight(self) -> bool:
        return not self.inner

    def max_letter(self) -> int:
        return max((x for row in self.rows for x in row), default=0)


EMPTY = SkewTableau(())


def _leading_zeros(row) -> int:
    z = 0
    while z < len(row) and row[z] == 0:
        z += 1
    return z


@dataclass(frozen=True)
class LRValidity:
    semistandard: bool
    lattice: bool
    first_violation: tuple | None

    @property
    def ok(self) -> bool:
        return self.semistandard and self.lattice


def semistandard_violation(t: SkewTableau) -> tuple[int, int] | None:
    """First cell (row-major) breaking weak rows / strict columns, or None."""
    rows = t.rows
    for i, row in enumerate(rows):
        prev = 0
        for j, x in enumerate(row):
            if x == 0:
                continue
            if prev and x < prev:
                return (i + 1, j + 1)
            if i > 0 and j < len(rows[i - 1]):
                above = rows[i - 1][j]
                if above and x <= above:
                    return (i + 1, j + 1)
            prev = x
    return None


def lattice_violation(t: SkewTableau) -> tuple[int, int] | None:
    """First (row, letter) where letter s outruns s-1 in the prefix counts."""
    top = t.max_letter()
    if top <= 1:
        return None
    counts = [0] * (top + 1)
    for i, row in enumerate(t.rows, start=1):
        prev = counts[1:]
        for x in row:
            if x:
                counts[x] += 1
        for s in range(2, top + 1):
            if counts[s] > prev[s - 2]:
                return (i, s)
    return None


def is_semistandard(t: SkewTableau) -> bool:
    return semistandard_violation(t) is None


def is_lattice(t: SkewTableau) -> bool:
    return lattice_violation(t) is None


def validate_lr(t: SkewTableau) -> LRValidity:
    ss = semistandard_violation(t)
    lp = lattice_violation(t)
    return LRValidity(ss is None, lp is None, ss if ss is not None else lp)


def is_lr(t: SkewTableau) -> bool:
    return validate_lr(t).ok


def require_lr(t: SkewTableau) -> None:
    v = validate_lr(t)
    if not v.ok:
        kind = "semistandard" if not v.semistandard else "lattice"
        raise ValueError(f"not an LR tableau ({kind} fails at {v.first_violation})")


def weight(t: SkewTableau) -> tuple[int, ...]:
    return t.weight()


def gt_to_ssyt(p: GTPattern) -> SkewTableau:
    """Straight-shape tableau with row_j(level i) - row_j(level i-1) entries i in row j."""
    n = p.n
    rows: list[list[int]] = []
    prev = (0,) * n
    for i in range(1, n + 1):
        cur = padded(p.row_of_length(i), n)
        for j in range(n):
            extra = cur[j] - prev[j]
            if extra < 0:
                raise ValueError("pattern rows not nested")
            if extra:
                while len(rows) <= j:
                    rows.append([])
                rows[j].extend([i] * extra)
        prev = cur
    return SkewTableau(tuple(tuple(r) for r in rows))


def ssyt_to_gt(t: SkewTableau, n: int | None = None) -> GTPattern:
    """Inverse of gt_to_ssyt; rejects skew or non-semistandard input."""
    if not t.is_straight():
        raise ValueError("input must have straight shape")
    if not is_semistandard(t):
        raise ValueError("input is not semistandard")
    if n is None:
        n = max(t.max_letter(), t.n_rows, 1)
    elif t.max_letter() > n:
        raise ValueError(f"letters exceed {n}")
    rows = []
    for i in range(n, 0, -1):
        shape = [sum(1 for x in row if x <= i) for row in t.rows]
        rows.append(tuple(padded(canonical(shape), i)))
    return GTPattern(tuple(rows))


def adjoin_cell(t: SkewTableau, cell: tuple[int, int], letter: int) -> SkewTableau:
    """Add one filled cell at an addable corner of the outer shape.

    Validity of the filling is the caller's contract; only the shape is
    checked.
    """
    i, j = cell
    if letter < 1:
        raise ValueError("letter must be positive")
    rows = [list(r) for r in t.rows]
    if i < 1 or i > len(rows) + 1:
        raise ValueError(f"cell {cell} not adjacent to the shape")
    if i == len(rows) + 1:
        rows.append([])
    if j != len(rows[i - 1]) + 1:
        raise ValueError(f"cell {cell} is occupied or not an outer corner")
    if i > 1 and len(rows[i - 2]) < j:
        raise ValueError(f"adding {cell} would break the outer shape")
    rows[i - 1].append(letter)
    return SkewTableau(tuple(tuple(r) for r in rows))
