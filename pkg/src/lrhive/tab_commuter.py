"""Deletion operators on LR tableaux and the commutativity involution.

The corner deletion bumps an entry upward along a vertical strip, each step
replacing the rightmost entry strictly smaller than the one arriving, until a
hole of the inner shape absorbs it.  Emptying the rows bottom-up and stacking
the terminating row numbers builds the partner tableau; internal insertion
(the downward bumping inverse) undoes it row by row.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .shapes import Cell, Partition, padded
from .tableaux import SkewTableau, require_lr


@dataclass(frozen=True)
class DeletionResult:
    """Outcome of a single corner deletion.

    terminating_row is 0 when the corner entry equalled its row number and the
    cell was simply removed; otherwise it is the row whose inner corner
    absorbed the bumping chain.  The path lists the modified cells top to
    bottom (empty in the first case, a single cell when the corner itself was
    an inner cell).
    """

    tableau: SkewTableau
    terminating_row: int
    path: tuple[Cell, ...]


def _rows_of(t: SkewTableau) -> list[list[int]]:
    return [list(r) for r in t.rows]


def _to_tableau(rows: list[list[int]]) -> SkewTableau:
    while rows and not rows[-1]:
        rows.pop()
    return SkewTableau(tuple(tuple(r) for r in rows))


def _delete_corner(rows: list[list[int]], row: int) -> tuple[int, list[Cell]]:
    """Apply one corner deletion in place; returns (terminating_row, path)."""
    if row < 1 or row > len(rows) or not rows[row - 1]:
        raise ValueError(f"row {row} has no cells")
    width = len(rows[row - 1])
    if row < len(rows) and len(rows[row]) >= width:
        raise ValueError(f"({row},{width}) is not a corner of the outer shape")
    x = rows[row - 1][-1]
    if x == row:
        rows[row - 1].pop()
        return 0, []
    if x == 0:
        rows[row - 1].pop()
        return row, [(row, width)]
    path = [(row, width)]
    rows[row - 1].pop()
    r = row - 1
    while r >= 1:
        above = rows[r - 1]
        for c in range(len(above) - 1, -1, -1):
            if above[c] < x:
                bumped = above[c]
                above[c] = x
                path.append((r, c + 1))
                if bumped == 0:
                    path.reverse()
                    return r, path
                x = bumped
                break
        else:
            raise ValueError(f"no entry below {x} in row {r}; input was not LR")
        r -= 1
    raise ValueError("deletion ran off the top of the tableau; input was not LR")


def delete_corner(t: SkewTableau, row: int) -> DeletionResult:
    rows = _rows_of(t)
    k, path = _delete_corner(rows, row)
    return DeletionResult(_to_tableau(rows), k, tuple(path))


def full_row_deletion(t: SkewTableau, r: int) -> tuple[SkewTableau, list[int]]:
    """Delete every cell of row r, rightmost first; identity if the row is absent."""
    if t.n_rows > r:
        raise ValueError(f"outer shape has more than {r} rows")
    if t.n_rows < r:
        return t, []
    rows = _rows_of(t)
    terms = []
    for _ in range(len(rows[r - 1])):
        k, _path = _delete_corner(rows, r)
        terms.append(k)
    return _to_tableau(rows), terms


@dataclass(frozen=True)
class CommuterStep:
    """Record of one bottom-row sweep: the new partner row and what remains."""

    r: int
    terminating_rows: tuple[int, ...]
    inner_after: Partition
    paths: tuple[tuple[Cell, ...], ...]


@dataclass(frozen=True)
class CommuterTrace:
    steps: tuple[CommuterStep, ...] = field(default_factory=tuple)


def rho(t: SkewTableau, n: int, trace: bool = False):
    """Commutativity map: LR(lam/mu, nu) -> LR(lam/nu, mu).

    Row r of the output collects the terminating row numbers of the full
    r-deletion, zeros becoming inner cells.
    """
    require_lr(t)
    if t.n_rows > n:
        raise ValueError(f"tableau has {t.n_rows} rows, exceeds n = {n}")
    nu = padded(t.weight(), n)
    rows = _rows_of(t)
    out_rows: list[tuple[int, ...]] = []
    steps = []
    for r in range(n, 0, -1):
        terms: list[int] = []
        paths = []
        if len(rows) == r:
            width = len(rows[r - 1])
            for _ in range(width):
                k, path = _delete_corner(rows, r)
                terms.append(k)
                paths.append(tuple(path))
            while rows and not rows[-1]:
                rows.pop()
        zeros = sum(1 for k in terms if k == 0)
        if zeros != nu[r - 1] or any(terms[:zeros]) or not all(terms[zeros:]):
            raise ValueError("terminating numbers inconsistent with the weight")
        out_rows.append(tuple(terms))
        if trace:
            inner_after = tuple(_count_leading_zeros(row) for row in rows)
            steps.append(CommuterStep(r, tuple(terms), inner_after, tuple(paths)))
    s = SkewTableau(tuple(reversed(out_rows)))
    if trace:
        return s, CommuterTrace(tuple(steps))
    return s


def _count_leading_zeros(row) -> int:
    z = 0
    while z < len(row) and row[z] == 0:
        z += 1
    return z


def _internal_insert(rows: list[list[int]], from_row: int) -> int:
    """Insert from the inner corner of from_row, bumping downward; returns end row."""
    k = from_row
    if k < 1 or k > len(rows) + 1:
        raise ValueError(f"row {from_row} not adjacent to the shape")
    inner_k = _count_leading_zeros(rows[k - 1]) if k <= len(rows) else 0
    width_k = len(rows[k - 1]) if k <= len(rows) else 0
    if k > 1:
        if _count_leading_zeros(rows[k - 2]) < inner_k + 1:
            raise ValueError(f"inner shape has no addable corner in row {from_row}")
    if inner_k == width_k:
        # Re-create an empty cell: both shapes grow by one in this row.
        if k == len(rows) + 1:
            if k > 1 and not rows[k - 2]:
                raise ValueError(f"row {from_row} cannot be started")
            rows.append([0])
        else:
            if k > 1 and len(rows[k - 2]) < width_k + 1:
                raise ValueError(f"outer shape cannot grow in row {from_row}")
            rows[k - 1].append(0)
        return k
    x = rows[k - 1][inner_k]
    rows[k - 1][inner_k] = 0
    s = k + 1
    while True:
        row = rows[s - 1] if s <= len(rows) else []
        placed = False
        for c in range(len(row)):
            if row[c] > x:
                row[c], x = x, row[c]
                placed = True
                break
        if not placed:
            width_above = len(rows[s - 2]) if s >= 2 else None
            if width_above is not None and width_above < len(row) + 1:
                raise ValueError("insertion would break the outer shape")
            if s > len(rows):
                rows.append([])
            rows[s - 1].append(x)
            return s
        s += 1


def internal_insert(t: SkewTableau, from_row: int, to_row: int) -> SkewTableau:
    """Downward bumping from the inner corner of from_row, ending in to_row.

    Exact inverse of a corner deletion that started in to_row and terminated
    in from_row; raises if the bumping chain ends elsewhere.
    """
    rows = _rows_of(t)
    end = _internal_insert(rows, from_row)
    if end != to_row:
        raise ValueError(f"insertion from row {from_row} ended in row {end}, not {to_row}")
    return _to_tableau(rows)


def rho_inverse(s: SkewTableau, n: int) -> SkewTableau:
    """Inverse commutativity map, built from internal insertions.

    Row r of s is consumed bottom-up: its letter-k multiplicities dictate how
    many insertions start from each row k (taken from k = r down to 1, the
    reverse of the deletion order), after which the r-letters of the original
    row are restored as fresh corner cells.
    """
    require_lr(s)
    if s.n_rows > n:
        raise ValueError(f"tableau has {s.n_rows} rows, exceeds n = {n}")
    rows: list[list[int]] = []
    for r in range(1, n + 1):
        src = list(s.rows[r - 1]) if r <= s.n_rows else []
        counts = [0] * (r + 1)
        for x in src:
            if x > r:
                raise ValueError(f"letter {x} in row {r} exceeds the row number")
            counts[x] += 1
        for k in range(r, 0, -1):
            for _ in range(counts[k]):
                end = _internal_insert(rows, k)
                if end != r:
                    raise ValueError(
                        f"insertion from row {k} ended in row {end}, not {r}; "
                        "input is not in the image of the forward map"
                    )
        while len(rows) < r and counts[0]:
            rows.append([])
        for _ in range(counts[0]):
            rows[r - 1].append(r)
    return _to_tableau(rows)
