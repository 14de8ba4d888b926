"""Enumeration of LR tableaux and hives, and the equivalent coefficient counts.

The tableau enumerator is a row-major backtracking fill with incremental
semistandard and lattice checks.  The three pattern-based counts (gz, bz, kh)
enumerate constrained triangular arrays directly from their inequality
systems and serve as oracles independent of the hive machinery; the hive
count enumerates gradient arrays diagonal by diagonal.
"""

from __future__ import annotations

from .hive import Hive, is_lr_hive, is_rational_hive
from .shapes import canonical, contains, length, padded
from .tableaux import SkewTableau


def partitions_up_to(max_weight: int, max_length: int):
    """All partitions with weight <= max_weight and at most max_length parts."""
    out = [()]

    def extend(prefix, remaining, cap):
        for part in range(min(remaining, cap), 0, -1):
            cur = prefix + (part,)
            out.append(cur)
            if len(cur) < max_length:
                extend(cur, remaining - part, part)

    if max_length > 0:
        extend((), max_weight, max_weight)
    return out


def subpartitions(outer, size: int | None = None):
    """Partitions contained in outer, optionally restricted to a given weight."""
    outer = canonical(outer)
    results = []

    def rec(i, prefix, used):
        if size is not None and used > size:
            return
        if i == len(outer):
            if size is None or used == size:
                results.append(canonical(prefix))
            return
        cap = min(outer[i], prefix[-1] if prefix else outer[i])
        lo = 0
        for part in range(lo, cap + 1):
            rec(i + 1, prefix + (part,), used + part)

    rec(0, (), 0)
    return results


def sweep_triples(max_weight: int, max_n: int):
    """All (lam, mu, nu) with |lam| <= max_weight, at most max_n rows,
    mu, nu inside lam and |lam| = |mu| + |nu|."""
    for lam in partitions_up_to(max_weight, max_n):
        w = sum(lam)
        for mu in subpartitions(lam):
            for nu in subpartitions(lam, size=w - sum(mu)):
                yield lam, mu, nu


def enumerate_lr(lam, mu, nu, n: int | None = None) -> list[SkewTableau]:
    """All LR tableaux of shape lam/mu and weight nu, reading-word order."""
    lam = canonical(lam)
    mu = canonical(mu)
    nu = canonical(nu)
    if n is None:
        n = max(length(lam), length(nu), 1)
    if length(lam) > n:
        raise ValueError(f"shape has more than n = {n} rows")
    if not contains(mu, lam) or not contains(nu, lam):
        return []
    if sum(lam) != sum(mu) + sum(nu):
        return []
    ell = len(lam)
    mu_p = padded(mu, ell)
    nu_p = padded(nu, max(ell, length(nu), 1))
    budget = list(nu_p)
    rows = [[0] * mu_p[i] + [0] * (lam[i] - mu_p[i]) for i in range(ell)]
    # prefix_above[s] = count of letter s in rows strictly above the current one
    prefix_above = [0] * (len(budget) + 1)
    results: list[SkewTableau] = []
    cells = []
    for i in range(ell):
        for j in range(mu_p[i], lam[i]):
            cells.append((i, j))

    def fill(idx, counts):
        if idx == len(cells):
            results.append(SkewTableau(tuple(tuple(r) for r in rows)))
            return
        i, j = cells[idx]
        if j == mu_p[i] and i > 0 and idx:
            saved = prefix_above[:]
            for s in range(1, len(budget) + 1):
                prefix_above[s] = counts[s]
            _fill_from(idx, counts)
            prefix_above[:] = saved
            return
        _fill_from(idx, counts)

    def _fill_from(idx, counts):
        i, j = cells[idx]
        lo = rows[i][j - 1] if j > mu_p[i] else 1
        lo = max(lo, 1)
        if i > 0 and j < lam[i - 1]:
            above = rows[i - 1][j]
            if above:
                lo = max(lo, above + 1)
        hi = min(len(budget), i + 1)
        for v in range(lo, hi + 1):
            if budget[v - 1] == 0:
                continue
            if v > 1 and counts[v] + 1 > prefix_above[v - 1]:
                continue
            rows[i][j] = v
            budget[v - 1] -= 1
            counts[v] += 1
            fill(idx + 1, counts)
            counts[v] -= 1
            budget[v - 1] += 1
            rows[i][j] = 0

    if not cells:
        return [SkewTableau(tuple(tuple(r) for r in rows))] if sum(nu) == 0 else []
    fill(0, [0] * (len(budget) + 1))
    return results


def _gt_patterns(ptype, weights, n):
    """Triangular arrays with given top row and per-level row sums.

    Rows are built from the top (length n) downward; each row is constrained
    by betweenness against the one above and by its target sum.  Yields rows
    as a list indexed by level (length i at index i-1), padded.
    """
    top = padded(ptype, n)
    sums = [0] * (n + 1)
    for i in range(1, n + 1):
        sums[i] = sums[i - 1] + weights[i - 1]
    if sums[n] != sum(top):
        return
    levels: list[tuple[int, ...]] = [()] * (n + 1)
    levels[n] = top

    def rows_between(upper, size, target):
        # all weakly decreasing rows of given length with target sum,
        # interlaced below `upper`
        row = [0] * size

        def rec(j, remaining):
            if j == size:
                if remaining == 0:
                    yield tuple(row)
                return
            hi = min(upper[j], row[j - 1] if j else upper[j], remaining)
            lo = upper[j + 1]
            for v in range(hi, lo - 1, -1):
                row[j] = v
                # quick prune: the rest cannot exceed v * slots
                if remaining - v <= v * (size - 1 - j):
                    yield from rec(j + 1, remaining - v)

        yield from rec(0, target)

    def build(i):
        if i == 0:
            yield levels
            return
        for row in rows_between(levels[i + 1], i, sums[i]) if i < n else [top]:
            levels[i] = row
            yield from build(i - 1)

    if n == 0:
        yield levels
        return
    yield from build(n)


def _iter_gt(ptype, weight, n):
    """GT patterns of the given type and weight; yields padded level rows."""
    w = padded(weight, n) if len(weight) <= n else tuple(weight)
    if len(w) != n or any(x < 0 for x in w):
        return
    yield from _gt_patterns(ptype, w, n)


def gz_count(lam, mu, nu, n: int) -> int:
    """Patterns of type nu and weight lam - mu, mu-dominant."""
    lam_p, mu_p, nu_p = padded(lam, n), padded(mu, n), padded(nu, n)
    w = tuple(a - b for a, b in zip(lam_p, mu_p))
    if any(x < 0 for x in w):
        return 0
    count = 0
    for levels in _iter_gt(nu_p, w, n):
        if _gz_ok(levels, mu_p, n):
            count += 1
    return count


def _gz_ok(levels, mu_p, n) -> bool:
    # U[k][i] = entry k of level i minus entry k of level i-1
    for i in range(1, n):
        for j in range(1, i + 1):
            d = 0
            upper = levels[i + 1]
            cur = levels[i]
            below = levels[i - 1] if i >= 1 else ()
            for k in range(j):
                d += upper[k] - _get(cur, k)
            for k in range(j - 1):
                d -= _get(cur, k) - _get(below, k)
            if d > mu_p[i - 1] - mu_p[i]:
                return False
    return True


def bz_count(lam, mu, nu, n: int) -> int:
    """Patterns of type mu and weight rev(lam - nu), nu-dominant."""
    lam_p, mu_p, nu_p = padded(lam, n), padded(mu, n), padded(nu, n)
    w = tuple(a - b for a, b in zip(lam_p, nu_p))[::-1]
    if any(x < 0 for x in w):
        return 0
    count = 0
    for levels in _iter_gt(mu_p, w, n):
        u = _alpha_gradients(levels, n)
        if _bz_ok(u, nu_p, n):
            count += 1
    return count


def _alpha_gradients(levels, n):
    """U[(i, j)] when the pattern is reoriented onto the left edge family."""
    u = {}
    for i in range(1, n):
        hi = levels[n - i + 1]
        lo = levels[n - i]
        for j in range(i + 1, n + 1):
            u[(i, j)] = _get(lo, j - i - 1) - _get(hi, j - i)
    return u


def _beta_gradients(levels, n):
    """U[(i, j)] when the pattern is reoriented onto the right edge family."""
    u = {}
    for j in range(2, n + 1):
        cur = levels[j]
        below = levels[j - 1]
        for i in range(1, j):
            u[(i, j)] = _get(cur, i - 1) - _get(below, i - 1)
    return u


def _bz_ok(u, nu_p, n) -> bool:
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            d = sum(u[(i, k)] for k in range(j, n + 1)) - sum(
                u[(i + 1, k)] for k in range(j + 1, n + 1) if i + 1 < k
            )
            if d > nu_p[i - 1] - nu_p[i]:
                return False
    return True


def kh_count(lam, mu, nu, n: int) -> int:
    """Pairs of patterns (type mu / type nu) whose gradient arrays match."""
    lam_p, mu_p, nu_p = padded(lam, n), padded(mu, n), padded(nu, n)
    w1 = tuple(a - b for a, b in zip(lam_p, nu_p))[::-1]
    w2 = tuple(a - b for a, b in zip(lam_p, mu_p))
    if any(x < 0 for x in w1) or any(x < 0 for x in w2):
        return 0
    keys: dict[tuple, int] = {}
    for levels in _iter_gt(mu_p, w1, n):
        u = _alpha_gradients(levels, n)
        key = tuple(sorted(u.items()))
        keys[key] = keys.get(key, 0) + 1
    count = 0
    for levels in _iter_gt(nu_p, w2, n):
        u = _beta_gradients(levels, n)
        count += keys.get(tuple(sorted(u.items())), 0)
    return count


def _get(row, idx):
    return row[idx] if 0 <= idx < len(row) else 0


def enumerate_hives(lam, mu, nu, n: int, rational: bool = False) -> list[Hive]:
    """All valid gradient arrays for the given boundary triple.

    The search runs diagonal by diagonal with the right-leaning prefix
    inequalities as bounds; candidates are validated in full at the leaves.
    """
    lam_p, mu_p, nu_p = padded(lam, n), padded(mu, n), padded(nu, n)
    if any(b > a for a, b in zip(mu_p, mu_p[1:])) or any(
        b > a for a, b in zip(nu_p, nu_p[1:])
    ) or any(b > a for a, b in zip(lam_p, lam_p[1:])):
        return []
    if sum(lam_p) != sum(mu_p) + sum(nu_p):
        return []
    diagonals: list[list[int]] = []
    found: list[Hive] = []
    check = is_rational_hive if rational else is_lr_hive

    def fill_diag(j):
        if j > n:
            h = Hive(n, lam_p, mu_p, nu_p, tuple(tuple(d) for d in diagonals))
            if check(h):
                found.append(h)
            return
        prev = diagonals[-1] if diagonals else []
        col = [0] * (j - 1)

        def cell(i, prefix, prev_prefix):
            if i == j:
                diagonals.append(col[:])
                fill_diag(j + 1)
                diagonals.pop()
                return
            # alpha[i][j] <= alpha[i-1][j-1]
            cap = mu_p[j - 2] + prev_prefix - mu_p[j - 1] - prefix
            if not rational:
                cap = min(cap, lam_p[j - 1] - mu_p[j - 1] - prefix)
            for v in range(0, cap + 1):
                col[i - 1] = v
                cell(i + 1, prefix + v, prev_prefix + (prev[i - 1] if i - 1 < len(prev) else 0))
            col[i - 1] = 0

        cell(1, 0, 0)

    fill_diag(2)
    return found


def count_modes(lam, mu, nu, n: int | None = None) -> dict[str, int]:
    lam = canonical(lam)
    if n is None:
        n = max(length(lam), 1)
    return {
        "tableau": len(enumerate_lr(lam, mu, nu, n)),
        "hive": len(enumerate_hives(lam, mu, nu, n)),
        "gz": gz_count(lam, mu, nu, n),
        "bz": bz_count(lam, mu, nu, n),
        "kh": kh_count(lam, mu, nu, n),
    }


def coefficient(lam, mu, nu, n: int | None = None, mode: str = "hive") -> int:
    """The multiplicity count, by any of the equivalent models.

    Modes tableau/hive/gz/bz/kh require partition boundaries; mode rational
    accepts arbitrary weakly decreasing integer sequences.
    """
    if mode == "rational":
        lam_t, mu_t, nu_t = tuple(lam), tuple(mu), tuple(nu)
        if n is None:
            n = max(len(lam_t), len(mu_t), len(nu_t), 1)
        lam_t = _pad_decreasing(lam_t, n)
        mu_t = _pad_decreasing(mu_t, n)
        nu_t = _pad_decreasing(nu_t, n)
        return len(enumerate_hives(lam_t, mu_t, nu_t, n, rational=True))
    lam = canonical(lam)
    mu = canonical(mu)
    nu = canonical(nu)
    if n is None:
        n = max(length(lam), length(mu), length(nu), 1)
    if mode == "tableau":
        return len(enumerate_lr(lam, mu, nu, n))
    if mode == "hive":
        return len(enumerate_hives(lam, mu, nu, n))
    if mode == "gz":
        return gz_count(lam, mu, nu, n)
    if mode == "bz":
        return bz_count(lam, mu, nu, n)
    if mode == "kh":
        return kh_count(lam, mu, nu, n)
    raise ValueError(f"unknown mode {mode!r}")


def _pad_decreasing(seq: tuple[int, ...], n: int) -> tuple[int, ...]:
    seq = tuple(int(x) for x in seq)
    if any(b > a for a, b in zip(seq, seq[1:])):
        raise ValueError(f"{seq} is not weakly decreasing")
    if len(seq) > n:
        raise ValueError(f"{seq} longer than n = {n}")
    if len(seq) < n and seq and seq[-1] < 0:
        raise ValueError(f"{seq} cannot be zero-padded to length {n}")
    return seq + (0,) * (n - len(seq))


def symmetry_check(lam, mu, nu, n: int | None = None) -> dict:
    """Both counts plus the explicit bijection tables through the two models."""
    from .hive import hive_from_tableau
    from .hive_commuter import sigma
    from .tab_commuter import rho

    lam = canonical(lam)
    mu = canonical(mu)
    nu = canonical(nu)
    if n is None:
        n = max(length(lam), length(mu), length(nu), 1)
    forward = enumerate_lr(lam, mu, nu, n)
    backward = enumerate_lr(lam, nu, mu, n)
    backward_set = set(t.rows for t in backward)
    images = [rho(t, n) for t in forward]
    rho_ok = len(set(im.rows for im in images)) == len(images) and all(
        im.rows in backward_set for im in images
    )
    sigma_ok = True
    seen = set()
    for t in forward:
        k = sigma(hive_from_tableau(t, n))
        key = (k.lam, k.mu, k.nu, k.u)
        if key in seen:
            sigma_ok = False
        seen.add(key)
        if not (k.mu == padded(nu, n) and k.nu == padded(mu, n)):
            sigma_ok = False
    return {
        "lam": lam,
        "mu": mu,
        "nu": nu,
        "count_mu_nu": len(forward),
        "count_nu_mu": len(backward),
        "equal": len(forward) == len(backward),
        "rho_bijection": rho_ok,
        "sigma_bijection": sigma_ok and len(seen) == len(forward),
    }
