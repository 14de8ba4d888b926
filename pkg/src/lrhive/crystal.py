"""Pattern-extraction maps, Bender-Knuth moves and the evacuation commutor.

tau and gamma read the two straight tableaux hiding inside an LR tableau's
hive; evacuation is realised as the usual staircase of Bender-Knuth moves;
their composite tau^-1 . xi . gamma is a second commutativity map compared
experimentally against the deletion-based one.
"""

from __future__ import annotations

from .hive import Hive, extract_gt, hive_from_tableau, require_lr_hive, tableau_from_hive
from .shapes import canonical, length, padded
from .tableaux import SkewTableau, gt_to_ssyt, is_semistandard, require_lr, ssyt_to_gt


def yamanouchi(lam) -> SkewTableau:
    """Highest-weight filling: row i is all i's."""
    lam = canonical(lam)
    return SkewTableau(tuple((i,) * lam[i - 1] for i in range(1, len(lam) + 1)))


def tau(t: SkewTableau, n: int | None = None) -> SkewTableau:
    """Straight tableau of the right-edge pattern: type = weight of t."""
    n = n or max(t.n_rows, 1)
    return gt_to_ssyt(extract_gt(hive_from_tableau(t, n), "beta"))


def gamma(t: SkewTableau, n: int | None = None) -> SkewTableau:
    """Straight tableau of the left-edge pattern: type = inner shape of t."""
    n = n or max(t.n_rows, 1)
    return gt_to_ssyt(extract_gt(hive_from_tableau(t, n), "alpha"))


def tau_inv(s: SkewTableau, inner, n: int) -> SkewTableau:
    """Rebuild the LR tableau whose right-edge pattern is s, given its inner shape.

    The pattern supplies the right boundary and the gradients; the triangle
    conditions force the base, and full hive validation rejects patterns
    outside the image.
    """
    g = ssyt_to_gt(s, n)
    beta = {(i, j): _get(g.row_of_length(j), i - 1) for j in range(1, n + 1) for i in range(1, j + 1)}
    u = tuple(
        tuple(beta[(i, j)] - beta[(i, j - 1)] for i in range(1, j)) for j in range(2, n + 1)
    )
    mu = padded(canonical(inner), n)
    nu = tuple(beta[(i, n)] for i in range(1, n + 1))
    lam = _forced_base(mu, nu, u, n)
    h = Hive(n, lam, mu, nu, u)
    require_lr_hive(h)
    return tableau_from_hive(h)


def gamma_inv(s: SkewTableau, weight, n: int) -> SkewTableau:
    """Rebuild the LR tableau whose left-edge pattern is s, given its weight."""
    g = ssyt_to_gt(s, n)
    alpha = {
        (i, j): _get(g.row_of_length(n - i), j - i - 1)
        for i in range(0, n)
        for j in range(i + 1, n + 1)
    }
    u = tuple(
        tuple(alpha[(i, j)] - alpha[(i - 1, j)] for i in range(1, j)) for j in range(2, n + 1)
    )
    mu = tuple(alpha[(0, j)] for j in range(1, n + 1))
    nu = padded(canonical(weight), n)
    lam = _forced_base(mu, nu, u, n)
    h = Hive(n, lam, mu, nu, u)
    require_lr_hive(h)
    return tableau_from_hive(h)


def _forced_base(mu, nu, u, n):
    def U(i, j):
        return u[j - 2][i - 1]

    return tuple(
        mu[l - 1]
        + nu[l - 1]
        + sum(U(j, l) for j in range(1, l))
        - sum(U(l, k) for k in range(l + 1, n + 1))
        for l in range(1, n + 1)
    )


def _get(row, idx):
    return row[idx] if 0 <= idx < len(row) else 0


def bender_knuth(t: SkewTableau, i: int) -> SkewTableau:
    """Swap the multiplicities of i and i+1 within each row's free zone.

    An i is locked when i+1 sits directly below it, an i+1 when i sits
    directly above; the unlocked block a*(i) b*(i+1) of each row becomes
    b*(i) a*(i+1).  Involutive.
    """
    if i < 1:
        raise ValueError("letter index must be positive")
    if not is_semistandard(t):
        raise ValueError("input is not semistandard")
    rows = [list(r) for r in t.rows]
    for r, row in enumerate(rows):
        free_cols = []
        for c, x in enumerate(row):
            if x == i:
                below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else 0
                if below != i + 1:
                    free_cols.append(c)
            elif x == i + 1:
                above = rows[r - 1][c] if r >= 1 and c < len(rows[r - 1]) else 0
                if above != i:
                    free_cols.append(c)
        a = sum(1 for c in free_cols if row[c] == i)
        b = len(free_cols) - a
        for idx, c in enumerate(free_cols):
            row[c] = i if idx < b else i + 1
    return SkewTableau(tuple(tuple(r) for r in rows))


def schutzenberger(t: SkewTableau, n: int) -> SkewTableau:
    """Evacuation on straight-shape tableaux with letters at most n.

    Realised as the staircase of Bender-Knuth moves: the block b_1..b_{n-1}
    first, then b_1..b_{n-2}, and so on down to b_1 alone.  Weight-reversing
    and involutive.
    """
    if not t.is_straight():
        raise ValueError("evacuation needs a straight shape")
    if t.max_letter() > n:
        raise ValueError(f"letters exceed {n}")
    for top in range(n - 1, 0, -1):
        for i in range(1, top + 1):
            t = bender_knuth(t, i)
    return t


def commutor_hk(t: SkewTableau, n: int | None = None) -> SkewTableau:
    """The evacuation-based commutativity map LR(lam/mu, nu) -> LR(lam/nu, mu)."""
    require_lr(t)
    n = n or max(t.n_rows, 1)
    nu = canonical(t.weight())
    if length(nu) > n or t.n_rows > n:
        raise ValueError(f"n = {n} too small")
    return tau_inv(schutzenberger(gamma(t, n), n), nu, n)
