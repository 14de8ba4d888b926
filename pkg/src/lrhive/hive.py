"""The hive model: boundary triple plus upright-rhombus gradients.

A hive of side n is stored as its three boundary label sequences (lower
``lam``, left ``mu``, right ``nu``, each of length n, read as in the usual
triangle picture: lam left-to-right along the base, mu bottom-to-top, nu
top-to-bottom) together with the triangular array of upright gradients
U[i][j] for 1 <= i < j <= n.  Diagonal j of the triangle is the strip between
the base edge lam_j and the left edge mu_j; it holds the gradients
U[1][j] (top) .. U[j-1][j] (bottom).  Edge labels and the other two gradient
families are derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import GTPattern, canonical, length, padded
from .tableaux import SkewTableau, require_lr

Diagonals = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Hive:
    n: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    u: Diagonals  # u[d] is diagonal d+2, listed top to bottom: (U[1,d+2], ..., U[d+1,d+2])

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise ValueError("side length must be >= 0")
        for name in ("lam", "mu", "nu"):
            seq = tuple(int(x) for x in getattr(self, name))
            if len(seq) != n:
                raise ValueError(f"{name} must have length {n}, got {seq}")
            object.__setattr__(self, name, seq)
        u = tuple(tuple(int(x) for x in diag) for diag in self.u)
        if len(u) != max(n - 1, 0):
            raise ValueError(f"expected {max(n - 1, 0)} diagonals, got {len(u)}")
        for d, diag in enumerate(u):
            if len(diag) != d + 1:
                raise ValueError(f"diagonal {d + 2} must have {d + 1} entries")
        object.__setattr__(self, "u", u)

    def U(self, i: int, j: int) -> int:
        """Upright gradient U_{ij} for 1 <= i < j <= n."""
        return self.u[j - 2][i - 1]

    def u_lists(self) -> list[list[int]]:
        return [list(diag) for diag in self.u]

    def boundary(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return (self.lam, self.mu, self.nu)


EMPTY_HIVE = Hive(0, (), (), (), ())


def zero_hive(n: int) -> Hive:
    return Hive(n, (0,) * n, (0,) * n, (0,) * n, tuple((0,) * (d + 1) for d in range(n - 1)))


@dataclass(frozen=True)
class EdgeLabels:
    """Full alpha/beta/gamma edge labels, boundary included.

    alpha[i][j] for 0 <= i < j <= n (alpha[0][j] = mu_j), beta[i][j] and
    gamma[i][j] for 1 <= i <= j <= n (beta[i][n] = nu_i, gamma[j][j] = lam_j).
    Stored as dicts keyed by (i, j).
    """

    alpha: dict
    beta: dict
    gamma: dict


def edge_labels(h: Hive) -> EdgeLabels:
    n = h.n
    alpha = {}
    beta = {}
    gamma = {}
    for j in range(1, n + 1):
        acc = h.mu[j - 1]
        alpha[(0, j)] = acc
        for i in range(1, j):
            acc += h.U(i, j)
            alpha[(i, j)] = acc
    for i in range(1, n + 1):
        acc = h.nu[i - 1]
        beta[(i, n)] = acc
        for j in range(n - 1, i - 1, -1):
            acc -= h.U(i, j + 1)
            beta[(i, j)] = acc
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            gamma[(i, j)] = alpha[(i - 1, j)] + beta[(i, j)]
    return EdgeLabels(alpha, beta, gamma)


def vertex_labels(h: Hive) -> dict:
    """Vertex array a_{ij} with a_{00} = 0, recovered from the edge labels."""
    e = edge_labels(h)
    a = {(0, 0): 0}
    for j in range(1, h.n + 1):
        a[(0, j)] = a[(0, j - 1)] + e.alpha[(0, j)]
        for i in range(1, j + 1):
            a[(i, j)] = a[(i - 1, j)] + e.beta[(i, j)]
    return a


def gradients(h: Hive) -> tuple[dict, dict, dict]:
    """Right-leaning, upright and left-leaning gradients keyed by (i, j), i < j."""
    e = edge_labels(h)
    r = {}
    u = {}
    l = {}
    for j in range(2, h.n + 1):
        for i in range(1, j):
            r[(i, j)] = e.alpha[(i - 1, j - 1)] - e.alpha[(i, j)]
            u[(i, j)] = h.U(i, j)
            l[(i, j)] = e.beta[(i, j - 1)] - e.beta[(i + 1, j)]
    return r, u, l


def hive_violation(h: Hive, allow_negative_labels: bool = False) -> str | None:
    """Name of the first violated constraint, or None if the hive is valid.

    With ``allow_negative_labels`` the edge-nonnegativity requirement is
    dropped (integer boundaries, all gradients still >= 0); this is the
    validity notion used for the rational-character extension.
    """
    n = h.n
    e = edge_labels(h)
    for j in range(1, n + 1):
        base = e.gamma[(j, j)]
        if base != h.lam[j - 1]:
            return f"triangle condition: gamma[{j},{j}] = {base} != lambda_{j} = {h.lam[j - 1]}"
    for j in range(2, n + 1):
        for i in range(1, j):
            if h.U(i, j) < 0:
                return f"U[{i},{j}] = {h.U(i, j)}"
            rij = e.alpha[(i - 1, j - 1)] - e.alpha[(i, j)]
            if rij < 0:
                return f"R[{i},{j}] = {rij}"
            lij = e.beta[(i, j - 1)] - e.beta[(i + 1, j)]
            if lij < 0:
                return f"L[{i},{j}] = {lij}"
    if not allow_negative_labels:
        for (i, j), v in e.alpha.items():
            if v < 0:
                return f"alpha[{i},{j}] = {v}"
        for (i, j), v in e.beta.items():
            if v < 0:
                return f"beta[{i},{j}] = {v}"
        for (i, j), v in e.gamma.items():
            if v < 0:
                return f"gamma[{i},{j}] = {v}"
    return None


def is_lr_hive(h: Hive) -> bool:
    return hive_violation(h) is None


def is_rational_hive(h: Hive) -> bool:
    return hive_violation(h, allow_negative_labels=True) is None


def require_lr_hive(h: Hive) -> None:
    v = hive_violation(h)
    if v is not None:
        raise ValueError(f"not an LR hive: {v}")


def hive_from_tableau(t: SkewTableau, n: int) -> Hive:
    """Gradient image of an LR tableau: U_{ij} counts letters i in row j."""
    require_lr(t)
    lam = t.outer
    if length(lam) > n:
        raise ValueError(f"tableau has {length(lam)} rows, side {n} too small")
    mu = padded(t.inner, n)
    nu = padded(canonical(t.weight()), n)
    diagonals = []
    for j in range(2, n + 1):
        row = t.rows[j - 1] if j <= t.n_rows else ()
        diagonals.append(tuple(sum(1 for x in row if x == i) for i in range(1, j)))
    return Hive(n, padded(lam, n), mu, nu, tuple(diagonals))


def tableau_from_hive(h: Hive) -> SkewTableau:
    """Inverse of hive_from_tableau: row j reads its diagonal top to bottom."""
    require_lr_hive(h)
    rows = []
    for j in range(1, h.n + 1):
        row = [0] * h.mu[j - 1]
        for i in range(1, j):
            row.extend([i] * h.U(i, j))
        own = h.lam[j - 1] - len(row)
        row.extend([j] * own)
        rows.append(tuple(row))
    return SkewTableau(tuple(rows))


def extract_gt(h: Hive, orientation: str) -> GTPattern:
    """One of the three interlocking GT patterns of an LR hive.

    alpha: type mu, rows (alpha[i, i+1..n]) for i = 0..n-1;
    beta:  type nu, rows (beta[1..j, j]) for j = n..1;
    gamma: type lam, rows (gamma[i, i+d-1]) along each parallel d = 1..n.
    """
    require_lr_hive(h)
    e = edge_labels(h)
    n = h.n
    if orientation == "alpha":
        rows = tuple(tuple(e.alpha[(i, j)] for j in range(i + 1, n + 1)) for i in range(n))
    elif orientation == "beta":
        rows = tuple(tuple(e.beta[(i, j)] for i in range(1, j + 1)) for j in range(n, 0, -1))
    elif orientation == "gamma":
        rows = tuple(
            tuple(e.gamma[(i, i + d - 1)] for i in range(1, n - d + 2)) for d in range(1, n + 1)
        )
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return GTPattern(rows, orientation)


def kappa(h: Hive) -> Hive:
    """Drop an empty last diagonal, shrinking the side by one."""
    n = h.n
    if n == 0:
        raise ValueError("cannot shrink the empty hive")
    if h.lam[-1] or h.mu[-1] or h.nu[-1] or any(h.u[-1] if h.u else ()):
        raise ValueError(f"diagonal {n} is not empty")
    return Hive(n - 1, h.lam[:-1], h.mu[:-1], h.nu[:-1], h.u[:-1])


def kappa_inv(h: Hive) -> Hive:
    """Append an all-zero diagonal with zero boundary labels."""
    n = h.n
    u = h.u + ((0,) * n,) if n >= 1 else ()
    return Hive(n + 1, h.lam + (0,), h.mu + (0,), h.nu + (0,), u)
