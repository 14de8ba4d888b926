"""Hive path removals and additions, and the commutativity map on hives.

All operators work on the (boundary, upright-gradient) representation; the
edge labels along a path are adjusted implicitly by the boundary and gradient
updates, with an optional edge-level trace for rendering.  A removal path
climbs the last diagonal through gradient-0 upright rhombi, turns left at the
first positive gradient (decrementing it), re-enters the next diagonal above
the rhombus it just incremented, and exits on the left boundary once nothing
positive remains above it.  Additions run the mirror route downward.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hive import EMPTY_HIVE, Hive, kappa, kappa_inv, require_lr_hive
from .shapes import padded

Edge = tuple[str, int]  # ("alpha[i,j]", delta)


@dataclass(frozen=True)
class RemovalPath:
    """One path removal: its kind, traversed edges and where it ended.

    kind "i" strips the bottom-right corner (terminating_level 0), "ii" is the
    zig-zag exiting the left boundary at terminating_level, "iii" runs
    straight up the last diagonal, "iv" is the top-exit removal used by the
    involution analysis.
    """

    kind: str
    edges: tuple[Edge, ...]
    start_diagonal: int
    terminating_level: int


def _climb(u: list[list[int]], r: int, record: list | None) -> int:
    """Remove one zig-zag path from diagonal r; returns the exit level.

    u[j-2][i-1] holds U_{ij}.  The scan in each diagonal p starts at rhombus
    index s and moves upward (decreasing index); the first positive gradient
    is the head (-1) and, unless the path crossed below the whole diagonal,
    the rhombus just entered in diagonal p-1 is the foot (+1).
    """
    p, s = r, r - 1
    while True:
        head = 0
        for i in range(s, 0, -1):
            if u[p - 2][i - 1] > 0:
                head = i
                break
        if record is not None:
            _record_ladder_up(record, p, s, head)
        if head == 0:
            return p
        u[p - 2][head - 1] -= 1
        if head < p - 1:
            u[p - 3][head - 1] += 1
        p, s = p - 1, head - 1


def _record_ladder_up(record: list, p: int, s: int, head: int) -> None:
    entry = s + 1
    if entry == p:
        record.append((f"gamma[{p},{p}]", -1))
    stop = head if head else 0
    for i in range(s, stop, -1):
        record.append((f"alpha[{i},{p}]", -1))
        record.append((f"gamma[{i},{p}]", -1))
    record.append((f"alpha[{stop},{p}]", -1))
    if head:
        record.append((f"beta[{head},{p - 1}]", +1))


def chi(h: Hive, r: int, _record: list | None = None) -> Hive:
    """Corner removal: lam_r and nu_r each drop by one."""
    _check_last(h, r)
    if h.nu[r - 1] <= 0:
        raise ValueError(f"nu_{r} = {h.nu[r - 1]} is not positive")
    if _record is not None:
        _record += [(f"gamma[{r},{r}]", -1), (f"beta[{r},{r}]", -1)]
    return Hive(h.n, _dec(h.lam, r), h.mu, _dec(h.nu, r), h.u)


def phi(h: Hive, r: int, _record: list | None = None) -> tuple[Hive, int]:
    """Zig-zag removal from lam_r to the left boundary; returns the exit level."""
    _check_last(h, r)
    u = h.u_lists()
    if r < 2 or not any(u[r - 2]):
        raise ValueError(f"diagonal {r} has no positive upright gradient")
    k = _climb(u, r, _record)
    return Hive(h.n, _dec(h.lam, r), _dec(h.mu, k), h.nu, _freeze(u)), k


def omega(h: Hive, r: int, _record: list | None = None) -> Hive:
    """Straight removal up diagonal r: lam_r and mu_r each drop by one."""
    _check_last(h, r)
    if h.mu[r - 1] <= 0:
        raise ValueError(f"mu_{r} = {h.mu[r - 1]} is not positive")
    if _record is not None:
        _record.append((f"gamma[{r},{r}]", -1))
        for i in range(r - 1, -1, -1):
            if i:
                _record.append((f"gamma[{i},{r}]", -1))
            _record.append((f"alpha[{i},{r}]", -1))
    return Hive(h.n, _dec(h.lam, r), _dec(h.mu, r), h.nu, h.u)


def psi(h: Hive) -> Hive:
    """Top-exit removal from the last diagonal.

    With k the topmost positive gradient position in diagonal n, the path
    drops lam_n, nu_k and U_{kn} by one and leaves every other gradient alone.
    """
    n = h.n
    if n < 2 or h.lam[n - 1] <= 0:
        raise ValueError("last diagonal has no cell to remove")
    k = 0
    for i in range(1, n):
        if h.U(i, n) > 0:
            k = i
            break
    if k == 0:
        raise ValueError(f"diagonal {n} has no positive upright gradient")
    u = h.u_lists()
    u[n - 2][k - 1] -= 1
    return Hive(n, _dec(h.lam, n), h.mu, _dec(h.nu, k), _freeze(u))


def theta_full(h: Hive, r: int, paths: list[RemovalPath] | None = None) -> tuple[Hive, dict[int, int]]:
    """Empty diagonal r completely; returns the counts of exits per level.

    Phase counts are fixed up front from the boundary labels: nu_r corner
    removals, lam_r - mu_r - nu_r zig-zags, mu_r straight removals.
    """
    _check_last(h, r)
    lam_r, mu_r, nu_r = h.lam[r - 1], h.mu[r - 1], h.nu[r - 1]
    n_phi = lam_r - mu_r - nu_r
    if n_phi < 0:
        raise ValueError(f"lam_{r} - mu_{r} - nu_{r} = {n_phi} is negative")
    v: dict[int, int] = {}
    for _ in range(nu_r):
        rec = [] if paths is not None else None
        h = chi(h, r, rec)
        if paths is not None:
            paths.append(RemovalPath("i", tuple(rec), r, 0))
    for _ in range(n_phi):
        rec = [] if paths is not None else None
        h, k = phi(h, r, rec)
        v[k] = v.get(k, 0) + 1
        if paths is not None:
            paths.append(RemovalPath("ii", tuple(rec), r, k))
    for _ in range(mu_r):
        rec = [] if paths is not None else None
        h = omega(h, r, rec)
        if paths is not None:
            paths.append(RemovalPath("iii", tuple(rec), r, r))
    return h, v


@dataclass(frozen=True)
class TruncatedHive:
    """The rightmost n-r diagonals of an n-hive under construction.

    Boundary labels: lam and nu tails for the occupied diagonals r+1..n, the
    full outer right boundary mu, and the inner (left) boundary mu_inner of
    length r.  v[s] holds the gradients of diagonal r+1+s, top to bottom.
    """

    n: int
    r: int
    lam_tail: tuple[int, ...]
    nu_tail: tuple[int, ...]
    mu_outer: tuple[int, ...]
    mu_inner: tuple[int, ...]
    v: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not (0 <= self.r <= self.n):
            raise ValueError("need 0 <= r <= n")
        if len(self.lam_tail) != self.n - self.r or len(self.nu_tail) != self.n - self.r:
            raise ValueError("boundary tails must cover diagonals r+1..n")
        if len(self.mu_outer) != self.n or len(self.mu_inner) != self.r:
            raise ValueError("mu boundaries have the wrong length")
        if len(self.v) != self.n - self.r:
            raise ValueError("one gradient column per occupied diagonal required")
        for s, col in enumerate(self.v):
            if len(col) != self.r + s:
                raise ValueError(f"diagonal {self.r + 1 + s} needs {self.r + s} gradients")

    def V(self, k: int, s: int) -> int:
        """Gradient V_{ks} of occupied diagonal s, 1 <= k < s, s > r."""
        return self.v[s - self.r - 1][k - 1]

    def violation(self) -> str | None:
        if any(x < 0 for col in self.v for x in col):
            return "negative gradient"
        if any(b > a for a, b in zip(self.mu_inner, self.mu_inner[1:])):
            return "inner boundary not weakly decreasing"
        for k in range(1, self.r + 1):
            drop = sum(self.V(k, s) for s in range(max(k + 1, self.r + 1), self.n + 1))
            if self.mu_inner[k - 1] != self.mu_outer[k - 1] - drop:
                return f"inner boundary inconsistent at level {k}"
        for s in range(self.r + 1, self.n + 1):
            own = self.mu_outer[s - 1] - sum(self.V(s, t) for t in range(s + 1, self.n + 1))
            idx = s - self.r - 1
            if self.lam_tail[idx] != self.nu_tail[idx] + sum(self.v[idx]) + own:
                return f"triangle condition fails on diagonal {s}"
        return None


def empty_truncated(n: int, mu: tuple[int, ...]) -> TruncatedHive:
    return TruncatedHive(n, n, (), (), padded(mu, n), padded(mu, n), ())


def _extend_truncated(k: TruncatedHive, lam_r: int, nu_r: int, vcol: tuple[int, ...]) -> TruncatedHive:
    r = k.r
    inner = tuple(a - b for a, b in zip(k.mu_inner, vcol + (0,) * (r - len(vcol))))[: r - 1]
    return TruncatedHive(
        k.n,
        r - 1,
        (lam_r,) + k.lam_tail,
        (nu_r,) + k.nu_tail,
        k.mu_outer,
        inner,
        (vcol,) + k.v,
    )


@dataclass(frozen=True)
class SigmaTrace:
    """Pairs (shrinking hive, growing truncated hive) plus the removal paths."""

    pairs: tuple[tuple[Hive, TruncatedHive], ...]
    paths: tuple[tuple[RemovalPath, ...], ...] = field(default_factory=tuple)


def sigma(h: Hive, trace: bool = False):
    """Commutativity map on hives: (lam, mu, nu) boundaries become (lam, nu, mu).

    Diagonal r of the output records how many zig-zag removals of the full
    r-th sweep exited at each level, and the inner boundary of the
    accumulator drops accordingly.
    """
    require_lr_hive(h)
    n = h.n
    cur = h
    acc = empty_truncated(n, h.mu)
    pairs = [(cur, acc)]
    all_paths = []
    vdiags: list[tuple[int, ...]] = []
    for r in range(n, 0, -1):
        paths: list[RemovalPath] | None = [] if trace else None
        lam_r, nu_r = cur.lam[r - 1], cur.nu[r - 1]
        cur, v = theta_full(cur, r, paths)
        vcol = tuple(v.get(i, 0) for i in range(1, r))
        cur = kappa(cur)
        acc = _extend_truncated(acc, lam_r, nu_r, vcol)
        pairs.append((cur, acc))
        if trace:
            all_paths.append(tuple(paths))
        vdiags.append(vcol)
    vdiags.reverse()
    k = Hive(n, h.lam, h.nu, h.mu, tuple(vdiags[1:]) if n >= 1 else ())
    if trace:
        return k, SigmaTrace(tuple(pairs), tuple(all_paths))
    return k


def chi_bar(h: Hive, r: int, _record: list | None = None) -> Hive:
    """Corner addition: lam_r and nu_r each grow by one."""
    _check_last(h, r)
    if _record is not None:
        _record += [(f"gamma[{r},{r}]", +1), (f"beta[{r},{r}]", +1)]
    return Hive(h.n, _inc(h.lam, r), h.mu, _inc(h.nu, r), h.u)


def omega_bar(h: Hive, r: int, _record: list | None = None) -> Hive:
    """Straight addition down diagonal r: lam_r and mu_r each grow by one."""
    _check_last(h, r)
    if _record is not None:
        _record.append((f"alpha[0,{r}]", +1))
        for i in range(1, r):
            _record.append((f"gamma[{i},{r}]", +1))
            _record.append((f"alpha[{i},{r}]", +1))
        _record.append((f"gamma[{r},{r}]", +1))
    return Hive(h.n, _inc(h.lam, r), _inc(h.mu, r), h.nu, h.u)


def phi_bar(h: Hive, k: int, _record: list | None = None) -> Hive:
    """Mirror zig-zag addition from mu_k down and right to lam_r (r = side)."""
    r = h.n
    if not (1 <= k < r):
        raise ValueError(f"need 1 <= k < {r}")
    u = h.u_lists()
    p, s = k, 1
    while True:
        foot = 0
        for i in range(s, p):
            if u[p - 2][i - 1] > 0:
                foot = i
                break
        if _record is not None:
            _record_ladder_down(_record, p, s, foot, r)
        if foot == 0:
            for q in range(p + 1, r + 1):
                u[q - 2][q - 2] += 1
            break
        u[p - 2][foot - 1] -= 1
        if p == r:
            raise ValueError("addition path blocked in the last diagonal")
        u[p - 1][foot - 1] += 1
        p, s = p + 1, foot + 1
    return Hive(h.n, _inc(h.lam, r), _inc(h.mu, k), h.nu, _freeze(u))


def _record_ladder_down(record: list, p: int, s: int, foot: int, r: int) -> None:
    record.append((f"alpha[{s - 1},{p}]", +1))
    stop = foot if foot else p
    for i in range(s, stop):
        record.append((f"gamma[{i},{p}]", +1))
        record.append((f"alpha[{i},{p}]", +1))
    if foot:
        record.append((f"beta[{foot},{p}]", -1))
    else:
        for q in range(p + 1, r + 1):
            record.append((f"beta[{q - 1},{q - 1}]", -1))
            record.append((f"alpha[{q - 1},{q}]", +1))
        record.append((f"gamma[{r},{r}]", +1))


def sigma_bar(k: Hive, trace: bool = False):
    """Inverse of the removal map, rebuilt diagonal by diagonal from k.

    Reading k (boundaries lam, a, b with a on the left): each stage r first
    appends an empty diagonal, then applies the straight additions, the
    zig-zag additions at levels r-1 down to 1 with multiplicities taken from
    diagonal r of k, and finally the corner additions.
    """
    require_lr_hive(k)
    n = k.n
    left = k.mu
    right = k.nu
    mu_stage = []
    for r in range(1, n + 1):
        tail = sum(k.U(r, s) for s in range(r + 1, n + 1))
        mu_stage.append(right[r - 1] - tail)
    h = EMPTY_HIVE
    steps = []
    for r in range(1, n + 1):
        h = kappa_inv(h)
        if mu_stage[r - 1] < 0:
            raise ValueError(f"stage {r} straight-addition count is negative")
        for _ in range(mu_stage[r - 1]):
            h = omega_bar(h, r)
        for lev in range(r - 1, 0, -1):
            for _ in range(k.U(lev, r)):
                h = phi_bar(h, lev)
        for _ in range(left[r - 1]):
            h = chi_bar(h, r)
        if h.lam[r - 1] != k.lam[r - 1]:
            raise ValueError(
                f"stage {r} rebuilt lam_{r} = {h.lam[r - 1]} != {k.lam[r - 1]}; "
                "input is not in the image of the removal map"
            )
        if trace:
            steps.append(h)
    if trace:
        return h, tuple(steps)
    return h


def eta(h: Hive) -> Hive:
    """Empty the last diagonal of h the mirror way round.

    Straight removals first (one per left-boundary unit), then top-exit
    removals until the last diagonal's gradients vanish, then corner
    removals.  Used to cross-check the removal sweep against the involution
    square.
    """
    n = h.n
    lam_n, mu_n, nu_n = h.lam[n - 1], h.mu[n - 1], h.nu[n - 1]
    for _ in range(mu_n):
        h = omega(h, n)
    for _ in range(lam_n - mu_n - nu_n):
        h = psi(h)
    for _ in range(nu_n):
        h = chi(h, n)
    return h


def _check_last(h: Hive, r: int) -> None:
    if r != h.n:
        raise ValueError(f"operator acts on the last diagonal; side is {h.n}, got r = {r}")
    if r < 1:
        raise ValueError("empty hive has no diagonals")


def _dec(seq: tuple[int, ...], pos: int) -> tuple[int, ...]:
    return seq[: pos - 1] + (seq[pos - 1] - 1,) + seq[pos:]


def _inc(seq: tuple[int, ...], pos: int) -> tuple[int, ...]:
    return seq[: pos - 1] + (seq[pos - 1] + 1,) + seq[pos:]


def _freeze(u: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(col) for col in u)
