"""Bare triangular gradient arrays and their boundary dressings.

A U-system is a hive stripped of its boundary labels.  The zig-zag removal
pipeline is driven entirely by the gradients, so it acts on U-systems
directly; dressings are the boundary triples that turn a system back into a
valid hive, and there are infinitely many of them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .hive import Hive, is_lr_hive

Diagonals = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class USystem:
    n: int
    u: Diagonals  # u[d] is diagonal d+2, top to bottom, as in Hive

    def __post_init__(self):
        u = tuple(tuple(int(x) for x in diag) for diag in self.u)
        if len(u) != max(self.n - 1, 0):
            raise ValueError(f"expected {max(self.n - 1, 0)} diagonals")
        for d, diag in enumerate(u):
            if len(diag) != d + 1:
                raise ValueError(f"diagonal {d + 2} must have {d + 1} entries")
            if any(x < 0 for x in diag):
                raise ValueError("gradients must be nonnegative")
        object.__setattr__(self, "u", u)

    def U(self, i: int, j: int) -> int:
        return self.u[j - 2][i - 1]


def from_literal(text: str, n: int | None = None) -> USystem:
    """Parse the textual form "1;1,2;1,2,1" (diagonals separated by ';')."""
    text = text.strip()
    diags = []
    if text:
        for chunk in text.split(";"):
            diags.append(tuple(int(x) for x in chunk.split(",")))
    if n is None:
        n = len(diags) + 1 if diags else 1
    return USystem(n, tuple(diags))


def to_literal(s: USystem) -> str:
    return ";".join(",".join(str(x) for x in diag) for diag in s.u)


def of_hive(h: Hive) -> USystem:
    return USystem(h.n, h.u)


def sigma_u(s: USystem) -> USystem:
    """Boundary-free removal pipeline; involutive.

    Each stage empties the last diagonal by zig-zag removals alone, records
    how many exited at each level, and trims the diagonal.
    """
    u = [list(d) for d in s.u]
    n = s.n
    vdiags: list[tuple[int, ...]] = []
    for r in range(n, 1, -1):
        counts = [0] * r
        for _ in range(sum(u[r - 2])):
            k = _climb(u, r)
            counts[k] += 1
        vdiags.append(tuple(counts[1:]))
        u.pop()
    vdiags.reverse()
    return USystem(n, tuple(tuple(d) for d in vdiags))


def _climb(u: list[list[int]], r: int) -> int:
    p, s = r, r - 1
    while True:
        head = 0
        for i in range(s, 0, -1):
            if u[p - 2][i - 1] > 0:
                head = i
                break
        if head == 0:
            return p
        u[p - 2][head - 1] -= 1
        if head < p - 1:
            u[p - 3][head - 1] += 1
        p, s = p - 1, head - 1


def canonical_dressing(s: USystem) -> Hive:
    """Boundary labels built from plain gradient sums, no max/min involved.

    mu_i sums the gradients of diagonals beyond i, nu_i those with top index
    at least i; the base follows from the triangle conditions.
    """
    n = s.n
    pairs = [(j, k) for k in range(2, n + 1) for j in range(1, k)]
    mu = tuple(sum(s.U(j, k) for j, k in pairs if k > i) for i in range(1, n + 1))
    nu = tuple(sum(s.U(j, k) for j, k in pairs if j >= i) for i in range(1, n + 1))
    lam = forced_base(s, mu, nu)
    return Hive(n, lam, mu, nu, s.u)


def forced_base(s: USystem, mu, nu) -> tuple[int, ...]:
    """The base labels forced by given left/right labels via the triangles."""
    n = s.n
    return tuple(
        mu[l - 1]
        + nu[l - 1]
        + sum(s.U(j, l) for j in range(1, l))
        - sum(s.U(l, k) for k in range(l + 1, n + 1))
        for l in range(1, n + 1)
    )


def dressing_constraints(s: USystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimal required differences (mu_l - mu_{l+1}, nu_l - nu_{l+1}), l < n."""
    n = s.n
    mu_req = []
    nu_req = []
    for l in range(1, n):
        mu_req.append(
            max(
                sum(s.U(k, l + 1) for k in range(1, i + 1))
                - sum(s.U(k, l) for k in range(1, i))
                for i in range(1, l + 1)
            )
        )
        nu_req.append(
            max(
                sum(s.U(l, k) for k in range(j, n + 1))
                - sum(s.U(l + 1, k) for k in range(j + 1, n + 1))
                for j in range(l + 1, n + 1)
            )
        )
    return tuple(mu_req), tuple(nu_req)


def dressing_feasible(s: USystem, mu, nu) -> tuple[bool, tuple[int, ...]]:
    """Whether (mu, nu) dress the system into a hive; also the forced base."""
    n = s.n
    mu = tuple(int(x) for x in mu)
    nu = tuple(int(x) for x in nu)
    if len(mu) != n or len(nu) != n:
        raise ValueError(f"boundary sequences must have length {n}")
    lam = forced_base(s, mu, nu)
    mu_req, nu_req = dressing_constraints(s)
    ok = all(mu[l - 1] - mu[l] >= mu_req[l - 1] for l in range(1, n)) and all(
        nu[l - 1] - nu[l] >= nu_req[l - 1] for l in range(1, n)
    )
    ok = ok and (n == 0 or (mu[-1] >= 0 and nu[-1] >= 0))
    return ok, lam


def shift_dressing(h: Hive, p: int, q: int) -> Hive:
    """Add p, q and p+q to all left, right and base labels; gradients fixed."""
    r = p + q
    return Hive(
        h.n,
        tuple(x + r for x in h.lam),
        tuple(x + p for x in h.mu),
        tuple(x + q for x in h.nu),
        h.u,
    )


def sample_dressings(s: USystem, count: int, seed: int, max_slack: int = 4) -> list[Hive]:
    """Deterministic sample of valid dressings: canonical minimums plus slack."""
    rng = random.Random(seed)
    mu_req, nu_req = dressing_constraints(s)
    n = s.n
    out = []
    for _ in range(count):
        mu = [rng.randint(0, max_slack)]
        for l in range(n - 1, 0, -1):
            mu.append(mu[-1] + mu_req[l - 1] + rng.randint(0, max_slack))
        mu.reverse()
        nu = [rng.randint(0, max_slack)]
        for l in range(n - 1, 0, -1):
            nu.append(nu[-1] + nu_req[l - 1] + rng.randint(0, max_slack))
        nu.reverse()
        h = Hive(n, forced_base(s, tuple(mu), tuple(nu)), tuple(mu), tuple(nu), s.u)
        if not is_lr_hive(h):
            raise AssertionError("sampled dressing failed validation")
        out.append(h)
    return out
