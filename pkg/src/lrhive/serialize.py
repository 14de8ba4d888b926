"""JSON forms for tableaux, hives and patterns.

Tableaux: {"outer": [...], "inner": [...], "rows": [[0,0,1,2], ...]} with the
inner zeros present in the rows.  Hives: {"n": 4, "lambda": [...], "mu":
[...], "nu": [...], "u": [[1],[1,2],[1,2,1]]} where u[k] is diagonal k+2.
GT patterns are arrays of arrays, longest row first.  All forms round-trip
exactly.
"""

from __future__ import annotations

from .hive import Hive
from .shapes import GTPattern, padded
from .tableaux import SkewTableau


def tableau_to_json(t: SkewTableau) -> dict:
    return {
        "outer": list(t.outer),
        "inner": list(t.inner),
        "rows": [list(r) for r in t.rows],
    }


def tableau_from_json(data: dict) -> SkewTableau:
    try:
        rows = tuple(tuple(int(x) for x in row) for row in data["rows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed tableau JSON: {exc}") from exc
    t = SkewTableau(rows)
    if "outer" in data and list(t.outer) != [int(x) for x in data["outer"]]:
        raise ValueError("declared outer shape disagrees with the rows")
    if "inner" in data and list(t.inner) != [int(x) for x in data["inner"]]:
        raise ValueError("declared inner shape disagrees with the rows")
    return t


def hive_to_json(h: Hive) -> dict:
    return {
        "n": h.n,
        "lambda": list(h.lam),
        "mu": list(h.mu),
        "nu": list(h.nu),
        "u": [list(d) for d in h.u],
    }


def hive_from_json(data: dict) -> Hive:
    try:
        n = int(data["n"])
        lam = tuple(int(x) for x in data["lambda"])
        mu = tuple(int(x) for x in data["mu"])
        nu = tuple(int(x) for x in data["nu"])
        u = tuple(tuple(int(x) for x in d) for d in data.get("u", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed hive JSON: {exc}") from exc
    return Hive(n, padded(lam, n), padded(mu, n), padded(nu, n), u)


def gt_to_json(p: GTPattern) -> list:
    return [list(r) for r in p.rows]


def gt_from_json(data) -> GTPattern:
    return GTPattern(tuple(tuple(int(x) for x in row) for row in data))


def parse_partition(text: str) -> tuple[int, ...]:
    """Comma-separated inline form; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
