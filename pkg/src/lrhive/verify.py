"""Exhaustive verification sweeps over bounded boundary triples.

Each suite walks every (lam, mu, nu) with |lam| <= max_weight, at most max_n
rows, mu, nu inside lam and matching weights, and checks the advertised
identities object by object.  The runner fans chunks of triples out to a
process pool when LR_THREADS asks for more than one worker; every check is a
pure function of its triple.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .hive import hive_from_tableau, is_lr_hive
from .hive_commuter import phi, psi, sigma, sigma_bar
from .lrcalc import count_modes, enumerate_hives, enumerate_lr, sweep_triples
from .tab_commuter import rho, rho_inverse

SUITES = ("involution", "symmetry", "crossmodel", "counts", "crystal")


def _fmt_triple(lam, mu, nu) -> str:
    return f"lam={list(lam)} mu={list(mu)} nu={list(nu)}"


def check_involution(lam, mu, nu) -> tuple[int, list[str]]:
    n = max(len(lam), 1)
    failures = []
    objects = 0
    for t in enumerate_lr(lam, mu, nu, n):
        objects += 1
        s = rho(t, n)
        if rho(s, n) != t:
            failures.append(f"rho not involutive on {t.rows} ({_fmt_triple(lam, mu, nu)})")
        if rho_inverse(s, n) != t:
            failures.append(f"rho_inverse(rho) != id on {t.rows}")
    for h in enumerate_hives(lam, mu, nu, n):
        objects += 1
        k = sigma(h)
        if not is_lr_hive(k):
            failures.append(f"sigma image invalid for u={h.u} ({_fmt_triple(lam, mu, nu)})")
            continue
        if sigma(k) != h:
            failures.append(f"sigma not involutive on u={h.u} ({_fmt_triple(lam, mu, nu)})")
        if sigma_bar(k) != h:
            failures.append(f"sigma_bar(sigma) != id on u={h.u}")
        if sigma(sigma_bar(h)) != h:
            failures.append(f"sigma(sigma_bar) != id on u={h.u}")
        if h.lam[-1] > 0 and any(h.u[-1] if h.u else ()):
            if sigma(psi(h)) != phi(k, n)[0]:
                failures.append(f"commuting square fails on u={h.u} ({_fmt_triple(lam, mu, nu)})")
    return objects, failures


def check_symmetry(lam, mu, nu) -> tuple[int, list[str]]:
    from .lrcalc import symmetry_check

    rep = symmetry_check(lam, mu, nu)
    failures = []
    if not rep["equal"]:
        failures.append(f"counts differ for {_fmt_triple(lam, mu, nu)}")
    if not rep["rho_bijection"]:
        failures.append(f"rho not a bijection for {_fmt_triple(lam, mu, nu)}")
    if not rep["sigma_bijection"]:
        failures.append(f"sigma not a bijection for {_fmt_triple(lam, mu, nu)}")
    return rep["count_mu_nu"] + rep["count_nu_mu"], failures


def check_crossmodel(lam, mu, nu) -> tuple[int, list[str]]:
    n = max(len(lam), 1)
    failures = []
    objects = 0
    for t in enumerate_lr(lam, mu, nu, n):
        objects += 1
        if hive_from_tableau(rho(t, n), n) != sigma(hive_from_tableau(t, n)):
            failures.append(f"models disagree on {t.rows} ({_fmt_triple(lam, mu, nu)})")
    return objects, failures


def check_counts(lam, mu, nu) -> tuple[int, list[str]]:
    modes = count_modes(lam, mu, nu)
    if len(set(modes.values())) > 1:
        return 1, [f"mode disagreement {modes} for {_fmt_triple(lam, mu, nu)}"]
    return 1, []


def check_crystal(lam, mu, nu) -> tuple[int, list[str], int, int, list]:
    from .crystal import commutor_hk

    n = max(len(lam), 1)
    failures: list[str] = []
    instances = 0
    matches = 0
    counterexamples = []
    for t in enumerate_lr(lam, mu, nu, n):
        instances += 1
        image = commutor_hk(t, n)
        if image == rho(t, n):
            matches += 1
        else:
            counterexamples.append(
                {
                    "triple": [list(lam), list(mu), list(nu)],
                    "input": [list(r) for r in t.rows],
                    "deletion_image": [list(r) for r in rho(t, n).rows],
                    "evacuation_image": [list(r) for r in image.rows],
                }
            )
    return instances, failures, instances, matches, counterexamples


def _run_chunk(args):
    suite, triples = args
    objects = 0
    failures: list[str] = []
    extra = {"instances": 0, "matches": 0, "counterexamples": []}
    for lam, mu, nu in triples:
        if suite == "crystal":
            obj, fail, inst, match, ces = check_crystal(lam, mu, nu)
            extra["instances"] += inst
            extra["matches"] += match
            extra["counterexamples"].extend(ces)
        else:
            obj, fail = {
                "involution": check_involution,
                "symmetry": check_symmetry,
                "crossmodel": check_crossmodel,
                "counts": check_counts,
            }[suite](lam, mu, nu)
        objects += obj
        failures.extend(fail)
    return objects, failures, extra


def run_suite(suite: str, max_weight: int, max_n: int, workers: int | None = None) -> dict:
    """Run one suite (or 'all') and return the machine-readable report."""
    if suite == "all":
        reports = [run_suite(s, max_weight, max_n, workers) for s in SUITES]
        return {
            "suite": "all",
            "bounds": {"max_weight": max_weight, "max_n": max_n},
            "reports": reports,
            "triples_checked": sum(r["triples_checked"] for r in reports),
            "objects_checked": sum(r["objects_checked"] for r in reports),
            "failures": [f for r in reports for f in r["failures"]],
            "passed": all(r["passed"] for r in reports),
        }
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    triples = list(sweep_triples(max_weight, max_n))
    if workers is None:
        workers = int(os.environ.get("LR_THREADS", "1") or "1")
    chunks = _chunked(triples, workers)
    results = []
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, [(suite, c) for c in chunks]))
    else:
        results = [_run_chunk((suite, triples))]
    objects = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    report = {
        "suite": suite,
        "bounds": {"max_weight": max_weight, "max_n": max_n},
        "triples_checked": len(triples),
        "objects_checked": objects,
        "failures": failures,
        "passed": not failures,
    }
    if suite == "crystal":
        instances = sum(r[2]["instances"] for r in results)
        matches = sum(r[2]["matches"] for r in results)
        ces = [c for r in results for c in r[2]["counterexamples"]]
        report["coincidence"] = {
            "instances": instances,
            "matches": matches,
            "rate": 1.0 if instances == 0 else matches / instances,
            "counterexamples": ces,
        }
        report["passed"] = report["passed"] and (matches + len(ces) == instances)
    return report


def _chunked(items, parts):
    parts = max(1, min(parts, len(items)) if items else 1)
    size = (len(items) + parts - 1) // parts if items else 1
    return [items[i : i + size] for i in range(0, len(items), size)] or [[]]


def report_to_text(report: dict) -> str:
    lines = []
    if report["suite"] == "all":
        for sub in report["reports"]:
            lines.append(report_to_text(sub).rstrip())
    else:
        status = "pass" if report["passed"] else "FAIL"
        lines.append(
            f"[{status}] suite={report['suite']} triples={report['triples_checked']} "
            f"objects={report['objects_checked']} failures={len(report['failures'])}"
        )
        if report["suite"] == "crystal" and "coincidence" in report:
            c = report["coincidence"]
            lines.append(
                f"       coincidence: {c['matches']}/{c['instances']} "
                f"(rate {c['rate']:.4f}, {len(c['counterexamples'])} counterexamples)"
            )
        for f in report["failures"][:20]:
            lines.append(f"       {f}")
    return "\n".join(lines) + "\n"
