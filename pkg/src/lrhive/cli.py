"""Command-line client for the calculator service.

Every subcommand issues one HTTP request.  Without --server the service app
is mounted in-process, so no daemon is needed; with --server the same
requests go to a running instance (see `lrhive serve`).

Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""

from __future__ import annotations

import json
import sys

import click

from .serialize import parse_partition


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # some fastapi/starlette pairings grumble about their own test client
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _post(ctx, path: str, payload: dict) -> dict:
    with _client(ctx.obj.get("server")) as client:
        resp = client.post(path, json=payload)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(2)
    return resp.json()


def _load_object(path: str) -> dict:
    try:
        with click.open_file(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(2)


def _emit(data, output: str | None):
    text = json.dumps(data, indent=2) + "\n"
    if output:
        with click.open_file(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _partition_arg(text: str) -> list[int]:
    try:
        return list(parse_partition(text))
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


@click.group()
@click.option("--server", default=None, help="Base URL of a running service; default is in-process.")
@click.pass_context
def main(ctx, server):
    """Littlewood-Richardson calculator."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.option("--lambda", "lam", "--lam", required=True, help="Outer shape, e.g. 8,6,5,4.")
@click.option("--mu", required=True, help="Inner shape; empty string for the empty partition.")
@click.option("--nu", required=True, help="Weight.")
@click.option("--n", type=int, default=None)
@click.option(
    "--mode",
    type=click.Choice(["tableau", "hive", "gz", "bz", "kh", "rational"]),
    default="hive",
)
@click.pass_context
def coeff(ctx, lam, mu, nu, n, mode):
    """Print one multiplicity count."""
    payload = {
        "lambda": _partition_arg(lam),
        "mu": _partition_arg(mu),
        "nu": _partition_arg(nu),
        "n": n,
        "mode": mode,
    }
    click.echo(_post(ctx, "/coeff", payload)["coefficient"])


@main.command(name="enumerate")
@click.option("--lambda", "lam", "--lam", required=True)
@click.option("--mu", required=True)
@click.option("--nu", required=True)
@click.option("--n", type=int, default=None)
@click.option("--output", "-o", default=None, help="Write JSON here instead of stdout.")
@click.pass_context
def enumerate_cmd(ctx, lam, mu, nu, n, output):
    """List every tableau of the given shape and weight."""
    payload = {
        "lambda": _partition_arg(lam),
        "mu": _partition_arg(mu),
        "nu": _partition_arg(nu),
        "n": n,
    }
    _emit(_post(ctx, "/enumerate", payload), output)


@main.command()
@click.argument("map_name", type=click.Choice(["rho", "rho-inv", "sigma", "sigma-inv", "xi", "commutor"]))
@click.argument("input_path")
@click.option("--n", type=int, default=None)
@click.option("--trace", is_flag=True, help="Also emit the per-step trace.")
@click.option("--output", "-o", default=None)
@click.pass_context
def apply(ctx, map_name, input_path, n, trace, output):
    """Apply a bijection to a tableau or hive JSON file ('-' for stdin)."""
    payload = {"map": map_name, "object": _load_object(input_path), "n": n, "trace": trace}
    data = _post(ctx, "/apply", payload)
    if not trace:
        data = data["result"]
    _emit(data, output)


@main.command()
@click.argument("direction", type=click.Choice(["tableau-to-hive", "hive-to-tableau"]))
@click.argument("input_path")
@click.option("--n", type=int, default=None)
@click.option("--output", "-o", default=None)
@click.pass_context
def convert(ctx, direction, input_path, n, output):
    """Convert between the tableau and hive JSON forms."""
    payload = {"direction": direction, "object": _load_object(input_path), "n": n}
    _emit(_post(ctx, "/convert", payload)["result"], output)


@main.command()
@click.argument("op", type=click.Choice(["sigma", "dress", "feasible"]))
@click.argument("literal")
@click.option("--n", type=int, default=None)
@click.option("--mu", default=None, help="Left labels for 'feasible'.")
@click.option("--nu", default=None, help="Right labels for 'feasible'.")
@click.option("--output", "-o", default=None)
@click.pass_context
def usystem(ctx, op, literal, n, mu, nu, output):
    """Operate on a bare gradient array, e.g. "1;1,2;1,2,1"."""
    payload = {"op": op, "u": literal, "n": n}
    if mu is not None:
        payload["mu"] = _partition_arg(mu)
    if nu is not None:
        payload["nu"] = _partition_arg(nu)
    data = _post(ctx, "/usystem", payload)
    if op == "sigma":
        click.echo(data["u"])
    else:
        _emit({k: v for k, v in data.items() if v is not None}, output)


@main.command()
@click.argument("input_path")
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg"]), default="ascii")
@click.option("--output", "-o", default=None)
@click.pass_context
def render(ctx, input_path, fmt, output):
    """Draw a hive JSON file as text."""
    data = _post(ctx, "/render", {"hive": _load_object(input_path), "format": fmt})
    if output:
        with click.open_file(output, "w") as fh:
            fh.write(data["text"])
    else:
        click.echo(data["text"], nl=False)


@main.command()
@click.option(
    "--suite",
    type=click.Choice(["involution", "symmetry", "crossmodel", "counts", "crystal", "all"]),
    default="all",
)
@click.option("--max-weight", type=int, default=8)
@click.option("--max-n", type=int, default=3)
@click.option("--workers", type=int, default=None, help="Overrides LR_THREADS.")
@click.option("--json", "as_json", is_flag=True, help="Emit the full JSON report.")
@click.option("--output", "-o", default=None)
@click.pass_context
def verify(ctx, suite, max_weight, max_n, workers, as_json, output):
    """Run a verification sweep; exit 1 on any failure."""
    from .verify import report_to_text

    payload = {"suite": suite, "max_weight": max_weight, "max_n": max_n, "workers": workers}
    report = _post(ctx, "/verify", payload)
    if as_json or output:
        _emit(report, output)
    if not as_json:
        click.echo(report_to_text(report), nl=False)
    if not report["passed"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("lrhive.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
