"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal or
cache error.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from .cache import load as cache_load
from .cache import store as cache_store
from .errors import CacheError, ContextError
from .grass import GrassContext, default_d_max
from .oracles import build_fixtures
from .quantum import multiply
from .render import (
    partition_argument,
    qelem_text,
    restriction_table_json,
    table_csv,
    table_json,
)
from .suites import SUITES

DEFAULT_FIXTURE_PATH = os.path.join("fixtures", "oracle_fixtures.json")


def _context(k, n):
    try:
        return GrassContext(k, n)
    except ContextError as exc:
        raise click.UsageError(str(exc))


def _emit(text, out):
    if out == "-":
        click.echo(text, nl=False)
    else:
        tmp = out + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)


@click.group()
def cli():
    """Exact equivariant quantum Schubert calculus on Gr(k,n)."""


@cli.command()
@click.option("--k", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--d-max", type=int, default=None, help="Cap on exported q-powers.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", default="-", help="Output file, or - for stdout.")
@click.option(
    "--cache-dir",
    envvar="EQSCHUBERT_CACHE_DIR",
    default=None,
    help="Directory for the table cache (env EQSCHUBERT_CACHE_DIR).",
)
@click.option("--no-cache", is_flag=True, default=False)
def table(k, n, d_max, fmt, out, cache_dir, no_cache):
    """Compute and export the full structure-constant table."""
    ctx = _context(k, n)
    if d_max is None:
        d_max = default_d_max(ctx)
    if d_max < 0:
        raise click.UsageError("--d-max must be nonnegative")
    use_cache = cache_dir and not no_cache
    payload = None
    if use_cache:
        try:
            payload = cache_load(cache_dir, k, n, d_max)
        except CacheError as exc:
            click.echo("cache error: %s" % exc, err=True)
            sys.exit(3)
    if payload is None:
        payload = table_json(ctx, d_max)
        if use_cache:
            cache_store(cache_dir, k, n, d_max, payload)
    if fmt == "json":
        _emit(payload, out)
    else:
        _emit(table_csv(ctx, d_max), out)


@cli.command("multiply")
@click.option("--k", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--u", "u_text", required=True, help="Partition as a JSON array.")
@click.option("--v", "v_text", required=True, help="Partition as a JSON array.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def multiply_cmd(k, n, u_text, v_text, fmt):
    """Print the product of two basis classes."""
    ctx = _context(k, n)
    try:
        u = partition_argument(ctx, u_text)
        v = partition_argument(ctx, v_text)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    elem = multiply(u, v)
    if fmt == "text":
        click.echo(qelem_text(elem))
    else:
        from .render import poly_json

        rows = [
            {"w": list(w), "d": d, "poly": poly_json(c)}
            for (w, d), c in elem.canonical_items()
        ]
        click.echo(json.dumps(rows, sort_keys=True, separators=(",", ":")))


@cli.command()
@click.option("--k", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option(
    "--suite",
    "suite_names",
    multiple=True,
    help="Suites to run; defaults to all. Known: %s" % ", ".join(sorted(SUITES)),
)
@click.option("--d-max", type=int, default=None)
@click.option("--workers", type=int, default=1)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def verify(k, n, suite_names, d_max, workers, fmt):
    """Run verification suites; exit 0 only if every check passes."""
    ctx = _context(k, n)
    names = list(suite_names) or sorted(SUITES)
    for name in names:
        if name not in SUITES:
            raise click.UsageError(
                "unknown suite %r (known: %s)" % (name, ", ".join(sorted(SUITES)))
            )
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda name: SUITES[name](ctx, d_max), names))
    else:
        reports = [SUITES[name](ctx, d_max) for name in names]
    reports.sort(key=lambda rep: rep["suite"])
    if fmt == "json":
        click.echo(json.dumps(reports, sort_keys=True, separators=(",", ":")))
    else:
        for rep in reports:
            status = "pass" if rep["passed"] else "FAIL"
            detail = ", ".join(
                "%s=%s" % (key, rep[key])
                for key in sorted(rep)
                if key.endswith("checked") or key == "d_max"
            )
            click.echo(
                "%-14s %s%s" % (rep["suite"], status, " (%s)" % detail if detail else "")
            )
            for violation in rep["violations"]:
                click.echo("  violation: %s" % json.dumps(violation, sort_keys=True))
    if not all(rep["passed"] for rep in reports):
        sys.exit(1)


@cli.command()
@click.option("--k", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option(
    "--family", type=click.Choice(["schubert", "opposite"]), default="schubert"
)
@click.option("--out", default="-")
def restrictions(k, n, family, out):
    """Export the fixed-point restriction table as JSON."""
    ctx = _context(k, n)
    _emit(restriction_table_json(ctx, family), out)


@cli.command()
@click.option("--regen", is_flag=True, default=False, help="Rewrite the fixture file.")
@click.option("--path", default=DEFAULT_FIXTURE_PATH, show_default=True)
def fixtures(regen, path):
    """Check (or with --regen, rewrite) the oracle-stamped fixture file."""
    fresh = json.dumps(build_fixtures(), sort_keys=True, indent=1) + "\n"
    if regen:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        _emit(fresh, path)
        click.echo("wrote %s" % path)
        return
    try:
        with open(path, "r", encoding="utf-8") as fh:
            on_disk = fh.read()
    except OSError as exc:
        click.echo("cannot read %s: %s" % (path, exc), err=True)
        sys.exit(3)
    if on_disk != fresh:
        click.echo("fixture file %s is stale; rerun with --regen" % path, err=True)
        sys.exit(1)
    click.echo("fixtures match")


def main():
    cli()


if __name__ == "__main__":
    main()
