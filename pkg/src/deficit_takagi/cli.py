"""Command-line front end (a thin client of the core library).

Exit codes: 0 success / all checks pass, 1 a verified mismatch or identity
counterexample, 2 usage or domain error.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from functools import wraps

import click

from . import __version__, identities, sequence
from .takagi import Dyadic, takagi_dyadic, takagi_enclosure, takagi_rational

COST_GUARD = 1 << 26  # naive/sets are O(n); refuse larger n unless --force

METHOD_CHOICES = click.Choice(["naive", "sets", "recurrence", "lemma2", "takagi", "all"])


def _domain_errors_exit_2(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc

    return wrapper


def _guard_cost(method: str, n: int, force: bool) -> None:
    if method in ("naive", "sets", "all") and n > COST_GUARD and not force:
        raise click.UsageError(
            f"method '{method}' is O(n) and n={n} exceeds 2^26; "
            "pass --force or use an O(log n) method"
        )


@click.group()
@click.version_option(version=__version__, prog_name="deficit-takagi")
def main() -> None:
    """Exact tools for the cumulated deficient binary digit sum."""


@main.command()
@click.argument("n", type=int)
@click.option("--method", type=METHOD_CHOICES, default="recurrence", show_default=True,
              help="Computation path; 'all' runs every path and cross-checks.")
@click.option("--force", is_flag=True, help="Bypass the O(n) cost guard.")
@click.pass_context
@_domain_errors_exit_2
def compute(ctx: click.Context, n: int, method: str, force: bool) -> None:
    """Print term N of the sequence."""
    _guard_cost(method, n, force)
    if method == "all":
        values = sequence.compute_all(n)
        match = len(set(values.values())) == 1
        click.echo(" ".join(str(v) for v in values.values())
                   + (" MATCH" if match else " MISMATCH"))
        if not match:
            ctx.exit(1)
    else:
        click.echo(str(sequence.compute(n, method)))


def _emit_terms(out, terms, fmt: str) -> None:
    if fmt == "bfile":
        for n, value in terms:
            out.write(f"{n} {value}\n")
    elif fmt == "csv":
        out.write("n,value\n")
        for n, value in terms:
            out.write(f"{n},{value}\n")
    else:
        out.write(json.dumps([[n, value] for n, value in terms]) + "\n")


@main.command("range")
@click.argument("start", type=int)
@click.argument("end", type=int)
@click.option("--format", "fmt", type=click.Choice(["bfile", "csv", "json"]),
              default="bfile", show_default=True)
@click.option("--method", type=METHOD_CHOICES, default="recurrence", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Output path (default: stdout).")
@click.option("--force", is_flag=True, help="Bypass the O(n) cost guard.")
@_domain_errors_exit_2
def term_range(start: int, end: int, fmt: str, method: str, out: str | None,
               force: bool) -> None:
    """Emit terms START..END in b-file, CSV or JSON form."""
    if start > end:
        raise click.UsageError(f"start {start} exceeds end {end}")
    if method == "all":
        raise click.UsageError("range needs a single method")
    _guard_cost(method, end, force)
    if method == "naive":
        terms = sequence.naive_range(start, end)
    else:
        terms = ((n, sequence.compute(n, method)) for n in range(start, end + 1))
    if out is None:
        _emit_terms(sys.stdout, terms, fmt)
    else:
        try:
            handle = open(out, "w")
        except OSError as exc:
            raise click.UsageError(f"cannot open {out!r}: {exc}") from exc
        with handle:
            _emit_terms(handle, terms, fmt)


@main.command()
@click.argument("num", type=int)
@click.argument("den", type=int, required=False)
@click.option("--exp", type=int, default=None,
              help="Dyadic denominator exponent: evaluate at NUM/2^EXP.")
@click.option("--enclose", type=int, default=None, metavar="N",
              help="Print an N-term interval enclosure instead of the exact value.")
@_domain_errors_exit_2
def takagi(num: int, den: int | None, exp: int | None, enclose: int | None) -> None:
    """Exact Takagi value at NUM/DEN (rational) or NUM/2^EXP (dyadic)."""
    if (den is None) == (exp is None):
        raise click.UsageError("give exactly one of DEN or --exp")
    if den is not None and den == 0:
        raise click.UsageError("denominator must be nonzero")
    point = Dyadic(num, exp).as_fraction() if exp is not None else Fraction(num, den)
    if enclose is not None:
        interval = takagi_enclosure(point, enclose)
        click.echo(f"[{interval.lo}, {interval.hi}]")
    elif exp is not None:
        click.echo(str(takagi_dyadic(Dyadic(num, exp))))
    else:
        click.echo(str(takagi_rational(point)))


@main.command()
@click.argument("identity_id")
@click.option("--kmax", type=int, default=None, help="Override the sweep's k limit.")
@click.option("--mmax", type=int, default=None, help="Override the sweep's m limit.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@click.option("--corrupt", is_flag=True,
              help="Negative control: add 1 to every right-hand side.")
@click.pass_context
@_domain_errors_exit_2
def verify(ctx: click.Context, identity_id: str, kmax: int | None,
           mmax: int | None, fmt: str, corrupt: bool) -> None:
    """Sweep one catalog identity (or 'all'); exit 1 on any counterexample."""
    ids = None if identity_id == "all" else [identity_id]
    if ids is not None and ids[0] not in identities.CATALOG:
        raise click.UsageError(
            f"unknown identity '{identity_id}'; choose from: "
            + " ".join(identities.CATALOG) + " all")
    reports = identities.verify_all(ids=ids, kmax=kmax, mmax=mmax, corrupt=corrupt)
    if fmt == "json":
        payload = [report.to_json_dict() for report in reports]
        click.echo(json.dumps(payload[0] if ids is not None else payload, indent=2))
    else:
        for report in reports:
            ranges = ", ".join(f"{axis}={span}" for axis, span in report.ranges.items())
            if report.passed:
                click.echo(f"{report.id}: PASS ({report.cases} cases; {ranges})")
            else:
                first = report.counterexamples[0]
                click.echo(f"{report.id}: FAIL ({len(report.counterexamples)} counterexamples; "
                           f"first at {first['params']}: lhs={first['lhs']} rhs={first['rhs']})")
            if report.empty_sweep:
                click.echo(f"{report.id}: warning: empty sweep at these limits", err=True)
    if not all(report.passed for report in reports):
        ctx.exit(1)


@main.command()
@click.argument("which", type=click.Choice(["a026644", "a000975", "power4", "minima"]))
@click.option("--count", type=int, default=10, show_default=True,
              help="Number of terms (a026644/a000975).")
@click.option("--limit", type=int, default=None,
              help="Emit all terms <= LIMIT instead of a fixed count.")
@click.option("--mmax", type=int, default=5, show_default=True,
              help="Largest m for power4.")
@click.option("--kmax", type=int, default=8, show_default=True,
              help="Largest interval exponent for minima.")
@_domain_errors_exit_2
def special(which: str, count: int, limit: int | None, mmax: int, kmax: int) -> None:
    """Special index sequences and per-interval minima."""
    if which in ("a026644", "a000975"):
        gen = identities.a026644_recurrence if which == "a026644" else identities.lichtenberg
        if limit is not None:
            values = [term for term in gen(64) if term <= limit]
        else:
            values = gen(count)
        click.echo(" ".join(str(term) for term in values))
    elif which == "power4":
        pairs = identities.power4_fixed_points(mmax)
        click.echo(" ".join(f"({index},{value})" for index, value in pairs))
    else:
        for k in range(1, kmax + 1):
            minimum = identities.interval_minimum(k)
            click.echo(f"{minimum.k} {minimum.argmin} {minimum.value}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main(prog_name="deficit-takagi")
