"""Command-line interface.

Exit status contract: 0 all checks pass, 1 any verification failure,
2 input/usage errors.
"""

from __future__ import annotations

import sys
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple

import click

from . import classify as cls
from .codes import code_from_generator_element, with_check_element
from .constructions import mds_pair
from .fields import GF, field_make, is_prime
from .groups import AbelianGroup, parse_group
from .groupring import from_string
from .mindist import BudgetExceeded, Budgets, min_distance
from .records import CodeRecord, RecordError, format_record, parse_record_file
from .report import write_report
from .verify import verify_records

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_IO = 2


def shipped_table_paths() -> List[Path]:
    root = resources.files("ringcodes").joinpath("data")
    return sorted(Path(str(root)).glob("*.codes"))


def _parse_field_opt(text: str) -> GF:
    if "^" in text:
        p, m = text.split("^", 1)
        return field_make(int(p), int(m))
    return field_make(int(text), 1)


def _load_context(field: str, group: str, u: str, v: Optional[str]):
    try:
        f = _parse_field_opt(field)
        g = parse_group(group)
        ue = from_string(u, f, g)
        ve = from_string(v, f, g) if v else None
    except ValueError as exc:
        raise click.ClickException(str(exc))
    return f, g, ue, ve


def _budgets(budget: Optional[int]) -> Budgets:
    if budget is None:
        return Budgets()
    return Budgets(exhaustive=budget, subsets=budget)


@click.group()
def main():
    """Checkable codes from finite abelian group rings."""


field_opt = click.option("--field", required=True, help="p or p^m, e.g. 5 or 2^2")
group_opt = click.option("--group", required=True, help="cyclic factor orders, e.g. 6x12")
u_opt = click.option("--u", "u_str", required=True, help="generator element coefficients")
v_opt = click.option("--v", "v_str", default=None, help="check element coefficients")
seed_opt = click.option("--seed", default=0, show_default=True, type=int)
budget_opt = click.option("--budget", default=None, type=int,
                          help="work cap for the distance engines")


@main.command("verify-table")
@click.argument("paths", nargs=-1, type=click.Path())
@click.option("--tier", default="normal", show_default=True,
              type=click.Choice(["normal", "extended", "all"]))
@click.option("--out", "out_dir", default=None, type=click.Path(),
              help="directory for report.tsv and report.png")
@seed_opt
@budget_opt
def cmd_verify_table(paths, tier, out_dir, seed, budget):
    """Verify every record in the given files (default: all shipped tables)."""
    files = [Path(p) for p in paths] if paths else shipped_table_paths()
    records: List[CodeRecord] = []
    try:
        for path in files:
            records.extend(parse_record_file(path))
    except RecordError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)

    def progress(res):
        click.echo(res.row_line())
        for note in res.notes:
            click.echo(f"  note: {note}")

    results = verify_records(records, tier=tier, budgets=_budgets(budget),
                             seed=seed, progress=progress)
    if out_dir:
        for artifact in write_report(results, out_dir):
            click.echo(f"wrote {artifact}")
    ran = [r for r in results if r.status != "SKIP"]
    failed = [r for r in ran if r.status != "PASS"]
    click.echo(f"{len(ran) - len(failed)}/{len(ran)} rows passed "
               f"({len(results) - len(ran)} skipped)")
    sys.exit(EXIT_FAIL if failed else EXIT_OK)


@main.command("build")
@field_opt
@group_opt
@u_opt
@v_opt
@seed_opt
@budget_opt
@click.option("--emit-record", is_flag=True, help="print a record block for the code")
def cmd_build(field, group, u_str, v_str, seed, budget, emit_record):
    """Build the code generated by u and report its parameters."""
    f, g, u, v = _load_context(field, group, u_str, v_str)
    code = code_from_generator_element(u)
    report = cls.classify_code(u, v, seed=seed)
    if report.check_element is not None:
        code = with_check_element(code, report.check_element)
    try:
        dist = min_distance(code, budgets=_budgets(budget), seed=seed)
        d: Optional[int] = dist.d
    except BudgetExceeded as exc:
        d = None
        click.echo(f"distance not certified: {exc}")
    flags = "".join(s for s, on in (("R", report.reversible), ("C", report.lcd)) if on)
    click.echo(f"[{code.n},{code.k}" + (f",{d}]" if d is not None else "]")
               + (f" flags={flags}" if flags else ""))
    click.echo(f"checkable: {report.checkable}")
    if report.check_element is not None:
        click.echo(f"check element: {report.check_element}")
    click.echo(f"semisimple ring: {report.semisimple}; "
               f"code-checkable ring: {report.ring_code_checkable}")
    if emit_record and d is not None:
        rec = CodeRecord(
            field=f, group=g, u=str(u),
            v=str(report.check_element) if report.check_element else None,
            n=code.n, k=code.k, d=d,
            flags=frozenset(c for c in flags),
        )
        click.echo(format_record(rec), nl=False)


@main.command("classify")
@field_opt
@group_opt
@u_opt
@v_opt
@seed_opt
def cmd_classify(field, group, u_str, v_str, seed):
    """Structural predicates for the code generated by u."""
    _, _, u, v = _load_context(field, group, u_str, v_str)
    report = cls.classify_code(u, v, seed=seed)
    for name in ("n", "k", "checkable", "reversible", "lcd",
                 "semisimple", "ring_code_checkable"):
        click.echo(f"{name} = {getattr(report, name)}")
    if report.check_element is not None:
        click.echo(f"check_element = {report.check_element}")


@main.command("mindist")
@field_opt
@group_opt
@u_opt
@click.option("--method", default="auto", show_default=True,
              type=click.Choice(["auto", "exhaustive", "dependence", "isd"]))
@click.option("--target-weight", default=None, type=int,
              help="upper-bound hint for the hybrid/isd engines")
@seed_opt
@budget_opt
def cmd_mindist(field, group, u_str, method, target_weight, seed, budget):
    """Exact minimum distance of the code generated by u."""
    _, _, u, _ = _load_context(field, group, u_str, None)
    code = code_from_generator_element(u)
    try:
        dist = min_distance(code, method=method, budgets=_budgets(budget),
                            seed=seed, upper_hint=target_weight)
    except BudgetExceeded as exc:
        click.echo(f"not certified: {exc}", err=True)
        sys.exit(EXIT_FAIL)
    click.echo(f"d = {dist.d} method={dist.method} work={dist.work}")
    click.echo("witness = " + "".join(code.field.format_value(x) for x in dist.witness))


@main.command("dual")
@field_opt
@group_opt
@u_opt
@v_opt
def cmd_dual(field, group, u_str, v_str):
    """Dual code parameters; with v, also the dual's generator element v^(-1)."""
    _, _, u, v = _load_context(field, group, u_str, v_str)
    code = code_from_generator_element(u)
    if v is not None:
        code = with_check_element(code, v)
    dual = code.dual()
    click.echo(f"dual is [{dual.n},{dual.k}]")
    if v is not None:
        click.echo(f"dual generator element: {v.involution()}")
    click.echo(dual.gen.pretty())


@main.command("shorten")
@field_opt
@group_opt
@u_opt
@click.option("--positions", required=True, help="1-based coordinates, e.g. 1,2")
@seed_opt
@budget_opt
def cmd_shorten(field, group, u_str, positions, seed, budget):
    """Shorten the code generated by u at the given positions."""
    _, _, u, _ = _load_context(field, group, u_str, None)
    try:
        pos = [int(p) for p in positions.split(",")]
    except ValueError:
        raise click.ClickException(f"bad positions {positions!r}")
    code = code_from_generator_element(u).shorten(pos)
    try:
        dist = min_distance(code, budgets=_budgets(budget), seed=seed)
        click.echo(f"[{code.n},{code.k},{dist.d}]")
    except BudgetExceeded as exc:
        click.echo(f"[{code.n},{code.k}] (distance not certified: {exc})")


@main.command("find-check")
@field_opt
@group_opt
@u_opt
@seed_opt
def cmd_find_check(field, group, u_str, seed):
    """Search for a check element of the code generated by u."""
    _, _, u, _ = _load_context(field, group, u_str, None)
    if not u.is_zero_divisor():
        raise click.ClickException("u is not a zero-divisor")
    v = cls.find_check_element(u, seed=seed)
    if v is None:
        ring_ok = cls.ring_is_code_checkable(u.field, u.group)
        if ring_ok:
            click.echo("no check element found within the search cap "
                       "(ring is code-checkable; raise the cap)", err=True)
        else:
            click.echo("no check element found (ring is not code-checkable)", err=True)
        sys.exit(EXIT_FAIL)
    click.echo(str(v))


@main.command("mds")
@field_opt
@group_opt
def cmd_mds(field, group):
    """Emit the [n,1,n] all-ones code and its [n,n-1,2] dual."""
    try:
        f = _parse_field_opt(field)
        g = parse_group(group)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    rep, dual = mds_pair(f, g)
    n = g.order
    click.echo(f"[{n},1,{n}] generated by the all-ones element")
    click.echo(f"[{n},{n - 1},2] dual code")
    if cls.ring_is_code_checkable(f, g):
        click.echo("both codes are checkable (Sylow subgroup cyclic)")


if __name__ == "__main__":
    main()
