"""Command-line surface: analyze, verify, export.

Exit codes: 0 ok / all pass, 1 verification failure, 2 usage or parse error,
3 cap violation, 4 I/O error. Caps and budgets come from flags first, then
PGK_* environment variables, then defaults.
"""

import csv
import io
import json
import sys

import click

from .errors import CapExceeded, SpecParseError
from .groups import GroupSpec, build_group
from .invariants import InvariantReport, build_invariant_report
from .powergraph import (
    build_cyclic_class_graph,
    build_directed_power_graph,
    build_power_graph,
    class_graph_to_dot,
    digraph_to_dot,
    graph_to_dot,
)
from .structure import build_structure_report
from .verify import (
    CHECKS,
    Caps,
    default_suite,
    outcomes_to_csv,
    outcomes_to_json,
    run_check,
    run_sweep,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_IO = 4


def _caps_options(func):
    func = click.option(
        "--order-cap",
        type=int,
        default=5000,
        envvar="PGK_ORDER_CAP",
        show_default=True,
        help="Largest group order that will be constructed.",
    )(func)
    func = click.option(
        "--path-cap",
        type=int,
        default=24,
        envvar="PGK_PATH_CAP",
        show_default=True,
        help="Vertex cap for the brute-force longest-path search.",
    )(func)
    func = click.option(
        "--search-budget",
        type=int,
        default=50_000_000,
        envvar="PGK_SEARCH_BUDGET",
        show_default=True,
        help="Node budget for exact clique/coloring/hole searches.",
    )(func)
    func = click.option(
        "--hamiltonian-budget",
        type=int,
        default=10_000_000,
        envvar="PGK_HAMILTONIAN_BUDGET",
        show_default=True,
        help="Node budget for Hamiltonian-cycle backtracking.",
    )(func)
    return func


def _build_caps(order_cap, path_cap, search_budget, hamiltonian_budget) -> Caps:
    return Caps(
        order_cap=order_cap,
        path_cap=path_cap,
        search_budget=search_budget,
        hamiltonian_budget=hamiltonian_budget,
    )


def _write_output(text: str, out_path: str | None) -> None:
    if out_path in (None, "-"):
        click.echo(text, nl=False)
        return
    try:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out_path}: {exc}", err=True)
        sys.exit(EXIT_IO)


def _parse_spec_or_exit(spec_text: str) -> GroupSpec:
    try:
        return GroupSpec.parse(spec_text)
    except SpecParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


@click.group()
def main() -> None:
    """Power graphs of finite groups: invariants, structure, and checks."""


@main.command()
@click.argument("spec")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="json", show_default=True)
@click.option("--out", "out_path", default=None, help="Output path (default: stdout).")
@_caps_options
def analyze(spec, fmt, out_path, order_cap, path_cap, search_budget, hamiltonian_budget):
    """Compute the invariant and structure reports for one group."""
    parsed = _parse_spec_or_exit(spec)
    caps = _build_caps(order_cap, path_cap, search_budget, hamiltonian_budget)
    try:
        group = build_group(parsed, caps.order_cap)
    except CapExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    invariants = build_invariant_report(
        group, search_budget=caps.search_budget, path_cap=caps.path_cap
    )
    structure = build_structure_report(
        group,
        search_budget=caps.search_budget,
        hamiltonian_budget=caps.hamiltonian_budget,
    )
    if fmt == "json":
        payload = {
            "schema": "powergraphkit.analyze/1",
            "invariants": invariants.to_dict(),
            "structure": structure.to_dict(),
        }
        _write_output(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", out_path)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(InvariantReport.CSV_FIELDS + ("chordal", "claw_free", "planar", "hamiltonian"))
        writer.writerow(
            invariants.to_csv_row()
            + [structure.chordal, structure.claw_free, structure.planar, structure.hamiltonian]
        )
        _write_output(buf.getvalue(), out_path)
    else:
        lines = [f"group {invariants.spec} (order {invariants.order})"]
        inv = invariants.to_dict()
        for key in ("connected", "complete", "radius", "diameter", "clique_number",
                    "chromatic_number", "independence_number", "psi", "longest_directed_path"):
            lines.append(f"  {key.replace('_', ' ')}: {inv[key]}")
        lines.append(f"  center: {inv['center']}")
        st = structure.to_dict()
        for key in ("chordal", "claw_free", "planar", "hamiltonian", "simplicial",
                    "shortest_even_hole", "odd_hole", "anti_hole"):
            lines.append(f"  {key.replace('_', ' ')}: {st[key]}")
        for note in invariants.notes + structure.notes:
            lines.append(f"  note: {note}")
        _write_output("\n".join(lines) + "\n", out_path)
    sys.exit(EXIT_OK)


@main.command()
@click.argument("spec", required=False)
@click.option("--theorem", "theorems", multiple=True, help="Theorem id; repeatable.")
@click.option("--all", "run_all", is_flag=True, help="Run every applicable catalogued check.")
@click.option("--suite", type=click.Choice(["default"]), default=None,
              help="Run the curated default corpus.")
@click.option("--family", type=click.Choice(["zn", "un", "qn"]), default=None)
@click.option("--range", "range_text", default=None, help="Sweep range, e.g. 2..60.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", "out_path", default=None)
@click.option("--jobs", type=int, default=1, envvar="PGK_JOBS", show_default=True)
@click.option("--timing", is_flag=True, help="Include per-check wall-clock millis (report is no longer byte-stable).")
@_caps_options
def verify(spec, theorems, run_all, suite, family, range_text, fmt, out_path, jobs,
           timing, order_cap, path_cap, search_budget, hamiltonian_budget):
    """Run catalogued checks against one group or a family sweep."""
    caps = _build_caps(order_cap, path_cap, search_budget, hamiltonian_budget)
    for tid in theorems:
        if tid not in CHECKS:
            click.echo(f"error: unknown theorem id {tid!r}", err=True)
            sys.exit(EXIT_USAGE)
    ids = list(theorems) if theorems else list(CHECKS)
    if not theorems and not run_all and suite is None:
        click.echo("error: pick --theorem, --all, or --suite", err=True)
        sys.exit(EXIT_USAGE)
    try:
        if suite == "default":
            outcomes = default_suite(caps, jobs)
        elif spec is not None:
            parsed = _parse_spec_or_exit(spec)
            outcomes = [run_check(tid, parsed, caps) for tid in ids
                        if parsed.family in CHECKS[tid].families]
            if not outcomes:
                click.echo(f"error: no selected check applies to family {parsed.family!r}", err=True)
                sys.exit(EXIT_USAGE)
        else:
            if family is None or range_text is None:
                click.echo("error: sweeps need --family and --range", err=True)
                sys.exit(EXIT_USAGE)
            try:
                start_text, _, stop_text = range_text.partition("..")
                start, stop = int(start_text), int(stop_text)
            except ValueError:
                click.echo(f"error: bad range {range_text!r}; expected A..B", err=True)
                sys.exit(EXIT_USAGE)
            outcomes = run_sweep(ids, family, start, stop, caps, jobs)
    except CapExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    text = outcomes_to_json(outcomes, timing) if fmt == "json" else outcomes_to_csv(outcomes, timing)
    _write_output(text, out_path)
    sys.exit(EXIT_VERIFY_FAIL if any(o.outcome == "fail" for o in outcomes) else EXIT_OK)


@main.command()
@click.argument("spec")
@click.option("--graph", "kind", type=click.Choice(["pg", "dpg", "cg", "cg-hasse"]),
              default="pg", show_default=True)
@click.option("--out", "out_path", default=None, help="DOT output path (default: stdout).")
@_caps_options
def export(spec, kind, out_path, order_cap, path_cap, search_budget, hamiltonian_budget):
    """Write a graph in DOT form."""
    parsed = _parse_spec_or_exit(spec)
    caps = _build_caps(order_cap, path_cap, search_budget, hamiltonian_budget)
    try:
        group = build_group(parsed, caps.order_cap)
    except CapExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    if kind == "pg":
        text = graph_to_dot(build_power_graph(group), group.labels, name="powergraph")
    elif kind == "dpg":
        text = digraph_to_dot(build_directed_power_graph(group), group.labels, name="powergraph")
    else:
        gcc = build_cyclic_class_graph(group)
        text = class_graph_to_dot(gcc, hasse=(kind == "cg-hasse"), name="classes")
    _write_output(text, out_path)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
