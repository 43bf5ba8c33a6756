#!/usr/bin/env python

import os
import sys
import json
import logging
from pathlib import Path
from typing import List, Optional

import typer
from dotenv import load_dotenv
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

# Add the repository root to the path so imports work correctly
sys.path.insert(0, os.path.abspath(os.path.dirname(os.path.dirname(__file__))))

from src import __version__
from src.census import (
    CensusReport,
    connected_population,
    fixtures_for_report,
    load_population,
    p3_census,
    verdict_exit_code,
)
from src.constructions import (
    InflatedPair,
    InflationSpec,
    ThornAssignment,
    bipartite_pair,
    diamond_inflate,
    k33_case,
    named_graph,
    special_bipartite_spec,
    whitney_model,
    whitney_pair,
)
from src.constructions.schema import BipartitePairSpec
from src.graph_core import Bipartition, Graph, bipartition, parse_graph6, read_graph6_lines
from src.graph_core.graph6 import encode_graph6, upper_triangle_code
from src.iso import are_isomorphic, canonical_form, swap_to_pk_isomorphism, verify_pk_isomorphism
from src.pathgraph import SwapKind, build_path_graph, build_swap
from src.utils.config import Settings
from src.utils.errors import PathGraphError

# Diagnostics go to stderr; stdout carries only the payload
console = Console(stderr=True)
log = logging.getLogger("pk")

# Newer typer releases vendor their own click; take its exception base from typer
ClickException = next(cls for cls in typer.BadParameter.__mro__ if cls.__name__ == "ClickException")

app = typer.Typer(
    help="pk - path graphs P_k(G), graph isomorphism and co-P_3 graph pairs",
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)
pair_app = typer.Typer(help="Generate a pair of graphs with isomorphic P_3-graphs", no_args_is_help=True)
app.add_typer(pair_app, name="pair")


def setup_logging(level: str) -> None:
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(rich_tracebacks=True, console=console, show_path=False)],
        force=True,
    )


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable debug logging on stderr"),
) -> None:
    """Load .env and configure logging before any command runs."""
    load_dotenv()
    settings = Settings.from_env()
    setup_logging("DEBUG" if verbose else settings.log_level)


def _int_list(text: Optional[str], name: str) -> List[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise typer.BadParameter(f"{name} must be comma-separated integers, got '{text}'")


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if not path.exists():
        raise typer.BadParameter(f"input file does not exist: {source}")
    return path.read_text()


def _first_graph(source: str) -> Graph:
    graphs = read_graph6_lines(_read_text(source), allow_extended=True)
    if not graphs:
        raise typer.BadParameter(f"no graph6 tokens in {source}")
    return graphs[0]


def _token(g: Graph) -> str:
    """graph6 token, using the extended header past 62 vertices."""
    return encode_graph6(g.n, upper_triangle_code(g), allow_extended=True)


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _p3_isomorphic(g: Graph, h: Graph) -> bool:
    pg = build_path_graph(g, 3).pgraph
    ph = build_path_graph(h, 3).pgraph
    return canonical_form(pg).canon_g6 == canonical_form(ph).canon_g6


def _emit_pair(g: Graph, h: Graph) -> None:
    typer.echo(_token(g))
    typer.echo(_token(h))
    typer.echo(f"isomorphic: {_yes_no(are_isomorphic(g, h) is not None)}")
    typer.echo(f"p3_isomorphic: {_yes_no(_p3_isomorphic(g, h))}")


def _write_provenance(pair: InflatedPair, provenance: Optional[Path]) -> None:
    if provenance is None:
        return
    provenance.write_text(pair.model_dump_json(indent=2, exclude={"first": {"graph"}, "second": {"graph"}}) + "\n")
    log.info(f"Provenance written to {provenance}")


@app.command()
def compute(
    source: str = typer.Argument("-", help="graph6 file, or '-' for stdin"),
    k: int = typer.Option(3, "-k", help="Number of vertices per path"),
    labels: bool = typer.Option(False, "--labels", help="Print JSON with the path behind each vertex"),
) -> None:
    """Print P_k(G) for every input graph."""
    for g in read_graph6_lines(_read_text(source)):
        result = build_path_graph(g, k)
        if labels:
            typer.echo(json.dumps({"graph6": _token(result.pgraph), "labels": [list(p) for p in result.labels]}))
        else:
            typer.echo(_token(result.pgraph))


@app.command()
def iso(
    first: str = typer.Argument(..., help="graph6 file holding G"),
    second: str = typer.Argument(..., help="graph6 file holding H"),
) -> None:
    """Decide G = H and print a certificate when they are isomorphic."""
    g, h = _first_graph(first), _first_graph(second)
    certificate = are_isomorphic(g, h)
    typer.echo(f"isomorphic: {_yes_no(certificate is not None)}")
    if certificate is not None:
        typer.echo("mapping: " + " ".join(map(str, certificate.mapping)))


@app.command()
def gen(
    family: str = typer.Argument(..., help="Graph family, or 'inflate'"),
    params: Optional[List[int]] = typer.Argument(None, help="Family parameters"),
    base: Optional[str] = typer.Option(None, "--base", help="inflate: base graph as a graph6 token"),
    widths: Optional[str] = typer.Option(None, "--widths", help="inflate: widths in sorted edge order"),
    thorns: Optional[str] = typer.Option(None, "--thorns", help="inflate: thorn count per base vertex"),
    provenance: Optional[Path] = typer.Option(None, "--provenance", help="inflate: JSON provenance sidecar"),
) -> None:
    """Print one generated graph as graph6."""
    if family.lower() != "inflate":
        typer.echo(_token(named_graph(family, *(params or []))))
        return
    if base is None:
        raise typer.BadParameter("inflate needs --base")
    f = parse_graph6(base)
    width_list = _int_list(widths, "--widths") or [1] * f.edge_count
    thorn_list = _int_list(thorns, "--thorns") or [0] * f.n
    result = diamond_inflate(InflationSpec.from_lists(f, width_list, thorn_list))
    typer.echo(_token(result.graph))
    if provenance is not None:
        provenance.write_text(result.model_dump_json(indent=2, exclude={"graph"}) + "\n")


@pair_app.command("whitney")
def pair_whitney(
    whitney_type: int = typer.Option(..., "--type", help="Whitney type 3, 4, 5 or 6"),
    thorns: str = typer.Option("0,0,0,0", "--thorns", help="t_a,t_b,t_c,t_d, each 0 or 1"),
    widths: Optional[str] = typer.Option(None, "--widths", help="Widths on ab,ac,ad,bc,bd,cd (edges of W_i)"),
    provenance: Optional[Path] = typer.Option(None, "--provenance", help="JSON provenance sidecar"),
) -> None:
    """Special Whitney type pair."""
    t = ThornAssignment(values=tuple(_int_list(thorns, "--thorns")))
    width_list = _int_list(widths, "--widths") or [1] * whitney_model(whitney_type).w.edge_count
    pair = whitney_pair(whitney_type, t, width_list)
    _emit_pair(pair.first.graph, pair.second.graph)
    _write_provenance(pair, provenance)


@pair_app.command("bipartite")
def pair_bipartite(
    family: Optional[str] = typer.Option(None, "--family", help="Named base family, e.g. star"),
    params: Optional[str] = typer.Option(None, "--params", help="Family parameters, comma-separated"),
    base: Optional[str] = typer.Option(None, "--base", help="Base graph as a graph6 token"),
    widths: Optional[str] = typer.Option(None, "--widths", help="Widths in sorted edge order"),
    k: int = typer.Option(1, "-k", help="Thorn shift"),
    thorns: Optional[str] = typer.Option(None, "--thorns", help="t_v per base vertex (default: 1 on A, 0 on B)"),
    side_a: Optional[str] = typer.Option(None, "--side-a", help="Vertices of side A (default: the side of vertex 0)"),
    general: bool = typer.Option(False, "--general", help="Allow thorns outside the special type"),
    provenance: Optional[Path] = typer.Option(None, "--provenance", help="JSON provenance sidecar"),
) -> None:
    """Bipartite type pair, t' = t - k on A and t + k on B."""
    if (family is None) == (base is None):
        raise typer.BadParameter("give exactly one of --family or --base")
    f = named_graph(family, *_int_list(params, "--params")) if family else parse_graph6(base)
    parts = None
    if side_a is not None:
        a = frozenset(_int_list(side_a, "--side-a"))
        parts = Bipartition(side_a=a, side_b=frozenset(range(f.n)) - a)
    width_list = _int_list(widths, "--widths") or None
    if thorns is None and k == 1 and not general:
        spec = special_bipartite_spec(f, width_list, parts)
    else:
        parts = parts or bipartition(f)
        edges = f.edges()
        width_list = width_list or [1] * len(edges)
        thorn_list = _int_list(thorns, "--thorns") or [1 if parts and v in parts.side_a else 0 for v in range(f.n)]
        if len(width_list) != len(edges) or len(thorn_list) != f.n:
            raise typer.BadParameter(f"need {len(edges)} widths and {f.n} thorn counts")
        spec = BipartitePairSpec(base=f, widths=dict(zip(edges, width_list)), k=k,
                                 thorns=dict(enumerate(thorn_list)), parts=parts, special=not general)
    pair = bipartite_pair(spec)
    _emit_pair(pair.first.graph, pair.second.graph)
    _write_provenance(pair, provenance)


@pair_app.command("k33")
def pair_k33(
    case: str = typer.Argument(..., help="Case id: i or vii"),
    show_map: bool = typer.Option(False, "--show-map", help="Also print the P_3-isomorphism, one path per line"),
) -> None:
    """Generalized K_{3,3} case."""
    result = k33_case(case)
    _emit_pair(result.g, result.h)
    if result.tau is not None:
        verdict = verify_pk_isomorphism(result.tau, result.g, result.h)
        log.info(f"P_3-isomorphism of case ({result.case}) verifies: {_yes_no(verdict.ok)}")
        if show_map:
            for source, image in result.tau.pairs():
                typer.echo(f"map: {'-'.join(map(str, source))} -> {'-'.join(map(str, image))}")


@app.command()
def swap(
    kind: SwapKind = typer.Argument(..., case_sensitive=False, help="b, s or d"),
    params: List[int] = typer.Argument(..., help="B: a b c d; S: a b c d e; D: a b i j"),
    graph: str = typer.Option(..., "--graph", help="Host graph as a graph6 token"),
    verify: bool = typer.Option(False, "--verify", help="Check the swap is a P_3-automorphism"),
) -> None:
    """Build a B-, S- or D-swap on the P_3's of a host graph."""
    g = parse_graph6(graph)
    permutation = build_swap(g, kind, params)
    first, second = permutation.support
    typer.echo(f"swap: {permutation.kind.value} {'-'.join(map(str, first))} <-> {'-'.join(map(str, second))}")
    if verify:
        result = verify_pk_isomorphism(swap_to_pk_isomorphism(g, permutation), g, g)
        typer.echo(f"verified: {_yes_no(result.ok)}")
        if not result.ok:
            log.error(f"{result.detail}: {result.violation}")
            raise typer.Exit(code=2)


@app.command()
def census(
    max_n: Optional[int] = typer.Option(None, "--max-n", help="Largest order of the enumerated population"),
    min_n: int = typer.Option(1, "--min-n", help="Smallest order of the enumerated population"),
    k: int = typer.Option(3, "-k", help="Path length"),
    g6: Optional[str] = typer.Option(None, "--g6", help="Read the population from a graph6 file ('-' for stdin)"),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Also write the JSON report to this file"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker processes (default PK_THREADS)"),
    allow_disconnected_pk: bool = typer.Option(False, "--allow-disconnected-pk",
                                               help="Keep graphs whose P_k-graph is disconnected"),
    fixtures: bool = typer.Option(True, "--fixtures/--no-fixtures", help="Match two-member classes to known pairs"),
) -> None:
    """Group connected graphs by P_k-graph and audit the classes."""
    settings = Settings.from_env()
    if g6 is not None:
        graphs = load_population(_read_text(g6))
        population = None
    elif max_n is not None:
        graphs = list(connected_population(min_n, max_n, limit=settings.max_n, node_budget=settings.node_budget))
        population = f"connected graphs, {min_n} <= n <= {max_n}"
    else:
        raise typer.BadParameter("give --max-n or --g6")

    report = p3_census(
        graphs,
        k=k,
        require_connected_pk=not allow_disconnected_pk,
        threads=threads or settings.threads,
        node_budget=settings.node_budget,
        population=population,
    )
    payload = report.to_json()
    typer.echo(payload, nl=False)
    if json_out is not None:
        json_out.write_text(payload, encoding="utf-8")
    display_census_summary(report, fixtures_for_report(report, node_budget=settings.node_budget) if fixtures else {})
    raise typer.Exit(code=verdict_exit_code(report.verdict))


def display_census_summary(report: CensusReport, matches: dict) -> None:
    """Display a summary table of the census on stderr."""
    table = Table(title=f"P_{report.k} census: {report.verdict.status.value}")

    table.add_column("Item", style="cyan")
    table.add_column("Count", style="green")
    table.add_column("Detail", style="yellow")

    table.add_row("population", str(report.stats.population_size), report.population)
    for size, count in report.stats.class_size_histogram.items():
        table.add_row(f"classes of size {size}", str(count), "")
    for reason, count in report.dropped.items():
        table.add_row("dropped", str(count), reason)
    table.add_row("skipped", str(len(report.skipped)), "")
    table.add_row("no isolated P_k-vertex", str(report.stats.no_isolated_pk), "")
    for key, fixture_id in sorted(matches.items()):
        table.add_row("pair", "2", f"{fixture_id or 'no fixture'}: {key}")

    console.print(table)


@app.command()
def version():
    """Display the current version of the tool."""
    typer.echo(f"pk {__version__}")


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI and return its exit code.

    Usage errors and domain errors exit 1; a failed census audit or swap
    verification exits 2.
    """
    command = typer.main.get_command(app)
    try:
        result = command.main(args=argv, prog_name="pk", standalone_mode=False)
    except ClickException as e:
        e.show()
        return 1
    except typer.Abort:
        return 1
    except (PathGraphError, ValidationError) as e:
        console.print(f"error: {e}", markup=False, highlight=False, soft_wrap=True)
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(run())
