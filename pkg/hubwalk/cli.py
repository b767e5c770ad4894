"""
hubwalk — Command Line
=======================
    hubwalk rank       score a graph with one or more methods
    hubwalk compare    Kendall τ-b and top-k overlap between methods
    hubwalk generate   write a generated graph as an edge list
    hubwalk info       structural summary of a graph
    hubwalk reproduce  recompute the toy-graph reference tables

Exit codes: 0 success, 1 load or compute failure, 2 usage error.
Results go to stdout; logs and diagnostics go to stderr.
"""

from __future__ import annotations

import csv
import functools
import io
import sys
from typing import List, Optional, Sequence

import click
import numpy as np

from hubwalk.config import Config
from hubwalk.data import reference_scores
from hubwalk.errors import GeneratorParameterError, HubwalkError
from hubwalk.models.centrality_analyzer import CentralityAnalyzer, parse_methods
from hubwalk.models.graph import DirectedGraph, graph_summary
from hubwalk.models.results import ALL_METHODS
from hubwalk.services import report_renderer
from hubwalk.services.generators import generate_from_spec, parse_generator_spec
from hubwalk.services.graph_io import FORMATS, load_graph, write_edgelist
from hubwalk.services.rank_analysis import SIDES
from hubwalk.utils.logger import set_level, setup_logger

logger = setup_logger("CLI")

_VERBOSITY = {0: None, 1: "INFO"}


# ---------------------------------------------------------------------------
# Parameter helpers
# ---------------------------------------------------------------------------

def _methods_callback(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_methods(value)
    except ValueError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def _generator_callback(ctx, param, value):
    if value is None:
        return None
    try:
        parse_generator_spec(value)
    except GeneratorParameterError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)
    return value


def graph_source_options(func):
    """--input/--input-format/--generate/--seed, shared by every graph-reading command."""
    options = [
        click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
                     help="Graph file to read."),
        click.option("--input-format", type=click.Choice(FORMATS), default="edgelist", show_default=True,
                     help="Format of --input."),
        click.option("--generate", "generator", callback=_generator_callback,
                     help="Generator spec, e.g. path:4, tailed:4,4, scalefree:128,0.4,0.55,0.05[,delta_in[,delta_out]]."),
        click.option("--seed", type=int, default=None, help="Seed for the scale-free generator."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _load(input_path: Optional[str], input_format: str, generator: Optional[str], seed: Optional[int]) -> DirectedGraph:
    if bool(input_path) == bool(generator):
        raise click.UsageError("give exactly one of --input or --generate")
    if generator:
        return generate_from_spec(generator, seed)
    return load_graph(input_path, input_format)


def handle_errors(func):
    """Map library failures to exit 1 with a one-line diagnostic on stderr."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (HubwalkError, OSError) as e:
            logger.error("%s failed: %s", func.__name__, e)
            click.echo(f"error: {e}", err=True)
            sys.exit(1)

    return wrapper


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

@click.group()
@click.option("-v", "--verbose", count=True, help="-v for info logs, -vv for debug logs.")
def cli(verbose: int):
    """Quantum-walk and classical hub/authority centrality for directed graphs."""
    level = _VERBOSITY.get(verbose, "DEBUG")
    if level:
        set_level(level)


@cli.command()
@graph_source_options
@click.option("--methods", callback=_methods_callback, default=",".join(ALL_METHODS), show_default=True,
              help="Comma-separated subset of " + ", ".join(ALL_METHODS) + ".")
@click.option("--alpha", type=click.FloatRange(0.0, 1.0), default=None,
              help=f"Teleportation weight for CQA, CQG and PageRank [default: {Config.DEFAULT_ALPHA}].")
@click.option("--k", "k", type=click.IntRange(min=1), default=Config.TOP_K, show_default=True,
              help="Tie groups shown by --rankings.")
@click.option("--format", "output_format", type=click.Choice(report_renderer.OUTPUT_FORMATS),
              default="table", show_default=True)
@click.option("--tie-tol", type=click.FloatRange(min=0.0), default=Config.TIE_TOL, show_default=True)
@click.option("--rankings", is_flag=True, help="Also print tie-grouped rankings (table format).")
@handle_errors
def rank(input_path, input_format, generator, seed, methods, alpha, k, output_format, tie_tol, rankings):
    """Per-node hub and authority scores."""
    g = _load(input_path, input_format, generator, seed)
    results = CentralityAnalyzer(alpha=alpha).run(g, methods)
    output = report_renderer.render(output_format, g, results)
    if rankings and output_format == "table":
        output += "\n" + report_renderer.render_rankings(results, tie_tol, max_groups=k) + "\n"
    click.echo(output, nl=False)


@cli.command()
@graph_source_options
@click.option("--methods", callback=_methods_callback, required=True,
              help="Comma-separated methods to compare (at least two).")
@click.option("--alpha", type=click.FloatRange(0.0, 1.0), default=None)
@click.option("--k", "k", type=click.IntRange(min=1), default=Config.TOP_K, show_default=True,
              help="Length of the top-k lists.")
@click.option("--format", "output_format", type=click.Choice(report_renderer.OUTPUT_FORMATS),
              default="table", show_default=True)
@click.option("--tie-tol", type=click.FloatRange(min=0.0), default=Config.TIE_TOL, show_default=True)
@handle_errors
def compare(input_path, input_format, generator, seed, methods, alpha, k, output_format, tie_tol):
    """Kendall τ-b and top-k overlap matrices for hubs and authorities."""
    if len(methods) < 2:
        raise click.BadParameter("compare needs at least two methods", param_hint="--methods")
    g = _load(input_path, input_format, generator, seed)
    analyzer = CentralityAnalyzer(alpha=alpha)
    run = analyzer.analyze(g, methods, k=k, tie_tol=tie_tol, with_comparisons=True)

    if output_format == "json":
        click.echo(report_renderer.render_json(g, run.results, run.comparisons), nl=False)
    elif output_format == "csv":
        click.echo(_comparison_csv(run.comparisons), nl=False)
    else:
        blocks = [report_renderer.render_comparison(run.comparisons[side]) for side in SIDES]
        click.echo("\n\n".join(blocks))


def _comparison_csv(comparisons) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["side", "method_a", "method_b", "tau", "topk_overlap", "k"])
    for side, report in comparisons.items():
        for i, a in enumerate(report.methods):
            for j, b in enumerate(report.methods):
                writer.writerow([side, a, b, repr(float(report.tau[i, j])), int(report.topk_overlap[i, j]), report.k])
    return buffer.getvalue()


@cli.command()
@click.argument("spec", callback=_generator_callback)
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Edge-list file to write (stdout by default).")
@click.option("--seed", type=int, default=None, help="Seed for the scale-free generator.")
@handle_errors
def generate(spec, output, seed):
    """Write a generated graph in edge-list format."""
    g = generate_from_spec(spec, seed)
    comments = [f"generated by hubwalk: {spec}"] + ([f"seed {seed}"] if seed is not None else [])
    if output is None:
        buffer = io.StringIO()
        write_edgelist(g, buffer, comments)
        click.echo(buffer.getvalue(), nl=False)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            write_edgelist(g, fh, comments)
    click.echo(f"n={g.n} edges={g.edge_count}", err=output is None)


@cli.command()
@graph_source_options
@handle_errors
def info(input_path, input_format, generator, seed):
    """Structural summary of a graph."""
    g = _load(input_path, input_format, generator, seed)
    click.echo(report_renderer.render_summary(graph_summary(g)), nl=False)


@cli.command()
@click.option("--example", type=click.Choice(reference_scores.EXAMPLES), default=None,
              help="Only this toy graph (default: all).")
@click.option("--tolerance", type=click.FloatRange(min=0.0, min_open=True),
              default=reference_scores.DEFAULT_TOLERANCE, show_default=True)
@handle_errors
def reproduce(example, tolerance):
    """Recompute the toy-graph tables and report deviations."""
    examples = [example] if example else list(reference_scores.EXAMPLES)
    rows = reproduction_rows(examples, tolerance)
    click.echo(report_renderer.render_reproduction(rows), nl=False)
    failed = [r for r in rows if not r.passed]
    if failed:
        click.echo(f"error: {len(failed)} column(s) outside tolerance", err=True)
        sys.exit(1)


def reproduction_rows(examples: Sequence[str], tolerance: float) -> List[report_renderer.ReproductionRow]:
    analyzer = CentralityAnalyzer(alpha=reference_scores.REFERENCE_ALPHA)
    rows = []
    for name in examples:
        g = generate_from_spec(reference_scores.EXAMPLE_SPECS[name])
        hub_ref = reference_scores.HUB_SCORES[name]
        methods = tuple(hub_ref)
        for result in analyzer.run(g, methods):
            for side in SIDES:
                table = reference_scores.HUB_SCORES if side == "hub" else reference_scores.AUTHORITY_SCORES
                reference = np.asarray(table[name][result.method])
                computed = result.side(side)
                deviation = np.abs(computed - reference)
                limits = np.array([
                    max(tolerance, reference_scores.tolerance_for(name, result.method, side, node, tolerance))
                    for node in range(1, g.n + 1)
                ])
                rows.append(report_renderer.ReproductionRow(
                    example=name,
                    method=result.method,
                    side=side,
                    computed=tuple(float(x) for x in computed),
                    reference=tuple(float(x) for x in reference),
                    max_deviation=float(deviation.max()),
                    passed=bool(np.all(deviation <= limits)),
                ))
    return rows


def main():
    cli(prog_name="hubwalk")


if __name__ == "__main__":
    main()
