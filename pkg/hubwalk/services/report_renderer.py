"""
hubwalk — Report Renderer
==========================
Text, CSV and JSON rendering of centrality results and comparison reports.
Tables are display-only (5 decimals for scores, 3 for τ); CSV and JSON keep
full double precision.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

from hubwalk.models.graph import DirectedGraph
from hubwalk.models.results import METHOD_TITLES, CentralityResult
from hubwalk.services.rank_analysis import SIDES, ComparisonReport, rank_with_ties

OUTPUT_FORMATS = ("table", "csv", "json")

_SCORE_WIDTH = 11


def _title(method: str) -> str:
    return METHOD_TITLES.get(method, method)


def render_score_table(g: DirectedGraph, results: Sequence[CentralityResult], side: str) -> str:
    node_width = max(4, max(len(g.label(i)) for i in range(1, g.n + 1)))
    header = "Node".ljust(node_width) + "".join(_title(r.method).rjust(_SCORE_WIDTH) for r in results)
    lines = [f"{side.capitalize()} scores (n={g.n}, edges={g.edge_count})", header, "-" * len(header)]
    for i in range(g.n):
        row = g.label(i + 1).ljust(node_width)
        row += "".join(f"{r.side(side)[i]:.5f}".rjust(_SCORE_WIDTH) for r in results)
        lines.append(row)
    return "\n".join(lines)


def render_rankings(results: Sequence[CentralityResult], tie_tol: float, max_groups: Optional[int] = None) -> str:
    width = max(len(_title(r.method)) for r in results)
    lines = []
    for side in SIDES:
        lines.append(f"{side.capitalize()} rankings (tie tolerance {tie_tol:g})")
        for r in results:
            ranking = rank_with_ties(r.side(side), tie_tol)
            lines.append(f"  {_title(r.method).ljust(width)}  {ranking.render(max_groups)}")
    return "\n".join(lines)


def render_table(
    g: DirectedGraph,
    results: Sequence[CentralityResult],
    comparisons: Optional[Mapping[str, ComparisonReport]] = None,
) -> str:
    blocks = [render_score_table(g, results, side) for side in SIDES]
    notes = [f"  {r.title}: {r.normalization}" for r in results]
    blocks.append("Normalization\n" + "\n".join(notes))
    for report in (comparisons or {}).values():
        blocks.append(render_comparison(report))
    return "\n\n".join(blocks) + "\n"


def _matrix_block(title: str, methods: Sequence[str], cell) -> List[str]:
    names = [_title(m) for m in methods]
    width = max(7, max(len(n) for n in names) + 2)
    lines = [title, " " * width + "".join(n.rjust(width) for n in names)]
    for i, name in enumerate(names):
        lines.append(name.ljust(width) + "".join(cell(i, j).rjust(width) for j in range(len(names))))
    return lines


def render_comparison(report: ComparisonReport) -> str:
    lines = _matrix_block(
        f"Kendall tau-b ({report.side})", report.methods, lambda i, j: f"{report.tau[i, j]:.3f}"
    )
    lines.append("")
    lines += _matrix_block(
        f"Top-{report.k} overlap ({report.side})",
        report.methods,
        lambda i, j: str(int(report.topk_overlap[i, j])),
    )
    return "\n".join(lines)


def render_csv(g: DirectedGraph, results: Sequence[CentralityResult]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["node", "method", "hub", "authority"])
    for r in results:
        for i in range(g.n):
            writer.writerow([g.label(i + 1), r.method, repr(float(r.hub[i])), repr(float(r.authority[i]))])
    return buffer.getvalue()


def comparison_to_dict(report: ComparisonReport) -> Dict[str, Any]:
    return {
        "methods": list(report.methods),
        "k": report.k,
        "tau": report.tau.tolist(),
        "topk_overlap": report.topk_overlap.tolist(),
        "top_groups": [sorted(group) for group in report.top_groups],
    }


def render_json(
    g: DirectedGraph,
    results: Sequence[CentralityResult],
    comparisons: Optional[Mapping[str, ComparisonReport]] = None,
) -> str:
    payload = {
        "graph": {"n": g.n, "edges": g.edge_count},
        "results": [r.to_dict() for r in results],
        "comparisons": {side: comparison_to_dict(rep) for side, rep in (comparisons or {}).items()},
    }
    return json.dumps(payload, indent=2) + "\n"


def render(
    fmt: str,
    g: DirectedGraph,
    results: Sequence[CentralityResult],
    comparisons: Optional[Mapping[str, ComparisonReport]] = None,
) -> str:
    if fmt == "table":
        return render_table(g, results, comparisons)
    if fmt == "csv":
        return render_csv(g, results)
    if fmt == "json":
        return render_json(g, results, comparisons)
    raise ValueError(f"unknown output format {fmt!r}; expected one of {OUTPUT_FORMATS}")


def render_summary(summary: Mapping[str, Any]) -> str:
    return "".join(f"{key}: {value}\n" for key, value in summary.items())


@dataclass(frozen=True)
class ReproductionRow:
    example: str
    method: str
    side: str
    computed: Sequence[float]
    reference: Sequence[float]
    max_deviation: float
    passed: bool


def render_reproduction(rows: Iterable[ReproductionRow]) -> str:
    lines = []
    current = None
    for row in rows:
        if row.example != current:
            if current is not None:
                lines.append("")
            lines.append(f"[{row.example}]")
            current = row.example
        status = "ok" if row.passed else "MISMATCH"
        computed = " ".join(f"{v:.5f}" for v in row.computed)
        reference = " ".join(f"{v:.5f}" for v in row.reference)
        lines.append(
            f"  {_title(row.method):<5} {row.side:<9} computed {computed}  "
            f"reference {reference}  max dev {row.max_deviation:.1e}  {status}"
        )
    return "\n".join(lines) + "\n"
