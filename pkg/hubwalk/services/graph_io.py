"""
hubwalk — Graph File I/O
=========================
Readers for plain edge lists and Matrix Market coordinate files, and the
edge-list writer used by `hubwalk generate`.

Edge-list format:
    # comment
    n=5            optional; otherwise n is the largest id seen
    1 2            one "src dst" pair per line, 1-based ids

Self-loops are dropped on read and counted in `meta["dropped_self_loops"]`.
"""

from __future__ import annotations

import io
import re
from typing import IO, Iterable, List, Optional, Tuple

import numpy as np
import scipy.io
import scipy.sparse as sp

from hubwalk.errors import GraphFormatError
from hubwalk.models.graph import DirectedGraph, from_edges, is_weakly_connected
from hubwalk.utils.logger import setup_logger

logger = setup_logger("GraphIO")

_HEADER_RE = re.compile(r"^n\s*=\s*(\d+)$", re.IGNORECASE)
_MM_FIELDS = {"pattern", "real", "integer"}

FORMATS = ("edgelist", "mtx")


def _finish(n: int, edges: List[Tuple[int, int]], loops: int, source: str) -> DirectedGraph:
    g = from_edges(n, edges, meta={"dropped_self_loops": loops, "source": source})
    if loops:
        logger.warning("%s: dropped %d self-loop(s)", source, loops)
    if not is_weakly_connected(g):
        logger.warning("%s: graph with n=%d is not weakly connected", source, g.n)
    logger.info("Loaded %s: n=%d edges=%d", source, g.n, g.edge_count)
    return g


def load_edgelist(stream: IO[str], source: str = "edgelist") -> DirectedGraph:
    declared_n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    loops = 0
    max_id = 0

    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header = _HEADER_RE.match(line)
        if header:
            if declared_n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'n=' header")
            declared_n = int(header.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'src dst', got {line!r}")
        try:
            src, dst = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: node ids must be integers, got {line!r}")
        if src < 1 or dst < 1:
            raise GraphFormatError(f"line {lineno}: node ids are 1-based, got {line!r}")
        max_id = max(max_id, src, dst)
        if src == dst:
            loops += 1
            continue
        edges.append((src, dst))

    if declared_n is None and max_id == 0:
        raise GraphFormatError("empty edge list")

    if declared_n is None:
        n = max_id
    else:
        if declared_n < 1:
            raise GraphFormatError("header 'n=' must be positive")
        if max_id > declared_n:
            raise GraphFormatError(f"node id {max_id} exceeds declared n={declared_n}")
        n = declared_n
    return _finish(n, edges, loops, source)


def _check_mm_header(first_line: str) -> str:
    tokens = first_line.strip().lower().split()
    if len(tokens) != 5 or tokens[0] != "%%matrixmarket" or tokens[1] != "matrix":
        raise GraphFormatError(f"not a MatrixMarket matrix header: {first_line.strip()!r}")
    fmt, field_, symmetry = tokens[2], tokens[3], tokens[4]
    if fmt != "coordinate":
        raise GraphFormatError(f"unsupported MatrixMarket format {fmt!r}; only 'coordinate' is read")
    if field_ not in _MM_FIELDS:
        raise GraphFormatError(f"unsupported MatrixMarket field {field_!r}; expected pattern, real or integer")
    if symmetry != "general":
        raise GraphFormatError(f"unsupported MatrixMarket symmetry {symmetry!r}; expand to 'general' first")
    return field_


def load_matrix_market(stream: IO[str], source: str = "matrix-market") -> DirectedGraph:
    """Nonzero (i, j) with i ≠ j becomes edge i→j; values are discarded."""
    text = stream.read()
    if not text.strip():
        raise GraphFormatError("empty Matrix Market input")
    field_ = _check_mm_header(text.splitlines()[0])
    try:
        matrix = sp.coo_matrix(scipy.io.mmread(io.BytesIO(text.encode("utf-8"))))
    except (ValueError, IndexError) as e:
        raise GraphFormatError(f"malformed Matrix Market body: {e}") from e
    rows, cols = matrix.shape
    if rows != cols:
        raise GraphFormatError(f"adjacency must be square, got {rows}x{cols}")

    keep = matrix.data != 0 if field_ != "pattern" else np.ones(matrix.nnz, dtype=bool)
    src = matrix.row[keep] + 1
    dst = matrix.col[keep] + 1
    loop_mask = src == dst
    edges = [(int(i), int(j)) for i, j in zip(src[~loop_mask], dst[~loop_mask])]
    return _finish(rows, edges, int(np.count_nonzero(loop_mask)), source)


def load_graph(path: str, fmt: str = "edgelist") -> DirectedGraph:
    if fmt not in FORMATS:
        raise GraphFormatError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")
    with open(path, "r", encoding="utf-8") as fh:
        if fmt == "mtx":
            return load_matrix_market(fh, source=path)
        return load_edgelist(fh, source=path)


def write_edgelist(g: DirectedGraph, stream: IO[str], comments: Iterable[str] = ()) -> None:
    for comment in comments:
        stream.write(f"# {comment}\n")
    stream.write(f"n={g.n}\n")
    for src, dst in g.edges():
        stream.write(f"{src} {dst}\n")
