"""Text formats for graphs and colorings.

Graph file::

    # comment lines start with '#'
    n m
    u v        (m lines, 0 <= u, v < n)

Coloring file (relative to a graph)::

    k
    u v c      (one line per edge of the graph, 0 <= c < k)

Writers emit edges in canonical (min, max) lexicographic order.
"""

from __future__ import annotations

from .coloring import EdgeColoring
from .graph import Graph, GraphError, build_graph


class FormatError(ValueError):
    pass


def _records(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield lineno, [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_graph_file(text: str) -> Graph:
    recs = list(_records(text))
    if not recs or len(recs[0][1]) != 2:
        raise FormatError("malformed header: expected 'n m'")
    n, m = recs[0][1]
    if n < 0 or m < 0:
        raise FormatError("malformed header: negative n or m")
    body = recs[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}")
    pairs = []
    for lineno, vals in body:
        if len(vals) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        pairs.append(tuple(vals))
    try:
        g = build_graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    if g.m != m:
        raise FormatError("duplicate edges in graph file")
    return g


def parse_coloring_file(text: str, g: Graph) -> EdgeColoring:
    recs = list(_records(text))
    if not recs or len(recs[0][1]) != 1:
        raise FormatError("malformed header: expected 'k'")
    k = recs[0][1][0]
    if k < 1:
        raise FormatError("palette size k must be at least 1")
    body = recs[1:]
    if len(body) != g.m:
        raise FormatError(f"graph has {g.m} edges, coloring lists {len(body)}")
    colors = [None] * g.m
    for lineno, vals in body:
        if len(vals) != 3:
            raise FormatError(f"line {lineno}: expected 'u v c'")
        u, v, c = vals
        key = (min(u, v), max(u, v))
        if key not in g.edge_index:
            raise FormatError(f"line {lineno}: ({u}, {v}) is not an edge of the graph")
        if not 0 <= c < k:
            raise FormatError(f"line {lineno}: color {c} outside 0..{k - 1}")
        i = g.edge_index[key]
        if colors[i] is not None:
            raise FormatError(f"line {lineno}: edge ({u}, {v}) colored twice")
        colors[i] = c
    return EdgeColoring.of(g, k, colors)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph_file(fh.read())


def read_coloring(path, g: Graph) -> EdgeColoring:
    with open(path) as fh:
        return parse_coloring_file(fh.read(), g)


def write_text(path, text: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
