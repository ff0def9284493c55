"""Exact rainbow connection number for small graphs.

Backtracking over edges in canonical order. Colors are interchangeable, so
an edge may only open a new color if it is the lowest unused one.

With pruning on, every non-adjacent pair keeps the list of its simple paths
of length <= k. A path dies once two of its assigned edges share a color;
no extension can revive it, so a pair with no live path refutes the branch.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .coloring import EdgeColoring, first_failing_pair, is_rainbow_connected
from .graph import Graph, GraphError, diameter, is_connected

# Search is split into subtrees below this many edges; fixed so that the
# explored-node count does not depend on the worker count.
PREFIX_DEPTH = 4


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_edges: int = 16
    max_nodes: int | None = None  # per top-level subtree
    max_seconds: float | None = None


@dataclass(frozen=True)
class Decision:
    k: int
    certificate: EdgeColoring | None
    nodes: int
    colorings_tested: int

    @property
    def feasible(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class RcResult:
    rc: int
    certificate: EdgeColoring
    lower_bound_used: int
    search_stats: dict


def short_paths(g: Graph, k: int) -> dict:
    """Simple paths with at most k edges between every non-adjacent pair.

    Returns ``{(u, v): [tuple of edge ids, ...]}`` for u < v.
    """
    out = {}
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        found = []
        stack = [(u, (u,), ())]
        while stack:
            x, seen, eids = stack.pop()
            for y in g.adjacency[x]:
                if y in seen:
                    continue
                e = g.edge_id(x, y)
                if y == v:
                    found.append(eids + (e,))
                elif len(eids) + 1 < k:
                    stack.append((y, seen + (y,), eids + (e,)))
        out[(u, v)] = sorted(found)
    return out


class _Search:
    def __init__(self, g: Graph, k: int, prune: bool, max_nodes=None, deadline=None):
        self.g, self.k, self.prune = g, k, prune
        self.max_nodes, self.deadline = max_nodes, deadline
        self.colors = [-1] * g.m
        self.nodes = 0
        self.tested = 0
        self.path_edges, self.path_pair = [], []
        self.refs = [[] for _ in range(g.m)]
        self.alive = []
        self.infeasible = False
        if prune:
            for pid, (_, plist) in enumerate(sorted(short_paths(g, k).items())):
                self.alive.append(len(plist))
                if not plist:
                    self.infeasible = True
                for es in plist:
                    p = len(self.path_edges)
                    self.path_edges.append(es)
                    self.path_pair.append(pid)
                    for e in es:
                        self.refs[e].append(p)
            self.dead = [False] * len(self.path_edges)

    def assign(self, e: int, c: int):
        self.colors[e] = c
        undo, ok = [], True
        if self.prune:
            colors = self.colors
            for p in self.refs[e]:
                if self.dead[p]:
                    continue
                for f in self.path_edges[p]:
                    if f != e and colors[f] == c:
                        self.dead[p] = True
                        undo.append(p)
                        pair = self.path_pair[p]
                        self.alive[pair] -= 1
                        if self.alive[pair] == 0:
                            ok = False
                        break
        return ok, undo

    def unassign(self, e: int, undo) -> None:
        for p in undo:
            self.dead[p] = False
            self.alive[self.path_pair[p]] += 1
        self.colors[e] = -1

    def _tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget {self.max_nodes} exhausted")
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("wall-clock budget exhausted")

    def leaf_ok(self) -> bool:
        self.tested += 1
        if self.prune:
            return True  # every pair still has a live, fully assigned path
        col = EdgeColoring.of(self.g, self.k, self.colors)
        return first_failing_pair(col, self.g) is None

    def dfs(self, e: int, used: int) -> bool:
        if e == self.g.m:
            return self.leaf_ok()
        for c in range(min(used + 1, self.k)):
            self._tick()
            ok, undo = self.assign(e, c)
            if ok and self.dfs(e + 1, max(used, c + 1)):
                return True
            self.unassign(e, undo)
        return False

    def prefixes(self, depth: int) -> list:
        out = []

        def rec(e, used):
            if e == depth:
                out.append(tuple(self.colors[:depth]))
                return
            for c in range(min(used + 1, self.k)):
                self._tick()
                ok, undo = self.assign(e, c)
                if ok:
                    rec(e + 1, max(used, c + 1))
                self.unassign(e, undo)

        rec(0, 0)
        return out

    def replay(self, prefix) -> None:
        for e, c in enumerate(prefix):
            ok, _ = self.assign(e, c)
            assert ok, "prefix was feasible when generated"


def _solve_prefix(g, k, prune, prefix, max_nodes, deadline):
    s = _Search(g, k, prune, max_nodes, deadline)
    s.replay(prefix)
    found = s.dfs(len(prefix), max(prefix, default=-1) + 1)
    return (tuple(s.colors) if found else None), s.nodes, s.tested


def _check_input(g: Graph, k: int) -> None:
    if k < 1:
        raise ValueError("palette size k must be at least 1")
    if g.n < 2:
        raise GraphError("rainbow connection needs at least two vertices")
    if not is_connected(g):
        raise GraphError("rc is undefined for disconnected graphs")


def rc_decision(
    g: Graph,
    k: int,
    prune: bool = True,
    budget: SearchBudget | None = None,
    workers: int = 1,
) -> Decision:
    """Find a rainbow k-coloring of g, or prove by exhaustion that none exists."""
    _check_input(g, k)
    budget = budget or SearchBudget()
    deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds

    root = _Search(g, k, prune, None, deadline)
    if root.infeasible:
        return Decision(k, None, 0, 0)
    depth = min(PREFIX_DEPTH, g.m)
    prefixes = root.prefixes(depth)
    nodes, tested = root.nodes, 0

    args = [(g, k, prune, p, budget.max_nodes, deadline) for p in prefixes]
    if workers <= 1 or len(prefixes) <= 1:
        results = (_solve_prefix(*a) for a in args)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_solve_prefix, *zip(*args))
    try:
        for colors, sub_nodes, sub_tested in results:
            nodes += sub_nodes
            tested += sub_tested
            if colors is not None:
                cert = EdgeColoring.of(g, k, colors)
                if not is_rainbow_connected(cert, g, witness=False):
                    raise AssertionError("search produced an uncertified coloring")
                return Decision(k, cert, nodes, tested)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return Decision(k, None, nodes, tested)


def rc_exact(
    g: Graph,
    budget: SearchBudget | None = None,
    prune: bool = True,
    workers: int = 1,
) -> RcResult:
    """Smallest k with a rainbow k-coloring, searching upward from the diameter."""
    budget = budget or SearchBudget()
    _check_input(g, 1)
    if g.m > budget.max_edges:
        raise BudgetExceeded(f"graph has {g.m} edges, budget allows {budget.max_edges}")
    lower = diameter(g)
    stats = {"nodes": 0, "colorings_tested": 0, "levels": []}
    for k in range(max(1, lower), g.m + 1):
        dec = rc_decision(g, k, prune=prune, budget=budget, workers=workers)
        stats["nodes"] += dec.nodes
        stats["colorings_tested"] += dec.colorings_tested
        stats["levels"].append({"k": k, "feasible": dec.feasible, "nodes": dec.nodes})
        if dec.feasible:
            return RcResult(k, dec.certificate, lower, stats)
    raise AssertionError("a connected graph is rainbow connected with m colors")
