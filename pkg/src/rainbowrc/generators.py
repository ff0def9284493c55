"""Graph families for oracle tests and theorem experiments."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, build_graph, diameter, is_connected, min_degree
from .seeding import derive_seed, make_rng

FAMILIES = (
    "complete",
    "path",
    "cycle",
    "wheel",
    "star",
    "petersen",
    "complete_minus_matching",
    "complete_bipartite",
    "bipartite_minus_matching",
    "random_min_degree",
    "random_diam2",
)
SEEDED = ("random_min_degree", "random_diam2")

MAX_REDRAWS = 50


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    s: int | None = None  # first class size for bipartite families
    delta_target: int | None = None
    seed: int | None = None

    def order(self) -> int:
        if self.family == "petersen":
            return 10
        if self.family == "bipartite_minus_matching":
            return 2 * self.s
        return self.n


def complete(n):
    return build_graph(n, combinations(range(n), 2))


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n):
    """Hub 0 joined to a cycle on 1..n-1."""
    if n < 4:
        raise GraphError("a wheel needs at least 4 vertices")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return build_graph(n, rim + [(0, i) for i in range(1, n)])


def star(n):
    return build_graph(n, [(0, i) for i in range(1, n)])


def petersen():
    """Vertices are the 2-subsets of {0..4}, adjacent when disjoint."""
    subsets = list(combinations(range(5), 2))
    return build_graph(
        10,
        [(i, j) for i, j in combinations(range(10), 2) if not set(subsets[i]) & set(subsets[j])],
    )


def complete_minus_matching(n):
    if n < 2 or n % 2:
        raise GraphError("complete_minus_matching needs an even n >= 2")
    return build_graph(
        n, [(u, v) for u, v in combinations(range(n), 2) if not (u % 2 == 0 and v == u + 1)]
    )


def complete_bipartite(s, t):
    """Classes 0..s-1 and s..s+t-1."""
    if s < 1 or t < 1:
        raise GraphError("both classes must be non-empty")
    return build_graph(s + t, [(a, s + b) for a in range(s) for b in range(t)])


def bipartite_minus_matching(s):
    """K_{s,s} minus the matching {i, s+i}."""
    if s < 2:
        raise GraphError("bipartite_minus_matching needs s >= 2")
    return build_graph(2 * s, [(a, s + b) for a in range(s) for b in range(s) if a != b])


def _augment(n, adj, delta, rng):
    """Add edges at deficient vertices until every degree reaches delta.

    Prefers joining two deficient vertices, otherwise a random non-neighbor.
    """
    while True:
        deficient = [v for v in range(n) if len(adj[v]) < delta]
        if not deficient:
            return
        u = deficient[rng.integers(len(deficient))]
        partners = [w for w in deficient if w != u and w not in adj[u]]
        if not partners:
            partners = [w for w in range(n) if w != u and w not in adj[u]]
        w = partners[rng.integers(len(partners))]
        adj[u].add(w)
        adj[w].add(u)


def random_min_degree(n, delta, seed):
    """Random graph G(n, delta/(n-1)) augmented to minimum degree >= delta.

    Redrawn when the result is disconnected, or complete while delta < n-1.
    """
    if n < 2:
        raise GraphError("need n >= 2")
    if not 1 <= delta <= n - 1:
        raise GraphError(f"delta_target must be in 1..{n - 1}")
    p = delta / (n - 1)
    for attempt in range(MAX_REDRAWS):
        rng = make_rng(derive_seed(seed, attempt))
        draws = rng.random(n * (n - 1) // 2)
        adj = [set() for _ in range(n)]
        for (u, v), r in zip(combinations(range(n), 2), draws):
            if r < p:
                adj[u].add(v)
                adj[v].add(u)
        _augment(n, adj, delta, rng)
        g = build_graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
        if g.is_complete() and delta < n - 1:
            continue
        if is_connected(g):
            return g
    raise GraphError(f"no valid graph after {MAX_REDRAWS} draws")


def random_diam2(n, delta, seed):
    for attempt in range(MAX_REDRAWS):
        g = random_min_degree(n, delta, derive_seed(seed, attempt))
        if diameter(g) == 2:
            return g
    raise GraphError(f"no diameter-2 graph after {MAX_REDRAWS} draws")


def generate(spec: FamilySpec) -> Graph:
    f = spec.family
    if f not in FAMILIES:
        raise GraphError(f"unknown family {f!r}")
    if f == "petersen":
        return petersen()
    if f == "bipartite_minus_matching":
        if spec.s is None:
            raise GraphError("bipartite_minus_matching needs s")
        if spec.n is not None and spec.n != 2 * spec.s:
            raise GraphError(f"bipartite_minus_matching with s={spec.s} has n={2 * spec.s}")
        return bipartite_minus_matching(spec.s)
    if spec.n is None:
        raise GraphError(f"{f} needs n")
    n = spec.n
    if f == "complete_bipartite":
        if spec.s is None:
            raise GraphError("complete_bipartite needs s (first class size)")
        return complete_bipartite(spec.s, n - spec.s)
    if f in SEEDED:
        if spec.delta_target is None or spec.seed is None:
            raise GraphError(f"{f} needs delta_target and seed")
        make = random_min_degree if f == "random_min_degree" else random_diam2
        g = make(n, spec.delta_target, spec.seed)
        assert min_degree(g) >= spec.delta_target
        return g
    if n < 1:
        raise GraphError("n must be positive")
    return {
        "complete": complete,
        "path": path,
        "cycle": cycle,
        "wheel": wheel,
        "star": star,
        "complete_minus_matching": complete_minus_matching,
    }[f](n)
