"""Edge colorings, rainbow path search and rainbow-connectivity verification."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .graph import Graph, GraphError, is_connected
from .seeding import derive_seed, make_rng

# Rainbow search keeps one bit per color in use; this caps the state space.
MAX_COLORS = 20


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    k: int
    colors: tuple  # indexed by canonical edge index
    graph_shape: tuple  # (n, m)

    def __post_init__(self):
        if self.k < 1:
            raise ColoringError("palette size k must be at least 1")
        if len(self.colors) != self.graph_shape[1]:
            raise ColoringError(
                f"{len(self.colors)} colors for a graph with {self.graph_shape[1]} edges"
            )
        for c in self.colors:
            if not 0 <= c < self.k:
                raise ColoringError(f"color {c} outside palette 0..{self.k - 1}")

    @classmethod
    def of(cls, g: Graph, k: int, colors) -> EdgeColoring:
        return cls(k=int(k), colors=tuple(int(c) for c in colors), graph_shape=(g.n, g.m))

    def color_of(self, g: Graph, u: int, v: int) -> int:
        return self.colors[g.edge_id(u, v)]

    def to_text(self, g: Graph) -> str:
        self._check_shape(g)
        lines = [str(self.k)]
        lines += [f"{u} {v} {c}" for (u, v), c in zip(g.edges, self.colors)]
        return "\n".join(lines) + "\n"

    def _check_shape(self, g: Graph) -> None:
        if tuple(self.graph_shape) != (g.n, g.m):
            raise ColoringError(
                f"coloring is for shape {tuple(self.graph_shape)}, graph has {(g.n, g.m)}"
            )


@dataclass(frozen=True)
class RainbowWitness:
    """One rainbow path per unordered vertex pair, keyed by ``(u, v)`` with u < v."""

    pairs: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.pairs)

    def path(self, u: int, v: int) -> tuple:
        if u > v:
            return tuple(reversed(self.pairs[(v, u)]))
        return self.pairs[(u, v)]


@dataclass(frozen=True)
class Verification:
    connected: bool
    witness: RainbowWitness | None = None
    failing_pair: tuple | None = None

    def __bool__(self):
        return self.connected


def sample_uniform_coloring(g: Graph, k: int, seed: int) -> EdgeColoring:
    if k < 1:
        raise ColoringError("palette size k must be at least 1")
    rng = make_rng(seed)
    colors = rng.integers(0, k, size=g.m)
    return EdgeColoring.of(g, k, colors.tolist())


def is_rainbow_path(c: EdgeColoring, g: Graph, path) -> bool:
    path = [int(x) for x in path]
    if not path:
        raise ColoringError("empty path")
    if len(set(path)) != len(path):
        raise ColoringError(f"vertex repeated in {path}")
    c._check_shape(g)
    seen = set()
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ColoringError(f"consecutive vertices {a}, {b} are not adjacent")
        col = c.colors[g.edge_id(a, b)]
        if col in seen:
            return False
        seen.add(col)
    return True


def _incidence(c: EdgeColoring, g: Graph) -> list:
    """Per vertex, ascending ``(neighbor, color)`` lists."""
    inc = [[] for _ in range(g.n)]
    for (u, v), col in zip(g.edges, c.colors):
        inc[u].append((v, col))
        inc[v].append((u, col))
    for row in inc:
        row.sort()
    return inc


def _check_palette(c: EdgeColoring) -> None:
    used = len(set(c.colors))
    if used > MAX_COLORS:
        raise ColoringError(f"{used} distinct colors exceeds the search limit {MAX_COLORS}")


def _mask_key(mask: int) -> tuple:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _rainbow_layers(inc, u, v):
    layers = [{(u, 0)}]
    while True:
        nxt = set()
        for w, mask in layers[-1]:
            for x, col in inc[w]:
                bit = 1 << col
                if not mask & bit:
                    nxt.add((x, mask | bit))
        if not nxt:
            return layers, []
        layers.append(nxt)
        finals = [mask for x, mask in nxt if x == v]
        if finals:
            return layers, finals


def _canonical_path(inc, layers, u, v, target_mask):
    depth = len(layers) - 1
    good = [None] * (depth + 1)
    good[depth] = {(v, target_mask)}
    for j in range(depth - 1, -1, -1):
        keep = set()
        for w, mask in layers[j]:
            if mask & ~target_mask:
                continue
            for x, col in inc[w]:
                bit = 1 << col
                if not mask & bit and (x, mask | bit) in good[j + 1]:
                    keep.add((w, mask))
                    break
        good[j] = keep
    path, mask = [u], 0
    for j in range(depth):
        w = path[-1]
        for x, col in inc[w]:
            bit = 1 << col
            if not mask & bit and (x, mask | bit) in good[j + 1]:
                path.append(x)
                mask |= bit
                break
    return tuple(path)


def rainbow_reachable(c: EdgeColoring, g: Graph, u: int, v: int, _inc=None):
    """Return a rainbow u-v path as a vertex tuple, or None if none exists.

    Breadth-first search over (vertex, used-color set) states. The path
    returned is a shortest rainbow path; among those, the one whose sorted
    color tuple is smallest, then the lexicographically smallest vertex
    sequence. A shortest rainbow walk never repeats a vertex, so no
    shortcutting is needed on the final layer.
    """
    if u == v:
        raise ColoringError("rainbow_reachable needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range for n={g.n}")
    c._check_shape(g)
    if g.has_edge(u, v):
        return (u, v)
    _check_palette(c)
    inc = _inc if _inc is not None else _incidence(c, g)
    layers, finals = _rainbow_layers(inc, u, v)
    if not finals:
        return None
    target = min(finals, key=_mask_key)
    return _canonical_path(inc, layers, u, v, target)


def _reachable_bool(inc, u, v) -> bool:
    return bool(_rainbow_layers(inc, u, v)[1])


def _unresolved_pairs(c: EdgeColoring, g: Graph) -> list:
    """Non-adjacent pairs (u < v) with no rainbow path of length 2 or 3.

    Rainbow walk counts come from per-color adjacency matrices ``M_a``. For
    non-adjacent u, v every 2- or 3-walk between them is a path, so a positive
    count settles the pair. Three-walks with all colors distinct are counted as
    A^3 - D A - A D - sum M_a A M_a + 2 sum M_a^3 with D = sum M_a^2.
    """
    n = g.n
    if g.m == 0:
        return list(combinations(range(n), 2))
    us = np.fromiter((e[0] for e in g.edges), dtype=np.intp, count=g.m)
    vs = np.fromiter((e[1] for e in g.edges), dtype=np.intp, count=g.m)
    cols = np.asarray(c.colors, dtype=np.intp)
    # float for BLAS; counts are small integers and stay exact
    adj = np.zeros((n, n))
    adj[us, vs] = adj[vs, us] = 1
    mono = []
    for col in np.unique(cols):
        sel = cols == col
        mat = np.zeros((n, n))
        mat[us[sel], vs[sel]] = mat[vs[sel], us[sel]] = 1
        mono.append(mat)
    same2 = sum(mat @ mat for mat in mono)
    rainbow2 = adj @ adj - same2
    open_pair = (adj == 0) & (rainbow2 == 0)
    np.fill_diagonal(open_pair, False)
    if len(mono) >= 3 and open_pair.any():
        walks3 = adj @ adj @ adj - same2 @ adj - adj @ same2
        for mat in mono:
            walks3 -= mat @ adj @ mat - 2 * (mat @ mat @ mat)
        open_pair &= walks3 == 0
    iu, iv = np.nonzero(np.triu(open_pair, 1))
    return sorted(zip(iu.tolist(), iv.tolist()))


def first_failing_pair(c: EdgeColoring, g: Graph):
    """Lexicographically first pair with no rainbow path, or None.

    Pairs not settled by the matrix counts fall back to the exact search.
    """
    c._check_shape(g)
    _check_palette(c)
    inc = None
    for u, v in _unresolved_pairs(c, g):
        if inc is None:
            inc = _incidence(c, g)
        if not _reachable_bool(inc, u, v):
            return (u, v)
    return None


def is_rainbow_connected(c: EdgeColoring, g: Graph, witness: bool = True) -> Verification:
    """Check every vertex pair, in lexicographic order, for a rainbow path.

    With ``witness=True`` a successful check carries a canonical path per pair.
    """
    c._check_shape(g)
    if g.n >= 1 and not is_connected(g):
        raise GraphError("rainbow connectivity is only defined for connected graphs")
    bad = first_failing_pair(c, g)
    if bad is not None:
        return Verification(False, failing_pair=bad)
    if not witness:
        return Verification(True)
    inc = _incidence(c, g)
    paths = {}
    for u, v in combinations(range(g.n), 2):
        paths[(u, v)] = rainbow_reachable(c, g, u, v, _inc=inc)
    return Verification(True, witness=RainbowWitness(paths))


@dataclass(frozen=True)
class LasVegasResult:
    success: bool
    iterations: int
    coloring: EdgeColoring | None = None
    witness: RainbowWitness | None = None
    failures: int = 0
    failing_pairs: dict = field(default_factory=dict)  # first failing pair -> count


def _attempt(g: Graph, k: int, seed: int, index: int):
    col = sample_uniform_coloring(g, k, derive_seed(seed, index))
    return col, first_failing_pair(col, g)


def _attempt_batch(g, k, seed, indices):
    return [_attempt(g, k, seed, i)[1] for i in indices]


def las_vegas_color(
    g: Graph, k: int, max_iters: int, seed: int, workers: int = 1
) -> LasVegasResult:
    """Resample uniform k-colorings until one verifies, up to ``max_iters`` draws.

    Iteration ``i`` (1-based) uses ``derive_seed(seed, i)``. With ``workers > 1``
    iterations are evaluated speculatively in parallel but the lowest successful
    index wins, so the result matches the sequential run.
    """
    if k < 1:
        raise ColoringError("palette size k must be at least 1")
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    if not is_connected(g):
        raise GraphError("rainbow connectivity is only defined for connected graphs")

    failing = Counter()
    winner = None
    if workers <= 1:
        for i in range(1, max_iters + 1):
            _, bad = _attempt(g, k, seed, i)
            if bad is None:
                winner = i
                break
            failing[bad] += 1
    else:
        batch = 4 * workers
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for start in range(1, max_iters + 1, batch):
                idx = list(range(start, min(start + batch, max_iters + 1)))
                chunks = [idx[j::workers] for j in range(workers)]
                results = {}
                w = len(chunks)
                outs = pool.map(_attempt_batch, [g] * w, [k] * w, [seed] * w, chunks)
                for chunk, out in zip(chunks, outs):
                    results.update(zip(chunk, out))
                for i in idx:
                    if results[i] is None:
                        winner = i
                        break
                    failing[results[i]] += 1
                if winner is not None:
                    break

    counts = {f"{u}-{v}": n for (u, v), n in sorted(failing.items())}
    if winner is None:
        return LasVegasResult(False, max_iters, failures=max_iters, failing_pairs=counts)
    col = sample_uniform_coloring(g, k, derive_seed(seed, winner))
    ver = is_rainbow_connected(col, g)
    assert ver.connected
    return LasVegasResult(
        True, winner, coloring=col, witness=ver.witness,
        failures=winner - 1, failing_pairs=counts,
    )
