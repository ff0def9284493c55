"""Hypothesis checkers for the dense-graph rainbow connection theorems.

Theorem ids and what they need (``L = log_k n``, ``b = k^2 / (3k - 2)``):

    T1_1  non-complete, delta >= n/2 + log n                  -> rc = 2
    T1_2  non-complete bipartite, same-class common
          neighbors >= 2 log n / log(9/7)                     -> rc = 3
    T1_3  non-complete, delta >= n/2 - 1 + L                  -> rc <= k   (k >= 2)
    T1_4  non-complete, sigma2 >= n - 2 + 2L                  -> rc <= k   (k >= 2)
    T1_5  non-complete bipartite, same-class common
          neighbors >= 2 log_b(k) L                           -> rc <= k   (k >= 3)
    T1_6  diameter 2, delta >= 8 log n                        -> rc <= 3
    T1_7  diameter 2, delta >= 2 (1 + log_b k) L              -> rc <= k   (k >= 3)

T1_1, T1_2 and T1_6 are quoted without a log base; base 2 is used and
recorded in every check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import mpmath

from .graph import (
    INF,
    Graph,
    GraphError,
    bipartition,
    diameter,
    is_complete_bipartite,
    is_connected,
    min_degree,
    sigma2,
)

THEOREMS = ("T1_1", "T1_2", "T1_3", "T1_4", "T1_5", "T1_6", "T1_7")
PRIOR_WORK = ("T1_1", "T1_2", "T1_6")
MIN_K = {"T1_3": 2, "T1_4": 2, "T1_5": 3, "T1_7": 3}
PRIOR_LOG_BASE = 2
NEAR_THRESHOLD = 1e-12

mpmath.mp.dps = 50

SATISFIED = "satisfied"
UNSATISFIED = "unsatisfied"
NOT_APPLICABLE = "not_applicable"


def _log(x: int, base) -> mpmath.mpf | int:
    """log_base(x), exact when x is an integer power of an integer base."""
    if isinstance(base, int) and base >= 2 and x >= 1:
        j, p = 0, 1
        while p < x:
            p *= base
            j += 1
        if p == x:
            return j
    return mpmath.log(x) / mpmath.log(base)


def _three_path_base(k: int):
    return mpmath.mpf(k * k) / (3 * k - 2)


def _check_theorem_id(theorem_id: str) -> None:
    if theorem_id not in THEOREMS:
        raise ValueError(f"unknown theorem id {theorem_id!r}; expected one of {THEOREMS}")


def _check_k(theorem_id: str, k) -> None:
    need = MIN_K.get(theorem_id)
    if need is not None and (k is None or k < need):
        raise ValueError(f"{theorem_id} needs k >= {need}, got {k}")


def path_failure_prob(k: int, length: int) -> Fraction:
    """Probability a fixed path is not rainbow under a uniform k-coloring.

    Exact for every k >= 1: 1/k for two edges, (3k - 2)/k^2 for three.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if length == 2:
        return Fraction(1, k)
    if length == 3:
        return Fraction(3 * k - 2, k * k)
    raise ValueError(f"unsupported path length {length}; only 2 and 3")


def pair_failure_bound(p, t):
    """p ** t; exact Fraction when p is rational and t integral."""
    if not 0 <= p <= 1:
        raise ValueError("p must be a probability")
    if t < 0:
        raise ValueError("path count must be non-negative")
    if isinstance(p, (int, Fraction)) and float(t) == int(t):
        return Fraction(p) ** int(t)
    p = Fraction(p)
    return float(mpmath.power(mpmath.mpf(p.numerator) / p.denominator, t))


def union_bound_failure(n: int) -> Fraction:
    """C(n, 2) * 1/n^2 = (n - 1) / (2n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Fraction(comb(n, 2), n * n)


def common_neighbor_lower_bound(d_u: int, d_v: int, n: int) -> int:
    return max(0, d_u + d_v - (n - 2))


def _path_count(theorem_id: str, k: int, n: int):
    """Number of paths the union-bound argument relies on per pair."""
    if theorem_id in ("T1_3", "T1_4"):
        return 2 * _log(n, k)
    return 2 * _log(k, _three_path_base(k)) * _log(n, k)


def _threshold(theorem_id: str, k, n: int):
    _check_theorem_id(theorem_id)
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_k(theorem_id, k)
    if theorem_id == "T1_1":
        return mpmath.mpf(n) / 2 + _log(n, PRIOR_LOG_BASE)
    if theorem_id == "T1_2":
        c = 1 / mpmath.log(mpmath.mpf(9) / 7, PRIOR_LOG_BASE)
        return 2 * c * _log(n, PRIOR_LOG_BASE)
    if theorem_id == "T1_6":
        return 8 * _log(n, PRIOR_LOG_BASE)
    if theorem_id == "T1_3":
        return mpmath.mpf(n) / 2 - 1 + _log(n, k)
    if theorem_id == "T1_4":
        return mpmath.mpf(n - 2) + 2 * _log(n, k)
    if theorem_id == "T1_5":
        return _path_count("T1_5", k, n)
    return 2 * (1 + _log(k, _three_path_base(k))) * _log(n, k)


def required_threshold(theorem_id: str, k, n: int) -> float:
    """The hypothesis threshold as a real number (no rounding)."""
    return float(_threshold(theorem_id, k, n))


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    k: int
    n: int
    per_path_failure: Fraction
    path_count: object  # int when exact, float otherwise
    per_pair_failure: object  # Fraction when exact, float otherwise
    pair_population: int  # C(n, 2); the argument uses strictly fewer pairs
    union_failure: object
    success_lower_bound: object


def bound_report(theorem_id: str, k: int, n: int) -> BoundReport:
    """The union-bound chain behind T1_3, T1_4, T1_5 and T1_7."""
    _check_theorem_id(theorem_id)
    if theorem_id in PRIOR_WORK:
        raise ValueError(f"{theorem_id} is quoted without proof; no bound chain to report")
    _check_k(theorem_id, k)
    if n < 2:
        raise ValueError("n must be at least 2")
    length = 2 if theorem_id in ("T1_3", "T1_4") else 3
    p = path_failure_prob(k, length)
    t = _path_count(theorem_id, k, n)
    t = t if isinstance(t, int) else float(t)
    per_pair = pair_failure_bound(p, t)
    pairs = comb(n, 2)
    if isinstance(per_pair, Fraction):
        union = min(Fraction(1), pairs * per_pair)
        success = 1 - union
    else:
        union = min(1.0, pairs * per_pair)
        success = 1.0 - union
    return BoundReport(theorem_id, k, n, p, t, per_pair, pairs, union, success)


@dataclass
class TheoremCheck:
    theorem_id: str
    k: int | None
    status: str
    measured: dict = field(default_factory=dict)
    threshold: float | None = None
    implied_bound: str | None = None
    log_base: str = "k"
    near_threshold: bool = False
    notes: list = field(default_factory=list)
    diagnostics: dict | None = None

    @property
    def satisfied(self) -> bool:
        return self.status == SATISFIED


_CONCLUSION = {"T1_1": "rc = 2", "T1_2": "rc = 3", "T1_6": "rc <= 3"}


def _conclusion(theorem_id, k):
    return _CONCLUSION.get(theorem_id, f"rc <= {k}")


def _same_class_min_common(g: Graph, parts) -> int | None:
    best = None
    for cls in (parts.class_a, parts.class_b):
        for u, v in combinations(sorted(cls), 2):
            c = len(g.adjacency[u] & g.adjacency[v])
            if best is None or c < best:
                best = c
    return best


def two_branch_diagnostic(g: Graph, k: int) -> dict:
    """Which case of the diameter-2 argument covers each non-adjacent pair.

    Pairs with at least 2 log_k n common neighbors use the length-2 paths
    (branch "common_neighbors"); the rest use paths u-x-y-v with x in
    N(u) minus N(v) (branch "ab_construction"), recorded with |A| and |B|.
    """
    n = g.n
    two_l = 2 * _log(n, k)
    need_ab = _path_count("T1_7", k, n)
    pairs, counts = [], {"common_neighbors": 0, "ab_construction": 0}
    for u, v in combinations(range(n), 2):
        if g.has_edge(u, v):
            continue
        common = len(g.adjacency[u] & g.adjacency[v])
        entry = {"pair": [u, v], "common": common}
        if common >= two_l:
            entry["branch"] = "common_neighbors"
        else:
            a = g.degree(u) - common
            b = g.degree(v) - common
            entry.update(branch="ab_construction", a_size=a, b_size=b,
                         ab_large_enough=bool(a >= need_ab and b >= need_ab))
        counts[entry["branch"]] += 1
        pairs.append(entry)
    return {
        "two_log_k_n": float(two_l),
        "ab_required": float(need_ab),
        "branch_counts": counts,
        "pairs": pairs,
    }


def check_theorem(g: Graph, k, theorem_id: str) -> TheoremCheck:
    """Evaluate one theorem's hypotheses on g.

    Structural side conditions that fail (complete graph, not bipartite,
    diameter other than 2, k too small) give status ``not_applicable``,
    distinct from ``unsatisfied``.
    """
    _check_theorem_id(theorem_id)
    if g.n < 2 or not is_connected(g):
        raise GraphError("theorem checks need a connected graph on at least two vertices")
    n = g.n
    chk = TheoremCheck(theorem_id, k, NOT_APPLICABLE, measured={"n": n})
    if theorem_id in PRIOR_WORK:
        chk.log_base = str(PRIOR_LOG_BASE)
        chk.notes.append("log base unspecified in the source statement; base 2 used")
    need = MIN_K.get(theorem_id)
    if need is not None and (k is None or k < need):
        chk.notes.append(f"requires k >= {need}")
        return chk

    if theorem_id in ("T1_1", "T1_3", "T1_4"):
        if g.is_complete():
            chk.notes.append("graph is complete")
            return chk
        if theorem_id == "T1_4":
            key, value = "sigma2", sigma2(g)
        else:
            key, value = "delta", min_degree(g)
    elif theorem_id in ("T1_2", "T1_5"):
        parts = bipartition(g)
        if parts is None:
            chk.notes.append("graph is not bipartite")
            return chk
        if is_complete_bipartite(g, parts):
            chk.notes.append("graph is complete bipartite; its rc is known from prior work")
            return chk
        value = _same_class_min_common(g, parts)
        if value is None:
            chk.notes.append("no two vertices share a class")
            return chk
        key = "min_common_neighbors_same_class"
        if theorem_id == "T1_5":
            chk.notes.append(
                "cross-class paths share the edge u-w_u; the product bound holds "
                "conditionally on that edge's color"
            )
    else:
        diam = diameter(g)
        chk.measured["diameter"] = None if diam is INF else diam
        if diam != 2:
            chk.notes.append(f"diameter is {diam}, not 2")
            return chk
        key, value = "delta", min_degree(g)
        if theorem_id == "T1_7":
            chk.diagnostics = two_branch_diagnostic(g, k)

    thr = _threshold(theorem_id, k, n)
    chk.measured[key] = value
    chk.threshold = float(thr)
    chk.near_threshold = bool(abs(value - thr) <= NEAR_THRESHOLD * max(1, abs(thr)))
    if value >= thr:
        chk.status = SATISFIED
        chk.implied_bound = _conclusion(theorem_id, k)
    else:
        chk.status = UNSATISFIED
    return chk


def check_all(g: Graph, k) -> list[TheoremCheck]:
    return [check_theorem(g, k, t) for t in THEOREMS]
