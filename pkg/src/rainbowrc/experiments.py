"""Monte Carlo estimates of how often one uniform k-coloring is rainbow connected."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from itertools import combinations

from .coloring import first_failing_pair, sample_uniform_coloring
from .generators import FamilySpec, generate
from .graph import Graph, GraphError, is_connected
from .seeding import SUBSEED_RULE, derive_seed
from .theorems import check_theorem, path_failure_prob, union_bound_failure

Z95 = 1.959963984540054
SWEEP_PARAMS = ("delta_target", "k", "n")


@dataclass(frozen=True)
class ExperimentConfig:
    k: int
    trials: int
    master_seed: int
    graph: Graph | None = None
    family: FamilySpec | None = None
    theorem_id: str | None = None
    workers: int = 1

    def resolve_graph(self) -> Graph:
        if (self.graph is None) == (self.family is None):
            raise ValueError("give exactly one of graph or family")
        return self.graph if self.graph is not None else generate(self.family)


@dataclass(frozen=True)
class TrialStats:
    trials: int
    successes: int
    empirical_rate: float
    wilson_interval: tuple
    wilson_se: float
    master_seed: int
    subseed_rule: str
    n: int
    m: int
    k: int
    theorem_id: str | None = None
    theorem_status: str | None = None
    theory_lower_bound: float | None = None
    sharpened_lower_bound: float | None = None
    consistent_with_theory: bool | None = None
    parameter: str | None = None
    value: int | None = None

    def as_dict(self) -> dict:
        d = asdict(self)
        d["wilson_interval"] = list(self.wilson_interval)
        return d


CSV_COLUMNS = (
    "parameter", "value", "n", "m", "k", "trials", "successes", "empirical_rate",
    "wilson_low", "wilson_high", "wilson_se", "theorem_id", "theorem_status",
    "theory_lower_bound", "sharpened_lower_bound", "consistent_with_theory", "master_seed",
)


def wilson(successes: int, trials: int, z: float = Z95):
    """Wilson score interval and its standard error (half-width / z)."""
    p = successes / trials
    denom = 1 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    se = math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    return (max(0.0, centre - z * se), min(1.0, centre + z * se)), se


def sharpened_success_bound(g: Graph, k: int) -> float:
    """Union bound using each pair's actual path counts instead of the worst case.

    Per non-adjacent pair: (1/k)^|N(u) & N(v)| from disjoint 2-paths, and for
    k >= 3 ((3k-2)/k^2)^t from 3-paths u-w-x-v through one fixed w, which are
    independent once the color of uw is known.
    """
    p2 = 1.0 / k
    p3 = float(path_failure_prob(k, 3))
    total = 0.0
    adj = g.adjacency
    for u, v in combinations(range(g.n), 2):
        if v in adj[u]:
            continue
        best = p2 ** len(adj[u] & adj[v])
        if k >= 3:
            t3 = max(
                max((len(adj[w] & adj[v]) for w in adj[u]), default=0),
                max((len(adj[w] & adj[u]) for w in adj[v]), default=0),
            )
            best = min(best, p3 ** t3)
        total += best
    return max(0.0, 1.0 - total)


def _count_successes(g, k, seed, indices):
    ok = 0
    for i in indices:
        if first_failing_pair(sample_uniform_coloring(g, k, derive_seed(seed, i)), g) is None:
            ok += 1
    return ok


def run_trials(cfg: ExperimentConfig) -> TrialStats:
    """Sample ``cfg.trials`` colorings (trial i seeded by (master_seed, i)) and verify each."""
    if cfg.trials < 1:
        raise ValueError("trials must be at least 1")
    if cfg.k < 1:
        raise ValueError("k must be at least 1")
    g = cfg.resolve_graph()
    if g.n < 2 or not is_connected(g):
        raise GraphError("experiments need a connected graph on at least two vertices")

    if cfg.workers <= 1:
        successes = _count_successes(g, cfg.k, cfg.master_seed, range(cfg.trials))
    else:
        chunks = [range(j, cfg.trials, cfg.workers) for j in range(cfg.workers)]
        w = len(chunks)
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            successes = sum(pool.map(
                _count_successes, [g] * w, [cfg.k] * w, [cfg.master_seed] * w, chunks
            ))

    interval, se = wilson(successes, cfg.trials)
    status = theory = sharp = consistent = None
    if cfg.theorem_id is not None:
        status = check_theorem(g, cfg.k, cfg.theorem_id).status
        if status == "satisfied":
            theory = float(1 - union_bound_failure(g.n))
            sharp = sharpened_success_bound(g, cfg.k)
            consistent = interval[0] >= theory - 3 * se
    return TrialStats(
        trials=cfg.trials,
        successes=successes,
        empirical_rate=successes / cfg.trials,
        wilson_interval=interval,
        wilson_se=se,
        master_seed=cfg.master_seed,
        subseed_rule=SUBSEED_RULE,
        n=g.n,
        m=g.m,
        k=cfg.k,
        theorem_id=cfg.theorem_id,
        theorem_status=status,
        theory_lower_bound=theory,
        sharpened_lower_bound=sharp,
        consistent_with_theory=consistent,
    )


def sweep(base: ExperimentConfig, parameter: str, values) -> list[TrialStats]:
    """One TrialStats per value; each row seeded by (master_seed, value)."""
    if parameter not in SWEEP_PARAMS:
        raise ValueError(f"parameter must be one of {SWEEP_PARAMS}")
    rows = []
    for value in values:
        value = int(value)
        cfg = replace(base, master_seed=derive_seed(base.master_seed, value))
        if parameter == "k":
            cfg = replace(cfg, k=value)
        else:
            if base.family is None:
                raise ValueError(f"sweeping {parameter} needs a graph family, not a fixed graph")
            cfg = replace(cfg, family=replace(base.family, **{parameter: value}))
        rows.append(replace(run_trials(cfg), parameter=parameter, value=value))
    return rows


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        d = dict(r) if isinstance(r, dict) else r.as_dict()
        d["wilson_low"], d["wilson_high"] = d["wilson_interval"]
        w.writerow(["" if d[c] is None else d[c] for c in CSV_COLUMNS])
    return buf.getvalue()
