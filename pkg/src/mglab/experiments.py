"""Monte Carlo harness and threshold-scan experiments.

Reproducibility contract: every trial runs on its own RNG stream spawned
from the master seed by a counter-mode key (sweep index, trial index), so
adding sweep points or reordering workers never perturbs existing results,
and reruns with an identical config produce byte-identical CSV.

For the built-in driving-hypergraph models the harness thins before it
materializes: the number of kept hyperedge trials is Bin(#trials, p_eff),
the kept trials are a uniform subset, and each contributes one uniform
doubleton. That is the same multigraph law as materializing the hypergraph
and running the generator, but it stays cheap when C(n, k) has millions of
hyperedges and p sits at threshold scale. Small instances and explicit
hypergraph files take the dense generator path.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field, fields
from itertools import combinations
from typing import Sequence

import numpy as np

from . import generator
from .hypergraph import Hypergraph, binomial_hypergraph, complete_uniform, read_hypergraph, uniform_hypergraph
from .multigraph import Multigraph

__all__ = [
    "ExperimentConfig",
    "TrialSummary",
    "CouplingReport",
    "run_monte_carlo",
    "threshold_scan",
    "coupling_check",
    "shadow_completeness_estimate",
    "wilson_interval",
    "substream",
    "SCALE_FUNCTIONS",
    "MODELS",
    "PROPERTIES",
]

Z95 = 1.959963984540054

MODELS = ("complete-k", "binomial-hk", "uniform-hk", "file")
PROPERTIES = ("simple", "connected", "no-isolated", "has-edge", "triangle-count", "pair-adjacent")

# Threshold scale functions: p = scale(c, n, k).
SCALE_FUNCTIONS = {
    "invnk": lambda c, n, k: c / n**k,
    "invnk1": lambda c, n, k: c / n ** (k - 1),
    "logn2": lambda c, n, k: c * math.log(n) / n**2,
    "lognk1": lambda c, n, k: c * math.log(n) / n ** (k - 1),
}

# Above this many hyperedges the built-in models switch to the thinned
# sampling path instead of materializing the hypergraph.
DENSE_LIMIT = 20_000


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for (master seed, counter key)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval; stable when the estimate sits near 0 or 1."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / trials + z * z / (4 * trials * trials)) / denom
    # The score interval always contains phat; rounding must not break that
    # at the 0- and all-success boundaries.
    return min(max(0.0, center - half), phat), max(min(1.0, center + half), phat)


@dataclass(frozen=True)
class TrialSummary:
    """Aggregate of one sweep point."""

    p: float
    successes: int
    trials: int
    estimate: float
    ci_low: float
    ci_high: float
    mean_statistic: float | None = None


@dataclass
class ExperimentConfig:
    """Declarative Monte Carlo experiment.

    ``p`` is a single probability, an explicit list, or a multiplier sweep
    {"scale": <invnk|invnk1|logn2|lognk1>, "c": [multipliers]}. ``q`` and
    ``m`` parameterize the random-hypergraph models; ``i``/``j`` name the
    pair for the pair-adjacent property.
    """

    model: str
    n: int
    k: int
    p: float | list[float] | dict
    property: str
    trials: int
    seed: int
    q: float | None = None
    m: int | None = None
    hypergraph_file: str | None = None
    i: int | None = None
    j: int | None = None

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("config must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        missing = {"model", "n", "k", "p", "property", "trials", "seed"} - set(data)
        if missing:
            raise ValueError(f"missing config keys: {sorted(missing)}")
        return cls(**data)

    def validate(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; choose from {MODELS}")
        if self.property not in PROPERTIES:
            raise ValueError(f"unknown property {self.property!r}; choose from {PROPERTIES}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.model == "binomial-hk" and self.q is None:
            raise ValueError("model binomial-hk needs q")
        if self.model == "uniform-hk" and self.m is None:
            raise ValueError("model uniform-hk needs m")
        if self.model == "file" and self.hypergraph_file is None:
            raise ValueError("model file needs hypergraph_file")
        if self.model != "file" and not 2 <= self.k <= self.n:
            raise ValueError(f"edge size k={self.k} outside 2..n={self.n}")
        if self.property == "pair-adjacent" and (self.i is None or self.j is None):
            raise ValueError("property pair-adjacent needs i and j")
        for p in self.p_values():
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"swept p={p} outside [0, 1]")

    def p_values(self) -> list[float]:
        if isinstance(self.p, dict):
            extra = set(self.p) - {"scale", "c"}
            if extra:
                raise ValueError(f"unknown sweep keys: {sorted(extra)}")
            scale = SCALE_FUNCTIONS.get(self.p.get("scale"))
            if scale is None:
                raise ValueError(f"unknown scale {self.p.get('scale')!r}")
            cs = self.p.get("c")
            if not isinstance(cs, (list, tuple)) or not cs:
                raise ValueError("sweep needs a non-empty multiplier list under 'c'")
            values = [scale(c, self.n, self.k) for c in cs]
        elif isinstance(self.p, (list, tuple)):
            values = [float(x) for x in self.p]
        else:
            values = [float(self.p)]
        if len(set(values)) != len(values):
            raise ValueError("sweep p values must be distinct")
        return values


def _evaluate(property_name: str, g: Multigraph, i: int | None, j: int | None) -> tuple[bool, float | None]:
    if property_name == "simple":
        return g.is_simple(), None
    if property_name == "connected":
        return g.is_connected(), None
    if property_name == "no-isolated":
        isolated = g.count_isolated()
        return isolated == 0, float(isolated)
    if property_name == "has-edge":
        return len(g.edge_mult) > 0, None
    if property_name == "triangle-count":
        count = g.count_triangles()
        return count > 0, float(count)
    if property_name == "pair-adjacent":
        return g.multiplicity(i, j) >= 1, None
    raise ValueError(f"unknown property {property_name!r}")


class _TrialSampler:
    """Per-config multigraph sampler choosing the dense or thinned path."""

    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg
        self.fixed: Hypergraph | None = None
        total = math.comb(cfg.n, cfg.k) if cfg.model != "file" else 0
        self.sparse = cfg.model != "file" and total > DENSE_LIMIT
        if cfg.model == "file":
            with open(cfg.hypergraph_file) as f:
                self.fixed = read_hypergraph(f)
        elif cfg.model == "complete-k" and not self.sparse:
            self.fixed = complete_uniform(cfg.n, cfg.k)
        if self.sparse:
            self._unranker = _SubsetUnranker(cfg.n, cfg.k)
            self._pair_table = np.array(list(combinations(range(cfg.k), 2)), dtype=np.int64)

    def sample(self, p: float, rng: np.random.Generator) -> Multigraph:
        cfg = self.cfg
        if self.sparse:
            total = math.comb(cfg.n, cfg.k)
            if cfg.model == "complete-k":
                count = int(rng.binomial(total, p))
            elif cfg.model == "binomial-hk":
                count = int(rng.binomial(total, p * cfg.q))
            else:
                count = int(rng.binomial(cfg.m, p))
            return self._thinned(count, rng)
        if self.fixed is not None:
            h = self.fixed
        elif cfg.model == "binomial-hk":
            h = binomial_hypergraph(cfg.n, cfg.k, cfg.q, rng)
        else:
            h = uniform_hypergraph(cfg.n, cfg.k, cfg.m, rng)
        return generator.generate(h, p, rng)

    def _thinned(self, count: int, rng: np.random.Generator) -> Multigraph:
        cfg = self.cfg
        ranks = _distinct_ranks(math.comb(cfg.n, cfg.k), count, rng)
        members = self._unranker.unrank(ranks)
        local = self._pair_table[rng.integers(0, len(self._pair_table), size=count)]
        rows = np.arange(count)
        u = members[rows, local[:, 0]]
        v = members[rows, local[:, 1]]
        return Multigraph.from_pairs(cfg.n, zip(u.tolist(), v.tolist()))


class _SubsetUnranker:
    """Vectorized colexicographic unranking of k-subsets of 1..n."""

    def __init__(self, n: int, k: int):
        self.k = k
        self.tables = [
            np.array([math.comb(c, i) for c in range(n + 1)], dtype=np.int64)
            for i in range(1, k + 1)
        ]

    def unrank(self, ranks: np.ndarray) -> np.ndarray:
        r = ranks.astype(np.int64).copy()
        out = np.empty((len(ranks), self.k), dtype=np.int64)
        for i in range(self.k, 0, -1):
            table = self.tables[i - 1]
            c = np.searchsorted(table, r, side="right") - 1
            r -= table[c]
            out[:, i - 1] = c + 1
        return out


def _distinct_ranks(total: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """The first ``count`` distinct draws of a uniform stream over
    range(total); their set is a uniform count-subset."""
    if count == 0:
        return np.zeros(0, dtype=np.int64)
    if count > total:
        raise ValueError(f"cannot draw {count} distinct ranks from {total}")
    collected = np.zeros(0, dtype=np.int64)
    while len(collected) < count:
        batch = rng.integers(0, total, size=max(16, (count - len(collected)) * 2))
        merged = np.concatenate([collected, batch])
        _, first = np.unique(merged, return_index=True)
        collected = merged[np.sort(first)]
    return collected[:count]


def run_monte_carlo(cfg: ExperimentConfig) -> list[TrialSummary]:
    """Estimate P(property) at every swept p; fresh random hypergraph per
    trial for the random-hypergraph models, Wilson 95% intervals."""
    cfg.validate()
    sampler = _TrialSampler(cfg)
    out = []
    for p_idx, p in enumerate(cfg.p_values()):
        successes = 0
        stat_sum = 0.0
        have_stat = False
        for trial in range(cfg.trials):
            rng = substream(cfg.seed, p_idx, trial)
            g = sampler.sample(p, rng)
            ok, stat = _evaluate(cfg.property, g, cfg.i, cfg.j)
            successes += ok
            if stat is not None:
                stat_sum += stat
                have_stat = True
        lo, hi = wilson_interval(successes, cfg.trials)
        out.append(
            TrialSummary(
                p=p,
                successes=successes,
                trials=cfg.trials,
                estimate=successes / cfg.trials,
                ci_low=lo,
                ci_high=hi,
                mean_statistic=stat_sum / cfg.trials if have_stat else None,
            )
        )
    return out


def summaries_to_csv(rows: Sequence[TrialSummary]) -> str:
    buf = io.StringIO()
    buf.write("p,successes,trials,estimate,ci_low,ci_high,mean_statistic\n")
    for r in rows:
        stat = "" if r.mean_statistic is None else repr(r.mean_statistic)
        buf.write(
            f"{r.p!r},{r.successes},{r.trials},{r.estimate!r},{r.ci_low!r},{r.ci_high!r},{stat}\n"
        )
    return buf.getvalue()


def threshold_scan(
    property_name: str,
    scale: str,
    c_list: Sequence[float],
    n_list: Sequence[int],
    k: int,
    trials: int,
    seed: int,
    model: str = "complete-k",
    q: float | None = None,
    m: int | None = None,
) -> str:
    """Phase-transition scan; returns CSV ordered by (n, c).

    Every (n, c) cell is an independent Monte Carlo estimate at
    p = scale(c, n, k), each n getting its own sweep of multipliers.
    """
    if scale not in SCALE_FUNCTIONS:
        raise ValueError(f"unknown scale {scale!r}; choose from {sorted(SCALE_FUNCTIONS)}")
    if not c_list:
        raise ValueError("empty multiplier list")
    buf = io.StringIO()
    buf.write("n,k,scale,c,p,property,trials,successes,estimate,ci_low,ci_high\n")
    for n in n_list:
        cfg = ExperimentConfig(
            model=model,
            n=n,
            k=k,
            p={"scale": scale, "c": list(c_list)},
            property=property_name,
            trials=trials,
            seed=seed,
            q=q,
            m=m,
        )
        for c, row in zip(c_list, run_monte_carlo(cfg)):
            buf.write(
                f"{n},{k},{scale},{c!r},{row.p!r},{property_name},{row.trials},"
                f"{row.successes},{row.estimate!r},{row.ci_low!r},{row.ci_high!r}\n"
            )
    return buf.getvalue()


MONOTONE_PROPERTIES = ("has-edge", "connected", "no-isolated", "triangle-count")


@dataclass(frozen=True)
class CouplingReport:
    """Outcome of a coupled-generation audit."""

    trials: int
    p1: float
    p2: float
    containment_failures: int
    identical: int
    frequencies: dict[str, tuple[float, float]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.containment_failures == 0

    def __str__(self) -> str:
        lines = [
            f"coupled trials: {self.trials} at p1={self.p1}, p2={self.p2}",
            f"containment failures: {self.containment_failures}",
            f"identical graphs: {self.identical}",
        ]
        for name, (f1, f2) in self.frequencies.items():
            lines.append(f"P({name}): {f1:.6f} @p1 <= {f2:.6f} @p2")
        lines.append("PASS" if self.ok else "FAIL: containment violated")
        return "\n".join(lines)


def coupling_check(
    h: Hypergraph, p1: float, p2: float, trials: int, seed: int
) -> CouplingReport:
    """Audit the shared-shadow coupling: the level-p1 graph must embed in
    the level-p2 graph in every trial, and the empirical frequency of each
    built-in monotone property must not drop when p rises."""
    if p1 > p2:
        raise ValueError(f"need p1 <= p2, got {p1} > {p2}")
    failures = 0
    identical = 0
    hits1 = dict.fromkeys(MONOTONE_PROPERTIES, 0)
    hits2 = dict.fromkeys(MONOTONE_PROPERTIES, 0)
    for trial in range(trials):
        rng = substream(seed, trial)
        g1, g2 = generator.coupled_generate(h, p1, p2, rng)
        if not g1.is_subgraph(g2):
            failures += 1
        if g1.edge_mult == g2.edge_mult:
            identical += 1
        for name in MONOTONE_PROPERTIES:
            ok1, _ = _evaluate(name, g1, None, None)
            ok2, _ = _evaluate(name, g2, None, None)
            hits1[name] += ok1
            hits2[name] += ok2
    freqs = {
        name: (hits1[name] / trials, hits2[name] / trials) for name in MONOTONE_PROPERTIES
    }
    return CouplingReport(
        trials=trials,
        p1=p1,
        p2=p2,
        containment_failures=failures,
        identical=identical,
        frequencies=freqs,
    )


def shadow_completeness_estimate(n: int, k: int, trials: int, seed: int) -> TrialSummary:
    """Fraction of sampled shadows of the complete k-uniform hypergraph that
    cover every vertex pair at least once."""
    if not 3 <= k <= n:
        raise ValueError(f"need n >= k >= 3, got n={n}, k={k}")
    h = complete_uniform(n, k)
    want = math.comb(n, 2)
    successes = 0
    for trial in range(trials):
        rng = substream(seed, trial)
        shadow = generator.sample_shadow(h, rng)
        if len(set(shadow.doubletons)) == want:
            successes += 1
    lo, hi = wilson_interval(successes, trials)
    return TrialSummary(
        p=1.0,
        successes=successes,
        trials=trials,
        estimate=successes / trials,
        ci_low=lo,
        ci_high=hi,
    )
