"""Multi-hypergraphs on the vertex set {1, ..., n}.

Hyperedges are stored as a flat ordered list (multiset semantics: the same
vertex set may appear several times), each edge kept in strictly increasing
canonical form. The flat list lets samplers and the enumeration oracle index
"the trial belonging to hyperedge i" directly.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

__all__ = [
    "Hypergraph",
    "complete_uniform",
    "binomial_hypergraph",
    "uniform_hypergraph",
    "read_hypergraph",
    "write_hypergraph",
]


@dataclass(frozen=True)
class Hypergraph:
    """A multi-hypergraph on vertices 1..n.

    ``edges`` is an ordered tuple of hyperedges; each hyperedge is a strictly
    increasing tuple of distinct vertex labels with at least two vertices.
    Instances are immutable and safe to share across worker threads.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        canonical = []
        for edge in edges:
            e = tuple(sorted(edge))
            if len(e) < 2:
                raise ValueError(f"hyperedge {e} has fewer than 2 vertices")
            if len(set(e)) != len(e):
                raise ValueError(f"hyperedge {edge} repeats a vertex")
            if e[0] < 1 or e[-1] > n:
                raise ValueError(f"hyperedge {e} leaves the vertex range 1..{n}")
            canonical.append(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canonical))

    @classmethod
    def _from_canonical(cls, n: int, edges: Iterable[tuple[int, ...]]) -> "Hypergraph":
        """Skip validation for edges already in canonical form (internal)."""
        h = cls.__new__(cls)
        object.__setattr__(h, "n", n)
        object.__setattr__(h, "edges", tuple(edges))
        return h

    def __len__(self) -> int:
        return len(self.edges)

    def multiplicity(self, a: Iterable[int]) -> int:
        """Number of hyperedges equal to the vertex set ``a``."""
        key = tuple(sorted(a))
        return sum(1 for e in self.edges if e == key)

    def degree(self, a: Iterable[int]) -> int:
        """Number of hyperedges containing every vertex of ``a``.

        Counted with multiplicity; the empty set is contained in every
        hyperedge, so ``degree(())`` is the edge count.
        """
        key = frozenset(a)
        return sum(1 for e in self.edges if key.issubset(e))

    def edge_sizes(self) -> np.ndarray:
        return np.array([len(e) for e in self.edges], dtype=np.int64)

    def is_submultiset_of(self, other: "Hypergraph") -> bool:
        """True when every hyperedge occurs in ``other`` at least as often."""
        if self.n != other.n:
            return False
        mine = Counter(self.edges)
        theirs = Counter(other.edges)
        return all(theirs[e] >= c for e, c in mine.items())


def complete_uniform(n: int, k: int) -> Hypergraph:
    """The simple hypergraph of all k-subsets of {1, ..., n}."""
    _check_nk(n, k)
    return Hypergraph._from_canonical(n, _all_ksubsets(n, k))


def binomial_hypergraph(n: int, k: int, q: float, rng: np.random.Generator) -> Hypergraph:
    """Include each k-subset of {1, ..., n} independently with probability q.

    Sampled as a binomial count of edges followed by a uniform choice of that
    many distinct subset ranks, which has the same law without touching all
    C(n, k) subsets.
    """
    _check_nk(n, k)
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"inclusion probability must lie in [0, 1], got {q}")
    total = math.comb(n, k)
    count = int(rng.binomial(total, q))
    ranks = _sample_distinct_ranks(total, count, rng)
    return Hypergraph._from_canonical(n, _subsets_for_ranks(n, k, total, ranks))


def uniform_hypergraph(n: int, k: int, m: int, rng: np.random.Generator) -> Hypergraph:
    """Exactly m distinct k-subsets, uniform over all such collections."""
    _check_nk(n, k)
    total = math.comb(n, k)
    if not 0 <= m <= total:
        raise ValueError(f"edge count {m} outside 0..C({n},{k})={total}")
    ranks = _sample_distinct_ranks(total, m, rng)
    return Hypergraph._from_canonical(n, _subsets_for_ranks(n, k, total, ranks))


def unrank_ksubset(rank: int, k: int) -> tuple[int, ...]:
    """The k-subset of 1..n with the given colexicographic rank.

    Inverse of rank = sum_i C(member_i - 1, i) over the sorted 1-based
    members; independent of n, so callers only need the rank to be in range.
    """
    out = []
    r = rank
    for i in range(k, 0, -1):
        c = i - 1
        while math.comb(c + 1, i) <= r:
            c += 1
        r -= math.comb(c, i)
        out.append(c + 1)
    return tuple(reversed(out))


def _subsets_for_ranks(n: int, k: int, total: int, ranks: list[int]) -> list[tuple[int, ...]]:
    if total <= 20_000:
        table = _colex_table(n, k)
        return [table[r] for r in sorted(ranks)]
    return [unrank_ksubset(r, k) for r in sorted(ranks)]


@lru_cache(maxsize=32)
def _colex_table(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of 1..n indexed by colex rank (small spaces only)."""
    table: list[tuple[int, ...]] = [()] * math.comb(n, k)
    for s in _all_ksubsets(n, k):
        table[rank_ksubset(s)] = s
    return tuple(table)


def rank_ksubset(subset: Sequence[int]) -> int:
    """Colexicographic rank of a strictly increasing 1-based k-subset."""
    return sum(math.comb(v - 1, i + 1) for i, v in enumerate(subset))


def _sample_distinct_ranks(total: int, count: int, rng: np.random.Generator) -> list[int]:
    """A uniform count-subset of range(total), unsorted.

    Dense draws (count within a factor of total) shuffle the whole range;
    sparse draws use Floyd's algorithm so huge rank spaces never
    materialize. The regime is a deterministic function of the sizes.
    """
    if count * 64 >= total:
        return rng.permutation(total)[:count].tolist()
    chosen: set[int] = set()
    order: list[int] = []
    for j in range(total - count, total):
        t = int(rng.integers(0, j + 1))
        pick = t if t not in chosen else j
        chosen.add(pick)
        order.append(pick)
    return order


def _all_ksubsets(n: int, k: int) -> list[tuple[int, ...]]:
    from itertools import combinations

    return [tuple(c) for c in combinations(range(1, n + 1), k)]


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if not 2 <= k <= n:
        raise ValueError(f"edge size k={k} outside 2..n={n}")


def write_hypergraph(h: Hypergraph, f: IO[str]) -> None:
    """Serialize: header ``n=<n>``, then one hyperedge per line."""
    f.write(f"n={h.n}\n")
    for e in h.edges:
        f.write(" ".join(str(v) for v in e) + "\n")


def read_hypergraph(f: IO[str]) -> Hypergraph:
    header = f.readline().strip()
    if not header.startswith("n="):
        raise ValueError(f"expected header 'n=<n>', got {header!r}")
    n = int(header[2:])
    edges = []
    for line in f:
        line = line.strip()
        if line:
            edges.append([int(tok) for tok in line.split()])
    return Hypergraph(n, edges)
