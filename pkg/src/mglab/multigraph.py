"""Labeled multigraphs and the graph properties the model is probed with."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import IO, Iterable, Mapping

__all__ = ["Multigraph", "is_subgraph", "read_multigraph", "write_multigraph"]

Pair = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    """A multigraph on vertices 1..n without self-loops.

    ``edge_mult`` maps each present unordered pair (stored as an increasing
    tuple) to its positive edge multiplicity; absent pairs have multiplicity
    zero. Treat instances as immutable: every property check is pure.
    """

    n: int
    edge_mult: dict[Pair, int]

    def __init__(self, n: int, edge_mult: Mapping[Pair, int] | None = None):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        cleaned: dict[Pair, int] = {}
        for (i, j), mult in (edge_mult or {}).items():
            if i == j:
                raise ValueError(f"self-loop on vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"pair ({i},{j}) leaves the vertex range 1..{n}")
            if mult <= 0:
                raise ValueError(f"multiplicity of ({i},{j}) must be positive, got {mult}")
            key = (i, j) if i < j else (j, i)
            cleaned[key] = cleaned.get(key, 0) + mult
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edge_mult", cleaned)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> "Multigraph":
        """Build from a stream of (i, j) pairs, accumulating multiplicities."""
        counts = Counter((i, j) if i < j else (j, i) for i, j in pairs)
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edge_mult", dict(counts))
        return g

    def total_edges(self) -> int:
        return sum(self.edge_mult.values())

    def multiplicity(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        return self.edge_mult.get(key, 0)

    def is_simple(self) -> bool:
        """True iff no pair carries more than one edge."""
        return all(m == 1 for m in self.edge_mult.values())

    def degree(self, v: int) -> int:
        """Multiplicity-counting degree of vertex v."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")
        return sum(m for (i, j), m in self.edge_mult.items() if i == v or j == v)

    def count_isolated(self) -> int:
        touched: set[int] = set()
        for i, j in self.edge_mult:
            touched.add(i)
            touched.add(j)
        return self.n - len(touched)

    def is_connected(self) -> bool:
        """Connectivity of the underlying simple graph, on all n vertices.

        The empty and single-vertex graphs count as connected.
        """
        if self.n <= 1:
            return True
        if len(self.edge_mult) < self.n - 1:
            return False
        adj: dict[int, list[int]] = {}
        for i, j in self.edge_mult:
            adj.setdefault(i, []).append(j)
            adj.setdefault(j, []).append(i)
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def count_triangles(self) -> int:
        """Vertex triples whose three pairs each carry at least one edge.

        Multiplicities collapse to presence first; a triple counts once no
        matter how many parallel edges sit on its pairs.
        """
        adj: dict[int, set[int]] = {}
        for i, j in self.edge_mult:
            adj.setdefault(i, set()).add(j)
            adj.setdefault(j, set()).add(i)
        # Each triangle is seen once per edge; common neighbours above j
        # would need an ordering pass, dividing by 3 is simpler.
        triple_count = 0
        for i, j in self.edge_mult:
            triple_count += len(adj[i] & adj[j])
        return triple_count // 3

    def is_subgraph(self, other: "Multigraph") -> bool:
        """True iff every pair's multiplicity here is at most its in ``other``."""
        if self.n != other.n:
            raise ValueError(f"vertex counts differ: {self.n} vs {other.n}")
        theirs = other.edge_mult
        return all(theirs.get(pair, 0) >= m for pair, m in self.edge_mult.items())


def is_subgraph(g1: Multigraph, g2: Multigraph) -> bool:
    """Sub-multigraph order: mult_g1(B) <= mult_g2(B) for every pair B."""
    return g1.is_subgraph(g2)


def write_multigraph(g: Multigraph, f: IO[str]) -> None:
    """Serialize: header ``n=<n>``, then ``i j mult`` lines in ascending order."""
    f.write(f"n={g.n}\n")
    for (i, j) in sorted(g.edge_mult):
        f.write(f"{i} {j} {g.edge_mult[(i, j)]}\n")


def read_multigraph(f: IO[str]) -> Multigraph:
    header = f.readline().strip()
    if not header.startswith("n="):
        raise ValueError(f"expected header 'n=<n>', got {header!r}")
    n = int(header[2:])
    mult: dict[Pair, int] = {}
    for line in f:
        line = line.strip()
        if line:
            i, j, m = (int(tok) for tok in line.split())
            mult[(i, j)] = m
    return Multigraph(n, mult)
