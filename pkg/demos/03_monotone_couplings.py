#!/usr/bin/env python3
"""Monotone couplings.

Raising the coin bias, or enlarging the driving hypergraph, can only add
edges: both constructions sample the two graphs on shared randomness so
that the smaller is literally contained in the larger, which is how
monotonicity of property probabilities is established.
"""

import numpy as np

from mglab import (
    Hypergraph,
    complete_uniform,
    coupled_generate,
    coupled_generate_nested,
    is_subgraph,
)
from mglab.experiments import coupling_check

rng = np.random.default_rng(7)
h = complete_uniform(12, 3)

# ---------------------------------------------------------------------------
# Shared shadow, shared base coins, independent upgrades for the failures.
g_low, g_high = coupled_generate(h, p1=0.05, p2=0.4, rng=rng)
print("edges at p=0.05:", g_low.total_edges(), "| edges at p=0.4:", g_high.total_edges())
print("containment holds:", is_subgraph(g_low, g_high))

# ---------------------------------------------------------------------------
# Nested drivers at a fixed p: the surplus hyperedges only ever add edges.
h_small = Hypergraph(12, h.edges[:100])
g1, g2 = coupled_generate_nested(h_small, h, p=0.3, rng=rng)
print("\nnested drivers: ", g1.total_edges(), "edges inside", g2.total_edges())
print("containment holds:", is_subgraph(g1, g2))

# ---------------------------------------------------------------------------
# An audited batch: containment must hold in every trial, and the empirical
# frequency of each monotone property must not drop when p rises.
print()
print(coupling_check(h, p1=0.02, p2=0.2, trials=4000, seed=99))
