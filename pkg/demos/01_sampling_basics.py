#!/usr/bin/env python3
"""Tour of the sampling model.

A hypergraph on 1..n drives the randomness: every hyperedge proposes one of
its vertex pairs uniformly at random, and a coin of bias p decides whether
the proposal becomes an edge. Multiplicities pile up when several
hyperedges propose the same pair.
"""

import numpy as np

from mglab import (
    Hypergraph,
    complete_uniform,
    binomial_hypergraph,
    uniform_hypergraph,
    generate,
    sample_shadow,
    realize,
)

rng = np.random.default_rng(2026)

# ---------------------------------------------------------------------------
# A tiny driving hypergraph, spelled out by hand.
h = Hypergraph(5, [[1, 2, 3], [1, 2, 3], [2, 3, 4, 5], [4, 5]])
print("driving hyperedges:", h.edges)
print("degree of vertex 2:", h.degree([2]), "| multiplicity of {1,2,3}:", h.multiplicity([1, 2, 3]))

g = generate(h, p=0.9, rng=rng)
print("one sample:", dict(sorted(g.edge_mult.items())))
print("simple?", g.is_simple(), "| connected?", g.is_connected(), "| isolated:", g.count_isolated())

# ---------------------------------------------------------------------------
# The same law in two stages: pick the shadow (one doubleton per hyperedge),
# then flip the coins.
shadow = sample_shadow(h, rng)
print("\nshadow selection:", shadow.doubletons)
print("realized from shadow:", dict(sorted(realize(shadow, 0.9, rng).edge_mult.items())))

# ---------------------------------------------------------------------------
# The three built-in hypergraph families.
complete = complete_uniform(6, 3)
print("\ncomplete 3-uniform driver on 6 vertices:", len(complete), "hyperedges")

bin_h = binomial_hypergraph(6, 3, q=0.4, rng=rng)
print("binomial driver (q=0.4):", len(bin_h), "hyperedges")

uni_h = uniform_hypergraph(6, 3, m=8, rng=rng)
print("uniform driver (m=8):", len(uni_h), "hyperedges")

# ---------------------------------------------------------------------------
# With p=1 and a driver whose hyperedges are larger than pairs, the sample
# is still random: the complete driver keeps one edge per hyperedge but
# which pairs receive them varies.
totals = [generate(complete, 1.0, rng).total_edges() for _ in range(5)]
distinct = [len(generate(complete, 1.0, rng).edge_mult) for _ in range(5)]
print("\nat p=1: total edges per sample:", totals, "(always", len(complete), ")")
print("        distinct pairs per sample:", distinct, "(random)")
