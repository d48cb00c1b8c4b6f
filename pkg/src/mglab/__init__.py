"""mglab: a laboratory for hyperedge-driven binomial random multigraphs.

Start from a hypergraph on vertices 1..n; every hyperedge proposes one of
its vertex pairs uniformly at random and a coin of bias p decides whether
that pair becomes an edge. The package bundles the samplers (including
monotone couplings), the exact distributional laws, a brute-force
enumeration oracle, and a Monte Carlo threshold-experiment harness.
"""

from .analytics import (
    DiscreteDistribution,
    binomial_distribution,
    binomial_tail_ge1,
    degree_law,
    degree_law_binomial_model,
    degree_law_uniform_model,
    empty_probability,
    expected_isolated,
    expected_triangles_binomial3,
    expected_triangles_complete4,
    expected_triangles_uniform3,
    hypergeometric,
    pair_edge_law,
    poisson_binomial,
    triangle_chain_matrix,
    triangle_chain_row,
)
from .generator import (
    ShadowSelection,
    coupled_generate,
    coupled_generate_nested,
    generate,
    realize,
    sample_shadow,
)
from .hypergraph import (
    Hypergraph,
    binomial_hypergraph,
    complete_uniform,
    read_hypergraph,
    uniform_hypergraph,
    write_hypergraph,
)
from .multigraph import Multigraph, is_subgraph, read_multigraph, write_multigraph
from .oracle import (
    BudgetExceededError,
    PropertyPredicate,
    exact_edge_count_distribution,
    exact_expected_triangles,
    exact_property_probability,
)

__version__ = "0.1.0"
