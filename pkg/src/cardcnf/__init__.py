"""cardcnf - CNF encodings of at-most-one and at-most-k cardinality constraints.

This package builds, verifies, counts and benchmarks cardinality encodings:
- AMO encoders (direct, product, multipartite, clique) and AMK encoders
  (sequential counter, generalized product, grid compression and their
  disjunctive variants)
- Hashing set families used by grid compression
- A small DPLL oracle and propagation-completeness checks
- Monotone threshold circuits
- Benchmark instance families and an external-solver harness
"""

__version__ = "0.1.0"
