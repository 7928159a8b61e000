"""Exact-arithmetic engine for the boson-fermion correspondence and its
categorification by symmetric-group modules.

Layers, bottom to top:

- ``partition_core``: integer partitions, tableaux, strips.
- ``symfunc``: the ring of symmetric functions over Q in the Schur basis;
  Heisenberg and Bernstein operators.
- ``fock``: charged fermionic Fock space, Clifford operators, and the
  charge-graded isomorphism onto symmetric functions.
- ``linalg``: sparse exact rational matrices.
- ``symrep``: symmetric-group modules, induction/restriction towers,
  Young idempotents, and the functors cut out by them.
- ``branching``: words of induction/restriction boxes, the sliding moves
  between them, and the projection/inclusion families splitting them.
- ``homalg``: bounded complexes of modules, cones, total complexes,
  Gaussian elimination, equivariant homology.
- ``catbernstein``: chain-complex-valued creation/annihilation operators,
  partition-indexed projector complexes, their relation suites, and the
  charged layer whose Euler characteristic recovers ``fock``.
- ``reports`` / ``config`` / ``cli``: deterministic check reports, run
  configuration, and the command-line entry point.

All arithmetic is exact (``fractions.Fraction``); nothing is floating point.
"""

__version__ = "0.1.0"
