"""Exact computation of triply graded link homology of braid closures.

The package has two engines that check each other:

- a Hecke-algebra engine (`khr.hecke`): Ocneanu trace, weight formula,
  Jucys-Murphy identities, HOMFLY evaluation;
- a homological engine (`khr.bimodules`, `khr.complexes`, `khr.hochschild`):
  Soergel bimodules over Q[x_1..x_n], Rouquier complexes, Hochschild
  cohomology and the triply graded table, whose graded Euler characteristic
  reproduces the trace.

All arithmetic is exact (rationals via gmpy2).
"""

from khr.braids import BraidWord, parse_braid_word

__all__ = ["BraidWord", "parse_braid_word"]
