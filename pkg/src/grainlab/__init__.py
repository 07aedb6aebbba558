"""grainlab: coding and capacity analysis for 1-D granular media.

Modules:
  model    - words, error vectors, the grain operator, confusability
  graph    - confusability graphs, exact maximum code sizes, clique partitions
  codes    - code constructions, verifiers, decoders, code files
  bounds   - cardinality and rate bounds, rate curve tables
  channel  - grains / no-adjacent-erasures channels, SIR series, exact oracles
  cli      - the `grainlab` command
"""

__version__ = "0.1.0"
