"""Combinatorics of weights, blocks, and character counts for finite groups.

The package is organized bottom-up:

- :mod:`weightcomb.arith` — integer helpers (valuations, orders, primes).
- :mod:`weightcomb.partitions` — partition calculus: cores, quotients,
  core towers, hook lengths, degrees, and block defects.
- :mod:`weightcomb.symchars` — symmetric group character values and
  degree/defect oracles.
- :mod:`weightcomb.younggrp` — Young-type subgroup triples for symmetric,
  wreath, and type-D groups, with counting verification.
- :mod:`weightcomb.ffpoly` — irreducible polynomial labels over small
  finite fields with central and Frobenius actions.
- :mod:`weightcomb.glblocks` — blocks and weights of finite general linear
  and unitary groups via exact root-of-unity labels.
- :mod:`weightcomb.cli` — the ``weightcomb`` command-line tool.
"""

from .errors import BoundExceededError, UnsupportedRegimeError
from .glblocks import (
    BlockLabel,
    FracLabel,
    SemisimpleLabel,
    af_weights,
    blocks,
    covered_blocks,
    generic_weights,
    principal_block,
    semisimple_labels,
    unipotent_hook_eGC,
    verify_counting,
)
from .partitions import (
    core_tower,
    d_core,
    d_quotient,
    defect,
    from_tower,
    hooks,
    partitions_of,
)
from .younggrp import triples, verify_bijection

__version__ = "0.1.0"

__all__ = [
    "BlockLabel",
    "BoundExceededError",
    "FracLabel",
    "SemisimpleLabel",
    "UnsupportedRegimeError",
    "__version__",
    "af_weights",
    "blocks",
    "core_tower",
    "covered_blocks",
    "d_core",
    "d_quotient",
    "defect",
    "from_tower",
    "generic_weights",
    "hooks",
    "partitions_of",
    "principal_block",
    "semisimple_labels",
    "triples",
    "unipotent_hook_eGC",
    "verify_bijection",
    "verify_counting",
]
