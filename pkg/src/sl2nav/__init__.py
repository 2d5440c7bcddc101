"""Short generator words for SL2(F_p).

Given a prime p and any unimodular 2x2 matrix over F_p, construct and
verify a word of length O(log p loglog p) in U = [[1,1],[0,1]],
L = [[1,0],[1,1]] and their inverses.
"""

from .analysis import (
    BfsTable,
    OracleComparison,
    TStats,
    bfs_distances,
    oracle_compare,
    t_stats,
)
from .arith import (
    RngState,
    is_probable_prime,
    is_quadratic_residue,
    mod_inverse,
    random_residue,
    sqrt_mod,
)
from .euclid import cf_expand, partial_quotient_sum, reduce_left_dominated, subtractive_steps
from .mat2 import (
    GEN_L,
    GEN_U,
    Mat2Fp,
    Mat2Z,
    is_left_dominated,
    lift_upper,
    random_sl2,
    reduce_mod,
)
from .navigate import (
    NavConfig,
    NavReport,
    canonical_root,
    conjugate_block,
    decompose,
    synth_lower,
    synth_upper,
    threshold,
    verify,
)
from .word import Word

__version__ = "0.1.0"

__all__ = [
    "BfsTable",
    "GEN_L",
    "GEN_U",
    "Mat2Fp",
    "Mat2Z",
    "NavConfig",
    "NavReport",
    "OracleComparison",
    "RngState",
    "TStats",
    "Word",
    "bfs_distances",
    "canonical_root",
    "cf_expand",
    "conjugate_block",
    "decompose",
    "is_left_dominated",
    "is_probable_prime",
    "is_quadratic_residue",
    "lift_upper",
    "mod_inverse",
    "oracle_compare",
    "partial_quotient_sum",
    "random_residue",
    "random_sl2",
    "reduce_left_dominated",
    "reduce_mod",
    "sqrt_mod",
    "synth_lower",
    "synth_upper",
    "t_stats",
    "threshold",
    "verify",
]
