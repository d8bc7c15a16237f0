"""Exact combinatorics for stable-range branching of classical groups.

Column-set lattices L_{m,k}^n, Gelfand-Tsetlin patterns on truncated posets,
the tableau/pattern bijection, branching multiplicities for (GL, GL),
(Sp, Sp) and (SO, SO), straightening of minor products, and Hibi normal forms.
"""

from .branching import (BranchingQuery, gl_multiplicity, gl_pieri_count, so_iterated,
                        so_multiplicity, so_truncation, sp_iterated, sp_multiplicity,
                        sp_onestep)
from .classical import (INF, Letter, LetterColumn, SOLattice, SpLattice, iota, is_o_standard,
                        is_sp_standard, psi_so, psi_sp, so_lattice_iso, sp_lattice_iso, u, v)
from .diagrams import SkewShape, YoungDiagram, conjugate, contains, interlaces
from .errors import BranchlatError, InconsistencyError, PreconditionError, StableRangeError
from .gtpattern import (GTPattern, GTPoset, OrderIncreasingSubset, birkhoff_to_subset,
                        compose_chain, count_patterns, decompose_levels, enumerate_patterns,
                        pattern_type, subset_to_column)
from .lattice import ColumnSet, LatticeFamily, column, join, leq, meet, shift_iso
from .straightening import (StraighteningExpansion, hibi_normal_form, initial_term, minor_eval,
                            straighten_monomial, straighten_pair, verify_degeneration, weight)
from .tableaux import Chain, count_tableaux, enumerate_tableaux, render_skew, shape_of

__version__ = "0.1.0"

__all__ = [
    "BranchingQuery", "BranchlatError", "Chain", "ColumnSet", "GTPattern", "GTPoset",
    "INF", "InconsistencyError", "LatticeFamily", "Letter", "LetterColumn",
    "OrderIncreasingSubset", "PreconditionError", "SOLattice", "SkewShape", "SpLattice",
    "StableRangeError", "StraighteningExpansion", "YoungDiagram", "birkhoff_to_subset",
    "column", "compose_chain", "conjugate", "contains", "count_patterns", "count_tableaux",
    "decompose_levels", "enumerate_patterns", "enumerate_tableaux", "gl_multiplicity",
    "gl_pieri_count", "hibi_normal_form", "initial_term", "interlaces", "iota",
    "is_o_standard", "is_sp_standard", "join", "leq", "meet", "minor_eval", "pattern_type",
    "psi_so", "psi_sp", "render_skew", "shape_of", "shift_iso", "so_iterated",
    "so_lattice_iso", "so_multiplicity", "so_truncation", "sp_iterated", "sp_lattice_iso",
    "sp_multiplicity", "sp_onestep", "straighten_monomial", "straighten_pair",
    "subset_to_column", "u", "v", "verify_degeneration", "weight",
]
