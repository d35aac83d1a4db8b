"""Exact computations for cyclotomic KLR algebras of affine type C.

The package computes dominant maximal weights and the directed quiver on
them, graded dimensions of idempotent truncations, deformed Fock-space
expansions of divided-power words, weight multiplicities (simple-module
counts), and the finite/tame/wild representation type of a block.
"""

from .cartan import (CartanDatum, DominantWeight, GuardError, RootVector,
                     cartan, fold_residue, hub, pairing)
from .classifier import RepType, Verdict, classify, wildness_criteria
from .fock import FockVector, apply_divided_f, apply_f, expand, hom_dim, parse_word
from .laurent import LaurentPolynomial, quantum_factorial, quantum_integer
from .maxweights import (MaximalWeightDatum, NotEquivalentError, beta_of,
                         class_members, defect, delta_decompose, dominantify,
                         ev, minimal_solution, sigma_flip)
from .multiplicity import weight_multiplicity
from .quiver import (Arrow, MaxWeightQuiver, MoveLabel, apply_move, arrow_test,
                     build_quiver, delta_vector, export, witness_sequence)
from .tableaux import (Multipartition, StdTableau, degree, graded_hom_dim,
                       graded_hom_dim_block, kostka_q, multipartitions, residue,
                       standard_tableaux)

__all__ = [
    "Arrow", "CartanDatum", "DominantWeight", "FockVector", "GuardError",
    "LaurentPolynomial", "MaxWeightQuiver", "MaximalWeightDatum", "MoveLabel",
    "Multipartition", "NotEquivalentError", "RepType", "RootVector",
    "StdTableau", "Verdict", "apply_divided_f", "apply_f", "apply_move",
    "arrow_test", "beta_of", "build_quiver", "cartan", "class_members",
    "classify", "defect", "degree", "delta_decompose", "delta_vector",
    "dominantify", "ev", "expand", "export", "fold_residue", "graded_hom_dim",
    "graded_hom_dim_block", "hom_dim", "hub", "kostka_q", "minimal_solution",
    "multipartitions", "pairing", "parse_word", "quantum_factorial",
    "quantum_integer", "residue", "sigma_flip", "standard_tableaux",
    "weight_multiplicity", "wildness_criteria", "witness_sequence",
]

__version__ = "0.1.0"
