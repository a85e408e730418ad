"""Exact Gelfand-Tsetlin realizations of simple sl_n modules.

From an integer partition this package enumerates Gelfand-Tsetlin patterns,
builds generator matrices over an exact field of rational combinations of
square roots, verifies the defining bracket relations, computes weights,
certifies simplicity by raising every pattern to the highest one, and
constructs lowering-monomial families with exact rank checks.
"""

from .monomials import (
    MonomialFamily,
    UnsupportedScheduleError,
    basis_matrix,
    family_from_json,
    family_to_json,
    monomial_family,
    monomial_word,
    rank,
)
from .operators import (
    GeneratorSpec,
    InternalConsistencyError,
    ModuleVector,
    OperatorMatrix,
    RelationReport,
    act_diag,
    act_lower,
    act_raise,
    commutator,
    general_element,
    matrix_from_json,
    matrix_market,
    matrix_to_json,
    operator_matrix,
    verify_sln_relations,
)
from .patterns import (
    GTPattern,
    Partition,
    PatternShapeError,
    compare,
    dimension,
    enumerate_patterns,
    highest_pattern,
    validate,
)
from .raising import (
    CertificationError,
    GeneratorWord,
    RaiseOutcome,
    SimplicityReport,
    apply_word,
    canonical_row_order,
    raise_sum_to_highest,
    raising_exponents,
    raising_word,
    simplicity_certificate,
    verify_raise,
)
from .scalars import (
    RadicalScalar,
    add,
    invert,
    mul,
    sqrt_rational,
    squarefree_decompose,
    to_float,
)
from .weights import (
    WeightVector,
    fundamental_coords,
    fundamental_string,
    highest_weight,
    weight_decomposition,
    weight_of,
)

__version__ = "0.1.0"

__all__ = [
    "CertificationError",
    "GTPattern",
    "GeneratorSpec",
    "GeneratorWord",
    "InternalConsistencyError",
    "ModuleVector",
    "MonomialFamily",
    "OperatorMatrix",
    "Partition",
    "PatternShapeError",
    "RadicalScalar",
    "RaiseOutcome",
    "RelationReport",
    "SimplicityReport",
    "UnsupportedScheduleError",
    "WeightVector",
    "act_diag",
    "act_lower",
    "act_raise",
    "add",
    "apply_word",
    "basis_matrix",
    "canonical_row_order",
    "commutator",
    "compare",
    "dimension",
    "enumerate_patterns",
    "family_from_json",
    "family_to_json",
    "fundamental_coords",
    "fundamental_string",
    "general_element",
    "highest_pattern",
    "highest_weight",
    "invert",
    "matrix_from_json",
    "matrix_market",
    "matrix_to_json",
    "monomial_family",
    "monomial_word",
    "mul",
    "operator_matrix",
    "raise_sum_to_highest",
    "raising_exponents",
    "raising_word",
    "rank",
    "simplicity_certificate",
    "sqrt_rational",
    "squarefree_decompose",
    "to_float",
    "validate",
    "verify_raise",
    "verify_sln_relations",
    "weight_decomposition",
    "weight_of",
]
