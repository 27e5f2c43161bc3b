"""Hermitian one-point and order-bound improved codes over GF(q^2), and the
quantum codes obtained from them by the CSS construction and Steane
enlargement."""

__version__ = "0.1.0"

from .gf import FieldElement, FieldSpec, field_make, rank, rref, nullspace_basis, is_subspace
from .curve import (CurveContext, curve_context, designed_distances, improved_dimension,
                    improved_dimension_oracle, onepoint_dimension, self_orth_threshold, tau)
from .codes import (BudgetExceeded, LinearCode, dual, improved_code, improved_dual_code,
                    is_dual_containing, is_subcode, min_weight_exhaustive, onepoint_code,
                    relative_min_weight)
from .quantum import (PreconditionError, QuantumCodeRecord, css_dual_containing, css_pair,
                      enlarge_improved, enlarge_mixed_search, enlarge_onepoint, steane_enlarge,
                      steane_K)
from .tables import table1_records, table2_records

__all__ = [
    "FieldElement", "FieldSpec", "field_make", "rank", "rref", "nullspace_basis", "is_subspace",
    "CurveContext", "curve_context", "designed_distances", "improved_dimension",
    "improved_dimension_oracle", "onepoint_dimension", "self_orth_threshold", "tau",
    "BudgetExceeded", "LinearCode", "dual", "improved_code", "improved_dual_code",
    "is_dual_containing", "is_subcode", "min_weight_exhaustive", "onepoint_code",
    "relative_min_weight", "PreconditionError", "QuantumCodeRecord", "css_dual_containing",
    "css_pair", "enlarge_improved", "enlarge_mixed_search", "enlarge_onepoint",
    "steane_enlarge", "steane_K", "table1_records", "table2_records",
]
