"""Skew group dg-categories over exact fields: constructions and validators."""

from .exactlin import GF, QQ, FieldMismatchError, FieldSpec, Fp, Matrix, ShapeError
from .report import Report, ValidationError, Violation
from .graded import ChainComplex, GradedDims, GradedMap, homology, validate_complex
from .dgcat import Algebra, DgCategory, DgFunctor, validate_dg_category, validate_dg_functor
from .groupact import (FiniteMonoid, StrictAction, cyclic_group, symmetric_group,
                       trivial_action, validate_action, validate_monoid)
from .skew import (freeify, check_freeify, check_trivial_induced_action, reduce,
                   skew_group_algebra, skew_group_dg_category)
from .equivmod import (EquivariantModule, RightModule, from_skew_module, hom_dim,
                       roundtrip_check, to_skew_module, validate_equivariant, validate_module)
from .orbit import OrbitHomQuery, laurent_dims, orbit_hom_dims, shift

__all__ = [
    "GF", "QQ", "FieldMismatchError", "FieldSpec", "Fp", "Matrix", "ShapeError",
    "Report", "ValidationError", "Violation",
    "ChainComplex", "GradedDims", "GradedMap", "homology", "validate_complex",
    "Algebra", "DgCategory", "DgFunctor", "validate_dg_category", "validate_dg_functor",
    "FiniteMonoid", "StrictAction", "cyclic_group", "symmetric_group", "trivial_action",
    "validate_action", "validate_monoid",
    "freeify", "check_freeify", "check_trivial_induced_action", "reduce",
    "skew_group_algebra", "skew_group_dg_category",
    "EquivariantModule", "RightModule", "from_skew_module", "hom_dim", "roundtrip_check",
    "to_skew_module", "validate_equivariant", "validate_module",
    "OrbitHomQuery", "laurent_dims", "orbit_hom_dims", "shift",
]
