"""Symbolic verification and construction toolkit for Jacobi-Jordan
conformal algebras: exact polynomial arithmetic, identity checkers with
counterexample reports, the standard constructions, and a small definition
language served over HTTP or the `jjc` command line."""

from .conformal import (
    CheckReport,
    ConformalAlgebra,
    Counterexample,
    Element,
    FreeModule,
    admissible_algebra,
    apply_endo,
    attach,
    check_anti_associative,
    check_anti_derivation,
    check_commutative,
    check_jacobi_jordan,
    check_left_anti_symmetric,
    conformal_algebra,
    eval_product,
    left_mul_endo,
    module,
    zero_algebra,
)
from .constructions import (
    current_algebra,
    mock_gd_from_quadratic,
    quadratic_from_mock_gd,
    semidirect_product,
    tensor_with_comm_assoc,
)
from .dsl import (
    Document,
    parse_document,
    parse_element,
    print_document,
    print_object,
    resolve_space,
)
from .errors import ApiError, DslError, PreconditionError, ShapeError
from .extending import (
    EquivalencePair,
    ExtendingDatum,
    check_crossed,
    check_equivalence,
    check_extending_structure,
    check_twisted,
    extending_datum,
    extract_datum,
    unified_product,
)
from .finite import (
    FiniteAlgebra,
    MockGD,
    check_anti_novikov,
    check_mock_gd,
    finite_algebra,
    mock_gd,
    mock_gd_from_anti_novikov,
    mock_gd_from_derivation,
    zero_finite_algebra,
)
from .operators import (
    ConformalBilinearForm,
    ModuleMap,
    bilinear_form,
    check_o_operator,
    check_rota_baxter,
    check_skew_nondegenerate,
    check_symplectic,
    compatible_las_from_bijective,
    current_symplectic,
    induced_las_from_o_operator,
    induced_las_from_symplectic,
    module_map,
    pair,
)
from .poly import Poly
from .reps import ConformalRep, adjoint_rep, check_rep, current_rep, dual_rep

__version__ = "0.1.0"

__all__ = [
    "ApiError",
    "CheckReport",
    "ConformalAlgebra",
    "ConformalBilinearForm",
    "ConformalRep",
    "Counterexample",
    "Document",
    "DslError",
    "Element",
    "EquivalencePair",
    "ExtendingDatum",
    "FiniteAlgebra",
    "FreeModule",
    "MockGD",
    "ModuleMap",
    "Poly",
    "PreconditionError",
    "ShapeError",
    "adjoint_rep",
    "admissible_algebra",
    "apply_endo",
    "attach",
    "bilinear_form",
    "check_anti_associative",
    "check_anti_derivation",
    "check_anti_novikov",
    "check_commutative",
    "check_crossed",
    "check_equivalence",
    "check_extending_structure",
    "check_jacobi_jordan",
    "check_left_anti_symmetric",
    "check_mock_gd",
    "check_o_operator",
    "check_rep",
    "check_rota_baxter",
    "check_skew_nondegenerate",
    "check_symplectic",
    "check_twisted",
    "compatible_las_from_bijective",
    "conformal_algebra",
    "current_algebra",
    "current_rep",
    "current_symplectic",
    "dual_rep",
    "eval_product",
    "extending_datum",
    "extract_datum",
    "finite_algebra",
    "induced_las_from_o_operator",
    "induced_las_from_symplectic",
    "left_mul_endo",
    "mock_gd",
    "mock_gd_from_anti_novikov",
    "mock_gd_from_derivation",
    "mock_gd_from_quadratic",
    "module",
    "module_map",
    "pair",
    "parse_document",
    "parse_element",
    "print_document",
    "print_object",
    "quadratic_from_mock_gd",
    "resolve_space",
    "semidirect_product",
    "tensor_with_comm_assoc",
    "unified_product",
    "zero_algebra",
    "zero_finite_algebra",
]
