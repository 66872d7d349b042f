"""deloop-kit: exact computation of syzygies, delooping levels, and
two-term tilting evidence for finite-dimensional algebras over Q."""

from .algebra import (
    AlgebraError,
    Bimodule,
    FinDimAlgebra,
    IdempotentFrame,
    block_dims,
    dual_bimodule,
    ground_field,
    make_B,
    make_C,
    make_lambda,
    make_mq_bimodule,
    opposite,
    primitive_idempotents,
    radical,
    swap_iso,
    triangular_algebra,
    validate_algebra,
    verify_explicit_iso,
)
from .deloop import (
    DelReport,
    SddelReport,
    del_algebra,
    del_bounded,
    sddel_bounded,
    syzygy_certificate,
)
from .linalg import Matrix, QQ, kernel_basis, parse_scalar, rref, scalar_to_str, solve_linear
from .modules import (
    ModuleMap,
    Representation,
    decompose,
    dual_module,
    hom_basis,
    injective_envelope,
    is_isomorphic,
    make_M_alpha,
    projective_cover,
    radical_of_module,
    regular_and_projectives,
    simples,
    stable_summand,
    submodule_and_quotient,
    syzygy,
    torsionless,
)
from .tilting import (
    ChainMap,
    ProjComplex,
    compare_invariants,
    endo_algebra,
    hom_homotopy,
    is_tilting_two_term,
    ladkani_flip,
    stalk_complex,
)
from .verify import VerificationReport, VerifyConfig, run_paper_verification

__version__ = "0.1.0"
