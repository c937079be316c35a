"""Exact finite-field models for depth-zero representations built from a
division algebra: cyclotomic arithmetic, field towers, character sums, the
block principal-series model, its twisted operators, and a verification CLI.
"""

from .cyclotomic import CycMatrix, CycNum, cyc_repr, exact_rank, root_of_unity
from .finite_field import FieldTower, FqElem, build_tower
from .characters import (
    AddChar,
    CheckResult,
    MultChar,
    gauss_sum,
    is_regular,
    norm_inflate,
    verify_gauss_lemma,
    verify_hasse_davenport,
)
from .gl2 import Mat2, bruhat_decompose, diag, identity, mat, unipotent, weyl
from .depthzero import (
    DivisionParams,
    DxElement,
    TameRep,
    WSpace,
    build_tau,
    ext_square_trace,
    mackey_hom_dim,
    predicted_char,
    tau_trace,
)
from .speh import (
    PSModel,
    SpCharacter,
    TChain,
    ThetaOperator,
    VerificationReport,
    WhittakerSpace,
    build_ps_model,
    dx_character,
    intertwining_T,
    psi0_eigenspace,
    sp_character,
    theta_operator,
    verify_suite,
)

__version__ = "0.1.0"

__all__ = [
    "CycNum",
    "CycMatrix",
    "cyc_repr",
    "exact_rank",
    "root_of_unity",
    "FieldTower",
    "FqElem",
    "build_tower",
    "MultChar",
    "AddChar",
    "CheckResult",
    "gauss_sum",
    "is_regular",
    "norm_inflate",
    "verify_gauss_lemma",
    "verify_hasse_davenport",
    "Mat2",
    "mat",
    "identity",
    "diag",
    "unipotent",
    "weyl",
    "bruhat_decompose",
    "DivisionParams",
    "DxElement",
    "TameRep",
    "WSpace",
    "build_tau",
    "tau_trace",
    "ext_square_trace",
    "mackey_hom_dim",
    "predicted_char",
    "PSModel",
    "build_ps_model",
    "WhittakerSpace",
    "psi0_eigenspace",
    "ThetaOperator",
    "theta_operator",
    "dx_character",
    "SpCharacter",
    "sp_character",
    "TChain",
    "intertwining_T",
    "VerificationReport",
    "verify_suite",
    "__version__",
]
