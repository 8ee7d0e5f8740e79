"""Flag-dipole spinor toolkit: construction, dual structure, covariants,
Lounesto classification and the discrete-symmetry ledger.

Everything lives in the compiled extension; this package only re-exports it.
"""

from ._core import (  # noqa: F401
    Kinematics,
    PhasePair,
    SpinorLabError,
    bilinears,
    boost_factors,
    build_family,
    build_spinor,
    charge_conjugate,
    closed_form_functions,
    fpk_residuals,
    gamma_boost_covariance_check,
    gamma_closed_form,
    gamma_spin_sum,
    gram_dirac,
    labels,
    lounesto_class,
    parity,
    symmetry_ledger,
    sweep_json,
    time_reverse,
    verify_json,
)

__all__ = [
    "Kinematics",
    "PhasePair",
    "SpinorLabError",
    "bilinears",
    "boost_factors",
    "build_family",
    "build_spinor",
    "charge_conjugate",
    "closed_form_functions",
    "fpk_residuals",
    "gamma_boost_covariance_check",
    "gamma_closed_form",
    "gamma_spin_sum",
    "gram_dirac",
    "labels",
    "lounesto_class",
    "parity",
    "symmetry_ledger",
    "sweep_json",
    "time_reverse",
    "verify_json",
]
