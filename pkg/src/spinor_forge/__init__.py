"""Exact-arithmetic twisted spin representations and holonomy certificates.

The kernel works over Q(i) plus a per-spinor positive rational squared-scale
factor, so every verdict (purity, reducing, annihilator dimension, relation
checks) is an exact equality, never a tolerance call.
"""

__version__ = "0.1.0"

from .analysis import (
    AmbientElement,
    ClDims,
    LieSubalgebra,
    PurityReport,
    ReducingReport,
    ambient_annihilates,
    annihilator,
    bracket,
    check_pure,
    check_reducing,
    check_spinc_pure,
    cl_dims,
    commutant,
    equivariance_check,
    even_clifford_verify,
    frame_rotation_check,
    lie_closure_report,
)
from .catalog import (
    CatalogEntry,
    beta_forms,
    build_generic_reducing,
    build_qk_pure,
    build_spin7_pure,
    build_spin7_reducing,
    eta13_recursion_check,
    g2_generators,
    maps_G_H,
)
from .forms import Endo, TwoForm, eta, eta_hat, phi_extend, spinc_form, spinc_form_untwisted
from .scalars import GaussianRational, Rational, gr
from .spinrep import (
    BasisIndex,
    FormTerm,
    SpinorVector,
    basis_spinor,
    clifford_action,
    gamma_apply,
    hermitian,
    kappa_generator,
    spin_action_on_spinor,
    spin_action_on_vector,
)
from .twisted import (
    ScaledSpinor,
    TwistedIndex,
    mu_slot,
    norm2,
    tangent_action,
    twist_bivector_action,
    twisted_group_action,
    twisted_hermitian,
)

__all__ = [
    "AmbientElement",
    "BasisIndex",
    "CatalogEntry",
    "ClDims",
    "Endo",
    "FormTerm",
    "GaussianRational",
    "LieSubalgebra",
    "PurityReport",
    "Rational",
    "ReducingReport",
    "ScaledSpinor",
    "SpinorVector",
    "TwistedIndex",
    "TwoForm",
    "ambient_annihilates",
    "annihilator",
    "basis_spinor",
    "beta_forms",
    "bracket",
    "build_generic_reducing",
    "build_qk_pure",
    "build_spin7_pure",
    "build_spin7_reducing",
    "check_pure",
    "check_reducing",
    "check_spinc_pure",
    "cl_dims",
    "clifford_action",
    "commutant",
    "equivariance_check",
    "eta",
    "eta13_recursion_check",
    "eta_hat",
    "even_clifford_verify",
    "frame_rotation_check",
    "g2_generators",
    "gamma_apply",
    "gr",
    "hermitian",
    "kappa_generator",
    "lie_closure_report",
    "maps_G_H",
    "mu_slot",
    "norm2",
    "phi_extend",
    "spin_action_on_spinor",
    "spin_action_on_vector",
    "spinc_form",
    "spinc_form_untwisted",
    "tangent_action",
    "twist_bivector_action",
    "twisted_group_action",
    "twisted_hermitian",
]
