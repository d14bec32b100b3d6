"""Exact kernel for U^+ and U^{>=0}: normal forms, PBW bases, Hopf structure."""

from .free import FreeElt, NFContext, kostant_dim, nf_plus, serre_relation, word_weight
from .full import UAlgebra, UElt, lusztig_T, root_vectors, u_normal_form
from .hopf import (
    TensorElt,
    check_coassociativity,
    check_counit_law,
    check_graded_compatibility,
    coideal_check,
    coproduct,
    counit,
    psi_apply,
    span_is_Q_graded,
    twist_generators,
)
from .pbw import (
    PBWVec,
    char_eval,
    char_well_defined,
    enumerate_polynomial_ideals,
    generator_in_ideal,
    is_in_P_Theta,
    ls_relation,
    pbw_contract,
    pbw_data,
    pbw_expand,
    pbw_monomial,
    quotient_is_commutative_polynomial,
)

__all__ = [
    "FreeElt",
    "NFContext",
    "word_weight",
    "serre_relation",
    "kostant_dim",
    "nf_plus",
    "UElt",
    "UAlgebra",
    "u_normal_form",
    "lusztig_T",
    "root_vectors",
    "PBWVec",
    "pbw_data",
    "pbw_monomial",
    "pbw_expand",
    "pbw_contract",
    "ls_relation",
    "char_eval",
    "char_well_defined",
    "is_in_P_Theta",
    "generator_in_ideal",
    "quotient_is_commutative_polynomial",
    "enumerate_polynomial_ideals",
    "TensorElt",
    "coproduct",
    "counit",
    "check_counit_law",
    "check_coassociativity",
    "check_graded_compatibility",
    "psi_apply",
    "twist_generators",
    "coideal_check",
    "span_is_Q_graded",
]
