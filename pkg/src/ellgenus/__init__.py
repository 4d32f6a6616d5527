"""Exact Hirzebruch genera and S^1-equivariant genus characters."""
from .constructions import (
    GluingMismatch,
    NonIsolatedFixedSet,
    chern_weight_relation,
    equivariant_connected_sum,
    linear_cpn,
    orientation_reverse,
    product,
    sphere_of_representation,
)
from .equivariant import (
    EquivariantCharacter,
    FixedPointData,
    FixedPointDatum,
    ahat_character,
    elliptic_character,
    evaluate_at_one,
    polynomiality_check,
    rigidity_check,
    signature_character,
)
from .genus import (
    AHAT,
    SIGNATURE,
    GenusSpec,
    PontryaginData,
    characteristic_series,
    connected_sum_pontryagin,
    cp_coefficients,
    ellipticity_check,
    evaluate_genus,
    log_derivative,
    multiplicative_sequence,
    pontryagin_of_projective_product,
    universal_elliptic_spec,
)
from .ratfunc import LaurentPolynomial, NotPolynomial, RationalFunction
from .series import Series

__version__ = "0.1.0"
