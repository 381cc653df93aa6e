"""Laguerre geometry over the algebra L = R[e]/(e^3).

The point set is the projective line over L; it is the affine 3-space on L
plus an improper plane. Chains are lines, parabolas and cubic parabolas in
that affine space, and their behaviour at the improper plane is read off
from higher-order contact of twisted cubics at a point at infinity.

Modules:

``ternion``   arithmetic in L
``projline``  points of P(L), parallelism, chains and their normal forms
``cubics``    twisted cubics, contact at f, collineation types and groups
``bridge``    affine/projective dictionary, admissibility, improper points, touching
``figures``   sampled curve families and ruled surfaces
``export``    OBJ, SVG and CSV writers
"""

from .bridge import (
    AffineLine,
    AffinePlane,
    PolyCurve,
    affine_to_projective,
    chains_touch,
    is_admissible_cubic,
    is_admissible_parabola,
    normalizing_projectivity,
    projective_extension,
    projective_to_affine,
    same_improper_point_cubics,
    same_improper_point_parabolas,
)
from .cubics import (
    Collineation4,
    HPoint3,
    canonical_cubic,
    classify_type,
    contact_order_at_f,
    contact_series,
    factor_I12,
    factor_I123,
    factor_type_I,
    frame_from_points,
    gamma1,
    gamma2,
    sigma,
    sym_cube,
    table_predicate,
    unique_collineation,
)
from .errors import LaguerreError
from .projline import (
    INFINITY,
    Chain,
    ChainKind,
    Matrix2L,
    NormalForm,
    ProjPoint,
    apply,
    apply_chain,
    chain_from_normal_form,
    chain_through,
    classify,
    contains,
    improper_point,
    is_parallel,
)
from .ternion import EPS, ONE, ZERO, IdealClass, Ternion

__all__ = [
    "affine_to_projective",
    "AffineLine",
    "AffinePlane",
    "apply",
    "apply_chain",
    "canonical_cubic",
    "Chain",
    "chain_from_normal_form",
    "chain_through",
    "ChainKind",
    "chains_touch",
    "classify",
    "classify_type",
    "Collineation4",
    "contact_order_at_f",
    "contact_series",
    "contains",
    "EPS",
    "factor_I12",
    "factor_I123",
    "factor_type_I",
    "frame_from_points",
    "gamma1",
    "gamma2",
    "HPoint3",
    "IdealClass",
    "improper_point",
    "INFINITY",
    "is_admissible_cubic",
    "is_admissible_parabola",
    "is_parallel",
    "LaguerreError",
    "Matrix2L",
    "NormalForm",
    "normalizing_projectivity",
    "ONE",
    "PolyCurve",
    "projective_extension",
    "projective_to_affine",
    "ProjPoint",
    "same_improper_point_cubics",
    "same_improper_point_parabolas",
    "sigma",
    "sym_cube",
    "table_predicate",
    "Ternion",
    "unique_collineation",
    "ZERO",
]

__version__ = "0.1.0"
