"""Computable combinatorics of dessins with any number of branch colors,
square-tiled translation surfaces, numerical monodromy of polynomial
covers, and the modular side of the square pillowcase family.
"""

from .errors import DessinryError
from .core import (
    MonodromyTuple,
    validate,
    is_valid,
    canonical_form,
    isomorphic,
    genus,
    cycle_profile,
    is_normal,
    orientation_reverse,
    centralizer_order,
)
from .enumeration import (
    DessinClass,
    EnumerationResult,
    enumerate_classes,
    count_transitive_tuples,
    hall_count,
    WORK_LIMIT,
)
from .braid import (
    EndomorphismTable,
    OrbitResult,
    word,
    evaluate_word,
    apply_endomorphism,
    compose_tables,
    chain_tables,
    sigma_table,
    sigma_inv_table,
    pure_twist_table,
    preset_pure_generators,
    preset_gamma2,
    braid_orbit,
)
from .origami import (
    BipartiteOrigami,
    validate_origami,
    origami_to_dessin,
    dessin_to_origami,
    isomorphic_origami,
    canonical_origami,
    delta_hor,
    delta_hor_inv,
    delta_ver,
    delta_ver_inv,
    origami_orbit,
    chessboard_origami,
    pillowcase_origami,
)
from .covers import (
    CoverSpec,
    HurwitzPoint,
    polynomial_cover,
    poly_roots,
    numerical_monodromy,
    hurwitz_fs,
    hurwitz_projection,
    hurwitz_fiber,
    hurwitz_cover,
    belyi_cubic_cover,
    classify_lift,
    hurwitz_dessin,
    BASE_POINT,
)
from .modular import (
    UpperHalfPoint,
    ModularValue,
    QSeries,
    eta,
    delta_by_eta,
    weber_f,
    weber_f1,
    weber_f2,
    lambda_star,
    ap,
    j_from_lambda_star,
    j_oracle,
    lambda_star_qseries,
    qseries_eval,
    cm_from_weber,
    integrality_check,
)
from .cm_values import CM_ROWS, cm_value, eval_radical

__version__ = "0.1.0"

__all__ = [
    "DessinryError",
    "MonodromyTuple",
    "validate",
    "is_valid",
    "canonical_form",
    "isomorphic",
    "genus",
    "cycle_profile",
    "is_normal",
    "orientation_reverse",
    "centralizer_order",
    "DessinClass",
    "EnumerationResult",
    "enumerate_classes",
    "count_transitive_tuples",
    "hall_count",
    "WORK_LIMIT",
    "EndomorphismTable",
    "OrbitResult",
    "word",
    "evaluate_word",
    "apply_endomorphism",
    "compose_tables",
    "chain_tables",
    "sigma_table",
    "sigma_inv_table",
    "pure_twist_table",
    "preset_pure_generators",
    "preset_gamma2",
    "braid_orbit",
    "BipartiteOrigami",
    "validate_origami",
    "origami_to_dessin",
    "dessin_to_origami",
    "isomorphic_origami",
    "canonical_origami",
    "delta_hor",
    "delta_hor_inv",
    "delta_ver",
    "delta_ver_inv",
    "origami_orbit",
    "chessboard_origami",
    "pillowcase_origami",
    "CoverSpec",
    "HurwitzPoint",
    "polynomial_cover",
    "poly_roots",
    "numerical_monodromy",
    "hurwitz_fs",
    "hurwitz_projection",
    "hurwitz_fiber",
    "hurwitz_cover",
    "belyi_cubic_cover",
    "classify_lift",
    "hurwitz_dessin",
    "BASE_POINT",
    "UpperHalfPoint",
    "ModularValue",
    "QSeries",
    "eta",
    "delta_by_eta",
    "weber_f",
    "weber_f1",
    "weber_f2",
    "lambda_star",
    "ap",
    "j_from_lambda_star",
    "j_oracle",
    "lambda_star_qseries",
    "qseries_eval",
    "cm_from_weber",
    "integrality_check",
    "CM_ROWS",
    "cm_value",
    "eval_radical",
]
