"""cmcensus: exact census of CM elliptic curves over Q by naive height.

Counts minimal short-Weierstrass curves y^2 = x^3 + Ax + B up to a height
bound, recognizes complex multiplication through the thirteen
class-number-one j-invariants, counts each CM subfamily by both a brute box
scan and fast specialized counters, builds twist families of fixed curves,
and renders every count next to its asymptotic prediction.
"""

__version__ = "0.1.0"

from .curves import (
    CM_J_VALUES,
    CM_TABLE,
    CmOrder,
    CmTable,
    Curve,
    cm_order_of,
    discriminant,
    in_family,
    is_minimal,
    j_invariant,
    naive_height,
)
from .family import (
    FamilyCounts,
    JTally,
    count_box_pairs,
    count_cm_fast,
    count_singular,
    count_with_j,
    mobius_inversion_check,
    scale_curve,
    scan_family,
)
from .intmath import (
    CeilingExceeded,
    Factorization,
    count_k_free,
    count_k_free_sieve,
    factorize,
    integer_kth_root,
    is_k_power_free,
    mobius,
    power_free_list,
    sigma0,
    zeta_even,
)
from .twists import (
    FixedCurve,
    TwistClass,
    count_cm_twists,
    count_twist_family,
    default_fixed_curves,
    enumerate_twist_family,
    load_fixed_curves,
    nth_power_free_rep,
    twist_curve,
    twist_height,
    twist_leading_constant,
)

__all__ = [
    "__version__",
    "CM_J_VALUES",
    "CM_TABLE",
    "CmOrder",
    "CmTable",
    "Curve",
    "cm_order_of",
    "discriminant",
    "in_family",
    "is_minimal",
    "j_invariant",
    "naive_height",
    "FamilyCounts",
    "JTally",
    "count_box_pairs",
    "count_cm_fast",
    "count_singular",
    "count_with_j",
    "mobius_inversion_check",
    "scale_curve",
    "scan_family",
    "CeilingExceeded",
    "Factorization",
    "count_k_free",
    "count_k_free_sieve",
    "factorize",
    "integer_kth_root",
    "is_k_power_free",
    "mobius",
    "power_free_list",
    "sigma0",
    "zeta_even",
    "FixedCurve",
    "TwistClass",
    "count_cm_twists",
    "count_twist_family",
    "default_fixed_curves",
    "enumerate_twist_family",
    "load_fixed_curves",
    "nth_power_free_rep",
    "twist_curve",
    "twist_height",
    "twist_leading_constant",
]
