"""Exact-arithmetic engine for the small quantum K-theory of Grassmannians.

Schubert structure constants, Pieri rules, Seidel operators,
quantum-to-classical reductions, curve neighborhoods, and the closed-form
quantum Littlewood-Richardson rule for three-row Grassmannians.
"""

from .curve_nbhd import curve_neighborhood, gamma_special, rim_peel
from .element import QKElement
from .gr3n import nu3_zero_case, positivity_check, qlr_gr3
from .partitions import (
    GrContext,
    all_partitions,
    basis_key,
    context,
    d_count,
    dual,
    from_jump_sequence,
    horizontal_strip,
    outer_rim_removals,
    parse_partition,
    rook_strips_over,
    seidel_down,
    seidel_up,
    shift_jump,
    size,
    to_jump_sequence,
)
from .pieri import (
    PieriOperator,
    classical_pieri,
    pieri_operator,
    quantum_pieri,
    quantum_pieri_restated,
)
from .qk_engine import (
    MultiplicationTable,
    euler_char,
    giambelli_gr3,
    giambelli_lift_general,
    gr3_engine,
    ideal_sheaf,
    lift_engine,
    multiplication_table,
    pairing,
    product,
    product_basis,
    reduce_third_row,
    structure_constant,
    verify_recursion,
)
from .seidel import (
    H,
    T,
    d_min,
    duality,
    h_basis,
    lemcom_shift,
    qh_seidel_power,
    reduce_deg_one,
    reduce_dual_shift,
    reduce_higher,
    reduce_lemred,
    reduction_trace,
    t_basis,
)

__all__ = [
    "GrContext",
    "H",
    "MultiplicationTable",
    "PieriOperator",
    "QKElement",
    "T",
    "all_partitions",
    "basis_key",
    "classical_pieri",
    "context",
    "curve_neighborhood",
    "d_count",
    "d_min",
    "dual",
    "duality",
    "euler_char",
    "from_jump_sequence",
    "gamma_special",
    "giambelli_gr3",
    "giambelli_lift_general",
    "gr3_engine",
    "h_basis",
    "horizontal_strip",
    "ideal_sheaf",
    "lemcom_shift",
    "lift_engine",
    "multiplication_table",
    "nu3_zero_case",
    "outer_rim_removals",
    "pairing",
    "parse_partition",
    "pieri_operator",
    "positivity_check",
    "product",
    "product_basis",
    "qh_seidel_power",
    "qlr_gr3",
    "quantum_pieri",
    "quantum_pieri_restated",
    "reduce_deg_one",
    "reduce_dual_shift",
    "reduce_higher",
    "reduce_lemred",
    "reduce_third_row",
    "reduction_trace",
    "rim_peel",
    "rook_strips_over",
    "seidel_down",
    "seidel_up",
    "shift_jump",
    "size",
    "structure_constant",
    "t_basis",
    "to_jump_sequence",
    "verify_recursion",
]

__version__ = "0.1.0"
