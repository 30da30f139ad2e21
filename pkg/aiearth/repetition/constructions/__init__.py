from .vars import H_TABLES, BLOCK_LENGTH, FINITE_CHECK_LENGTH
from .caterpillar import (
    color_cp2,
    color_cp3_ternary,
    color_cp3_5letters,
    color_cp3_odd_k,
    color_cp3,
    cp3_threshold,
)
from .tree import (
    TreeColoringParams,
    color_tree3,
    father_from_gamma,
    father_rule_violations,
    split_gamma,
    tree_color_count,
)
