"""Exact probabilities of permutation equalities in finite groups."""

from .errors import (
    BudgetExceeded,
    CapExceeded,
    FormatError,
    GroupError,
    IllegalOperation,
    InvalidPermutation,
    OrbitCapExceeded,
    PermProbError,
    PresentationError,
    StructureError,
)
from .group_core import (
    FiniteGroup,
    center,
    class_constants,
    class_constants_pair,
    commutator_subgroup,
    conjugacy_table,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_flags,
    group_from_table,
    quaternion_group,
    quotient_group,
    symmetric_group,
)
from .perm_core import (
    Permutation,
    alternating_cycle_count,
    big_black_cycle,
    circ_permutation,
    hultman_table,
    make_permutation,
    permutations_with_class,
)
from .presented_groups import PcPresentation, group_from_pc_presentation, preset_g1, preset_g2
from .prob_engine import (
    ExactProbability,
    central_square_closed_form,
    commutator_limit,
    pr_brute,
    pr_by_theorem,
    pr_even_reversal,
    pr_reverse_via_stabprod,
    spectrum,
)
from .rearrange_ops import OpKind, apply_cyclic, apply_exchange, equivalence_orbit

__version__ = "0.1.0"
