"""Exact-arithmetic toolkit for axial algebras.

Commutative nonassociative algebras carrying designated idempotents (axes)
whose adjoint eigenspaces multiply according to a fusion law.  Everything is
computed over exact fields (rationals or prime fields), so eigenspace
dimensions, fusion checks, Miyamoto closures, Frobenius forms and radicals
are decided, not approximated.

The catalog builds the standard small examples: Matsuo algebras over
3-transposition groups, spin factors and their split relatives, the eight
Norton-Sakuma algebras, flip subalgebras of Matsuo algebras and finite
periodic quotients of the Highwater algebra.
"""

from .algebra import Algebra, form_value
from .axes import (
    Axet,
    AxetShape,
    AxialVerdict,
    AxisReport,
    MiyamotoMap,
    check_axis,
    classify_2gen_axet,
    close_axes,
    eigen_decomposition,
    eigenspace,
    is_axial,
    miyamoto,
    miyamoto_group,
    projection,
)
from .catalog import (
    NORTON_SAKUMA_DIMS,
    NORTON_SAKUMA_NAMES,
    SpinFactor,
    SplitSpinFactor,
    ThreeTranspositionGroup,
    double_axis,
    flip_subalgebra,
    matsuo,
    norton_sakuma,
    spin_factor,
    split_spin_factor,
)
from .errors import AxialError
from .fields import GF, QQ, FieldSpec, rational
from .frobenius import (
    FrobeniusSolution,
    form_radical,
    frobenius_solution_space,
    projection_graph,
    radical,
    solve_frobenius,
)
from .fusion import FusionLaw, Grading, law_A, law_J, law_M
from .highwater import (
    HighwaterElement,
    hw_a,
    hw_baric,
    hw_ideal_window_contains,
    hw_mul,
    hw_periodic_quotient,
    hw_reflect,
    hw_s,
    ideal_type_info,
    is_ideal_type,
)
from .linalg import Matrix, Subspace
from .serialize import dump_algebra, load_algebra
from .structure import (
    baric_map_check,
    is_slender,
    non_annihilating_graph,
    seress_lemma_check,
    spine,
    sum_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Axet",
    "AxetShape",
    "AxialError",
    "AxialVerdict",
    "AxisReport",
    "FieldSpec",
    "FrobeniusSolution",
    "FusionLaw",
    "GF",
    "Grading",
    "HighwaterElement",
    "Matrix",
    "MiyamotoMap",
    "NORTON_SAKUMA_DIMS",
    "NORTON_SAKUMA_NAMES",
    "QQ",
    "SpinFactor",
    "SplitSpinFactor",
    "Subspace",
    "ThreeTranspositionGroup",
    "baric_map_check",
    "check_axis",
    "classify_2gen_axet",
    "close_axes",
    "double_axis",
    "dump_algebra",
    "eigen_decomposition",
    "eigenspace",
    "flip_subalgebra",
    "form_radical",
    "form_value",
    "frobenius_solution_space",
    "hw_a",
    "hw_baric",
    "hw_ideal_window_contains",
    "hw_mul",
    "hw_periodic_quotient",
    "hw_reflect",
    "hw_s",
    "ideal_type_info",
    "is_axial",
    "is_ideal_type",
    "is_slender",
    "law_A",
    "law_J",
    "law_M",
    "load_algebra",
    "matsuo",
    "miyamoto",
    "miyamoto_group",
    "non_annihilating_graph",
    "norton_sakuma",
    "projection",
    "projection_graph",
    "radical",
    "rational",
    "seress_lemma_check",
    "solve_frobenius",
    "spin_factor",
    "spine",
    "split_spin_factor",
    "sum_decomposition",
    "__version__",
]
