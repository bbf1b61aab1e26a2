"""Exact classification of plane polynomial 1-forms at a singular point."""

__version__ = "0.1.0"

from .cuspidal import (  # noqa: E402
    CuspidalSpec, Verdict, branch_params, build_cuspidal, classify_cuspidal, cusp_gsv,
    cusp_intersection, gsv_total, ph_pq, pullback_order, saddle_node_normal_form,
    toric_pullback,
)
from .foliation import (  # noqa: E402
    OneForm, SingularityClass, classify_singularity, is_invariant, milnor_number,
    multiplicity, ph_index, saturate,
)
from .formparse import ParseContext, parse_oneform, parse_parameterization, parse_poly  # noqa: E402
from .newton import newton_polygon, newton_second_type_test, support_form  # noqa: E402
from .numfield import QQ, FieldTower, SplitEvent  # noqa: E402
from .polyring import INF, Parameterization, Poly1, Poly2, intersection_number  # noqa: E402
from .reduction import blowup, reduce, same_reduction, verdict  # noqa: E402

__all__ = [
    "CuspidalSpec", "FieldTower", "INF", "OneForm", "Parameterization", "ParseContext",
    "Poly1", "Poly2", "QQ", "SingularityClass", "SplitEvent", "Verdict", "blowup",
    "branch_params", "build_cuspidal", "classify_cuspidal", "classify_singularity",
    "cusp_gsv", "cusp_intersection", "gsv_total", "intersection_number", "is_invariant",
    "milnor_number", "multiplicity", "newton_polygon", "newton_second_type_test",
    "parse_oneform", "parse_parameterization", "parse_poly", "ph_index", "ph_pq",
    "pullback_order", "reduce", "saddle_node_normal_form", "same_reduction", "saturate",
    "support_form", "toric_pullback", "verdict",
]
