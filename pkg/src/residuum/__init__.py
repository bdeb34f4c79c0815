"""Exact and approximate string lengths, subgroup structure, routing and
rendering for modular residue designs (nail ``k`` joined to ``a*k mod n``)."""

from .designgraph import (
    DesignGraph,
    RoutePlan,
    build_design,
    route,
    string_count,
    verify_subgroup_correspondence,
)
from .metrics import (
    LengthReport,
    approx_length,
    chord_length,
    gross_length,
    lagrange_sum,
    net_length,
    one_string_length,
)
from .numtheory import (
    DesignParams,
    SubgroupInfo,
    doubled_subgroup,
    enumerate_H,
    gcd,
    is_prime,
    is_primitive_root,
    multiplicative_order,
)
from .render import RenderStyle, to_svg

__version__ = "0.1.0"
