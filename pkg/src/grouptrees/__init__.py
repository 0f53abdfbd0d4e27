"""Exact tree-numbers of power graphs and commuting graphs of finite groups."""

from .arith import FactoredInteger, factorize, totient
from .graphs import ALL, NONIDENTITY, Graph, commuting_graph, edge_count, power_graph
from .groups import (
    CayleyTableError,
    ElementInfo,
    Group,
    GroupSpecError,
    build_group,
    commutes,
    element_info,
    is_power_related,
)
from .spectra import (
    Coclique,
    Complete,
    GraphExpr,
    Join,
    Repeat,
    Spectrum,
    Union,
    kappa_from_spectrum,
    kappa_from_spectrum_factored,
    parse_expr,
    realize,
    spectrum,
)
from .structure import (
    check_extension_bound,
    check_subgroup_product_bound,
    classify_power_free,
    coprime_witness,
    find_power_free_decomposition,
    involution_set,
    power_equals_commuting,
    universal_vertices,
)
from .suzuki import (
    kappa_suzuki_closed,
    kappa_sylow_closed,
    suzuki_commuting_expr,
    suzuki_params,
    sylow_commuting_expr,
)
from .treecount import tree_number

__version__ = "0.1.0"
