"""Littlewood-Richardson coefficients from hives, and the octahedron-recurrence
bijection that makes the hive ring associative."""

from .hive import (
    BoundarySpec,
    Hive,
    HiveError,
    Rhombus,
    boundary_of,
    count_hives,
    enumerate_hives,
    rhombus_list,
    tri_points,
    validate_hive,
)
from .ring import (
    RingElement,
    det_shift,
    dual_weight,
    fundamental_weight,
    peel_strip,
    pieri_expand,
    product_expand,
    structure_constant,
)
from .excavation import (
    HivePair,
    TetLabeling,
    assemble_top,
    excavate,
    fill,
    octahedron_step,
    verify_star,
)
from .laurent import LaurentPolynomial, TropicalForm, eval_tropical, symbolic_excavate, tropicalize
from .speyer import build_scatter_graph, closed_form, entry_subgraph, enumerate_matchings, matching_monomial
from .honeycomb import (
    Honeycomb,
    boundary_coordinates,
    hive_to_honeycomb,
    render_svg,
    validate_honeycomb,
)
from .schur import lr_coef_oracle, schur_polynomial

__version__ = "0.1.0"
