"""Khovanov homology, Thurston-Bennequin bounds, and maximal-tb
Legendrian fronts for alternating links."""

from .classical import (
    alternating_tb,
    alternating_tb_via_crossings,
    determinant,
    is_reduced_alternating,
    jones_hat,
    signature,
)
from .fronts import (
    FrontDiagram,
    FrontError,
    desingularize,
    is_admissible,
    lips,
    rotation_number,
    tb,
    validate_front,
    zero_resolution,
)
from .khovanov import (
    BigradedGroup,
    CubeComplex,
    ResourceLimit,
    build_cube,
    graded_euler,
    integer_homology,
    khovanov_homology,
    poincare_polynomial,
    strong_bound,
    weak_bound,
)
from .links import (
    DiagramError,
    LinkDiagram,
    braid_closure,
    mirror,
    parse_pd,
    smooth,
    writhe,
)
from .mondrian import (
    EnhancedCycle,
    MondrianDiagram,
    MondrianError,
    add_interior_vertex,
    build_max_tb_front,
    contract,
    front_from_mondrian,
    is_strong,
    join_treelike,
    mondrian_cycle,
    mondrian_enhanced_cycle,
    mondrian_from_graph,
)
from .planar import (
    GraphError,
    PlanarGraph,
    checkerboard_graph,
    is_embedded_isomorphic,
    is_reduced_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
