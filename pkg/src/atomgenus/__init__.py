"""Surface spectrum and polynomial invariants of framed 4-valent graphs and
framed chord diagrams via GF(2) rank optimization."""

from .chords import (
    DiagramError,
    FramedChordDiagram,
    canonical,
    connected_sum,
    interlacement_matrix,
    interval_mutation,
    is_d_diagram,
    linked,
    parse,
    serialize,
    subdiagram,
)
from .genus import (
    GenusReport,
    diagram_surgery,
    embeds_in_klein,
    embeds_in_rp2,
    euler_characteristic,
    genus_spectrum,
    is_planar,
    klein_by_surgery,
    orientability_class,
)
from .gf2 import Gf2Matrix, corank, mask_rank, principal_submatrix, rank
from .graphs import (
    FramedFourGraph,
    GraphError,
    PlaneGraph,
    RotatingCircuit,
    chord_diagram_of,
    medial_of_plane_graph,
    parse_graph,
    random_framed_graph,
    rotating_circuit,
    serialize_graph,
    source_target_check,
    validate,
)
from .invariants import (
    FourTermQuadruple,
    check_relation,
    four_term_quadruples,
    gen_fun_f,
    gen_fun_f_tilde,
    kauffman_bracket,
    weight_system_gl,
)
from .laurent import LaurentPoly
from .surgery import (
    BandAttachment,
    OneManifold,
    assignment_trace,
    circle_count_after,
    circle_count_after_sequential,
    state_circle_counts,
    surgery,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
