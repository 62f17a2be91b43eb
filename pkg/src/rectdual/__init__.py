"""One-sided rectangular duals for plane graphs: detection, construction,
verification, and cartogram realization."""

from .builder import (
    BuildError,
    InvalidCertificateError,
    NoValidPlacement,
    NotRepairable,
    build_dual,
    delete_exterior_rect,
    init_path_row,
    insert_vertex,
    placement_for,
)
from .detector import (
    ClassCResult,
    Degree4Path,
    InvalidPathError,
    MembershipCertificate,
    NotBiconnectedError,
    check_membership,
    classify,
    enumerate_degree4_paths,
    is_biconnected,
)
from .generator import MIN_SIZE, GeneratedInstance, generate
from .graphs import (
    GraphError,
    GraphParseError,
    PlaneGraph,
    VertexId,
    parse_graph,
    serialize_graph,
)
from .layout import Layout, LayoutError, Rect, layout_from_json_dict
from .render import render_svg, render_svg_bytes
from .solver import (
    CartogramLayout,
    CartogramRect,
    NotAreaUniversal,
    NotConverged,
    cartogram_weak_equivalent,
    measure_areas,
    normalize_targets,
    solve_areas,
)
from .verifier import (
    Segment,
    ValidationReport,
    Violation,
    contact_graph,
    extract_maximal_segments,
    is_area_universal,
    validate_partition,
    weak_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "BuildError",
    "CartogramLayout",
    "CartogramRect",
    "ClassCResult",
    "Degree4Path",
    "GeneratedInstance",
    "GraphError",
    "GraphParseError",
    "InvalidCertificateError",
    "InvalidPathError",
    "Layout",
    "LayoutError",
    "MIN_SIZE",
    "MembershipCertificate",
    "NoValidPlacement",
    "NotAreaUniversal",
    "NotBiconnectedError",
    "NotConverged",
    "NotRepairable",
    "PlaneGraph",
    "Rect",
    "Segment",
    "ValidationReport",
    "VertexId",
    "Violation",
    "build_dual",
    "cartogram_weak_equivalent",
    "check_membership",
    "classify",
    "contact_graph",
    "delete_exterior_rect",
    "enumerate_degree4_paths",
    "extract_maximal_segments",
    "generate",
    "init_path_row",
    "insert_vertex",
    "is_area_universal",
    "is_biconnected",
    "layout_from_json_dict",
    "measure_areas",
    "normalize_targets",
    "parse_graph",
    "placement_for",
    "render_svg",
    "render_svg_bytes",
    "serialize_graph",
    "solve_areas",
    "validate_partition",
    "weak_equivalent",
]
