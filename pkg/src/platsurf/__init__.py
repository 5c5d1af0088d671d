"""Links in 2n-plat position: diagrams, allowable paths, essential
surfaces, and certificates.

The package models plat projections whose twist regions satisfy a small
set of combinatorial hypotheses, enumerates the allowable paths that
carry separating spheres, computes the invariants of the planar and
tubed surfaces spanned along such a path, and emits certificates whose
conclusions are asserted by citation (see ``certificates``).  Braid
word and PD code export, Dehn surgery slope checks, and deterministic
rendering round out the toolkit; the ``platsurf`` command exposes all
of it.  Conventions for every format live in FORMATS.md.
"""

from .certificates import (
    MODE_COMPOSITE,
    MODE_RELAXED,
    MODE_THEOREM1,
    Certificate,
    Conclusion,
    certificate_json,
    certify,
    diagram_digest,
)
from .diagram import (
    HypothesisReport,
    PlatDiagram,
    Rational,
    Twist,
    box_denominator,
    box_fraction,
    check_hypotheses,
    diagram_from_json,
    diagram_to_json,
    make_diagram,
    random_diagram,
)
from .errors import (
    MalformedDiagramError,
    ParameterError,
    PathError,
    PlatError,
    TwoBridgeError,
    UnsupportedBoxError,
)
from .export import BraidWord, PDCode, pd_trace_components, to_braid_word, to_pd_code
from .paths import (
    AllowablePath,
    check_allowable,
    count_allowable,
    crossing_count,
    enumerate_allowable,
    extremal_paths,
)
from .render import render
from .surfaces import (
    PLANAR,
    TUBED_LEFT,
    TUBED_RIGHT,
    SideSummary,
    SphereDecomposition,
    SurfaceReport,
    assembled_surface_cells,
    decompose,
    surface_invariants,
)
from .surgery import (
    MERIDIAN,
    HakenCertificate,
    Slope,
    certify_haken,
    direct_coverage_check,
    haken_certificate_json,
    is_totally_nontrivial,
    parity_criterion,
    parse_slopes,
)
from .tangles import (
    Pairing,
    TangleFraction,
    incompressibility_level,
    pairing,
    pairing_by_tracing,
)
from .topology import (
    LinkTopology,
    braid_permutation,
    build_topology,
    component_cycles,
    components_meeting_sphere,
    components_strictly_beside,
    crossing_components,
    crossing_pieces,
)

__version__ = "0.1.0"

__all__ = [
    "AllowablePath",
    "BraidWord",
    "Certificate",
    "Conclusion",
    "HakenCertificate",
    "HypothesisReport",
    "LinkTopology",
    "MalformedDiagramError",
    "MERIDIAN",
    "MODE_COMPOSITE",
    "MODE_RELAXED",
    "MODE_THEOREM1",
    "PDCode",
    "PLANAR",
    "Pairing",
    "ParameterError",
    "PathError",
    "PlatDiagram",
    "PlatError",
    "Rational",
    "SideSummary",
    "Slope",
    "SphereDecomposition",
    "SurfaceReport",
    "TUBED_LEFT",
    "TUBED_RIGHT",
    "TangleFraction",
    "Twist",
    "TwoBridgeError",
    "UnsupportedBoxError",
    "assembled_surface_cells",
    "box_denominator",
    "box_fraction",
    "braid_permutation",
    "build_topology",
    "certificate_json",
    "certify",
    "certify_haken",
    "check_allowable",
    "check_hypotheses",
    "component_cycles",
    "components_meeting_sphere",
    "components_strictly_beside",
    "count_allowable",
    "crossing_components",
    "crossing_count",
    "crossing_pieces",
    "decompose",
    "diagram_digest",
    "diagram_from_json",
    "diagram_to_json",
    "direct_coverage_check",
    "enumerate_allowable",
    "extremal_paths",
    "haken_certificate_json",
    "incompressibility_level",
    "is_totally_nontrivial",
    "make_diagram",
    "pairing",
    "pairing_by_tracing",
    "parity_criterion",
    "parse_slopes",
    "pd_trace_components",
    "random_diagram",
    "render",
    "surface_invariants",
    "to_braid_word",
    "to_pd_code",
]
