"""Exact construction, validation and (d+1)-coloring of pure d-simplex
complexes in R^d.

Simplices glued facet-to-facet always admit a coloring with d+1 colors in
which facet-sharing simplices differ.  The library makes the underlying
induction executable: find a simplex with an exposed facet (combinatorially
or from coordinates via nested convex hulls), peel it, and color greedily in
reverse order.  An exact chromatic oracle and clique-configuration analysis
cross-check the structural facts that make this work.
"""

from .coloring import (
    COMBINATORIAL,
    GEOMETRIC,
    OracleResult,
    PeelCertificate,
    TraceStep,
    color,
    exact_chromatic,
    find_exposed_combinatorial,
    find_exposed_geometric,
    load_certificate,
    peel,
    save_certificate,
    verify_coloring,
)
from .dual import (
    CliqueReport,
    DualGraph,
    GraphStats,
    analyze_max_clique_configuration,
    build_dual,
    find_all_cliques,
    find_clique,
    stats,
)
from .errors import (
    InputError,
    InvariantError,
    SimplexColorError,
    UnrealizableComplexError,
)
from .generators import GeneratorSpec, KINDS, generate
from .geometry import (
    Hyperplane,
    Point,
    Rational,
    extreme_point,
    orientation,
    point,
    side_of,
    supporting_hyperplane,
)
from .model import (
    Coloring,
    Complex,
    Facet,
    Simplex,
    ValidationReport,
    facet_multiplicity,
    load,
    load_coloring,
    save,
    save_coloring,
    validate,
)
from .render import RenderOptions, render_svg

__version__ = "0.1.0"

__all__ = [
    "COMBINATORIAL",
    "GEOMETRIC",
    "CliqueReport",
    "Coloring",
    "Complex",
    "DualGraph",
    "Facet",
    "GeneratorSpec",
    "GraphStats",
    "Hyperplane",
    "InputError",
    "InvariantError",
    "KINDS",
    "OracleResult",
    "PeelCertificate",
    "Point",
    "Rational",
    "RenderOptions",
    "Simplex",
    "SimplexColorError",
    "TraceStep",
    "UnrealizableComplexError",
    "ValidationReport",
    "analyze_max_clique_configuration",
    "build_dual",
    "color",
    "exact_chromatic",
    "extreme_point",
    "facet_multiplicity",
    "find_all_cliques",
    "find_clique",
    "find_exposed_combinatorial",
    "find_exposed_geometric",
    "generate",
    "load",
    "load_certificate",
    "load_coloring",
    "orientation",
    "peel",
    "point",
    "render_svg",
    "save",
    "save_certificate",
    "save_coloring",
    "side_of",
    "stats",
    "supporting_hyperplane",
    "validate",
    "verify_coloring",
]
