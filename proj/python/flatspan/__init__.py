"""Exact enumeration of spanned flats, essential dimension and degeneracy
sequences of rational point configurations."""

from ._core import (
    Config,
    Flat,
    FlatRecord,
    ParseError,
    Point,
    analyze_json,
    check,
    enumerate_spanned,
    essential_dimension,
    f_vector,
    g_vector,
    gen_crosspolytope_base,
    gen_crosspolytope_construction,
    gen_hypercube_base,
    gen_hypercube_construction,
    gen_skew_lines,
    incidences,
    join,
    load_config,
    load_config_file,
    meet,
    project_config,
    project_flat,
    project_from_point,
    project_point,
    raise_construction,
    weighted_sum,
    weighted_sum_via_projection,
)

__all__ = [
    "Config",
    "Flat",
    "FlatRecord",
    "ParseError",
    "Point",
    "analyze_json",
    "check",
    "enumerate_spanned",
    "essential_dimension",
    "f_vector",
    "g_vector",
    "gen_crosspolytope_base",
    "gen_crosspolytope_construction",
    "gen_hypercube_base",
    "gen_hypercube_construction",
    "gen_skew_lines",
    "incidences",
    "join",
    "load_config",
    "load_config_file",
    "meet",
    "project_config",
    "project_flat",
    "project_from_point",
    "project_point",
    "raise_construction",
    "weighted_sum",
    "weighted_sum_via_projection",
]

__version__ = "0.1.0"
