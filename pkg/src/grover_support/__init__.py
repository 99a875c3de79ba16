"""Exact positive supports of Grover-walk powers and the discriminant walk behind them."""
from .exact import ExtScalar, ext_sign
from .graphcore import Graph, analyze, builtin, load_graph, parse_adjlist, parse_graph6, parse_lcf
from .lineqw import evolve, pattern, phase
from .spectral import appendix_polys, curve_samples, f_n_matrix, lift_verify, nondiag_predict, trace_det_disc
from .structure import assemble_rhs, coefficients, pretty_print, verify
from .walkops import build_grover, positive_support, support_of_power, zeta_poly

__version__ = "0.1.0"

__all__ = [
    "ExtScalar", "ext_sign",
    "Graph", "analyze", "builtin", "load_graph", "parse_adjlist", "parse_graph6", "parse_lcf",
    "evolve", "pattern", "phase",
    "appendix_polys", "curve_samples", "f_n_matrix", "lift_verify", "nondiag_predict", "trace_det_disc",
    "assemble_rhs", "coefficients", "pretty_print", "verify",
    "build_grover", "positive_support", "support_of_power", "zeta_poly",
]
