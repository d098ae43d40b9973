"""Heisenberg-invariant Jacobian Poisson structures over the rationals."""

from .polyring import Polynomial, PolyMatrix, ParseError, parse_poly, format_poly, matrix_det
from .heisenberg import sigma_poly, tau_degree, is_tau_homogeneous, check_h_invariance
from .jps import CasimirSet, BracketTable, bracket_table, jacobian_bracket, jps3_table
from .classify import h_basis, ast_cubic, dual_sextic, sklyanin_casimirs

__all__ = [
    "Polynomial",
    "PolyMatrix",
    "ParseError",
    "parse_poly",
    "format_poly",
    "matrix_det",
    "sigma_poly",
    "tau_degree",
    "is_tau_homogeneous",
    "check_h_invariance",
    "CasimirSet",
    "BracketTable",
    "bracket_table",
    "jacobian_bracket",
    "jps3_table",
    "h_basis",
    "ast_cubic",
    "dual_sextic",
    "sklyanin_casimirs",
]
