"""Orthogonal polynomials and spectral methods on planar cubic curves y^2 = phi(x)."""

__version__ = "0.1.0"

from .basis import (CurveBasis, CurveExpansion, basis_member, fourier_coeffs,
                    inner_product, jacobi_operators, monomial_curve_degree)
from .collocation import (CollocationProblem, CollocationSolution,
                          differentiate, ode_coefficients_example2, solve)
from .curve import (CubicCurve, CurveCase, CurveChart, chart, classify,
                    even_odd_split)
from .exceptions import (BranchLossError, DegenerateCurveError, DomainError,
                         InvalidChartError, NumericalError,
                         ParameterDomainError, PositivityError, ShapeError,
                         SolveError)
from .families import (GaussRule, OPFamily, build_family,
                       christoffel_darboux_kernel, eval_poly, gauss_rule,
                       lagrange_interpolate, scaled_family)
from .hp import HPApproximant, hp_eval, hp_fit, hp_nodes, hp_sweep
from .interp import (CurveQuadRule, curve_interpolate, curve_interpolate_angle,
                     curve_quadrature, curve_samples, discrete_inner,
                     gauss_order)
from .kernels import BACKEND
from .modify import ModifiedFamily, modify, moment_matrix

__all__ = [
    "__version__", "BACKEND",
    "OPFamily", "GaussRule", "build_family", "scaled_family", "eval_poly",
    "gauss_rule", "lagrange_interpolate", "christoffel_darboux_kernel",
    "ModifiedFamily", "modify", "moment_matrix",
    "CubicCurve", "CurveCase", "CurveChart", "classify", "chart",
    "even_odd_split",
    "CurveBasis", "CurveExpansion", "basis_member", "inner_product",
    "fourier_coeffs", "jacobi_operators", "monomial_curve_degree",
    "CurveQuadRule", "gauss_order", "curve_quadrature", "curve_samples",
    "curve_interpolate", "curve_interpolate_angle", "discrete_inner",
    "HPApproximant", "hp_nodes", "hp_fit", "hp_eval", "hp_sweep",
    "CollocationProblem", "CollocationSolution", "differentiate", "solve",
    "ode_coefficients_example2",
    "ParameterDomainError", "ShapeError", "DegenerateCurveError",
    "InvalidChartError", "DomainError", "PositivityError", "NumericalError",
    "BranchLossError", "SolveError",
]
