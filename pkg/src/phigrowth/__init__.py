"""Exact counts of linear relations over integer intervals and their growth polynomials."""

from .closedform import fn_power_series, n_threshold, phi_closed, phi_via_series, u0
from .energy import energy_report, interval_energy_poly, sumset_size, u_table
from .exactmath import Poly, binomial, binomial_linear_poly, lagrange_interpolate, poly_eval
from .growthpoly import growth_polynomial, leading_coeff, ogf_psi3_coeffs, psi_polynomial
from .oracle import ProblemSpec, phi_convolve, phi_enumerate, positivity_range, psi, rep_profile

__all__ = [
    "Poly", "ProblemSpec", "binomial", "binomial_linear_poly", "energy_report",
    "fn_power_series", "growth_polynomial", "interval_energy_poly", "lagrange_interpolate",
    "leading_coeff", "n_threshold", "ogf_psi3_coeffs", "phi_closed", "phi_convolve",
    "phi_enumerate", "phi_via_series", "poly_eval", "positivity_range", "psi",
    "psi_polynomial", "rep_profile", "sumset_size", "u0", "u_table",
]
