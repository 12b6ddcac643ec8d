"""Exact finite-field experiments on complete intersections containing a k-plane."""

__version__ = "0.1.0"

from .errors import (CapExceededError, CifanoError, ParameterError, RegimeError,
                     VerificationError)
from .exactmath import PrimeField, binom, gaussian_binom
from .invariants import (Parameters, RegimeReport, classify, delta_h, dim_formulas,
                         lemma_scan, t_invariant)
from .polyring import HomogPoly, monomials_lex
from .sampler import CISample, sample_ci
from .rigidity import build_sigma_matrix, rank_ff, rigidity_check, symbolic_det_leading
from .fano import PlaneRREF, contains_plane, enumerate_planes, fano_points
from .singular import jacobian_on_plane, rank_drop_points, sing_dim_estimate

__all__ = [
    "CapExceededError", "CifanoError", "ParameterError", "RegimeError",
    "VerificationError", "PrimeField", "binom", "gaussian_binom", "Parameters",
    "RegimeReport", "classify", "delta_h", "dim_formulas", "lemma_scan",
    "t_invariant", "HomogPoly", "monomials_lex", "CISample", "sample_ci",
    "build_sigma_matrix", "rank_ff", "rigidity_check", "symbolic_det_leading",
    "PlaneRREF", "contains_plane", "enumerate_planes", "fano_points",
    "jacobian_on_plane", "rank_drop_points", "sing_dim_estimate",
]
