"""
Sampling a complete intersection through a plane
================================================

We draw random equations that contain the standard plane and ask whether
the plane is rigid: the normal-bundle map must be injective, which is a
rank statement about an explicit matrix over F_p.
"""

import numpy as np

from cifano.invariants import Parameters, t_invariant
from cifano.rigidity import build_sigma_matrix, rigidity_check, symbolic_det_leading
from cifano.sampler import sample_ci

params = Parameters(3, 1, (4,))
sample = sample_ci(params, p=1009, seed=42)
print(sample.g[0].render()[:200], "...")

##############################################################################
# The matrix has one row per monomial of degree d on the plane and one
# column per entry of a normal vector field.
C = build_sigma_matrix(sample)
print("shape", C.shape)
print(rigidity_check(sample))

##############################################################################
# Over many seeds the rank is full almost always.
ranks = [rigidity_check(sample_ci(params, 1009, seed)).nullity for seed in range(200)]
print("nonzero nullity:", np.count_nonzero(ranks), "of", len(ranks))

##############################################################################
# A cubic threefold has t = -2: every line moves in a 2-dimensional family,
# and the nullity is exactly 2 for a general sample.
cubic = Parameters(4, 1, (3,))
print("t =", t_invariant(cubic),
      "nullity =", rigidity_check(sample_ci(cubic, 1009, 0)).nullity)

##############################################################################
# The generic rank can be certified without randomness: the determinant of
# the leading square block, as a polynomial in the coefficients, is nonzero.
rep = symbolic_det_leading(params)
print(rep.num_terms, "monomials, leading coefficient", rep.leading_coeff)
