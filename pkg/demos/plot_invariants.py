"""
Expected dimensions at a glance
===============================

Every question the toolkit asks starts from the integer ``t``: the number of
conditions a k-plane must satisfy to lie on a complete intersection, minus
the dimension of the Grassmannian.  Here we tabulate it for a few families
and check the regime classification.
"""

from cifano.invariants import Parameters, classify, delta_h, dim_formulas

##############################################################################
# Lines on surfaces in P^3.  A quartic surface has t = 1, so a general one
# contains no line; a cubic surface has t = 0 and contains finitely many.
for d in (3, 4, 5):
    params = Parameters(3, 1, (d,))
    report = classify(params)
    print(f"degree {d}: t = {report.t:>2}, expected Fano dim = {report.expected_fano_dim}")

##############################################################################
# The refined counts delta_h track how many conditions survive after fixing
# an h-dimensional subspace of the plane.  delta_{-1} is t itself.
params = Parameters(4, 2, (3,))
for h in range(-1, params.k):
    table = dim_formulas(params, h)
    print(f"h={h:>2}  delta_h={delta_h(params, h):>3}  dim T_h={table.dim_Th}")

##############################################################################
# The expected dimension of the singular locus along the plane decides
# whether smooth examples can exist at all.
for params in (Parameters(3, 1, (4,)), Parameters(4, 2, (3,)), Parameters(4, 2, (2, 2))):
    rep = classify(params)
    print(params.m, params.k, params.d, "-> singular dim", rep.expected_sing_dim,
          "smooth possible:", rep.smooth_possible)
