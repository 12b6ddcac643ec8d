"""
Counting rational lines on a quartic surface
============================================

Over a small field every line of P^3 can be checked.  A random quartic
through the standard line usually contains no other rational line.
"""

from collections import Counter

from cifano.exactmath import gaussian_binom
from cifano.fano import enumerate_planes, fano_points
from cifano.invariants import Parameters
from cifano.sampler import sample_ci

##############################################################################
# The Grassmannian of lines in P^3 over F_7 has a q-binomial number of points.
q = 7
lines = list(enumerate_planes(3, 1, q))
print(len(lines), "==", gaussian_binom(4, 2, q))
print("first:", lines[0].basis, " last:", lines[-1].basis)

##############################################################################
# Search every line on 50 sampled quartics.
params = Parameters(3, 1, (4,))
counts = Counter()
for seed in range(50):
    result = fano_points(sample_ci(params, q, seed))
    assert result.contains_standard
    counts[result.count] += 1
print("number of rational lines -> number of samples:", dict(sorted(counts.items())))
