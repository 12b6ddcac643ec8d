"""
Jacobian of a sampled complete intersection along the standard plane.

On Pi the Jacobian is (0 | P) with P[i][h] = p_i^(h), so Y is singular at a
point y of Pi exactly when the s x (m-k) matrix P(y) drops rank.  The
dimension of that rank-drop locus is estimated from its F_p-point counts
at two or more primes; this is a heuristic and the raw counts are always
reported with the estimate.  Whether the locus on Pi is the whole singular
locus of Y (a Bertini-type statement) is assumed, not checked.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceededError, ParameterError, VerificationError
from .exactmath import PrimeField
from .invariants import Parameters, expected_sing_dim
from .polyring import HomogPoly
from .sampler import CISample, sample_ci

DEFAULT_POINT_CAP = 211**2 + 211 + 1      # |P^2(F_211)|
DEFAULT_PRIMES = (101, 211)
POINT_LIST_LIMIT = 100


@dataclass(frozen=True, eq=False)
class JacobianOnPlane:
    P: tuple      # s rows of (m - k) HomogPoly in y_0..y_k
    s: int
    m: int
    k: int
    p: int


def jacobian_on_plane(sample: CISample) -> JacobianOnPlane:
    """Extract P from the coefficient table and confirm it by differentiation."""
    params = sample.params
    m, k = params.m, params.k
    rows = []
    for i, g in enumerate(sample.g):
        row = []
        for j in range(m + 1):
            restricted = g.partial_derivative(j).restrict_to_plane(k)
            if j <= k:
                if not restricted.is_zero():
                    raise VerificationError(
                        f"d g_{i} / d y_{j} does not vanish on the plane")
                continue
            from_table = sample.p_poly(i, j)
            if restricted != from_table:
                raise VerificationError(
                    f"Jacobian entry ({i}, {j}) disagrees with p_{i}^({j})")
            row.append(from_table)
        rows.append(tuple(row))
    return JacobianOnPlane(tuple(rows), params.s, m, k, sample.p)


def projective_points(k: int, p: int) -> np.ndarray:
    """Canonical representatives of P^k(F_p): first nonzero coordinate is 1."""
    blocks = []
    for lead in range(k + 1):
        tail = k - lead
        free = np.indices((p,) * tail).reshape(tail, -1).T if tail else np.zeros((1, 0), int)
        block = np.zeros((len(free), k + 1), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1:] = free
        blocks.append(block)
    return np.vstack(blocks)


def _batched_det(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack of small square matrices (Leibniz)."""
    n = mats.shape[-1]
    out = np.zeros(mats.shape[0], dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        term = np.ones(mats.shape[0], dtype=np.int64)
        for r, c in enumerate(perm):
            term = term * mats[:, r, c] % p
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        out = (out + (-term if inversions % 2 else term)) % p
    return out


def rank_drop_mask(jac: JacobianOnPlane, points: np.ndarray) -> np.ndarray:
    p, s = jac.p, jac.s
    n = jac.m - jac.k
    values = np.stack([np.stack([entry.evaluate_many(points) for entry in row], axis=-1)
                       for row in jac.P], axis=1)          # (N, s, n)
    if n < s:
        return np.ones(len(points), dtype=bool)
    full = np.zeros(len(points), dtype=bool)
    for cols in itertools.combinations(range(n), s):
        full |= _batched_det(values[:, :, cols], p) != 0
    return ~full


def rank_drop_points(jac: JacobianOnPlane, p: int | None = None,
                     cap: int = DEFAULT_POINT_CAP) -> list[tuple]:
    """Points of P^k(F_p) where P(y) has rank < s, in canonical order."""
    p = jac.p if p is None else p
    if p != jac.p:
        raise ParameterError(f"Jacobian is over F_{jac.p}, not F_{p}")
    size = sum(p**e for e in range(jac.k + 1))
    if size > cap:
        raise CapExceededError(
            f"P^{jac.k}(F_{p}) has {size} points, above the cap of {cap}",
            size=size, cap=cap)
    pts = projective_points(jac.k, p)
    mask = rank_drop_mask(jac, pts)
    return [tuple(int(x) for x in row) for row in pts[mask]]


# -- closure emptiness tests used when no rational points are seen ----------

def _univariate(form: HomogPoly) -> list[int]:
    """Dehomogenise a binary form at y1 = 1; index = power of y0."""
    out = [0] * (form.degree + 1)
    for (a, _), c in form.coeffs.items():
        out[a] = c
    return out


def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f, g, p):
    f = f[:]
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        coef = f[-1] * inv % p
        shift = len(f) - len(g)
        for idx, gc in enumerate(g):
            f[shift + idx] = (f[shift + idx] - coef * gc) % p
        _trim(f)
    return f


def _gcd_degree(polys, p) -> int:
    g: list = []
    for f in polys:
        f = _trim(f[:])
        if not f:
            continue
        if not g:
            g = f
            continue
        a, b = g, f
        while b:
            a, b = b, _poly_mod(a, b, p)
        g = a
    return len(g) - 1 if g else -1


def binary_forms_share_root(forms, p: int) -> bool:
    """Do binary forms have a common zero on P^1 over the algebraic closure?"""
    nonzero = [f for f in forms if not f.is_zero()]
    if len(nonzero) <= 1:
        return True
    if all(f.coeffs.get((f.degree, 0), 0) == 0 for f in nonzero):
        return True         # common zero at [1:0]
    return _gcd_degree([_univariate(f) for f in nonzero], p) >= 1


def closure_nonempty(jac: JacobianOnPlane) -> bool | None:
    """Decide nonemptiness of the rank-drop locus over the closure when cheap.

    Only s = 1 is handled: the locus is the common zero set of the entries of
    the single row.  At most k forms on P^k always have a common zero; on
    P^1 a gcd settles it.  Returns None when undecided.
    """
    if jac.s != 1:
        return None
    forms = [f for f in jac.P[0] if not f.is_zero()]
    if len(forms) <= jac.k:
        return True
    if jac.k == 1:
        return binary_forms_share_root(forms, jac.p)
    return None


@dataclass
class SingularEstimate:
    primes: list
    counts: list
    points: dict = field(default_factory=dict)
    estimate: int | None = None
    status: str = "ok"
    expected: int = -1
    closure_nonempty: list = field(default_factory=list)

    @property
    def match(self) -> bool:
        return self.status == "ok" and self.estimate == self.expected

    def to_json(self) -> dict:
        return {
            "primes": list(self.primes),
            "counts": list(self.counts),
            "points": {str(p): [list(pt) for pt in pts] for p, pts in self.points.items()},
            "estimate": self.estimate,
            "status": self.status,
            "expected": self.expected,
            "match": self.match,
            "closure_nonempty": list(self.closure_nonempty),
            "assumption": "singular locus of Y equals the rank-drop locus on the plane",
        }


def _bezout_bound(params: Parameters):
    """Bound on a finite rank-drop locus for s = 1 with m - k >= k forms."""
    if params.s != 1 or params.m - params.k < params.k:
        return None
    return (params.d[0] - 1) ** (params.m - params.k)


def _is_bounded(c1, c2):
    return c2 <= max(1.5 * c1, c1 + 3)


def estimate_from_counts(params: Parameters, primes, counts, closure=None):
    """(estimate, status) from per-prime rank-drop point counts."""
    if all(c == 0 for c in counts):
        if closure and all(x is True for x in closure):
            return 0, "ok"
        return -1, "ok"
    bound = _bezout_bound(params)
    if bound is not None and max(counts) <= bound:
        return 0, "ok"
    pairs = list(zip(zip(primes, counts), zip(primes[1:], counts[1:])))
    if all(_is_bounded(c1, c2) for (_, c1), (_, c2) in pairs):
        return 0, "ok"
    exponents = set()
    for (p1, c1), (p2, c2) in pairs:
        if c1 == 0 or c2 <= c1:
            return None, "inconclusive"
        exponents.add(round(math.log(c2 / c1) / math.log(p2 / p1)))
    if len(exponents) == 1:
        e = exponents.pop()
        if e >= 1:
            return e, "ok"
    return None, "inconclusive"


def sing_dim_estimate(params: Parameters, seed: int, primes=DEFAULT_PRIMES,
                      cap: int = DEFAULT_POINT_CAP) -> SingularEstimate:
    """Estimate dim of the singular locus along Pi for the seed's samples."""
    primes = sorted(int(p) for p in primes)
    if len(primes) < 2:
        raise ParameterError("need at least two primes")
    for p in primes:
        PrimeField(p)
    counts, points, closure = [], {}, []
    for p in primes:
        jac = jacobian_on_plane(sample_ci(params, p, seed))
        pts = rank_drop_points(jac, p, cap)
        counts.append(len(pts))
        if len(pts) <= POINT_LIST_LIMIT:
            points[p] = pts
        closure.append(closure_nonempty(jac) if not pts else True)
    estimate, status = estimate_from_counts(params, primes, counts, closure)
    return SingularEstimate(primes, counts, points, estimate, status,
                            expected_sing_dim(params), closure)
