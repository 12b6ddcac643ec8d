"""
Exhaustive search for k-planes on a complete intersection over F_q.

Planes are enumerated as reduced row echelon (k+1) x (m+1) matrices, one
per point of the Grassmannian G(k, m)(F_q).  Containment is decided
symbolically (the pulled-back forms must vanish identically); a pointwise
check over F_q-points of the plane is used only as a cheap necessary
prefilter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, ParameterError
from .exactmath import PrimeField, gaussian_binom, rref_mod_p
from .polyring import HomogPoly
from .sampler import CISample

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class PlaneRREF:
    """A k-plane of P^m(F_q) in canonical reduced row echelon form."""

    basis: tuple          # tuple of rows, each a tuple of residues
    pivot_cols: tuple
    q: int

    @property
    def k(self) -> int:
        return len(self.basis) - 1

    @property
    def m(self) -> int:
        return len(self.basis[0]) - 1

    def matrix(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64)

    @classmethod
    def from_matrix(cls, B, q: int) -> "PlaneRREF":
        R, pivots = rref_mod_p(B, q)
        if len(pivots) != len(R):
            raise ParameterError("basis matrix is not of full row rank")
        return cls(tuple(tuple(int(x) for x in row) for row in R), tuple(pivots), q)

    def to_json(self):
        return [list(row) for row in self.basis]


def standard_plane(m: int, k: int, q: int) -> PlaneRREF:
    basis = tuple(tuple(int(i == j) for j in range(m + 1)) for i in range(k + 1))
    return PlaneRREF(basis, tuple(range(k + 1)), q)


def plane_count(m: int, k: int, q: int) -> int:
    return gaussian_binom(m + 1, k + 1, q)


def _check_cap(m, k, q, cap):
    count = plane_count(m, k, q)
    if count > cap:
        raise CapExceededError(
            f"G({k},{m})(F_{q}) has {count} points, above the cap of {cap}",
            size=count, cap=cap)
    return count


def enumerate_planes(m: int, k: int, q: int, cap: int = DEFAULT_CAP):
    """Yield every k-plane of P^m(F_q) once.

    Order: pivot-column sets in lex order, then the free entries (row-major)
    in lex order.
    """
    if not 0 <= k < m:
        raise ParameterError(f"need 0 <= k < m, got k={k}, m={m}")
    PrimeField(q)
    _check_cap(m, k, q, cap)
    n = m + 1
    for pivots in itertools.combinations(range(n), k + 1):
        pivot_set = set(pivots)
        free = [(r, col) for r, pc in enumerate(pivots)
                for col in range(pc + 1, n) if col not in pivot_set]
        template = [[0] * n for _ in range(k + 1)]
        for r, pc in enumerate(pivots):
            template[r][pc] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            for (r, col), v in zip(free, values):
                template[r][col] = v
            yield PlaneRREF(tuple(tuple(row) for row in template), pivots, q)


def polys_contain_plane(polys, plane: PlaneRREF) -> bool:
    B = plane.matrix()
    return all(g.substitute_linear(B, check_rank=False).is_zero() for g in polys)


def contains_plane(sample: CISample, plane: PlaneRREF) -> bool:
    """True iff every equation of the sample vanishes identically on the plane."""
    if sample.p != plane.q:
        raise ParameterError("sample and plane are over different fields")
    return polys_contain_plane(sample.g, plane)


@dataclass(frozen=True)
class FanoResult:
    planes: tuple
    contains_standard: bool
    count: int
    q: int


def _all_vectors(n: int, q: int) -> np.ndarray:
    """Every vector of F_q^n, row index = base-q code (first coordinate most significant)."""
    grids = np.indices((q,) * n).reshape(n, -1).T
    return grids.astype(np.int64)


def fano_points_of(polys, m: int, k: int, q: int, cap: int = DEFAULT_CAP,
                   chunk: int = 4096) -> FanoResult:
    """All F_q-rational k-planes on V(polys) in P^m."""
    PrimeField(q)
    for g in polys:
        if g.p != q or g.num_vars != m + 1:
            raise ParameterError("polynomials must live in F_q[y_0..y_m]")
    _check_cap(m, k, q, cap)
    vectors = _all_vectors(m + 1, q)
    vanish = np.ones(len(vectors), dtype=bool)
    for g in polys:
        vanish &= g.evaluate_many(vectors) == 0
    weights = q ** np.arange(m, -1, -1, dtype=np.int64)
    coords = _all_vectors(k + 1, q)

    found = []
    batch: list = []

    def flush():
        if not batch:
            return
        B = np.array([pl.basis for pl in batch], dtype=np.int64)
        pts = np.einsum("vr,nrc->nvc", coords, B) % q
        hit = vanish[pts @ weights].all(axis=1)
        for pl, ok in zip(batch, hit):
            if ok and polys_contain_plane(polys, pl):
                found.append(pl)
        batch.clear()

    for plane in enumerate_planes(m, k, q, cap):
        batch.append(plane)
        if len(batch) >= chunk:
            flush()
    flush()
    std = standard_plane(m, k, q)
    return FanoResult(tuple(found), std in found, len(found), q)


def fano_points(sample: CISample, q: int | None = None, cap: int = DEFAULT_CAP) -> FanoResult:
    q = sample.p if q is None else q
    if q != sample.p:
        raise ParameterError(f"sample was drawn over F_{sample.p}, not F_{q}")
    params = sample.params
    return fano_points_of(sample.g, params.m, params.k, q, cap)


def transform_polys(polys, T) -> list[HomogPoly]:
    """Change of coordinates g -> g(y . T) for an invertible square T."""
    return [g.substitute_linear(T) for g in polys]


def transform_plane(plane: PlaneRREF, T) -> PlaneRREF:
    """The image of a plane under the coordinate change matching `transform_polys`."""
    q = plane.q
    T = np.asarray(T, dtype=np.int64) % q
    n = T.shape[0]
    R, pivots = rref_mod_p(np.hstack([T, np.eye(n, dtype=np.int64)]), q)
    if pivots[:n] != list(range(n)):
        raise ParameterError("coordinate change is singular")
    T_inv = R[:, n:]
    return PlaneRREF.from_matrix(plane.matrix() @ T_inv % q, q)
