"""
The normal-bundle map sigma as an explicit matrix, and its rank.

Unknowns are the entries a[h, j] (k < h <= m, 0 <= j <= k) of a section of
N_{Pi/P^m}; sigma sends them to the forms sum_{h,j} a[h,j] y_j p_i^(h).
Writing those forms in the descending-lex monomial basis gives the matrix C
with rows (i, nu), |nu| = d_i, and entries

    C[(i, nu), (h, j)] = c[i, h, nu - e_j]     (0 if nu_j == 0).

Full column rank of C means h^0(N_{Pi/Y}) = 0, i.e. [Pi] is an isolated
reduced point of the Fano scheme.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, ParameterError
from .exactmath import rref_mod_p
from .invariants import Parameters, t_invariant
from .polyring import HomogPoly, monomials_lex
from .sampler import CISample

ROW_ORDER = "i-major-lex"
ROW_ORDERS = ("i-major-lex", "nu-major-lex")
COL_ORDER = "(h,j)-lex"
SYMBOLIC_CAP = 8


def row_index(params: Parameters, order: str = ROW_ORDER):
    """Row labels (i, nu) of C.

    "i-major-lex": equation blocks in turn, monomials descending lex inside a
    block.  "nu-major-lex": all rows sorted by nu descending lex, ties broken
    by i ascending (blocks interleaved).
    """
    rows = [(i, nu) for i, di in enumerate(params.d)
            for nu in monomials_lex(params.k + 1, di)]
    if order == "i-major-lex":
        return rows
    if order == "nu-major-lex":
        return sorted(rows, key=lambda row: (tuple(-e for e in row[1]), row[0]))
    raise ParameterError(f"unknown row order {order!r}")


def col_index(params: Parameters):
    return [(h, j) for h in range(params.k + 1, params.m + 1)
            for j in range(params.k + 1)]


def shifted(nu, j):
    """nu - e_j, or None when that exponent would go negative."""
    if nu[j] == 0:
        return None
    out = list(nu)
    out[j] -= 1
    return tuple(out)


@dataclass(frozen=True, eq=False)
class SigmaMatrix:
    rows: list
    cols: list
    entries: np.ndarray
    p: int

    @property
    def shape(self):
        return self.entries.shape

    def leading_square(self) -> np.ndarray:
        """The submatrix of the first len(cols) rows."""
        n = len(self.cols)
        if len(self.rows) < n:
            raise ParameterError("C has fewer rows than columns (t < 0)")
        return self.entries[:n]

    def apply(self, a) -> np.ndarray:
        return np.asarray(self.entries, dtype=object).dot(np.asarray(a, dtype=object)) % self.p


def build_sigma_matrix(sample: CISample) -> SigmaMatrix:
    params = sample.params
    rows, cols = row_index(params), col_index(params)
    C = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for r, (i, nu) in enumerate(rows):
        for col, (h, j) in enumerate(cols):
            mu = shifted(nu, j)
            if mu is not None:
                C[r, col] = sample.c[(i, h, mu)]
    return SigmaMatrix(rows, cols, C, sample.p)


def sigma_image(sample: CISample, a: dict) -> list[HomogPoly]:
    """sigma(a) computed by polynomial arithmetic: sum a[h,j] y_j p_i^(h)."""
    params, p = sample.params, sample.p
    k = params.k
    out = []
    for i, di in enumerate(params.d):
        acc = HomogPoly.zero(k + 1, di, p)
        for h in range(k + 1, params.m + 1):
            ph = sample.p_poly(i, h)
            for j in range(k + 1):
                coeff = a.get((h, j), 0)
                if coeff:
                    acc = acc + HomogPoly.variable(j, k + 1, p) * ph * coeff
        out.append(acc)
    return out


def sigma_image_vector(sample: CISample, a: dict) -> list[int]:
    vec = []
    for poly in sigma_image(sample, a):
        vec.extend(poly.coefficient_vector())
    return vec


def rank_ff(matrix, p: int) -> int:
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    return len(rref_mod_p(matrix, p)[1])


@dataclass(frozen=True)
class RigidityResult:
    rank: int
    nullity: int
    is_rigid: bool


def rigidity_check(sample: CISample) -> RigidityResult:
    C = build_sigma_matrix(sample)
    ncols = len(C.cols)
    rank = rank_ff(C.entries, sample.p)
    return RigidityResult(rank=rank, nullity=ncols - rank, is_rigid=rank == ncols)


# -- symbolic determinant of the leading square block ------------------------

@dataclass(frozen=True)
class DetReport:
    det_is_nonzero_poly: bool
    leading_monomial: tuple     # ((h, i, mu), exponent) pairs, ascending index
    leading_coeff: int
    num_terms: int
    size: int


def indeterminate_order(params: Parameters):
    """All c-indices as (h, i, mu), sorted ascending lexicographically."""
    return sorted((h, i, mu)
                  for i, di in enumerate(params.d)
                  for h in range(params.k + 1, params.m + 1)
                  for mu in monomials_lex(params.k + 1, di - 1))


def symbolic_leading_block(params: Parameters, row_order: str = ROW_ORDER):
    """The leading square block with entries as (h, i, mu) labels or None."""
    rows, cols = row_index(params, row_order), col_index(params)
    n = len(cols)
    if len(rows) < n:
        raise ParameterError("the leading square block needs t >= 0")
    if n > SYMBOLIC_CAP:
        raise CapExceededError(
            f"symbolic determinant of size {n} is out of tiny-scale range "
            f"(cap {SYMBOLIC_CAP})", size=n, cap=SYMBOLIC_CAP)
    block = []
    for i, nu in rows[:n]:
        row = []
        for h, j in cols:
            mu = shifted(nu, j)
            row.append(None if mu is None else (h, i, mu))
        block.append(row)
    return block


def symbolic_determinant(block, order) -> dict:
    """Expand det(block) over Z as {exponent tuple: coefficient}.

    Entries are indeterminate labels (or None for zero); ``order`` fixes the
    position of each label in the exponent tuples.
    """
    pos = {label: n for n, label in enumerate(order)}
    n = len(block)
    nonzero_rows = [[r for r in range(n) if block[r][col] is not None] for col in range(n)]
    poly: dict = {}

    def expand(col, used, perm):
        if col == n:
            sign = _perm_sign(perm)
            expo = [0] * len(order)
            for c, r in enumerate(perm):
                expo[pos[block[r][c]]] += 1
            key = tuple(expo)
            poly[key] = poly.get(key, 0) + sign
            if poly[key] == 0:
                del poly[key]
            return
        for r in nonzero_rows[col]:
            if not used >> r & 1:
                perm.append(r)
                expand(col + 1, used | 1 << r, perm)
                perm.pop()

    expand(0, 0, [])
    return poly


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symbolic_det_leading(params: Parameters, row_order: str = ROW_ORDER) -> DetReport:
    if t_invariant(params) < 0:
        raise ParameterError("symbolic determinant check needs t >= 0")
    block = symbolic_leading_block(params, row_order)
    order = indeterminate_order(params)
    poly = symbolic_determinant(block, order)
    if not poly:
        return DetReport(False, (), 0, 0, len(block))
    # larger exponent at the first differing (smallest) index wins: plain tuple max
    lead = max(poly)
    monomial = tuple((order[n], e) for n, e in enumerate(lead) if e)
    return DetReport(True, monomial, poly[lead], len(poly), len(block))
