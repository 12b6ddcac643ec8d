"""
Closed-form invariants of complete intersections through a k-plane.

Every dimension count is exact integer arithmetic.  Identities between them
(``dim_J == dim_S_star - t`` and friends) are checked by computing each
side from its own formula; see `identity_failures`.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import ParameterError
from .exactmath import binom


@dataclass(frozen=True)
class Parameters:
    """Ambient dimension m, plane dimension k and multidegree d = (d_1..d_s)."""

    m: int
    k: int
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        problems = self.violations()
        if problems:
            raise ParameterError("; ".join(problems))

    @property
    def s(self) -> int:
        return len(self.d)

    def violations(self) -> list[str]:
        m, k, d = self.m, self.k, self.d
        s = len(d)
        out = []
        if not 1 <= s <= m - 2:
            out.append(f"need 1 <= s <= m - 2, got s={s}, m={m}")
        if any(x < 1 for x in d):
            out.append(f"degrees must be positive, got {d}")
        elif math.prod(d) <= 2:
            out.append(f"need prod(d) > 2 (no linear spaces or quadrics), got {d}")
        if not 1 <= k <= m - s:
            out.append(f"need 1 <= k <= m - s, got k={k}, m - s={m - s}")
        return out

    @classmethod
    def is_valid(cls, m, k, d) -> bool:
        try:
            cls(m, k, d)
        except ParameterError:
            return False
        return True

    def to_json(self) -> dict:
        return {"m": self.m, "k": self.k, "d": list(self.d)}


def t_invariant(params: Parameters) -> int:
    m, k = params.m, params.k
    return sum(binom(di + k, k) for di in params.d) - (k + 1) * (m - k)


def delta_h(params: Parameters, h: int) -> int:
    """The two-plane excess delta_h; h = -1 (skew planes) gives t."""
    m, k = params.m, params.k
    if not -1 <= h <= k - 1:
        raise ParameterError(f"h must lie in [-1, {k - 1}], got {h}")
    return (sum(binom(di + k, k) for di in params.d)
            - sum(binom(di + h, h) for di in params.d)
            - (k - h) * (m + h + 1 - k))


def D_value(x: int, k: int, h: int) -> Fraction:
    if h == k:
        raise ParameterError("D is undefined for h = k")
    if not 0 <= h < k:
        raise ParameterError(f"need 0 <= h < k, got h={h}, k={k}")
    return (Fraction(h + 1, k - h) * binom(x + k, k)
            - Fraction(k + 1, k - h) * binom(x + h, h))


def dim_S(m: int, d: int) -> int:
    """Dimension of the space of degree-d forms on P^m."""
    return binom(d + m, m)


def h0_plane(m: int, k: int, d: int) -> int:
    """Degree-d forms on P^m vanishing on a k-plane."""
    return dim_S(m, d) - binom(d + k, k)


def h0_two_planes(m: int, k: int, h: int, d: int) -> int:
    """Degree-d forms vanishing on two k-planes meeting in a P^h."""
    if d < 1:
        raise ParameterError("d must be a positive integer")
    return dim_S(m, d) - 2 * binom(d + k, k) + binom(d + h, h)


def dim_grassmannian(k: int, m: int) -> int:
    return (k + 1) * (m - k)


def dim_G2h(m: int, k: int, h: int) -> int:
    """Pairs of k-planes in P^m meeting exactly in a P^h."""
    return dim_grassmannian(k, m) + (h + 1) * (k - h) + (k - h) * (m - k)


@dataclass(frozen=True)
class DimensionTable:
    dim_S_star: int
    dim_J: int
    dim_G2h: int
    dim_Th: int
    h0_plane: tuple
    h0_two_planes: tuple

    def to_json(self) -> dict:
        out = asdict(self)
        out["h0_plane"] = list(self.h0_plane)
        out["h0_two_planes"] = list(self.h0_two_planes)
        return out


def dim_formulas(params: Parameters, h: int) -> DimensionTable:
    m, k, d = params.m, params.k, params.d
    if not -1 <= h <= k - 1:
        raise ParameterError(f"h must lie in [-1, {k - 1}], got {h}")
    dim_S_star = sum(dim_S(m, di) for di in d)
    planes = tuple(h0_plane(m, k, di) for di in d)
    pairs = tuple(h0_two_planes(m, k, h, di) for di in d)
    g2h = dim_G2h(m, k, h)
    return DimensionTable(
        dim_S_star=dim_S_star,
        dim_J=dim_grassmannian(k, m) + sum(planes),
        dim_G2h=g2h,
        dim_Th=g2h + sum(pairs),
        h0_plane=planes,
        h0_two_planes=pairs,
    )


@dataclass(frozen=True)
class RegimeReport:
    t: int
    w_is_proper: bool
    smooth_possible: bool
    expected_fano_dim: int
    expected_sing_dim: int
    w_codim: int

    def to_json(self) -> dict:
        return asdict(self)


def expected_sing_dim(params: Parameters) -> int:
    return max(-1, 2 * params.k + params.s - params.m - 1)


def classify(params: Parameters) -> RegimeReport:
    t = t_invariant(params)
    return RegimeReport(
        t=t,
        w_is_proper=t > 0,
        smooth_possible=params.s <= params.m - 2 * params.k,
        expected_fano_dim=-t if t <= 0 else 0,
        expected_sing_dim=expected_sing_dim(params),
        w_codim=t if t > 0 else 0,
    )


def parameter_grid(m_max=10, s_max=4, d_max=6, m_min=3):
    """All valid Parameters with m <= m_max, len(d) <= s_max, d_i <= d_max.

    Multidegrees are taken up to reordering (non-decreasing tuples).
    """
    for m in range(m_min, m_max + 1):
        for s in range(1, min(s_max, m - 2) + 1):
            for d in combinations_with_replacement(range(1, d_max + 1), s):
                if math.prod(d) <= 2:
                    continue
                for k in range(1, m - s + 1):
                    yield Parameters(m, k, d)


def lemma_scan(m_max=10, s_max=4, d_max=6, grid=None):
    """Search for (params, h) with delta_h <= 0 < t, 0 <= h < k.

    ``grid`` overrides the default grid with any iterable of Parameters.
    """
    if grid is None:
        grid = parameter_grid(m_max, s_max, d_max)
    found = []
    for params in grid:
        if math.prod(params.d) <= 2:
            continue
        t = t_invariant(params)
        if t <= 0:
            continue
        for h in range(params.k):
            if delta_h(params, h) <= 0:
                found.append((params, h))
    return found


def identity_failures(params: Parameters) -> list[str]:
    """Every dimension identity that fails at ``params`` (empty when all hold)."""
    out = []
    t = t_invariant(params)
    if delta_h(params, -1) != t:
        out.append("delta_{-1} != t")
    for h in range(-1, params.k):
        table = dim_formulas(params, h)
        if h == -1 and table.dim_J != table.dim_S_star - t:
            out.append("dim_J != dim_S_star - t")
        if h >= 0 and table.dim_Th != table.dim_J - delta_h(params, h):
            out.append(f"dim_T{h} != dim_J - delta_{h}")
    report = classify(params)
    if report.smooth_possible != (report.expected_sing_dim == -1):
        out.append("smooth_possible disagrees with expected_sing_dim")
    return out
