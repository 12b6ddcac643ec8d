"""
Random complete intersections through the standard k-plane.

The plane is Pi = {y_{k+1} = ... = y_m = 0}.  Each equation is written as

    g_i = sum_{h > k} y_h * p_i^(h)(y_0..y_k) + r_i,     r_i in (I_Pi^2)_{d_i}

and every coefficient is an independent uniform draw from F_p.

Draw order (part of the certificate contract): a single PCG64 stream seeded
with ``[seed, attempt]`` first yields all p-coefficients c[i, h, mu] with i
ascending, then h ascending, then mu in descending lex; then, for i
ascending, the coefficients of r_i over the (I_Pi^2)_{d_i} monomial basis in
descending lex.  ``attempt`` starts at 0 and is bumped only if some g_i comes
out as the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .exactmath import PrimeField
from .invariants import Parameters
from .polyring import HomogPoly, ideal_plane_bases, monomials_lex

MAX_ATTEMPTS = 64


def c_index(params: Parameters):
    """Index triples (i, h, mu) of the p-coefficients, in draw order.

    ``i`` is 0-based; ``h`` is the actual variable index k+1..m.
    """
    m, k = params.m, params.k
    return [(i, h, mu)
            for i, di in enumerate(params.d)
            for h in range(k + 1, m + 1)
            for mu in monomials_lex(k + 1, di - 1)]


def r_bases(params: Parameters):
    return [ideal_plane_bases(di, params.m, params.k)[1] for di in params.d]


@dataclass(frozen=True, eq=False)
class CISample:
    params: Parameters
    p: int
    seed: int
    attempt: int
    c: dict           # (i, h, mu) -> residue
    r: tuple          # HomogPoly per equation, in m+1 variables
    g: tuple          # assembled equations

    def p_poly(self, i: int, h: int) -> HomogPoly:
        """The form p_i^(h) in the plane coordinates y_0..y_k."""
        k = self.params.k
        di = self.params.d[i]
        return HomogPoly(k + 1, di - 1, self.p,
                         {mu: self.c[(i, h, mu)]
                          for mu in monomials_lex(k + 1, di - 1)})

    def coefficient_count(self) -> int:
        return len(self.c) + sum(len(b) for b in r_bases(self.params))


def _lift(mu, m, k):
    """Plane monomial y^mu (k+1 vars) as an exponent tuple in m+1 vars."""
    return tuple(mu) + (0,) * (m - k)


def assemble_g(c: dict, r, params: Parameters, p: int) -> tuple:
    m, k = params.m, params.k
    out = []
    for i, di in enumerate(params.d):
        terms: dict = {}
        for h in range(k + 1, m + 1):
            for mu in monomials_lex(k + 1, di - 1):
                try:
                    val = c[(i, h, mu)]
                except KeyError:
                    raise ParameterError(f"missing coefficient c[{i}, {h}, {mu}]") from None
                key = list(_lift(mu, m, k))
                key[h] += 1
                terms[tuple(key)] = val
        g_i = HomogPoly(m + 1, di, p, terms)
        if i >= len(r):
            raise ParameterError(f"missing residual polynomial r[{i}]")
        out.append(g_i + r[i])
    return tuple(out)


def _draw(params, p, seed, attempt):
    rng = np.random.Generator(np.random.PCG64([seed, attempt]))
    cidx = c_index(params)
    bases = r_bases(params)
    total = len(cidx) + sum(len(b) for b in bases)
    values = [int(v) for v in rng.integers(0, p, size=total, dtype=np.int64)]
    c = dict(zip(cidx, values[:len(cidx)]))
    pos = len(cidx)
    r = []
    for di, basis in zip(params.d, bases):
        chunk = values[pos:pos + len(basis)]
        pos += len(basis)
        r.append(HomogPoly(params.m + 1, di, p, dict(zip(basis, chunk))))
    return c, tuple(r)


def sample_ci(params: Parameters, p: int, seed: int) -> CISample:
    """A seeded uniform sample of complete intersections containing Pi."""
    PrimeField(p)
    if seed < 0:
        raise ParameterError("seed must be non-negative")
    for attempt in range(MAX_ATTEMPTS):
        c, r = _draw(params, p, seed, attempt)
        g = assemble_g(c, r, params, p)
        if all(not gi.is_zero() for gi in g):
            return CISample(params, p, seed, attempt, c, r, g)
    raise RuntimeError("sampler produced zero equations on every attempt")


def sample_from_tables(params: Parameters, p: int, c: dict, r) -> CISample:
    """Build a sample from explicit coefficients (tests and hand examples)."""
    return CISample(params, p, seed=-1, attempt=0, c=dict(c), r=tuple(r),
                    g=assemble_g(c, r, params, p))


def one_hot_sample(params: Parameters, p: int, entries: dict) -> CISample:
    """All coefficients zero except the given c-entries; r = 0."""
    c = {idx: 0 for idx in c_index(params)}
    for idx, val in entries.items():
        if idx not in c:
            raise ParameterError(f"{idx} is not a coefficient index for {params}")
        c[idx] = val
    r = [HomogPoly.zero(params.m + 1, di, p) for di in params.d]
    return sample_from_tables(params, p, c, r)
