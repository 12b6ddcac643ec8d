"""
Dense homogeneous polynomials over a prime field.

A monomial y_0^a_0 ... y_n^a_n is its exponent tuple ``(a_0, ..., a_n)``.
The only monomial order used anywhere is the standard lexicographic order
on exponent tuples, which for tuples of equal length is Python's tuple
comparison.  Bases are listed in *descending* lex order, so for two
variables of degree 2 the basis is ``y0^2, y0*y1, y1^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ParameterError
from .exactmath import binom, rref_mod_p


@lru_cache(maxsize=None)
def _monomials(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    if num_vars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in _monomials(num_vars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


def monomials_lex(num_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All degree-``degree`` monomials in ``num_vars`` variables, descending lex."""
    if num_vars < 1:
        raise ParameterError("need at least one variable")
    if degree < 0:
        raise ParameterError(f"negative degree {degree}")
    return list(_monomials(num_vars, degree))


def ideal_plane_bases(d: int, m: int, k: int):
    """Monomial bases of (I)_d and (I^2)_d for I = (y_{k+1}, ..., y_m) in P^m.

    Both lists are sub-lists of ``monomials_lex(m + 1, d)``, so they inherit
    the descending lex order.
    """
    if not 0 <= k < m:
        raise ParameterError(f"need 0 <= k < m, got k={k}, m={m}")
    if d < 1:
        raise ParameterError(f"degree must be positive, got {d}")
    in_ideal, in_square = [], []
    for mu in monomials_lex(m + 1, d):
        normal_degree = sum(mu[k + 1:])
        if normal_degree >= 1:
            in_ideal.append(mu)
        if normal_degree >= 2:
            in_square.append(mu)
    expected = binom(d + m, m) - binom(d + k, k)
    assert len(in_ideal) == expected
    return in_ideal, in_square


def _format_monomial(mu) -> str:
    parts = []
    for j, e in enumerate(mu):
        if e == 1:
            parts.append(f"y{j}")
        elif e > 1:
            parts.append(f"y{j}^{e}")
    return "*".join(parts)


@dataclass(frozen=True, eq=False)
class HomogPoly:
    """A homogeneous polynomial of fixed degree in ``num_vars`` variables over F_p.

    ``coeffs`` maps exponent tuples to nonzero residues; it is normalised at
    construction and must not be mutated afterwards.
    """

    num_vars: int
    degree: int
    p: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mu, c in self.coeffs.items():
            mu = tuple(int(e) for e in mu)
            if len(mu) != self.num_vars or sum(mu) != self.degree or min(mu) < 0:
                raise ParameterError(
                    f"monomial {mu} does not have degree {self.degree} "
                    f"in {self.num_vars} variables")
            c = int(c) % self.p
            if c:
                clean[mu] = (clean.get(mu, 0) + c) % self.p
                if not clean[mu]:
                    del clean[mu]
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, num_vars, degree, p):
        return cls(num_vars, degree, p, {})

    @classmethod
    def variable(cls, j, num_vars, p):
        mu = [0] * num_vars
        mu[j] = 1
        return cls(num_vars, 1, p, {tuple(mu): 1})

    @classmethod
    def from_vector(cls, vector, num_vars, degree, p):
        """Inverse of `coefficient_vector`."""
        basis = monomials_lex(num_vars, degree)
        if len(vector) != len(basis):
            raise ParameterError("coefficient vector has the wrong length")
        return cls(num_vars, degree, p, dict(zip(basis, (int(v) for v in vector))))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.p != other.p or self.num_vars != other.num_vars:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    __hash__ = None

    def terms(self):
        """(monomial, coefficient) pairs in descending lex order."""
        return sorted(self.coeffs.items(), reverse=True)

    def coefficient_vector(self) -> list[int]:
        return [self.coeffs.get(mu, 0)
                for mu in monomials_lex(self.num_vars, self.degree)]

    def _compatible(self, other):
        if self.p != other.p or self.num_vars != other.num_vars:
            raise ParameterError("polynomials live in different rings")

    def __add__(self, other):
        self._compatible(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ParameterError("cannot add forms of different degrees")
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, 0) + c
        return HomogPoly(self.num_vars, self.degree, self.p, out)

    def __neg__(self):
        return HomogPoly(self.num_vars, self.degree, self.p,
                         {mu: -c for mu, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return HomogPoly(self.num_vars, self.degree, self.p,
                             {mu: c * int(other) for mu, c in self.coeffs.items()})
        self._compatible(other)
        out: dict = {}
        for mu, a in self.coeffs.items():
            for nu, b in other.coeffs.items():
                key = tuple(x + y for x, y in zip(mu, nu))
                out[key] = (out.get(key, 0) + a * b) % self.p
        return HomogPoly(self.num_vars, self.degree + other.degree, self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = HomogPoly(self.num_vars, 0, self.p, {(0,) * self.num_vars: 1})
        for _ in range(e):
            result = result * self
        return result

    def partial_derivative(self, j: int) -> "HomogPoly":
        if not 0 <= j < self.num_vars:
            raise ParameterError(f"no variable y{j} in {self.num_vars} variables")
        if self.degree == 0:
            return HomogPoly.zero(self.num_vars, 0, self.p)
        out = {}
        for mu, c in self.coeffs.items():
            if mu[j]:
                nu = list(mu)
                nu[j] -= 1
                out[tuple(nu)] = c * mu[j]
        return HomogPoly(self.num_vars, self.degree - 1, self.p, out)

    def restrict_to_plane(self, k: int) -> "HomogPoly":
        """Set y_{k+1}, ..., y_n to zero; the result lives in y_0..y_k."""
        out = {mu[:k + 1]: c for mu, c in self.coeffs.items() if not any(mu[k + 1:])}
        return HomogPoly(k + 1, self.degree, self.p, out)

    def substitute_linear(self, B, check_rank: bool = True) -> "HomogPoly":
        """Pull back along y = z . B for a (r x num_vars) matrix ``B``.

        The result is a form of the same degree in the r variables z.
        """
        B = np.asarray(B, dtype=object) % self.p
        r, ncols = B.shape
        if ncols != self.num_vars:
            raise ParameterError(
                f"substitution matrix has {ncols} columns, expected {self.num_vars}")
        if check_rank and len(rref_mod_p(B, self.p)[1]) < r:
            raise ParameterError("substitution matrix is not of full row rank")
        forms = [HomogPoly(r, 1, self.p,
                           {tuple(int(a == s) for a in range(r)): int(B[s, j])
                            for s in range(r)})
                 for j in range(ncols)]
        powers: dict = {}

        def power(j, e):
            if (j, e) not in powers:
                powers[(j, e)] = forms[j] if e == 1 else power(j, e - 1) * forms[j]
            return powers[(j, e)]

        acc: dict = {}
        one = HomogPoly(r, 0, self.p, {(0,) * r: 1})
        for mu, c in self.coeffs.items():
            term = one
            for j, e in enumerate(mu):
                if e:
                    term = term * power(j, e)
                    if term.is_zero():
                        break
            for nu, b in term.coeffs.items():
                acc[nu] = (acc.get(nu, 0) + c * b) % self.p
        return HomogPoly(r, self.degree, self.p, acc)

    def evaluate(self, point) -> int:
        total = 0
        for mu, c in self.coeffs.items():
            term = c
            for x, e in zip(point, mu):
                term = term * pow(int(x), e, self.p) % self.p
            total += term
        return total % self.p

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at every row of an int array of residues (p < 2**31)."""
        points = np.asarray(points, dtype=np.int64) % self.p
        n = points.shape[0]
        out = np.zeros(n, dtype=np.int64)
        pow_cache: dict = {}

        def colpow(j, e):
            if (j, e) not in pow_cache:
                if e == 0:
                    pow_cache[(j, e)] = np.ones(n, dtype=np.int64)
                else:
                    pow_cache[(j, e)] = colpow(j, e - 1) * points[:, j] % self.p
            return pow_cache[(j, e)]

        for mu, c in self.coeffs.items():
            term = np.full(n, c, dtype=np.int64)
            for j, e in enumerate(mu):
                if e:
                    term = term * colpow(j, e) % self.p
            out = (out + term) % self.p
        return out

    def render(self) -> str:
        """Canonical text form, terms in descending lex order."""
        if self.is_zero():
            return "0"
        parts = []
        for mu, c in self.terms():
            mono = _format_monomial(mu)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HomogPoly[F_{self.p}, deg {self.degree}]({self.render()})"


def substitute_linear(g: HomogPoly, B) -> HomogPoly:
    return g.substitute_linear(B)


def partial_derivative(g: HomogPoly, j: int) -> HomogPoly:
    return g.partial_derivative(j)
