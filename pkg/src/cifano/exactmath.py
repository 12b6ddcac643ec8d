"""
Exact arithmetic substrate.

Prime-field elements are plain Python ints in ``[0, p)``; `PrimeField`
bundles the modulus with the four field operations.  Binomials are exact
big integers.  `rref_mod_p` is the single Gaussian-elimination routine the
rest of the package builds on (ranks, canonical plane bases).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

# products of two residues must fit in int64
_INT64_SAFE_MODULUS = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3 * 10**24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a word-sized prime p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not is_prime(int(self.p)):
            raise ParameterError(f"modulus {self.p!r} is not prime")
        object.__setattr__(self, "p", int(self.p))

    def __call__(self, a: int) -> int:
        return int(a) % self.p

    def _check(self, a):
        if not 0 <= a < self.p:
            raise ParameterError(f"{a} is not a reduced element of F_{self.p}")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return a * b % self.p

    def neg(self, a: int) -> int:
        self._check(a)
        return -a % self.p

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)


def ff_arith(a: int, b: int | None, op: str, p: int) -> int:
    """Apply ``op`` in {'add', 'mul', 'inv', 'neg'} in F_p."""
    field = PrimeField(p)
    if op == "add":
        return field.add(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "inv":
        return field.inv(a)
    if op == "neg":
        return field.neg(a)
    raise ParameterError(f"unknown field operation {op!r}")


def binom(n: int, r: int) -> int:
    """Binomial coefficient with the convention binom(n, r) = 0 off 0 <= r <= n."""
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


def gaussian_binom(n: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^n."""
    if not 0 <= r <= n:
        raise ParameterError(f"gaussian_binom needs 0 <= r <= n, got n={n}, r={r}")
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _as_residues(matrix, p: int) -> np.ndarray:
    dtype = np.int64 if p < _INT64_SAFE_MODULUS else object
    a = np.array(matrix, dtype=object) % p
    return a.astype(dtype) if dtype is not object else a


def rref_mod_p(matrix, p: int):
    """Reduced row echelon form over F_p.

    Returns ``(R, pivots)`` where ``R`` has the same shape as the input and
    ``pivots`` lists pivot columns in increasing order.
    """
    R = _as_residues(matrix, p)
    if R.ndim != 2:
        raise ParameterError("rref_mod_p expects a 2-d matrix")
    nrows, ncols = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = R[row] * pow(int(R[row, col]), -1, p) % p
        others = np.nonzero(R[:, col])[0]
        others = others[others != row]
        if others.size:
            R[others] = (R[others] - np.outer(R[others, col], R[row])) % p
        pivots.append(col)
        row += 1
    return R, pivots
