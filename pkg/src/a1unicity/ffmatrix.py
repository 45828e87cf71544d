"""Exact dense linear algebra over the prime field GF(p).

This module is the ground truth for every Jordan-type claim in the
package: matrices are numpy int64 arrays with entries reduced to
canonical representatives 0..p-1, and rank is computed by Gaussian
elimination in exact modular arithmetic.  No floating point anywhere.

Only the prime subfield is ever needed: all matrices built here (Jordan
blocks, Kronecker products, symmetric powers of the standard unipotent)
have entries in GF(p), and the Frobenius endomorphism fixes them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyMatrixError,
    NotOrderPError,
    NotPrimeError,
    OrderExceedsPError,
    ShapeError,
)

# Dense matrices only; desk-scale checks stay far below this.
MAX_DIMENSION = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p) for a prime p >= 2."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not a prime")

    def reduce(self, a) -> np.ndarray:
        """Return a as an int64 array with entries in 0..p-1."""
        return np.asarray(a, dtype=np.int64) % self.p

    def inverse(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p)")
        return pow(a, self.p - 2, self.p)


def identity(n: int) -> np.ndarray:
    if n <= 0:
        raise EmptyMatrixError("identity of size 0 requested")
    return np.eye(n, dtype=np.int64)


def unipotent_jordan_block(field: PrimeField, m: int) -> np.ndarray:
    """Full m x m unipotent Jordan block over GF(p).

    The block has 1 on the diagonal and the superdiagonal.  Such a block
    has multiplicative order p exactly when 2 <= m <= p, so sizes above p
    are rejected.
    """
    if m == 0:
        raise EmptyMatrixError("Jordan block of size 0 requested")
    if m < 0:
        raise ShapeError(f"negative block size {m}")
    if m > field.p:
        raise OrderExceedsPError(
            f"block size {m} > p = {field.p} forces order p^2 or higher"
        )
    a = identity(m)
    for i in range(m - 1):
        a[i, i + 1] = 1
    return a


def kronecker(a: np.ndarray, b: np.ndarray, field: PrimeField) -> np.ndarray:
    """Kronecker product reduced mod p."""
    a = field.reduce(a)
    b = field.reduce(b)
    if a.shape[0] * b.shape[0] > MAX_DIMENSION:
        raise ShapeError(
            f"kronecker result dimension {a.shape[0] * b.shape[0]} exceeds "
            f"the configured bound {MAX_DIMENSION}"
        )
    return np.kron(a, b) % field.p


def matmul(a: np.ndarray, b: np.ndarray, field: PrimeField) -> np.ndarray:
    return (field.reduce(a) @ field.reduce(b)) % field.p


def block_diagonal(blocks, field: PrimeField) -> np.ndarray:
    """Assemble square blocks into one block-diagonal matrix mod p."""
    blocks = [field.reduce(b) for b in blocks]
    if not blocks:
        raise EmptyMatrixError("no blocks given")
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.int64)
    at = 0
    for b in blocks:
        k = b.shape[0]
        out[at : at + k, at : at + k] = b
        at += k
    return out


def rank(a: np.ndarray, field: PrimeField) -> int:
    """Rank over GF(p) by Gaussian elimination.

    Row operations are vectorised with numpy but all arithmetic is exact
    int64 mod p.
    """
    m = field.reduce(a).copy()
    if m.ndim != 2:
        raise ShapeError("rank expects a 2-d matrix")
    rows, cols = m.shape
    p = field.p
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivots = np.nonzero(m[r:, c])[0]
        if pivots.size == 0:
            continue
        i = r + int(pivots[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * field.inverse(m[r, c])) % p
        below = np.nonzero(m[r + 1 :, c])[0]
        if below.size:
            idx = below + r + 1
            m[idx] = (m[idx] - np.outer(m[idx, c], m[r])) % p
        r += 1
    return r


def _multiply_linear_power(
    coeffs: np.ndarray, alpha: int, beta: int, k: int, p: int
) -> np.ndarray:
    """Multiply a binary-form coefficient vector by (alpha*x + beta*y)^k.

    Coefficients are indexed by y-degree.
    """
    for _ in range(k):
        new = np.zeros(coeffs.size + 1, dtype=np.int64)
        new[: coeffs.size] = (alpha * coeffs) % p
        new[1:] = (new[1:] + beta * coeffs) % p
        coeffs = new
    return coeffs


def sym_power(a: np.ndarray, c: int, field: PrimeField) -> np.ndarray:
    """Action induced on the degree-c part of the symmetric algebra on two
    generators, in the monomial basis x^c, x^(c-1)y, ..., y^c.

    For the standard unipotent u = [[1,1],[0,1]] this realizes the
    irreducible module of highest weight c when c <= p-1, and for
    p <= c <= 2p-2 its Jordan type matches the Weyl module of highest
    weight c (blocks of sizes p and c-p+1).
    """
    a = field.reduce(a)
    if a.shape != (2, 2):
        raise ShapeError(f"sym_power expects a 2x2 matrix, got {a.shape}")
    if c < 0:
        raise ShapeError(f"negative exponent {c}")
    p = field.p
    n = c + 1
    out = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        # image of x^(c-j) y^j under x -> a00 x + a10 y, y -> a01 x + a11 y
        poly = np.ones(1, dtype=np.int64)
        poly = _multiply_linear_power(poly, int(a[0, 0]), int(a[1, 0]), c - j, p)
        poly = _multiply_linear_power(poly, int(a[0, 1]), int(a[1, 1]), j, p)
        out[: poly.size, j] = poly
    return out


def jordan_block_sizes(m: np.ndarray, field: PrimeField) -> tuple[int, ...]:
    """Partition of Jordan block sizes of a unipotent matrix of order <= p.

    Computed from the rank sequence of N = m - I: the number of blocks of
    size >= s equals rank(N^(s-1)) - rank(N^s).  Raises NotOrderPError
    unless N^p = 0 (equivalently, m is unipotent with all blocks <= p).
    """
    a = field.reduce(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError("jordan type needs a square matrix")
    n = a.shape[0]
    nil = (a - identity(n)) % field.p
    ranks = [n]
    power = nil
    s = 1
    while True:
        r = rank(power, field)
        if r >= ranks[-1] and r > 0:
            # rank sequence stabilised above zero: not nilpotent
            raise NotOrderPError("matrix is not unipotent")
        ranks.append(r)
        if r == 0:
            break
        if s == field.p:
            raise NotOrderPError(
                f"(m - 1)^{field.p} != 0: element order exceeds p = {field.p}"
            )
        power = (power @ nil) % field.p
        s += 1
    at_least = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    at_least.append(0)
    blocks: list[int] = []
    for size in range(len(at_least) - 1, 0, -1):
        blocks.extend([size] * (at_least[size - 1] - at_least[size]))
    return tuple(sorted(blocks, reverse=True))
