"""Exact integer linear algebra.

Two determinant engines:

* ``det_bareiss``: fraction-free Gaussian elimination over Z.  Intermediate
  entries are minors of the input, so growth is polynomial, but the cubic
  big-integer cost limits it to a few hundred rows.
* ``det_crt``: rigorous multi-modular determinant.  The result is
  reconstructed by CRT from word-size primes whose product exceeds an
  integer Hadamard bound, so it is exact, not probabilistic.  Elimination
  mod p only touches rows/columns with nonzero support, which makes banded
  matrices (reduced Laplacians of circulant covers) cheap.
"""

from __future__ import annotations

import numpy as np

# Largest matrix handled by the pure Bareiss path inside spanning-tree
# counting; beyond this the CRT engine takes over.
BAREISS_DEFAULT_MAX = 192

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE: list[int] = []


def crt_primes(count: int) -> list[int]:
    """Deterministic list of 31-bit primes, largest first."""
    cand = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else (1 << 31) - 1
    while len(_PRIME_CACHE) < count:
        if _is_prime(cand):
            _PRIME_CACHE.append(cand)
        cand -= 2
    return _PRIME_CACHE[:count]


def det_bareiss(matrix: list[list[int]]) -> int:
    """Exact determinant by fraction-free elimination.  Non-destructive."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            if mik == 0:
                for j in range(k + 1, n):
                    row_i[j] = (pk * row_i[j]) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (pk * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def _det_mod_p(master: np.ndarray, p: int) -> int:
    """Determinant mod p by elimination that skips zero rows/columns."""
    m = (master % p).astype(np.int64)
    n = m.shape[0]
    det = 1
    for k in range(n):
        col = m[k:, k]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            return 0
        if nz[0] != 0:
            r = k + int(nz[0])
            m[[k, r], k:] = m[[r, k], k:]
            det = p - det
        nz = nz[1:]
        piv = int(m[k, k])
        det = det * piv % p
        if nz.size:
            rows = k + nz
            inv = pow(piv, -1, p)
            f = (m[rows, k] * inv) % p
            cols = k + np.flatnonzero(m[k, k:])
            block = m[np.ix_(rows, cols)]
            m[np.ix_(rows, cols)] = (block - f[:, None] * m[k, cols][None, :]) % p
    return det


def hadamard_bound(matrix: np.ndarray) -> int:
    """Integer B with |det| <= B (row-norm Hadamard bound)."""
    prod = 1
    for row in matrix:
        s = int(np.dot(row.astype(object), row.astype(object)))
        if s == 0:
            return 0
        prod *= s
    return _isqrt_ceil(prod)


def _isqrt_ceil(n: int) -> int:
    import math
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def det_crt(matrix: np.ndarray, nonnegative: bool = False) -> int:
    """Exact determinant via CRT over enough word-size primes.

    ``nonnegative=True`` asserts det >= 0 (e.g. reduced Laplacians), which
    halves the required modulus range.
    """
    n = matrix.shape[0]
    if n == 0:
        return 1
    bound = hadamard_bound(matrix)
    if bound == 0:
        return 0
    target = bound + 1 if nonnegative else 2 * bound + 1
    primes = []
    modulus = 1
    idx = 0
    while modulus <= target:
        primes = crt_primes(idx + 1)
        modulus *= primes[idx]
        idx += 1
    primes = primes[:idx]
    residue = 0
    modulus = 1
    for p in primes:
        rp = _det_mod_p(matrix, p)
        # incremental CRT
        delta = (rp - residue) % p
        residue = residue + modulus * (delta * pow(modulus % p, -1, p) % p)
        modulus *= p
    if not nonnegative and residue > modulus // 2:
        residue -= modulus
    if abs(residue) > bound:
        raise ArithmeticError("CRT determinant exceeded its Hadamard bound")
    return residue
