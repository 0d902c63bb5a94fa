"""Dense univariate polynomials over arbitrary-precision integers.

Polynomials are plain lists of int coefficients in ascending degree,
always kept trimmed (no trailing zeros).  The zero polynomial is the
empty list and its degree is the sentinel ``NEG_INF``.
"""

from __future__ import annotations

import math
from fractions import Fraction

NEG_INF = float("-inf")

BigPoly = list  # list[int], ascending coefficients


class BudgetExceededError(RuntimeError):
    """Raised when an exact computation exceeds its coefficient-size budget."""


def trim(p: list[int]) -> list[int]:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def degree(p: list[int]):
    """Degree of ``p``; NEG_INF for the zero polynomial."""
    return len(p) - 1 if p else NEG_INF


def leading(p: list[int]) -> int:
    if not p:
        raise ValueError("zero polynomial has no leading coefficient")
    return p[-1]


def add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: list[int]) -> list[int]:
    return [-c for c in p]


def sub(p: list[int], q: list[int]) -> list[int]:
    return add(p, neg(q))


def scale(p: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    return [c * a for a in p]


def shift(p: list[int], k: int) -> list[int]:
    """Multiply by y**k."""
    if not p:
        return []
    return [0] * k + list(p)


_KARATSUBA_CUTOFF = 32


def mul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    if min(len(p), len(q)) < _KARATSUBA_CUTOFF:
        return _mul_school(p, q)
    return _mul_kronecker(p, q)


def _mul_school(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def _mul_kronecker(p, q):
    # Pack coefficients into one big integer (evaluation at 2**b), multiply,
    # unpack with an offset so no borrow propagation is needed.
    mp = max(abs(c) for c in p)
    mq = max(abs(c) for c in q)
    b = (mp.bit_length() + mq.bit_length()
         + min(len(p), len(q)).bit_length() + 2)
    b = ((b + 7) // 8) * 8
    prod = _pack(p, b) * _pack(q, b)
    nout = len(p) + len(q) - 1
    half = 1 << (b - 1)
    ones = ((1 << (b * nout)) - 1) // ((1 << b) - 1)
    prod += half * ones
    raw = prod.to_bytes(nout * (b // 8) + 16, "little")
    w = b // 8
    out = [int.from_bytes(raw[i * w:(i + 1) * w], "little") - half
           for i in range(nout)]
    return trim(out)


def _pack(p, b):
    pos = sum(c << (b * i) for i, c in enumerate(p) if c > 0)
    negv = sum((-c) << (b * i) for i, c in enumerate(p) if c < 0)
    return pos - negv


def pow_(p: list[int], e: int) -> list[int]:
    if e < 0:
        raise ValueError("negative exponent")
    out = [1]
    base = list(p)
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out


def evaluate(p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: list[int]) -> list[int]:
    return trim([i * c for i, c in enumerate(p)][1:])


def content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def divexact_scalar(p: list[int], c: int) -> list[int]:
    out = []
    for a in p:
        q, r = divmod(a, c)
        if r:
            raise ArithmeticError("inexact scalar division of polynomial")
        out.append(q)
    return out


def divmod_exact(p: list[int], d: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of p by d where every division by lc(d) is exact.

    Suitable for monic d or when exact divisibility is known (e.g. computing
    cyclotomic polynomials from y**n - 1).
    """
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dd = len(d) - 1
    lc = d[-1]
    q = [0] * max(len(p) - dd, 0)
    for k in range(len(r) - 1 - dd, -1, -1):
        c = r[k + dd]
        if c == 0:
            continue
        cq, rem = divmod(c, lc)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = cq
        for i, dc in enumerate(d):
            r[k + i] -= cq * dc
    return trim(q), trim(r)


def prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a mod b."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise ValueError("prem requires deg a >= deg b")
    lc = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        for i in range(len(r)):
            r[i] *= lc
        if top:
            for i, bc in enumerate(b):
                r[k + i] -= top * bc
        r[db + k] = 0
    return trim(r)


def resultant(a: list[int], b: list[int], max_coeff_bits: int | None = None) -> int:
    """Resultant of two integer polynomials via the subresultant PRS.

    Fraction-free (Collins/Brown); intermediate coefficient sizes stay at
    the level of Sylvester-matrix minors.  Raises BudgetExceededError if a
    coefficient exceeds ``max_coeff_bits`` bits.
    """
    a, b = trim(list(a)), trim(list(b))
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0 and db == 0:
        return 1
    sign = 1
    if da < db:
        a, b = b, a
        if (da * db) % 2:
            sign = -sign
        da, db = db, da
    if db == 0:
        return sign * b[0] ** da
    ca, cb = content(a), content(b)
    a = divexact_scalar(a, ca)
    b = divexact_scalar(b, cb)
    acc = sign * ca ** db * cb ** da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2) and (db % 2):
            acc = -acc
        r = prem(a, b)
        if not r:
            return 0
        a = b
        b = divexact_scalar(r, g * h ** delta)
        if max_coeff_bits is not None:
            bits = max(abs(c).bit_length() for c in b)
            if bits > max_coeff_bits:
                raise BudgetExceededError(
                    f"resultant coefficient reached {bits} bits "
                    f"(budget {max_coeff_bits})")
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            hq, hr = divmod(g ** delta, h ** (delta - 1))
            if hr:
                raise ArithmeticError("subresultant PRS bookkeeping failed")
            h = hq
        if len(b) - 1 == 0:
            break
    da = len(a) - 1
    num = b[0] ** da
    if da >= 1:
        q, rem = divmod(num, h ** (da - 1))
        if rem:
            raise ArithmeticError("subresultant PRS bookkeeping failed")
        num = q
    return acc * num


def interpolate(points: list[tuple[int, int]]) -> list[int]:
    """Lagrange interpolation through integer points, asserting an integer
    polynomial results."""
    k = len(points)
    xs = [x for x, _ in points]
    if len(set(xs)) != k:
        raise ValueError("interpolation nodes must be distinct")
    # master product W(y) = prod (y - xj), then peel one root per node
    master = [1]
    for xj in xs:
        nxt = [0] * (len(master) + 1)
        for i, a in enumerate(master):
            nxt[i] -= a * xj
            nxt[i + 1] += a
        master = nxt
    coeffs = [Fraction(0)] * k
    for xi, yi in points:
        if yi == 0:
            continue
        # synthetic division of master by (y - xi): quotient has degree k-1
        quot = [0] * k
        carry = master[k]
        for j in range(k - 1, -1, -1):
            quot[j] = carry
            carry = master[j] + xi * carry
        denom = evaluate(quot, xi)  # prod_{j != i} (xi - xj)
        w = Fraction(yi, denom)
        for i, c in enumerate(quot):
            if c:
                coeffs[i] += w * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer "
                                  "coefficient; degree bound too small?")
        out.append(int(c))
    return trim(out)


def cyclotomic_polynomial(n: int) -> list[int]:
    """The n-th cyclotomic polynomial, by exact division of y**n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            q, r = divmod_exact(p, cyclotomic_polynomial(d))
            if r:
                raise ArithmeticError("cyclotomic division left a remainder")
            p = q
    return p


def format_poly(p: list[int], var: str = "u") -> str:
    """Human-readable ascending form, e.g. '1 - 4*u + 3*u^2'."""
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            term = str(mag)
        elif i == 1:
            term = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            term = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def poly_to_json(p: list[int]) -> list[str]:
    return [str(c) for c in p]


def poly_from_json(data: list[str]) -> list[int]:
    return trim([int(c) for c in data])
