"""Recurrence-based special functions used by every closed form in the package.

All evaluators are pure and dependency-free: Hermite polynomials of complex
argument, associated Laguerre polynomials of order -1/2, rising factorials,
and the bivariate product polynomials

    P_n(a1, a2; z1, z2) = sum_k C(n,k) (a1)_k (a2)_{n-k} z1^k z2^{n-k},

which are the Taylor coefficients (times n!) of (1-z1*t)^(-a1) (1-z2*t)^(-a2).
Recurrences are preferred over gamma-function shortcuts so the module stays
portable and its overflow behaviour is easy to reason about.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEGREE_CAP = 32


class DegreeCapError(ValueError):
    """Polynomial degree exceeds the configured cap.

    Recurrence magnitudes grow roughly like n!, so a hard cap converts a
    silent float overflow into a diagnosable error.
    """


def _check_degree(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    if n > cap:
        raise DegreeCapError(f"degree {n} exceeds cap {cap}")


@dataclass(frozen=True)
class ProductPolyArgs:
    """Arguments of the bivariate product polynomial P_n(a1, a2; z1, z2).

    z1 may well be negative (the closed forms feed arguments of either sign),
    so no sign constraint is imposed.
    """

    a1: float
    a2: float
    z1: float
    z2: float


def hermite(n: int, z, *, cap: int = DEGREE_CAP):
    """Physicists' Hermite polynomial H_n(z) for complex scalar or array z.

    Three-term recurrence H_{k+1} = 2 z H_k - 2 k H_{k-1}, H_0 = 1, H_1 = 2z.
    """
    _check_degree(n, cap)
    z = np.asarray(z, dtype=complex)
    if n == 0:
        out = np.ones_like(z)
    else:
        prev = np.ones_like(z)
        out = 2.0 * z
        for k in range(1, n):
            prev, out = out, 2.0 * z * out - 2.0 * k * prev
    return out[()] if out.ndim == 0 else out


def laguerre_half(n: int, x, *, cap: int = DEGREE_CAP):
    """Associated Laguerre polynomial L_n^(-1/2)(x), scalar or array x.

    (k+1) L_{k+1} = (2k + 1/2 - x) L_k - (k - 1/2) L_{k-1}, starting from
    L_0 = 1 and L_1 = 1/2 - x.
    """
    _check_degree(n, cap)
    return laguerre_half_all(n, x, cap=cap)[n]


def laguerre_half_all(n: int, x, *, cap: int = DEGREE_CAP) -> list:
    """All orders L_0^(-1/2)(x) .. L_n^(-1/2)(x) in one recurrence pass."""
    _check_degree(n, cap)
    x = np.asarray(x, dtype=float)
    out = [np.ones_like(x)[()] if x.ndim == 0 else np.ones_like(x)]
    if n == 0:
        return out
    out.append(0.5 - x)
    for k in range(1, n):
        out.append(((2.0 * k + 0.5 - x) * out[k] - (k - 0.5) * out[k - 1]) / (k + 1.0))
    return out


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def product_poly(n: int, args: ProductPolyArgs, *, cap: int = DEGREE_CAP) -> float:
    """Bivariate product polynomial P_n(a1, a2; z1, z2).

    Evaluates sum_k C(n,k) (a1)_k (a2)_{n-k} z1^k z2^{n-k} with compensated
    (Kahan) summation: z1 is negative in the intended use, so the terms
    alternate in sign and naive accumulation loses digits near cancellation.

    Negative n returns 0, which lets callers write shifted-index formulas
    (terms carrying factors n or n(n-1) vanish exactly where the shifted
    polynomial would be out of range).
    """
    if n < 0:
        return 0.0
    _check_degree(n, cap)
    poch1 = [1.0] * (n + 1)
    poch2 = [1.0] * (n + 1)
    for k in range(1, n + 1):
        poch1[k] = poch1[k - 1] * (args.a1 + k - 1)
        poch2[k] = poch2[k - 1] * (args.a2 + k - 1)
    z1_pow = [1.0] * (n + 1)
    z2_pow = [1.0] * (n + 1)
    for k in range(1, n + 1):
        z1_pow[k] = z1_pow[k - 1] * args.z1
        z2_pow[k] = z2_pow[k - 1] * args.z2
    total = 0.0
    comp = 0.0
    for k in range(n + 1):
        term = math.comb(n, k) * poch1[k] * poch2[n - k] * z1_pow[k] * z2_pow[n - k]
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total
