"""Independent verification routes used only by the tests.

Nothing here shares code with the package paths it checks: Taylor
coefficients come from Cauchy integrals over a circle, phase-space integrals
from an exactly rotated Gauss-Hermite rule, the low-order Wigner functions
from their hand-expanded polynomial forms, and the two-mode evolution from a
binomial expansion of the one-photon transfer matrix.
"""

import math

import numpy as np

# ---------------------------------------------------------------------------
# polynomial-coefficient oracle for Hermite values


def hermite_coefficient_array(n):
    """Integer coefficients of H_n, low power first, via the recurrence on
    coefficient vectors (independent of value-space recurrences)."""
    coeffs = [np.array([1.0]), np.array([0.0, 2.0])]
    for k in range(1, n):
        nxt = np.zeros(k + 2)
        nxt[1:] += 2.0 * coeffs[k]
        nxt[: k] -= 2.0 * k * coeffs[k - 1][: k]
        coeffs.append(nxt)
    return coeffs[n]


def hermite_by_coeffs(n, z):
    return sum(c * z ** i for i, c in enumerate(hermite_coefficient_array(n)))


# ---------------------------------------------------------------------------
# Taylor coefficients of (1 - z1 t)^(-a1) (1 - z2 t)^(-a2) by Cauchy integral


def product_gf_taylor(n, a1, a2, z1, z2, radius=None, m=512):
    """n-th Taylor coefficient times n!, via FFT over a circle |t| = radius."""
    zmax = max(abs(z1), abs(z2), 1e-9)
    if radius is None:
        radius = min(0.5 / zmax, 0.5)
    theta = 2.0 * np.pi * np.arange(m) / m
    t = radius * np.exp(1j * theta)
    vals = (1.0 - z1 * t) ** (-a1) * (1.0 - z2 * t) ** (-a2)
    coeff = np.fft.fft(vals)[n] / m / radius ** n
    return math.factorial(n) * coeff.real


# ---------------------------------------------------------------------------
# exactly-rotated Gauss-Hermite quadrature for the Gaussian phase integrals


def _hermite_value(n, z):
    if n == 0:
        return np.ones_like(z)
    prev, cur = np.ones_like(z), 2.0 * z
    for k in range(1, n):
        prev, cur = cur, 2.0 * z * cur - 2.0 * k * prev
    return cur


def gauss_phase_integral(n, c, k=0, pair_moment=False, npts=80):
    """(1/pi) int d2a exp(-|a|^2 + 2 Re(pair* a^2)) f(a) H_n(herm* a) H_n(herm a*)

    with f = |a|^(2k), or f = a^2 when pair_moment is set.  The quadratic form
    is diagonalized exactly, so the tensor Gauss-Hermite rule integrates the
    polynomial integrand to machine precision.
    """
    pair = c.pair
    form = np.array([[1.0 - 2.0 * pair.real, -2.0 * pair.imag],
                     [-2.0 * pair.imag, 1.0 + 2.0 * pair.real]])
    evals, evecs = np.linalg.eigh(form)
    assert np.all(evals > 0.0), "integral does not converge"
    x, w = np.polynomial.hermite.hermgauss(npts)
    gx, gy = np.meshgrid(x, x, indexing="ij")
    gw = np.outer(w, w)
    u = np.stack([gx, gy]) / np.sqrt(evals)[:, None, None]
    pts = np.tensordot(evecs, u, axes=(1, 0))
    alpha = pts[0] + 1j * pts[1]
    if pair_moment:
        f = alpha * alpha
    else:
        f = (alpha.real ** 2 + alpha.imag ** 2) ** k
    herm = c.herm
    integ = f * _hermite_value(n, np.conj(herm) * alpha) \
        * _hermite_value(n, herm * np.conj(alpha))
    total = np.sum(gw * integ) / math.pi / math.sqrt(evals.prod())
    return complex(total) if pair_moment else float(total.real)


# ---------------------------------------------------------------------------
# hand-expanded Wigner distributions for n = 0..3


def low_order_wigner(n, c, i0, alpha):
    """W_n for n <= 3 written out in phase-space variables (no Laguerre sums),
    using the shorthand b2p = herm*^p a^p + herm^p a*^p."""
    th = c.gdet
    z = c.zeta
    w2 = c.herm_sq
    w4 = w2 * w2
    herm = c.herm
    a2 = abs(alpha) ** 2
    b2 = 2.0 * (np.conj(herm) ** 2 * alpha ** 2).real
    b4 = 2.0 * (np.conj(herm) ** 4 * alpha ** 4).real
    b6 = 2.0 * (np.conj(herm) ** 6 * alpha ** 6).real
    pref = 2.0 / (math.pi * math.sqrt(th)) * math.exp(
        (-2.0 * (1.0 + 4.0 * z * z * w4) * a2 + 4.0 * z * b2) / th)
    if n == 0:
        return pref / i0
    if n == 1:
        return -4.0 * w2 / i0 * pref * (
            (1.0 + 4.0 * a2) / th - 8.0 * (a2 - z * b2) / th ** 2)
    if n == 2:
        return pref / i0 * (
            4.0
            - 16.0 / th * ((1.0 + 2.0 * z) * w4 - 2.0 * b2)
            + 16.0 / th ** 2 * ((3.0 + 32.0 * a2 + 16.0 * z * a2 - 8.0 * z * b2
                                 + 16.0 * a2 ** 2) * w4 - 4.0 * b2)
            - 256.0 / th ** 3 * ((3.0 * a2 + 6.0 * a2 ** 2 - 3.0 * z * b2
                                  - 4.0 * z * a2 * b2) * w4 + b4)
            + 256.0 / th ** 4 * (2.0 * (3.0 * a2 ** 2 - 4.0 * z * a2 * b2) * w4 + b4))
    if n == 3:
        t1 = 3.0 * (1.0 + 4.0 * a2)
        t2 = (-12.0 * (1.0 + 2.0 * z + 4.0 * (1.0 + 2.0 * z) * a2) * w4
              - 8.0 * (3.0 * a2 - (9.0 + 3.0 * z + 4.0 * a2) * b2))
        t3 = (4.0 * (5.0 + 12.0 * (9.0 + 8.0 * z) * a2
                     - 16.0 * (3.0 + 2.0 * a2) * z * b2
                     + 48.0 * (3.0 + 2.0 * z) * a2 ** 2
                     + 64.0 / 3.0 * a2 ** 3) * w4
              - 32.0 * (3.0 + 8.0 * a2) * b2 + 64.0 * (1.0 + z) * b4)
        t4 = (-32.0 * (15.0 * a2 + 24.0 * (3.0 + z) * a2 ** 2 + 32.0 * a2 ** 3
                       - (15.0 + 56.0 * a2 + 16.0 * a2 ** 2) * z * b2) * w4
              + 256.0 * a2 * b2 - 128.0 * (3.0 + z + 2.0 * a2) * b4)
        t5 = (640.0 * (3.0 * a2 ** 2 - 4.0 * z * a2 * b2 + 4.0 * a2 ** 3
                       - 4.0 * z * a2 ** 2 * b2) * w4
              + 64.0 * (5.0 + 12.0 * a2) * b4 - 512.0 / 3.0 * z * b6)
        t6 = (-512.0 * (10.0 / 3.0 * a2 ** 3 - 5.0 * z * a2 ** 2 * b2) * w4
              - 512.0 * (a2 * b4 - z * b6 / 3.0))
        series = (t1 / th + t2 / th ** 2 + t3 / th ** 3 + t4 / th ** 4
                  + t5 / th ** 5 + t6 / th ** 6)
        return -48.0 * w2 / i0 * pref * series
    raise ValueError("hand-expanded forms cover n <= 3 only")


# ---------------------------------------------------------------------------
# independent two-mode evolution: binomial powers of the one-photon matrix


def symmetric_power_evolution(params, t, n_max):
    """Amplitudes of the evolved two-mode squeezed vacuum, built by expanding
    (p a' + q b')^k (q a' + p* b')^k |0,0> per diagonal seed, where (p, q) are
    the one-photon transfer-matrix entries."""
    jhat = math.hypot(params.hopping, params.detuning)
    mu = params.hopping / jhat
    delta = params.detuning / jhat
    jt = jhat * t
    p = complex(math.cos(jt), -delta * math.sin(jt))   # cc * e^{-i varphi}
    q = -1j * mu * math.sin(jt)
    th = math.tanh(params.squeeze)
    lg = [math.lgamma(i + 1) for i in range(2 * n_max + 2)]
    amp = np.zeros((2 * n_max + 1, 2 * n_max + 1), dtype=complex)
    for k in range(n_max + 1):
        seed = (-np.exp(1j * params.phase) * th) ** k / math.cosh(params.squeeze)
        poly1 = np.array([math.comb(k, i) * p ** i * q ** (k - i)
                          for i in range(k + 1)])
        poly2 = np.array([math.comb(k, j) * q ** j * np.conj(p) ** (k - j)
                          for j in range(k + 1)])
        gamma = np.convolve(poly1, poly2)      # coefficient of a'^m b'^(2k-m)
        for m in range(2 * k + 1):
            amp[m, 2 * k - m] += seed * gamma[m] * math.exp(
                0.5 * (lg[m] + lg[2 * k - m]) - lg[k])
    return amp


# ---------------------------------------------------------------------------
# analytic Fock amplitudes of the projected (unnormalized) state


def projected_amplitudes_closed(n, c, squeeze, m_max):
    """Amplitudes <m| of (-1)^n meas^n / (sqrt(n!) cosh r)
    exp(pair a'^2) H_n(herm a') |0>, phases included."""
    hco = hermite_coefficient_array(n)
    out = np.zeros(m_max + 1, dtype=complex)
    pref = (-1.0) ** n * c.meas ** n / math.sqrt(math.factorial(n)) \
        / math.cosh(squeeze)
    for m in range(m_max + 1):
        acc = 0.0 + 0.0j
        for j in range(min(n, m) + 1):
            if (m - j) % 2:
                continue
            p2 = (m - j) // 2
            acc += (hco[j] * c.herm ** j * c.pair ** p2
                    * math.sqrt(math.factorial(m)) / math.factorial(p2))
        out[m] = pref * acc
    return out
