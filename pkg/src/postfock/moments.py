"""Closed-form norms, photon statistics and quadrature squeezing.

Everything here reduces to the family of Gaussian phase-space integrals

    I_n^(k) = (1/pi) int d2a exp(-|a|^2 + 2 Re(Omega* a^2)) |a|^{2k}
              H_n(omega* a) H_n(omega a*),        k = 0, 1, 2,

and the complex second-moment integral with |a|^{2k} replaced by a^2.  All
of them are expressed through the bivariate product polynomials
P_n(a1, a2; x1, x2), which gives one code path for every quantum number n;
the hand-expanded low-n expressions live in the test suite as regressions,
not here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .dynamics import (BoundaryStateError, DegenerateStateError, ModelParams,
                       StateCoeffs, derive_coeffs)
from .special import DEGREE_CAP, ProductPolyArgs, product_poly

MANDEL_UNDEFINED = math.nan  # reported where the mean photon number is zero


@dataclass(frozen=True)
class PostState:
    """Normalized conditioned state of mode a after detecting n photons in b.

    Bundles the quantum number, the coefficient set, the cached squared norm
    I_n^(0), and the generating (params, t) pair so oracle-backed operations
    can rebuild the same state independently.  norm_i0 is NaN on boundary or
    odd-degenerate states, where the closed-form norm is not usable.
    """

    n: int
    coeffs: StateCoeffs
    norm_i0: float
    params: ModelParams
    t: float


@dataclass(frozen=True)
class PhotonStats:
    mean_n: float
    mean_n2: float
    variance: float
    mandel_q: float


@dataclass(frozen=True)
class SqueezeReport:
    """Extremal quadrature variances: V(theta_min) = v_min, V(theta_max) = v_max,
    with theta_max = theta_min + pi/2 (mod pi).  squeezed means v_min < 1/2."""

    theta_min: float
    v_min: float
    theta_max: float
    v_max: float
    squeezed: bool


def _require_generic(n: int, c: StateCoeffs) -> None:
    if c.boundary:
        raise BoundaryStateError(
            "coefficients are boundary-tagged (sin(jt) ~ 0); use the analytic "
            "Fock-state limit instead of the closed forms")
    if c.degenerate and n % 2 == 1:
        raise DegenerateStateError(
            f"|omega|^2 = {c.herm_sq:.3e} is at the degenerate locus and n = {n} "
            "is odd: the normalized closed forms are 0/0, fall back to the oracle")


def norm_i0(n: int, c: StateCoeffs, *, cap: int = DEGREE_CAP) -> float:
    """Squared norm I_n^(0) = (2^n / sqrt(Theta)) P_n(1/2, 1/2; x1, x2)."""
    _require_generic(n, c)
    return 2.0 ** n / math.sqrt(c.gdet) * product_poly(
        n, ProductPolyArgs(0.5, 0.5, c.x1, c.x2), cap=cap)


def moment_i1(n: int, c: StateCoeffs, *, cap: int = DEGREE_CAP) -> float:
    """First moment I_n^(1) from the four shifted product polynomials."""
    _require_generic(n, c)
    zw2 = c.zeta * c.herm_sq
    x1, x2 = c.x1, c.x2
    plus = (product_poly(n, ProductPolyArgs(1.5, 0.5, x1, x2), cap=cap)
            + n * product_poly(n - 1, ProductPolyArgs(1.5, 0.5, x1, x2), cap=cap))
    minus = (product_poly(n, ProductPolyArgs(0.5, 1.5, x1, x2), cap=cap)
             - n * product_poly(n - 1, ProductPolyArgs(0.5, 1.5, x1, x2), cap=cap))
    return 2.0 ** (n - 1) / math.sqrt(c.gdet) * (
        plus / (1.0 - 2.0 * zw2) + minus / (1.0 + 2.0 * zw2))


def moment_i2(n: int, c: StateCoeffs, *, cap: int = DEGREE_CAP) -> float:
    """Second moment I_n^(2)."""
    _require_generic(n, c)
    zw2 = c.zeta * c.herm_sq
    x1, x2 = c.x1, c.x2

    def pp(m, a1, a2):
        return product_poly(m, ProductPolyArgs(a1, a2, x1, x2), cap=cap)

    t_plus = (pp(n, 2.5, 0.5) + 2 * n * pp(n - 1, 2.5, 0.5)
              + n * (n - 1) * pp(n - 2, 2.5, 0.5)) * 0.75 / (1.0 - 2.0 * zw2) ** 2
    t_mid = (pp(n, 1.5, 1.5) - n * (n - 1) * pp(n - 2, 1.5, 1.5)) * 0.5 / c.gdet
    t_minus = (pp(n, 0.5, 2.5) - 2 * n * pp(n - 1, 0.5, 2.5)
               + n * (n - 1) * pp(n - 2, 0.5, 2.5)) * 0.75 / (1.0 + 2.0 * zw2) ** 2
    return 2.0 ** n / math.sqrt(c.gdet) * (t_plus + t_mid + t_minus)


def quad_integral(n: int, c: StateCoeffs, *, cap: int = DEGREE_CAP) -> complex:
    """Complex second-moment integral

    2^{n+1} (omega^2 / Theta^{3/2}) [ zeta P_n(3/2,3/2; x1,x2)
                                      - n(n-1)(1+zeta) P_{n-2}(3/2,3/2; x1,x2) ].
    """
    _require_generic(n, c)
    args = ProductPolyArgs(1.5, 1.5, c.x1, c.x2)
    bracket = (c.zeta * product_poly(n, args, cap=cap)
               - n * (n - 1) * (1.0 + c.zeta) * product_poly(n - 2, args, cap=cap))
    return 2.0 ** (n + 1) * c.herm ** 2 / c.gdet ** 1.5 * bracket


def post_state(params: ModelParams, t: float, n: int, *,
               cap: int = DEGREE_CAP) -> PostState:
    """Build the conditioned state record for outcome n at time t."""
    if n < 0:
        raise ValueError(f"Fock outcome must be nonnegative, got {n}")
    c = derive_coeffs(params, t)
    try:
        i0 = norm_i0(n, c, cap=cap)
    except (BoundaryStateError, DegenerateStateError):
        i0 = math.nan
    return PostState(n=n, coeffs=c, norm_i0=i0, params=params, t=t)


def photon_stats(state: PostState, *, cap: int = DEGREE_CAP) -> PhotonStats:
    """Mean photon number, second moment, variance and Mandel Q.

    mean = I^(1)/I^(0) - 1,  <n^2> = I^(2)/I^(0) - 3 I^(1)/I^(0) + 1,
    Q = variance/mean - 1 (NaN sentinel where the mean vanishes).
    At the zero-time boundary the state is the Fock state |n>, so the limits
    (mean = n, variance = 0, Q = -1) are returned directly.
    """
    n, c = state.n, state.coeffs
    if c.boundary:
        return PhotonStats(float(n), float(n * n), 0.0, -1.0)
    i0 = state.norm_i0 if not math.isnan(state.norm_i0) else norm_i0(n, c, cap=cap)
    r1 = moment_i1(n, c, cap=cap) / i0
    r2 = moment_i2(n, c, cap=cap) / i0
    mean = r1 - 1.0
    mean2 = r2 - 3.0 * r1 + 1.0
    variance = r2 - r1 * (r1 + 1.0)
    q = variance / mean - 1.0 if mean > 0.0 else MANDEL_UNDEFINED
    return PhotonStats(mean, mean2, variance, q)


def projection_probability(n: int, c: StateCoeffs, squeeze: float, *,
                           cap: int = DEGREE_CAP) -> float:
    """Probability of detecting n photons in mode b:
    |sigma|^{2n} I_n^(0) / (n! cosh^2 r).

    The zero-time limit reproduces the thermal-like Schmidt weights
    tanh^{2n}(r) / cosh^2(r).
    """
    if c.boundary:
        return math.tanh(squeeze) ** (2 * n) / math.cosh(squeeze) ** 2
    return (abs(c.meas) ** (2 * n) / (math.factorial(n) * math.cosh(squeeze) ** 2)
            * norm_i0(n, c, cap=cap))


def unitarity_closed_form(c: StateCoeffs, squeeze: float) -> float:
    """Closed-form value of the total projection probability,
    1 / (cosh^2 r sqrt(D+ D-)) at tau = |sigma|^2; equals 1 identically."""
    if c.boundary:
        return 1.0
    tau = abs(c.meas) ** 2
    zw2 = c.zeta * c.herm_sq
    w2 = c.herm_sq
    d_plus = 1.0 - 2.0 * zw2 + 2.0 * tau * (1.0 - 2.0 * zw2 - 2.0 * w2)
    d_minus = 1.0 + 2.0 * zw2 - 2.0 * tau * (1.0 + 2.0 * zw2 + 2.0 * w2)
    return 1.0 / (math.cosh(squeeze) ** 2 * math.sqrt(d_plus * d_minus))


def unitarity_residual(c: StateCoeffs, squeeze: float, *,
                       tail_tol: float = 1e-13, max_terms: int = 400) -> float:
    """|sum_n prob(n) - 1| with the sum truncated adaptively.

    The cutoff N* starts from the geometric envelope |sigma|^{2N}/(1-|sigma|^2)
    < tail_tol * cosh^2 r and extends while the computed terms still exceed
    tail_tol, so slowly decaying parameter points are handled too.  The
    closed-form route is folded in: the residual returned is the larger of
    the partial-sum and closed-form deviations from unity.
    """
    if c.boundary:
        return 0.0
    tau = abs(c.meas) ** 2
    cosh2 = math.cosh(squeeze) ** 2
    total = 0.0
    weight = 1.0 / cosh2          # tau^n / (n! cosh^2 r), updated in the loop
    n_star = max_terms
    if tau > 0.0:
        envelope = math.ceil(math.log(tail_tol * cosh2 * (1.0 - tau)) / math.log(tau))
        n_star = max(8, min(max_terms, envelope))
    prev_term = math.inf
    n = 0
    while n <= max_terms:
        if weight == 0.0:
            break  # tau = 0 (vacuum input): no further outcomes contribute
        term = weight * norm_i0(n, c, cap=max_terms + 2)
        if not math.isfinite(term):
            break
        total += term
        if n >= n_star and term < tail_tol and term < prev_term:
            break
        prev_term = term
        n += 1
        weight *= tau / n
    closed = unitarity_closed_form(c, squeeze)
    return max(abs(total - 1.0), abs(closed - 1.0))


def quadrature_variance(state: PostState, theta: float, *,
                        cap: int = DEGREE_CAP) -> float:
    """Variance of X_theta = (a e^{-i theta} + a' e^{i theta}) / sqrt(2).

    The first moment vanishes by parity, so the variance is the second moment
    (Re(Iq e^{-2 i theta}) + I^(1)) / I^(0) - 1/2 with Iq the complex
    second-moment integral.  At the boundary the Fock value n + 1/2 holds for
    every angle.
    """
    n, c = state.n, state.coeffs
    if c.boundary:
        return n + 0.5
    i0 = state.norm_i0 if not math.isnan(state.norm_i0) else norm_i0(n, c, cap=cap)
    iq = quad_integral(n, c, cap=cap)
    i1 = moment_i1(n, c, cap=cap)
    return ((iq * cmath.exp(-2j * theta)).real + i1) / i0 - 0.5


def squeeze_report(state: PostState, *, cap: int = DEGREE_CAP) -> SqueezeReport:
    """Extremal angles and variances of X_theta.

    V(theta) = (|Iq| cos(2 theta - arg Iq) + I^(1)) / I^(0) - 1/2, so the
    minimum sits at theta = (arg Iq + pi)/2 (the branch with positive second
    derivative) and the maximum a quarter turn away.  When Iq vanishes the
    variance is isotropic and the angles are reported as 0 and pi/2.
    """
    n, c = state.n, state.coeffs
    if c.boundary:
        v = n + 0.5
        return SqueezeReport(0.0, v, math.pi / 2, v, False)
    i0 = state.norm_i0 if not math.isnan(state.norm_i0) else norm_i0(n, c, cap=cap)
    iq = quad_integral(n, c, cap=cap)
    i1 = moment_i1(n, c, cap=cap)
    amp = abs(iq)
    base = i1 / i0 - 0.5
    if amp <= 1e-14 * max(1.0, abs(i1)):
        return SqueezeReport(0.0, base, math.pi / 2, base, base < 0.5)
    chi = cmath.phase(iq)
    theta_min = ((chi + math.pi) / 2.0) % math.pi
    theta_max = (theta_min + math.pi / 2.0) % math.pi
    v_min = base - amp / i0
    v_max = base + amp / i0
    return SqueezeReport(theta_min, v_min, theta_max, v_max, v_min < 0.5)
