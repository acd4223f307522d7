"""Wigner distribution of the conditioned states, negativity, HS distances.

The closed form for outcome n is a degree-2n polynomial times a Gaussian:

    W_n(a) = (-1)^n 2^n n! G(a) / I_n^(0)
             * sum_l x1^l x2^{n-l} L_l^(-1/2)(y1) L_{n-l}^(-1/2)(y2),

with the scaled variable kappa = a / omega, Laguerre arguments

    y1 = -8 Im(kappa)^2 |omega|^4 / (dm (dm - 2|omega|^2)),
    y2 = +8 Re(kappa)^2 |omega|^4 / (dp (dp + 2|omega|^2)),

dm = 1 - 2 zeta |omega|^2, dp = 1 + 2 zeta |omega|^2, and Gaussian prefactor

    G(a) = (2 / (pi sqrt(Theta)))
           * exp(-2 (1 + 4 zeta^2 |omega|^4) |a|^2 / Theta
                 + 4 zeta (omega*^2 a^2 + omega^2 a*^2) / Theta).

Negativity is quantified as the excess absolute volume int |W| - 1 (twice
the integrated negative part), evaluated by adaptive quadrature over a square
whose half-width is fixed by a rigorous Gaussian-times-polynomial tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaincc

from . import fock_oracle
from .dynamics import DegenerateStateError, StateCoeffs
from .moments import PostState
from .quad2d import QuadResult, integrate2d
from .special import laguerre_half_all

GRID_FLOAT_FMT = "%.17g"  # guarantees bit-exact double round-trips


@dataclass(frozen=True)
class WignerGrid:
    """Dense rectangular evaluation of W over [re_min, re_max] x [im_min, im_max].

    values is row-major with the imaginary axis outermost:
    values[iy, ix] = W(re[ix] + 1j * im[iy]).
    """

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int
    values: np.ndarray
    params_echo: str = ""


@dataclass(frozen=True)
class NegativityResult:
    """delta_w = int |W| - 1 over the truncation square, with est_error the
    quadrature estimate plus the analytic tail bound."""

    delta_w: float
    abs_integral: float
    est_error: float
    truncation_radius: float


def gaussian_prefactor(c: StateCoeffs, alpha):
    """Gaussian factor G common to every W_n; scalar or array alpha.

    Reduces to the vacuum distribution (2/pi) exp(-2|a|^2) when zeta = 0.
    """
    if not (c.gdet > 0.0):
        raise ValueError(f"Gaussian determinant factor must be positive, got {c.gdet}")
    alpha = np.asarray(alpha, dtype=complex)
    w2 = c.herm_sq
    pairing = 2.0 * (np.conj(c.herm) ** 2 * alpha ** 2).real
    expo = (-2.0 * (1.0 + 4.0 * c.zeta ** 2 * w2 * w2) * np.abs(alpha) ** 2
            + 4.0 * c.zeta * pairing) / c.gdet
    out = 2.0 / (math.pi * math.sqrt(c.gdet)) * np.exp(expo)
    return out[()] if out.ndim == 0 else out


def _laguerre0(n: int, x):
    """Plain Laguerre polynomial L_n(x) (order 0), vectorized."""
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.ones_like(x)
    prev = np.ones_like(x)
    cur = 1.0 - x
    for k in range(1, n):
        prev, cur = cur, ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0)
    return cur


def _fock_wigner_values(n: int, alpha):
    """W of the bare Fock state |n>: (2/pi) (-1)^n e^{-2|a|^2} L_n(4|a|^2)."""
    a2 = np.abs(np.asarray(alpha, dtype=complex)) ** 2
    return (2.0 / math.pi) * (-1.0) ** n * np.exp(-2.0 * a2) * _laguerre0(n, 4.0 * a2)


def wigner_eval(state: PostState, alpha):
    """W_n at complex alpha (scalar or array).

    Boundary-tagged states use the analytic Fock-state distribution.  On the
    degenerate omega -> 0 locus the odd-n closed form is 0/0 and a
    DegenerateStateError asks the caller to use the Fock oracle instead.
    """
    n, c = state.n, state.coeffs
    if c.boundary:
        out = _fock_wigner_values(n, alpha)
        return out[()] if out.ndim == 0 else out
    if c.degenerate and n % 2 == 1:
        raise DegenerateStateError(
            f"odd n = {n} at the degenerate locus: use the Fock oracle Wigner")
    alpha = np.asarray(alpha, dtype=complex)
    w2 = c.herm_sq
    dm = 1.0 - 2.0 * c.zeta * w2
    dp = 1.0 + 2.0 * c.zeta * w2
    kappa = alpha / c.herm
    y1 = -8.0 * kappa.imag ** 2 * w2 * w2 / (dm * (dm - 2.0 * w2))
    y2 = 8.0 * kappa.real ** 2 * w2 * w2 / (dp * (dp + 2.0 * w2))
    lag1 = laguerre_half_all(n, y1)
    lag2 = laguerre_half_all(n, y2)
    acc = np.zeros_like(y1)
    for l in range(n + 1):
        acc = acc + c.x1 ** l * c.x2 ** (n - l) * lag1[l] * lag2[n - l]
    out = ((-2.0) ** n * math.factorial(n) / state.norm_i0
           * gaussian_prefactor(c, alpha) * acc)
    return out[()] if out.ndim == 0 else out


def wigner_grid(state: PostState, re_min: float, re_max: float,
                im_min: float, im_max: float, nx: int, ny: int) -> WignerGrid:
    """Dense W values on an nx-by-ny rectangular grid (inclusive endpoints)."""
    if nx < 2 or ny < 2:
        raise ValueError("grid needs at least 2 points per axis")
    re = np.linspace(re_min, re_max, nx)
    im = np.linspace(im_min, im_max, ny)
    alpha = re[None, :] + 1j * im[:, None]
    values = wigner_eval(state, alpha)
    echo = (f"n={state.n} J={state.params.hopping:g} Delta={state.params.detuning:g} "
            f"r={state.params.squeeze:g} phi={state.params.phase:g} jt={state.coeffs.jt:g}")
    return WignerGrid(re_min, re_max, im_min, im_max, nx, ny, values, echo)


def write_grid_csv(grid: WignerGrid, path) -> None:
    """Serialize a grid in the interchange format:
    one '# re_min re_max im_min im_max nx ny' header line, then nx*ny rows
    're,im,w' with 17 significant digits (bit-exact double round-trip)."""
    fmt = GRID_FLOAT_FMT
    re = np.linspace(grid.re_min, grid.re_max, grid.nx)
    im = np.linspace(grid.im_min, grid.im_max, grid.ny)
    with open(path, "w", encoding="ascii") as fh:
        header = " ".join(fmt % v for v in
                          (grid.re_min, grid.re_max, grid.im_min, grid.im_max))
        fh.write(f"# {header} {grid.nx} {grid.ny}\n")
        for iy in range(grid.ny):
            for ix in range(grid.nx):
                fh.write(f"{fmt % re[ix]},{fmt % im[iy]},{fmt % grid.values[iy, ix]}\n")


def read_grid_csv(path) -> WignerGrid:
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline()
        if not header.startswith("#"):
            raise ValueError(f"malformed grid file {path}: missing header")
        parts = header[1:].split()
        re_min, re_max, im_min, im_max = (float(v) for v in parts[:4])
        nx, ny = int(parts[4]), int(parts[5])
        values = np.empty((ny, nx))
        for iy in range(ny):
            for ix in range(nx):
                row = fh.readline().strip().split(",")
                values[iy, ix] = float(row[2])
    return WignerGrid(re_min, re_max, im_min, im_max, nx, ny, values)


@lru_cache(maxsize=64)
def _lag_abs_coeffs(n: int, order: float):
    """Absolute-valued coefficient arrays of L_0..L_n^(order), low power first."""
    coeffs = [np.array([1.0])]
    if n >= 1:
        coeffs.append(np.array([1.0 + order, -1.0]))
    for k in range(1, n):
        a = np.zeros(k + 2)
        a[: k + 1] += (2.0 * k + 1.0 + order) * coeffs[k]
        a[1: k + 2] -= coeffs[k]
        a[: k] -= (k + order) * coeffs[k - 1]
        coeffs.append(a / (k + 1.0))
    return tuple(np.abs(a) for a in coeffs)


def _envelope(state: PostState):
    """Positive-coefficient polynomial B and rate a with |W_n| <= B(u) e^{-a u},
    u = |alpha|^2.  Built from absolute Laguerre coefficients; the graded
    products |x|^(l-i) g^i stay finite even where the raw Laguerre arguments
    blow up (x -> 0 compensates exactly)."""
    n, c = state.n, state.coeffs
    if c.boundary:
        poly = _lag_abs_coeffs(n, 0.0)[n] * 4.0 ** np.arange(n + 1)
        return (2.0 / math.pi) * poly, 2.0
    w2 = c.herm_sq
    dm = 1.0 - 2.0 * c.zeta * w2
    dp = 1.0 + 2.0 * c.zeta * w2
    rate = 2.0 * dm / dp
    g1 = 8.0 * w2 / dm ** 2
    g2 = 8.0 * w2 / dp ** 2
    abs_co = _lag_abs_coeffs(n, -0.5)
    branch1 = []
    branch2 = []
    for l in range(n + 1):
        i = np.arange(l + 1)
        branch1.append(abs_co[l] * abs(c.x1) ** (l - i) * g1 ** i)
        branch2.append(abs_co[l] * abs(c.x2) ** (l - i) * g2 ** i)
    poly = np.zeros(2 * n + 1)
    for l in range(n + 1):
        prod = np.convolve(branch1[l], branch2[n - l])
        poly[: prod.size] += prod
    pref = (2.0 ** n * math.factorial(n) * 2.0
            / (math.pi * math.sqrt(c.gdet)) / abs(state.norm_i0))
    return pref * poly, rate


def _tail_bound(state: PostState, radius: float) -> float:
    """Exact integral of the |W_n| envelope outside |alpha| = radius.

    The radial integral of each monomial u^d e^{-rate u} is an upper
    incomplete gamma function, so no monotonicity assumption is needed.
    """
    poly, rate = _envelope(state)
    u0 = rate * radius * radius
    tail = 0.0
    for d, coeff in enumerate(poly):
        if coeff == 0.0:
            continue
        # int_{R^2}^inf u^d e^{-rate u} du = Gamma(d+1, rate R^2) / rate^(d+1)
        tail += coeff * math.factorial(d) * gammaincc(d + 1, u0) / rate ** (d + 1)
    return math.pi * tail


def truncation_radius(state: PostState, tol: float, *,
                      r_start: float = 4.0, r_step: float = 0.5,
                      r_max: float = 30.0) -> float:
    """Smallest tested radius whose envelope tail falls below tol / 10."""
    radius = r_start
    while radius <= r_max:
        if _tail_bound(state, radius) < tol / 10.0:
            return radius
        radius += r_step
    raise ValueError(f"no truncation radius below {r_max} reaches tail < {tol / 10:g}")


def _values_fn(state: PostState):
    def f(xs, ys):
        return wigner_eval(state, xs + 1j * ys)
    return f


def negativity(state: PostState, tol: float = 1e-4, *,
               max_panels: int = 40000) -> NegativityResult:
    """Excess absolute volume of W: delta_w = int |W| - 1 (>= 0 up to error).

    The integral runs over the square of half-width truncation_radius(state,
    tol); est_error adds the quadrature estimate and the analytic tail bound.
    A positive Gaussian distribution (n = 0, or even n on the degenerate
    locus) yields delta_w = 0 within est_error.
    """
    if tol < 1e-6:
        raise ValueError(f"tolerance below 1e-6 is not supported, got {tol}")
    radius = truncation_radius(state, tol)
    f = _values_fn(state)
    res = integrate2d(lambda xs, ys: np.abs(f(xs, ys)),
                      -radius, radius, -radius, radius,
                      tol=0.9 * tol, max_panels=max_panels)
    tail = _tail_bound(state, radius)
    return NegativityResult(delta_w=res.value - 1.0,
                            abs_integral=res.value,
                            est_error=res.est_error + tail,
                            truncation_radius=radius)


def normalization_integral(state: PostState, tol: float = 1e-4, *,
                           max_panels: int = 40000) -> QuadResult:
    """int W over the truncation square; equals 1 within tol for every state."""
    radius = truncation_radius(state, tol)
    return integrate2d(_values_fn(state), -radius, radius, -radius, radius,
                       tol=0.9 * tol, max_panels=max_panels)


def hs_distance(state_a: PostState, state_b: PostState, *,
                n_max: int | None = None, trunc_tol: float = 1e-12) -> float:
    """Hilbert-Schmidt distance sqrt(2 - 2 |<psi_a|psi_b>|^2) between two
    conditioned pure states sharing the same model parameters and time.

    The overlap is taken in the truncated Fock basis of the oracle, which is
    exact for pure states and free of the closed forms being cross-checked;
    orthogonal parity sectors give sqrt(2) identically.
    """
    if state_a.params != state_b.params or state_a.t != state_b.t:
        raise ValueError("states must share model parameters and interaction time")
    if n_max is None:
        n_max = max(fock_oracle.default_n_max(state_a.params.squeeze, state_a.n, trunc_tol),
                    fock_oracle.default_n_max(state_b.params.squeeze, state_b.n, trunc_tol))
    va = fock_oracle.projected_vector(state_a.params, state_a.t, state_a.n, n_max=n_max)
    vb = fock_oracle.projected_vector(state_b.params, state_b.t, state_b.n, n_max=n_max)
    overlap = np.vdot(va.amplitudes, vb.amplitudes)
    d_sq = max(0.0, 2.0 - 2.0 * abs(overlap) ** 2)
    # below the double-precision resolution of the overlap the square root
    # would amplify pure rounding; identical states report exactly 0
    return 0.0 if d_sq < 1e-14 else math.sqrt(d_sq)


def hs_distance_phase_space(state_a: PostState, state_b: PostState,
                            tol: float = 1e-5, *, max_panels: int = 40000) -> float:
    """Verification route: d^2 = pi int (W_a - W_b)^2 d2a by quadrature."""
    if state_a.params != state_b.params or state_a.t != state_b.t:
        raise ValueError("states must share model parameters and interaction time")
    radius = max(truncation_radius(state_a, tol), truncation_radius(state_b, tol))
    fa, fb = _values_fn(state_a), _values_fn(state_b)
    res = integrate2d(lambda xs, ys: (fa(xs, ys) - fb(xs, ys)) ** 2,
                      -radius, radius, -radius, radius,
                      tol=tol, max_panels=max_panels)
    return math.sqrt(max(0.0, math.pi * res.value))
