"""Independent brute-force engine in a truncated two-mode Fock basis.

Builds the two-mode squeezed vacuum, evolves it under the hopping Hamiltonian
by exact sector-wise matrix exponentials (the total photon number is
conserved, so each N-sector is a dense (N+1) x (N+1) block), projects mode b
onto a Fock outcome, and computes every observable directly from amplitudes.
Nothing here reuses the closed forms, which is the point: it is the
verification route the rest of the package is checked against.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import expm
from scipy.special import eval_genlaguerre, gammaln

from .dynamics import ModelParams
from .moments import PhotonStats

TRUNC_TOL = 1e-12
NEGLIGIBLE_PROB = 1e-14


class TruncationError(ValueError):
    """Requested truncation cannot represent the state to tolerance."""


@dataclass(eq=False)
class TwoModeState:
    """Amplitudes A[m, k] of |m>_a |k>_b up to n_max per mode.

    norm_defect = 1 - sum |A|^2 tracks weight lost to truncation; evolution
    conserves each total-number sector exactly, so the defect comes only from
    the initial diagonal cutoff and trimmed out-of-window sector entries.
    """

    n_max: int
    amplitudes: np.ndarray
    norm_defect: float


@dataclass(eq=False)
class FockVector:
    """Single-mode amplitude list c_0..c_n_max with its pre-normalization
    squared norm (the outcome probability when produced by project_b)."""

    amplitudes: np.ndarray
    probability: float
    negligible: bool = False

    def normalized(self) -> "FockVector":
        if self.probability <= 0.0:
            raise ZeroDivisionError("cannot normalize a zero vector")
        return FockVector(self.amplitudes / math.sqrt(self.probability), 1.0,
                          self.negligible)


def default_n_max(squeeze: float, n: int, tol: float = TRUNC_TOL) -> int:
    """Truncation level 2 * ceil(ln tol / ln tanh^2 r) + 2n + 12.

    ceil(ln tol / ln tanh^2 r) alone makes the discarded Schmidt weight fall
    below tol, but conditioning on a low-probability outcome renormalizes the
    projected vector and can amplify a truncated tail by 1/probability, so
    the base term is doubled; the 2n term keeps room for the projected
    excitation and the margin absorbs evolution spreading.
    """
    th = math.tanh(squeeze)
    if th <= 0.0:
        return n + 12
    base = math.ceil(math.log(tol) / (2.0 * math.log(th)))
    return 2 * max(base, 0) + 2 * n + 12


def build_initial(params: ModelParams, n_max: int, *,
                  trunc_tol: float = TRUNC_TOL) -> TwoModeState:
    """Two-mode squeezed vacuum: A[k, k] = (-e^{i phi} tanh r)^k / cosh r."""
    th = math.tanh(params.squeeze)
    if th > 0.0 and th ** (2 * n_max) >= trunc_tol:
        raise TruncationError(
            f"n_max = {n_max} keeps the tail weight tanh^(2 n_max) r = "
            f"{th ** (2 * n_max):.3e} above {trunc_tol:g}; need n_max >= "
            f"{default_n_max(params.squeeze, 0, trunc_tol) - 10}")
    amp = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    ratio = -np.exp(1j * params.phase) * th
    val = 1.0 / math.cosh(params.squeeze)
    for k in range(n_max + 1):
        amp[k, k] = val
        val = val * ratio
    defect = 1.0 - float(np.sum(np.abs(amp) ** 2))
    return TwoModeState(n_max=n_max, amplitudes=amp, norm_defect=max(defect, 0.0))


def _sector_hamiltonian(params: ModelParams, total: int) -> np.ndarray:
    """H restricted to the sector n_a + n_b = total, basis |m, total - m>."""
    j, d = params.hopping, params.detuning
    m = np.arange(total + 1)
    h = np.zeros((total + 1, total + 1))
    h[m, m] = d * (2 * m - total)
    hop = j * np.sqrt((m[:-1] + 1.0) * (total - m[:-1]))
    h[m[:-1], m[:-1] + 1] = hop
    h[m[:-1] + 1, m[:-1]] = hop
    return h


def evolve(state: TwoModeState, params: ModelParams, t: float) -> TwoModeState:
    """Apply exp(-i H t) sector by sector.

    Sectors with total number above n_max are still evolved exactly on their
    full (N+1)-dimensional space; entries falling outside the stored square
    window are trimmed and accounted in norm_defect (their weight is bounded
    by the initial diagonal tail, far below the truncation tolerance).
    """
    n_max = state.n_max
    out = np.zeros_like(state.amplitudes)
    for total in range(0, 2 * n_max + 1):
        lo = max(0, total - n_max)
        hi = min(total, n_max)
        window = np.arange(lo, hi + 1)
        seed = state.amplitudes[window, total - window]
        if not np.any(seed):
            continue
        vec = np.zeros(total + 1, dtype=complex)
        vec[window] = seed
        vec = expm(-1j * _sector_hamiltonian(params, total) * t) @ vec
        out[window, total - window] = vec[window]
    defect = 1.0 - float(np.sum(np.abs(out) ** 2))
    return TwoModeState(n_max=n_max, amplitudes=out, norm_defect=max(defect, 0.0))


def project_b(state: TwoModeState, n: int) -> FockVector:
    """Unnormalized amplitudes of mode a given outcome n on mode b."""
    if n > state.n_max:
        raise ValueError(f"outcome {n} exceeds truncation n_max = {state.n_max}")
    col = state.amplitudes[:, n].copy()
    prob = float(np.sum(np.abs(col) ** 2))
    return FockVector(col, prob, negligible=prob < NEGLIGIBLE_PROB)


@lru_cache(maxsize=64)
def _evolved(params: ModelParams, t: float, n_max: int) -> TwoModeState:
    state = evolve(build_initial(params, n_max), params, t)
    state.amplitudes.flags.writeable = False
    return state


def evolved_state(params: ModelParams, t: float, *,
                  n_max: int | None = None, n: int = 0) -> TwoModeState:
    """Cached build-and-evolve; n only informs the default truncation."""
    if n_max is None:
        n_max = default_n_max(params.squeeze, n)
    return _evolved(params, t, n_max)


def projected_vector(params: ModelParams, t: float, n: int, *,
                     n_max: int | None = None) -> FockVector:
    """Normalized conditioned vector of mode a for outcome n (cached evolve)."""
    state = evolved_state(params, t, n_max=n_max, n=n)
    return project_b(state, n).normalized()


def fock_observables(v: FockVector) -> PhotonStats:
    """Photon statistics straight from |c_m|^2 of a normalized vector."""
    p = np.abs(v.amplitudes) ** 2
    m = np.arange(p.size)
    mean = float(np.dot(m, p))
    mean2 = float(np.dot(m * m, p))
    var = mean2 - mean * mean
    q = var / mean - 1.0 if mean > 0.0 else math.nan
    return PhotonStats(mean, mean2, var, q)


def quadrature_first_moment(v: FockVector, theta: float) -> float:
    """<X_theta> from neighbor couplings; zero for any parity-pure vector."""
    c = v.amplitudes
    m = np.arange(c.size - 1)
    a_mean = np.sum(np.conj(c[:-1]) * c[1:] * np.sqrt(m + 1.0))
    return float(math.sqrt(2.0) * (a_mean * np.exp(-1j * theta)).real)


def fock_quadrature(v: FockVector, theta: float) -> float:
    """Variance of X_theta from neighbor and next-neighbor couplings."""
    c = v.amplitudes
    m = np.arange(c.size)
    a_sq = np.sum(np.conj(c[:-2]) * c[2:] * np.sqrt((m[:-2] + 1.0) * (m[:-2] + 2.0)))
    nbar = float(np.dot(m, np.abs(c) ** 2))
    second = float((a_sq * np.exp(-2j * theta)).real + nbar + 0.5)
    return second - quadrature_first_moment(v, theta) ** 2


def fock_wigner(v: FockVector, alpha):
    """W(alpha) by the displaced-parity formula (2/pi) <psi| D(2a) P |psi>.

    Matrix elements of the displacement operator are Laguerre polynomials;
    only levels with non-negligible amplitude enter the double sum, and
    hermiticity halves it.  Accepts scalar or array alpha.
    """
    alpha = np.asarray(alpha, dtype=complex)
    g = 2.0 * alpha
    x = np.abs(g) ** 2
    env = np.exp(-0.5 * x)
    c = v.amplitudes
    support = np.nonzero(np.abs(c) > 1e-18)[0]
    total = np.zeros(alpha.shape, dtype=float)
    for ik, k in enumerate(support):
        for m in support[ik:]:
            if k == m:
                d_km = env * eval_genlaguerre(m, 0, x)
                total += (-1.0) ** m * (np.conj(c[k]) * c[m]).real * d_km
            else:
                # k < m here
                amp_ratio = math.exp(0.5 * (gammaln(k + 1) - gammaln(m + 1)))
                d_km = amp_ratio * (-np.conj(g)) ** (m - k) * env \
                    * eval_genlaguerre(k, m - k, x)
                total += 2.0 * (-1.0) ** m * (np.conj(c[k]) * c[m] * d_km).real
    out = (2.0 / math.pi) * total
    return out[()] if out.ndim == 0 else out


def dump_fock_vector(v: FockVector, path) -> None:
    """Debug dump: JSON list of [level, re, im] triples."""
    rows = [[int(m), float(a.real), float(a.imag)]
            for m, a in enumerate(v.amplitudes)]
    with open(path, "w", encoding="ascii") as fh:
        json.dump(rows, fh)
