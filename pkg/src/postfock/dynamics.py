"""Physical inputs and the time-dependent coefficients of the conditioned state.

Two coupled bosonic modes a, b interact through

    H = Delta (a'a - b'b) + J (a b' + a' b),

starting from a two-mode squeezed vacuum with magnitude r and phase phi.
After an interaction time t, the joint state takes the form

    exp(Omega a'^2) exp(-2 omega sigma a'b' - sigma^2 b'^2) |0,0> / cosh r,

so projecting mode b onto Fock level n leaves mode a in a state proportional
to exp(Omega a'^2) H_n(omega a') |0>.  This module maps (J, Delta, r, phi, t)
to the coefficient set (Omega, omega, sigma, zeta, Theta, x1, x2) that every
closed-form observable downstream is written in.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

# |sin(jhat*t)| below this is treated as the analytic zero-time boundary,
# where omega diverges like 1/sqrt(t) while all normalized observables have
# finite Fock-state limits.
EPS_TIME = 1e-9

# |omega|^2 below this marks the degenerate locus 1 - 2 mu^2 sin^2 = 0, where
# odd-n normalized closed forms become 0/0 (reachable only for mu >= 1/sqrt2).
EPS_HERM_SQ = 1e-6


class InvalidParamsError(ValueError):
    """Physical parameters violate the closed-form validity conditions."""


class BoundaryStateError(ValueError):
    """Operation needs generic-time coefficients but got a boundary-tagged set."""


class DegenerateStateError(ArithmeticError):
    """Closed form is 0/0 at the omega -> 0 locus; use the Fock oracle instead."""


@dataclass(frozen=True)
class ModelParams:
    """Physical inputs: hopping rate J, detuning Delta, squeeze magnitude r,
    squeeze phase phi (radians).  J and Delta share energy units; r and phi
    are dimensionless."""

    hopping: float
    detuning: float
    squeeze: float
    phase: float = 0.0


@dataclass(frozen=True)
class ValidityReport:
    jhat: float
    mu: float
    delta: float
    mu_tanh_r: float
    valid: bool
    reason: str = ""


@dataclass(frozen=True)
class StateCoeffs:
    """Closed-form coefficients at one interaction time.

    jhat     effective rate sqrt(J^2 + Delta^2); jt = jhat * t is the scaled time
    mu       hopping fraction J / jhat, in [0, 1]
    delta    detuning fraction Delta / jhat
    varphi   rotation phase solving tan(varphi) = delta * tan(jt)
    pair     pair-creation coefficient Omega multiplying a'^2 in the exponent
    herm     argument scale omega of the degree-n Hermite factor
    meas     amplitude scale sigma carried by the measured mode
    zeta     real ratio pair / herm^2
    gdet     Gaussian determinant factor Theta = 1 - 4 zeta^2 |omega|^4
    x1, x2   product-polynomial arguments -1 + 2|omega|^2/(1 - 2 zeta |omega|^2)
             and +1 + 2|omega|^2/(1 + 2 zeta |omega|^2)

    boundary is set where sin(jt) ~ 0: pair = meas = 0 there, herm is NaN
    (unusable), and callers must switch to the Fock-state limit formulas.
    degenerate is set where |omega|^2 < EPS_HERM_SQ; odd-n normalized closed
    forms are 0/0 on that locus.
    """

    jhat: float
    mu: float
    delta: float
    varphi: float
    jt: float
    pair: complex
    herm: complex
    meas: complex
    zeta: float
    gdet: float
    x1: float
    x2: float
    boundary: bool = False
    degenerate: bool = False

    @property
    def herm_sq(self) -> float:
        """|omega|^2, the workhorse real combination."""
        return abs(self.herm) ** 2


def validate(params: ModelParams) -> ValidityReport:
    """Check the convergence condition mu * tanh(r) < 1/2 and report Ĵ, mu, delta.

    Reporting only; derive_coeffs enforces.
    """
    j, d, r = params.hopping, params.detuning, params.squeeze
    jhat = math.hypot(j, d)
    if jhat == 0.0:
        return ValidityReport(0.0, math.nan, math.nan, math.nan, False,
                              "J and Delta are both zero; jhat undefined")
    mu = j / jhat
    delta = d / jhat
    if j < 0 or r < 0:
        return ValidityReport(jhat, mu, delta, mu * math.tanh(r), False,
                              "hopping and squeeze magnitude must be nonnegative")
    mtr = mu * math.tanh(r)
    if mtr >= 0.5:
        return ValidityReport(jhat, mu, delta, mtr, False,
                              f"mu*tanh(r) = {mtr:.6g} >= 1/2: closed forms diverge")
    return ValidityReport(jhat, mu, delta, mtr, True)


def derive_coeffs(params: ModelParams, t: float, *,
                  eps_time: float = EPS_TIME,
                  eps_herm_sq: float = EPS_HERM_SQ) -> StateCoeffs:
    """Coefficient set of the conditioned state at interaction time t >= 0.

    The varphi branch is atan2(delta*sin(jt), cos(jt)), the phase of the
    diagonal entry of the one-photon evolution matrix; it is continuous in t
    within each half-period and affects only the phases of pair/herm/meas
    (a rigid rotation of phase space), never a modulus-based observable.
    """
    report = validate(params)
    if not report.valid:
        raise InvalidParamsError(report.reason)
    if t < 0:
        raise InvalidParamsError(f"interaction time must be nonnegative, got {t}")

    jhat, mu, delta = report.jhat, report.mu, report.delta
    jt = jhat * t
    s = math.sin(jt)
    c = math.cos(jt)
    varphi = math.atan2(delta * s, c)

    if abs(s) < eps_time or mu == 0.0:
        # sin(jt) = 0 (or no hopping at all): the conditioned state is the
        # bare Fock state; omega has no finite value, poison it.
        return StateCoeffs(jhat=jhat, mu=mu, delta=delta, varphi=varphi, jt=jt,
                           pair=0j, herm=complex(math.nan, math.nan), meas=0j,
                           zeta=0.0, gdet=1.0, x1=math.nan, x2=math.nan,
                           boundary=True)

    ms = mu * abs(s)                       # mu |sin(jt)|, >= 0
    cc = math.sqrt(1.0 - ms * ms)          # sqrt(1 - mu^2 sin^2(jt))
    th = math.tanh(params.squeeze)
    phi = params.phase
    # For sin(jt) < 0 the +-pi/2 offsets in the coefficient phases flip sign;
    # this keeps all square roots acting on |sin| and preserves both the
    # proportionality pair = zeta * herm^2 and the cross-term phase exactly.
    half_pi = math.copysign(math.pi / 2, s)
    pair = cmath.exp(1j * (phi - varphi + half_pi)) * ms * cc * th
    herm = (cmath.exp(1j * (phi - varphi + half_pi) / 2)
            * math.sqrt(th) * (1.0 - 2.0 * ms * ms)
            / (2.0 * math.sqrt(ms) * cc ** 0.5))
    meas = (cmath.exp(1j * (phi + varphi - half_pi) / 2)
            * math.sqrt(ms * th) * cc ** 0.5)
    zeta = 4.0 * ms * ms * cc * cc / (1.0 - 2.0 * ms * ms) ** 2
    w2 = abs(herm) ** 2
    zw2 = zeta * w2
    gdet = (1.0 - 2.0 * zw2) * (1.0 + 2.0 * zw2)
    x1 = -1.0 + 2.0 * w2 / (1.0 - 2.0 * zw2)
    x2 = 1.0 + 2.0 * w2 / (1.0 + 2.0 * zw2)
    return StateCoeffs(jhat=jhat, mu=mu, delta=delta, varphi=varphi, jt=jt,
                       pair=pair, herm=herm, meas=meas, zeta=zeta, gdet=gdet,
                       x1=x1, x2=x2, degenerate=w2 < eps_herm_sq)
