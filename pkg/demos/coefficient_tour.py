"""Tour of the time-dependent coefficients of the conditioned state.

Two bosonic modes exchange photons at rate J with detuning Delta, starting
from a two-mode squeezed vacuum (magnitude r).  Everything downstream -- norms,
photon statistics, Wigner functions -- is built from a handful of
time-dependent coefficients.  This script walks their structure: the validity
condition, the pi-periodicity in scaled time, the exact proportionality
between the pair coefficient and the squared Hermite scale, and the two
special loci (zero time, vanishing Hermite scale) that need analytic or
oracle handling.

Run:  python demos/coefficient_tour.py
"""

import math

import numpy as np

from postfock import ModelParams, derive_coeffs, validate

params = ModelParams(hopping=1.3, detuning=1.0, squeeze=0.5, phase=0.0)
report = validate(params)
print("validity report")
print(f"  jhat = {report.jhat:.6f}, mu = {report.mu:.6f}, delta = {report.delta:.6f}")
print(f"  mu * tanh(r) = {report.mu_tanh_r:.6f}  (< 0.5 required) ->",
      "valid" if report.valid else "invalid")
print()

# A squeeze magnitude too large for the hopping fraction breaks convergence.
too_strong = validate(ModelParams(1.0, 0.0, 2.0))
print(f"counterexample r = 2, Delta = 0: mu*tanh(r) = {too_strong.mu_tanh_r:.4f}"
      f" -> {'valid' if too_strong.valid else 'invalid'}")
print()

print("coefficients over one period in scaled time jt = jhat * t")
print(f"{'jt':>6} {'|pair|':>9} {'|herm|':>9} {'|meas|':>9} "
      f"{'zeta':>10} {'gdet':>8}  tag")
for jt in np.linspace(0.0, math.pi, 13):
    c = derive_coeffs(params, float(jt) / report.jhat)
    tag = "boundary" if c.boundary else ("degenerate" if c.degenerate else "")
    if c.boundary:
        print(f"{jt:6.3f} {abs(c.pair):9.5f} {'--':>9} {abs(c.meas):9.5f} "
              f"{c.zeta:10.4f} {c.gdet:8.5f}  {tag}")
    else:
        print(f"{jt:6.3f} {abs(c.pair):9.5f} {abs(c.herm):9.5f} "
              f"{abs(c.meas):9.5f} {c.zeta:10.4f} {c.gdet:8.5f}  {tag}")
print()

# The pair coefficient is exactly zeta * herm^2, and the Gaussian determinant
# factor can be computed two ways; both identities hold to rounding.
c = derive_coeffs(params, 0.9 / report.jhat)
print("exact identities at jt = 0.9")
print(f"  |pair - zeta*herm^2| = {abs(c.pair - c.zeta * c.herm**2):.2e}")
print(f"  |gdet - (1 - 4|pair|^2)| = {abs(c.gdet - (1 - 4 * abs(c.pair)**2)):.2e}")

# Periodicity: moduli repeat after jt -> jt + pi.
c2 = derive_coeffs(params, (0.9 + math.pi) / report.jhat)
print(f"  |pair| at jt and jt+pi: {abs(c.pair):.12f} vs {abs(c2.pair):.12f}")
print()

# For mu >= 1/sqrt(2) the Hermite scale vanishes at an interior time; odd
# outcomes lose their closed forms there and the package reroutes to the
# brute-force oracle.
mu = report.mu
jt_locus = math.asin(math.sqrt(0.5) / mu)
c_locus = derive_coeffs(params, jt_locus / report.jhat)
print(f"degenerate locus at jt = {jt_locus:.6f}: |herm|^2 = "
      f"{c_locus.herm_sq:.3e}, tagged degenerate = {c_locus.degenerate}")
