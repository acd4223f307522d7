"""Photon statistics of the conditioned states: mean, variance, Mandel Q.

Detecting n photons in mode b leaves mode a in a superposition of squeezed
number states.  At zero interaction time that state is just |n> (mean n,
variance 0, Q = -1); at finite times the statistics depend strongly on the
coupling regime.  In the weak-coupling case all outcomes behave alike; in the
ultrastrong case the even and odd outcomes split into two families, with the
odd family sub-Poissonian (Q < 0) and the even family super-Poissonian.

Run:  python demos/photon_statistics.py
"""

import math

import numpy as np

from postfock import ModelParams, photon_stats, post_state
from postfock import fock_oracle


def sweep(params, label, outcomes=(5, 6, 7, 8)):
    jhat = math.hypot(params.hopping, params.detuning)
    print(f"{label}: J = {params.hopping} Delta, r = {params.squeeze}")
    print(f"{'jt':>6}" + "".join(f"  mean({n:d}) Q({n:d})".rjust(20)
                                 for n in outcomes))
    for jt in np.linspace(0.0, math.pi, 9):
        cells = []
        for n in outcomes:
            ps = photon_stats(post_state(params, float(jt) / jhat, n))
            q = f"{ps.mandel_q:7.3f}" if not math.isnan(ps.mandel_q) else "  undef"
            cells.append(f"{ps.mean_n:10.4f} {q}")
        print(f"{jt:6.3f}" + "  ".join(cells))
    print()


sweep(ModelParams(0.2, 1.0, 0.5), "weak coupling")
sweep(ModelParams(1.3, 1.0, 0.5), "ultrastrong coupling")

# The zero-time row reproduces the bare Fock limits exactly.
state = post_state(ModelParams(1.3, 1.0, 0.5), 0.0, 7)
ps = photon_stats(state)
print(f"zero-time limit for outcome 7: mean = {ps.mean_n}, "
      f"variance = {ps.variance}, Q = {ps.mandel_q}")
print()

# Cross-check one interior point against the brute-force route.
params = ModelParams(1.3, 1.0, 0.5)
t = 0.9 / math.hypot(1.3, 1.0)
closed = photon_stats(post_state(params, t, 6))
oracle = fock_oracle.fock_observables(fock_oracle.projected_vector(params, t, 6))
print("closed form vs brute force at jt = 0.9, outcome 6")
print(f"  mean:     {closed.mean_n:.12f}  vs  {oracle.mean_n:.12f}")
print(f"  variance: {closed.variance:.12f}  vs  {oracle.variance:.12f}")
print(f"  Mandel Q: {closed.mandel_q:.12f}  vs  {oracle.mandel_q:.12f}")
