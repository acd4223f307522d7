"""Wigner distributions and their negativity for the conditioned states.

The Wigner function of the conditioned state is a degree-2n polynomial times
a Gaussian; its negative regions certify nonclassicality.  The excess
absolute volume delta_w = int |W| - 1 quantifies them.  In the ultrastrong
coupling regime at scaled time pi/2 the odd outcomes keep a large negativity
(~0.426, essentially the single-photon value) while the even outcomes are
nearly Gaussian (delta_w of order 1e-2 or below) -- the parity split at the
heart of this system.

The script writes grid files in the interchange CSV format next to a summary
table; point your favourite plotting tool at the files.

Run:  python demos/wigner_negativity.py [out_dir]
"""

import math
import sys
from pathlib import Path

from postfock import (ModelParams, negativity, normalization_integral,
                      post_state, wigner_eval, wigner_grid, write_grid_csv)

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_wigner_out")
out_dir.mkdir(parents=True, exist_ok=True)

params = ModelParams(hopping=1.3, detuning=1.0, squeeze=0.5)
jhat = math.hypot(1.3, 1.0)
t = (math.pi / 2.0) / jhat

print("ultrastrong coupling, jt = pi/2")
print(f"{'n':>3} {'W(0)':>10} {'delta_w':>10} {'est_err':>9} {'radius':>7} "
      f"{'int W':>10}  file")
for n in (0, 1, 5, 6, 7, 8):
    state = post_state(params, t, n)
    res = negativity(state, tol=1e-4)
    norm = normalization_integral(state, tol=1e-3)
    grid = wigner_grid(state, -3.5, 3.5, -3.5, 3.5, 141, 141)
    path = out_dir / f"wigner_n{n}.csv"
    write_grid_csv(grid, path)
    center = wigner_eval(state, 0j)
    print(f"{n:3d} {center:10.5f} {res.delta_w:10.5f} {res.est_error:9.1e} "
          f"{res.truncation_radius:7.2f} {norm.value:10.6f}  {path}")

print()
print("The odd outcomes sit near the single-photon negativity 0.42612;")
print("the even ones are near-Gaussian.  Every distribution integrates to 1.")
print()

# Zero interaction time: the conditioned state is the bare Fock state, whose
# Wigner function has the textbook central values (-1)^n * 2/pi.
print("zero-time central values W(0) = (-1)^n 2/pi:")
for n in range(4):
    state = post_state(params, 0.0, n)
    print(f"  n = {n}: {wigner_eval(state, 0j):+.6f}")
