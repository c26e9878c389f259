#!/usr/bin/env python3
"""The four-step rigidity verification and the sl2 window oracle.

Run:  python demos/rigidity_pipeline.py
"""

import json
from fractions import Fraction as F

from sl2wt import admissible_level, wt
from sl2wt import sl2_oracle as so
from sl2wt.pipeline import run_pipeline

# --- the oracle that backs the key inputs ------------------------------------
# The relaxed string module breaks exactly where the Casimir hits C_mu:
lam, mu = F(1, 3), F(1, 3) + 6
c_mu = mu * mu / 2 + mu
print(f"string lam = {lam}, Casimir = C_mu = {c_mu}:")
print("  reducibility points:", [str(p) for p in so.reducibility_points(lam, c_mu, "minus", 12)])
win = so.build_relaxed(lam, c_mu, "minus", 12)
print("  bracket relations hold:", win.check_brackets())
print("  D- submodule window-stable:", win.is_submodule_stable(wt(mu)))

# and the depth-1 singular vector over D+(1,1) is annihilated by all raising
# modes (perturbing any coefficient destroys this):
for u, v in [(3, 2), (2, 3), (5, 3)]:
    lv = admissible_level(u, v)
    print(f"  singular vector at t = {lv}: {so.verify_affine_singular(lv)}",
          f"(perturbed: {so.verify_affine_singular(lv, F(1))})")
print()

# --- the pipeline -------------------------------------------------------------
# Step 1: F(A) splits with local factors.     Step 2: multiplicity counts force
# every simple extended module to be local.   Step 3: induction commutes with
# duality layer by layer.                     Step 4: a monodromy witness shows
# the simple quotient of A is not Mueger central.
for u, v in [(3, 2), (2, 3)]:
    lv = admissible_level(u, v)
    print(run_pipeline(lv).to_text())
    print()

# Reports also serialize to JSON for batch consumption:
report = run_pipeline(admissible_level(5, 3))
blob = json.dumps(report.to_json(), sort_keys=True)
print(f"5/3 report: verdict={report.verdict}, {len(blob)} bytes of JSON")
