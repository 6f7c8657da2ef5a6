"""The floating-point laboratory: sampling moment images and checking identities.

Exact polytopes predict what sampled moment values must do; this script
samples real orbits, estimates their chamber-ray cuts, runs the
coadjoint-orbit fixed-set comparison, and checks the calibrated derivative
identity at random points.  Artifacts (CSV + SVG) land in ./demo_output/.
"""

import os

import numpy as np

from mplab import OrbitClass, SectionSpaceSpec, orbit_representatives
from mplab import numeric
from mplab.svgplot import render_samples_svg

OUT = "demo_output"
os.makedirs(OUT, exist_ok=True)
reps = orbit_representatives()

print("== the moment map in coordinates ==")
print(f"Phi at ((0:1),(0:1)), weights (2,1): {numeric.moment_map(((0, 1), (0, 1)), 2, 1)}")
print(f"Phi at ((1:0),(1:0)), weights (2,1): {numeric.moment_map(((1, 0), (1, 0)), 2, 1)}")
print("(the chamber ray is +e3; the doubly-fixed point sits at the far end)")

print("\n== sampled chamber cuts vs exact polytopes, weights (2,1) ==")
dense = numeric.sample_orbit(reps[OrbitClass.DENSE], "H", 100_000, seed=0, lam1=2, lam2=1)
print(f"dense orbit, radial mode:    {numeric.sampled_delta(dense, 'radial')}  (exact [1, 3])")
diag = numeric.sample_orbit(reps[OrbitClass.DIAGONAL], "H", 50_000, seed=0, lam1=2, lam2=1)
print(f"diagonal orbit, radial mode: {numeric.sampled_delta(diag, 'radial')}  (exact {{3}})")
first = numeric.sample_orbit(reps[OrbitClass.FIRST_FACTOR], "H", 100_000, seed=0, lam1=3, lam2=1)
print(f"factor orbit (3,1), angular: {numeric.sampled_delta(first, 'angular', 0.05)}  (exact {{2}})")
point = numeric.sample_orbit(reps[OrbitClass.POINT], "H", 1_000, seed=0, lam1=2, lam2=1)
print(f"fixed point (2,1), angular:  {numeric.sampled_delta(point, 'angular', 0.05)}  (exact empty)")

csv_path = os.path.join(OUT, "dense_orbit_samples.csv")
with open(csv_path, "w", newline="") as fh:
    numeric.write_samples_csv(numeric.sample_orbit(reps[OrbitClass.DENSE], "H", 2_000,
                                                   seed=1, lam1=2, lam2=1), fh)
print(f"\nwrote {csv_path}")

svg_path = os.path.join(OUT, "dense_orbit_moment_image.svg")
with open(svg_path, "w") as fh:
    fh.write(render_samples_svg(list(dense.phis[:2000, 0]), list(dense.phis[:2000, 2])))
print(f"wrote {svg_path} (the annulus between radii 1 and 3)")

print("\n== coadjoint-orbit fixed-set comparison ==")
for lam in (1, 2, 3):
    d = numeric.coadjoint_fixed_check(lam, 10_000, seed=0)
    print(f"radius {lam}: sphere-plane cut vs stabilizer orbit, Hausdorff {d:.4f}")
bad = numeric.coadjoint_fixed_check(1, 10_000, seed=0, plane="k")
print(f"negative control (fixed axis instead): {bad:.4f}  (circle vs two points)")

print("\n== calibrated derivative identity ==")
kappa = numeric.calibrate_gradient_normalization()
print(f"calibration constant: {kappa:.10f}  (compare 1/(4 pi) = {1 / (4 * np.pi):.10f})")
rng = np.random.default_rng(0)
worst = 0.0
done = 0
while done < 25:
    spec = SectionSpaceSpec(int(rng.integers(1, 3)), 2, 1)
    k = int(rng.integers(0, spec.k_max + 1))
    pt = tuple((rng.normal() + 1j * rng.normal(), rng.normal() + 1j * rng.normal())
               for _ in range(2))
    xi = np.array([[rng.normal(), rng.normal()], [0.0, 0.0]], dtype=complex)
    xi[1, 1] = -xi[0, 0]
    try:
        worst = max(worst, numeric.gradient_identity_residual(pt, xi, spec, k, kappa))
    except ValueError:
        continue
    done += 1
print(f"worst relative residual over 25 random (point, direction) pairs: {worst:.3e}")
