# %% [markdown]
# # The sharp radius for the third section
#
# The cubic section of ``z / sqrt(1 - z^2)`` is ``z + z^3/2``.  Its curvature
# functional is ``(2 + 9z^2) / (2 + 3z^2)``, which vanishes at ``z = i sqrt(2)/3``.

# %%
import math

import numpy as np

from oddconvex import curvature, f0_coefficients, min_curvature_on_circle, radius_of_convexity, section
from oddconvex.curves import curvature_sign_changes, s3_image

s30 = section(f0_coefficients(2), 2)
sharp = math.sqrt(2) / 3
print("curvature at i*sqrt(2)/3:", curvature(s30, 1j * sharp))
print("curvature at 0.5i:        ", curvature(s30, 0.5j))

# %% Boundary scan and bisection
scan = min_curvature_on_circle(s30, sharp)
print(scan)
res = radius_of_convexity(s30, tol=1e-10)
print(f"radius of convexity {res.radius:.12f}  vs sqrt(2)/3 = {sharp:.12f}")

# %% Longer sections of the same function have larger radii
f = f0_coefficients(12)
for n in range(2, 13):
    print(n, f"{radius_of_convexity(section(f, n)).radius:.8f}")

# %% Image of the circle: convex at sqrt(2)/3, dented at 2/3
for r in (sharp, 2 / 3):
    print(f"r={r:.4f}: curvature sign changes = {curvature_sign_changes(s3_image(r))}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    for ax, r in zip(axes, (sharp, 2 / 3)):
        c = s3_image(r)
        ax.plot(np.append(c.x, c.x[0]), np.append(c.y, c.y[0]))
        ax.set_aspect("equal")
        ax.set_title(f"s3,0(|z| = {r:.4f})")
    plt.show()
