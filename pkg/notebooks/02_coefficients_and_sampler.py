# %% [markdown]
# # Coefficient bounds and sampled members
#
# A point mass at 1 in the Herglotz representation produces the extremal
# function exactly; random finite measures give members we can test against
# the coefficient, log-derivative and distortion estimates.

# %%

import numpy as np

from oddconvex import coeff_bound, distortion_bounds, eval012, log_deriv_bound, section
from oddconvex.bounds import truncation_order
from oddconvex.curvature import is_convex_in_disk
from oddconvex.sampler import delta, member_from_measure, random_measure, validate_membership

extremal = member_from_measure(delta(), 8)
print([str(c) for c in extremal.coeffs])
print([str(coeff_bound(n)) for n in range(1, 9)])

# %% A random member
n_max = truncation_order(0.8, 1e-10)
m = random_measure(seed=2024, atom_count=3)
f = member_from_measure(m, n_max)
print("atoms:", m.atoms)
print("member of the class at r=0.8:", validate_membership(f, 0.8))
print("|a_(2n-1)| / bound:", [round(abs(complex(f.coefficient(n))) / float(coeff_bound(n)), 4) for n in range(2, 8)])

# %% Estimates at random points
rng = np.random.default_rng(0)
r = 0.8 * np.sqrt(rng.uniform(size=2000))
z = r * np.exp(2j * np.pi * rng.uniform(size=2000))
_, d1, d2 = eval012(f, z)
print("max |z f''/f'| - bound:", np.max(np.abs(z * d2 / d1) - 3 * r**2 / (1 - r**2)))
lo = np.array([distortion_bounds(x)[0] for x in r])
hi = np.array([distortion_bounds(x)[1] for x in r])
print("distortion slack:", np.min(np.abs(d1) - lo), np.min(hi - np.abs(d1)))

# %% Every section is convex just inside sqrt(2)/3
print(all(is_convex_in_disk(section(f, n), 0.98 * np.sqrt(2) / 3) for n in range(2, 13)))
