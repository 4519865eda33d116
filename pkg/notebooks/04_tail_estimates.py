# %% [markdown]
# # Sections of order n >= 4
#
# Tail majorants ``A(n, r)`` and ``B(n, r)`` built from the coefficient bound
# control the difference between a section and the full function.  At
# ``r = sqrt(2)/3`` they are small enough that every section with ``n >= 4`` is
# convex.

# %%
import math

from oddconvex import bounds
from oddconvex.curvature import min_curvature_on_circle
from oddconvex.series import f0_coefficients, section

r = math.sqrt(2) / 3
t = bounds.tail_bounds(4, r)
print(t)
print("A + B      =", t.A + t.B)
print("closed form=", bounds.tail_AB_closed_form(r))
print("threshold  =", bounds.tail_threshold())

# %% The sufficient inequality along n
for n in (4, 5, 6, 10, 20, 50, 100):
    print(n, f"{bounds.general_case_lhs(n, r):.3e}", "<", f"{1 - 4 * r * r:.4f}", bounds.general_case_inequality(n, r))

# %% The analytic lower bound versus the true minimum for sections of f0
f = f0_coefficients(10)
for n in range(4, 11):
    print(n, f"bound {bounds.curvature_lower_bound(n, r):.4f}",
          f"actual {min_curvature_on_circle(section(f, n), r).min_value:.4f}")
