# %% [markdown]
# # The quintic section
#
# With ``a_3 = alpha/2`` and ``a_5 = 3(3 alpha^2 + 2 beta)/40`` the required
# inequality becomes a statement on the torus ``|alpha| = |beta| = 1``.  It is
# reduced to ``T(x) > 5`` for ``x = Re(alpha)``, then to positivity of a quartic.

# %%

import numpy as np

from oddconvex import case_analysis as ca

scan = ca.case3_torus_scan(720)
print(f"torus minimum {scan.min_value:.9f} at angles {scan.argmin}")

# %% T on [-1, 1]
x = np.linspace(-1, 1, 100_001)
print("min T =", ca.T_eval(x).min(), " T(-1) =", ca.T_eval(-1.0), " T(1) =", ca.T_eval(1.0))

# %% Exact squaring steps and the quartic
print("81 R1 - 25 - 36 R2 =", [str(c) for c in ca.squared_once()])
print("expanded quartic   =", [str(c) for c in ca.phi_expansion()])
print("matches stored phi :", ca.phi_expansion_identity())
for check in ca.phi_cascade_check():
    print(check.status, check.name, check.value)

# %% Direct check: curvature of z + a3 z^3 + a5 z^5 on |z| = sqrt(2)/3
worst = min(ca.s5_boundary_min(np.exp(1j * s), np.exp(1j * t), 1024)
            for s in np.linspace(0, 2 * np.pi, 16, endpoint=False)
            for t in np.linspace(0, 2 * np.pi, 16, endpoint=False))
print("smallest boundary curvature over a 16x16 (alpha, beta) grid:", worst)

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    xs = np.linspace(-1, 1, 400)
    plt.plot(xs, ca.T_eval(xs))
    plt.axhline(5, ls="--")
    plt.title("T(x)")
    plt.show()
