"""
Caratheodory coefficients and starlike functions
================================================
"""

# %%
import numpy as np

from invhankel import CaratheodoryParams, HerglotzMeasure, c_from_params, p_from_measure, starlike_from_p
from invhankel.caratheodory import lemma_coefficients, sample_params, toeplitz_min_eigenvalue

# %% [markdown]
# (c1, delta, eta, rho) with c1 in [0, 2] and the rest in the closed disk
# parametrize the first four coefficients of every function with positive
# real part.  The Toeplitz test confirms realizability.

# %%
p = CaratheodoryParams(1.2, 0.4 + 0.3j, -0.6j, 0.9)
print(c_from_params(p))

c1, d, e, r = sample_params(np.random.default_rng(0), 10_000)
c2, c3, c4 = lemma_coefficients(c1, d, e, r)
print("min Toeplitz eigenvalue:", toeplitz_min_eigenvalue(c1, c2, c3, c4).min())

# %% [markdown]
# A finite Herglotz measure gives p directly; the starlike function of order
# 1/2 follows from zf'/f = (1 + p)/2.

# %%
m = HerglotzMeasure.roots_of_unity(3)
pm = p_from_measure(m, 7)
print(np.round(pm.coeffs, 12))
print(np.round(starlike_from_p(pm, 0.5).coeffs, 12))
