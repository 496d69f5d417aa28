"""
Series reversion
================

Truncated power series with exact rational coefficients, and the local
inverse of a normalized function computed order by order.
"""

# %%
from fractions import Fraction
from math import factorial

from invhankel import TruncatedSeries, compose, revert

# %% [markdown]
# The Koebe function z/(1-z)^2 has coefficients 1, 2, 3, ...  Its inverse has
# Catalan-like magnitudes (2n)!/(n!(n+1)!).

# %%
koebe = TruncatedSeries.exact([0, 1, 2, 3, 4, 5, 6, 7, 8])
inv = revert(koebe)
for n in range(2, 9):
    print(n, inv[n], factorial(2 * n) // (factorial(n) * factorial(n + 1)))

# %%
print(compose(koebe, inv) == TruncatedSeries.identity(8))

# %% [markdown]
# The same routine runs on complex floats.

# %%
f = TruncatedSeries.normalized([Fraction(1, 2), Fraction(-1, 3), 0, Fraction(1, 7)], 5, exact=False)
print(revert(f).coeffs)
