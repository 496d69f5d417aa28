"""
The extremal function
=====================

f0(z) = z / (1 - z^3)^(1/3) attains |H_3(1)| = 1/9 for itself and its inverse.
"""

# %%
from invhankel import extremal_witness
from invhankel.extremal import binomial_f0, closed_form_inverse

# %%
print(binomial_f0(10).coeffs)
print(closed_form_inverse(10).coeffs)

# %%
rep = extremal_witness()
print("H3(f0)     =", rep.h3_direct)
print("H3(f0^-1)  =", rep.h3_inverse)
print("all checks:", rep.passed)
