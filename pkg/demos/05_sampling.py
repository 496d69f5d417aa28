"""
Random Herglotz measures
========================

Seeded sampling over atomic measures, as an independent check on the bound.
"""

# %%
from invhankel import sample_campaign

# %%
for atoms in (1, 2, 3, 4, 8):
    rep = sample_campaign(100_000, atoms, seed=0)
    print(f"{atoms} atoms: 9 max|H3(f)| = {9 * rep.max_h3_direct:.6f}  "
          f"9 max|H3(f^-1)| = {9 * rep.max_h3_inverse:.6f}")
