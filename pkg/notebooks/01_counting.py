# %% [markdown]
# # Counting Reeb graphs on RP^2
#
# `K(k)` counts rooted oriented trees with `k` saddles and `N(k)` counts
# Reeb graphs of simple Morse functions on the projective plane.  Both are
# exact Python integers, so the recurrence can run well past 64 bits.

# %%
from reebrp2 import K, N, table
from reebrp2.count import erratum

for k, value in table(14, "rooted"):
    print(f"K({k:2d}) = {value}")

# %%
for k, value in table(15, "full"):
    note = erratum("full", k)
    print(f"N({k:2d}) = {value}" + (f"    <- {note}" if note else ""))

# %% [markdown]
# Consecutive ratios are still creeping upward at k = 40 (about 5.7 at
# k = 10, 6.25 at k = 40).

# %%
for k in (10, 20, 40):
    print(k, K(k + 1) / K(k), N(k + 1) / N(k))
print("K(40) =", K(40))
