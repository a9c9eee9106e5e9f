# %% [markdown]
# # Checking arbitrary graphs
#
# `check_theorem1` reports, per condition, whether an oriented graph can be
# the Reeb graph of a simple Morse function on RP^2.  Valid graphs can be
# turned back into their canonical form, which decides isomorphism.

# %%
import random

from reebrp2 import ExplicitGraph, check_theorem1, encode_full, full_from_explicit, is_isomorphic
from reebrp2 import enum_full, mutate_for_tests, to_explicit

g = ExplicitGraph(3, ((0, 1), (1, 2)))
print(check_theorem1(g).to_text())
print(encode_full(full_from_explicit(g)))

# %%
cycle = ExplicitGraph(3, ((0, 1), (1, 2), (2, 0)))
print(check_theorem1(cycle).to_text())

# %% [markdown]
# Shuffling vertex labels leaves the canonical form unchanged.

# %%
e = to_explicit(list(enum_full(4))[17])
perm = list(range(e.vertex_count))
random.Random(1).shuffle(perm)
print(is_isomorphic(e, e.relabel(perm)))

# %%
for mode in ("add-cycle", "split-deg2", "flip-internal-to-sink"):
    print(mode, check_theorem1(mutate_for_tests(e, mode)).failed())
