# %% [markdown]
# # Building every graph
#
# Rooted trees are assembled from smaller ones by attaching two children
# to a new saddle: both above it (an unordered pair), or one above and one
# below (an ordered pair).  Full graphs glue a lower and an upper tree at the
# single degree-2 saddle.

# %%
from reebrp2 import attach_mixed, attach_up_up, encode, enum_full, enum_rooted, glue, leaf, to_explicit

star = leaf()
print(encode(attach_up_up(star, star)), encode(attach_mixed(star, star)))
print(encode(glue(star, attach_mixed(star, star))))

# %%
for t in enum_rooted(2):
    print(encode(t))

# %% [markdown]
# The four two-saddle graphs and the sizes of the next two families.

# %%
for g in enum_full(2):
    e = to_explicit(g)
    print(encode(g), e.edges)
print([len(list(enum_full(k))) for k in (3, 4)])

# %% [markdown]
# DOT text for one of them; pipe into `dot -Tsvg` to draw it.

# %%
from reebrp2 import to_dot

print(to_dot(to_explicit(list(enum_full(3))[0]), name="first"))
