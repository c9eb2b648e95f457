"""
Posets from cover relations
===========================

Build finite posets from Hasse-diagram edges, take closures and down-sets,
enumerate order ideals, and test isomorphism.
"""

import latticekit as lk
from latticekit.catalog import antichain_poset, boolean_poset, chain_poset

# A poset is given by element names plus (lower, upper) cover pairs.
# The order is the reflexive-transitive closure; redundant pairs are
# dropped with a warning.
pentagon = lk.build_poset(
    ["0", "a", "b", "c", "1"],
    [("0", "a"), ("a", "1"), ("0", "c"), ("c", "b"), ("b", "1")],
)
print("pentagon covers:", pentagon.cover_names())
print("0 <= b:", pentagon.le("0", "b"), "   a <= b:", pentagon.le("a", "b"))

# Principal down-sets and order ideals.
print("down-set of b:", sorted(lk.down_set(pentagon, "b")))
print("pentagon has", len(lk.order_ideals(pentagon)), "order ideals")

# An antichain of n points has 2^n ideals; a chain of length n has n+2.
print("3-antichain ideals:", len(lk.order_ideals(antichain_poset(3))))
print("chain of length 3 ideals:", len(lk.order_ideals(chain_poset(3))))

# The subsets-of-[3] poset has 20 ideals; this number returns as the
# size of the extended free distributive lattice on three generators.
cube = boolean_poset(3)
print("cube poset ideals:", len(lk.order_ideals(cube)))

# Duality reverses all covers; the pentagon happens to be self-dual.
dual = lk.dual_poset(pentagon)
print("pentagon iso to its dual:", lk.is_isomorphic(pentagon, dual) is not None)

# Isomorphism returns an explicit order-preserving bijection or None.
print("cube iso to itself:", lk.is_isomorphic(cube, cube) == {x: x for x in cube.names})
print(
    "pentagon iso to 5-chain:",
    lk.is_isomorphic(pentagon, chain_poset(4)),
)
