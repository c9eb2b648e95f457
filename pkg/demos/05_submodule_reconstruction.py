"""
Rebuilding a submodule lattice from its join irreducibles
=========================================================

The bundled case studies describe two multiplicity-free length-8
highest-weight modules over the orthosymplectic Lie superalgebra
osp(3|2).  For each we are given only partial information: the
composition-factor labels a..h, six join-irreducible submodules with
their factor sets, and how those submodules intersect.  The down-set
lattice of the declared irreducibles, with cover edges labeled by top
factors, is the whole submodule lattice.
"""

from collections import Counter
from pathlib import Path

import latticekit as lk
from latticekit.catalog import boolean_lattice, boolean_poset
import latticekit.freedist as fd

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# -- the generic family (parameter >= 2) ----------------------------------
spec = lk.load_spec(FIXTURES / "case_n2.json")
print("declared irreducibles:", [d.name for d in spec.irreducibles])

core = lk.reconstruct(spec)
print("core lattice:", core.n, "elements")
print(
    "isomorphic to the restricted rank-3 free distributive lattice:",
    lk.lattice_isomorphic(core.lattice, fd.generate_lattice(3)) is not None,
)

full = lk.reconstruct(spec, with_bounds=True)
print("with module top and socle:", full.n, "submodules")
print(
    "join irreducibles form the cube poset:",
    lk.is_isomorphic(lk.irreducible_poset(full.lattice), boolean_poset(3))
    is not None,
)

# -- the exceptional first member of the family ----------------------------
spec1 = lk.load_spec(FIXTURES / "case_n1.json")
ll = lk.reconstruct(spec1)
print("\nfirst case:", ll.n, "elements;", end=" ")
print(lk.reconstruct(spec1, with_bounds=True).n, "with bounds")

# Four generators are genuinely needed here.
r = lk.rank(ll.lattice)
print("rank:", r.rank, "witness:", sorted(r.witness))
missing = set(ll.names) - lk.sublattice_closure(ll.lattice, ["A", "B", "D"])
print("closure of A,B,D misses", len(missing), "elements, including B∩C:",
      "B∩C" in missing)

# Factor content of any element reads off the edge labels along a chain.
socle = next(
    x for x in ll.names
    if lk.element_factors(ll, x) == Counter({"d": 1, "f": 1, "g": 1})
)
print("socle of the quotient:", socle)

# Below the socle and above it the lattice is the box (cube) both times.
below = lk.interval_of(ll, ll.lattice.bottom, socle)
above = lk.quotient_by(ll, socle)
box = boolean_lattice(3)
print("[0, socle] is the box:", lk.lattice_isomorphic(below.lattice, box) is not None)
print("[socle, top] is the box:", lk.lattice_isomorphic(above.lattice, box) is not None)

# Every submodule is distinguished by its factor set.
sets = {frozenset(lk.element_factors(ll, x)) for x in ll.names}
print("all", len(sets), "factor sets distinct")
