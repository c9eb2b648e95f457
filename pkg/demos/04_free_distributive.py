"""
Free distributive lattices and Dedekind numbers
===============================================

Elements are canonical antichains of clauses (join of meets of
generators).  Counting the extended lattice gives the Dedekind numbers;
expressions canonicalize through the clause algebra.
"""

import latticekit as lk
import latticekit.freedist as fd

# Canonical forms: two spellings of the same monotone function agree.
a = fd.parse_dnf("P1 & (P2 | P3)")
b = fd.parse_dnf("P1&P2 | P3&P1")
print("canonical:", fd.clause_set_str(a), "==", fd.clause_set_str(b), a == b)

# Absorption happens automatically during pruning.
print("P1 | (P1 & P2) ->", fd.clause_set_str(fd.parse_dnf("P1 | (P1 & P2)")))

# The join/meet clause algebra tracks truth tables exactly.
x = fd.from_clauses(3, [[1], [2]])
y = fd.generator(3, 3)
meet = fd.fd_meet(x, y)
print("(P1|P2) & P3 ->", fd.clause_set_str(meet))
assert meet.truth_table() == (x.truth_table() & y.truth_table())

# Counting: sizes of the extended lattice for 0..6 generators.
print("counts:", [fd.dedekind_count(n) for n in range(7)])

# The count doubles as the ideal count of the subsets-of-[n] poset.
from latticekit.catalog import boolean_poset

print("ideal counts agree:", [
    len(lk.order_ideals(boolean_poset(n))) for n in range(5)
])

# Materialize the rank-3 lattice: 18 elements, 20 with adjoined bounds.
l3 = fd.generate_lattice(3)
l3e = fd.generate_lattice(3, extended=True)
print("rank 3:", l3.n, "restricted /", l3e.n, "extended")
print("graded of degree:", lk.grade(l3e).degree[l3e.top])

# Self-duality and the generator meets (the join irreducibles).
print("self-dual:", lk.check_self_dual(3) is not None)
meets = lk.meets_distinct(3)
print("generator meets:", [fd.clause_set_str(m) for m in meets.meets])
print("equal the join irreducibles:", meets.ok)
