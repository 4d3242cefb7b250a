"""
Witnessing isomorphisms of doubles
==================================

A 6x6 matrix C is an isomorphism of doubles when it keeps the pairing,
C B C^T = B, and carries brackets to brackets.  We check a stored matrix,
compose two of them, and let the bounded search find one on its own.
"""

from drinfeld_lab import (DUALITY_WITNESS, catalog_iso, catalog_triple, compose, dualize, invert, search_iso,
                          verify_double_iso, verify_matrix)

cand = catalog_iso("(9|5|b)", "(8|5.ii|b)", {"b": 1})
print(cand.describe())
for row in cand.matrix.rows:
    print("  ", " ".join(f"{str(x):>5s}" for x in row))
print("valid:", verify_double_iso(cand).valid)

# swapping G and G~ is always an isomorphism of doubles
t = catalog_triple("(7_0|4|b)", {"b": 2})
print("duality:", verify_matrix(DUALITY_WITNESS, t, dualize(t)).valid)

# two stored matrices out of (5|1) give one between their targets
a = catalog_iso("(5|1)", "(5|2.i)").matrix
b = catalog_iso("(5|1)", "(6_0|1)").matrix
c = compose(invert(a), b)
print("(5|2.i) -> (6_0|1) by composition:", verify_matrix(c, catalog_triple("(5|2.i)"), catalog_triple("(6_0|1)")).valid)

# a bad guess says what went wrong
rep = verify_matrix(DUALITY_WITNESS, catalog_triple("(2|2.i)"), catalog_triple("(2|2.ii)"))
print(rep.diagnosis, rep.bracket_violations[:3])

# search: invariants first, then backtracking over small rational entries
res = search_iso(catalog_triple("(4|1)"), catalog_triple("(4|2.ii)"))
print(res.status, res.nodes, "nodes")
res = search_iso(catalog_triple("(2|2.i)"), catalog_triple("(2|2.ii)"))
print(res.status, res.reason)
