"""
Drinfeld doubles and their coarse invariants
============================================

Build the double of one Manin triple, look at its brackets and pairing,
then sweep the catalog for Killing signatures and series dimensions.
"""

from collections import Counter

from drinfeld_lab import build_double, catalog_on_grid, catalog_triple, emit_triple, killing_gram, series_profile, signature
from drinfeld_lab.manin import axiom_report

# one triple with a scaling parameter
t = catalog_triple("(9|5|b)", {"b": 2})
print(t)
print(emit_triple(t))

# every axiom is an exact check
for name, ok in axiom_report(t).items():
    print(f"{name:35s} {ok}")

d = build_double(t)
k = killing_gram(d.algebra)
print("Killing form signature:", signature(k))   # (3,3,0): so(3,1)-like, semisimple
print("series [D,D], D^2, D^3, D_2, D_3:", series_profile(d.algebra).as_tuple())

# the whole catalog on the default grid, duals included
rows = Counter()
for x in catalog_on_grid():
    alg = build_double(x).algebra
    rows[signature(killing_gram(alg)) + series_profile(alg).as_tuple()] += 1

print()
print("signature   series            count")
for key, n in sorted(rows.items(), reverse=True):
    print(f"{str(key[:3]):11s} {str(key[3:]):17s} {n}")
