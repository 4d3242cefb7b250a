"""
Invariants that separate doubles with equal Killing data
========================================================

Many doubles share Killing signature and series dimensions.  The finer
invariants split them apart.
"""

from fractions import Fraction

from drinfeld_lab import (catalog_triple, center_form_signature, invariant_profile, levi_restriction_class,
                          mia_census, semisimple_split_coeffs)
from drinfeld_lab.manin import DOUBLE_LABELS

# semisimple doubles: the pairing is a combination of the Killing forms
# of the two simple factors; the pair of coefficients is packed into q(l)
for label, p in [("(9|5|b)", {"b": 1}), ("(8|5.ii|b)", {"b": 1}), ("(8|5.i|b)", {"b": 1}),
                 ("(7_a|7_{1/a}|b)", {"a": 2, "b": 1}), ("(7_a|7_{1/a}|b)", {"a": Fraction(1, 2), "b": 1})]:
    print(f"{label:18s} {p}  q = {semisimple_split_coeffs(catalog_triple(label, p))}")

# doubles with a Levi factor and abelian radical
for label, p in [("(8|1)", {}), ("(7_0|4|b)", {"b": 2}), ("(4|2.iii|b)", {"b": 2}), ("(6_0|4.i|b)", {"b": -2})]:
    print(f"{label:14s} {p}  {levi_restriction_class(catalog_triple(label, p))}")

# the center tells (2|2.i) and (2|2.ii) apart
print("(2|2.i) ", center_form_signature(catalog_triple("(2|2.i)")))
print("(2|2.ii)", center_form_signature(catalog_triple("(2|2.ii)")))

# solvable doubles: maximal isotropic abelian subalgebras and their dual partners
for label, p in [("(6_a|1)", {"a": 2}), ("(5|1)", {}), ("(7_0|2.i)", {})]:
    census = mia_census(catalog_triple(label, p))
    print(label, census.summary())
    for f in census.families:
        partner = f.dual_type if f.dual_exists else "none"
        print("    ", f.describe(DOUBLE_LABELS), "  partner:", partner)

# everything at once
print(invariant_profile(catalog_triple("(7_0|2.ii)")).separating())
