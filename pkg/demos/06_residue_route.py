"""
Why mod 8 works: exponents of theta products
============================================

Modulo 8 the numerator of the generating function collapses to a short sum
of theta series whose exponents are values of small quadratic forms. If no
form reaches a residue class, that class has zero coefficients mod 8.
"""

from qcong.congruence import (
    PROOF_FORM_LISTS, QuadraticFormSpec, check_missed_residues, mod8_forms, mod8_route,
    parse_form, residues_of_form,
)

print(sorted(residues_of_form(QuadraticFormSpec((1,), 12, (0,)))))
print(sorted(residues_of_form(QuadraticFormSpec((1,), 36, (0,)))))

# i and j start at 1; 3i^2+4j^2 still reaches 7 mod 12
print(sorted(residues_of_form(parse_form("3i^2+4j^2", 12, start=1))))

for pair, (texts, m, targets) in PROOF_FORM_LISTS.items():
    rep = check_missed_residues(mod8_forms(*pair, m), m, targets)
    print(pair, f"mod {m}", "misses", targets, rep.missed)

# 12n+7 for (4,3) is reached by two forms whose contributions cancel mod 8,
# so the numerical route is the one that settles it
print(check_missed_residues(mod8_forms(4, 3, 12), 12, [7]).hits)
print(mod8_route(4, 3, 12, [7], 2000))
