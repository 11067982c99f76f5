"""
Verifying and finding congruences
=================================

A claim R(An+B) = 0 (mod M) is checked on every term An+B below N.
"""

from qcong.congruence import CongruenceClaim, claim_catalog, scan, scan_covers, verify_claim, verify_claims

for rep in verify_claims(claim_catalog(), 2000):
    print(f"{str(rep.claim):40} {rep.claim.status:24} {rep.checked_count:4} terms  holds={rep.holds}")

# a false claim comes back with its first counterexample
print(verify_claim(CongruenceClaim(4, 3, 12, 11, 27), 2000).first_counterexample)

# scanning reports the strongest modulus per progression and folds in what it implies
found = scan((4, 3), 12, [8, 24, 72], 2000)
for c in found:
    print(f"{c.A}n+{c.B} mod {c.M}", "implies", c.implies)
print(scan_covers(found, 12, 7, 8))
