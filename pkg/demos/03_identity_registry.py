"""
Checking the identity registry
==============================

Each record states lhs = rhs, exactly or modulo some integer, and may be a
k-dissection whose components are compared one by one.
"""

from qcong.identities import check_all, check_dissection, get_identity, list_identities

records = list_identities()
print(len(records), "identities")

reports = check_all(300)
print(sum(r.holds for r in reports), "hold to order 300")

rec = get_identity("dis_f1_4")
print(rec.lhs, "=", rec.rhs)
print(check_dissection(rec, 100))

# a family with parameters: f_k^p = f_{pk} mod p
fam = get_identity("frobenius_mod_p")
params, lhs, rhs, m = next(fam.instances())
print(len(fam.params), "instances, e.g.", lhs, "=", rhs, "mod", m)
