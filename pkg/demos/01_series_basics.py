"""
Truncated power series with exact integer coefficients
=======================================================

Every series carries its own truncation order N and stores c_0 .. c_{N-1}.
Results of binary operations keep the smaller order of the two inputs.
"""

from qcong import series as S

a = S.from_coeffs([1, -1])          # 1 - q, known mod q^2
b = S.from_coeffs([1, 2, 3, 4, 5])  # known mod q^5
print((a * b).order)                # 2: the product is only good to q^2

# inverses exist when c_0 is +1 or -1
u = S.from_coeffs([1, -1, 0, 0, 0, 0, 0, 0])
print(S.invert(u).coeffs)           # 1/(1-q) = 1 + q + q^2 + ...

# coefficients are Python ints, so they never overflow
big = S.power(S.from_coeffs([1, 1] + [0] * 98), 2000)
print(len(str(big[50])), "digits in the coefficient of q^50 of (1+q)^2000")

# dissection splits by exponent mod k; reassembly undoes it
x = S.from_coeffs(range(1, 13))
d = S.dissect(x, 3)
for r, part in enumerate(d.parts):
    print(r, part.coeffs)
assert S.reassemble(d) == x

# reduction mod m and congruence testing
print(S.reduce_mod(x, 4).coeffs)
print(S.series_congruent(x, S.reduce_mod(x, 4), 4))
