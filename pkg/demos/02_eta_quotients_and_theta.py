"""
Eta quotients and theta functions
=================================

f_n stands for the Euler product prod_{j>=1} (1 - q^{jn}).
"""

from qcong.expr import expand, parse, to_text
from qcong.products import ProductSpec, eta_quotient, phi, psi, theta_expand

# f_1 is sparse: only pentagonal exponents survive
f1 = expand("f1", 30)
print([n for n, c in enumerate(f1.coeffs) if c])

# overpartitions: f2 / f1^2
print(expand("f2 * f1^-2", 10).coeffs)

# the same thing built from a spec object
spec = ProductSpec.of({2: 1, 1: -2})
print(spec.text, eta_quotient(spec, 10) == expand(spec.text, 10))

# theta functions as sums and as products agree
print(theta_expand(phi(-1), 12).coeffs)
print(expand("f1^2 / f2", 12).coeffs)
print(theta_expand(psi(1), 12).coeffs)

# the text grammar mixes both, with q-powers, sums and constants
node = parse("phi(q) - 2*q*f4^2/f2")
print(to_text(node))
print(expand(to_text(node), 12).coeffs)
