"""The three Witten bundles of a circle representation.

The weight-(+-2) adjoint character lam^2 + lam^-2 is the representation
carried by the two-dimensional slice of SL(2,R); its rank-reduced Witten
bundles drive the induced-genus computations.  The Fourier coefficients
printed here are exact virtual characters.
"""

from fractions import Fraction

from propergenus.lambda_ring import (
    THETA,
    THETA1,
    THETA2,
    VirtualChar,
    ext_total,
    fourier_coefficient,
    sym_total,
    theta_bundle,
)

adjoint = VirtualChar.rep(2) + VirtualChar.rep(-2)
print("adjoint character  :", adjoint)
print("rank               :", adjoint.rank)
print("rank-reduced       :", adjoint.tilde())

print()
print("= Total symmetric and exterior powers =")
print("S_q                :", sym_total(adjoint, 1, 1, 3))
print("L_q                :", ext_total(adjoint, 1, 1, 3))
check = sym_total(adjoint, 1, 1, 6) * ext_total(adjoint, 1, -1, 6)
print("S_q . L_(-q)       :", check)

print()
print("= Witten bundles of the reduced adjoint =")
for variant in (THETA, THETA1, THETA2):
    series = theta_bundle(adjoint, variant, N=3)
    print(f"{variant:7}:")
    for grade in (0, Fraction(1, 2), 1, Fraction(3, 2), 2):
        coeff = fourier_coefficient(series, grade)
        if not coeff.char.is_zero() or grade <= 1:
            print(f"   q^{str(grade):4} -> {coeff.char}")

print()
print("= Adams-operation route agrees with the product route =")
virtual = VirtualChar.rep(3) - VirtualChar.rep(1)
a = sym_total(virtual, 1, 1, 5, route="adams")
b = sym_total(virtual, 1, 1, 5, route="product")
print("virtual input      :", virtual)
print("routes agree       :", a == b)
