# Frobenius solutions of the reduced Kummer equations at z = 0.
from fractions import Fraction

from kummer import frobenius_basis, indicial_roots, ode_residual, reduce_kummer, solve_frobenius

a = Fraction(1, 3)
for offset in (0, 1, -1):
    ode = reduce_kummer(a, offset)
    roots = indicial_roots(ode)
    print(f"b = 2a{offset:+d}: z y'' + ({ode.beta}) y' + ({ode.gamma} + ({ode.delta}) z) y = 0,"
          f" exponents {roots.root_zero} and {roots.root_other}")
    for lam in (roots.root_zero, roots.root_other):
        sol = solve_frobenius(ode, lam, 8)
        residual = ode_residual(ode, sol)
        print(f"  lam={lam}: c = {[str(c) for c in sol.coeffs[:6]]} ...  residual all zero: {not any(residual)}")

# When the exponents differ by an integer the lower one runs into a vanishing
# denominator; that is reported, not papered over.
ode = reduce_kummer(Fraction(3, 2), 1)
upper, lower = frobenius_basis(ode, 10)
print(f"\na=3/2, b=2a+1: gap {indicial_roots(ode).integer_gap}; "
      f"lam={lower.lam} stops after c_{lower.N} with log_case={lower.log_case}")
