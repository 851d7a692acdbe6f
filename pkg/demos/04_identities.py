# Kummer's second transformation and its two contiguous neighbours, checked
# numerically on a grid, exactly as power series, and through the connection
# constants of the Frobenius basis.
from fractions import Fraction

from kummer import IdentityId, connection_constants, lhs_series_exact, verify_identity

z_grid = [-5, -1, -0.1, 0, 0.1, 1, 5]
for identity, a_grid in (
    (IdentityId.KUMMER2, [0.25, 0.5, 1, 2.5, 7]),
    (IdentityId.CONTIG_PLUS, [0.25, 0.5, 1, 2.5, 7]),
    (IdentityId.CONTIG_MINUS, [0.25, 1, 2.5, 7]),
):
    report = verify_identity(identity, a_grid, z_grid, 1e-10)
    print(f"{identity.value:13s} passed={report.passed}  worst relative residual {report.max_residual:.1e}")

a = Fraction(1, 4)
print("\ne^{-z} 1F1(a;2a+1;2z) at a=1/4, first coefficients:",
      [str(c) for c in lhs_series_exact(IdentityId.CONTIG_PLUS, a, 5)])
for identity in IdentityId:
    cc = connection_constants(identity, a, 16)
    print(f"{identity.value:13s} A={cc.A} B={cc.B} consistent through z^{cc.N}: {cc.consistent}")
