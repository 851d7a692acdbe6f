# The closed-form coefficient families, checked term by term against the recurrence.
from fractions import Fraction

from kummer import ClosedFormFamily, ExcludedParameter, Family, certify_family, closed_coeff

for family in Family:
    for a in (Fraction(1, 3), Fraction(7, 2)):
        fam = ClosedFormFamily(family, a)
        try:
            result = certify_family(fam, 64)
        except ExcludedParameter as exc:
            print(f"{family.value:18s} a={a}: skipped ({exc.reason})")
            continue
        first = ", ".join(str(closed_coeff(fam, n)) for n in range(4))
        print(f"{family.value:18s} a={a}: certified={result.passed}  c0..c3 = {first}")
