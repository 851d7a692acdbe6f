# Evaluating 0F1 and 1F1 series, and what the evaluation modes buy you.
import math
from fractions import Fraction

from kummer import eval_0f1, eval_1f1

# 0F1(-; 1/2; z^2/4) is cosh z and z * 0F1(-; 3/2; z^2/4) is sinh z.
for z in (0.5, 1.0, 3.0):
    c = eval_0f1(0.5, z * z / 4, 1e-15)
    s = eval_0f1(1.5, z * z / 4, 1e-15)
    print(f"z={z}: cosh {c.value:.16f} vs {math.cosh(z):.16f}   "
          f"sinh {z * s.value:.16f} vs {math.sinh(z):.16f}   ({c.terms_used} terms)")

# 1F1(1; 2; x) = (e^x - 1) / x
print("1F1(1;2;2) =", eval_1f1(1, 2, 2.0).value, "closed form", (math.exp(2) - 1) / 2)

# Large negative arguments cancel badly in double precision; those calls are
# re-summed exactly (rational input) or in extended precision (float input).
for a, b, x in ((1, 1, -30.0), (Fraction(1, 3), Fraction(5, 2), Fraction(-12))):
    res = eval_1f1(a, b, x)
    print(f"1F1({a};{b};{x}) = {res.value!r}  mode={res.mode}")
print("exp(-30) =", math.exp(-30))
