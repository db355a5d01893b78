"""Smoke test for the pyweyl extension module.

Run after `pip install --no-build-isolation -e crates/python`:

    python crates/python/python/smoke_test.py
"""

import pyweyl
from pyweyl import Element


def check(cond, what):
    if not cond:
        raise SystemExit(f"FAIL: {what}")
    print(f"ok: {what}")


X, Y, H = Element("X"), Element("Y"), Element("H")
check(Y * X - X * Y == Element("1"), "YX - XY = 1")
check(X * Y == H - 1, "XY = H - 1")
check(str(Element("H*X - X*H")) == "(1)*X", "[H, X] = X")
check((X + Y).gradings == [-1, 1], "gradings of X + Y")
check(Element("X^-1").ring == "LaurentA", "X^-1 lies in the Laurent ring")
check(Element.from_json(Element("H*X^2").to_json()) == Element("H*X^2"), "json round trip")

u = Element("H*X")
check(pyweyl.classify(u) == "Delta2", "HX is in Delta2")
check(pyweyl.classify("H^2") == "Delta5", "H^2 is in Delta5")
check(pyweyl.ndeg(Y, u) == 2, "ndeg Y = 2 for HX")
check(u.ad_pow(Y**2, 4) == 24 * u * u, "delta^4(Y^2) = 4! u^2")
check([pyweyl.ideal_exponent(u, k) for k in range(1, 7)] == [1, 1, 2, 2, 3, 3], "ideal table for HX")

report = pyweyl.analyze("H*(H-3)*X^2")
check(report["n_structure"]["mu_list"] == [0, 3], "mu list of H(H-3)X^2")
gen = pyweyl.canonical_generator("H*(H-3)*X^2")
check((gen["t"], gen["m"]) == (1, 2), "canonical generator step and power")
v = pyweyl.canonical_generator_element("H*(H-3)*X^2")
check(v * v == Element("H*(H-3)*X^2"), "v^2 = u")

check(sum(pyweyl.dimension_growth(u, 20)) == 210, "growth sum for HX")

result = pyweyl.verify(["H*X", "Y"], k=2, grading=3, hdegree=4)
check(result["fail"] == 0 and result["inconclusive"] == 0, "oracle agrees with closed forms")

try:
    pyweyl.classify("2H")
except pyweyl.ExprSyntaxError:
    check(True, "syntax errors raise ExprSyntaxError")
else:
    check(False, "syntax errors raise ExprSyntaxError")
try:
    pyweyl.classify("X + Y")
except pyweyl.PreconditionError:
    check(True, "non-homogeneous input raises PreconditionError")
else:
    check(False, "non-homogeneous input raises PreconditionError")

print("all smoke checks passed")
