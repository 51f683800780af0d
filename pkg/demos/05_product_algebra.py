"""Products of orbit functions decompose into orbit functions.

C*C and S*S expand in C-functions, C*S in S-functions, always with
integer coefficients. In rank one these are the product-to-sum rules.
"""

from fractions import Fraction

from lietransforms import decompose_product, eval_orbit_function, root_system


def show(rs, kinds, lam, mu):
    d = decompose_product(rs, kinds, lam, mu)
    rhs = " + ".join(f"{c}*{d.kind}{nu}" for nu, c in d.terms.items()).replace("+ -", "- ")
    print(f"{kinds[0]}{lam} * {kinds[1]}{mu} = {rhs}")
    return d


a1 = root_system("A1")
show(a1, ("C", "C"), (1,), (1,))
show(a1, ("S", "S"), (1,), (1,))  # (2i sin t)^2 = 2 cos 2t - 2
show(a1, ("C", "S"), (1,), (2,))

print()
rs = root_system("C2")
for kinds, lam, mu in [(("C", "C"), (1, 0), (0, 1)), (("S", "S"), (1, 1), (1, 1)), (("C", "S"), (1, 0), (1, 1))]:
    d = show(rs, kinds, lam, mu)
    x = (Fraction(1, 7), Fraction(2, 11))
    lhs = eval_orbit_function(rs, kinds[0], lam, x) * eval_orbit_function(rs, kinds[1], mu, x)
    rhs = sum(c * eval_orbit_function(rs, d.kind, nu, x) for nu, c in d.terms.items())
    print(f"   check at x = (1/7, 2/11): |lhs - rhs| = {abs(lhs - rhs):.1e}")

# dimension count: at the origin every C-function equals its orbit size
d = decompose_product(rs, ("C", "C"), (2, 1), (1, 1))
print("\n|W(2,1)| * |W(1,1)| =", 8 * 8, "=", sum(c * eval_orbit_function(rs, "C", nu, (0, 0)).real for nu, c in d.terms.items()))
