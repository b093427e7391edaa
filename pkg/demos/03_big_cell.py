"""Corner minors, big-cell membership, and exact UL factorization.

A matrix g factors as g = u_plus * p_minus (upper unitriangular times lower
triangular) exactly when all of its bottom-right corner minors are nonzero.
On integer inputs the denominators of the factors divide a power of the
minor product, which bounds the factor norms in terms of the input norm.
"""

from fractions import Fraction

from qibg import bigcell, exactmat, rootsys

g = ((2, 1), (1, 1))
print("g =", g)
print("corner minors:", bigcell.corner_minors(g))
print("in big cell:", bigcell.in_big_cell(g))
fac = bigcell.ul_factorize(g)
print("u_plus: ", fac.u_plus)
print("p_minus:", fac.p_minus)
print()

rot = ((0, 1), (-1, 0))
print("rot =", rot)
print("corner minors:", bigcell.corner_minors(rot))
try:
    bigcell.ul_factorize(rot)
except bigcell.NotInBigCell as e:
    print("no factorization:", e)
print()

# Random words occasionally miss the big cell; the membership test is a
# pure minor computation, so it is cheap to probe first.
outside = exactmat.random_word(3, 30, seed=12)
print("word with seed 12 in big cell:", bigcell.in_big_cell(outside))

# Denominator and norm control on a member.
gamma = exactmat.random_word(3, 30, seed=13)
print("word with seed 13, sup norm", exactmat.sup_norm(gamma))
report = bigcell.denominator_and_norm_check(gamma)
print("minors:", report.minors)
print("denominators divide (prod minors)^n:", report.denominators_divide)
print(f"log|p_minus| = {report.log_norm_p_minus:.3f} <= "
      f"{report.norm_constant} * max(1, {report.log_norm_input:.3f}): "
      f"{report.norm_bound_ok}")
print()

# Split a unipotent matrix along one clockwise class: u = left * mid * right,
# each part supported only on its own classes' positions.
ordering = rootsys.sl_class_ordering(3, seed=5)
u = ((1, Fraction(2, 3), Fraction(7, 2)),
     (0, 1, Fraction(-4, 5)),
     (0, 0, 1))
print("u =", u)
for i in (1, 2, 3):
    sp = bigcell.unipotent_class_split(u, ordering, i)
    print(f"split at class {i}:")
    print("   left: ", sp.left_part)
    print("   mid:  ", sp.mid_part)
    print("   right:", sp.right_part)
    product = exactmat.multiply(exactmat.multiply(sp.left_part, sp.mid_part),
                                sp.right_part)
    assert product == tuple(tuple(Fraction(e) for e in row) for row in u)
print("all splits reassemble exactly")
