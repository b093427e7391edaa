"""Factor an SL(3,Z) matrix into embedded SL(2,Z) block factors.

Every determinant-1 integer matrix is a product of at most n^2 - n factors,
each supported on a single 2x2 block, with factor norms controlled by the
input norm.  This script walks through both decomposition strategies on a
random word and prints the verified results.
"""

from qibg import exactmat, decompose

# A pseudo-random product of 30 elementary generators E_{k,l}(+-1).
gamma = exactmat.random_word(3, 30, seed=7)
print("input matrix:")
for row in gamma:
    print("  ", row)
print("determinant:", exactmat.determinant(gamma))
print("sup norm:", exactmat.sup_norm(gamma))
print()

# Strategy 1: sweep the lower triangle column by column with gcd blocks,
# then clear the upper triangle with elementary blocks.
fac = decompose.decompose_column_major(gamma)
print(f"column-major factorization: {len(fac.factors)} factors "
      f"(limit {3 * 3 - 3})")
for f in fac.factors:
    print(f"   block at ({f.k},{f.l}): {f.block}")

report = decompose.verify(gamma, fac)
print("product equality:", report.product_ok)
print("count bound:", report.count_ok)
print("max log-norm ratio:", round(report.stats.max_ratio, 4))
print()

# Strategy 2: annihilate the unipotent component of the matrix one clockwise
# ray class at a time, then clean up the remaining lower-triangular part.
fac_cw, diag = decompose.clockwise_with_diagnostics(gamma)
print(f"clockwise factorization: {len(fac_cw.factors)} factors")
print("classes annihilated:", diag.classes_annihilated)
print("re-annihilations (must be 0):", diag.reannihilations)
report_cw = decompose.verify(gamma, fac_cw)
print("product equality:", report_cw.product_ok)
print("max log-norm ratio:", round(report_cw.stats.max_ratio, 4))
