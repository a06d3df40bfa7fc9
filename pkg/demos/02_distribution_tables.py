"""Distribution polynomials built by recursion, and a few things to read off them."""

from patternlab import fh_table, p_table, s3_table, s4_table, desc_tower_table
from patternlab.polyring import catalan

# (coinversions, inversions) over S_n(132)
fh = fh_table(6)
for n in range(6):
    print(f"t^{n}:", fh[n])

# setting x2 = 1 gives the coinversion distribution alone
print("coinv, n=5:", fh[5].specialize({1: 1}))

# all seven patterns of length <= 3 at once; the coefficient sum is always Catalan
s3 = s3_table(6)
print("S3 n=4 has", len(s3[4]), "monomials;", "totals:", [s3[n].eval_all_ones() for n in range(7)])
print("Catalan:", catalan(6).coeffs)

# coinversions jointly with a single pattern; 231 and 312 give the same distribution
for g in ("231", "312"):
    print(g, p_table(6, g)[6].specialize({0: 1}))

# S4 is stored by coinversion number i; poly(n) assembles the 21-variable polynomial
s4 = s4_table(5)
print("S4 n=5 slices:", sorted(s4[5]), "terms:", len(s4.poly(5)))

# over S_n(123): left-to-right minima (s), 12 (x2) and 132 (x3)
tw = desc_tower_table(6, 3)
print("tower n=4:", tw[4])
print("with s=1:", tw.view(4))
