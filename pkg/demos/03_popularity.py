"""Total pattern occurrences over an avoidance class, from closed forms and from tables."""

from patternlab import f12, f_incr, g12_oracle, g12_printed, g_desc, popularity_from_table
from patternlab.rec123 import DescendingTowerTable
from patternlab.rec132 import FHTable, IncreasingTowerTable

N = 10
print("F_12  ", f12(N).coeffs())
print("  from the (x1, x2) table:", popularity_from_table(FHTable(), "x1", N).coeffs)

for m in (3, 4, 5):
    s = f_incr(N, m)
    table = popularity_from_table(IncreasingTowerTable(m), f"x{m}", N)
    print(f"F_{s.pattern:<5}", s.coeffs(), "table agrees:", s.coeffs() == table.coeffs)

# over S_n(123) the chain starts from G_12, which we count directly
seed = g12_oracle(8)
print("G_12  ", seed.coeffs())
for m in (3, 4):
    g = g_desc(8, m, seed)
    table = popularity_from_table(DescendingTowerTable(m), f"x{m}", 8)
    print(f"G_{g.pattern:<5}", g.coeffs(), "table agrees:", g.coeffs() == table.coeffs)

# the commonly quoted closed form for G_12 gives a different sequence
print("tC^2/(1-2tC):", g12_printed(8).coeffs(), "(disputed)")
