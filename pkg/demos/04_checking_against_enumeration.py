"""Every recursion family compared with brute-force enumeration."""

from patternlab import check_family, coeff_equality_check, good_recursion_census, observation_suite
from patternlab.oracle import FAMILIES, GfSpec, brute_gf

# the oracle builds any distribution directly
print(brute_gf(GfSpec(4, ["132"], ["12", "21"]), ("x1", "x2")))

for name, fam in FAMILIES.items():
    rep = check_family(name, min(6, fam.cap))
    status = "equal" if rep.equal else f"differs at n={rep.first_mismatch['n']}"
    print(f"{name:>11}  n<={rep.n_max}  {status}")

# the (lrmin, 12, linv, 231) recursion over S_n(123) is exact to n = 4 and then drifts
rep = check_family("d", 5)
print(rep.lines()[-1][:120], "...")

rep = coeff_equality_check(8, 4)
print("coefficient equality:", rep.compared, "compared,", len(rep.mismatches), "mismatches")

census = good_recursion_census(8)
print("census:", census.counts, "ok" if census.ok else census.problems)

print("\n".join(observation_suite(7).lines()))
