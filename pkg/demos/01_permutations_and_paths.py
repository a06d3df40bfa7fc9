"""Permutations, patterns and the two Dyck-path bijections."""

from patternlab import (avoids, max_split, occurrences, parse_perm, path_stats, phi, phi_inv, psi,
                        psi_inv, stats, symmetry)
from patternlab.perm import enumerate_avoiders

sigma = parse_perm("867943251")
print(sigma, "avoids 132:", avoids(sigma, ["132"]))
print("occurrences of 123:", occurrences(sigma, "123"))   # just 6 7 9
print(stats(sigma))

# split a 132-avoider around its maximum: everything left of n sits above everything right of it
A, k, B = max_split(sigma)
print("A =", A, " n at position", k, " B =", B)

# symmetry actions
s = parse_perm("15324")
for action in ("reverse", "complement", "reverse_complement", "inverse"):
    print(f"{action:>18}: {symmetry(s, action)}")

# phi sends 132-avoiders to Dyck paths; the path's coarea is the inversion count
path = phi(sigma)
st = path_stats(path)
print(path, "ret", st.ret, "area", st.area, "coarea", st.coarea, "diagonals", st.diag_peaks)
assert phi_inv(path) == sigma
assert st.coarea == stats(sigma).inv

# psi does the same for 123-avoiders; here both land on the same path
tau = parse_perm("869743251")
assert psi(tau) == path and psi_inv(path) == tau

# peaks on diagonal d mark left-to-right minima with d larger entries to their right
for n in range(1, 8):
    count = sum(1 for _ in enumerate_avoiders(n, ["123"]))
    peaks = sum(path_stats(psi(t)).peaks for t in enumerate_avoiders(n, ["123"]))
    print(f"n={n}: {count:4d} paths, {peaks:5d} peaks in total")
