"""
Recursions for pattern distributions over 132-avoiding permutations.

Every family splits a 132-avoider at its maximum, sigma = A n B, with A on
k-1 letters above all of B on n-k letters. Occurrence counts of a pattern in
sigma are its counts in A and B plus cross terms that depend only on k, n and
shorter-pattern counts in A and B, so each cross term becomes a monomial
prefactor or a monomial substitution into the smaller tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .perm import InvalidInput, Permutation, avoids
from .polyring import MultiPoly, Substitution
from .table import FamilyTable, ordered_sum

DEFAULT_CAPS = {"fh": 14, "s3": 9, "s4": 7, "p": 12, "tower132": 10}


class FHTable(FamilyTable):
    """Joint distribution of (coinversions, inversions): variables x1 for 12, x2 for 21."""

    family = "fh"
    names = ("x1", "x2")

    def _compute(self, n):
        if n == 0:
            return self.one()
        return ordered_sum(
            lambda k: (self[k - 1] * self[n - k]).scale_monomial((k - 1, k * (n - k))),
            range(1, n + 1), self.zero(), self.workers)


def fh_table(n_max: int, workers: int = 1) -> FHTable:
    t = FHTable(workers)
    t.entry(n_max)
    return t


class S3Table(FamilyTable):
    """All patterns of length two and three: 12, 21, 123, 213, 231, 312, 321."""

    family = "s3"
    names = ("x1", "x2", "x3", "x4", "x5", "x6", "x7")

    def _compute(self, n):
        if n == 0:
            return self.one()
        return ordered_sum(lambda k: self._summand(n, k), range(1, n + 1), self.zero(), self.workers)

    def _summand(self, n, k):
        r = n - k
        # 12 in A feeds 123 and (with B's letters) 231; 21 in A feeds 213 and 321
        left = Substitution.from_map(7, {0: {0: 1, 2: 1, 4: r}, 1: {1: 1, 3: 1, 6: r}})
        # 12 in B feeds 312 (k letters of A plus n above it); 21 in B feeds 321
        right = Substitution.from_map(7, {0: {0: 1, 5: k}, 1: {1: 1, 6: k}})
        prod = left(self[k - 1]) * right(self[r])
        return prod.scale_monomial((k - 1, k * r, 0, 0, (k - 1) * r, 0, 0))


def s3_table(n_max: int, workers: int = 1) -> S3Table:
    t = S3Table(workers)
    t.entry(n_max)
    return t


P_PATTERNS = ("123", "213", "231", "312", "321")


class PTable(FamilyTable):
    """
    Joint distribution of coinversions (q) and one length-three pattern (x).
    Some substitutions divide by powers of x; the prefactor restores a
    polynomial, which ``_summand`` asserts term by term.
    """

    names = ("q", "x")

    def __init__(self, gamma: str, workers: int = 1):
        if gamma not in P_PATTERNS:
            raise InvalidInput(f"p_table pattern must be one of {P_PATTERNS}, got {gamma!r}")
        super().__init__(workers)
        self.gamma = gamma
        self.family = f"p{gamma}"

    def _compute(self, n):
        if n == 0:
            return self.one()
        return ordered_sum(lambda k: self._summand(n, k), range(1, n + 1), self.zero(), self.workers)

    def _summand(self, n, k):
        g, r = self.gamma, n - k
        A, B = self[k - 1], self[r]
        ident = Substitution.identity(2)
        if g == "123":
            pre, sa, sb = 0, Substitution([(1, 1), (0, 1)]), ident
        elif g == "213":
            pre, sa, sb = comb(k - 1, 2), Substitution([(1, -1), (0, 1)]), ident
        elif g == "231":
            pre, sa, sb = (k - 1) * r, Substitution([(1, r), (0, 1)]), ident
        elif g == "312":
            pre, sa, sb = 0, ident, Substitution([(1, k), (0, 1)])
        else:
            twice = r * (k * n - 4 * k + 2)
            assert twice % 2 == 0, "exponent (n-k)(kn-4k+2) is always even"
            pre, sa, sb = twice // 2, Substitution([(1, -r), (0, 1)]), Substitution([(1, -k), (0, 1)])
        term = (sa(A) * sb(B)).scale_monomial((k - 1, pre))
        if not term.is_polynomial():
            raise AssertionError(f"p{g}: summand n={n}, k={k} keeps a negative exponent")
        return term


def p_table(n_max: int, gamma: str, workers: int = 1) -> PTable:
    t = PTable(gamma, workers)
    t.entry(n_max)
    return t


class IncreasingTowerTable(FamilyTable):
    """
    Occurrences of 12, 123, ..., 12...m tracked by x2, ..., xm. The left factor
    always uses the same shift x_i -> x_i x_{i+1}, so its image table is cached.
    """

    def __init__(self, m: int, workers: int = 1):
        if m < 2:
            raise InvalidInput("tower needs m >= 2")
        super().__init__(workers)
        self.m = m
        self.family = f"tower132_{m}"
        self.names = tuple(f"x{i}" for i in range(2, m + 1))
        a = m - 1
        self._shift = Substitution.from_map(a, {i: {i: 1, i + 1: 1} for i in range(a - 1)})
        self._shifted: list[MultiPoly] = []

    def shifted(self, n):
        while len(self._shifted) <= n:
            self._shifted.append(self._shift(self[len(self._shifted)]))
        return self._shifted[n]

    def _compute(self, n):
        if n == 0:
            return self.one()
        a = self.arity
        return ordered_sum(
            lambda k: (self.shifted(k - 1) * self[n - k]).scale_monomial((k - 1,) + (0,) * (a - 1)),
            range(1, n + 1), self.zero(), self.workers)


def incr_tower_table(n_max: int, m: int, workers: int = 1) -> IncreasingTowerTable:
    t = IncreasingTowerTable(m, workers)
    t.entry(n_max)
    return t


S4_NAMES = ("x1", "x2", "x3", "x4", "x5") + tuple(f"y{i}" for i in range(1, 15))
S4_ASSEMBLED_NAMES = tuple(f"x{i}" for i in range(1, 8)) + tuple(f"y{i}" for i in range(1, 15))


class S4Table(FamilyTable):
    """
    Entry n is a dict i -> Q_{n,i}: permutations with exactly i coinversions,
    tracking the five length-three patterns (x1..x5 for 123, 213, 231, 312,
    321) and the fourteen 132-avoiding length-four patterns (y1..y14 in the
    order 1234, 2134, 2314, 2341, 3124, 3214, 3241, 3412, 3421, 4123, 4213,
    4231, 4312, 4321). Inversions are binom(n, 2) - i.
    """

    family = "s4"
    names = S4_NAMES

    def q(self, n: int, i: int) -> MultiPoly | None:
        if n < 0 or i < 0 or i > comb(n, 2):
            return None
        return self.entry(n).get(i)

    def _compute(self, n):
        if n == 0:
            return {0: self.one()}
        out = {}
        for i in range(comb(n, 2) + 1):
            p = ordered_sum(lambda k: self._k_block(n, i, k), range(1, n + 1), self.zero(), self.workers)
            if p:
                out[i] = p
        return out

    def _k_block(self, n, i, k):
        r = n - k
        # variables: x1..x5 -> 0..4, y_t -> 4 + t
        Y = lambda t: 4 + t
        left = Substitution.from_map(19, {
            0: {0: 1, Y(1): 1, Y(4): r},
            1: {1: 1, Y(2): 1, Y(7): r},
            2: {2: 1, Y(3): 1, Y(9): r},
            3: {3: 1, Y(5): 1, Y(12): r},
            4: {4: 1, Y(6): 1, Y(14): r},
        })
        right = Substitution.from_map(19, {
            0: {0: 1, Y(10): k},
            1: {1: 1, Y(11): k},
            2: {2: 1, Y(12): k},
            3: {3: 1, Y(13): k},
            4: {4: 1, Y(14): k},
        })
        total = self.zero()
        for j in range(0, i + 2 - k):
            jb = i + 1 - k - j           # coinversions of B
            qa, qb = self.q(k - 1, j), self.q(r, jb)
            if qa is None or qb is None:
                continue
            a21 = comb(k - 1, 2) - j      # inversions of A
            b21 = comb(r, 2) - jb         # inversions of B
            e = [0] * 19
            e[0] = j
            e[1] = a21
            e[2] = r * (k + j - 1)
            e[3] = k * jb
            e[4] = r * a21 + k * b21
            e[Y(4)] = j * r
            e[Y(7)] = a21 * r
            e[Y(8)] = (j + k - 1) * jb
            e[Y(9)] = (j + k - 1) * b21
            e[Y(13)] = a21 * jb
            e[Y(14)] = a21 * b21
            total = total + (left(qa) * right(qb)).scale_monomial(e)
        return total

    def poly(self, n: int) -> MultiPoly:
        """Assembled distribution over (x1..x7, y1..y14): x1 = 12, x2 = 21, x3..x7 length three."""
        c = comb(n, 2)
        total = MultiPoly.zero(21, S4_ASSEMBLED_NAMES)
        positions = list(range(2, 21))
        for i, p in sorted(self.entry(n).items()):
            big = p.embed(positions, 21, S4_ASSEMBLED_NAMES)
            e = [0] * 21
            e[0], e[1] = i, c - i
            total = total + big.scale_monomial(e)
        return total


def s4_table(n_max: int, workers: int = 1) -> S4Table:
    t = S4Table(workers)
    t.entry(n_max)
    return t


# -- good-recursion census --------------------------------------------------

def good_recursion_counts(n_max: int) -> list[int]:
    a = [1, 1, 2]
    while len(a) <= n_max:
        n = len(a)
        a.append(a[n - 1] + 2 * a[n - 2] + a[n - 3])
    return a[:n_max + 1]


def _extend_tail(s):      # s (n+1)
    return s + (len(s) + 1,)


def _extend_wrap(s):      # (n+2) s (n+1)
    n = len(s)
    return (n + 2,) + s + (n + 1,)


def _extend_drop(s):      # (s+1) (n+2) 1
    n = len(s)
    return tuple(v + 1 for v in s) + (n + 2, 1)


def _extend_both(s):      # (n+3) (s+1) (n+2) 1
    n = len(s)
    return (n + 3,) + tuple(v + 1 for v in s) + (n + 2, 1)


@dataclass
class CensusReport:
    counts: list[int]
    members: dict[int, list[Permutation]] = field(default_factory=dict)
    ok: bool = True
    problems: list[str] = field(default_factory=list)


def good_recursion_census(n_max: int) -> CensusReport:
    """
    Close {empty} under the four constructors and compare the level sizes
    with a_n = a_{n-1} + 2 a_{n-2} + a_{n-3}.
    """
    counts = good_recursion_counts(n_max)
    levels: dict[int, set] = {0: {()}}
    for n in range(1, n_max + 1):
        level = {_extend_tail(s) for s in levels[n - 1]}
        if n >= 2:
            level |= {_extend_wrap(s) for s in levels[n - 2]}
            level |= {_extend_drop(s) for s in levels[n - 2]}
        if n >= 3:
            level |= {_extend_both(s) for s in levels[n - 3]}
        levels[n] = level
    report = CensusReport(counts=counts)
    for n in range(n_max + 1):
        members = sorted(Permutation(s) for s in levels[n])
        report.members[n] = members
        if len(members) != counts[n]:
            report.ok = False
            report.problems.append(f"n={n}: {len(members)} members, a_n={counts[n]}")
        bad = [str(p) for p in members if not avoids(p, [(1, 3, 2)])]
        if bad:
            report.ok = False
            report.problems.append(f"n={n}: contains 132: {bad}")
    return report

