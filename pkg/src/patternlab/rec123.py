"""
Recursions over 123-avoiding permutations, built on the first-return split of
the Dyck path psi(sigma) = D P1 R P2.

A left-to-right minimum whose peak sits on diagonal d starts exactly
binom(d, m-1) occurrences of 1 m (m-1) ... 2. Moving P1 under the outer D R
pushes each of its peaks one diagonal further out, and Pascal's rule turns
that into the substitution s -> s x2, x_i -> x_i x_{i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perm import InvalidInput
from .polyring import MultiPoly, Substitution
from .table import FamilyTable, ordered_sum

DEFAULT_CAPS = {"tower123": 10, "d": 10}


class DescendingTowerTable(FamilyTable):
    """
    Variables (s, x2, ..., xm): s counts left-to-right minima and x_j counts
    occurrences of 1 j (j-1) ... 2 (so x2 counts 12 and x3 counts 132).
    """

    def __init__(self, m: int, workers: int = 1):
        if m < 2:
            raise InvalidInput("tower needs m >= 2")
        super().__init__(workers)
        self.m = m
        self.family = f"tower123_{m}"
        self.names = ("s",) + tuple(f"x{i}" for i in range(2, m + 1))
        a = m
        # s -> s x2, x_i -> x_i x_{i+1} for i < m, x_m fixed
        self._shift = Substitution.from_map(a, {i: {i: 1, i + 1: 1} for i in range(a - 1)})
        self._shifted: list[MultiPoly] = []

    def shifted(self, n):
        while len(self._shifted) <= n:
            self._shifted.append(self._shift(self[len(self._shifted)]))
        return self._shifted[n]

    def _compute(self, n):
        if n == 0:
            return self.one()
        s = self.mono((1,) + (0,) * (self.m - 1))
        first = s * self[n - 1]
        rest = ordered_sum(lambda k: self.shifted(k - 1) * self[n - k], range(2, n + 1),
                           self.zero(), self.workers)
        return first + rest

    def view(self, n: int) -> MultiPoly:
        """Entry n with s set to 1."""
        return self[n].specialize({0: 1})


def desc_tower_table(n_max: int, m: int, workers: int = 1) -> DescendingTowerTable:
    t = DescendingTowerTable(m, workers)
    t.entry(n_max)
    return t


class DTable(FamilyTable):
    """
    Entry n is the list [D_{n,0}, ..., D_{n,n}] over (q, x, y): permutations in
    S_n(123) with k left-to-right minima, q counting 12, x counting linv and
    y counting 231.
    """

    family = "d"
    names = ("q", "x", "y")

    def d(self, n: int, k: int) -> MultiPoly:
        if k < 0 or k > n:
            return self.zero()
        return self.entry(n)[k]

    def _compute(self, n):
        if n == 0:
            return [self.one()]
        row = [self.zero()] * (n + 1)
        row[1] = self.mono((n - 1, 0, 0))
        row[n] = self.one()
        for k in range(2, n):
            row[k] = self.recurrence(n, k)
        return row

    def recurrence(self, n: int, k: int) -> MultiPoly:
        """The first-return recurrence for D_{n,k}; valid for every 1 <= k <= n."""
        xy = Substitution([(1, 0, 0), (0, 1, 1), (0, 0, 1)])
        total = self.d(n - 1, k - 1).scale_monomial((0, n - k, 0))
        total = total + xy(self.d(n - 1, k)).scale_monomial((k, 0, 0))

        def block(i):
            sub = Substitution([(1, 0, n - i), (0, 1, 1), (0, 0, 1)])
            acc = self.zero()
            for j in range(max(1, k + i - n), min(i - 1, k - 1) + 1):
                left = sub(self.d(i - 1, j))
                acc = acc + (left * self.d(n - i, k - j)).scale_monomial(
                    (j, j * (n - i - k + j), j * (n - i)))
            return acc

        return total + ordered_sum(block, range(2, n), self.zero(), self.workers)

    def _check(self, n, value):
        for p in value:
            if not p.is_polynomial():
                raise AssertionError(f"d entry {n} has a negative exponent")

    def poly(self, n: int) -> MultiPoly:
        """D_n over (s, q, x, y)."""
        names = ("s", "q", "x", "y")
        total = MultiPoly.zero(4, names)
        for k, p in enumerate(self.entry(n)):
            if p:
                total = total + p.embed([1, 2, 3], 4, names).scale_monomial((k, 0, 0, 0))
        return total


def d_table(n_max: int, workers: int = 1) -> DTable:
    t = DTable(workers)
    t.entry(n_max)
    return t


# -- coefficient equality ---------------------------------------------------

@dataclass
class CoeffReport:
    n_max: int
    j_max: int
    compared: int = 0
    mismatches: list[tuple[int, int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def coeff_equality_check(n_max: int, j_max: int) -> CoeffReport:
    """
    Compare [t^n x^i] of the 12...j distribution over S_n(132) with that of
    1 j ... 2 over S_n(123) for every 2 <= j <= j_max and 0 <= i < j.
    Mismatches are (n, i, j, left, right).
    """
    from .rec132 import IncreasingTowerTable

    if j_max < 2:
        raise InvalidInput("j_max must be at least 2")
    report = CoeffReport(n_max, j_max)
    for j in range(2, j_max + 1):
        inc = IncreasingTowerTable(j)
        desc = DescendingTowerTable(j)
        for n in range(n_max + 1):
            a = inc[n].univariate(inc.arity - 1)
            b = desc[n].univariate(desc.arity - 1)
            for i in range(j):
                report.compared += 1
                if a.get(i, 0) != b.get(i, 0):
                    report.mismatches.append((n, i, j, a.get(i, 0), b.get(i, 0)))
    return report
