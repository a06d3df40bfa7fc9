"""
Down-right Dyck paths and the two shading bijections onto them.

Coordinates: the n x n square has columns 0..n left to right and rows 0..n top
to bottom. A path starts at (0, 0), a ``D`` step adds one to the row, an ``R``
step adds one to the column, and the path ends at (n, n) with row >= column
throughout. The d-th diagonal is the line row = column + d. A peak is a ``DR``
factor; its corner is the lattice point (c, r) between the two steps, and it
lies on diagonal ``r - 1 - c`` (both the start of the D and the end of the R
sit on that line).

Value v of a permutation occupies the cell in row band ``n - v`` (counted from
the top) and column ``i - 1`` for position i. Shading north-east of every
cell, the left edge of the shaded region in row band r is the smallest
position holding a value <= n - r; the path walks right to that column and
then steps down.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .perm import InvalidInput, Permutation, as_perm, contains, lr_minima


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for pos, ch in enumerate(self.steps):
            if ch == "D":
                height += 1
            elif ch == "R":
                height -= 1
            else:
                raise InvalidInput(f"bad step {ch!r} at index {pos} of {self.steps!r}")
            if height < 0:
                raise InvalidInput(f"path crosses the diagonal at step {pos}: {self.steps!r}")
        if height != 0:
            raise InvalidInput(f"unbalanced path {self.steps!r}")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return self.n

    def columns(self) -> list[int]:
        """Column at which each of the n down-steps is taken, top to bottom."""
        out, col = [], 0
        for ch in self.steps:
            if ch == "D":
                out.append(col)
            else:
                col += 1
        return out

    def peaks(self) -> list[tuple[int, int]]:
        """Corner points (column, row) of the DR factors, top to bottom."""
        out, col, row = [], 0, 0
        for a, b in zip(self.steps, self.steps[1:] + "_"):
            if a == "D":
                row += 1
                if b == "R":
                    out.append((col, row))
            else:
                col += 1
        return out


def parse_path(text: str) -> DyckPath:
    return DyckPath(text.strip().upper())


@dataclass(frozen=True)
class PathStats:
    ret: int
    area: int
    coarea: int
    diag_peaks: dict

    @property
    def peaks(self) -> int:
        return sum(self.diag_peaks.values())


def path_from_columns(cols: Sequence[int]) -> DyckPath:
    n = len(cols)
    steps, col = [], 0
    for c in cols:
        steps.append("R" * (c - col))
        steps.append("D")
        col = c
    steps.append("R" * (n - col))
    return DyckPath("".join(steps))


def shading_path(sigma: Sequence[int]) -> DyckPath:
    """South-west boundary of the north-east shading of the graph of sigma."""
    n = len(sigma)
    pos = [0] * (n + 1)
    for i, v in enumerate(sigma):
        pos[v] = i
    cols, best = [0] * n, n
    # row band r holds value n - r; scan bottom-up keeping the running minimum
    for r in range(n - 1, -1, -1):
        best = min(best, pos[n - r])
        cols[r] = best
    return path_from_columns(cols)


def phi(sigma) -> DyckPath:
    sigma = as_perm(sigma)
    if contains(sigma, (1, 3, 2)):
        raise InvalidInput(f"{sigma} is not 132-avoiding")
    return shading_path(sigma)


def psi(sigma) -> DyckPath:
    sigma = as_perm(sigma)
    if contains(sigma, (1, 2, 3)):
        raise InvalidInput(f"{sigma} is not 123-avoiding")
    return shading_path(sigma)


def _minima_from_path(path: DyckPath) -> dict[int, int]:
    """Map position -> value of the left-to-right minima encoded by the peaks."""
    n = path.n
    return {c: n - (r - 1) for c, r in path.peaks()}


def phi_inv(path: DyckPath) -> Permutation:
    """Fill non-minimum positions with the smallest free value above the current minimum."""
    n = path.n
    mins = _minima_from_path(path)
    free = sorted(set(range(1, n + 1)) - set(mins.values()))
    out, low = [], None
    for i in range(n):
        if i in mins:
            low = mins[i]
            out.append(low)
        else:
            v = next(u for u in free if u > low)
            free.remove(v)
            out.append(v)
    return Permutation(out)


def psi_inv(path: DyckPath) -> Permutation:
    """Fill non-minimum positions with the free values in decreasing order."""
    n = path.n
    mins = _minima_from_path(path)
    free = sorted(set(range(1, n + 1)) - set(mins.values()), reverse=True)
    it = iter(free)
    return Permutation(mins[i] if i in mins else next(it) for i in range(n))


def path_stats(path: DyckPath) -> PathStats:
    n = path.n
    cols = path.columns()
    coarea = sum(cols)
    area = comb(n, 2) - coarea
    ret, col, row = 0, 0, 0
    for ch in path.steps:
        if ch == "D":
            row += 1
        else:
            col += 1
            if col == row:
                ret = col
                break
    diag: dict[int, int] = {}
    for c, r in path.peaks():
        d = r - 1 - c
        diag[d] = diag.get(d, 0) + 1
    return PathStats(ret=ret, area=area, coarea=coarea, diag_peaks=dict(sorted(diag.items())))


def first_return_split(path: DyckPath) -> tuple[DyckPath, DyckPath]:
    """Write a nonempty path as D + P1 + R + P2 where D..R ends at the first return."""
    if path.n == 0:
        raise InvalidInput("cannot split the empty path")
    height = 0
    for i, ch in enumerate(path.steps):
        height += 1 if ch == "D" else -1
        if height == 0:
            return DyckPath(path.steps[1:i]), DyckPath(path.steps[i + 1:])
    raise AssertionError("unreachable for a valid path")


def peak_values(sigma: Sequence[int], path: DyckPath) -> list[tuple[int, int]]:
    """Pairs (position, diagonal) for each left-to-right minimum of sigma."""
    n = path.n
    by_value = {n - (r - 1): r - 1 - c for c, r in path.peaks()}
    return [(i, by_value[sigma[i]]) for i in lr_minima(sigma)]
