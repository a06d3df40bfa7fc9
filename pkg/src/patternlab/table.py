"""Memoized tables of polynomials indexed by n, shared by the recursion families."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from .polyring import MultiPoly


def ordered_sum(terms: Callable[[int], MultiPoly], ks: Iterable[int], zero: MultiPoly,
                workers: int = 1) -> MultiPoly:
    """
    Sum ``terms(k)`` over ``ks``. With ``workers > 1`` the summands are built
    in a thread pool, but they are always added in the order of ``ks``.
    """
    ks = list(ks)
    if workers > 1 and len(ks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(terms, ks))
    else:
        parts = [terms(k) for k in ks]
    total = zero
    for p in parts:
        total = total + p
    return total


class FamilyTable:
    """
    Lazily extended list of entries ``entry(0), entry(1), ...``; entry n may
    read any earlier entry. Subclasses implement ``_compute(n)``.
    """

    family = "?"
    names: tuple[str, ...] = ()

    def __init__(self, workers: int = 1):
        self.workers = workers
        self._entries: list = []

    @property
    def arity(self) -> int:
        return len(self.names)

    def zero(self) -> MultiPoly:
        return MultiPoly.zero(self.arity, self.names)

    def one(self) -> MultiPoly:
        return MultiPoly.one(self.arity, self.names)

    def mono(self, exps: Sequence[int], coeff: int = 1) -> MultiPoly:
        return MultiPoly.monomial(exps, coeff, self.names)

    def _compute(self, n: int):
        raise NotImplementedError

    def _check(self, n: int, value) -> None:
        polys = value.values() if isinstance(value, dict) else [value]
        for p in polys:
            if not p.is_polynomial():
                raise AssertionError(f"{self.family} entry {n} has a negative exponent")

    def entry(self, n: int):
        if n < 0:
            raise IndexError("negative index")
        while len(self._entries) <= n:
            m = len(self._entries)
            value = self._compute(m)
            self._check(m, value)
            self._entries.append(value)
        return self._entries[n]

    def __getitem__(self, n: int):
        return self.entry(n)

    def entries(self, n_max: int) -> list:
        self.entry(n_max)
        return self._entries[:n_max + 1]

    def poly(self, n: int) -> MultiPoly:
        """The distribution polynomial for size n (families indexed by more than n override)."""
        return self.entry(n)
