"""
Permutations in one-line notation, classical pattern occurrences, symmetry
actions and enumeration of avoidance classes.

Values are 1-based externally (``Permutation((8, 6, 7, 9, 4, 3, 2, 5, 1))``)
and ``parse_perm("867943251")`` reads the text form. Words of length > 9 use
commas: ``"10,9,8,7,6,5,4,3,2,1"``.

>>> sigma = parse_perm("867943251")
>>> occurrences(sigma, parse_perm("123"))
1
>>> max_split(sigma)
(Permutation('312'), 4, Permutation('43251'))
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence


class InvalidInput(ValueError):
    """Raised for malformed permutations, paths, polynomials or arguments."""


class Permutation(tuple):
    """An immutable permutation of {1, ..., n} in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidInput(f"not a permutation of 1..{len(values)}: {values!r}")
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r})"


def format_perm(values: Sequence[int]) -> str:
    if len(values) <= 9:
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def parse_perm(text: str) -> Permutation:
    """Read a permutation from its text form (digit string or comma list)."""
    text = text.strip()
    if not text or text in ("()", "e", "-"):
        return Permutation()
    try:
        if "," in text:
            values = [int(tok) for tok in text.split(",")]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        toks = text.split(",") if "," in text else list(text)
        bad = next((tok for tok in toks if not tok.strip().isdigit()), text)
        raise InvalidInput(f"malformed permutation token {bad!r} in {text!r}") from None
    return Permutation(values)


def as_perm(p) -> Permutation:
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return parse_perm(p)
    return Permutation(p)


def reduce(word: Sequence[int]) -> Permutation:
    """Replace the i-th smallest entry of ``word`` with i."""
    ranks = {v: r for r, v in enumerate(sorted(word), start=1)}
    if len(ranks) != len(word):
        raise InvalidInput(f"word has repeated entries: {tuple(word)!r}")
    return Permutation(ranks[v] for v in word)


def _reduce_fast(word: Sequence[int]) -> tuple[int, ...]:
    # no validation; used in hot loops over distinct-entry subsequences
    order = sorted(range(len(word)), key=word.__getitem__)
    out = [0] * len(word)
    for r, i in enumerate(order, start=1):
        out[i] = r
    return tuple(out)


def _pattern(tau) -> tuple[int, ...]:
    return tuple(parse_perm(tau)) if isinstance(tau, str) else tuple(tau)


def _is_increasing(tau: Sequence[int]) -> bool:
    return all(tau[i] == i + 1 for i in range(len(tau)))


def count_increasing(sigma: Sequence[int], m: int) -> int:
    """Number of increasing subsequences of length ``m``, O(m n^2)."""
    n = len(sigma)
    if m == 0:
        return 1
    ends = [1] * n  # ends[i] = increasing subsequences of current length ending at i
    for _ in range(m - 1):
        ends = [sum(ends[j] for j in range(i) if sigma[j] < sigma[i]) for i in range(n)]
    return sum(ends)


def occurrences(sigma: Sequence[int], tau: Sequence[int]) -> int:
    """Number of occurrences of the classical pattern ``tau`` in ``sigma``."""
    tau = _pattern(tau)
    k = len(tau)
    if k == 0:
        raise InvalidInput("pattern must be nonempty")
    if k > len(sigma):
        return 0
    if _is_increasing(tau):
        return count_increasing(sigma, k)
    return sum(1 for sub in itertools.combinations(sigma, k) if _reduce_fast(sub) == tau)


def pattern_profile(sigma: Sequence[int], k: int) -> Counter:
    """Occurrence counts of every length-``k`` pattern in ``sigma`` at once."""
    return Counter(_reduce_fast(sub) for sub in itertools.combinations(sigma, k))


def contains(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    tau = _pattern(tau)
    k = len(tau)
    return any(_reduce_fast(sub) == tau for sub in itertools.combinations(sigma, k))


def avoids(sigma: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains(sigma, tau) for tau in patterns)


class PatternSet(tuple):
    """Ordered list of distinct nonempty patterns; order fixes variable order."""

    __slots__ = ()

    def __new__(cls, patterns: Iterable = ()):
        pats = tuple(as_perm(p) for p in patterns)
        if any(len(p) == 0 for p in pats):
            raise InvalidInput("patterns must be nonempty")
        if len(set(pats)) != len(pats):
            raise InvalidInput(f"duplicate pattern in {[str(p) for p in pats]}")
        return super().__new__(cls, pats)

    def __repr__(self) -> str:
        return "PatternSet([" + ", ".join(repr(str(p)) for p in self) + "])"


GAMMA2 = PatternSet(["12", "21"])
GAMMA3 = PatternSet(["123", "213", "231", "312", "321"])
GAMMA4 = PatternSet(["1234", "2134", "2314", "2341", "3124", "3214", "3241",
                     "3412", "3421", "4123", "4213", "4231", "4312", "4321"])


# -- symmetries -------------------------------------------------------------

def reverse(sigma: Sequence[int]) -> Permutation:
    return Permutation(reversed(tuple(sigma)))


def complement(sigma: Sequence[int]) -> Permutation:
    n = len(sigma)
    return Permutation(n + 1 - v for v in sigma)


def inverse(sigma: Sequence[int]) -> Permutation:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        inv[v - 1] = i
    return Permutation(inv)


def reverse_complement(sigma: Sequence[int]) -> Permutation:
    return complement(reverse(sigma))


SYMMETRIES = {
    "reverse": reverse,
    "complement": complement,
    "reverse_complement": reverse_complement,
    "inverse": inverse,
}


def symmetry(sigma: Sequence[int], action: str) -> Permutation:
    try:
        return SYMMETRIES[action](as_perm(sigma))
    except KeyError:
        raise InvalidInput(f"unknown symmetry action {action!r}") from None


# -- sums and decompositions ------------------------------------------------

def direct_sum(pi: Sequence[int], sigma: Sequence[int]) -> Permutation:
    m = len(pi)
    return Permutation(tuple(pi) + tuple(v + m for v in sigma))


def skew_sum(pi: Sequence[int], sigma: Sequence[int]) -> Permutation:
    n = len(sigma)
    return Permutation(tuple(v + n for v in pi) + tuple(sigma))


def skew_decompositions(gamma: Sequence[int]) -> list[tuple[Permutation, Permutation]]:
    """All (pi, tau), both nonempty, with gamma = pi skew-sum tau; by |pi| ascending."""
    gamma = _pattern(gamma)
    n = len(gamma)
    out = []
    for split in range(1, n):
        head, tail = gamma[:split], gamma[split:]
        # a skew split needs every head value above every tail value
        if min(head) > max(tail):
            out.append((reduce(head), reduce(tail)))
    return out


# -- statistics -------------------------------------------------------------

@dataclass(frozen=True)
class PermStats:
    inv: int
    coinv: int
    lrmin: int
    linv: int


def lr_minima(sigma: Sequence[int]) -> list[int]:
    """Positions (0-based) of the left-to-right minima."""
    out, low = [], None
    for i, v in enumerate(sigma):
        if low is None or v < low:
            out.append(i)
            low = v
    return out


def inversions(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def linv(sigma: Sequence[int]) -> int:
    """
    Pairs (minimum value, non-minimum value) where the left-to-right minimum is
    the larger of the two. Compared by value only; on 123-avoiders every such
    pair already has the minimum to the left, so the position-ordered variant
    agrees there.
    """
    mins = set(lr_minima(sigma))
    low = [sigma[i] for i in mins]
    rest = [sigma[i] for i in range(len(sigma)) if i not in mins]
    return sum(1 for a in low for b in rest if a > b)


def stats(sigma: Sequence[int]) -> PermStats:
    n = len(sigma)
    inv = inversions(sigma)
    return PermStats(inv=inv, coinv=comb(n, 2) - inv,
                     lrmin=len(lr_minima(sigma)), linv=linv(sigma))


# -- 132 structure ----------------------------------------------------------

def max_split(sigma: Sequence[int]) -> tuple[Permutation, int, Permutation]:
    """
    Split a 132-avoider around its largest entry: returns (A, k, B) where k is
    the 1-based position of n, A is the reduced prefix and B the reduced suffix.
    """
    sigma = as_perm(sigma)
    n = len(sigma)
    if n == 0:
        raise InvalidInput("max_split needs a nonempty permutation")
    if contains(sigma, (1, 3, 2)):
        raise InvalidInput(f"{sigma} contains 132")
    k = sigma.index(n) + 1
    return reduce(sigma[:k - 1]), k, reduce(sigma[k:])


# -- enumeration ------------------------------------------------------------

def _ends_with_pattern(prefix: list[int], tau: tuple[int, ...]) -> bool:
    # is there an occurrence of tau whose last entry is the last entry of prefix?
    k = len(tau)
    if len(prefix) < k:
        return False
    last = prefix[-1]
    head = prefix[:-1]
    chosen: list[int] = []

    def fits(v, t):
        if (v < last) != (tau[t] < tau[-1]):
            return False
        return all((v < w) == (tau[t] < tau[s]) for s, w in enumerate(chosen))

    def match(start, t):
        if t == k - 1:
            return True
        for i in range(start, len(head) - (k - 2 - t)):
            v = head[i]
            if fits(v, t):
                chosen.append(v)
                if match(i + 1, t + 1):
                    return True
                chosen.pop()
        return False

    return match(0, 0)


def enumerate_avoiders(n: int, patterns: Iterable = ()) -> Iterator[Permutation]:
    """
    Yield every permutation of size ``n`` avoiding all ``patterns``, in
    lexicographic order. Prefixes are pruned as soon as they contain a pattern;
    containment is a property of relative order, so it is tested on the prefix
    values directly.
    """
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    pats = [tuple(as_perm(p)) for p in patterns]
    if any(len(p) == 0 for p in pats):
        # everything contains the empty pattern
        return
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend():
        if len(prefix) == n:
            yield Permutation(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if not any(_ends_with_pattern(prefix, p) for p in pats):
                used[v] = True
                yield from extend()
                used[v] = False
            prefix.pop()

    yield from extend()


def all_perms(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
