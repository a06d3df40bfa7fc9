"""
Pattern popularity: the total number of occurrences of a pattern summed over
an avoidance class, collected as a power series in t.

Closed forms and recurrences are in terms of the Catalan series C(t):

    F_12      = t^2 C^3 / (1 - 2tC)^2          (12 over S_n(132))
    F_12..m   = tC F_12..(m-1) / (1 - 2tC)
    G_1m..2   = tC G_1(m-1)..2 / (1 - 2tC)     (over S_n(123))

The closed form usually quoted for G_12 over S_n(123), tC^2 / (1 - 2tC), is
available as ``g12_printed`` but does not agree with direct enumeration, so
``g_desc`` is seeded from the oracle by default.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .perm import InvalidInput
from .polyring import SeriesZ, catalan, series_div

CLASSES = ("132", "123")


@dataclass(frozen=True)
class PopularitySeries:
    pattern: str
    avoid: str
    series: SeriesZ
    disputed: bool = False

    def __post_init__(self):
        if self.avoid not in CLASSES:
            raise InvalidInput(f"avoidance class must be one of {CLASSES}, got {self.avoid!r}")

    @property
    def order(self) -> int:
        return self.series.order

    def coeffs(self) -> list[int]:
        return list(self.series.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.series[n]

    def rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.series.coeffs))


def _one_minus_2tc(N: int) -> tuple[SeriesZ, SeriesZ]:
    tc = catalan(N).shift(1)
    return tc, SeriesZ.one(N) - tc * 2


def f12(N: int) -> PopularitySeries:
    """Total coinversions over S_n(132)."""
    if N < 2:
        raise InvalidInput("f12 needs N >= 2")
    C = catalan(N)
    tc, den = _one_minus_2tc(N)
    num = (C * C * C).shift(2)
    return PopularitySeries("12", "132", series_div(num, den * den))


def f_incr(N: int, m: int) -> PopularitySeries:
    """Total occurrences of 12...m over S_n(132)."""
    if m < 2:
        raise InvalidInput("f_incr needs m >= 2")
    out = f12(max(N, 2))
    tc, den = _one_minus_2tc(out.order)
    s = out.series
    for _ in range(3, m + 1):
        s = series_div(tc * s, den)
    s = SeriesZ(s.coeffs, N)
    return PopularitySeries("".join(str(i) for i in range(1, m + 1)), "132", s)


def _desc_name(m: int) -> str:
    return "1" + "".join(str(i) for i in range(m, 1, -1))


def g12_oracle(N: int) -> PopularitySeries:
    """Total coinversions over S_n(123), counted directly."""
    from .oracle import popularity_oracle
    return PopularitySeries("12", "123", SeriesZ([popularity_oracle(n, "123", "12") for n in range(N + 1)], N))


def g12_printed(N: int) -> PopularitySeries:
    """tC^2 / (1 - 2tC), kept for comparison only; flagged as disputed."""
    if N < 1:
        raise InvalidInput("g12_printed needs N >= 1")
    C = catalan(N)
    tc, den = _one_minus_2tc(N)
    return PopularitySeries("12", "123", series_div((C * C).shift(1), den), disputed=True)


def g_desc(N: int, m: int, seed: PopularitySeries | None = None) -> PopularitySeries:
    """
    Total occurrences of 1 m (m-1) ... 2 over S_n(123). ``seed`` is the series
    for 1 (m-1) ... 2; without one the chain starts from the enumerated G_12.
    """
    if m < 3:
        raise InvalidInput("g_desc needs m >= 3")
    if seed is None:
        seed = g12_oracle(N)
        start = 2
    else:
        if seed.avoid != "123":
            raise InvalidInput("g_desc seed must be a series over S_n(123)")
        start = len(seed.pattern)
        if start >= m or seed.pattern != _desc_name(start):
            raise InvalidInput(f"seed {seed.pattern!r} does not precede {_desc_name(m)!r}")
    order = min(N, seed.order)
    tc, den = _one_minus_2tc(order)
    s = SeriesZ(seed.series.coeffs, order)
    for _ in range(start + 1, m + 1):
        s = series_div(tc * s, den)
    return PopularitySeries(_desc_name(m), "123", s, disputed=seed.disputed)


def popularity_from_table(table, variable, n_max: int) -> SeriesZ:
    """
    Coefficient n is the derivative in ``variable`` of entry n at the all-ones
    point. ``variable`` is a name or an index into the variables of
    ``table.poly(n)`` (for most families these are ``table.names``).
    """
    names = tuple(table.poly(0).names)
    if isinstance(variable, str):
        if variable not in names:
            raise InvalidInput(f"variable {variable!r} not in {names}")
        var = names.index(variable)
    else:
        var = int(variable)
        if not 0 <= var < len(names):
            raise InvalidInput(f"variable index {var} out of range for {names}")
    coeffs = []
    for n in range(n_max + 1):
        coeffs.append(table.poly(n).weighted_sum(var))
    return SeriesZ(coeffs, n_max)


def to_csv(series: list[PopularitySeries]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["pattern", "class", "n", "f", "disputed"])
    for s in series:
        for n, f in s.rows():
            w.writerow([s.pattern, s.avoid, n, f, int(s.disputed)])
    return buf.getvalue()
