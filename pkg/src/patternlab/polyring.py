"""
Exact sparse multivariate Laurent polynomials over the integers, and
univariate power series truncated at a fixed order.

A ``MultiPoly`` maps exponent tuples (signed, fixed arity) to nonzero Python
ints. Substituting monomials for variables is a linear map on exponent
vectors, which is how every recursion in this package rewrites its
arguments.

>>> x1, x2 = MultiPoly.variables(2)
>>> print((x1 + x2) * (x1 - x2))
x1^2 - x2^2
"""

from __future__ import annotations

import json
import re
from typing import Callable, Iterable, Mapping, Sequence

from .perm import InvalidInput

Exps = tuple


def default_names(arity: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, arity + 1))


def _grlex_key(e: Exps):
    return (sum(e), e)


class MultiPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("arity", "names", "_terms")

    def __init__(self, terms: Mapping[Exps, int] | None = None, arity: int | None = None,
                 names: Sequence[str] | None = None):
        if arity is None:
            if names is not None:
                arity = len(names)
            elif terms:
                arity = len(next(iter(terms)))
            else:
                raise InvalidInput("arity required for an empty polynomial")
        self.arity = arity
        self.names = tuple(names) if names is not None else default_names(arity)
        if len(self.names) != arity:
            raise InvalidInput(f"{len(self.names)} names for arity {arity}")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != arity:
                raise InvalidInput(f"exponent {e} has wrong length for arity {arity}")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}

    # -- constructors --------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict, arity: int, names: tuple) -> "MultiPoly":
        # trusted path: terms already tuples of the right length with nonzero ints
        p = object.__new__(cls)
        p.arity, p.names, p._terms = arity, names, terms
        return p

    @classmethod
    def constant(cls, c: int, arity: int, names=None) -> "MultiPoly":
        return cls({(0,) * arity: c}, arity, names)

    @classmethod
    def zero(cls, arity: int, names=None) -> "MultiPoly":
        return cls({}, arity, names)

    @classmethod
    def one(cls, arity: int, names=None) -> "MultiPoly":
        return cls.constant(1, arity, names)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1, names=None) -> "MultiPoly":
        return cls({tuple(exps): coeff}, len(exps), names)

    @classmethod
    def variables(cls, arity: int, names=None) -> list["MultiPoly"]:
        out = []
        for i in range(arity):
            e = [0] * arity
            e[i] = 1
            out.append(cls.monomial(e, 1, names))
        return out

    # -- inspection ----------------------------------------------------------

    def terms(self) -> list[tuple[Exps, int]]:
        """Terms in canonical graded-lex descending order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.arity)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def coefficient(self, exps: Sequence[int]) -> int:
        exps = tuple(exps)
        if len(exps) != self.arity:
            raise InvalidInput(f"exponent vector of length {len(exps)} for arity {self.arity}")
        return self._terms.get(exps, 0)

    def eval_all_ones(self) -> int:
        return sum(self._terms.values())

    def is_polynomial(self) -> bool:
        return all(min(e, default=0) >= 0 for e in self._terms)

    def min_exponent(self) -> int:
        return min((min(e, default=0) for e in self._terms), default=0)

    def degree(self, var: int) -> int:
        return max((e[var] for e in self._terms), default=0)

    def weighted_sum(self, var: int) -> int:
        """Formal partial derivative in ``var`` evaluated at the all-ones point."""
        self._check_var(var)
        return sum(e[var] * c for e, c in self._terms.items())

    def _check_var(self, var: int):
        if not 0 <= var < self.arity:
            raise InvalidInput(f"variable index {var} out of range for arity {self.arity}")

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidInput(f"unknown variable {name!r}; have {self.names}") from None

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.constant(other, self.arity, self.names)
        if not isinstance(other, MultiPoly):
            raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")
        if other.arity != self.arity:
            raise InvalidInput(f"arity mismatch: {self.arity} vs {other.arity}")
        return other

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(out, self.arity, self.names)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self._terms.items()}, self.arity, self.names)

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out: dict = {}
        get = out.get
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple([a + b for a, b in zip(ea, eb)])
                v = get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly._raw(out, self.arity, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise InvalidInput("negative powers are not supported")
        out = MultiPoly.one(self.arity, self.names)
        for _ in range(k):
            out = out * self
        return out

    def scale_monomial(self, exps: Sequence[int], coeff: int = 1) -> "MultiPoly":
        """Multiply by ``coeff`` times the monomial with exponent vector ``exps``."""
        exps = tuple(exps)
        if len(exps) != self.arity:
            raise InvalidInput(f"arity mismatch: {self.arity} vs {len(exps)}")
        if coeff == 0:
            return MultiPoly.zero(self.arity, self.names)
        out = {tuple([a + b for a, b in zip(e, exps)]): c * coeff for e, c in self._terms.items()}
        return MultiPoly._raw(out, self.arity, self.names)

    def substitute(self, s: "Substitution") -> "MultiPoly":
        if s.source_arity != self.arity:
            raise InvalidInput(f"substitution for arity {s.source_arity} applied to arity {self.arity}")
        return s(self)

    def specialize(self, assignments: Mapping[int, int]) -> "MultiPoly":
        """
        Set some variables to integers and drop them. Value 1 just sums
        coefficients over the eliminated exponents.
        """
        for v in assignments:
            self._check_var(v)
        keep = [i for i in range(self.arity) if i not in assignments]
        fixed = [(i, int(val)) for i, val in assignments.items() if val != 1]
        out: dict = {}
        for e, c in self._terms.items():
            for i, val in fixed:
                if e[i] < 0 and val not in (1, -1):
                    raise InvalidInput(f"cannot set {self.names[i]}={val} in a Laurent term")
                c *= val ** abs(e[i])
            if not c:
                continue
            k = tuple(e[i] for i in keep)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MultiPoly._raw(out, len(keep), tuple(self.names[i] for i in keep))

    def specialize_names(self, **values: int) -> "MultiPoly":
        return self.specialize({self.index(k): v for k, v in values.items()})

    def rename(self, names: Sequence[str]) -> "MultiPoly":
        return MultiPoly._raw(dict(self._terms), self.arity, tuple(names))

    def embed(self, positions: Sequence[int], arity: int, names=None) -> "MultiPoly":
        """Place variable i at index ``positions[i]`` of a larger ring."""
        out = {}
        for e, c in self._terms.items():
            big = [0] * arity
            for i, p in zip(e, positions):
                big[p] += i
            big = tuple(big)
            out[big] = out.get(big, 0) + c
        return MultiPoly({k: v for k, v in out.items() if v}, arity, names)

    def univariate(self, var: int) -> dict[int, int]:
        """Coefficients by exponent of ``var`` after setting every other variable to 1."""
        self._check_var(var)
        out: dict[int, int] = {}
        for e, c in self._terms.items():
            out[e[var]] = out.get(e[var], 0) + c
        return {k: v for k, v in sorted(out.items()) if v}

    # -- text / json ---------------------------------------------------------

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"MultiPoly({to_text(self)!r}, names={self.names})"

    def to_json(self) -> dict:
        return {"arity": self.arity, "vars": list(self.names),
                "terms": [{"e": list(e), "c": str(c)} for e, c in self.terms()]}

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(t["e"]): int(t["c"]) for t in data["terms"]},
                   data["arity"], data.get("vars"))


class Substitution:
    """
    Variable i maps to ``scalars[i] * prod_j var_j ** images[i][j]``.

    Because images are monomials, applying the substitution to a term is the
    exponent map e -> sum_i e_i * images[i] plus a scalar factor.
    """

    __slots__ = ("images", "scalars", "source_arity", "target_arity", "_sparse")

    def __init__(self, images: Sequence[Sequence[int]], scalars: Sequence[int] | None = None,
                 target_arity: int | None = None):
        self.images = [tuple(img) for img in images]
        self.source_arity = len(self.images)
        self.target_arity = target_arity if target_arity is not None else self.source_arity
        if any(len(img) != self.target_arity for img in self.images):
            raise InvalidInput("every image must have the target arity")
        self.scalars = list(scalars) if scalars is not None else [1] * self.source_arity
        if len(self.scalars) != self.source_arity:
            raise InvalidInput("one scalar per variable")
        self._sparse = [[(j, a) for j, a in enumerate(img) if a] for img in self.images]

    @classmethod
    def identity(cls, arity: int) -> "Substitution":
        return cls([[1 if i == j else 0 for j in range(arity)] for i in range(arity)])

    @classmethod
    def from_map(cls, arity: int, mapping: Mapping[int, Mapping[int, int]]) -> "Substitution":
        """``mapping[i] = {j: a}`` sends variable i to prod x_j^a; others are fixed."""
        images = []
        for i in range(arity):
            img = [0] * arity
            if i in mapping:
                for j, a in mapping[i].items():
                    img[j] += a
            else:
                img[i] = 1
            images.append(img)
        return cls(images)

    def __call__(self, p: MultiPoly, names=None) -> MultiPoly:
        if p.arity != self.source_arity:
            raise InvalidInput(f"substitution for arity {self.source_arity} applied to arity {p.arity}")
        tgt = self.target_arity
        use_scalar = any(s != 1 for s in self.scalars)
        sparse = self._sparse
        out: dict = {}
        for e, c in p._terms.items():
            new = [0] * tgt
            for i, a in enumerate(e):
                if a:
                    for j, b in sparse[i]:
                        new[j] += a * b
                    if use_scalar and self.scalars[i] != 1:
                        if a < 0 and self.scalars[i] not in (1, -1):
                            raise InvalidInput("non-unit scalar raised to a negative power")
                        c *= self.scalars[i] ** abs(a)
            if not c:
                continue
            k = tuple(new)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        if names is None:
            names = p.names if tgt == p.arity else default_names(tgt)
        return MultiPoly._raw(out, tgt, tuple(names))


# -- canonical text ---------------------------------------------------------

def _monomial_text(e: Exps, names: Sequence[str]) -> str:
    parts = []
    for a, name in zip(e, names):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def to_text(p: MultiPoly) -> str:
    """Graded-lex descending ``coeff*v1^e1*v2^e2`` with unit parts elided."""
    if not p:
        return "0"
    chunks = []
    for idx, (e, c) in enumerate(p.terms()):
        mono = _monomial_text(e, p.names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append((" + " if c > 0 else " - ") + body)
    return "".join(chunks)


def parse_poly(text: str, names: Sequence[str]) -> MultiPoly:
    """Inverse of ``to_text`` for a fixed variable list."""
    names = tuple(names)
    index = {n: i for i, n in enumerate(names)}
    arity = len(names)
    # protect negative exponents from the sign split
    pieces = re.split(r"([+-])", text.replace("^-", "^~"))
    out: dict = {}
    sign = 1
    for piece in pieces:
        piece = piece.strip()
        if piece in ("+", "-"):
            sign = -sign if piece == "-" else sign
            continue
        if not piece:
            continue
        coeff, e = 1, [0] * arity
        for factor in piece.split("*"):
            factor = factor.strip().replace("^~", "^-")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in index:
                raise InvalidInput(f"unknown variable {name!r} in {text!r}")
            try:
                e[index[name]] += int(power) if power else 1
            except ValueError:
                raise InvalidInput(f"bad exponent in {factor!r}") from None
        k = tuple(e)
        out[k] = out.get(k, 0) + sign * coeff
        sign = 1
    return MultiPoly(out, arity, names)


# -- truncated power series -------------------------------------------------

class SeriesZ:
    """Power series in t with integer coefficients, known through t^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        coeffs = coeffs[:order + 1] + [0] * max(0, order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    def __getitem__(self, n: int) -> int:
        if n > self.order:
            raise IndexError(f"t^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n] if n >= 0 else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesZ):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"SeriesZ({self.coeffs}, order={self.order})"

    def _check(self, other: "SeriesZ") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "SeriesZ") -> "SeriesZ":
        N = self._check(other)
        return SeriesZ([self.coeffs[i] + other.coeffs[i] for i in range(N + 1)], N)

    def __sub__(self, other: "SeriesZ") -> "SeriesZ":
        N = self._check(other)
        return SeriesZ([self.coeffs[i] - other.coeffs[i] for i in range(N + 1)], N)

    def __neg__(self) -> "SeriesZ":
        return SeriesZ([-c for c in self.coeffs], self.order)

    def __mul__(self, other) -> "SeriesZ":
        if isinstance(other, int):
            return SeriesZ([c * other for c in self.coeffs], self.order)
        N = self._check(other)
        a, b = self.coeffs, other.coeffs
        return SeriesZ([sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)], N)

    __rmul__ = __mul__

    def __truediv__(self, other: "SeriesZ") -> "SeriesZ":
        return series_div(self, other)

    def shift(self, k: int) -> "SeriesZ":
        """Multiply by t^k (k >= 0), keeping the order."""
        return SeriesZ([0] * k + self.coeffs[:self.order + 1 - k], self.order)

    @classmethod
    def one(cls, order: int) -> "SeriesZ":
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> "SeriesZ":
        return cls([0, 1], order)


def series_add(a: SeriesZ, b: SeriesZ) -> SeriesZ:
    return a + b


def series_mul(a: SeriesZ, b: SeriesZ) -> SeriesZ:
    return a * b


def series_div(a: SeriesZ, b: SeriesZ) -> SeriesZ:
    """Exact quotient a / b; b must have constant term +1 or -1."""
    b0 = b.coeffs[0]
    if b0 not in (1, -1):
        raise InvalidInput(f"divisor constant term must be a unit, got {b0}")
    N = min(a.order, b.order)
    q: list[int] = []
    for n in range(N + 1):
        r = a.coeffs[n] - sum(q[i] * b.coeffs[n - i] for i in range(n))
        q.append(r * b0)
    return SeriesZ(q, N)


def catalan(order: int) -> SeriesZ:
    c = [1]
    for n in range(1, order + 1):
        c.append(sum(c[i] * c[n - 1 - i] for i in range(n)))
    return SeriesZ(c, order)


def series_from_poly_family(entries: Sequence[MultiPoly], weight: Callable[[MultiPoly], int]) -> SeriesZ:
    return SeriesZ([weight(p) for p in entries], len(entries) - 1)
