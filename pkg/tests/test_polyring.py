import pytest
from hypothesis import given, settings, strategies as st

from patternlab.perm import InvalidInput
from patternlab.polyring import (MultiPoly, SeriesZ, Substitution, catalan, parse_poly,
                                 series_add, series_div, series_from_poly_family, series_mul,
                                 to_text)
from patternlab.rec132 import FHTable, S3Table

ARITY = 3
NAMES = ("x1", "x2", "x3")

exps = st.tuples(*[st.integers(-2, 4)] * ARITY)
polys = st.dictionaries(exps, st.integers(-20, 20), max_size=6).map(lambda d: MultiPoly(d, ARITY))
series = st.lists(st.integers(-30, 30), min_size=7, max_size=7).map(lambda c: SeriesZ(c, 6))
unit_series = st.tuples(st.sampled_from([1, -1]), st.lists(st.integers(-5, 5), min_size=6, max_size=6)) \
    .map(lambda t: SeriesZ([t[0], *t[1]], 6))
subs = st.lists(st.tuples(*[st.integers(-2, 2)] * ARITY), min_size=ARITY, max_size=ARITY).map(Substitution)


def P(text):
    return parse_poly(text, NAMES)


def test_basic_arithmetic():
    assert P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2")
    a = P("3*x1*x3 + 2")
    assert a + MultiPoly.zero(3) == a
    one = MultiPoly.one(2)
    assert str(one.scale_monomial((0, 2 * 2))) == "x2^4"
    with pytest.raises(InvalidInput):
        MultiPoly.one(2) + MultiPoly.one(3)


def test_no_zero_coefficients_stored():
    p = P("x1 + x2") - P("x1")
    assert p == P("x2")
    assert len(p) == 1
    assert MultiPoly({(1, 0, 0): 0}, 3) == MultiPoly.zero(3)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MultiPoly.zero(ARITY)


@given(polys, polys, subs)
def test_substitution_is_a_homomorphism(a, b, s):
    assert s(a * b) == s(a) * s(b)
    assert s(a + b) == s(a) + s(b)


@given(polys)
def test_text_round_trip(p):
    assert parse_poly(to_text(p), NAMES) == p
    assert to_text(parse_poly(to_text(p), NAMES)) == to_text(p)


@given(polys)
def test_json_round_trip(p):
    assert MultiPoly.from_json(p.to_json()) == p


def test_canonical_order():
    p = P("x3 + x1^2 + x1*x2 + 5")
    assert to_text(p) == "x1^2 + x1*x2 + x3 + 5"
    assert to_text(MultiPoly.zero(3)) == "0"
    assert to_text(P("-x1 + 2*x2")) == "-x1 + 2*x2"


def test_parse_errors():
    with pytest.raises(InvalidInput):
        P("x4")
    with pytest.raises(InvalidInput):
        P("x1^a")


def test_substitute_examples():
    s = Substitution.from_map(3, {0: {0: 1, 2: 1}})
    assert s(P("x1*x2")) == P("x1*x2*x3")
    qx = ("q", "x")
    laurent = Substitution([(1, -1), (0, 1)])
    out = laurent(parse_poly("q^2*x", qx))
    assert out.coefficient((2, -1)) == 1
    assert not out.is_polynomial()
    assert out.scale_monomial((0, 1)).is_polynomial()


def test_substitution_arity_mismatch():
    with pytest.raises(InvalidInput):
        Substitution.identity(2)(MultiPoly.one(3))


def test_eval_and_specialize():
    s3 = S3Table()
    assert s3[5].eval_all_ones() == 42
    assert s3[3].coefficient((3, 0, 1, 0, 0, 0, 0)) == 1
    q4 = FHTable()[4].specialize({1: 1}).rename(("x",))
    assert q4 == parse_poly("1 + 3*x + 3*x^2 + 3*x^3 + 2*x^4 + x^5 + x^6", ("x",))
    with pytest.raises(InvalidInput):
        q4.specialize({3: 1})


def test_specialize_other_values():
    p = P("x1^2*x2 + x2^3")
    assert p.specialize({1: 2}) == parse_poly("2*x1^2 + 8", ("x1", "x3"))


def test_weighted_sum_is_derivative_at_one():
    p = P("3*x1^2*x2 + x1 + 4")
    assert p.weighted_sum(0) == 3 * 2 + 1


def test_catalan():
    assert catalan(5).coeffs == [1, 1, 2, 5, 14, 42]
    tc = catalan(4).shift(1)
    assert series_mul(tc, tc)[2] == 1


def test_series_div_errors_and_identity():
    a = SeriesZ([1, 2, 3], 2)
    assert series_div(a, SeriesZ.one(2)) == a
    with pytest.raises(InvalidInput):
        series_div(a, SeriesZ([2, 1, 0], 2))
    with pytest.raises(IndexError):
        a[3]


@given(series, unit_series)
def test_series_div_inverts_mul(a, b):
    assert series_div(series_mul(a, b), b) == a


@given(series, series)
def test_series_add_commutes(a, b):
    assert series_add(a, b) == series_add(b, a)


def test_series_from_poly_family():
    t = FHTable()
    s = series_from_poly_family(t.entries(6), lambda p: p.eval_all_ones())
    assert s.coeffs == catalan(6).coeffs


@settings(max_examples=30)
@given(st.integers(0, 6))
def test_truncation_never_reads_past_order(n):
    c = catalan(n)
    assert len((c * c).coeffs) == n + 1
    assert (c * c).order == n
