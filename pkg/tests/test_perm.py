import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from patternlab.perm import (GAMMA2, GAMMA3, GAMMA4, InvalidInput, PatternSet, Permutation,
                             all_perms, avoids, catalan_number, complement, contains,
                             direct_sum, enumerate_avoiders, format_perm, inverse, linv,
                             lr_minima, max_split, occurrences, parse_perm, reduce, reverse,
                             reverse_complement, skew_decompositions, skew_sum, stats, symmetry)

SIGMA = parse_perm("867943251")

perms = st.integers(0, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_permutation_validates():
    assert Permutation(()) == ()
    with pytest.raises(InvalidInput):
        Permutation((1, 1, 2))
    with pytest.raises(InvalidInput):
        Permutation((0, 1))


def test_text_form_round_trip():
    assert str(SIGMA) == "867943251"
    long = Permutation(range(10, 0, -1))
    assert format_perm(long) == "10,9,8,7,6,5,4,3,2,1"
    assert parse_perm(str(long)) == long
    assert parse_perm("") == Permutation()


def test_malformed_token_is_named():
    with pytest.raises(InvalidInput, match="'a'"):
        parse_perm("12a")
    with pytest.raises(InvalidInput, match="x"):
        parse_perm("1,x,2")


def test_reduce():
    assert reduce((4, 6, 8, 5)) == Permutation((1, 3, 4, 2))
    assert reduce((1, 3, 2)) == Permutation((1, 3, 2))
    assert reduce(()) == Permutation()
    with pytest.raises(InvalidInput):
        reduce((3, 3))


@given(st.lists(st.integers(-50, 50), unique=True, max_size=8))
def test_reduce_idempotent(word):
    assert reduce(reduce(word)) == reduce(word)


def test_occurrences_examples():
    assert occurrences(SIGMA, "123") == 1
    assert occurrences(SIGMA, "132") == 0
    assert occurrences(SIGMA, "1") == 9
    assert occurrences(Permutation((1, 2, 3, 4)), "12") == 6
    with pytest.raises(InvalidInput):
        occurrences(SIGMA, ())


def test_increasing_fast_path_agrees_with_subsets():
    for sigma in all_perms(6):
        for m in (2, 3, 4):
            slow = sum(1 for sub in itertools.combinations(sigma, m) if list(sub) == sorted(sub))
            assert occurrences(sigma, tuple(range(1, m + 1))) == slow


def test_avoids():
    assert avoids(SIGMA, PatternSet(["132"]))
    assert not avoids(Permutation((1, 2, 3)), PatternSet(["123"]))
    assert avoids(Permutation(), PatternSet(["1", "12"]))


def test_symmetry_examples():
    s = parse_perm("15324")
    assert str(symmetry(s, "reverse")) == "42351"
    assert str(symmetry(s, "complement")) == "51342"
    assert str(symmetry(s, "inverse")) == "14352"
    assert str(symmetry(s, "reverse_complement")) == "24315"
    assert symmetry("15324", "reverse") == reverse(s)
    with pytest.raises(InvalidInput):
        symmetry(s, "rotate")


@given(perms)
def test_symmetries_are_involutions(sigma):
    for f in (reverse, complement, inverse, reverse_complement):
        assert f(f(sigma)) == sigma


def test_symmetry_transport_small():
    pats = [p for k in range(1, 5) for p in all_perms(k)]
    for n in range(7):
        for sigma in all_perms(n):
            for action in ("reverse", "complement", "inverse"):
                image = symmetry(sigma, action)
                for tau in pats:
                    assert occurrences(image, symmetry(tau, action)) == occurrences(sigma, tau)
        if n >= 6:
            break


def test_sums():
    assert skew_sum(Permutation((1,)), Permutation((1, 2))) == Permutation((3, 1, 2))
    assert direct_sum(Permutation((2, 1)), Permutation((1,))) == Permutation((2, 1, 3))
    assert direct_sum(Permutation(), SIGMA) == SIGMA


def test_skew_decompositions():
    assert skew_decompositions("312") == [(Permutation((1,)), Permutation((1, 2)))]
    assert skew_decompositions("231") == [(Permutation((1, 2)), Permutation((1,)))]
    assert skew_decompositions("213") == []
    assert skew_decompositions("321") == [(Permutation((1,)), Permutation((2, 1))),
                                          (Permutation((2, 1)), Permutation((1,)))]


def test_skew_decompositions_complete():
    for k in range(1, 6):
        for gamma in all_perms(k):
            found = skew_decompositions(gamma)
            for pi, tau in found:
                assert skew_sum(pi, tau) == gamma
            expect = sum(1 for j in range(1, k) if min(gamma[:j]) > max(gamma[j:]))
            assert len(found) == expect


def test_stats():
    st_ = stats(SIGMA)
    assert st_.lrmin == 6
    assert [SIGMA[i] for i in lr_minima(SIGMA)] == [8, 6, 4, 3, 2, 1]
    assert stats(Permutation(range(1, 6))).inv == 0


@given(perms)
def test_inv_plus_coinv(sigma):
    s = stats(sigma)
    n = len(sigma)
    assert s.inv + s.coinv == comb(n, 2)
    if n >= 2:
        assert occurrences(sigma, "12") + occurrences(sigma, "21") == comb(n, 2)


def test_linv_positional_variant_agrees_on_123_avoiders():
    for n in range(8):
        for sigma in enumerate_avoiders(n, ["123"]):
            mins = set(lr_minima(sigma))
            positional = sum(1 for i in mins for j in range(i + 1, n)
                             if j not in mins and sigma[i] > sigma[j])
            assert linv(sigma) == positional


def test_max_split():
    assert max_split(SIGMA) == (Permutation((3, 1, 2)), 4, Permutation((4, 3, 2, 5, 1)))
    assert max_split(Permutation((1,))) == (Permutation(), 1, Permutation())
    assert max_split(Permutation((1, 2))) == (Permutation((1,)), 2, Permutation())
    with pytest.raises(InvalidInput):
        max_split(Permutation((1, 3, 2)))


def _occ_from_split(sigma, gamma):
    """Counts of length-2/3 patterns rebuilt from A, n, B."""
    A, k, B = max_split(sigma)
    n, r = len(sigma), len(sigma) - k
    o = lambda p, t: occurrences(p, t) if len(p) >= len(t) else 0
    table = {
        "12": o(A, "12") + o(B, "12") + (k - 1),
        "21": o(A, "21") + o(B, "21") + k * r,
        "123": o(A, "123") + o(B, "123") + o(A, "12"),
        "213": o(A, "213") + o(B, "213") + o(A, "21"),
        "231": o(A, "231") + o(B, "231") + r * o(A, "12") + (k - 1) * r,
        "312": o(A, "312") + o(B, "312") + k * o(B, "12"),
        "321": o(A, "321") + o(B, "321") + r * o(A, "21") + k * o(B, "21"),
    }
    return table[gamma]


def test_split_reconstructs_counts():
    for n in range(1, 9):
        for sigma in enumerate_avoiders(n, ["132"]):
            for gamma in GAMMA2 + GAMMA3:
                g = str(gamma)
                assert _occ_from_split(sigma, g) == occurrences(sigma, gamma), (sigma, g)


def test_enumerate_avoiders():
    got = [str(p) for p in enumerate_avoiders(3, ["132"])]
    assert got == ["123", "213", "231", "312", "321"]
    assert list(enumerate_avoiders(0, ["12"])) == [Permutation()]
    for n in range(11):
        assert sum(1 for _ in enumerate_avoiders(n, ["132"])) == catalan_number(n)
        assert sum(1 for _ in enumerate_avoiders(n, ["123"])) == catalan_number(n)


def test_enumerate_matches_filter():
    for n in range(7):
        for pats in (["132"], ["123"], ["2413", "3142"], ["12", "321"]):
            slow = [p for p in all_perms(n) if avoids(p, PatternSet(pats))]
            assert list(enumerate_avoiders(n, pats)) == slow


def test_pattern_sets():
    assert len(GAMMA4) == 14
    assert all(not contains(p, "132") for p in GAMMA4)
    with pytest.raises(InvalidInput):
        PatternSet(["12", "12"])
