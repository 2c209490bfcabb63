import itertools

import pytest
from hypothesis import given, strategies as st

from khr.braids import (
    BraidWord,
    compose,
    coset_normal_form,
    evaluate_word,
    identity,
    inverse,
    inversions,
    is_permutation,
    jucys_murphy_braid,
    longest_element,
    parse_braid_word,
    permutation_of,
    reduced_word,
    right_multiply,
)

perms = st.integers(2, 6).flatmap(
    lambda n: st.permutations(list(range(n))).map(tuple)
)


def test_braid_word_validation():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(0, ())
    with pytest.raises(ValueError):
        BraidWord(3, (0,))


def test_braid_word_algebra():
    b = BraidWord(3, (1, -2))
    assert (b * b).letters == (1, -2, 1, -2)
    assert b.inverse().letters == (2, -1)
    assert b.writhe() == 0
    assert str(b) == "1 -2"


def test_parse_braid_word_errors():
    with pytest.raises(ValueError):
        parse_braid_word("x", 3)
    with pytest.raises(ValueError):
        parse_braid_word("3", 3)


@given(perms)
def test_inverse_is_inverse(p):
    assert compose(p, inverse(p)) == identity(len(p))
    assert compose(inverse(p), p) == identity(len(p))


@given(perms)
def test_inversions_of_inverse(p):
    assert inversions(p) == inversions(inverse(p))


@given(perms)
def test_reduced_word_roundtrip(p):
    w = reduced_word(p)
    assert len(w) == inversions(p)
    assert evaluate_word(w, len(p)) == p


@given(perms, st.integers(1, 5))
def test_right_multiply_changes_length_by_one(p, i):
    if i >= len(p):
        return
    q = right_multiply(p, i)
    assert is_permutation(q)
    assert abs(inversions(q) - inversions(p)) == 1


@given(perms)
def test_coset_normal_form(p):
    n = len(p)
    u, tail = coset_normal_form(p)
    assert u[n - 1] == n - 1
    assert inversions(p) == inversions(u) + len(tail)
    w = u
    for i in tail:
        w = right_multiply(w, i)
    assert w == p


def test_longest_element():
    for n in range(1, 6):
        w0 = longest_element(n)
        assert inversions(w0) == n * (n - 1) // 2
        assert all(
            inversions(right_multiply(w0, i)) < inversions(w0)
            for i in range(1, n)
        )


def test_permutation_of_forgets_signs():
    assert permutation_of(BraidWord(3, (1, -2))) == permutation_of(
        BraidWord(3, (-1, 2))
    )


def test_jucys_murphy_braids():
    assert jucys_murphy_braid(0, 3).letters == ()
    assert jucys_murphy_braid(1, 3).letters == (1, 1)
    assert jucys_murphy_braid(2, 3).letters == (2, 1, 1, 2)
    # the closure permutation of j_k is trivial
    for n, k in itertools.product(range(2, 5), range(0, 3)):
        if k <= n - 1:
            b = jucys_murphy_braid(k, n)
            assert permutation_of(b) == identity(n)
