import pytest
from hypothesis import given, strategies as st

from nscatalan.hecke import (
    HeckeElt,
    all_elements,
    bruhat_le,
    c_elt,
    demazure_product,
    from_word,
    generator,
    hecke_action,
    identity,
    left_descents,
    longest,
    parse_hecke,
    parse_hecke_tuple,
    reduced_word,
    reversal,
    right_descents,
    sort_perms,
)


def s(*word, ell):
    return from_word(word, ell)


class TestDemazureProduct:
    def test_idempotent_generator(self):
        assert demazure_product(generator(1, 3), generator(1, 3)) == generator(1, 3)

    def test_builds_longest(self):
        assert demazure_product(generator(1, 3), s(2, 1, ell=3)) == longest(3)

    def test_longest_absorbs(self):
        assert demazure_product(longest(3), generator(2, 3)) == longest(3)

    def test_identity_is_neutral(self):
        for w in all_elements(4):
            assert identity(4) * w == w == w * identity(4)


class TestReducedWord:
    def test_identity(self):
        assert reduced_word(identity(3)) == []

    def test_longest_lexmin(self):
        assert reduced_word(longest(3)) == [1, 2, 1]

    def test_c2_roundtrip(self):
        c2 = c_elt(2, 4)
        assert c2 == s(3, 2, ell=4)
        assert reduced_word(c2) == [3, 2]
        assert from_word(reduced_word(c2), 4) == c2

    def test_length_matches(self):
        for w in all_elements(4):
            assert len(reduced_word(w)) == w.length

    def test_str(self):
        assert str(identity(3)) == "id"
        assert str(s(3, 4, 3, ell=5)) == "3,4,3"


class TestDescents:
    def test_identity(self):
        assert right_descents(identity(3)) == set()

    def test_longest(self):
        assert right_descents(longest(4)) == {1, 2, 3}

    def test_generator(self):
        assert right_descents(generator(2, 3)) == {2}
        assert left_descents(s(2, 1, ell=3)) == {2}
        assert right_descents(s(2, 1, ell=3)) == {1}


class TestSortPerms:
    def test_sorted_input(self):
        plus, p, pl = sort_perms((3, 2, 0, 0))
        assert plus == (3, 2, 0, 0)
        assert p == identity(4)
        assert pl == generator(3, 4)

    def test_0302(self):
        plus, p, pl = sort_perms((0, 3, 0, 2))
        assert plus == (3, 2, 0, 0)
        assert p == s(1, 3, 2, ell=4)
        assert hecke_action(p, plus) == (0, 3, 0, 2)
        assert hecke_action(pl, plus) == (0, 3, 0, 2)
        assert pl.length == p.length + 1

    def test_two_vars(self):
        plus, p, pl = sort_perms((1, 2))
        assert plus == (2, 1) and p == pl == generator(1, 2)


class TestAction:
    def test_swap(self):
        assert hecke_action(generator(1, 2), (2, 1)) == (1, 2)

    def test_fixed(self):
        assert hecke_action(generator(1, 2), (1, 2)) == (1, 2)

    def test_fold(self):
        assert hecke_action(s(1, 3, 2, ell=4), (3, 2, 0, 0)) == (0, 3, 0, 2)


class TestParsing:
    def test_keywords(self):
        assert parse_hecke("id", 3) == identity(3)
        assert parse_hecke("w0", 3) == longest(3)
        assert parse_hecke("2,1", 3) == s(2, 1, ell=3)

    def test_tuple(self):
        assert parse_hecke_tuple("id;2,1;w0", 3) == [identity(3), s(2, 1, ell=3), longest(3)]

    def test_bad(self):
        with pytest.raises(ValueError):
            parse_hecke("2,x", 3)
        with pytest.raises(ValueError):
            parse_hecke("3", 3)


def test_reversal_and_bruhat():
    assert reversal(1, 3, 3) == longest(3)
    for w in all_elements(3):
        assert bruhat_le(identity(3), w) and bruhat_le(w, longest(3))


def test_bad_permutation():
    with pytest.raises(ValueError):
        HeckeElt(3, (1, 1, 2))


words = st.lists(st.integers(1, 4), max_size=8)


@given(words, words)
def test_product_is_word_concatenation(u, v):
    assert from_word(u, 5) * from_word(v, 5) == from_word(u + v, 5)


@given(words)
def test_zero_hecke_relations(u):
    w = from_word(u, 5)
    for i in range(1, 5):
        g = generator(i, 5)
        assert w * g * g == w * g
    for i in range(1, 4):
        a, b = generator(i, 5), generator(i + 1, 5)
        assert a * b * a == b * a * b


@given(words)
def test_reduced_word_roundtrip(u):
    w = from_word(u, 5)
    assert from_word(reduced_word(w), 5) == w
