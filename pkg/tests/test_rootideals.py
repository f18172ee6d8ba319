import pytest
from hypothesis import given, strategies as st

from nscatalan.hecke import from_word, generator, identity, longest
from nscatalan.rootideals import (
    RootIdeal,
    all_root_ideals,
    delta_k,
    delta_prime,
    empty,
    from_roots,
    full,
    is_tame,
    is_upper_ideal,
    ns_words,
    nr_to_roots,
    parabolic,
    parabolic_padded,
    parse_nr,
    parse_roots,
    removable_roots,
    remove_root,
    rotate,
)


def cols(psi, row):
    return sorted(j for i, j in psi.roots if i == row)


class TestRoots:
    def test_full(self):
        assert nr_to_roots(RootIdeal(3, (1, 1, 1))) == {(1, 2), (1, 3), (2, 3)}

    def test_empty(self):
        assert nr_to_roots(RootIdeal(3, (3, 2, 1))) == set()

    def test_big_example(self):
        psi = parse_nr("2,2,3,3,2,1", 7)
        assert psi.nr == (2, 2, 3, 3, 2, 1, 1)
        assert cols(psi, 1) == [3, 4, 5, 6, 7]
        assert cols(psi, 2) == [4, 5, 6, 7]
        assert cols(psi, 3) == [6, 7]
        assert cols(psi, 4) == [7]
        assert cols(psi, 5) == [7]
        # nr_6 = 1 puts the root (6, 7) in row 6
        assert cols(psi, 6) == [7]
        assert cols(psi, 7) == []

    def test_invalid(self):
        with pytest.raises(ValueError):
            RootIdeal(3, (1, 3, 1))


class TestRemovable:
    def test_two(self):
        assert removable_roots(full(2)) == {(1, 2)}

    def test_empty(self):
        assert removable_roots(empty(3)) == set()

    def test_full_three_bruteforce(self):
        psi = full(3)
        brute = {r for r in psi.roots if is_upper_ideal(psi.roots - {r}, 3)}
        assert removable_roots(psi) == brute == {(1, 2), (2, 3)}

    def test_remove(self):
        assert remove_root(full(3), (2, 3)).roots == {(1, 2), (1, 3)}


class TestRotate:
    def test_empty(self):
        assert rotate(empty(3)).roots == {(1, 3), (2, 3)}

    def test_big_example(self):
        psi = parse_nr("2,2,3,3,2,1", 7)
        shifted = {(i - 1, j - 1) for i, j in psi.roots if i >= 2}
        shifted |= {(i, 7) for i in range(1, 7)}
        assert rotate(psi).roots == shifted
        assert rotate(psi).nr == (2, 3, 3, 2, 1, 1, 1)


class TestNsWords:
    def test_full(self):
        assert ns_words(full(3)) == [from_word([2, 1], 3)] * 2

    def test_empty(self):
        assert ns_words(empty(3)) == [identity(3), generator(2, 3)]

    def test_kschur_example(self):
        assert ns_words(parse_nr("2,2,2,2,1")) == [from_word([4, 3, 2], 5)] * 4


class TestParabolic:
    def test_one_block(self):
        assert parabolic((4,)).roots == set()

    def test_all_ones(self):
        assert parabolic((1, 1, 1, 1)) == full(4)

    def test_132(self):
        psi = parabolic((1, 3, 2))
        assert cols(psi, 1) == [2, 3, 4, 5, 6]
        for r in (2, 3, 4):
            assert cols(psi, r) == [5, 6]
        assert cols(psi, 5) == cols(psi, 6) == []

    def test_padded(self):
        assert parabolic_padded((2,), 4).roots == {(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}


class TestDeltaPrime:
    def test_single_part(self):
        assert delta_prime((3,), 3).roots == set()

    def test_two_ones(self):
        assert delta_prime((1, 1), 2) == full(2)

    def test_631(self):
        psi = delta_prime((6, 3, 1), 10)
        assert psi.nr == (6, 6, 6, 6, 5, 4, 3, 3, 2, 1)
        assert cols(psi, 1) == [7, 8, 9, 10]
        assert cols(psi, 5) == [10]
        assert cols(psi, 8) == []

    def test_inside_parabolic(self):
        for eta in [(3, 2), (2, 2, 1), (4, 1, 1), (3, 3)]:
            assert delta_prime(eta).roots <= parabolic(eta).roots


class TestDeltaK:
    def test_example(self):
        assert delta_k((2, 2, 2, 1, 1), 3).nr == (2, 2, 2, 2, 1)

    def test_large_k_is_empty(self):
        assert delta_k((2, 1, 1), 10) == empty(3)

    def test_rectangle_is_full(self):
        assert delta_k((2, 2, 2), 2) == full(3)


class TestTame:
    def test_longest(self):
        for psi in all_root_ideals(4):
            assert is_tame(psi, longest(4))

    def test_small_tame_examples(self):
        assert is_tame(full(3), generator(2, 3))
        assert not is_tame(full(3), identity(3))
        assert is_tame(RootIdeal(3, (2, 1, 1)), identity(3))


def test_catalan_counts():
    assert [len(all_root_ideals(n)) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]


def test_parse_roots():
    assert parse_roots("1:2-3;2:3", 3) == full(3)
    assert from_roots([(1, 3)], 3).nr == (2, 2, 1)


def test_parse_nr_completion():
    assert parse_nr("2,2").nr == (2, 2, 1)
    assert parse_nr("1,1,1").nr == (1, 1, 1)


@given(st.integers(2, 5).flatmap(lambda n: st.sampled_from(all_root_ideals(n))))
def test_rotation_preserves_ideal(psi):
    r = rotate(psi)
    assert is_upper_ideal(r.roots, psi.ell)
    assert all((i, psi.ell) in r.roots for i in range(1, psi.ell))


@given(st.integers(2, 5).flatmap(lambda n: st.sampled_from(all_root_ideals(n))))
def test_removal_keeps_ideal(psi):
    for r in removable_roots(psi):
        assert is_upper_ideal(remove_root(psi, r).roots, psi.ell)
