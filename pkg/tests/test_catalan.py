from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nscatalan.catalan import (
    catalan,
    catalan_direct,
    catalan_recursive,
    catalan_rotation,
    hall_littlewood_schur,
    kostka_foulkes_qkostant,
    kschur,
    n_stats,
    schur_expansion,
)
from nscatalan.exactpoly import QPoly
from nscatalan.hecke import all_elements, from_word, generator, identity, longest
from nscatalan.keybasis import expand_keys
from nscatalan.rootideals import all_root_ideals, delta_k, empty, full, is_tame, parse_nr

from conftest import keys, mono

W0 = longest(3)

# (gamma, w, key expansion) for H(Delta+_3; gamma; w)
SMALL_EXAMPLES = [
    ((1, 0, 0), W0, {(0, "001"): 1}),
    ((1, 1, 0), generator(2, 3), {(0, "101"): 1, (1, "200"): 1}),
    ((1, 1, 0), from_word([1, 2], 3), {(0, "011"): 1, (1, "020"): 1}),
    ((1, 1, 0), W0, {(0, "011"): 1, (1, "002"): 1}),
    ((2, 1, 1), generator(2, 3), {(0, "211"): 1, (1, "301"): 1, (1, "202"): 1, (2, "301"): 1, (3, "400"): 1}),
]

KEY_POSITIVE = {
    (0, "22112"): 1, (1, "32111"): 1, (1, "22013"): 1, (2, "33011"): 1, (2, "32012"): 1,
    (2, "23003"): 1, (2, "42011"): 1, (3, "42011"): 1, (3, "43001"): 1, (3, "42002"): 1,
    (3, "33002"): 1, (4, "43001"): 1, (4, "52001"): 1, (5, "53000"): 1,
}

# Schur expansion of H(Psi; 22211; w0); a reference listing contains the malformed "s_{3122}" where
# the computed term is s_{3221} (both routes agree).
SCHUR_KSCHUR = {
    (0, "22211"): 1, (1, "32111"): 1, (1, "32210"): 1, (2, "33110"): 1, (2, "32210"): 1,
    (2, "33200"): 1, (2, "42110"): 1, (3, "42110"): 1, (3, "43100"): 1, (3, "42200"): 1,
    (3, "33200"): 1, (4, "43100"): 1, (4, "52100"): 1, (5, "53000"): 1,
}


class TestRecursion:
    def test_two_variable_example(self):
        got = catalan_recursive(full(2), (3, 2), identity(2))
        assert got == mono(3, 2) + mono(4, 1, q=1) + mono(5, 0, q=2)

    def test_empty_ideal(self):
        assert catalan_recursive(empty(3), (2, 0, 1), identity(3)) == mono(2, 0, 1)

    def test_mixed_sign_weight_keeps_higher_q(self):
        # |gamma| = 0 yet a q^1 term survives truncation
        want = mono(0, 0, c=-1) + mono(0, 0, q=1)
        assert catalan_recursive(full(2), (-1, 1), identity(2)) == want
        assert catalan_direct(full(2), (-1, 1), identity(2)) == want

    def test_negative_tail_vanishes(self):
        assert catalan_recursive(full(3), (2, 1, -1), W0).is_zero()


@pytest.mark.parametrize("gamma,w,expected", SMALL_EXAMPLES)
def test_small_examples_all_routes(gamma, w, expected):
    want = keys(3, expected)
    rec = catalan_recursive(full(3), gamma, w)
    assert expand_keys(rec) == want
    assert catalan_rotation(full(3), gamma, w) == rec
    assert catalan_direct(full(3), gamma, w) == rec


class TestRotation:
    def test_trivial(self):
        assert catalan_rotation(empty(2), (1, 0), identity(2)) == mono(1, 0)

    def test_rejects_non_tame(self):
        with pytest.raises(ValueError):
            catalan_rotation(full(3), (1, 1, 0), identity(3))

    def test_rejects_negative_gamma(self):
        with pytest.raises(ValueError):
            catalan_rotation(full(3), (1, 1, -1), W0)


class TestKeyPositiveExample:
    psi = parse_nr("2,2,2,2", 5)
    mu = (2, 2, 2, 1, 1)

    def test_key_expansion(self):
        w = from_word([3, 4, 3], 5)
        rec = catalan_recursive(self.psi, self.mu, w)
        assert expand_keys(rec) == keys(5, KEY_POSITIVE)
        assert catalan_rotation(self.psi, self.mu, w) == rec

    def test_schur_expansion(self):
        res = kschur(self.mu, 3)
        assert res.schur_expansion == keys(5, SCHUR_KSCHUR)
        assert catalan_rotation(self.psi, self.mu, longest(5)) == res.poly
        # the malformed reference token s_{3122} is not a partition; no such term occurs
        assert all(al != (3, 1, 2, 2, 0) for _, al in res.schur_expansion.terms)


class TestKSchur:
    def test_large_k_is_schur(self):
        res = kschur((2, 1, 1), 4)
        assert res.schur_expansion == keys(3, {(0, "211"): 1})
        assert delta_k((2, 1, 1), 4) == empty(3)

    def test_single_box(self):
        assert kschur((1,), 1).schur_expansion == keys(1, {(0, "1"): 1})


class TestKostka:
    def test_examples(self):
        assert kostka_foulkes_qkostant((1, 1, 1), (1, 1, 1)) == QPoly(1)
        assert kostka_foulkes_qkostant((2, 1), (1, 1, 1)) == QPoly({1: 1, 2: 1})
        assert kostka_foulkes_qkostant((3,), (1, 1, 1)) == QPoly.q(3)

    def test_hall_littlewood_111(self):
        assert hall_littlewood_schur((1, 1, 1)) == keys(3, {(0, "111"): 1, (1, "210"): 1, (2, "210"): 1, (3, "300"): 1})

    def test_n_stats(self):
        assert n_stats((1, 1, 1), 3) == (3, Fraction(0))
        assert n_stats((), 3) == (0, Fraction(0))
        assert n_stats((2, 1, 1), 3) == (3, Fraction(1, 3))


def test_catalan_wrapper():
    res = catalan(full(3), (1, 1, 0), W0)
    assert res.key_expansion == keys(3, {(0, "011"): 1, (1, "002"): 1})
    assert res.schur_expansion == keys(3, {(0, "110"): 1, (1, "200"): 1})
    assert catalan(full(3), (1, 1, 0), generator(2, 3)).schur_expansion is None
    with pytest.raises(ValueError):
        catalan(full(3), (1, 1, 0), W0, route="nope")


def test_schur_expansion_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        schur_expansion(keys(2, {(0, "10"): 1}))


# -- properties ---------------------------------------------------------------

ideals3 = st.integers(2, 3).flatmap(lambda n: st.sampled_from(all_root_ideals(n)))


@st.composite
def tame_instances(draw):
    psi = draw(st.integers(2, 4).flatmap(lambda n: st.sampled_from(all_root_ideals(n))))
    gamma = tuple(draw(st.lists(st.integers(0, 3), min_size=psi.ell, max_size=psi.ell)))
    w = draw(st.sampled_from([w for w in all_elements(psi.ell) if is_tame(psi, w)]))
    return psi, gamma, w


@given(tame_instances())
@settings(max_examples=60, deadline=None)
def test_recursion_equals_rotation(inst):
    psi, gamma, w = inst
    assert catalan_recursive(psi, gamma, w) == catalan_rotation(psi, gamma, w)


@st.composite
def small_instances(draw):
    psi = draw(ideals3)
    gamma = tuple(draw(st.lists(st.integers(-1, 2), min_size=psi.ell, max_size=psi.ell)))
    w = draw(st.sampled_from(all_elements(psi.ell)))
    return psi, gamma, w


@given(small_instances())
@settings(max_examples=60, deadline=None)
def test_recursion_equals_direct_expansion(inst):
    psi, gamma, w = inst
    assert catalan_recursive(psi, gamma, w) == catalan_direct(psi, gamma, w)


@given(small_instances())
@settings(max_examples=40, deadline=None)
def test_key_positive_when_tame(inst):
    psi, gamma, w = inst
    # key positivity is a statement about partitions gamma
    if min(gamma) < 0 or list(gamma) != sorted(gamma, reverse=True) or not is_tame(psi, w):
        return
    assert expand_keys(catalan_recursive(psi, gamma, w)).is_nonnegative()
