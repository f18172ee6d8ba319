import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from nscatalan import _kernels_py
from nscatalan.exactpoly import (
    BACKEND,
    LaurentPoly,
    QPoly,
    phi,
    pi,
    pi_divided_difference,
    pi_hat,
    pi_w,
    s_act,
)
from nscatalan.hecke import generator, identity, longest
from nscatalan.keybasis import schur_poly

from conftest import mono


class TestPi:
    def test_square(self):
        assert pi(1, mono(2, 0)) == mono(2, 0) + mono(1, 1) + mono(0, 2)

    def test_symmetric_fixed(self):
        assert pi(1, mono(1, 1)) == mono(1, 1)

    def test_ascent_gives_negative(self):
        assert pi(1, mono(0, 2)) == -mono(1, 1)

    def test_three_vars(self):
        assert pi_w(generator(1, 3), mono(2, 0, 0)) == mono(2, 0, 0) + mono(1, 1, 0) + mono(0, 2, 0)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            pi(2, mono(1, 0))


class TestPiHat:
    def test_symmetric_killed(self):
        assert pi_hat(1, mono(1, 1)).is_zero()

    def test_square(self):
        assert pi_hat(1, mono(2, 0)) == mono(1, 1) + mono(0, 2)

    def test_constant(self):
        assert pi_hat(1, LaurentPoly.one(2)).is_zero()


class TestPiW:
    def test_identity(self):
        f = mono(1, 2, 0) + mono(0, 0, 3, q=1)
        assert pi_w(identity(3), f) == f

    @pytest.mark.parametrize("mu", [(2, 1, 0), (3, 1, 1), (2, 2, 0), (1, 1, 1)])
    def test_longest_gives_schur(self, mu):
        # bialternant oracle: s_mu = a_{mu+delta} / a_delta evaluated at a point
        from itertools import permutations
        from fractions import Fraction

        got = pi_w(longest(3), mono(*mu))
        xs = (Fraction(2), Fraction(3), Fraction(7))
        n = 3
        delta = (2, 1, 0)

        def alt(e):
            total = Fraction(0)
            for perm in permutations(range(n)):
                sign = 1
                for a in range(n):
                    for b in range(a + 1, n):
                        if perm[a] > perm[b]:
                            sign = -sign
                term = Fraction(sign)
                for k in range(n):
                    term *= xs[perm[k]] ** e[k]
                total += term
            return total

        want = alt(tuple(m + d for m, d in zip(mu, delta))) / alt(delta)
        assert got.evaluate(xs) == want
        assert got == schur_poly(mu, 3)


class TestPhi:
    def test_monomial(self):
        assert phi(mono(3, 2)) == mono(2, 3, q=2)

    def test_one(self):
        assert phi(LaurentPoly.one(3)) == LaurentPoly.one(3)

    def test_quadratic(self):
        f = mono(2, 0) + mono(1, 1) + mono(0, 2)
        assert phi(f) == mono(0, 2) + mono(1, 1, q=1) + mono(2, 0, q=2)


class TestSwap:
    def test_examples(self):
        assert s_act(1, mono(1, 0)) == mono(0, 1)
        assert s_act(1, mono(1, 1)) == mono(1, 1)
        assert s_act(1, mono(2, 1, q=1)) == mono(1, 2, q=1)


class TestArithmetic:
    def test_ring_ops(self):
        x1, x2 = LaurentPoly.x(1, 2), LaurentPoly.x(2, 2)
        assert (x1 + x2) ** 2 == mono(2, 0) + 2 * mono(1, 1) + mono(0, 2)
        assert (x1 - x1).is_zero()
        assert (x1 * QPoly.q(2)) == mono(1, 0, q=2)

    def test_subs_q_inverse(self):
        assert mono(1, 0, q=2).subs_q_inverse() == mono(1, 0, q=-2)

    def test_kill_and_extend(self):
        f = mono(1, 0, 2) + mono(2, 1, 0)
        assert f.kill_variables(2) == mono(2, 1)
        assert mono(2, 1).extend_variables(3) == mono(2, 1, 0)

    def test_text(self):
        assert (mono(1, 0) + mono(0, 2, q=1, c=-3)).to_text() == "x1 - 3*q*x2^2"
        assert LaurentPoly.zero(2).to_text() == "0"

    def test_json_roundtrip(self):
        f = mono(1, -1, q=2, c=5) + mono(0, 3)
        obj = json.loads(json.dumps(f.to_json_obj()))
        assert LaurentPoly.from_json_obj(2, obj) == f

    def test_qpoly(self):
        p = QPoly({0: 1, 2: 3})
        assert str(p) == "1 + 3*q^2"
        assert (p * p)[2] == 6
        assert p.subs_q_inverse().min_degree() == -2


def test_backend_selected():
    assert BACKEND in ("cython", "python")


def test_pure_python_env_var():
    env = dict(os.environ, NSCATALAN_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from nscatalan.exactpoly import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


# -- properties ---------------------------------------------------------------

terms = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(-2, 3), st.integers(-2, 3), st.integers(-2, 3)),
    st.integers(-3, 3).filter(bool),
    max_size=5,
)


def poly(d):
    return LaurentPoly(3, d)


@given(terms)
def test_pi_matches_divided_difference(d):
    f = poly(d)
    for i in (1, 2):
        assert pi(i, f) == pi_divided_difference(i, f)


@given(terms)
def test_zero_hecke_on_polys(d):
    f = poly(d)
    assert pi(1, pi(1, f)) == pi(1, f)
    assert pi(1, pi(2, pi(1, f))) == pi(2, pi(1, pi(2, f)))
    assert pi_hat(1, pi_hat(1, f)) == -pi_hat(1, f)


@given(terms)
def test_phi_intertwines(d):
    f = poly(d)
    assert pi(2, phi(f)) == phi(pi(1, f))


@given(terms)
def test_x_pi_hat_identity(d):
    f = poly(d)
    x1, x2 = LaurentPoly.x(1, 3), LaurentPoly.x(2, 3)
    assert x2 * pi(1, f) == pi_hat(1, x1 * f)


@given(terms, terms)
def test_pi_linear_over_symmetric(d, e):
    g = poly(e)
    f = poly(d)
    sym = g + s_act(1, g)
    assert pi(1, sym * f) == sym * pi(1, f)


@given(terms)
def test_swap_involution(d):
    f = poly(d)
    assert s_act(2, s_act(2, f)) == f


@given(terms, terms)
@settings(max_examples=50)
def test_kernels_agree(d, e):
    try:
        from nscatalan import _kernels as kc
    except ImportError:  # pragma: no cover
        pytest.skip("compiled kernels not built")
    assert kc.pi_terms(dict(d), 1) == _kernels_py.pi_terms(dict(d), 1)
    assert kc.phi_terms(dict(d)) == _kernels_py.phi_terms(dict(d))
    assert kc.mul_terms(dict(d), dict(e)) == _kernels_py.mul_terms(dict(d), dict(e))
