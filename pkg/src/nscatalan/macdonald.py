"""Nonsymmetric Macdonald polynomials at t = 0.

Three independent routes compute E-tilde_alpha(x; q):

* ``tE`` - the recursion E~_0 = 1, E~_{s_i alpha} = pi_i E~_alpha for
  alpha_i > alpha_{i+1}, and E~_{(alpha_ell + 1, alpha_1, ..., alpha_{ell-1})}
  = x_1 Phi(E~_alpha);
* ``tE_operator`` - the operator word
  ``pi_z (x1 Phi pi_{c(eta_k)})^{eta_k} ... (x1 Phi pi_{c(eta_1)})^{eta_1} 1``
  with eta the conjugate of the sorted alpha;
* ``tE_catalan`` - the nonsymmetric Catalan function
  ``H(Delta'_ell(eta); 1^m 0^{ell-m}; p~(alpha))`` (in m variables with the
  extra variables set to zero when m = |alpha| > ell).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from .catalan import catalan_recursive
from .exactpoly import LaurentPoly, phi, pi, pi_w
from .hecke import HeckeElt, c_elt, hecke_action, longest, sort_perms
from .keybasis import KeyExpansion, expand_keys
from .rootideals import delta_prime, parabolic, parabolic_padded

__all__ = [
    "conjugate",
    "tE",
    "tE_operator",
    "tE_catalan",
    "E_from_tE",
    "symmetrize_check",
    "symmetrize_catalan",
    "symmetrized",
    "katabolizable_syt_sum",
    "stability_check",
    "operator_w",
    "clear_cache",
]


def _check_alpha(alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if not alpha:
        raise ValueError("alpha must be nonempty")
    if min(alpha) < 0:
        raise ValueError("alpha must be nonnegative")
    return alpha


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = [x for x in lam if x > 0]
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= k) for k in range(1, max(lam) + 1))


@lru_cache(maxsize=None)
def _tE(alpha: tuple[int, ...]) -> LaurentPoly:
    ell = len(alpha)
    if not any(alpha):
        return LaurentPoly.one(ell)
    for i in range(1, ell):
        if alpha[i - 1] < alpha[i]:
            swapped = alpha[: i - 1] + (alpha[i], alpha[i - 1]) + alpha[i + 1 :]
            return pi(i, _tE(swapped))
    # weakly decreasing with alpha_1 >= 1
    prev = alpha[1:] + (alpha[0] - 1,)
    return phi(_tE(prev)).mul_x1_power(1)


def tE(alpha: Sequence[int]) -> LaurentPoly:
    """E~_alpha by the t = 0 recursion (smallest ascent first)."""
    return _tE(_check_alpha(alpha))


def clear_cache() -> None:
    _tE.cache_clear()


def tE_operator(alpha: Sequence[int], z: Optional[HeckeElt] = None) -> LaurentPoly:
    """E~_alpha by the operator formula; ``z`` is any element with z alpha+ = alpha."""
    alpha = _check_alpha(alpha)
    ell = len(alpha)
    alpha_plus, p, _ = sort_perms(alpha)
    if z is None:
        z = p
    elif hecke_action(z, alpha_plus) != alpha:
        raise ValueError("z must send alpha+ to alpha")
    eta = conjugate(alpha_plus)
    f = LaurentPoly.one(ell)
    for part in eta:
        word_elt = c_elt(part, ell)
        for _ in range(part):
            f = phi(pi_w(word_elt, f)).mul_x1_power(1)
    return pi_w(z, f)


def tE_catalan(alpha: Sequence[int]) -> LaurentPoly:
    """E~_alpha as the Catalan function H(Delta'(eta); 1^m 0^{ell-m}; p~(alpha))."""
    alpha = _check_alpha(alpha)
    ell = len(alpha)
    m = sum(alpha)
    if m == 0:
        return LaurentPoly.one(ell)
    eta = conjugate(sorted(alpha, reverse=True))
    n = max(ell, m)
    big = alpha + (0,) * (n - ell)
    psi = delta_prime(eta, n)
    gamma = (1,) * m + (0,) * (n - m)
    w = sort_perms(big)[2]
    out = catalan_recursive(psi, gamma, w)
    return out if n == ell else out.kill_variables(ell)


def E_from_tE(alpha: Sequence[int], tE_poly: Optional[LaurentPoly] = None) -> LaurentPoly:
    """E_alpha(x; q, 0) = q^{sum binom(alpha_i, 2)} E~_alpha(x; 1/q)."""
    alpha = _check_alpha(alpha)
    base = tE(alpha) if tE_poly is None else tE_poly
    shift = sum(a * (a - 1) // 2 for a in alpha)
    out = base.subs_q_inverse().shift((0,) * len(alpha), q=shift)
    if any(k[0] < 0 for k in out.raw()):
        raise ArithmeticError("negative q-exponent after the q -> 1/q conversion")
    return out


def operator_w(alpha: Sequence[int], z: Optional[HeckeElt] = None) -> tuple[HeckeElt, ...]:
    """(z, c(eta_k)^{eta_k}, ..., c(eta_2)^{eta_2}, c(eta_1)^{eta_1 - 1}) for the crystal 1^{|alpha|}."""
    alpha = _check_alpha(alpha)
    ell = len(alpha)
    alpha_plus, p, _ = sort_perms(alpha)
    z = p if z is None else z
    eta = conjugate(alpha_plus)
    ws: list[HeckeElt] = [z]
    for t in range(len(eta) - 1, -1, -1):
        reps = eta[t] - 1 if t == 0 else eta[t]
        ws += [c_elt(eta[t], ell)] * reps
    return tuple(ws)


def symmetrized(alpha: Sequence[int]) -> LaurentPoly:
    """pi_{w0} E~_alpha."""
    alpha = _check_alpha(alpha)
    return pi_w(longest(len(alpha)), tE(alpha))


def katabolizable_syt_sum(alpha: Sequence[int]) -> KeyExpansion:
    """Sum of q^{charge U} s_{sh U} over the katabolizable standard tableaux.

    For m = |alpha| <= ell the tableaux have ell rows and are
    nr(Delta_ell(eta))-katabolizable; for m > ell they have at most ell rows and
    are nr(Delta(eta))-katabolizable inside m rows.
    """
    from .tabloids import Tabloid, charge, is_n_katabolizable, standard_tableaux

    alpha = _check_alpha(alpha)
    ell = len(alpha)
    m = sum(alpha)
    if m == 0:
        return KeyExpansion(ell, {(0, (0,) * ell): 1})
    eta = conjugate(sorted(alpha, reverse=True))
    if m <= ell:
        psi = parabolic_padded(eta, ell)
        rows = ell
    else:
        psi = parabolic(eta)
        rows = m
    n = psi.nr[: m - 1]
    terms: dict[tuple[int, tuple[int, ...]], int] = {}
    for U in standard_tableaux(m, ell):
        V = Tabloid.from_rows(U.rows, rows)
        if is_n_katabolizable(V, n):
            lam = U.shape
            key = (charge(V), lam)
            terms[key] = terms.get(key, 0) + 1
    return KeyExpansion(ell, terms)


def symmetrize_check(alpha: Sequence[int]) -> tuple[LaurentPoly, KeyExpansion, bool]:
    """(pi_{w0} E~_alpha, katabolizable SYT Schur sum, whether they agree)."""
    alpha = _check_alpha(alpha)
    sym = symmetrized(alpha)
    schur = katabolizable_syt_sum(alpha)
    rebuilt = KeyExpansion(len(alpha), {(a, tuple(reversed(lam))): c for (a, lam), c in schur.terms.items()})
    return sym, schur, rebuilt.reconstruct() == sym


def stability_check(beta: Sequence[int]) -> bool:
    """E~_{(beta, 0)} with x_{ell+1} = 0 equals E~_beta."""
    beta = _check_alpha(beta)
    ell = len(beta)
    return tE(beta + (0,)).kill_variables(ell) == tE(beta)


def symmetrize_catalan(alpha: Sequence[int]) -> LaurentPoly:
    """The Catalan side of the symmetrization: H(Delta_ell(eta); mu; w0), killed down to ell variables."""
    alpha = _check_alpha(alpha)
    ell = len(alpha)
    m = sum(alpha)
    if m == 0:
        return LaurentPoly.one(ell)
    eta = conjugate(sorted(alpha, reverse=True))
    if m <= ell:
        psi = parabolic_padded(eta, ell)
        return catalan_recursive(psi, (1,) * m + (0,) * (ell - m), longest(ell))
    psi = parabolic(eta)
    return catalan_recursive(psi, (1,) * m, longest(m)).kill_variables(ell)
