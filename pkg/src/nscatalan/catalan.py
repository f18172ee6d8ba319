"""Nonsymmetric Catalan functions H(Psi; gamma; w).

H(Psi; gamma; w) applies pi_w to the polynomial truncation of
``prod_{(i,j) in Psi} (1 - q x_i/x_j)^{-1} x^gamma``.  Two independent
routes are provided:

* ``catalan_recursive`` peels removable roots one at a time
  (H = H(Psi minus alpha) + q H(Psi; gamma + e_i - e_j)) down to truncated
  monomials;
* ``catalan_rotation`` evaluates the operator word
  ``pi_w x1^{g1} Phi pi_{c(n1)} x1^{g2} Phi ... Phi pi_{c(n_{ell-1})} x1^{g_ell}``,
  valid for tame labeled root ideals and nonnegative gamma.

The module also provides k-Schur Catalan functions and the q-Kostant
formula for Kostka-Foulkes polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Optional, Sequence

from .exactpoly import LaurentPoly, QPoly, phi, pi_w
from .hecke import HeckeElt, c_elt, longest
from .keybasis import KeyExpansion, expand_keys, poly_trunc
from .rootideals import RootIdeal, delta_k, full, is_tame, removable_roots

__all__ = [
    "CatalanResult",
    "catalan_recursive",
    "catalan_rotation",
    "catalan_direct",
    "catalan",
    "schur_expansion",
    "kschur",
    "kostka_foulkes_qkostant",
    "q_kostant_partition",
    "n_stats",
    "hall_littlewood_schur",
]


@dataclass
class CatalanResult:
    poly: LaurentPoly
    key_expansion: KeyExpansion
    schur_expansion: Optional[KeyExpansion] = None

    @classmethod
    def from_poly(cls, poly: LaurentPoly, symmetric: bool) -> "CatalanResult":
        keys = expand_keys(poly)
        return cls(poly, keys, schur_expansion(keys) if symmetric else None)


def _tail_negative(gamma: tuple[int, ...]) -> bool:
    s = 0
    for g in reversed(gamma):
        s += g
        if s < 0:
            return True
    return False


@lru_cache(maxsize=4096)
def _trunc_monomial(gamma: tuple[int, ...]) -> LaurentPoly:
    if min(gamma) >= 0:
        return LaurentPoly.monomial(gamma)
    return poly_trunc(LaurentPoly.monomial(gamma))


def _check_args(psi: RootIdeal, gamma: Sequence[int], w: HeckeElt) -> tuple[int, ...]:
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != psi.ell or w.ell != psi.ell:
        raise ValueError("psi, gamma and w must share ell")
    return gamma


def catalan_recursive(psi: RootIdeal, gamma: Sequence[int], w: HeckeElt) -> LaurentPoly:
    """H(Psi; gamma; w) by the removable-root recursion."""
    gamma = _check_args(psi, gamma, w)
    ell = psi.ell
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly] = {}

    def G(nr: tuple[int, ...], g: tuple[int, ...]) -> LaurentPoly:
        if _tail_negative(g):
            return LaurentPoly.zero(ell)
        key = (nr, g)
        hit = memo.get(key)
        if hit is not None:
            return hit
        ideal = RootIdeal(ell, nr)
        rem = removable_roots(ideal)
        if not rem:
            val = _trunc_monomial(g)
        else:
            i, j = min(rem)
            smaller = list(nr)
            smaller[i - 1] += 1
            g2 = list(g)
            g2[i - 1] += 1
            g2[j - 1] -= 1
            val = G(tuple(smaller), g) + G(nr, tuple(g2)).shift((0,) * ell, q=1)
        memo[key] = val
        return val

    return pi_w(w, G(psi.nr, gamma))


def catalan_rotation(psi: RootIdeal, gamma: Sequence[int], w: HeckeElt) -> LaurentPoly:
    """H(Psi; gamma; w) by the rotation operator formula (tame, gamma >= 0)."""
    gamma = _check_args(psi, gamma, w)
    if not is_tame(psi, w):
        raise ValueError("the rotation formula needs a tame labeled root ideal")
    if min(gamma) < 0:
        raise ValueError("the rotation formula needs gamma >= 0")
    ell = psi.ell
    f = LaurentPoly.one(ell).mul_x1_power(gamma[-1])
    for t in range(ell - 1, 0, -1):
        f = pi_w(c_elt(psi.nr[t - 1], ell), f)
        f = phi(f).mul_x1_power(gamma[t - 1])
    return pi_w(w, f)


def catalan_direct(psi: RootIdeal, gamma: Sequence[int], w: HeckeElt, max_q: Optional[int] = None) -> LaurentPoly:
    """H(Psi; gamma; w) by expanding the product over Psi term by term.

    Every term ``q^d x^(gamma + zeta)`` with ``d <= max_q`` is truncated on its
    own through the key expansion.  A term survives truncation only if every
    tail sum ``sum_{a >= k} (gamma + zeta)_a`` is nonnegative; each root (i, j)
    lowers the tail sums at k = i+1..j, so ``d`` is at most
    ``sum_{k=2}^{ell} sum_{a >= k} gamma_a``.  That is the default ``max_q``,
    giving the exact answer; a smaller ``max_q`` gives the q-adic truncation.
    """
    gamma = _check_args(psi, gamma, w)
    ell = psi.ell
    if max_q is None:
        max_q = max(sum(sum(gamma[k:]) for k in range(1, ell)), 0)
    roots = sorted(psi.roots)
    total = LaurentPoly.zero(ell)

    def rec(k: int, budget: int, exp: list[int], d: int) -> None:
        nonlocal total
        if k == len(roots):
            total = total + poly_trunc(LaurentPoly.monomial(exp, q=d))
            return
        i, j = roots[k]
        for m in range(budget + 1):
            e = list(exp)
            e[i - 1] += m
            e[j - 1] -= m
            rec(k + 1, budget - m, e, d + m)

    rec(0, max_q, list(gamma), 0)
    return pi_w(w, total)


def catalan(psi: RootIdeal, gamma: Sequence[int], w: HeckeElt, route: str = "recursion") -> CatalanResult:
    """Compute H(Psi; gamma; w) with its key (and, for w = w0, Schur) expansion."""
    if route == "recursion":
        poly = catalan_recursive(psi, gamma, w)
    elif route == "rotation":
        poly = catalan_rotation(psi, gamma, w)
    else:
        raise ValueError(f"unknown route {route!r}")
    return CatalanResult.from_poly(poly, w == longest(psi.ell))


def schur_expansion(keys: KeyExpansion) -> KeyExpansion:
    """Rewrite a key expansion of a symmetric polynomial in Schur functions.

    s_lambda is the key of the reversed partition, so a symmetric polynomial's
    keys are all indexed by weakly increasing vectors.
    """
    out = {}
    for (a, alpha), c in keys.terms.items():
        if any(alpha[i] > alpha[i + 1] for i in range(len(alpha) - 1)):
            raise ValueError("polynomial is not symmetric: non-Schur key present")
        out[(a, tuple(reversed(alpha)))] = c
    return KeyExpansion(keys.ell, out)


def kschur(mu: Sequence[int], k: int) -> CatalanResult:
    """The k-Schur Catalan function H(Delta^k(mu); mu; w0)."""
    mu = tuple(mu)
    psi = delta_k(mu, k)
    return catalan(psi, mu, longest(len(mu)))


def hall_littlewood_schur(mu: Sequence[int], ell: Optional[int] = None) -> KeyExpansion:
    """Schur expansion of H(Delta+; mu; w0) (the modified Hall-Littlewood function)."""
    mu = tuple(mu)
    ell = len(mu) if ell is None else ell
    mu = mu + (0,) * (ell - len(mu))
    return catalan(full(ell), mu, longest(ell)).schur_expansion  # type: ignore[return-value]


@lru_cache(maxsize=None)
def q_kostant_partition(gamma: tuple[int, ...]) -> QPoly:
    """Sum over ways to write gamma as N-combinations of e_i - e_j (i<j) of q^{#roots}."""
    n = len(gamma)
    if n == 0:
        return QPoly(1)
    if n == 1:
        return QPoly(1) if gamma[0] == 0 else QPoly()
    g1 = gamma[0]
    if g1 < 0 or sum(gamma) != 0:
        return QPoly()
    total = QPoly()
    rest = gamma[1:]

    def splits(total_left: int, slots: int):
        if slots == 1:
            yield (total_left,)
            return
        for first in range(total_left + 1):
            for tail in splits(total_left - first, slots - 1):
                yield (first,) + tail

    for m in splits(g1, n - 1):
        sub = q_kostant_partition(tuple(r + x for r, x in zip(rest, m)))
        if sub:
            total = total + sub * QPoly.q(g1)
    return total


def _sign(perm: Sequence[int]) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def kostka_foulkes_qkostant(lam: Sequence[int], mu: Sequence[int]) -> QPoly:
    """K_{lambda mu}(q) = sum_w sgn(w) P_q(w(lambda + rho) - (mu + rho))."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must have the same size")
    ell = max(len(lam), len(mu))
    lam = lam + (0,) * (ell - len(lam))
    mu = mu + (0,) * (ell - len(mu))
    rho = tuple(range(ell - 1, -1, -1))
    lr = [a + r for a, r in zip(lam, rho)]
    mr = [a + r for a, r in zip(mu, rho)]
    total = QPoly()
    for perm in permutations(range(ell)):
        v = tuple(lr[perm[j]] - mr[j] for j in range(ell))
        val = q_kostant_partition(v)
        if val:
            total = total + val * _sign(perm)
    return total


def n_stats(mu: Sequence[int], ell: int) -> tuple[int, Fraction]:
    """(n(mu), n_ell(mu)) with n_ell(mu) = (|mu|(ell-1) - 2 n(mu)) / (2 ell)."""
    mu = tuple(mu)
    n = sum(i * m for i, m in enumerate(mu))
    if ell <= 0:
        raise ValueError("ell must be positive")
    return n, Fraction(sum(mu) * (ell - 1) - 2 * n, 2 * ell)
