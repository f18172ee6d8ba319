"""Key polynomials, Demazure atoms, key expansions and polynomial truncation.

The key polynomial of an integer vector alpha is
``kappa_alpha = pi_{p(alpha)} x^{alpha+}`` and the Demazure atom is the same
with hatted operators.  Any Laurent polynomial has a unique expansion in
keys; ``expand_keys`` computes it by unitriangular extraction and
``key_coeff_ct_oracle`` recomputes single coefficients through the
constant-term pairing under which keys and atoms are dual.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .exactpoly import LaurentPoly, QPoly, pi_hat_w, pi_w
from .hecke import bruhat_le, sort_perms

__all__ = [
    "KeyExpansion",
    "key",
    "atom",
    "expand_keys",
    "poly_trunc",
    "key_coeff_ct_oracle",
    "dominates",
    "vector_bruhat_le",
    "orbit_length",
    "schur_poly",
    "delta_product",
]


@dataclass
class KeyExpansion:
    """A finite sum of ``coeff * q^a * kappa_alpha`` (or Schur functions).

    ``terms`` maps ``(a, alpha)`` to a nonzero integer.
    """

    ell: int
    terms: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {(int(a), tuple(al)): int(c) for (a, al), c in self.terms.items() if c}

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KeyExpansion):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def coeff(self, alpha: Sequence[int]) -> QPoly:
        alpha = tuple(alpha)
        return QPoly({a: c for (a, al), c in self.terms.items() if al == alpha})

    def by_alpha(self) -> dict[tuple[int, ...], QPoly]:
        out: dict[tuple[int, ...], dict[int, int]] = {}
        for (a, al), c in self.terms.items():
            out.setdefault(al, {})[a] = c
        return {al: QPoly(cs) for al, cs in out.items()}

    def items(self) -> Iterator[tuple[tuple[int, tuple[int, ...]], int]]:
        return iter(sorted(self.terms.items()))

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values()) and all(a >= 0 for a, _ in self.terms)

    def reconstruct(self) -> LaurentPoly:
        """The polynomial sum of coeff * q^a * kappa_alpha."""
        out: dict = {}
        for (a, alpha), c in self.terms.items():
            for k, v in key(alpha).raw().items():
                nk = (k[0] + a,) + k[1:]
                out[nk] = out.get(nk, 0) + c * v
        return LaurentPoly(self.ell, {k: v for k, v in out.items() if v})

    def to_json_obj(self) -> list[dict]:
        return [
            {"q": a, "alpha": list(al), "coeff": c}
            for (a, al), c in sorted(self.terms.items(), key=lambda t: (t[0][0], t[0][1]))
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_text(self, symbol: str = "k") -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, al), c in sorted(self.terms.items(), key=lambda t: (t[0][0], t[0][1])):
            idx = ",".join(map(str, al)) if any(abs(x) > 9 or x < 0 for x in al) else "".join(map(str, al))
            body = f"{symbol}[{idx}]"
            if a == 1:
                body = "q*" + body
            elif a:
                body = f"q^{a}*" + body
            if abs(c) != 1:
                body = f"{abs(c)}*" + body
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_text()


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order on weakly decreasing vectors of equal sum: lam >= mu."""
    if sum(lam) != sum(mu) or len(lam) != len(mu):
        return False
    a = b = 0
    for x, y in zip(lam, mu):
        a += x
        b += y
        if a < b:
            return False
    return True


def orbit_length(alpha: Sequence[int]) -> int:
    """Length of p(alpha): the number of pairs i < j with alpha_i < alpha_j."""
    n = len(alpha)
    return sum(1 for i in range(n) for j in range(i + 1, n) if alpha[i] < alpha[j])


def vector_bruhat_le(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Bruhat order on Z^ell: same orbit and p(alpha) <= p(beta)."""
    if sorted(alpha) != sorted(beta):
        return False
    return bruhat_le(sort_perms(alpha)[1], sort_perms(beta)[1])


@lru_cache(maxsize=None)
def _key_normalized(alpha: tuple[int, ...]) -> LaurentPoly:
    alpha_plus, p, _ = sort_perms(alpha)
    return pi_w(p, LaurentPoly.monomial(alpha_plus))


def key(alpha: Sequence[int]) -> LaurentPoly:
    """The key polynomial (Demazure character) kappa_alpha."""
    alpha = tuple(int(a) for a in alpha)
    d = min(alpha)
    base = _key_normalized(tuple(a - d for a in alpha))
    return base if d == 0 else base.shift((d,) * len(alpha))


@lru_cache(maxsize=None)
def _atom(alpha: tuple[int, ...]) -> LaurentPoly:
    alpha_plus, p, _ = sort_perms(alpha)
    return pi_hat_w(p, LaurentPoly.monomial(alpha_plus))


def atom(alpha: Sequence[int]) -> LaurentPoly:
    """The Demazure atom kappa-hat_alpha."""
    return _atom(tuple(int(a) for a in alpha))


def _priority(exp: tuple[int, ...]) -> tuple:
    # Larger is extracted first: lexicographically largest sorted rearrangement
    # (refines dominance), then the longest p(beta) (refines Bruhat order).
    srt = sorted(exp, reverse=True)
    return tuple(-x for x in srt) + (-orbit_length(exp),) + tuple(-x for x in exp)


def expand_keys(f: LaurentPoly) -> KeyExpansion:
    """Expand f in the key basis by greedy unitriangular extraction."""
    ell = f.ell
    if ell == 0:
        return KeyExpansion(0, {(k[0], ()): c for k, c in f.raw().items()})
    rem = dict(f.raw())
    heap = [(_priority(k[1:]), k[0], k) for k in rem]
    heapq.heapify(heap)
    result: dict[tuple[int, tuple[int, ...]], int] = {}
    steps = 0
    while heap:
        _, _, k = heapq.heappop(heap)
        c = rem.get(k, 0)
        if not c:
            continue
        steps += 1
        a, beta = k[0], k[1:]
        result[(a, beta)] = c
        for kk, v in key(beta).raw().items():
            nk = (kk[0] + a,) + kk[1:]
            old = rem.get(nk, 0)
            nv = old - c * v
            if nv:
                rem[nk] = nv
                if not old:
                    heapq.heappush(heap, (_priority(nk[1:]), nk[0], nk))
            else:
                rem.pop(nk, None)
    if rem:  # pragma: no cover - guarded by unitriangularity
        raise RuntimeError("key extraction did not terminate cleanly")
    return KeyExpansion(ell, result)


def poly_trunc(f: LaurentPoly) -> LaurentPoly:
    """Polynomial truncation: drop every kappa_alpha with a negative entry."""
    exp = expand_keys(f)
    kept = {t: c for t, c in exp.terms.items() if min(t[1], default=0) >= 0}
    return KeyExpansion(f.ell, kept).reconstruct()


@lru_cache(maxsize=None)
def delta_product(ell: int) -> LaurentPoly:
    """prod_{i<j} (1 - x_i/x_j)."""
    out = LaurentPoly.one(ell)
    for i in range(1, ell + 1):
        for j in range(i + 1, ell + 1):
            e = [0] * ell
            e[i - 1] = 1
            e[j - 1] = -1
            out = out * (LaurentPoly.one(ell) - LaurentPoly.monomial(e))
    return out


def key_coeff_ct_oracle(f: LaurentPoly, alpha: Sequence[int]) -> QPoly:
    """Coefficient of kappa_alpha in f through the constant-term pairing.

    Keys and atoms are dual under the pairing
    ``(f, g) = CT(f(x) g(1/x_ell, ..., 1/x_1) prod_{i<j}(1 - x_i/x_j))``, so the
    coefficient is ``sum_beta c_beta [x^{rev beta}](f prod(1 - x_i/x_j))`` where
    ``c_beta`` are the monomial coefficients of the atom of ``rev(alpha)``.
    """
    alpha = tuple(alpha)
    ell = f.ell
    if len(alpha) != ell:
        raise ValueError("alpha must have length ell")
    g = f * delta_product(ell)
    gd = g.terms
    at = atom(tuple(reversed(alpha)))
    out = QPoly()
    for beta, c in at.terms.items():
        # atoms have integer (q-free) coefficients
        cval = c[0]
        target = tuple(reversed(beta))
        if target in gd:
            out = out + gd[target] * cval
    return out


def schur_poly(lam: Sequence[int], ell: int) -> LaurentPoly:
    """Schur polynomial s_lambda(x_1..x_ell) as the key of the reversed partition."""
    lam = tuple(lam) + (0,) * (ell - len(lam))
    if len(lam) > ell:
        if any(lam[ell:]):
            return LaurentPoly.zero(ell)
        lam = lam[:ell]
    return key(tuple(reversed(lam)))
