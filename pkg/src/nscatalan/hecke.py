"""Permutations of [ell] and the 0-Hecke monoid.

A 0-Hecke element is identified with a permutation in one-line notation.
The monoid product (the Demazure product) is computed generator by generator:
multiplying ``w`` on the right by the generator ``sigma_i`` swaps positions
``i`` and ``i+1`` of the one-line word when that increases the inversion
count and leaves ``w`` alone otherwise.

Generators are 1-indexed throughout, matching the usual notation
``sigma_1, ..., sigma_{ell-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "HeckeElt",
    "identity",
    "generator",
    "from_word",
    "longest",
    "c_elt",
    "reversal",
    "demazure_product",
    "reduced_word",
    "right_descents",
    "left_descents",
    "sort_perms",
    "hecke_action",
    "act_generator",
    "bruhat_le",
    "all_elements",
    "parse_hecke",
    "parse_hecke_tuple",
]


@dataclass(frozen=True, order=True)
class HeckeElt:
    """A 0-Hecke element stored as its permutation in one-line notation."""

    ell: int
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError("ell must be positive")
        if len(self.perm) != self.ell or sorted(self.perm) != list(range(1, self.ell + 1)):
            raise ValueError(f"{self.perm!r} is not a permutation of 1..{self.ell}")

    @property
    def length(self) -> int:
        """Inversion count of the underlying permutation."""
        p = self.perm
        return sum(1 for a in range(self.ell) for b in range(a + 1, self.ell) if p[a] > p[b])

    def __mul__(self, other: "HeckeElt") -> "HeckeElt":
        return demazure_product(self, other)

    def word(self) -> list[int]:
        return reduced_word(self)

    def inverse(self) -> "HeckeElt":
        inv = [0] * self.ell
        for pos, val in enumerate(self.perm, start=1):
            inv[val - 1] = pos
        return HeckeElt(self.ell, tuple(inv))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.ell + 1))

    def __str__(self) -> str:
        w = reduced_word(self)
        return ",".join(map(str, w)) if w else "id"


def identity(ell: int) -> HeckeElt:
    return HeckeElt(ell, tuple(range(1, ell + 1)))


def _check_index(i: int, ell: int) -> None:
    if not 1 <= i <= ell - 1:
        raise ValueError(f"generator index {i} out of range for ell={ell}")


def generator(i: int, ell: int) -> HeckeElt:
    """The generator sigma_i of the 0-Hecke monoid of S_ell."""
    _check_index(i, ell)
    p = list(range(1, ell + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return HeckeElt(ell, tuple(p))


def _times_generator(perm: tuple[int, ...], i: int) -> tuple[int, ...]:
    if perm[i - 1] < perm[i]:
        p = list(perm)
        p[i - 1], p[i] = p[i], p[i - 1]
        return tuple(p)
    return perm


def from_word(word: Iterable[int], ell: int) -> HeckeElt:
    """Demazure-evaluate an arbitrary (not necessarily reduced) word."""
    perm = tuple(range(1, ell + 1))
    for i in word:
        _check_index(i, ell)
        perm = _times_generator(perm, i)
    return HeckeElt(ell, perm)


def longest(ell: int) -> HeckeElt:
    """The longest element w0 (reverses [ell])."""
    return HeckeElt(ell, tuple(range(ell, 0, -1)))


def c_elt(d: int, ell: int) -> HeckeElt:
    """c(d) = sigma_{ell-1} sigma_{ell-2} ... sigma_d; the identity when d = ell."""
    if not 1 <= d <= ell:
        raise ValueError(f"c({d}) undefined for ell={ell}")
    return from_word(range(ell - 1, d - 1, -1), ell)


def reversal(a: int, b: int, ell: int) -> HeckeElt:
    """The element reversing the interval [a, b] (longest element of <sigma_a..sigma_{b-1}>)."""
    if not 1 <= a <= ell or not a - 1 <= b <= ell:
        raise ValueError(f"bad interval [{a},{b}] for ell={ell}")
    p = list(range(1, ell + 1))
    if b > a:
        p[a - 1 : b] = reversed(p[a - 1 : b])
    return HeckeElt(ell, tuple(p))


def demazure_product(w: HeckeElt, v: HeckeElt) -> HeckeElt:
    """Monoid product w * v in the 0-Hecke monoid."""
    if w.ell != v.ell:
        raise ValueError(f"mismatched ell: {w.ell} vs {v.ell}")
    perm = w.perm
    for i in reduced_word(v):
        perm = _times_generator(perm, i)
    return HeckeElt(w.ell, perm)


@lru_cache(maxsize=None)
def _reduced_word(perm: tuple[int, ...]) -> tuple[int, ...]:
    # Greedy: the smallest left descent is the smallest possible first letter,
    # and stripping it leaves a shorter element whose lex-min word follows.
    word = []
    p = list(perm)
    pos = {v: k for k, v in enumerate(p)}
    n = len(p)
    while True:
        for i in range(1, n):
            if pos[i] > pos[i + 1]:
                break
        else:
            return tuple(word)
        word.append(i)
        a, b = pos[i], pos[i + 1]
        p[a], p[b] = i + 1, i
        pos[i], pos[i + 1] = b, a


def reduced_word(w: HeckeElt) -> list[int]:
    """The lexicographically smallest reduced word of ``w``."""
    return list(_reduced_word(w.perm))


def right_descents(w: HeckeElt) -> set[int]:
    return {i for i in range(1, w.ell) if w.perm[i - 1] > w.perm[i]}


def left_descents(w: HeckeElt) -> set[int]:
    return right_descents(w.inverse())


def act_generator(i: int, alpha: Sequence[int]) -> tuple[int, ...]:
    """sigma_i acting on an integer vector: swap entries i, i+1 when alpha_i > alpha_{i+1}."""
    a = list(alpha)
    if a[i - 1] > a[i]:
        a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)


def hecke_action(w: HeckeElt, alpha: Sequence[int]) -> tuple[int, ...]:
    """Act by w on alpha: the rightmost letter of the word acts first."""
    if len(alpha) != w.ell:
        raise ValueError("vector length must equal ell")
    out = tuple(alpha)
    for i in reversed(reduced_word(w)):
        out = act_generator(i, out)
    return out


def _stabilizer_longest(alpha_plus: Sequence[int]) -> HeckeElt:
    ell = len(alpha_plus)
    p = list(range(1, ell + 1))
    start = 0
    for k in range(1, ell + 1):
        if k == ell or alpha_plus[k] != alpha_plus[start]:
            p[start:k] = reversed(p[start:k])
            start = k
    return HeckeElt(ell, tuple(p))


def sort_perms(alpha: Sequence[int]) -> tuple[tuple[int, ...], HeckeElt, HeckeElt]:
    """Return (alpha+, p(alpha), p~(alpha)).

    alpha+ is the weakly decreasing rearrangement, p(alpha) the shortest
    element sending alpha+ to alpha, and p~(alpha) the longest such element.
    """
    alpha = tuple(alpha)
    ell = len(alpha)
    if ell == 0:
        raise ValueError("alpha must be nonempty")
    alpha_plus = tuple(sorted(alpha, reverse=True))
    # Entry j of alpha is the (stable) k-th entry of alpha+; p^{-1}(j) = k.
    order = sorted(range(ell), key=lambda j: (-alpha[j], j))
    p = [0] * ell
    for k, j in enumerate(order, start=1):
        p[k - 1] = j + 1
    short = HeckeElt(ell, tuple(p))
    long_ = demazure_product(short, _stabilizer_longest(alpha_plus))
    return alpha_plus, short, long_


def bruhat_le(u: HeckeElt, v: HeckeElt) -> bool:
    """Bruhat order on S_ell via the tableau criterion."""
    if u.ell != v.ell:
        raise ValueError("mismatched ell")
    for k in range(1, u.ell):
        a = sorted(u.perm[:k])
        b = sorted(v.perm[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def all_elements(ell: int) -> list[HeckeElt]:
    from itertools import permutations

    return [HeckeElt(ell, p) for p in permutations(range(1, ell + 1))]


def parse_hecke(text: str, ell: int) -> HeckeElt:
    """Parse ``id``, ``w0`` or a comma-separated generator word."""
    s = text.strip()
    if s in ("id", "", "e"):
        return identity(ell)
    if s == "w0":
        return longest(ell)
    try:
        word = [int(t) for t in s.split(",") if t.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse Hecke element {text!r}") from exc
    return from_word(word, ell)


def parse_hecke_tuple(text: str, ell: int) -> list[HeckeElt]:
    """Parse a ``;``-separated tuple of Hecke elements."""
    return [parse_hecke(part, ell) for part in text.split(";")]
