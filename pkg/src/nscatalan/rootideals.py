"""Root ideals in the positive roots of type A_{ell-1}.

A root ideal is an upper order ideal of ``{(i, j) : 1 <= i < j <= ell}``:
whenever (i, j) is in it, so are (i, j+1) and (i-1, j).  It is stored by its
``nr`` vector: ``nr_i`` counts the columns j in {i, ..., ell} with (i, j)
*not* in the ideal, so row i holds the roots (i, j) for j >= i + nr_i.
The last entry is always 1 and is kept for a uniform constructor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .hecke import HeckeElt, c_elt, right_descents

__all__ = [
    "RootIdeal",
    "LabeledRootIdeal",
    "full",
    "empty",
    "from_roots",
    "nr_to_roots",
    "removable_roots",
    "remove_root",
    "rotate",
    "ns_words",
    "parabolic",
    "parabolic_padded",
    "delta_prime",
    "delta_k",
    "is_tame",
    "all_root_ideals",
    "is_upper_ideal",
    "parse_nr",
    "parse_roots",
]


@dataclass(frozen=True, order=True)
class RootIdeal:
    """An upper order ideal of positive roots, encoded by its nr vector."""

    ell: int
    nr: tuple[int, ...]

    def __post_init__(self) -> None:
        ell, nr = self.ell, self.nr
        if ell < 1 or len(nr) != ell:
            raise ValueError(f"nr must have length ell={ell}")
        for i, n in enumerate(nr, start=1):
            if not 1 <= n <= ell - i + 1:
                raise ValueError(f"nr_{i}={n} outside [1, {ell - i + 1}]")
        for i in range(ell - 1):
            if nr[i] > nr[i + 1] + 1:
                raise ValueError(f"nr_{i + 1} > nr_{i + 2} + 1: not an upper order ideal")

    @property
    def roots(self) -> frozenset[tuple[int, int]]:
        return nr_to_roots(self)

    def __len__(self) -> int:
        return sum(self.ell - i + 1 - n for i, n in enumerate(self.nr, start=1))

    def __contains__(self, root: tuple[int, int]) -> bool:
        i, j = root
        return 1 <= i < j <= self.ell and j >= i + self.nr[i - 1]

    def row(self, i: int) -> list[int]:
        return list(range(i + self.nr[i - 1], self.ell + 1))

    def restrict(self, m: int) -> frozenset[tuple[int, int]]:
        """Roots lying in the first m coordinates."""
        return frozenset((i, j) for (i, j) in self.roots if j <= m)

    def __str__(self) -> str:
        return ",".join(map(str, self.nr))


@dataclass(frozen=True)
class LabeledRootIdeal:
    psi: RootIdeal
    gamma: tuple[int, ...]
    w: HeckeElt

    def __post_init__(self) -> None:
        if len(self.gamma) != self.psi.ell or self.w.ell != self.psi.ell:
            raise ValueError("gamma, w and psi must share ell")

    @property
    def tame(self) -> bool:
        return is_tame(self.psi, self.w)


def full(ell: int) -> RootIdeal:
    return RootIdeal(ell, (1,) * ell)


def empty(ell: int) -> RootIdeal:
    return RootIdeal(ell, tuple(ell - i + 1 for i in range(1, ell + 1)))


def is_upper_ideal(roots: Iterable[tuple[int, int]], ell: int) -> bool:
    s = set(roots)
    for i, j in s:
        if not 1 <= i < j <= ell:
            return False
        if j < ell and (i, j + 1) not in s:
            return False
        if i > 1 and (i - 1, j) not in s:
            return False
    return True


def from_roots(roots: Iterable[tuple[int, int]], ell: int) -> RootIdeal:
    s = set(roots)
    if not is_upper_ideal(s, ell):
        raise ValueError("root set is not an upper order ideal")
    nr = []
    for i in range(1, ell + 1):
        cols = [j for (a, j) in s if a == i]
        nr.append(min(cols) - i if cols else ell - i + 1)
    return RootIdeal(ell, tuple(nr))


def nr_to_roots(psi: RootIdeal) -> frozenset[tuple[int, int]]:
    return frozenset((i, j) for i in range(1, psi.ell + 1) for j in range(i + psi.nr[i - 1], psi.ell + 1))


def removable_roots(psi: RootIdeal) -> set[tuple[int, int]]:
    """Roots whose deletion leaves a root ideal: (i, i+nr_i) with nr_i <= nr_{i+1}."""
    out = set()
    for i in range(1, psi.ell):
        n = psi.nr[i - 1]
        if n <= psi.ell - i and n <= psi.nr[i]:
            out.add((i, i + n))
    return out


def remove_root(psi: RootIdeal, root: tuple[int, int]) -> RootIdeal:
    i, j = root
    if root not in removable_roots(psi):
        raise ValueError(f"{root} is not removable")
    nr = list(psi.nr)
    nr[i - 1] += 1
    return RootIdeal(psi.ell, tuple(nr))


def rotate(psi: RootIdeal) -> RootIdeal:
    """Drop row 1, shift up-left by one and add the full last column."""
    ell = psi.ell
    if ell == 1:
        return psi
    nr = [min(psi.nr[i], ell - i) for i in range(1, ell - 1)]
    nr += [1, 1]
    return RootIdeal(ell, tuple(nr[:ell]))


def ns_words(psi: RootIdeal) -> list[HeckeElt]:
    """(c(nr_1), ..., c(nr_{ell-1}))."""
    return [c_elt(psi.nr[i], psi.ell) for i in range(psi.ell - 1)]


def _check_composition(eta: Sequence[int]) -> None:
    if not eta or any(int(e) <= 0 for e in eta):
        raise ValueError(f"{tuple(eta)} is not a composition with positive parts")


def parabolic(eta: Sequence[int]) -> RootIdeal:
    """Delta(eta): all roots strictly above the block diagonal with block sizes eta."""
    _check_composition(eta)
    ell = sum(eta)
    nr = []
    end = 0
    for size in eta:
        end += size
        start = end - size + 1
        nr += [end - i + 1 for i in range(start, end + 1)]
    return RootIdeal(ell, tuple(nr))


def parabolic_padded(eta: Sequence[int], ell: int) -> RootIdeal:
    """Delta_ell(eta): Delta(eta) together with all roots (i, j), j > |eta|."""
    m = sum(eta)
    if ell < m:
        raise ValueError("ell must be at least |eta|")
    base = parabolic(eta)
    return RootIdeal(ell, base.nr + (1,) * (ell - m))


def _check_partition(eta: Sequence[int]) -> None:
    _check_composition(eta)
    if any(eta[i] < eta[i + 1] for i in range(len(eta) - 1)):
        raise ValueError(f"{tuple(eta)} is not a partition")


def delta_prime(eta: Sequence[int], ell: int | None = None) -> RootIdeal:
    """Delta'_ell(eta): Delta(eta) with the trapezoids between consecutive blocks removed.

    nr = ((eta_1)^{eta_2}, eta_1, eta_1 - 1, ..., eta_2 + 1, (eta_2)^{eta_3}, ...,
    eta_k, eta_k - 1, ..., 2), then 1 for row |eta| and every padded row.
    """
    eta = tuple(int(e) for e in eta)
    _check_partition(eta)
    m = sum(eta)
    ell = m if ell is None else ell
    if ell < m:
        raise ValueError("ell must be at least |eta|")
    nr: list[int] = []
    for t in range(len(eta) - 1):
        nr += [eta[t]] * eta[t + 1]
        nr += list(range(eta[t], eta[t + 1], -1))
    nr += list(range(eta[-1], 1, -1))
    nr.append(1)
    nr += [1] * (ell - m)
    return RootIdeal(ell, tuple(nr))


def delta_k(mu: Sequence[int], k: int) -> RootIdeal:
    """Delta^k(mu): nr_i = min(k - mu_i + 1, ell - i + 1)."""
    mu = tuple(mu)
    if not mu:
        raise ValueError("mu must be nonempty")
    if k < max(mu):
        raise ValueError("k must be at least mu_1")
    ell = len(mu)
    return RootIdeal(ell, tuple(min(k - mu[i - 1] + 1, ell - i + 1) for i in range(1, ell + 1)))


def is_tame(psi: RootIdeal, w: HeckeElt) -> bool:
    """Right descents of w contain nr_1 + 1, ..., ell - 1."""
    need = set(range(psi.nr[0] + 1, psi.ell))
    return need <= right_descents(w)


@lru_cache(maxsize=None)
def _all_nr(ell: int) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []

    def rec(i: int, suffix: tuple[int, ...]) -> None:
        # build from the bottom row upward
        if i == 0:
            out.append(suffix)
            return
        nxt = suffix[0]
        for n in range(1, min(ell - i + 1, nxt + 1) + 1):
            rec(i - 1, (n,) + suffix)

    rec(ell - 1, (1,))
    return tuple(sorted(out))


def all_root_ideals(ell: int) -> list[RootIdeal]:
    return [RootIdeal(ell, nr) for nr in _all_nr(ell)]


def parse_nr(text: str, ell: int | None = None) -> RootIdeal:
    """Parse ``2,2,3,3,2,1``; missing trailing forced entries are completed.

    Without ``ell`` the vector is completed by appending 1 until the last
    entry's bound allows it (a trailing 1 is always forced).
    """
    vals = [int(t) for t in text.split(",") if t.strip()]
    if not vals:
        raise ValueError("empty nr vector")
    if ell is None:
        ell = len(vals)
        if vals[-1] != 1:
            ell += 1
    if len(vals) > ell:
        raise ValueError("nr vector longer than ell")
    vals += [1] * (ell - len(vals))
    return RootIdeal(ell, tuple(vals))


def parse_roots(text: str, ell: int) -> RootIdeal:
    """Parse ``"1:3-7;2:4-7"`` (row: first-last column)."""
    roots = set()
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        row, cols = part.split(":")
        i = int(row)
        if "-" in cols:
            a, b = (int(x) for x in cols.split("-"))
        else:
            a = b = int(cols)
        roots |= {(i, j) for j in range(a, b + 1)}
    return from_roots(roots, ell)
