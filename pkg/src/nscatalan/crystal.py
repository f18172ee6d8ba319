"""Single-row Kirillov-Reshetikhin crystals, their tensor products and DARK crystals.

An element of ``B^mu = B^{1,mu_p} (x) ... (x) B^{1,mu_1}`` is a ``Biword``:
the list of its weakly increasing blocks in display order
``b^p, ..., b^1`` (block ``b^i`` has length ``mu_i``).  The top word of the
biword is implicit.  Text form: blocks joined by ``|``, e.g. ``2234|13334|11222``.

Crystal operators return ``None`` for the crystal's zero element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .exactpoly import LaurentPoly
from .hecke import HeckeElt, reduced_word

__all__ = [
    "Biword",
    "DarkCrystal",
    "parse_biword",
    "f_row",
    "e_row",
    "f_tensor",
    "e_tensor",
    "eps_phi",
    "eps_phi_brackets",
    "e_max",
    "f_string",
    "tau_twist",
    "tau_inv_twist",
    "F_op",
    "F_w",
    "dark",
    "full_tensor",
    "char_charge",
    "char_plain",
    "char_operator",
    "gl_components",
    "reflection",
    "to_dot",
    "to_json_obj",
]

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Biword:
    """Element of a tensor product of single-row KR crystals.

    ``blocks`` are in display order ``(b^p, ..., b^1)``.
    """

    ell: int
    blocks: tuple[Word, ...]

    def __post_init__(self) -> None:
        for bl in self.blocks:
            if any(not 1 <= x <= self.ell for x in bl):
                raise ValueError(f"letters of {bl} must lie in 1..{self.ell}")
            if any(bl[k] > bl[k + 1] for k in range(len(bl) - 1)):
                raise ValueError(f"block {bl} is not weakly increasing")

    @property
    def mu(self) -> tuple[int, ...]:
        """(mu_1, ..., mu_p): block lengths from b^1 to b^p."""
        return tuple(len(b) for b in reversed(self.blocks))

    def block(self, i: int) -> Word:
        """The block b^i (1-indexed from the right)."""
        return self.blocks[len(self.blocks) - i]

    def bottom_word(self) -> Word:
        out: list[int] = []
        for bl in self.blocks:
            out.extend(bl)
        return tuple(out)

    def content(self) -> tuple[int, ...]:
        out = [0] * self.ell
        for x in self.bottom_word():
            out[x - 1] += 1
        return tuple(out)

    def to_text(self) -> str:
        def fmt(bl: Word) -> str:
            return ",".join(map(str, bl)) if self.ell > 9 else "".join(map(str, bl))

        return "|".join(fmt(b) for b in self.blocks)

    def __str__(self) -> str:
        return self.to_text()

    def sort_key(self) -> tuple:
        return (self.bottom_word(), self.mu)


def parse_biword(text: str, ell: int) -> Biword:
    blocks = []
    for part in text.strip().split("|"):
        part = part.strip()
        if "," in part:
            blocks.append(tuple(int(x) for x in part.split(",")))
        else:
            blocks.append(tuple(int(ch) for ch in part))
    return Biword(ell, tuple(blocks))


# -- single rows -------------------------------------------------------------


def f_row(i: int, v: Sequence[int], ell: int) -> Optional[Word]:
    """f_i on a single row: change the rightmost i to i+1; f_0 moves an ell to a front 1."""
    v = tuple(v)
    if i == 0:
        if not v or v[-1] != ell:
            return None
        return (1,) + v[:-1]
    if i not in v:
        return None
    k = len(v) - 1 - v[::-1].index(i)
    return v[:k] + (i + 1,) + v[k + 1 :]


def e_row(i: int, v: Sequence[int], ell: int) -> Optional[Word]:
    """e_i on a single row: change the leftmost i+1 to i; e_0 moves a front 1 to an end ell."""
    v = tuple(v)
    if i == 0:
        if not v or v[0] != 1:
            return None
        return v[1:] + (ell,)
    if i + 1 not in v:
        return None
    k = v.index(i + 1)
    return v[:k] + (i,) + v[k + 1 :]


def _row_eps_phi(i: int, v: Word, ell: int) -> tuple[int, int]:
    if i == 0:
        return v.count(1), v.count(ell)
    return v.count(i + 1), v.count(i)


def _unmatched(i: int, b: Biword) -> tuple[list[int], list[int]]:
    """Factor indices of unmatched ')' (f-able) and '(' (e-able) signs.

    Each factor contributes ')' * phi_i followed by '(' * eps_i; '(' ... ')'
    pairs cancel.  Returns (unmatched ')' factors, unmatched '(' factors) in
    left-to-right order.
    """
    opens: list[int] = []
    closes: list[int] = []
    for pos, bl in enumerate(b.blocks):
        eps, phi = _row_eps_phi(i, bl, b.ell)
        for _ in range(phi):
            if opens:
                opens.pop()
            else:
                closes.append(pos)
        opens.extend([pos] * eps)
    return closes, opens


def _check_index(i: int, ell: int) -> None:
    if not 0 <= i <= ell - 1:
        raise ValueError(f"crystal index {i} out of range for ell={ell}")


def f_tensor(i: int, b: Biword) -> Optional[Biword]:
    _check_index(i, b.ell)
    if b.ell == 1:
        return None
    closes, _ = _unmatched(i, b)
    if not closes:
        return None
    pos = closes[-1]
    new = f_row(i, b.blocks[pos], b.ell)
    assert new is not None
    return Biword(b.ell, b.blocks[:pos] + (new,) + b.blocks[pos + 1 :])


def e_tensor(i: int, b: Biword) -> Optional[Biword]:
    _check_index(i, b.ell)
    if b.ell == 1:
        return None
    _, opens = _unmatched(i, b)
    if not opens:
        return None
    pos = opens[0]
    new = e_row(i, b.blocks[pos], b.ell)
    assert new is not None
    return Biword(b.ell, b.blocks[:pos] + (new,) + b.blocks[pos + 1 :])


def eps_phi(i: int, b: Biword) -> tuple[int, int]:
    """(epsilon_i, phi_i) by repeated application of e_i and f_i."""
    eps = 0
    c: Optional[Biword] = b
    while (c := e_tensor(i, c)) is not None:  # type: ignore[arg-type]
        eps += 1
    phi = 0
    c = b
    while (c := f_tensor(i, c)) is not None:  # type: ignore[arg-type]
        phi += 1
    return eps, phi


def eps_phi_brackets(i: int, b: Biword) -> tuple[int, int]:
    """(epsilon_i, phi_i) as unmatched bracket counts."""
    closes, opens = _unmatched(i, b)
    return len(opens), len(closes)


def f_string(i: int, b: Biword, m: int) -> Optional[Biword]:
    c: Optional[Biword] = b
    for _ in range(m):
        if c is None:
            return None
        c = f_tensor(i, c)
    return c


def _e_string(i: int, b: Biword, m: int) -> Optional[Biword]:
    c: Optional[Biword] = b
    for _ in range(m):
        if c is None:
            return None
        c = e_tensor(i, c)
    return c


def _e_max_i(i: int, b: Biword) -> Biword:
    while (c := e_tensor(i, b)) is not None:
        b = c
    return b


def e_max(w: HeckeElt, b: Biword) -> Biword:
    """e_w^max = e_{i_1}^max ... e_{i_m}^max (the last letter acts first)."""
    if w.ell != b.ell:
        raise ValueError("Hecke element and biword have different ell")
    for i in reversed(reduced_word(w)):
        b = _e_max_i(i, b)
    return b


def e_max_word(word: Sequence[int], b: Biword) -> Biword:
    for i in reversed(word):
        b = _e_max_i(i, b)
    return b


# -- twists ------------------------------------------------------------------


def tau_twist(b: Biword) -> Biword:
    """Add 1 (mod ell) to every letter and re-sort each block."""
    ell = b.ell
    return Biword(ell, tuple(tuple(sorted(x % ell + 1 for x in bl)) for bl in b.blocks))


def tau_inv_twist(b: Biword) -> Biword:
    """Subtract 1 (mod ell) from every letter and re-sort each block."""
    ell = b.ell
    return Biword(ell, tuple(tuple(sorted((x - 2) % ell + 1 for x in bl)) for bl in b.blocks))


# -- DARK crystals -------------------------------------------------------------


def F_op(j: int, S: Iterable[Biword]) -> set[Biword]:
    """F_j S = {f_j^m b : b in S, m >= 0} minus the zero element."""
    out: set[Biword] = set()
    for b in S:
        c: Optional[Biword] = b
        while c is not None and c not in out:
            out.add(c)
            c = f_tensor(j, c)
    return out


def F_word(word: Sequence[int], S: Iterable[Biword]) -> set[Biword]:
    S = set(S)
    for j in reversed(word):
        S = F_op(j, S)
    return S


def F_w(w: HeckeElt, S: Iterable[Biword]) -> set[Biword]:
    return F_word(reduced_word(w), S)


@dataclass(frozen=True)
class DarkCrystal:
    mu: tuple[int, ...]
    w_list: tuple[HeckeElt, ...]
    ell: int
    elements: frozenset[Biword]

    def sorted_elements(self) -> list[Biword]:
        return sorted(self.elements, key=Biword.sort_key)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, b: Biword) -> bool:
        return b in self.elements


def dark(mu: Sequence[int], w_list: Sequence[HeckeElt], ell: int | None = None) -> DarkCrystal:
    """B^{mu; w} = F_{w_1}(tau F_{w_2}( ... tau F_{w_p}{b_{mu_p}} (x) b_{mu_{p-1}} ...) (x) b_{mu_1})."""
    mu = tuple(int(m) for m in mu)
    w_list = tuple(w_list)
    if len(mu) != len(w_list):
        raise ValueError("need one Hecke element per part of mu")
    if ell is None:
        if not w_list:
            raise ValueError("ell is required when mu is empty")
        ell = w_list[0].ell
    if any(w.ell != ell for w in w_list):
        raise ValueError("all Hecke elements must share ell")
    if not mu:
        return DarkCrystal(mu, w_list, ell, frozenset({Biword(ell, ())}))
    p = len(mu)
    S = F_w(w_list[p - 1], {Biword(ell, ((1,) * mu[p - 1],))})
    for k in range(p - 1, 0, -1):
        seed = (1,) * mu[k - 1]
        S = {Biword(ell, tau_twist(b).blocks + (seed,)) for b in S}
        S = F_w(w_list[k - 1], S)
    return DarkCrystal(mu, w_list, ell, frozenset(S))


def full_tensor(mu: Sequence[int], ell: int) -> set[Biword]:
    """All of B^mu (every block any weakly increasing word)."""
    from itertools import combinations_with_replacement

    blocks_per = [list(combinations_with_replacement(range(1, ell + 1), m)) for m in reversed(tuple(mu))]
    out: set[Biword] = {Biword(ell, ())}
    for choices in blocks_per:
        out = {Biword(ell, b.blocks + (c,)) for b in out for c in choices}
    return out


def char_charge(D: DarkCrystal | Iterable[Biword], ell: int | None = None) -> LaurentPoly:
    """Sum over b of q^{charge(inv b)} x^{content b}."""
    from .tabloids import charge, inv_biword

    elements = D.elements if isinstance(D, DarkCrystal) else list(D)
    if ell is None:
        ell = D.ell if isinstance(D, DarkCrystal) else next(iter(elements)).ell
    data: dict = {}
    for b in elements:
        key = (charge(inv_biword(b)),) + b.content()
        data[key] = data.get(key, 0) + 1
    return LaurentPoly(ell, data)


def char_plain(elements: Iterable[Biword], ell: int) -> LaurentPoly:
    """Sum of x^{content b} (no q)."""
    data: dict = {}
    for b in elements:
        key = (0,) + b.content()
        data[key] = data.get(key, 0) + 1
    return LaurentPoly(ell, data)


def char_operator(mu: Sequence[int], w_list: Sequence[HeckeElt], ell: int | None = None) -> LaurentPoly:
    """pi_{w_1} x1^{mu_1} Phi pi_{w_2} x1^{mu_2} ... Phi pi_{w_p} x1^{mu_p} applied to 1.

    This is the operator-side description of the charge character of
    ``dark(mu, w_list)``.
    """
    from .exactpoly import phi, pi_w

    mu = tuple(int(m) for m in mu)
    w_list = tuple(w_list)
    if len(mu) != len(w_list):
        raise ValueError("need one Hecke element per part of mu")
    if ell is None:
        if not w_list:
            raise ValueError("ell is required when mu is empty")
        ell = w_list[0].ell
    f = LaurentPoly.one(ell)
    for k in range(len(mu) - 1, -1, -1):
        f = pi_w(w_list[k], f.mul_x1_power(mu[k]))
        if k:
            f = phi(f)
    return f


def gl_components(D: DarkCrystal | Iterable[Biword]) -> dict:
    """Group elements by their recording tableau Q(b) = P(inv b)."""
    from .tabloids import insertion_P, inv_biword

    elements = D.elements if isinstance(D, DarkCrystal) else list(D)
    out: dict = {}
    for b in elements:
        out.setdefault(insertion_P(inv_biword(b)), set()).add(b)
    return out


def reflection(i: int, b: Biword) -> Biword:
    """Crystal reflection S_i: f_i^{wt_i - wt_{i+1}} or e_i^{wt_{i+1} - wt_i}."""
    if not 1 <= i <= b.ell - 1:
        raise ValueError(f"index {i} out of range for ell={b.ell}")
    wt = b.content()
    d = wt[i - 1] - wt[i]
    out = f_string(i, b, d) if d >= 0 else _e_string(i, b, -d)
    assert out is not None
    return out


# -- output ---------------------------------------------------------------------


def _edges(D: DarkCrystal) -> list[tuple[Biword, Biword, int]]:
    edges = []
    for b in D.sorted_elements():
        for i in range(D.ell):
            c = f_tensor(i, b) if D.ell > 1 else None
            if c is not None and c in D.elements:
                edges.append((b, c, i))
    return edges


def to_dot(D: DarkCrystal) -> str:
    lines = ["digraph dark {"]
    for b in D.sorted_elements():
        lines.append(f'  "{b}";')
    for src, dst, i in _edges(D):
        style = ", style=dashed" if i == 0 else ""
        lines.append(f'  "{src}" -> "{dst}" [label="f{i}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(D: DarkCrystal) -> dict:
    return {
        "ell": D.ell,
        "mu": list(D.mu),
        "w": [str(w) for w in D.w_list],
        "size": len(D),
        "elements": [str(b) for b in D.sorted_elements()],
        "edges": [{"from": str(s), "to": str(t), "label": f"f{i}"} for s, t, i in _edges(D)],
    }


def to_json(D: DarkCrystal) -> str:
    return json.dumps(to_json_obj(D))
