"""Tabloids, insertion, katabolism and charge.

A tabloid with ``ell`` rows is a sequence of ``ell`` weakly increasing words
(rows may be empty).  Row ``r`` of ``T`` is written ``T^r``.  The reading
word is ``T^ell ... T^2 T^1``.  Tabloids are printed with rows joined by
``/``, e.g. ``"112//3"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .crystal import Biword, reflection
from .hecke import HeckeElt, reduced_word
from .keybasis import orbit_length

__all__ = [
    "Tabloid",
    "parse_tabloid",
    "row_insert",
    "insertion_tableau",
    "insertion_P",
    "recording_Q",
    "column_insert",
    "inv",
    "inv_tabloid",
    "inv_biword",
    "partial_insert_Pi",
    "partial_insert_Pw",
    "column_insert_Pil",
    "kat",
    "kat_prime",
    "ones_in_first_row",
    "is_w_katabolizable",
    "katabolism_trace",
    "is_n_katabolizable",
    "kat_character",
    "charge",
    "charge_word",
    "knuth_neighbors",
    "is_row_frank",
    "bruhat_covers_up",
    "s_prime",
    "is_extreme_katabolizable",
    "tabloids_of_content",
    "ssyt_of_content",
    "standard_tableaux",
]


@dataclass(frozen=True, order=True)
class Tabloid:
    """A row-weakly-increasing filling of a composition diagram with ``ell`` rows."""

    ell: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.ell:
            raise ValueError(f"expected {self.ell} rows, got {len(self.rows)}")
        for r in self.rows:
            if any(x < 1 for x in r):
                raise ValueError("tabloid entries must be positive")
            if any(r[k] > r[k + 1] for k in range(len(r) - 1)):
                raise ValueError(f"row {r} is not weakly increasing")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ell: int | None = None) -> "Tabloid":
        rows = [tuple(r) for r in rows]
        ell = len(rows) if ell is None else ell
        if len(rows) > ell:
            if any(rows[ell:]):
                raise ValueError("too many nonempty rows for ell")
            rows = rows[:ell]
        rows += [()] * (ell - len(rows))
        return cls(ell, tuple(rows))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(self.shape)

    def content(self, length: int | None = None) -> tuple[int, ...]:
        m = max((x for r in self.rows for x in r), default=0)
        length = m if length is None else length
        out = [0] * length
        for r in self.rows:
            for x in r:
                out[x - 1] += 1
        return tuple(out)

    def is_empty(self) -> bool:
        return not any(self.rows)

    def is_tableau(self) -> bool:
        sh = self.shape
        if any(sh[k] < sh[k + 1] for k in range(len(sh) - 1)):
            return False
        for k in range(len(self.rows) - 1):
            upper, lower = self.rows[k], self.rows[k + 1]
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
        return True

    def reading_word(self) -> tuple[int, ...]:
        out: list[int] = []
        for r in reversed(self.rows):
            out.extend(r)
        return tuple(out)

    def to_text(self) -> str:
        def fmt(r: tuple[int, ...]) -> str:
            if any(x > 9 for x in r):
                return ",".join(map(str, r))
            return "".join(map(str, r))

        return "/".join(fmt(r) for r in self.rows)

    def __str__(self) -> str:
        return self.to_text()


def parse_tabloid(text: str, ell: int | None = None) -> Tabloid:
    """Parse ``"112//3"``; a row containing commas is read as comma-separated numbers."""
    parts = text.strip().split("/")
    rows = []
    for p in parts:
        p = p.strip()
        if p in ("", "-", "0"):
            rows.append(())
        elif "," in p:
            rows.append(tuple(int(x) for x in p.split(",")))
        else:
            rows.append(tuple(int(ch) for ch in p))
    return Tabloid.from_rows(rows, ell)


# -- insertion -----------------------------------------------------------


def row_insert(rows: list[list[int]], x: int) -> int:
    """Schensted row insertion of x into ``rows`` (in place); returns the new row index."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r
        row = rows[r]
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(row):
            row.append(x)
            return r
        row[lo], x = x, row[lo]
        r += 1


def insertion_tableau(word: Iterable[int]) -> list[list[int]]:
    rows: list[list[int]] = []
    for x in word:
        row_insert(rows, x)
    return rows


def _as_tabloid(rows: list[list[int]], ell: int) -> Tabloid:
    if len(rows) > ell:
        raise ValueError("insertion produced more rows than ell")
    return Tabloid(ell, tuple(tuple(r) for r in rows) + ((),) * (ell - len(rows)))


def insertion_P(T: Tabloid) -> Tabloid:
    """P(T): the insertion tableau of the reading word T^ell ... T^1."""
    return _as_tabloid(insertion_tableau(T.reading_word()), T.ell)


def column_insert(cols: list[list[int]], x: int) -> tuple[int, int]:
    """Column insertion of x (in place on a list of columns); returns (row, col) of the new cell."""
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            return 0, c
        col = cols[c]
        # smallest entry >= x
        for k, y in enumerate(col):
            if y >= x:
                col[k], x = x, y
                break
        else:
            col.append(x)
            return len(col) - 1, c
        c += 1


def recording_Q(b: Biword) -> Tabloid:
    """Q(b): the cells added while inserting b^1, then b^2, ... are filled with the block index.

    Column inserting the bottom word from right to left builds the same
    tableau as row inserting it, so after block i the shape is that of
    P(b^i ... b^1).
    """
    q_rows: list[list[int]] = []
    cols: list[list[int]] = []
    for idx in range(1, len(b.blocks) + 1):
        for x in reversed(b.block(idx)):
            column_insert(cols, x)
        for r, length in enumerate(_shape_of_cols(cols)):
            if r == len(q_rows):
                q_rows.append([])
            q_rows[r].extend([idx] * (length - len(q_rows[r])))
    return _as_tabloid(q_rows, b.ell)


def _shape_of_cols(cols: list[list[int]]) -> list[int]:
    if not cols:
        return []
    h = len(cols[0])
    return [sum(1 for c in cols if len(c) > r) for r in range(h)]


# -- inv -------------------------------------------------------------------


def inv_biword(b: Biword) -> Tabloid:
    """inv(b): row r holds the block index i once for each letter r in b^i."""
    rows: list[list[int]] = [[] for _ in range(b.ell)]
    for i in range(1, len(b.blocks) + 1):
        for r in b.block(i):
            rows[r - 1].append(i)
    return Tabloid(b.ell, tuple(tuple(sorted(r)) for r in rows))


def inv_tabloid(T: Tabloid, p: int | None = None) -> Biword:
    """inv(T): block b^i lists (sorted) the rows containing i, with multiplicity."""
    content = T.content(p)
    if p is not None and len(content) > p:
        raise ValueError("tabloid has letters larger than the number of blocks")
    blocks_by_index: list[list[int]] = [[] for _ in content]
    for r, row in enumerate(T.rows, start=1):
        for x in row:
            blocks_by_index[x - 1].append(r)
    display = tuple(tuple(sorted(bl)) for bl in reversed(blocks_by_index))
    return Biword(T.ell, display)


def inv(obj, p: int | None = None):
    """The content/shape-exchanging bijection between biwords and tabloids."""
    if isinstance(obj, Biword):
        return inv_biword(obj)
    if isinstance(obj, Tabloid):
        return inv_tabloid(obj, p)
    raise TypeError("inv expects a Biword or a Tabloid")


# -- partial insertion --------------------------------------------------------


def partial_insert_Pi(i: int, T: Tabloid) -> Tabloid:
    """Replace rows i, i+1 by the tableau P(T^{i+1} T^i)."""
    if not 1 <= i <= T.ell - 1:
        raise ValueError(f"index {i} out of range for ell={T.ell}")
    P = insertion_tableau(T.rows[i] + T.rows[i - 1])
    P += [[]] * (2 - len(P))
    rows = list(T.rows)
    rows[i - 1] = tuple(P[0])
    rows[i] = tuple(P[1])
    return Tabloid(T.ell, tuple(rows))


def partial_insert_word(word: Sequence[int], T: Tabloid) -> Tabloid:
    """P_{i_1} ... P_{i_m}(T): the last letter acts first."""
    for i in reversed(word):
        T = partial_insert_Pi(i, T)
    return T


def partial_insert_Pw(w: HeckeElt, T: Tabloid) -> Tabloid:
    if w.ell != T.ell:
        raise ValueError("Hecke element and tabloid have different ell")
    return partial_insert_word(reduced_word(w), T)


def column_insert_Pil(i: int, T: Tabloid) -> Tabloid:
    """P_{i,ell}: rows i..ell become P(T^ell T^{ell-1} ... T^i); rows i..ell-1 must form a tableau."""
    ell = T.ell
    if not 1 <= i <= ell:
        raise ValueError(f"index {i} out of range for ell={ell}")
    middle = Tabloid.from_rows(T.rows[i - 1 : ell - 1], max(ell - i, 0))
    if ell - i > 0 and not middle.is_tableau():
        raise ValueError(f"rows {i}..{ell - 1} do not form a tableau")
    word: list[int] = []
    for r in range(ell, i - 1, -1):
        word.extend(T.rows[r - 1])
    P = insertion_tableau(word)
    if len(P) > ell - i + 1:
        raise ValueError("column insertion overflowed the available rows")
    rows = list(T.rows[: i - 1]) + [tuple(r) for r in P]
    rows += [()] * (ell - len(rows))
    return Tabloid(ell, tuple(rows))


# -- katabolism -----------------------------------------------------------------


def kat(T: Tabloid) -> Tabloid:
    """Remove all 1's, move row 1 to row ell, subtract 1 from every entry."""
    stripped = [tuple(x - 1 for x in r if x != 1) for r in T.rows]
    if not stripped:
        return T
    rows = stripped[1:] + stripped[:1]
    return Tabloid(T.ell, tuple(rows))


def kat_prime(b: Biword) -> Biword:
    """Drop the block b^1 and apply the inverse tau-twist."""
    from .crystal import tau_inv_twist

    rest = Biword(b.ell, b.blocks[:-1])
    return tau_inv_twist(rest)


def ones_in_first_row(T: Tabloid) -> bool:
    return all(1 not in r for r in T.rows[1:])


def is_w_katabolizable(T: Tabloid, w_list: Sequence[HeckeElt]) -> bool:
    """Recursive katabolizability test with partial insertions P_{w_1^{-1}}."""
    for w in w_list:
        U = partial_insert_word(list(reversed(reduced_word(w))), T)
        if not ones_in_first_row(U):
            return False
        T = kat(U)
    return T.is_empty()


def katabolism_trace(T: Tabloid, w_list: Sequence[HeckeElt]) -> tuple[bool, list[tuple[str, Tabloid]]]:
    """Run the katabolizability test and record every intermediate tabloid."""
    steps: list[tuple[str, Tabloid]] = [("start", T)]
    for w in w_list:
        inv_word = list(reversed(reduced_word(w)))
        label = "P[" + (",".join(map(str, inv_word)) if inv_word else "id") + "]"
        U = partial_insert_word(inv_word, T)
        steps.append((label, U))
        if not ones_in_first_row(U):
            return False, steps
        T = kat(U)
        steps.append(("kat", T))
    return T.is_empty(), steps


def is_n_katabolizable(U: Tabloid, n: Sequence[int]) -> bool:
    """Streamlined test: after each kat, apply P_{n_i, ell} and require all 1's in row 1."""
    if not ones_in_first_row(U):
        return False
    V = U
    for ni in n:
        V = column_insert_Pil(ni, kat(V))
        if not ones_in_first_row(V):
            return False
    return kat(V).is_empty()


def kat_character(mu: Sequence[int], w_list: Sequence[HeckeElt], ell: int):
    """Sum of q^{charge T} x^{sh T} over w-katabolizable tabloids of content mu."""
    from .exactpoly import LaurentPoly

    data: dict = {}
    for T in tabloids_of_content(ell, mu):
        if is_w_katabolizable(T, w_list):
            key = (charge(T),) + T.shape
            data[key] = data.get(key, 0) + 1
    return LaurentPoly(ell, data)


# -- charge ---------------------------------------------------------------


def _is_partition_content(word: Sequence[int]) -> bool:
    if not word:
        return True
    m = max(word)
    counts = [0] * (m + 1)
    for x in word:
        if x < 1:
            return False
        counts[x] += 1
    return all(counts[k] >= counts[k + 1] for k in range(1, m))


def charge_word(word: Sequence[int]) -> int:
    """Charge of a word of partition content via cyclic standard-subword extraction."""
    word = list(word)
    if not _is_partition_content(word):
        raise ValueError("charge needs a word of partition content")
    alive = [True] * len(word)
    remaining = len(word)
    total = 0
    n = len(word)
    while remaining:
        # rightmost 1
        pos = max(k for k in range(n) if alive[k] and word[k] == 1)
        alive[pos] = False
        remaining -= 1
        index = 0
        r = 1
        while True:
            target = r + 1
            found = -1
            wrapped = False
            k = pos - 1
            for _ in range(n):
                if k < 0:
                    k = n - 1
                    wrapped = True
                if alive[k] and word[k] == target:
                    found = k
                    break
                k -= 1
            if found < 0:
                break
            if wrapped:
                index += 1
            total += index
            alive[found] = False
            remaining -= 1
            pos = found
            r = target
    return total


def knuth_neighbors(word: Sequence[int]) -> list[tuple[int, ...]]:
    """Words reachable by one elementary Knuth move.

    The moves act on three adjacent letters: ``x z y <-> z x y`` when
    ``x <= y < z`` and ``y x z <-> y z x`` when ``x < y <= z``.
    """
    w = tuple(word)
    out = []
    for k in range(len(w) - 2):
        a, b, c = w[k : k + 3]
        head, tail = w[:k], w[k + 3 :]
        if a <= c < b or b <= c < a:  # x z y <-> z x y
            out.append(head + (b, a, c) + tail)
        if b < a <= c or c < a <= b:  # y x z <-> y z x
            out.append(head + (a, c, b) + tail)
    return out


def charge(obj) -> int:
    """Charge of a word, or of a tabloid via its reading word T^ell ... T^1."""
    if isinstance(obj, Tabloid):
        return charge_word(obj.reading_word())
    return charge_word(obj)


# -- row-frank tabloids, Bruhat covers, extreme katabolizability ----------------


def is_row_frank(T: Tabloid) -> bool:
    return sorted(T.shape) == sorted(insertion_P(T).shape)


def bruhat_covers_up(alpha: Sequence[int]) -> set[tuple[tuple[int, int], tuple[int, ...]]]:
    """All Bruhat covers beta of alpha obtained by one transposition (i, k).

    beta = alpha with entries i < k swapped covers alpha iff alpha_i > alpha_k and
    no alpha_j with i < j < k lies in the closed interval [alpha_k, alpha_i].
    """
    alpha = tuple(alpha)
    out = set()
    n = len(alpha)
    for i in range(n):
        for k in range(i + 1, n):
            hi, lo = alpha[i], alpha[k]
            if hi <= lo:
                continue
            if any(lo <= alpha[j] <= hi for j in range(i + 1, k)):
                continue
            beta = list(alpha)
            beta[i], beta[k] = beta[k], beta[i]
            out.add(((i + 1, k + 1), tuple(beta)))
    return out


def bruhat_covers_up_bruteforce(alpha: Sequence[int]) -> set[tuple[int, ...]]:
    """Covers by definition: one transposition, comparable, and length difference 1."""
    from .keybasis import vector_bruhat_le

    alpha = tuple(alpha)
    n = len(alpha)
    base = orbit_length(alpha)
    out = set()
    for i in range(n):
        for k in range(i + 1, n):
            beta = list(alpha)
            beta[i], beta[k] = beta[k], beta[i]
            beta = tuple(beta)
            if beta != alpha and orbit_length(beta) == base + 1 and vector_bruhat_le(alpha, beta):
                out.add(beta)
    return out


def _s_ij_word(i: int, j: int) -> list[int]:
    # S_{ij} = S_i S_{i+1} ... S_{j-1} ... S_{i+1} S_i
    return list(range(i, j)) + list(range(j - 2, i - 1, -1))


def s_prime(i: int, j: int, T: Tabloid) -> Tabloid:
    """S'_{ij} = inv o S_{ij} o inv (reflection of the shape by the transposition (i j))."""
    b = inv_tabloid(T, len(T.content()))
    for k in reversed(_s_ij_word(i, j)):
        b = reflection(k, b)
    return inv_biword(b)


def is_extreme_katabolizable(T: Tabloid, w_list: Sequence[HeckeElt]) -> bool:
    if not is_row_frank(T):
        raise ValueError("extreme katabolizability is defined for row-frank tabloids")
    if not is_w_katabolizable(T, w_list):
        return False
    for (i, k), _beta in bruhat_covers_up(T.shape):
        if is_w_katabolizable(s_prime(i, k, T), w_list):
            return False
    return True


# -- enumeration -----------------------------------------------------------------


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def tabloids_of_content(ell: int, mu: Sequence[int]) -> list[Tabloid]:
    """All tabloids with ell rows and content mu."""
    mu = tuple(mu)
    choices = [list(_compositions(m, ell)) for m in mu]
    out = []
    for pick in product(*choices):
        rows = [[] for _ in range(ell)]
        for letter, comp in enumerate(pick, start=1):
            for r, cnt in enumerate(comp):
                rows[r].extend([letter] * cnt)
        out.append(Tabloid(ell, tuple(tuple(r) for r in rows)))
    return sorted(out)


def _horizontal_strips(shape: tuple[int, ...], k: int, max_rows: int) -> Iterator[tuple[int, ...]]:
    """Shapes obtained by adding a horizontal strip of size k."""
    shape = list(shape) + [0] * (max_rows - len(shape))

    def rec(r: int, left: int, cur: list[int]) -> Iterator[tuple[int, ...]]:
        if r == max_rows:
            if left == 0:
                yield tuple(x for x in cur if x)
            return
        bound = left if r == 0 else min(left, shape[r - 1] - shape[r])
        for add in range(bound + 1):
            yield from rec(r + 1, left - add, cur + [shape[r] + add])

    yield from rec(0, k, [])


@lru_cache(maxsize=None)
def _ssyt(mu: tuple[int, ...], max_rows: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    results: list[list[list[int]]] = [[]]
    for letter, m in enumerate(mu, start=1):
        nxt = []
        for rows in results:
            shape = tuple(len(r) for r in rows)
            for new in _horizontal_strips(shape, m, max_rows):
                rr = [list(r) for r in rows] + [[] for _ in range(len(new) - len(rows))]
                for r, length in enumerate(new):
                    rr[r].extend([letter] * (length - len(rr[r])))
                nxt.append(rr)
        results = nxt
    return tuple(tuple(tuple(r) for r in rows) for rows in results)


def ssyt_of_content(ell: int, mu: Sequence[int]) -> list[Tabloid]:
    """Semistandard tableaux with content mu and at most ell rows."""
    return sorted(Tabloid.from_rows(rows, ell) for rows in _ssyt(tuple(mu), ell))


def standard_tableaux(m: int, max_rows: int) -> list[Tabloid]:
    """Standard Young tableaux of size m with at most max_rows rows."""
    return ssyt_of_content(max_rows, (1,) * m)
