"""Exact Laurent polynomials in x_1..x_ell with Laurent-in-q integer coefficients.

Storage is a flat dictionary keyed by ``(q, e_1, ..., e_ell)``; zero
coefficients are never stored.  The Demazure operators pi_i, their hatted
versions, the variable swaps s_i and the rotation Phi act term by term.

The hot kernels (pi_i, Phi, multiplication) come from the compiled
``_kernels`` extension when it is available and from ``_kernels_py``
otherwise.  Set ``NSCATALAN_PURE=1`` to force the pure-Python kernels.
"""

from __future__ import annotations

import json
import os
from typing import Iterable, Iterator, Mapping, Sequence

from .hecke import HeckeElt, reduced_word

if os.environ.get("NSCATALAN_PURE"):
    from . import _kernels_py as _k

    BACKEND = "python"
else:
    try:
        from . import _kernels as _k  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        from . import _kernels_py as _k

        BACKEND = "python"

__all__ = [
    "QPoly",
    "LaurentPoly",
    "BACKEND",
    "pi",
    "pi_hat",
    "pi_w",
    "pi_hat_w",
    "pi_word",
    "phi",
    "s_act",
    "pi_divided_difference",
]


class QPoly:
    """A Laurent polynomial in q with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            self._c: dict[int, int] = {}
        elif isinstance(coeffs, int):
            self._c = {0: coeffs} if coeffs else {}
        else:
            self._c = {int(a): int(c) for a, c in coeffs.items() if c}

    @classmethod
    def q(cls, power: int = 1) -> "QPoly":
        return cls({power: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def __getitem__(self, power: int) -> int:
        return self._c.get(power, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def _coerce(self, other) -> "QPoly":
        return QPoly(other) if isinstance(other, int) else other

    def __add__(self, other) -> "QPoly":
        other = self._coerce(other)
        out = dict(self._c)
        for a, c in other._c.items():
            out[a] = out.get(a, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({a: -c for a, c in self._c.items()})

    def __sub__(self, other) -> "QPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        other = self._coerce(other)
        out: dict[int, int] = {}
        for a, c in self._c.items():
            for b, d in other._c.items():
                out[a + b] = out.get(a + b, 0) + c * d
        return QPoly(out)

    __rmul__ = __mul__

    def subs_q_inverse(self) -> "QPoly":
        return QPoly({-a: c for a, c in self._c.items()})

    def min_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def max_degree(self) -> int | None:
        return max(self._c) if self._c else None

    def evaluate(self, q: int) -> int:
        return sum(c * q**a for a, c in self._c.items())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for a, c in sorted(self._c.items()):
            mono = "" if a == 0 else ("q" if a == 1 else f"q^{a}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"QPoly({self})"


def _clean(data: dict) -> dict:
    return {k: v for k, v in data.items() if v}


class LaurentPoly:
    """Exact Laurent polynomial in x_1..x_ell over Z[q, q^-1]."""

    __slots__ = ("ell", "_d", "_hash")

    def __init__(self, ell: int, data: Mapping[tuple, int] | None = None, *, _trusted: bool = False):
        if ell < 0:
            raise ValueError("ell must be nonnegative")
        self.ell = ell
        if data is None:
            self._d: dict = {}
        elif _trusted:
            self._d = data  # type: ignore[assignment]
        else:
            d: dict = {}
            for key, c in data.items():
                key = tuple(int(x) for x in key)
                if len(key) != ell + 1:
                    raise ValueError(f"key {key} does not have length ell+1={ell + 1}")
                d[key] = d.get(key, 0) + int(c)
            self._d = _clean(d)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, ell: int) -> "LaurentPoly":
        return cls(ell)

    @classmethod
    def one(cls, ell: int) -> "LaurentPoly":
        return cls.monomial((0,) * ell)

    @classmethod
    def monomial(cls, exp: Sequence[int], q: int = 0, coeff: int = 1) -> "LaurentPoly":
        exp = tuple(int(e) for e in exp)
        return cls(len(exp), {(q,) + exp: coeff} if coeff else {}, _trusted=True)

    @classmethod
    def x(cls, i: int, ell: int) -> "LaurentPoly":
        e = [0] * ell
        e[i - 1] = 1
        return cls.monomial(e)

    @classmethod
    def qvar(cls, ell: int, power: int = 1) -> "LaurentPoly":
        return cls.monomial((0,) * ell, q=power)

    @classmethod
    def from_terms(cls, ell: int, terms: Mapping[Sequence[int], QPoly | int]) -> "LaurentPoly":
        """Build from a map exponent-vector -> QPoly (or int)."""
        d: dict = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != ell:
                raise ValueError("exponent vector has wrong length")
            qc = QPoly(c) if isinstance(c, int) else c
            for a, v in qc.items():
                key = (a,) + exp
                d[key] = d.get(key, 0) + v
        return cls(ell, _clean(d), _trusted=True)

    # -- views --------------------------------------------------------
    @property
    def data(self) -> dict:
        """The flat ``(q, e_1..e_ell) -> coefficient`` dictionary (a copy)."""
        return dict(self._d)

    def raw(self) -> dict:
        return self._d

    @property
    def terms(self) -> dict[tuple[int, ...], QPoly]:
        out: dict[tuple[int, ...], dict[int, int]] = {}
        for key, c in self._d.items():
            out.setdefault(key[1:], {})[key[0]] = c
        return {e: QPoly(cs) for e, cs in out.items()}

    def coeff(self, exp: Sequence[int]) -> QPoly:
        exp = tuple(exp)
        return QPoly({k[0]: c for k, c in self._d.items() if k[1:] == exp})

    def items(self) -> Iterator[tuple[tuple, int]]:
        return iter(self._d.items())

    def __len__(self) -> int:
        return len(self._d)

    def __bool__(self) -> bool:
        return bool(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def q_exponents(self) -> set[int]:
        return {k[0] for k in self._d}

    def degrees(self) -> set[int]:
        return {sum(k[1:]) for k in self._d}

    def is_polynomial(self) -> bool:
        """True when every q- and x-exponent is nonnegative."""
        return all(min(k) >= 0 for k in self._d) if self._d else True

    def at_q(self, q: int) -> "LaurentPoly":
        """Specialize q to an integer value (result has only q^0)."""
        d: dict = {}
        for k, c in self._d.items():
            nk = (0,) + k[1:]
            d[nk] = d.get(nk, 0) + c * q ** k[0]
        return LaurentPoly(self.ell, _clean(d), _trusted=True)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "LaurentPoly") -> None:
        if other.ell != self.ell:
            raise ValueError(f"mismatched number of variables: {self.ell} vs {other.ell}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.one(self.ell) * other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ell == other.ell and self._d == other._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ell, frozenset(self._d.items())))
        return self._hash

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.one(self.ell) * other
        self._check(other)
        d = dict(self._d)
        for k, c in other._d.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return LaurentPoly(self.ell, d, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ell, {k: -c for k, c in self._d.items()}, _trusted=True)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.ell)
            return LaurentPoly(self.ell, {k: c * other for k, c in self._d.items()}, _trusted=True)
        if isinstance(other, QPoly):
            other = LaurentPoly.from_terms(self.ell, {(0,) * self.ell: other})
        self._check(other)
        return LaurentPoly(self.ell, _k.mul_terms(self._d, other._d), _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only supported for monomials via shift()")
        out = LaurentPoly.one(self.ell)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, exp: Sequence[int], q: int = 0) -> "LaurentPoly":
        """Multiply by the monomial q^q x^exp (exponents may be negative)."""
        off = (q,) + tuple(exp)
        if len(off) != self.ell + 1:
            raise ValueError("shift vector has wrong length")
        return LaurentPoly(
            self.ell,
            {tuple(a + b for a, b in zip(k, off)): c for k, c in self._d.items()},
            _trusted=True,
        )

    def mul_x1_power(self, a: int) -> "LaurentPoly":
        if a == 0:
            return self
        return LaurentPoly(
            self.ell, {(k[0], k[1] + a) + k[2:]: c for k, c in self._d.items()}, _trusted=True
        )

    def subs_q_inverse(self) -> "LaurentPoly":
        return LaurentPoly(self.ell, {(-k[0],) + k[1:]: c for k, c in self._d.items()}, _trusted=True)

    def kill_variables(self, new_ell: int) -> "LaurentPoly":
        """Set x_{new_ell+1} = ... = x_ell = 0 (requires nonnegative exponents there)."""
        if not 0 <= new_ell <= self.ell:
            raise ValueError("bad number of variables")
        d: dict = {}
        for k, c in self._d.items():
            rest = k[new_ell + 1 :]
            if any(e < 0 for e in rest):
                raise ValueError("cannot set a variable with a negative exponent to zero")
            if any(rest):
                continue
            d[k[: new_ell + 1]] = c
        return LaurentPoly(new_ell, d, _trusted=True)

    def extend_variables(self, new_ell: int) -> "LaurentPoly":
        """View as a polynomial in more variables."""
        if new_ell < self.ell:
            raise ValueError("cannot shrink with extend_variables")
        pad = (0,) * (new_ell - self.ell)
        return LaurentPoly(new_ell, {k + pad: c for k, c in self._d.items()}, _trusted=True)

    def evaluate(self, xs: Sequence, q=1):
        """Evaluate at numeric (e.g. Fraction) values of x and q."""
        total = 0
        for k, c in self._d.items():
            term = c * q ** k[0]
            for x, e in zip(xs, k[1:]):
                term = term * x**e
            total += term
        return total

    # -- serialization ------------------------------------------------
    def sorted_keys(self) -> list[tuple]:
        return sorted(self._d, key=lambda k: (k[0], tuple(-e for e in k[1:])))

    def to_text(self) -> str:
        if not self._d:
            return "0"
        pieces = []
        for key in self.sorted_keys():
            c = self._d[key]
            factors = []
            if key[0] == 1:
                factors.append("q")
            elif key[0]:
                factors.append(f"q^{key[0]}")
            for idx, e in enumerate(key[1:], start=1):
                if e == 1:
                    factors.append(f"x{idx}")
                elif e:
                    factors.append(f"x{idx}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_obj(self) -> list[dict]:
        return [
            {"q": k[0], "exp": list(k[1:]), "coeff": self._d[k]} for k in self.sorted_keys()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, ell: int, obj: Iterable[Mapping]) -> "LaurentPoly":
        return cls(ell, {(t["q"], *t["exp"]): int(t["coeff"]) for t in obj})

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly(ell={self.ell}, {self.to_text()})"


# -- operators --------------------------------------------------------


def _check_index(i: int, ell: int) -> None:
    if not 1 <= i <= ell - 1:
        raise ValueError(f"index {i} out of range for ell={ell}")


def pi(i: int, f: LaurentPoly) -> LaurentPoly:
    """Demazure operator pi_i = (x_i f - x_{i+1} s_i f)/(x_i - x_{i+1})."""
    _check_index(i, f.ell)
    return LaurentPoly(f.ell, _k.pi_terms(f.raw(), i), _trusted=True)


def pi_hat(i: int, f: LaurentPoly) -> LaurentPoly:
    """pi_hat_i = pi_i - 1."""
    return pi(i, f) - f


def pi_word(word: Sequence[int], f: LaurentPoly) -> LaurentPoly:
    """pi_{i_1} ... pi_{i_m} f, applying the last letter first."""
    for i in reversed(word):
        f = pi(i, f)
    return f


def pi_w(w: HeckeElt, f: LaurentPoly) -> LaurentPoly:
    if w.ell != f.ell:
        raise ValueError("Hecke element and polynomial have different ell")
    return pi_word(reduced_word(w), f)


def pi_hat_w(w: HeckeElt, f: LaurentPoly) -> LaurentPoly:
    if w.ell != f.ell:
        raise ValueError("Hecke element and polynomial have different ell")
    for i in reversed(reduced_word(w)):
        f = pi_hat(i, f)
    return f


def phi(f: LaurentPoly) -> LaurentPoly:
    """Phi(f) = f(x_2, ..., x_ell, q x_1)."""
    if f.ell == 0:
        return f
    return LaurentPoly(f.ell, _k.phi_terms(f.raw()), _trusted=True)


def s_act(i: int, f: LaurentPoly) -> LaurentPoly:
    """Swap x_i and x_{i+1}."""
    _check_index(i, f.ell)
    out = {}
    for k, c in f.raw().items():
        out[k[:i] + (k[i + 1], k[i]) + k[i + 2 :]] = c
    return LaurentPoly(f.ell, out, _trusted=True)


def _divide_by_binomial(g: LaurentPoly, i: int) -> LaurentPoly:
    """Exact division of g by (x_i - x_{i+1}); raises ArithmeticError if not divisible."""
    rem = dict(g.raw())
    quot: dict = {}
    floor = min((k[i] for k in rem), default=0)
    while rem:
        key = max(rem, key=lambda k: (k[i], k))
        c = rem.pop(key)
        qk = key[:i] + (key[i] - 1,) + key[i + 1 :]
        if qk[i] < floor:
            raise ArithmeticError("not divisible by x_i - x_{i+1}")
        quot[qk] = quot.get(qk, 0) + c
        nk = qk[: i + 1] + (qk[i + 1] + 1,) + qk[i + 2 :]
        v = rem.get(nk, 0) + c
        if v:
            rem[nk] = v
        else:
            rem.pop(nk, None)
    return LaurentPoly(g.ell, _clean(quot), _trusted=True)


def pi_divided_difference(i: int, f: LaurentPoly) -> LaurentPoly:
    """pi_i computed literally as a divided difference (independent oracle)."""
    _check_index(i, f.ell)
    xi = LaurentPoly.x(i, f.ell)
    xj = LaurentPoly.x(i + 1, f.ell)
    num = xi * f - xj * s_act(i, f)
    return _divide_by_binomial(num, i)
