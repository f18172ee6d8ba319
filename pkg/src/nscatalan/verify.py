"""Randomized and exhaustive verification suites.

Each suite compares independent routes to the same quantity and returns a
``Report``.  Randomness comes from ``random.Random(seed)`` only, and trials
are processed in index order, so a fixed seed gives byte-identical reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .catalan import (
    catalan_direct,
    catalan_recursive,
    catalan_rotation,
    hall_littlewood_schur,
    kostka_foulkes_qkostant,
)
from .crystal import char_charge, char_operator, dark
from .exactpoly import LaurentPoly, QPoly, phi, pi, pi_divided_difference, pi_hat
from .hecke import HeckeElt, all_elements, hecke_action, sort_perms
from .keybasis import KeyExpansion, expand_keys, key_coeff_ct_oracle, poly_trunc
from .macdonald import (
    katabolizable_syt_sum,
    stability_check,
    symmetrize_catalan,
    symmetrized,
    tE,
    tE_catalan,
    tE_operator,
)
from .rootideals import RootIdeal, all_root_ideals, is_tame
from .tabloids import (
    charge,
    charge_word,
    inv_tabloid,
    is_w_katabolizable,
    kat_character,
    knuth_neighbors,
    ssyt_of_content,
    tabloids_of_content,
)

__all__ = ["Report", "SUITES", "DEFAULTS", "run_suite", "partitions", "compositions"]

MAX_LISTED = 20


@dataclass
class Report:
    suite: str
    seed: int
    params: dict
    trials: int = 0
    failures: int = 0
    counterexamples: list[str] = field(default_factory=list)
    checks: dict[str, int] = field(default_factory=dict)

    def record(self, ok: bool, label: str, detail: Callable[[], str]) -> None:
        self.trials += 1
        self.checks[label] = self.checks.get(label, 0) + 1
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < MAX_LISTED:
                self.counterexamples.append(f"[{label}] {detail()}")

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json_obj(self) -> dict:
        return {
            "command": "verify",
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "trials": self.trials,
            "failures": self.failures,
            "checks": dict(sorted(self.checks.items())),
            "counterexamples": self.counterexamples,
        }


# -- small enumeration helpers ------------------------------------------------


def partitions(n: int, max_part: Optional[int] = None) -> list[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def random_poly(rng: random.Random, ell: int, terms: int = 4, lo: int = 0, hi: int = 3, qmax: int = 2) -> LaurentPoly:
    data: dict = {}
    for _ in range(terms):
        k = (rng.randint(0, qmax),) + tuple(rng.randint(lo, hi) for _ in range(ell))
        data[k] = data.get(k, 0) + rng.choice([-2, -1, 1, 1, 2, 3])
    return LaurentPoly(ell, {k: v for k, v in data.items() if v})


def _tame_elements(psi: RootIdeal) -> list[HeckeElt]:
    return [w for w in all_elements(psi.ell) if is_tame(psi, w)]


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(map(str, x)) + ")"
    return str(x)


# -- suites -------------------------------------------------------------------


def suite_rotation(rng: random.Random, rep: Report, ell: int, trials: int, **_) -> None:
    """Recursion = rotation over all root ideals with ell' <= ell, random gamma, random tame w."""
    ideals = [psi for n in range(2, ell + 1) for psi in all_root_ideals(n)]
    total = max(trials, len(ideals))
    for t in range(total):
        psi = ideals[t % len(ideals)]
        gamma = tuple(rng.randint(0, 4) for _ in range(psi.ell))
        w = rng.choice(_tame_elements(psi))
        a = catalan_recursive(psi, gamma, w)
        b = catalan_rotation(psi, gamma, w)
        rep.record(a == b, "rotation", lambda: f"nr={_fmt(psi.nr)} gamma={_fmt(gamma)} w={w}")


def _random_w_list(rng: random.Random, ell: int, p: int) -> list[HeckeElt]:
    elts = all_elements(ell)
    return [rng.choice(elts) for _ in range(p)]


def suite_routes(rng: random.Random, rep: Report, ell: int, trials: int, maxmu: int, **_) -> None:
    """DARK charge character = operator formula = katabolizable tabloid sum."""
    mus = [mu for n in range(1, maxmu + 1) for mu in partitions(n)]
    for t in range(trials):
        mu = mus[t % len(mus)]
        ws = _random_w_list(rng, ell, len(mu))
        a = char_charge(dark(mu, ws, ell))
        b = char_operator(mu, ws, ell)
        c = kat_character(mu, ws, ell)
        label = f"mu={_fmt(mu)} w={';'.join(map(str, ws))}"
        rep.record(a == b, "crystal=operator", lambda: label)
        rep.record(b == c, "operator=tabloids", lambda: label)


def suite_katabolism_bijection(rng: random.Random, rep: Report, ell: int, trials: int, maxmu: int, **_) -> None:
    """inv maps the w-katabolizable tabloids of content mu onto dark(mu, w)."""
    for n in range(1, maxmu + 1):
        for mu in partitions(n):
            tabs = tabloids_of_content(ell, mu)
            for _ in range(trials):
                ws = _random_w_list(rng, ell, len(mu))
                D = dark(mu, ws, ell)
                images = {}
                count = 0
                shape_ok = True
                for T in tabs:
                    if is_w_katabolizable(T, ws):
                        b = inv_tabloid(T, len(mu))
                        images[b] = T
                        count += 1
                        shape_ok &= b.content() == T.shape
                label = f"mu={_fmt(mu)} w={';'.join(map(str, ws))}"
                rep.record(len(images) == count, "injective", lambda: label)
                rep.record(set(images) == set(D.elements), "image=dark", lambda: label)
                rep.record(shape_ok, "shape=content", lambda: label)


def _random_partition_word(rng: random.Random, maxsize: int) -> list[int]:
    n = rng.randint(1, maxsize)
    lam = rng.choice(partitions(n))
    word = [i for i, m in enumerate(lam, start=1) for _ in range(m)]
    rng.shuffle(word)
    return word


def suite_charge_axioms(rng: random.Random, rep: Report, trials: int, maxmu: int, **_) -> None:
    """C1 (empty word), C2 (strip trailing 1s), C3 (cyclage), C4 (Knuth invariance)."""
    rep.record(charge_word([]) == 0, "C1", lambda: "charge of the empty word")
    size = max(maxmu, 1)
    for _ in range(trials):
        word = _random_partition_word(rng, size)
        # C2: move every 1 to the end
        v = [x for x in word if x != 1]
        u = v + [1] * (len(word) - len(v))
        rep.record(charge_word(u) == charge_word([x - 1 for x in v]), "C2", lambda: f"u={u}")
        # C3: vx with x != 1
        if any(x != 1 for x in word):
            w3 = list(word)
            k = max(i for i, x in enumerate(w3) if x != 1)
            w3.append(w3.pop(k))
            x = w3[-1]
            rep.record(charge_word(w3) == charge_word([x] + w3[:-1]) + 1, "C3", lambda: f"vx={w3}")
        # C4: every elementary Knuth move, and agreement with the insertion tableau
        c = charge_word(word)
        nbrs = knuth_neighbors(word)
        rep.record(all(charge_word(nb) == c for nb in nbrs), "C4", lambda: f"word={word}")


def suite_key_oracle(rng: random.Random, rep: Report, ell: int, trials: int, **_) -> None:
    """Greedy key extraction = constant-term pairing coefficient."""
    while rep.checks.get("ct-oracle", 0) < trials:
        n = rng.randint(1, ell)
        lo = rng.choice([0, 0, -1])
        f = random_poly(rng, n, terms=rng.randint(1, 4), lo=lo, hi=3)
        exp = expand_keys(f)
        rep.record(exp.reconstruct() == f, "reconstruct", lambda: f"f={f}")
        support = sorted(exp.by_alpha())
        probes = support[:3] + [tuple(rng.randint(lo, 3) for _ in range(n)) for _ in range(2)]
        for alpha in probes:
            got = exp.coeff(alpha)
            want = key_coeff_ct_oracle(f, alpha)
            rep.record(got == want, "ct-oracle", lambda: f"f={f} alpha={_fmt(alpha)} greedy={got} oracle={want}")


def suite_kostka_triple(rng: random.Random, rep: Report, ell: int, maxmu: int, **_) -> None:
    """Schur coefficients of H(Delta+; mu; w0) = q-Kostant sum = SSYT charge sum."""
    for n in range(1, maxmu + 1):
        for mu in partitions(n):
            if len(mu) > ell:
                continue
            hl = hall_littlewood_schur(mu, ell).by_alpha()
            by_shape: dict[tuple[int, ...], QPoly] = {}
            for T in ssyt_of_content(ell, mu):
                sh = tuple(x for x in T.shape if x)
                by_shape[sh] = by_shape.get(sh, QPoly()) + QPoly.q(charge(T))
            for lam in partitions(n):
                if len(lam) > ell:
                    continue
                padded = lam + (0,) * (ell - len(lam))
                a = hl.get(padded, QPoly())
                b = kostka_foulkes_qkostant(lam, mu)
                c = by_shape.get(lam, QPoly())
                rep.record(a == b == c, "triple", lambda: f"lam={_fmt(lam)} mu={_fmt(mu)} H={a} kostant={b} ssyt={c}")


def _alphas(ell: int, maxmu: int) -> list[tuple[int, ...]]:
    return [a for n in range(1, ell + 1) for m in range(maxmu + 1) for a in compositions(m, n)]


def suite_macdonald_routes(rng: random.Random, rep: Report, ell: int, maxmu: int, **_) -> None:
    """Recursion = operator formula (random valid z) = Catalan realization."""
    for alpha in _alphas(ell, maxmu):
        a = tE(alpha)
        alpha_plus = sort_perms(alpha)[0]
        zs = [z for z in all_elements(len(alpha)) if hecke_action(z, alpha_plus) == alpha]
        z = rng.choice(zs)
        b = tE_operator(alpha, z)
        c = tE_catalan(alpha)
        rep.record(a == b, "recursion=operator", lambda: f"alpha={_fmt(alpha)} z={z}")
        rep.record(a == c, "recursion=catalan", lambda: f"alpha={_fmt(alpha)}")


def suite_symmetrize(rng: random.Random, rep: Report, ell: int, maxmu: int, **_) -> None:
    """pi_{w0} E~_alpha = Catalan side = katabolizable SYT Schur sum."""
    for alpha in _alphas(ell, maxmu):
        n = len(alpha)
        sym = symmetrized(alpha)
        cat = symmetrize_catalan(alpha)
        syt = katabolizable_syt_sum(alpha)
        rebuilt = KeyExpansion(n, {(a, tuple(reversed(lam))): c for (a, lam), c in syt.terms.items()}).reconstruct()
        rep.record(sym == cat, "symmetrized=catalan", lambda: f"alpha={_fmt(alpha)}")
        rep.record(sym == rebuilt, "symmetrized=syt", lambda: f"alpha={_fmt(alpha)}")


def suite_stability(rng: random.Random, rep: Report, ell: int, maxmu: int, **_) -> None:
    """E~_{(beta, 0)} restricted to x_{ell+1} = 0 equals E~_beta."""
    for beta in _alphas(ell, maxmu):
        rep.record(stability_check(beta), "stability", lambda: f"beta={_fmt(beta)}")


def suite_truncation_identities(rng: random.Random, rep: Report, ell: int, trials: int, **_) -> None:
    """poly/pi commutation, poly on monomials, vanishing, restriction, Phi/pi, pi-hat/x identities."""
    ell = max(ell, 2)
    for _ in range(trials):
        n = rng.randint(2, ell)
        f = random_poly(rng, n, terms=rng.randint(1, 3), lo=-2, hi=2)
        i = rng.randint(1, n - 1)
        # (i) poly(pi_i f) = pi_i(poly f)
        rep.record(poly_trunc(pi(i, f)) == pi(i, poly_trunc(f)), "poly-pi", lambda: f"i={i} f={f}")
        # (ii) poly(x^alpha) = x^alpha for alpha >= 0
        alpha = tuple(rng.randint(0, 3) for _ in range(n))
        mono = LaurentPoly.monomial(alpha)
        rep.record(poly_trunc(mono) == mono, "poly-monomial", lambda: f"alpha={_fmt(alpha)}")
        # (iii) a negative tail sum kills x^gamma
        gamma = _negative_tail_vector(rng, n)
        rep.record(poly_trunc(LaurentPoly.monomial(gamma)).is_zero(), "poly-vanish", lambda: f"gamma={_fmt(gamma)}")
        # (iv) ... and the whole Catalan function (direct term-by-term expansion)
        psi = rng.choice(all_root_ideals(n))
        w = rng.choice(all_elements(n))
        rep.record(
            catalan_direct(psi, gamma, w).is_zero(),
            "catalan-vanish",
            lambda: f"nr={_fmt(psi.nr)} gamma={_fmt(gamma)} w={w}",
        )
        # (v) only Psi inside the first m rows/columns matters when gamma vanishes past m
        m = rng.randint(1, n)
        g5 = tuple(rng.randint(0, 2) for _ in range(m)) + (0,) * (n - m)
        psi2 = _same_restriction(rng, psi, m)
        rep.record(
            catalan_recursive(psi, g5, w) == catalan_recursive(psi2, g5, w),
            "catalan-restriction",
            lambda: f"nr={_fmt(psi.nr)} nr'={_fmt(psi2.nr)} gamma={_fmt(g5)} w={w}",
        )
        # Phi / pi intertwining (needs at least three variables)
        n3 = max(n, 3)
        f3 = f if n3 == n else random_poly(rng, n3, terms=rng.randint(1, 3), lo=-2, hi=2)
        j = rng.randint(1, n3 - 2)
        rep.record(pi(j + 1, phi(f3)) == phi(pi(j, f3)), "phi-pi", lambda: f"i={j} f={f3}")
        # pi / pi-hat / x identities and the divided-difference definition
        xi = LaurentPoly.x(i, n)
        xi1 = LaurentPoly.x(i + 1, n)
        rep.record(xi1 * pi(i, f) == pi_hat(i, xi * f), "x-pi-hat", lambda: f"i={i} f={f}")
        inv_i = LaurentPoly.monomial(tuple(-1 if k == i - 1 else 0 for k in range(n)))
        inv_i1 = LaurentPoly.monomial(tuple(-1 if k == i else 0 for k in range(n)))
        rep.record(inv_i * pi(i, f) == pi_hat(i, inv_i1 * f), "xinv-pi-hat", lambda: f"i={i} f={f}")
        k = i + 1
        inv_km1 = inv_i
        inv_k = inv_i1
        rep.record(
            inv_k * pi(k - 1, f) == pi(k - 1, inv_km1 * f) + inv_k * f,
            "xinv-pi-shift",
            lambda: f"i={k} f={f}",
        )
        rep.record(pi(i, f) == pi_divided_difference(i, f), "divided-difference", lambda: f"i={i} f={f}")
        g = random_poly(rng, n, terms=rng.randint(1, 3), lo=0, hi=3)
        x_last = LaurentPoly.x(n, n)
        inv_last = LaurentPoly.monomial((0,) * (n - 1) + (-1,))
        h = pi_hat(n - 1, g)
        rep.record(
            x_last * poly_trunc(inv_last * h) == poly_trunc(h),
            "x-ell-poly",
            lambda: f"f={g}",
        )


def _negative_tail_vector(rng: random.Random, n: int) -> tuple[int, ...]:
    while True:
        g = tuple(rng.randint(-3, 3) for _ in range(n))
        s = 0
        for x in reversed(g):
            s += x
            if s < 0:
                return g


def _same_restriction(rng: random.Random, psi: RootIdeal, m: int) -> RootIdeal:
    inside = {r for r in psi.roots if r[1] <= m}
    candidates = [
        phi2 for phi2 in all_root_ideals(psi.ell) if {r for r in phi2.roots if r[1] <= m} == inside
    ]
    return rng.choice(candidates)


SUITES: dict[str, Callable[..., None]] = {
    "rotation": suite_rotation,
    "routes": suite_routes,
    "katabolism-bijection": suite_katabolism_bijection,
    "charge-axioms": suite_charge_axioms,
    "key-oracle": suite_key_oracle,
    "kostka-triple": suite_kostka_triple,
    "macdonald-routes": suite_macdonald_routes,
    "symmetrize": suite_symmetrize,
    "stability": suite_stability,
    "truncation-identities": suite_truncation_identities,
}

DEFAULTS: dict[str, dict[str, int]] = {
    "rotation": {"ell": 4, "trials": 500, "maxmu": 0},
    "routes": {"ell": 3, "trials": 100, "maxmu": 4},
    "katabolism-bijection": {"ell": 3, "trials": 20, "maxmu": 5},
    "charge-axioms": {"ell": 0, "trials": 500, "maxmu": 8},
    "key-oracle": {"ell": 3, "trials": 200, "maxmu": 0},
    "kostka-triple": {"ell": 4, "trials": 0, "maxmu": 6},
    "macdonald-routes": {"ell": 3, "trials": 0, "maxmu": 5},
    "symmetrize": {"ell": 3, "trials": 0, "maxmu": 5},
    "stability": {"ell": 3, "trials": 0, "maxmu": 5},
    "truncation-identities": {"ell": 3, "trials": 300, "maxmu": 0},
}

DEFAULT_SEED = 20240601


def run_suite(
    name: str,
    *,
    ell: Optional[int] = None,
    trials: Optional[int] = None,
    maxmu: Optional[int] = None,
    seed: int = DEFAULT_SEED,
) -> Report:
    """Run one suite; unset parameters take the suite's defaults."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    d = DEFAULTS[name]
    params = {
        "ell": d["ell"] if ell is None else ell,
        "trials": d["trials"] if trials is None else trials,
        "maxmu": d["maxmu"] if maxmu is None else maxmu,
    }
    rep = Report(name, seed, params)
    SUITES[name](random.Random(seed), rep, **params)
    return rep
