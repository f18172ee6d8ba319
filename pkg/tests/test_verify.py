import json

import pytest

from nscatalan.verify import DEFAULT_SEED, SUITES, Report, compositions, partitions, run_suite

SMALL = {
    "rotation": dict(ell=3, trials=40),
    "routes": dict(ell=3, trials=15, maxmu=3),
    "katabolism-bijection": dict(ell=3, trials=3, maxmu=3),
    "charge-axioms": dict(trials=80, maxmu=6),
    "key-oracle": dict(ell=3, trials=30),
    "kostka-triple": dict(ell=3, maxmu=4),
    "macdonald-routes": dict(ell=3, maxmu=3),
    "symmetrize": dict(ell=3, maxmu=3),
    "stability": dict(ell=2, maxmu=4),
    "truncation-identities": dict(ell=3, trials=30),
}


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_small(name):
    rep = run_suite(name, **SMALL[name])
    assert rep.trials > 0
    assert rep.passed, rep.counterexamples


def test_all_suites_have_small_params():
    assert set(SMALL) == set(SUITES)


def test_determinism():
    a = run_suite("charge-axioms", trials=40, seed=5).to_json_obj()
    b = run_suite("charge-axioms", trials=40, seed=5).to_json_obj()
    assert json.dumps(a) == json.dumps(b)
    assert a["seed"] == 5
    assert run_suite("charge-axioms", trials=1).seed == DEFAULT_SEED


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_report_records_counterexamples():
    rep = Report("demo", 0, {})
    rep.record(True, "a", lambda: "never evaluated")
    rep.record(False, "b", lambda: "x=1")
    assert rep.trials == 2 and rep.failures == 1 and not rep.passed
    assert rep.counterexamples == ["[b] x=1"]
    assert rep.checks == {"a": 1, "b": 1}


def test_helpers():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [()]
    assert len(compositions(3, 3)) == 10
    assert compositions(1, 0) == []
