import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from nscatalan.cli import main

from test_catalan import KEY_POSITIVE

GOLDEN = Path(__file__).parent / "golden"

KEY_POSITIVE_TERMS = {(q, tuple(int(ch) for ch in al)) for (q, al) in KEY_POSITIVE}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


class TestCatalan:
    def test_small_key_example(self, capsys):
        obj = run_json(capsys, "catalan", "--nr", "1,1,1", "--gamma", "1,1,0", "--w", "w0", "--basis", "key")
        assert obj["terms"] == [
            {"q": 0, "alpha": [0, 1, 1], "coeff": 1},
            {"q": 1, "alpha": [0, 0, 2], "coeff": 1},
        ]
        assert obj["command"] == "catalan" and obj["basis"] == "key"

    def test_constant(self, capsys):
        obj = run_json(capsys, "catalan", "--nr", "3,2,1", "--gamma", "0,0,0", "--w", "id")
        assert obj["terms"] == [{"q": 0, "alpha": [0, 0, 0], "coeff": 1}]
        assert obj["monomial"] == [{"q": 0, "exp": [0, 0, 0], "coeff": 1}]
        code, out, _ = run(capsys, "catalan", "--nr", "3,2,1", "--gamma", "0,0,0", "--w", "id")
        assert code == 0 and out.strip() == "k[000]"

    def test_key_positive_example(self, capsys):
        obj = run_json(capsys, "catalan", "--nr", "2,2,2,2,1", "--gamma", "2,2,2,1,1", "--w", "3,4,3", "--basis", "key")
        got = [(t["q"], tuple(t["alpha"])) for t in obj["terms"]]
        assert all(t["coeff"] == 1 for t in obj["terms"])
        assert len(got) == 14 and set(got) == KEY_POSITIVE_TERMS
        assert obj["tame"] is True

    def test_schur_and_routes(self, capsys):
        obj = run_json(
            capsys, "catalan", "--nr", "2,2,2,2,1", "--gamma", "2,2,2,1,1", "--basis", "schur", "--route", "both"
        )
        assert len(obj["terms"]) == 14
        assert {"q": 1, "lambda": [3, 2, 2, 1, 0], "coeff": 1} in obj["terms"]
        assert {"q": 5, "lambda": [5, 3, 0, 0, 0], "coeff": 1} in obj["terms"]

    def test_roots_input(self, capsys):
        a = run_json(capsys, "catalan", "--roots", "1:2-3;2:3-3", "--gamma", "1,1,0")
        b = run_json(capsys, "catalan", "--nr", "1,1,1", "--gamma", "1,1,0")
        assert a["terms"] == b["terms"]

    def test_golden(self, capsys):
        obj = run_json(capsys, "catalan", "--nr", "1,1,1", "--gamma", "2,1,1", "--w", "1,2")
        assert obj == json.loads((GOLDEN / "catalan_211_s1s2.json").read_text())


class TestErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["catalan", "--nr", "1,x,1", "--gamma", "1,1,0"],
            ["catalan", "--nr", "1,1,1", "--gamma", "1,1"],
            ["catalan", "--nr", "1,1,1", "--gamma", "1,1,0", "--w", "5"],
            ["catalan", "--nr", "1,1,1", "--gamma", "1,1,0", "--w", "1", "--basis", "schur"],
            ["catalan", "--nr", "1,1,1", "--gamma", "1,1,0", "--w", "id", "--route", "rotation"],
            ["crystal", "dark", "--mu", "1,2", "--w", "id;id"],
            ["crystal", "dark", "--mu", "1,1", "--w", "id"],
            ["macdonald", "--alpha", "1,-1"],
            ["katabolize", "--tabloid", "1a//3", "--w", "id"],
        ],
    )
    def test_usage_errors_exit_2(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert "error:" in err

    def test_argparse_errors_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "no-such-suite"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_positional_message(self, capsys):
        _, _, err = run(capsys, "catalan", "--nr", "1,1,1", "--gamma", "1,x,0")
        assert "entry 2" in err


class TestCrystal:
    def test_single_box_crystal(self, capsys):
        obj = run_json_crystal(capsys, "--mu", "1", "--w", "2,1")
        assert obj["elements"] == ["1", "2", "3"]

    def test_empty(self, capsys):
        obj = run_json_crystal(capsys, "--mu", "0", "--w", "id")
        assert obj["elements"] == [""] and obj["size"] == 1

    def test_full_cube_crystal(self, capsys):
        obj = run_json_crystal(capsys, "--mu", "1,1,1", "--w", "w0;2,1;2,1", "--ell", "3")
        assert obj["size"] == 27

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "crystal", "dark", "--mu", "2,1,1", "--w", "id;2,1;2,1", "--emit", "dot")
        assert code == 0
        assert out.startswith("digraph dark {") and out.rstrip().endswith("}")
        assert 'label="f0", style=dashed' in out
        assert out.count(";") - 1 >= 9  # 9 nodes plus edges

    def test_golden(self, capsys):
        obj = run_json_crystal(capsys, "--mu", "1,1", "--w", "1;2,1")
        assert obj == json.loads((GOLDEN / "crystal_11_s1_s2s1.json").read_text())


def run_json_crystal(capsys, *argv):
    code, out, err = run(capsys, "crystal", "dark", *argv, "--emit", "json")
    assert code == 0, err
    return json.loads(out)


class TestKatabolize:
    def test_trace(self, capsys):
        obj = run_json(capsys, "katabolize", "--tabloid", "112//3", "--w", "id;2,1;2,1", "--trace")
        assert obj["katabolizable"] is True
        assert [s["tabloid"] for s in obj["trace"]][:3] == ["112//3", "112//3", "/2/1"]

    def test_text(self, capsys):
        code, out, _ = run(capsys, "katabolize", "--tabloid", "1//12", "--w", "id;2,1", "--trace")
        assert code == 0
        assert out.splitlines()[0].startswith("start")
        assert out.strip().splitlines()[-1].startswith("katabolizable:")

    def test_rejection(self, capsys):
        obj = run_json(capsys, "katabolize", "--tabloid", "11114447/2225556/333667////", "--w", "id;6,5,4,3,2;6,5,4,3,2;6,5,4,3;6,5,4,3;6,5,4,3,2;6,5,4,3,2,1", "--ell", "7")
        assert obj["katabolizable"] is False


class TestMacdonald:
    def test_0302_all_routes(self, capsys):
        obj = run_json(capsys, "macdonald", "--alpha", "0,3,0,2", "--route", "all")
        assert obj["agree"] is True and obj["routes"] == ["recursion", "operator", "catalan"]
        assert {(t["q"], tuple(t["alpha"])) for t in obj["terms"]} == {
            (1, (1, 1, 1, 2)),
            (2, (0, 1, 2, 2)),
            (2, (1, 2, 1, 1)),
            (3, (0, 2, 1, 2)),
            (3, (0, 3, 1, 1)),
            (4, (0, 3, 0, 2)),
        }

    def test_E_version(self, capsys):
        obj = run_json(capsys, "macdonald", "--alpha", "3,0,0", "--version", "E")
        assert obj["terms"] == [
            {"q": 0, "alpha": [3, 0, 0], "coeff": 1},
            {"q": 1, "alpha": [2, 0, 1], "coeff": 1},
            {"q": 2, "alpha": [1, 0, 2], "coeff": 1},
            {"q": 3, "alpha": [1, 1, 1], "coeff": 1},
        ]


class TestVerify:
    def test_pass_and_determinism(self, capsys):
        argv = ["verify", "--suite", "rotation", "--ell", "3", "--trials", "30", "--seed", "42", "--json"]
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2
        obj = json.loads(out1)
        assert obj["failures"] == 0 and obj["seed"] == 42 and obj["trials"] == 30

    def test_charge_axioms(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "charge-axioms", "--trials", "100")
        assert code == 0 and "failures: 0" in out

    def test_kostka(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "kostka-triple", "--ell", "3", "--maxmu", "5")
        assert code == 0 and "failures: 0" in out


def test_module_entry_point():
    env = dict(os.environ)
    res = subprocess.run(
        [sys.executable, "-m", "nscatalan", "catalan", "--nr", "1,1,1", "--gamma", "1,1,0", "--json"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["terms"][1] == {"q": 1, "alpha": [0, 0, 2], "coeff": 1}
