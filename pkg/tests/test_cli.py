"""Golden-file tests for every subcommand.

Each case stores ``exit <status>`` followed by stdout in ``golden/<name>.txt``.
Set ``RINGWORDS_UPDATE_GOLDEN=1`` to rewrite the files after an intended
output change, then review the diff.
"""

import json
import os
from pathlib import Path

import pytest

from ringwords import cli

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
UPDATE = os.environ.get("RINGWORDS_UPDATE_GOLDEN") == "1"

CASES = {
    "lyndon_check": "lyndon check ba",
    "lyndon_check_negative": "lyndon check abab",
    "lyndon_gen": "lyndon gen 4",
    "lyndon_gen_ternary": "lyndon gen 3 --alphabet abc",
    "lyndon_factor": "lyndon factor abbab",
    "lyndon_bracket": "lyndon bracket bba --expand",
    "lyndon_bracket_negative": "lyndon bracket ab",
    "fgf": "fgf abbab",
    "fgf_none": "fgf ab",
    "poly_reduce": ["poly", "reduce", "yyx + 2*x", "-r", "yx - xy", "--trace"],
    "poly_complete": "poly complete --relations idempotent.txt",
    "poly_complete_bound": ["poly", "complete", "-r", "xyx - yxy", "--max-deg", "5"],
    "poly_member": ["poly", "member", "yyx - xyy", "--relations", "commutator.txt", "--trace"],
    "poly_member_negative": ["poly", "member", "x", "--relations", "commutator.txt"],
    "poly_member_unknown": ["poly", "member", "xyx", "-r", "xyx - yxy", "--max-deg", "4"],
    "diamond": "diamond diamond.txt",
    "diamond_negative": "diamond peak.txt",
    "auto_build": "auto build --forbid yy",
    "auto_build_dot": "auto build --forbid-file forbidden.txt --dot",
    "auto_growth": "auto growth --forbid yy -n 6",
    "auto_classify": "auto classify --forbid yy",
    "auto_classify_polynomial": "auto classify --forbid yx",
    "height_check": "height check abab -n 2",
    "height_check_negative": "height check aabbb -n 2",
    "height_survey": "height survey -n 2 --max-len 5",
    "height_survey_bound": "height survey -n 3 --max-len 30",
    "morph_apply": "morph apply thue-binary aab",
    "morph_apply_file": "morph apply thue.morph abba",
    "morph_powerfree": "morph powerfree abcacb",
    "morph_powerfree_negative": "morph powerfree aabaab -k 2",
    "morph_crochemore": "morph crochemore thue-ternary",
    "morph_thue_verify": "morph thue-verify --max-len 8 --ternary-len 5",
    "group_cancel": "group cancel genus2",
    "group_cancel_negative": "group cancel torus.pres",
    "group_dehn": ["group", "dehn", "genus2", "a b a- b- c d c- d-"],
    "group_dehn_negative": "group dehn genus2 a",
    "group_dehn_unsupported": "group dehn torus.pres a",
    "group_sample": "--seed 3 group sample genus2 --count 25",
    "vdw": "vdw 3 2 --max 20",
    "vdw_bound": "vdw 3 2 --max 6",
    "json_lyndon_factor": "--json lyndon factor abbab",
    "json_poly_member": ["--json", "poly", "member", "yyx - xyy", "-r", "yx - xy"],
    "json_auto_classify": "auto classify --forbid yx --json",
    "json_group_dehn": ["--json", "group", "dehn", "genus2", "b a b-"],
    "json_vdw": "--json vdw 3 2 --max 20",
    "json_height_check": "--json height check ba -n 2",
}


def run(argv, capsys):
    status = cli.main(argv.split() if isinstance(argv, str) else argv)
    out = capsys.readouterr()
    return status, out.out, out.err


@pytest.fixture(autouse=True)
def _in_data_dir(monkeypatch):
    monkeypatch.chdir(HERE / "data")


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    status, out, err = run(CASES[name], capsys)
    got = f"exit {status}\n{out}"
    path = GOLDEN / f"{name}.txt"
    if UPDATE:
        path.write_text(got)
    assert got == path.read_text()
    assert err == ""


@pytest.mark.parametrize("name", [n for n in CASES if n.startswith("json_")])
def test_json_envelope(name, capsys):
    _, out, _ = run(CASES[name], capsys)
    env = json.loads(out)
    assert set(env) <= {"command", "inputs", "result", "certificate"}
    assert {"command", "inputs", "result"} <= set(env)
    assert json.loads(json.dumps(env)) == env


def test_examples_from_contract(capsys):
    assert run("lyndon check ba", capsys)[:2] == (0, "regular\n")
    status, out, _ = run("vdw 3 2 --max 20", capsys)
    assert status == 0 and out.startswith("W(3,2) = 9\n")
    assert run("auto classify --forbid yy", capsys)[:2] == (0, "exponential\n")


def test_membership_certificate_replays(capsys):
    from ringwords.freealg import parse_poly
    from ringwords.rewrite import ReductionTrace, RelationSet

    _, out, _ = run(CASES["json_poly_member"], capsys)
    env = json.loads(out)
    basis = RelationSet.of(env["certificate"]["basis"])
    rows = env["certificate"]["trace"]
    steps = ReductionTrace.parse_steps("".join(f"{r}, {a or '1'}, {b or '1'}, {c}\n" for r, a, b, c in rows))
    assert ReductionTrace(parse_poly("yyx - xyy"), steps, None).replay(basis) == parse_poly("0")


@pytest.mark.parametrize(
    "argv, where",
    [
        ("poly complete --relations bad_relations.txt", "line 2, column 5"),
        ("diamond bad_edges.txt", "line 2, column 1"),
        ("auto classify --forbid-file bad_forbidden.txt", "line 2, column 2"),
        ("morph apply bad.morph ab", "line 2, column 1"),
        ("group cancel bad.pres", "line 2, column"),
    ],
)
def test_malformed_files_exit_2_with_position(argv, where, capsys):
    status, out, err = run(argv, capsys)
    assert status == 2 and out == ""
    assert where in err


@pytest.mark.parametrize(
    "argv",
    [
        "diamond cycle.txt",
        "diamond missing.txt",
        "lyndon check abc",
        "lyndon gen 0",
        "poly reduce x",
        "height check ab -n 0",
        "morph apply thue-binary abc",
        ["group", "dehn", "genus2", "a z"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    status, out, err = run(argv, capsys)
    assert status == 2 and err.startswith("error:")


def test_usage_errors_exit_2(capsys):
    for argv in ([], ["nosuch"], ["vdw", "3"], ["morph", "powerfree", "ab", "-k", "4"]):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_flag_position_is_free(capsys):
    a = run("--json lyndon check ba", capsys)
    b = run("lyndon check ba --json", capsys)
    c = run("lyndon --json check ba", capsys)
    assert a == b == c
