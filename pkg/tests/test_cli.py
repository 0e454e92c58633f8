"""Tests for the command-line interface: JSON reports and exit codes."""

import json

import pytest

from weightcomb.cli import main
from weightcomb.glblocks import blocks
from weightcomb.partitions import d_core, d_quotient


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# Report envelope.


def test_report_envelope(capsys):
    code, report = run_json(capsys, "partition", "hooks", "3")
    assert code == 0
    assert report["schema"] == 1
    assert report["tool"].startswith("weightcomb ")
    assert report["command"] == ["partition", "hooks", "3"]
    assert report["pass"] is True


def test_byte_identical_reruns(capsys):
    argv = ["gl", "verify", "--n", "2", "--q", "4", "--eps", "+", "--ell", "3"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_version_flag(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert out.startswith("weightcomb ")


# ---------------------------------------------------------------------------
# partition commands.


def test_partition_tower(capsys):
    code, report = run_json(capsys, "partition", "tower", "2,1", "--ell", "3")
    assert code == 0
    tower = report["results"][0]["tower"]
    assert tower["total"] == 3
    assert tower["row_sizes"] == [0, 1]
    assert tower["rows"] == [[[]], [[], [1], []]]


def test_partition_defect(capsys):
    code, report = run_json(capsys, "partition", "defect", "2,1", "--ell", "3")
    assert code == 0
    assert report["results"][0] == {"defect": 1}


def test_partition_hooks(capsys):
    code, report = run_json(capsys, "partition", "hooks", "3")
    assert code == 0
    assert report["results"][0]["hooks"] == [[3], [2, 1], [1, 1, 1]]


def test_partition_core_quotient_match_library(capsys):
    code, report = run_json(capsys, "partition", "core", "4,2,1", "--d", "3")
    assert code == 0
    assert tuple(report["results"][0]["core"]) == d_core((4, 2, 1), 3)
    code, report = run_json(capsys, "partition", "quotient", "2,2", "--d", "2")
    assert code == 0
    got = tuple(tuple(p) for p in report["results"][0]["quotient"])
    assert got == d_quotient((2, 2), 2)


def test_partition_empty_input(capsys):
    code, report = run_json(capsys, "partition", "defect", "0", "--ell", "3")
    assert code == 0
    assert report["results"][0] == {"defect": 0}


def test_partition_parse_errors(capsys):
    for bad in ("1,2,bogus", "1,2", "2,0", "-3"):
        code, _, err = run(capsys, "partition", "core", bad, "--d", "2")
        assert code == 2, bad
        assert err.strip()


def test_partition_core_rejects_d_one(capsys):
    code, _, err = run(capsys, "partition", "core", "2,1", "--d", "1")
    assert code == 2 and "d" in err


# ---------------------------------------------------------------------------
# young commands.


def test_young_verify_sym(capsys):
    code, report = run_json(
        capsys, "young", "verify", "--kind", "sym", "--n", "4", "--ell", "2"
    )
    assert code == 0
    result = report["results"][0]
    assert result["count_irr"] == result["count_triples"] == 5
    assert result["pass"] is True


def test_young_verify_sym_12(capsys):
    code, report = run_json(
        capsys, "young", "verify", "--kind", "sym", "--n", "12", "--ell", "3"
    )
    assert code == 0
    assert report["results"][0]["count_irr"] == 77


def test_young_verify_typed(capsys):
    code, report = run_json(
        capsys, "young", "verify", "--kind", "typed",
        "--e", "1", "--n", "2", "--ell", "3",
    )
    assert code == 0
    assert report["results"][0]["count_triples"] == 4


def test_young_verify_wreath_needs_e(capsys):
    code, _, err = run(
        capsys, "young", "verify", "--kind", "wreath", "--n", "3", "--ell", "5"
    )
    assert code == 2 and err.strip()


# ---------------------------------------------------------------------------
# gl commands.


def test_gl_blocks(capsys):
    code, report = run_json(
        capsys, "gl", "blocks", "--n", "2", "--q", "4", "--eps", "+", "--ell", "3"
    )
    assert code == 0
    assert len(report["results"]) == 3
    assert report["results"][0]["s"] == [["0/1", 2]]


def test_gl_weights_principal(capsys):
    code, report = run_json(
        capsys, "gl", "weights", "--n", "9", "--q", "4", "--eps", "+",
        "--ell", "3", "--block", "principal",
    )
    assert code == 0
    result = report["results"][0]
    assert result["generic_count"] == result["af_count"] == 9
    assert result["generic"][0] == {"generic": [9]}
    assert result["af"][0]["af"]["gamma"] == 2


def test_gl_weights_by_index(capsys):
    all_blocks = blocks(2, 4, 1, 3)
    for index, block in enumerate(all_blocks):
        code, report = run_json(
            capsys, "gl", "weights", "--n", "2", "--q", "4", "--eps", "+",
            "--ell", "3", "--block", str(index),
        )
        assert code == 0
        assert report["results"][0]["block"] == json.loads(
            json.dumps(block.to_json_dict())
        )
    code, _, err = run(
        capsys, "gl", "weights", "--n", "2", "--q", "4", "--eps", "+",
        "--ell", "3", "--block", "99",
    )
    assert code == 2 and "out of range" in err
    code, _, err = run(
        capsys, "gl", "weights", "--n", "2", "--q", "4", "--eps", "+",
        "--ell", "3", "--block", "bogus",
    )
    assert code == 2


def test_gl_verify(capsys):
    code, report = run_json(
        capsys, "gl", "verify", "--n", "3", "--q", "4", "--eps", "+", "--ell", "3"
    )
    assert code == 0
    result = report["results"][0]
    assert result["pass"] is True
    assert result["s_count"] == 5
    assert result["weights_total"] == result["af_total"] == 5


def test_gl_eps_forms(capsys):
    for eps in ("-", "-1"):
        code, report = run_json(
            capsys, "gl", "verify", "--n", "2", "--q", "2", "--eps", eps,
            "--ell", "5",
        )
        assert code == 0
        assert report["params"]["eps"] == "-"


def test_gl_exit_codes(capsys):
    code, _, err = run(
        capsys, "gl", "verify", "--n", "7", "--q", "2", "--eps", "+", "--ell", "3"
    )
    assert code == 3 and "bound" in err.lower()
    code, _, _ = run(
        capsys, "gl", "verify", "--n", "2", "--q", "5", "--eps", "-", "--ell", "2"
    )
    assert code == 2
    code, _, _ = run(
        capsys, "gl", "verify", "--n", "2", "--q", "9", "--eps", "+", "--ell", "3"
    )
    assert code == 2  # ell divides q
    code, _, _ = run(capsys, "gl", "verify", "--n", "2", "--q", "4", "--eps", "*",
                     "--ell", "3")
    assert code == 2


# ---------------------------------------------------------------------------
# hook command.


def test_hook_command(capsys):
    code, report = run_json(
        capsys, "hook", "--n", "9", "--q", "4", "--eps", "+", "--ell", "3"
    )
    assert code == 0
    result = report["results"][0]
    assert result["mode"] == "hooks" and len(result["partitions"]) == 9
    code, _, _ = run(capsys, "hook", "--n", "1", "--q", "4", "--eps", "+",
                     "--ell", "3")
    assert code == 2


# ---------------------------------------------------------------------------
# campaign command.


def test_campaign_default_grid(capsys):
    code, report = run_json(capsys, "campaign")
    assert code == 0
    assert report["pass"] is True
    assert report["params"]["config"] == "default"
    ops = [r["op"] for r in report["results"]]
    assert ops[0] == "hook_scan" and ops[-1] == "gl_grid"
    grid = report["results"][-1]
    assert grid["points"] == 228 and grid["pass"] and grid["failures"] == []


def test_campaign_empty_grid(capsys, tmp_path):
    config = tmp_path / "empty.json"
    config.write_text('{"items": []}')
    code, report = run_json(capsys, "campaign", str(config))
    assert code == 0
    assert report["pass"] is True and report["results"] == []


def test_campaign_malformed_configs(capsys, tmp_path):
    cases = [
        "not json {",
        '{"no_items": 1}',
        '{"items": [42]}',
        '{"items": [{"op": "unknown_op"}]}',
        '{"items": [{"op": "gl_verify", "n": "two", "q": 4, "ell": 3}]}',
    ]
    for pos, text in enumerate(cases):
        config = tmp_path / f"bad{pos}.json"
        config.write_text(text)
        code, _, err = run(capsys, "campaign", str(config))
        assert code == 2, text
        assert err.strip(), text
    code, _, err = run(capsys, "campaign", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err


def test_campaign_custom_items(capsys, tmp_path):
    config = tmp_path / "items.json"
    config.write_text(json.dumps({
        "items": [
            {"op": "gl_verify", "n": 2, "q": 4, "eps": "+", "ell": 3},
            {"op": "young_verify", "kind": "sym", "n": 4, "ell": 2},
            {"op": "shape_identity", "delta_max": 3, "ells": [3]},
            {"op": "hook_scan", "n_max": 3},
        ]
    }))
    code, report = run_json(capsys, "campaign", str(config))
    assert code == 0
    results = report["results"]
    assert [r["op"] for r in results] == [
        "gl_verify", "young_verify", "shape_identity", "hook_scan",
    ]
    assert results[0]["blocks"] == 3 and results[0]["pass"]
    assert results[1]["count_irr"] == 5
    assert all(r["pass"] for r in results)


def test_campaign_bound_exceeded_item(capsys, tmp_path):
    config = tmp_path / "big.json"
    config.write_text(
        '{"items": [{"op": "gl_verify", "n": 7, "q": 2, "eps": "+", "ell": 3}]}'
    )
    code, _, err = run(capsys, "campaign", str(config))
    assert code == 3 and "bound" in err.lower()


def test_campaign_outputs_and_parallel_stability(capsys, tmp_path):
    config = tmp_path / "items.json"
    config.write_text(json.dumps({
        "items": [
            {"op": "gl_verify", "n": 2, "q": 4, "eps": "+", "ell": 3},
            {"op": "young_verify", "kind": "sym", "n": 6, "ell": 2},
            {"op": "shape_identity", "delta_max": 4, "ells": [3, 5]},
        ]
    }))
    out_file = tmp_path / "report.json"
    csv_file = tmp_path / "summary.csv"
    code, report = run_json(
        capsys, "campaign", str(config),
        "--out", str(out_file), "--csv", str(csv_file),
    )
    assert code == 0
    assert json.loads(out_file.read_text()) == report
    lines = csv_file.read_text().strip().splitlines()
    assert lines[0] == "index,op,pass"
    assert len(lines) == 4 and all(line.endswith("True") for line in lines[1:])
    # parallel run assembles the same results in the same order
    code, parallel = run_json(capsys, "campaign", str(config), "--jobs", "3")
    assert code == 0
    assert parallel["results"] == report["results"]


# ---------------------------------------------------------------------------
# Usage errors.


def test_unknown_command(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "partition", "nonsense", "2,1")[0] == 2
    assert run(capsys)[0] == 2
