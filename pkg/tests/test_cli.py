import io
import json

import pytest

from qecc_advisor.cli import run
from qecc_advisor.registry import dump_registry, load_registry

SCENARIO_1_ARGS = [
    "recommend", "--qtype", "supercond", "--max-qavail", "100", "--qorig", "1", "--multi-qgate", "no",
    "--err-type", "bit-flip", "--dep-err", "1e-4", "--gate-err", "1e-3", "--read-err", "1e-2",
]


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_recommend_scenario_1_top3():
    code, out, _ = invoke(*SCENARIO_1_ARGS, "--top", "3")
    assert code == 0
    lines = [line.split() for line in out.splitlines()]
    assert [(name.lower(), d) for name, d in lines] == [("qrep", "100"), ("surface", "10"), ("heavyh", "6")]


def test_recommend_full_list_by_default():
    _, out, _ = invoke(*SCENARIO_1_ARGS)
    assert len(out.splitlines()) == 4


def test_debug_adds_trace_only():
    _, plain, _ = invoke(*SCENARIO_1_ARGS)
    code, debug, _ = invoke(*SCENARIO_1_ARGS, "--debug")
    assert code == 0
    assert [l for l in debug.splitlines() if not l.startswith("#")] == plain.splitlines()
    assert any("realization" in l for l in debug.splitlines() if l.startswith("#"))


def test_recommend_json_round_trip():
    code, out, _ = invoke("--format", "json", *SCENARIO_1_ARGS, "--debug")
    doc = json.loads(out)
    assert code == 0
    assert [r["id"] for r in doc["recommendations"]][:3] == ["repetition", "surface", "heavy-hexagon"]
    assert doc["recommendations"][0]["max_distance"] == 100
    assert doc["scenario"]["q_type"] == "superconducting"
    assert {t["verdict"] for t in doc["trace"]} == {"passed", "eliminated"}
    # repeated invocations are byte-identical
    assert invoke("--format", "json", *SCENARIO_1_ARGS, "--debug")[1] == out


def test_recommend_json_flag_after_subcommand():
    _, out, _ = invoke(*SCENARIO_1_ARGS, "--format", "json")
    assert "trace" not in json.loads(out)


def test_recommend_csv():
    _, out, _ = invoke(*SCENARIO_1_ARGS, "--format", "csv", "--top", "2")
    assert out.splitlines()[0] == "id,max_distance,score"
    assert out.splitlines()[1].startswith("repetition,100,")


def test_invalid_budget_is_usage_error():
    args = list(SCENARIO_1_ARGS)
    args[args.index("--max-qavail") + 1] = "0"
    code, out, err = invoke(*args)
    assert code == 2
    assert "usage:" in err and out == ""


@pytest.mark.parametrize("argv", [["frobnicate"], ["recommend", "--bogus"], ["max-distance", "--code", "surface"]])
def test_unknown_or_missing_arguments(argv):
    code, _, err = invoke(*argv)
    assert code == 2 and "usage:" in err


def test_empty_recommendation_exit_zero():
    code, out, err = invoke("recommend", "--qtype", "simulation", "--max-qavail", "3", "--qorig", "1",
                            "--multi-qgate", "no", "--err-type", "all-pauli", "--dep-err", "0",
                            "--gate-err", "0", "--read-err", "0")
    assert code == 0 and out == ""
    assert "no code survives" in err


def test_max_distance():
    assert invoke("max-distance", "--code", "surface", "--budget", "600", "--qorig", "2")[:2] == (0, "17\n")
    assert invoke("max-distance", "--code", "steane", "--budget", "600", "--qorig", "2")[1] == "NA\n"
    assert invoke("max-distance", "--code", "HeavyH", "--budget", "100")[1] == "6\n"
    code, out, _ = invoke("--format", "json", "max-distance", "--code", "surface", "--budget", "3")
    assert json.loads(out)["max_distance"] == "infeasible"
    assert invoke("max-distance", "--code", "nope", "--budget", "3")[0] == 2


def test_list_and_show():
    code, out, _ = invoke("list-codes")
    assert code == 0 and len(out.splitlines()) == 9
    code, out, _ = invoke("--format", "json", "show-code", "heavy-hexagon")
    assert json.loads(out)["overhead"] == {"num": [-1, -2, 5], "den": 2}
    assert invoke("show-code", "surface")[1].startswith("id: \"surface\"")


def test_validate_registry(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(dump_registry(load_registry()))
    assert invoke("validate-registry", str(good))[:2] == (0, "ok: 9 codes\n")
    doc = json.loads(good.read_text())
    doc["codes"][0]["threshold"] = 3
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, _, err = invoke("validate-registry", str(bad))
    assert code == 3
    assert "repetition" in err and "threshold" in err


def test_custom_registry_flag(tmp_path):
    doc = json.loads(dump_registry(load_registry()))
    doc["codes"][7]["realizations"].append("rydberg")
    path = tmp_path / "reg.json"
    path.write_text(json.dumps(doc))
    args = ["--registry", str(path), "recommend", "--qtype", "rydberg", "--max-qavail", "600", "--qorig", "2",
            "--multi-qgate", "yes", "--err-type", "all-pauli", "--dep-err", "1e-4", "--gate-err", "1e-3",
            "--read-err", "1e-2"]
    _, out, _ = invoke(*args)
    assert "HeavyH" in out
    bad = tmp_path / "dup.json"
    doc["codes"].append(doc["codes"][0])
    bad.write_text(json.dumps(doc))
    assert invoke("--registry", str(bad), "list-codes")[0] == 3


def test_weights_file(tmp_path):
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"score_weights": {"dist": 0.3, "thr": 0.2, "cx": 0.2, "tg": 0.05, "dec": 0.05,
                                                  "real": 0.1, "util": 0.1, "tg_boost": 0.4}}))
    code, out, _ = invoke(*SCENARIO_1_ARGS, "--weights", str(path))
    assert code == 0 and out.splitlines()[0].startswith("QRep")
    path.write_text(json.dumps({"score_weights": {"dist": 2.0}}))
    assert invoke(*SCENARIO_1_ARGS, "--weights", str(path))[0] == 2


def test_verify():
    assert invoke("verify", "--code", "steane-7", "--claim", "distance", "--wmax", "3")[:2] == (0, "distance = 3\n")
    _, out, _ = invoke("verify", "--code", "repetition-3", "--claim", "correctable", "--t", "1")
    assert out == "corrects 1: no (witness ZII)\n"
    _, out, _ = invoke("--format", "json", "verify", "--code", "repetition-3", "--restrict", "x", "--wmax", "3")
    report = json.loads(out)
    assert report["result"] == 3 and report["witness"] == "XXX"
    _, out, _ = invoke("verify", "--code", "bacon-shor-9", "--claim", "generators")
    assert "4 generators on 9 qubits" in out
    assert invoke("verify", "--code", "shor-9", "--wmax", "9", "--cap", "100")[0] == 2


def test_verify_code_file(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"name": "rep5", "n": 5, "generators": ["ZZIII", "IZZII", "IIZZI", "IIIZZ"]}))
    assert invoke("verify", "--code-file", str(path), "--restrict", "x", "--wmax", "5")[1] == "distance = 5\n"
    path.write_text(json.dumps({"name": "bad", "n": 2, "generators": ["XI", "ZI"]}))
    assert invoke("verify", "--code-file", str(path))[0] == 2


@pytest.mark.parametrize("dataset", ["overhead", "thresholds", "radar", "ler", "required-distance"])
def test_export_bench_formats(dataset):
    code, csv_out, _ = invoke("export-bench", dataset)
    assert code == 0 and csv_out.startswith("label,x,y\n")
    code, json_out, _ = invoke("--format", "json", "export-bench", dataset)
    assert code == 0
    json.loads(json_out)


def test_export_overhead_codes():
    _, out, _ = invoke("export-bench", "overhead", "--codes", "bacon-shor", "--d-min", "3", "--d-max", "11")
    assert out.splitlines()[-1] == "bacon-shor,11,1331"
