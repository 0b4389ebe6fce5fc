import io
import json
import subprocess
import sys

import pytest

from slodowy import cli

EX1 = ["4,4,4,2,2,1,1", "5,4,3,3,2,1"]
EX2 = ["5,3,3,2", "5,4,3,1"]


def run(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        status = cli.run(list(argv), stdout=out, stderr=err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return status, out.getvalue(), err.getvalue()


def run_json(*argv):
    status, out, err = run(*argv, "--format", "json")
    assert status == 0, err
    return json.loads(out)


def test_decompose_two_factor_slice():
    data = run_json("decompose", *EX1)
    assert data["total_count"] == 12 and data["slice_dim"] == 10
    assert [(f["d"], f["dp"]) for f in data["factors"]] == [([3, 2, 1], [2, 2, 1, 1]), ([2, 1], [1, 1, 1])]
    for method in ("young", "quiver", "both"):
        assert run_json("decompose", *EX1, "--method", method) == data


def test_decompose_text_output():
    status, out, _ = run("decompose", *EX2, "--ascii")
    assert status == 0
    assert out == (
        "factor 1: d=3,2  dp=2,2,1  N=5  count=3\n"
        "###    ##\n"
        "##     ##\n"
        "       #\n"
        "\n"
        "total_count: 3\n"
        "slice_dim: 4\n"
    )


def test_count_single_factor_slice():
    assert run("count", "5,4,3,1")[:2] == (0, "60\n")
    assert run("count-slice", *EX2)[:2] == (0, "3\n")


def test_not_nested_exit_code():
    status, out, err = run("decompose", "3,3", "2,2,2")
    assert status == 1 and out == ""
    assert "NotNested" in err and len(err.strip().splitlines()) == 1


@pytest.mark.parametrize(
    "argv, name",
    [
        (["dual", "1,2"], "NotAPartition"),
        (["dual", "x"], "ParseError"),
        (["leq", "2", "2,1"], "SizeMismatch"),
        (["sl2", "1,1"], "DegenerateAmbient"),
        (["chambers", "3,2,1", "--at", "1,1,1"], "DimensionMismatch"),
        (["quiver-sample", "3,2,1", "--flag-type", "3,3"], "DimensionMismatch"),
        (["quiver-check", "/nonexistent/rep.json"], "ParseError"),
    ],
)
def test_input_errors(argv, name):
    status, _, err = run(*argv)
    assert status == 1 and err.startswith(f"error: {name}:")


def test_unknown_verb_and_flag(capsys):
    for argv in (["bogus"], ["dual", "2,1", "--nope"], []):
        with pytest.raises(SystemExit) as exc:
            cli.run(argv)
        assert exc.value.code != 0
        assert "usage:" in capsys.readouterr().err


def test_method_mismatch_exits_two(monkeypatch):
    monkeypatch.setattr(cli, "decompose_young", lambda sp: [])
    status, _, err = run("decompose", *EX1, "--method", "both")
    assert status == 2 and "InternalInconsistency" in err


def test_dual_and_leq():
    data = run_json("dual", "4,4,2,1")
    assert data == {"partition": [4, 4, 2, 1], "dual": [4, 3, 2, 2]}
    status, out, _ = run("dual", "2,1")
    assert out == "2,1\n\n██    ██\n█     █\n"
    assert run("leq", "2,2,1", "3,2")[1] == "true\n"
    assert run("leq", "3,3", "4,1,1")[1] == "false\n"


def test_dim():
    assert run_json("dim", "3,2") == {"partition": [3, 2], "orbit_dim": 16, "tilde": {"v": [3, 1], "w": [5, 0]}}
    data = run_json("dim", *EX1)
    assert data["slice_dim"] == 10 and data["v"] == [1, 1, 0, 1] and data["w"] == [2, 2, 0, 3]
    data = run_json("dim", "2,2,1", "3,2", "--trials", "3", "--seed", "4")
    assert data["sample_dim"] == data["slice_dim"] == 4


def test_chambers_and_locate():
    data = run_json("chambers", "3,2,1")
    assert len(data["chambers"]) == 6 and data["resolutions"] == 6
    assert data["chambers"][0] == {"perm": [1, 2, 3], "flag_type": [3, 2, 1]}
    assert run_json("chambers", "3,2,1", "--at=1,1")["chamber"]["flag_type"] == [3, 2, 1]
    assert run_json("chambers", "3,2,1", "--at=-1,3")["chamber"]["flag_type"] == [2, 3, 1]
    assert run_json("chambers", "3,2,1", "--at=0,0")["wall"]["ties"] == [[1, 2], [1, 3], [2, 3]]
    data = run_json("chambers", *EX1)
    assert len(data["graph"]["nodes"]) == 12 and [len(f["chambers"]) for f in data["factors"]] == [6, 2]


def test_dot_output():
    status, out, _ = run("flops", "3,2", "--format", "dot")
    assert status == 0 and out.startswith("graph flops {") and '"2,2,1" -- "2,1,2";' in out
    assert run("chambers", "3,2,1", "--dot")[1] == run("flops", "3,2,1", "--format", "dot")[1]
    status, _, err = run("count", "3,2", "--format", "dot")
    assert status == 1 and "UsageError" in err


def test_flops_json():
    data = run_json("flops", "3,2,1")
    assert len(data["nodes"]) == 6 and len(data["edges"]) == 6 and data["connected"]
    assert len(run_json("flops", *EX1)["nodes"]) == 12


def test_quiver_round_trip(tmp_path):
    sample = run_json("quiver-sample", "3,2,1", "--flag-type", "2,3,1", "--seed", "5")
    assert sample["flag_type"] == [2, 3, 1]
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(sample))
    data = run_json("quiver-check", str(path))
    assert data["on_fiber"] and data["one_stable"] and data["all_A_surjective"]
    assert data["flag_type"] == [2, 3, 1]
    data = run_json("quiver-check", str(path), "--reflect", "1")
    assert data["reflected"]["exact"] and data["reflected"]["B0A0_kept"]
    assert data["reflected"]["rep"]["v"] == [3, 1]


def test_quiver_check_from_stdin_and_unstable():
    status, out, _ = run("quiver-sample", "3,2,1", "--unstable", "--seed", "2", "--format", "json")
    status, out, err = run("quiver-check", "-", "--format", "json", stdin=out)
    data = json.loads(out)
    assert status == 0 and data["on_fiber"] and not data["one_stable"] and not data["all_A_surjective"]
    assert "theta" not in data


def test_quiver_check_off_fiber():
    rep = {"v": [1], "w": [2], "A": [], "B": [], "Gamma": [[["1", "0"]]], "Delta": [[["1"], ["0"]]]}
    status, out, _ = run("quiver-check", "-", "--format", "json", stdin=json.dumps(rep))
    assert status == 0 and json.loads(out)["on_fiber"] is False
    status, _, err = run("quiver-check", "-", "--reflect", "1", stdin=json.dumps(rep))
    assert status == 1 and "NotOnFiber" in err
    status, _, err = run("quiver-check", "-", stdin="{not json")
    assert status == 1 and "ParseError" in err


def test_sl2():
    data = run_json("sl2", "2,1")
    assert data["relations_hold"] and data["transversal"]
    assert data["slice_basis_dim"] == data["expected_slice_basis_dim"] == 4
    assert data["y"] == [["0/1", "0/1", "0/1"], ["1/1", "0/1", "0/1"], ["0/1", "0/1", "0/1"]]


def test_verify_subset():
    status, out, _ = run("verify", "examples", "tilde")
    assert status == 0
    lines = out.splitlines()
    assert lines[0].split() == ["suite", "checked", "failed", "result"]
    assert lines[1].split() == ["examples", "3", "0", "PASS"]
    status, _, err = run("verify", "nonsense")
    assert status == 1 and "UsageError" in err


def test_verify_failure_exits_two(monkeypatch):
    from slodowy import verify

    monkeypatch.setattr(verify, "check_two_factor_slice", lambda: ["broken"])
    status, out, _ = run("verify", "examples")
    assert status == 2 and "FAIL" in out and "broken" in out


def test_byte_identical_output():
    for argv in (
        ["quiver-sample", "3,2,1", "--seed", "9", "--format", "json"],
        ["verify", "quiver", "--trials", "3", "--seed", "2"],
        ["dim", "2,2,1", "3,2", "--trials", "2", "--seed", "8", "--format", "json"],
        ["decompose", *EX1],
    ):
        assert run(*argv) == run(*argv)


def test_json_keys_sorted():
    status, out, _ = run("decompose", *EX1, "--format", "json")
    data = json.loads(out)
    assert out.rstrip("\n") == json.dumps(data, sort_keys=True, indent=2)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "slodowy", "count", "5,4,3,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "60\n"


# every operation of the library modules, by name
MODULE_OPERATIONS = {
    "dual", "dominates", "orbit_dim", "count_resolutions", "render", "parse",
    "make_slice_pair", "dimension_vectors", "tilde_vectors", "decompose_quiver", "decompose_young",
    "count_slice_resolutions", "slice_dim",
    "enumerate_chambers", "locate", "flop_graph", "slice_chambers",
    "moment_map", "is_one_stable", "all_A_surjective", "theta", "from_flag", "nilpotent_partition", "reflect",
    "jordan_nilpotent", "sl2_completion", "slodowy_slice_basis", "transversality_check", "slice_sample_dim",
}  # fmt: skip

VERB_COMMANDS = {
    "dual": [["dual", "3,1"]],
    "leq": [["leq", "2,1", "3"]],
    "dim": [["dim", "3,1"], ["dim", "2,1", "3", "--trials", "2"]],
    "count": [["count", "3,1"]],
    "decompose": [["decompose", *EX2, "--method", "both"]],
    "count-slice": [["count-slice", *EX2]],
    "chambers": [["chambers", "3,2,1"], ["chambers", "3,2,1", "--at=1,2"], ["chambers", *EX2]],
    "flops": [["flops", "3,2"]],
    "quiver-sample": [["quiver-sample", "3,2,1"], ["quiver-sample", "3,2,1", "--unstable"]],
    "quiver-check": [["quiver-check", "-", "--reflect", "1"]],
    "sl2": [["sl2", "3,1"]],
    "verify": [["verify", "examples"]],
}


def test_every_operation_is_reachable(monkeypatch):
    declared = set().union(*(v.ops for v in cli.DISPATCH.values()))
    assert MODULE_OPERATIONS <= declared
    assert set(VERB_COMMANDS) == set(cli.DISPATCH)

    _, sample, _ = run("quiver-sample", "3,2,1", "--format", "json")
    for verb, commands in VERB_COMMANDS.items():
        called = set()
        with monkeypatch.context() as m:
            for name in cli.DISPATCH[verb].ops:
                original = getattr(cli, name)

                def wrapper(*args, _name=name, _f=original, **kwargs):
                    called.add(_name)
                    return _f(*args, **kwargs)

                m.setattr(cli, name, wrapper)
            for argv in commands:
                status, _, err = run(*argv, stdin=sample if verb == "quiver-check" else None)
                assert status == 0, (argv, err)
        assert called == set(cli.DISPATCH[verb].ops), verb
