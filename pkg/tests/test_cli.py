import io
import json
import subprocess
import sys

import jsonschema
import pytest

from cyclerange.cli import run
from cyclerange.schemas import SCHEMAS


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


CASES = [
    ("charpoly", ["--weights", "1,2,3"]),
    ("radius", ["--weights", "sq:0,3,4,8"]),
    ("support", ["--weights", "1,2,3,4", "--t", "0.5"]),
    ("include", ["--A", "1,2,4,3", "--B", "1,3,2,4"]),
    ("include", ["--A", "1,1,1", "--B", "1,1,1,1", "--method", "grid"]),
    ("boundary", ["--weights", "1,2,3", "--points", "8"]),
    ("boundary", ["--weights", "1,0,3", "--points", "8"]),
    ("search", ["--weights", "1,2,3,4,5"]),
    ("search", ["--weights", "1,2,3,4,5", "--direction", "min", "--method", "certified"]),
    ("verify-conjecture", ["--n", "6", "--trials", "2", "--seed", "3"]),
    ("verify-conjecture", ["--weights", "1,2,3,4,5"]),
    ("extremal", ["--kind", "ngon", "--weights", "2,0.5,1"]),
    ("extremal", ["--kind", "path", "--n", "5"]),
    ("extremal", ["--kind", "frobenius", "--n", "7"]),
    ("extremal", ["--kind", "double", "--weights", "1"]),
    ("extremal", ["--kind", "double", "--weights", "1,2,3"]),
    ("families", []),
    ("families", ["--weights", "1,2,3,4,5,6"]),
    ("counterexample", []),
]


@pytest.mark.parametrize("cmd,args", CASES)
def test_json_output_matches_schema(cmd, args):
    code, out, err = call(cmd, *args, "--format", "json", "--threads", "1")
    assert code == 0, err
    jsonschema.validate(json.loads(out), SCHEMAS[cmd])


@pytest.mark.parametrize("cmd,args", CASES)
def test_text_and_csv_formats(cmd, args):
    for fmt in ("text", "csv"):
        code, out, err = call(cmd, *args, "--format", fmt, "--threads", "1")
        assert code == 0 and out.strip(), err


@pytest.mark.parametrize("cmd,args", [
    ("search", ["--weights", "1,2,3,4,5,6,7,8"]),
    ("verify-conjecture", ["--n", "7", "--trials", "2"]),
])
def test_thread_count_does_not_change_output(cmd, args):
    outs = {call(cmd, *args, "--format", "json", "--threads", t)[1] for t in ("1", "2")}
    assert len(outs) == 1


def test_values():
    code, out, _ = call("charpoly", "--weights", "sq:0,3,4,8,13,30", "--format", "json")
    doc = json.loads(out)
    assert doc["alpha"] == 0 and doc["f"][2] == -58
    code, out, _ = call("radius", "--weights", "1,1,1", "--format", "json")
    assert json.loads(out)["radius"] == pytest.approx(1.0)
    code, out, _ = call("counterexample", "--format", "json")
    doc = json.loads(out)
    assert [p["f"][4] for p in doc["polynomials"]] == [905, 865]
    assert doc["verdict"]["kind"] == "NotIncluded"


@pytest.mark.parametrize("argv,flag", [
    (["charpoly", "--weights", "1"], "--weights"),
    (["charpoly", "--weights", "1,-2"], "--weights"),
    (["support", "--weights", "1,2", "--t", "3"], "--t"),
    (["search", "--weights", "3,2,1,4"], "--weights"),
    (["search", "--weights", "1,2,3,4", "--n", "5"], "--n"),
    (["verify-conjecture"], "--n"),
    (["verify-conjecture", "--n", "12"], "--n"),
    (["extremal", "--kind", "path"], "--n"),
    (["extremal", "--kind", "double", "--weights", "1,2"], "--weights"),
    (["extremal", "--kind", "ngon", "--weights", "1,2,3"], "--weights"),
    (["families", "--weights", "1,2,3"], "--weights"),
    (["radius", "--weights", "1,2", "--threads", "0"], "--threads"),
])
def test_invalid_input_exits_2_naming_flag(argv, flag):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert flag in err


def test_argparse_errors_exit_2():
    assert call("nosuch")[0] == 2
    assert call("include", "--A", "1,2")[0] == 2


def test_check_failures_exit_1():
    assert call("extremal", "--kind", "ngon", "--weights", "1,1,1")[0] == 0
    # a verdict that fails is still a successful run for include
    assert call("include", "--A", "1,1,1", "--B", "2,2,2")[0] == 0


def test_boundary_out_file(tmp_path):
    path = tmp_path / "curve.csv"
    code, out, _ = call("boundary", "--weights", "1,2,3", "--points", "8", "--out", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["rows"] == 24
    assert path.read_text().splitlines()[0] == "theta,re,im"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cyclerange", "radius", "--weights", "1,1,1,1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "radius" in r.stdout
