import io
import json

import pytest

from conftest import CUBIC, SURFACE, XYZ
from essvars import homogenize, parse, substitute
from essvars.cli import CliRequest, main, run
from session import GOLDEN, run_cli, transcript


def call(command, expr, **kw):
    out, err = io.StringIO(), io.StringIO()
    code = run(CliRequest(command, expr, **kw), out, err)
    return code, out.getvalue(), err.getvalue()


def test_nessvar_text():
    assert call("nessvar", CUBIC, vars=list(XYZ)) == (0, "2\n" + "-" * 31 + "\n", "")


def test_essvar_spans_session_output():
    code, out, _ = call("essvar", CUBIC, vars=list(XYZ))
    listed = out.splitlines()[0].strip("[]").split(", ")
    assert [parse(s, XYZ) for s in listed] == [parse("x - z", XYZ), parse("y + z", XYZ)]


def test_newpres_with_basis():
    code, out, _ = call("newpres", CUBIC, vars=list(XYZ), basis=["y+z", "x-z"])
    assert (code, out.splitlines()[0]) == (0, "y[1]y[2]^2 + y[2]^3")


def test_cylinder_text():
    code, out, _ = call("cylinder", SURFACE, vars=list(XYZ))
    lines = out.splitlines()
    assert code == 0
    assert lines[:2] == ["cylinder: yes", "n_ess(f^h): 3"]


@pytest.mark.parametrize("command", ["nessvar", "essvar", "newpres", "cylinder"])
def test_json_agrees_with_text(command):
    _, text, _ = call(command, SURFACE, vars=list(XYZ))
    _, raw, _ = call(command, SURFACE, vars=list(XYZ), format="json")
    data = json.loads(raw)
    lines = [ln for ln in text.splitlines() if not ln.startswith("-- ")][:-1]
    assert data["command"] == command
    if command == "nessvar":
        assert lines == [str(data["n_ess"])]
        assert data["homogenized_with"] == "t"
    elif command == "essvar":
        assert lines == ["[" + ", ".join(data["essential_vars"]) + "]"]
        assert data["n_ess"] == len(data["essential_vars"]) == 3
    elif command == "newpres":
        assert lines == [data["g"]]
        assert len(data["change"]["forward"]) == 4
        assert all(isinstance(q, str) for row in data["change"]["backward"] for q in row)
    else:
        cyl = data["cylinder"]
        assert lines[0] == "cylinder: yes" and cyl["is_cylinder"] is True
        assert lines[1] == f"n_ess(f^h): {cyl['n_ess_h']}"
        assert lines[2] == "essential variables: [" + ", ".join(cyl["essential_vars_h"]) + "]"
        assert lines[3] == "ruling direction: (" + ", ".join(cyl["ruling_direction"]) + ")"


def test_json_omits_absent_fields():
    _, raw, _ = call("nessvar", CUBIC, vars=list(XYZ), format="json")
    assert set(json.loads(raw)) == {"command", "variables", "n_ess"}


def test_newpres_output_resubstitutes_to_input():
    _, raw, _ = call("newpres", SURFACE, vars=list(XYZ), format="json")
    data = json.loads(raw)
    names = data["variables"]
    g = parse(data["g"], [f"y[{i}]" for i in range(1, data["n_ess"] + 1)])
    forms = [parse(s, names) for s in data["essential_vars"]]
    assert substitute(g, forms) == homogenize(parse(SURFACE, XYZ), "t")


def test_verify_command():
    assert call("verify", CUBIC, vars=list(XYZ), basis=["y+z", "x-z"], g="y[1]y[2]^2 + y[2]^3")[0] == 0
    assert call("verify", CUBIC, vars=list(XYZ), basis=["y+z", "x-z"], g="y[1]y[2]^2")[0] == 1
    assert call("verify", CUBIC, vars=list(XYZ))[0] == 0
    assert call("verify", CUBIC, vars=list(XYZ), g="y[1]^3 + y[1]^2y[2]")[0] == 0


def test_exit_codes():
    code, _, err = call("nessvar", "x^2 + * y")
    assert code == 2 and "position 6" in err
    assert call("nessvar", "x + w", vars=["x"])[0] == 2
    assert call("nessvar", "x^2 + y", homogenize_auto=False)[0] == 3
    assert call("newpres", CUBIC, vars=list(XYZ), basis=["x", "y"])[0] == 3
    assert call("cylinder", "0")[0] == 3


def test_equation_input():
    assert call("nessvar", "x^2 + y^2 = z^2", vars=list(XYZ))[1].startswith("3\n")
    code, _, err = call("nessvar", "x = y +", vars=["x", "y"])
    assert code == 2 and "position 7" in err


def test_main_reads_stdin_and_file(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(CUBIC + ";\n"))
    assert main(["nessvar", "--vars", "x,y,z"]) == 0
    assert capsys.readouterr().out.startswith("2\n")
    path = tmp_path / "f.txt"
    path.write_text(CUBIC)
    assert main(["essvar", "--file", str(path), "--vars", "x,y,z"]) == 0
    assert capsys.readouterr().out.startswith("[x - z, y + z]\n")
    with pytest.raises(SystemExit) as info:
        main(["nessvar", CUBIC, "--file", str(path)])
    assert info.value.code == 2


def test_byte_determinism():
    args = ["newpres", SURFACE, "--vars", "x,y,z", "--format", "json", "-v"]
    first = run_cli(args)
    assert first.returncode == 0
    assert run_cli(args).stdout == first.stdout


def test_golden_session():
    assert transcript() == GOLDEN.read_text()
