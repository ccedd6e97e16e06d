import json

import mpmath
import pytest

from cli.commands import HANDLERS, parse_q
from cli.main import main
from cli.renderers import CommandResult, complex_fields, render_csv
from core.exceptions import ConvergenceError, DomainError


def run_json(capsys, argv: list[str]) -> dict:
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)


def test_series_command(capsys) -> None:
    document = run_json(capsys, ["series", "t-cy", "--order", "5/2"])
    assert document["schema"] == 1
    assert document["command"] == "series"
    assert document["kind"] == "t-cy"
    assert [1, 2, 30, 1, 0] in document["terms"]


def test_global_flags_before_and_after_command(capsys) -> None:
    before = run_json(capsys, ["--order", "3", "series", "i-cy"])
    after = run_json(capsys, ["series", "i-cy", "--order", "3"])
    assert before["order"] == after["order"] == [3, 1]


def test_gw_command(capsys) -> None:
    document = run_json(capsys, ["gw", "--max-degree", "2"])
    assert document["entries"] == [[1, 1, 2875, 1], [2, 1, 4876875, 8]]


def test_reduced_disk_table_as_csv(capsys) -> None:
    argv = ["disk", "--max-degree", "3", "--reduced", "--format", "csv"]
    assert main(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        "degree_num,degree_den,value_num,value_den",
        "1,1,30,1",
        "3,1,1530,1",
    ]


def test_pf_check_command(capsys) -> None:
    document = run_json(capsys, ["pf-check", "extended", "--order", "6"])
    assert document["passed"]
    assert len(document["checks"]) == 5


def test_glsm_command(capsys) -> None:
    document = run_json(capsys, ["glsm", "inspect", "--zeta", "-1"])
    assert document["zeta"] == -1
    assert document["minimal_anticones"] == [[6], [8]]
    assert document["fan_relation"] == [1, 1, 1, 1, 1, -5, 1, -1]
    assert len(document["box"]) == 11
    assert document["state_space_poincare"] == {
        "0": 2,
        "2": 2,
        "3": 408,
        "4": 2,
        "6": 2,
    }


def test_glsm_loop_spaces(capsys) -> None:
    document = run_json(
        capsys, ["glsm", "inspect", "--degrees", "1,1/2"]
    )
    dims = [space["virtual_dim"] for space in document["loop_spaces"]]
    assert dims == [4, 2]


def test_brane_decompose(capsys) -> None:
    document = run_json(capsys, ["brane", "decompose"])
    assert document["g"] == {"2": 16}
    assert document["f"] == {"-2": 15, "-1": -10, "1": 10, "2": -15}


def test_brane_check_reports_window(capsys) -> None:
    argv = ["brane", "check", "--brane", '{"3": 1}', "--offset", "1/2"]
    document = run_json(capsys, argv)
    assert document["label"] == "inline"
    assert document["window"]["half_width"] == [3, 1]
    assert not document["window"]["passed"]
    assert document["window"]["violations"] == [3]


def test_lg_command(capsys) -> None:
    document = run_json(capsys, ["lg", "--order", "8"])
    assert document["kind"] == "disk_lg"
    assert document["conjectural"] is True
    assert [1, 1, 1, 1, 0] in document["mirror_map"]["terms"]


def test_wallcross_command(capsys) -> None:
    argv = ["wallcross", "--q", "-1e4j", "--bits", "64"]
    document = run_json(capsys, argv)
    assert document["convention"] == "principal"
    assert float(document["rel_difference"]) < 1e-12


def test_oscillatory_command(capsys) -> None:
    document = run_json(capsys, ["oscillatory", "--m-max", "3"])
    assert document["passed"]
    assert len(document["checks"]) == 8


def test_output_and_plot_files(tmp_path, capsys) -> None:
    output = tmp_path / "table.json"
    plot = tmp_path / "plot.csv"
    argv = [
        "gw",
        "--max-degree",
        "1",
        "--output",
        str(output),
        "--emit-plot-data",
        str(plot),
    ]
    assert main(argv) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(output.read_text(encoding="utf-8"))["kind"] == (
        "gw_closed"
    )
    assert plot.read_text(encoding="utf-8").splitlines() == [
        "x,y",
        "1.0,2875.0",
    ]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["series", "x-lg"],
        ["--order", "abc", "series", "t-cy"],
        ["glsm", "inspect", "--zeta", "2"],
        ["central-charge"],
    ],
)
def test_usage_errors(argv: list[str], capsys) -> None:
    assert main(argv) == 64
    assert "ошибка" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["series", "i-cy", "--k", "7"],
        ["brane", "decompose", "--brane", "structure"],
        ["brane", "check", "--brane", "d0"],
        ["central-charge", "--q", "0"],
    ],
)
def test_domain_errors(argv: list[str]) -> None:
    assert main(argv) == 1


@pytest.mark.parametrize(
    "brane", ['{"2": 16.9}', '{"2": 1.5, "0": true}', '{"2": "16"}']
)
def test_inline_brane_with_inexact_coefficients(brane: str, capsys) -> None:
    assert main(["brane", "show", "--brane", brane]) == 1
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("flag", ["--output", "--emit-plot-data"])
def test_unwritable_output_path(flag: str, tmp_path, caplog) -> None:
    target = tmp_path / "missing" / "table.csv"
    assert main(["gw", "--max-degree", "1", flag, str(target)]) == 1
    assert str(target) in caplog.text


def test_failed_verification_exits_with_two(monkeypatch, capsys) -> None:
    monkeypatch.setitem(
        HANDLERS, "lg", lambda args: CommandResult({}, failure="mismatch")
    )
    assert main(["lg"]) == 2
    assert json.loads(capsys.readouterr().out)["command"] == "lg"


def test_convergence_error_exits_with_one(monkeypatch) -> None:
    def diverge(args):
        raise ConvergenceError("contour")

    monkeypatch.setitem(HANDLERS, "lg", diverge)
    assert main(["lg"]) == 1


def test_central_charge_command(capsys) -> None:
    argv = [
        "central-charge",
        "--q",
        "-1e-5j",
        "--bits",
        "64",
        "--method",
        "residues",
    ]
    document = run_json(capsys, argv)
    assert document["brane"] == "extended-walcher"
    assert document["method"] == "residues"
    value = complex(float(document["value_re"]), float(document["value_im"]))
    leading = 64 * mpmath.pi**3 * 30 * mpmath.sqrt(mpmath.mpf("1e-5"))
    assert abs(value) == pytest.approx(float(leading), rel=0.02)


def test_selftest_quick(capsys) -> None:
    document = run_json(capsys, ["selftest", "--quick"])
    assert document["passed"]
    assert [check["label"] for check in document["checks"]] == [
        "pf-annihilation",
        "frobenius-oracle",
        "enumerative",
        "glsm",
        "branes",
        "oscillatory",
    ]


def test_parse_q() -> None:
    assert parse_q("1e-5", 64) == mpmath.mpf("1e-5")
    assert parse_q("1e4-2j", 64) == mpmath.mpc(10000, -2)
    with pytest.raises(DomainError):
        parse_q("q", 64)


def test_renderers() -> None:
    fields = complex_fields(mpmath.mpc(1.5, -2), 64)
    assert fields == {"value_re": "1.5", "value_im": "-2.0"}
    result = CommandResult({}, ["a", "b"], [[1, 2]])
    assert render_csv(result) == "a,b\n1,2\n"
