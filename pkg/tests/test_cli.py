import io
import json
import subprocess
import sys

import pytest

from fockcrystal.cli import run

RANK3 = ["-|3 (0,1)", "1^2|1 (0,1)", "1^3|- (0,1)", "1|1^2 (0,1)",
         "1|2 (0,1)", "2.1|- (0,1)", "2|1 (0,1)", "3|- (0,1)"]


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_convert_golden():
    assert cli("convert", "5.1|3.1|1", "(0,-1,1)", "--e", "4") == (0, "1^5|3|-|1 (-1,-1,1,1)\n", "")


def test_convert_round_trip():
    code, out, _ = cli("convert", "1^5|3|-|1", "(-1,-1,1,1)", "--inverse", "--l", "3")
    assert code == 0 and out == "5.1|3.1|1 (0,-1,1)\n"


def test_convert_json_has_all_views():
    code, out, _ = cli("convert", "3|3.1|1", "(-1,0,0)", "--e", "2", "--format", "json")
    data = json.loads(out)
    assert data["one_view"] == {"mp": "10.8.4.2", "charge": [-1], "rank": 24}


def test_flotw_list_rank_four_golden():
    # the eight bipartitions of the worked example, requested at rank 4
    code, out, _ = cli("flotw", "list", "--e", "4", "--l", "2", "--charge", "(0,1)", "--rank", "4")
    assert code == 0
    assert out.splitlines() == RANK3


def test_flotw_list_rank_three_golden():
    code, out, _ = cli("flotw", "list", "--e", "4", "--l", "2", "--charge", "(0,1)", "--rank", "3")
    assert code == 0 and out.splitlines() == RANK3


def test_flotw_check():
    assert cli("flotw", "check", "1|1", "(0,1)", "--e", "2")[1] == "false (condition-2)\n"


def test_grammar_error_reports_column():
    code, _, err = cli("convert", "5.1|3.x|1", "(0,-1,1)", "--e", "4")
    assert code == 1 and "column 7" in err


@pytest.mark.parametrize("argv", [["nosuch"], ["hw", "1|1", "(0,1)"], ["convert", "1", "(0)", "--inverse"],
                                  ["heis", "apply", "1|1", "(0,1)", "--e", "2", "--op", "b9"]])
def test_usage_errors_exit_one(argv):
    assert cli(*argv)[0] == 1


def test_contract_violation_exits_two():
    code, _, err = cli("flotw", "list", "--e", "4", "--charge", "(0,7)", "--rank", "2")
    assert code == 2 and "fundamental domain" in err


def test_empty_components_are_not_options():
    code, out, _ = cli("crystal", "-|-", "(0,1)", "--e", "2", "--rank", "2")
    assert code == 0 and out.splitlines()[-1] == "5 vertices, 4 arrows"


def test_heis_commands():
    assert cli("heis", "kappa", "3|3.1|1", "(-1,0,0)", "--e", "2")[1].splitlines()[0] == "kappa: 3.1"
    assert cli("heis", "depth", "3|3.1|1", "(-1,0,0)", "--e", "2")[1] == "4\n"
    args = ("heis", "apply", "3|3.1|1", "(-1,0,0)", "--e", "2", "--sigma", "1")
    assert cli(*args, "--op", "b-sigma")[1] == "3|3|- (-1,0,0)\n"
    assert cli(*args, "--op", "b-sigma", "--dual")[1] == "2|2.1|1 (-1,0,0)\n"


def test_decompose_json():
    code, out, _ = cli("decompose", "3|3.1|1", "(-1,0,0)", "--e", "2", "--format", "json")
    assert json.loads(out) == {"e_path": [], "sigma": [3, 1], "l_path": [], "base_charge": [-1, 0, 0]}


def test_crystal_dot_is_stable():
    a = cli("crystal", "-|-", "(0,1)", "--e", "3", "--rank", "3", "--format", "dot")[1]
    assert a == cli("crystal", "-|-", "(0,1)", "--e", "3", "--rank", "3", "--format", "dot")[1]
    assert a.startswith("digraph")


def test_hw_ascii_abacus():
    code, out, _ = cli("hw", "3|3.1|1", "(-1,0,0)", "--e", "2", "--kind", "both", "--abacus", "--ascii")
    assert code == 0 and "●" not in out and "raising path: (none)" in out


def test_fock_debug():
    out = cli("fock", "debug", "-|-", "(0,1)", "--e", "2", "--i", "0")[1]
    assert out == "f_0 = (1) |1|- (0,1)>\ne_0 = 0\n"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "fockcrystal", "selfcheck", "--profile", "quick"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.rstrip().endswith("15/15 checks passed")
