import json
import pytest
from typer.testing import CliRunner
from src.cli.main import _read_text, app
from src.core.exceptions import GraphFormatError

runner = CliRunner()


def _run(args, stdin=None):
    return runner.invoke(app, args, input=stdin)


def test_gen_cycle_into_matrix():
    generated = _run(["gen", "--family", "cycle", "--n", "4"])
    assert generated.exit_code == 0
    assert generated.stdout.strip() == "Cl"

    result = _run(["matrix"], stdin=generated.stdout)
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "4"
    assert lines[1:] == ["0\t2\t2\t2", "2\t0\t2\t2", "2\t2\t0\t2", "2\t2\t2\t0"]


def test_matrix_json_from_edge_list():
    result = _run(["matrix", "--json"], stdin="3\n0 1\n1 2\n")
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"n": 3, "p": [0, 1, 1, 1, 0, 1, 1, 1, 0]}


def test_matrix_from_file(tmp_path):
    source = tmp_path / "k4.txt"
    source.write_text("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    result = _run(["matrix", str(source), "--format", "json", "--engine", "bfs"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["p"][1] == 3


def test_energy_of_k4():
    result = _run(["energy"], stdin="C~\n")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["PE\t18.0", "rho\t9.0"]


def test_spectrum_of_c4():
    result = _run(["spectrum"], stdin="Cl\n")
    assert result.exit_code == 0
    assert [float(x) for x in result.stdout.split()] == [6.0, -2.0, -2.0, -2.0]


def test_spectrum_json():
    result = _run(["spectrum", "--json"], stdin="Bw\n")
    assert json.loads(result.stdout) == [4.0, -2.0, -2.0]


def test_closed_form():
    result = _run(["closed-form", "--n", "10", "--k", "3"])
    assert result.exit_code == 0
    assert "PE\t20.0" in result.stdout.splitlines()

    payload = json.loads(_run(["closed-form", "--n", "4", "--k", "4", "--json"]).stdout)
    assert payload["spectrum"] == [6.0, -2.0, -2.0, -2.0]
    assert payload["energy"] == 12.0


@pytest.mark.parametrize("n, k", [(7, 3), (9, 5), (12, 12)])
def test_gen_pipes_reproduce_closed_form(n, k):
    graph = _run(["gen", "--family", "unicyclic", "--n", str(n), "--k", str(k), "--shape", "random-tree",
                  "--seed", "3"]).stdout
    energy = _run(["energy", "--json"], stdin=graph)
    closed = _run(["closed-form", "--n", str(n), "--k", str(k), "--json"])
    assert json.loads(energy.stdout)["energy"] == pytest.approx(json.loads(closed.stdout)["energy"], abs=1e-7)


def test_gen_edge_list():
    result = _run(["gen", "--family", "star", "--n", "3", "--edge-list"])
    assert result.stdout == "3\n0 1\n0 2\n"


def test_workers_do_not_change_output():
    graph = _run(["gen", "--family", "random", "--n", "18", "--m", "40", "--seed", "8"]).stdout
    single = _run(["matrix", "--workers", "1"], stdin=graph)
    parallel = _run(["matrix", "--workers", "8"], stdin=graph)
    assert single.stdout == parallel.stdout
    assert _run(["matrix", "--no-biconnected"], stdin=graph).stdout == single.stdout


def test_parse_error_exits_two():
    result = _run(["matrix"], stdin="A`\n")
    assert result.exit_code == 2


def test_bad_parameters_exit_two():
    assert _run(["closed-form", "--n", "5", "--k", "9"]).exit_code == 2
    assert _run(["gen", "--family", "unicyclic", "--n", "5"]).exit_code == 2
    assert _run(["gen", "--family", "octahedron", "--n", "5"]).exit_code == 2
    assert _run(["verify", "--corpus", "exhaustive:9", "--checks", "T1"]).exit_code == 2
    assert _run(["verify", "--corpus", "exhaustive:3", "--checks", "T1,Q"]).exit_code == 2


def test_multiple_graphs_rejected():
    assert _run(["matrix"], stdin="Bw\nBw\n").exit_code == 2


def test_verify_json_with_discrepancies_exits_zero():
    result = _run(["verify", "--corpus", "unicyclic:7..9", "--checks", "L5,T8", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["summary"]["L5"]["discrepancy"] == 2
    assert payload["summary"]["T8"]["discrepancy"] == 2


def test_verify_text_report():
    result = _run(["verify", "--corpus", "exhaustive:4", "--checks", "T1,T2,T3,ORACLE"])
    assert result.exit_code == 0
    assert "ORACLE" in result.stdout


def test_verify_graph6_from_stdin():
    result = _run(["verify", "--corpus", "graph6:-", "--checks", "T1,T4", "--format", "json"], stdin="Bw\nCl\nC~\n")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["summary"]["T4"]["pass"] == 2
    assert payload["summary"]["T4"]["skipped"] == 1


def test_spectrum_of_unicyclic_u53():
    graph = _run(["gen", "--family", "unicyclic", "--n", "5", "--k", "3"]).stdout
    result = _run(["spectrum", "--json"], stdin=graph)
    assert result.exit_code == 0
    expected = [(5 + 33 ** 0.5) / 2, (5 - 33 ** 0.5) / 2, -1.0, -2.0, -2.0]
    assert json.loads(result.stdout) == pytest.approx(expected, abs=1e-8)


def test_invalid_utf8_input_exits_two(tmp_path):
    source = tmp_path / "broken.txt"
    source.write_bytes(b"3\n0 1\n\xff\xfe 2\n")
    result = _run(["matrix", str(source)])
    assert result.exit_code == 2
    with pytest.raises(GraphFormatError) as excinfo:
        _read_text(source)
    assert excinfo.value.offset == 6
