import json
import subprocess
import sys

import pytest

from ademops.cli import (EXIT_FAIL, EXIT_INPUT, EXIT_OK, ComplexFile, InputError, fixture_names,
                         fixture_path, main, parse_complex, read_complex, serialize_complex)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


@pytest.fixture
def write(tmp_path):
    def go(text, name="k.json"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return go


# -- complex files --------------------------------------------------------------------

def test_every_fixture_round_trips_bit_exact():
    names = fixture_names()
    assert {"delta3", "sphere2", "rp2", "torus", "cp2", "s2xs2"} <= set(names)
    for name in names:
        text = fixture_path(name).read_text()
        cf = parse_complex(text)
        assert serialize_complex(cf) == text
        assert cf.name


def test_round_trip_of_a_hand_written_file():
    cf = ComplexFile("tri", ((0, 1), (1, 2), (0, 2)))
    text = serialize_complex(cf)
    assert text == '{"name": "tri", "maximal_simplices": [[0, 1], [1, 2], [0, 2]]}\n'
    assert parse_complex(text) == cf
    assert parse_complex(' {"maximal_simplices": [[0,1],[1,2],[0,2]], "name":"tri"}') == cf


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"name": "x"}',
    '{"name": "x", "maximal_simplices": [[0, 1]], "extra": 1}',
    '{"name": 3, "maximal_simplices": [[0, 1]]}',
    '{"name": "x", "maximal_simplices": []}',
    '{"name": "x", "maximal_simplices": [[]]}',
    '{"name": "x", "maximal_simplices": [[1, 0]]}',
    '{"name": "x", "maximal_simplices": [[0, 0, 1]]}',
    '{"name": "x", "maximal_simplices": [[-1, 2]]}',
    '{"name": "x", "maximal_simplices": [[0, 1.0]]}',
    '{"name": "x", "maximal_simplices": [[0, true]]}',
    '{"name": "x", "maximal_simplices": [0, 1]}',
])
def test_invalid_files_are_rejected(text, write, capsys):
    with pytest.raises(InputError):
        parse_complex(text)
    code, doc, err = run(capsys, "homology", write(text))
    assert code == EXIT_INPUT and doc is None and err.startswith("error:")


def test_missing_file(capsys, tmp_path):
    with pytest.raises(InputError):
        read_complex(str(tmp_path / "nope.json"))
    assert run(capsys, "homology", str(tmp_path / "nope.json"))[0] == EXIT_INPUT


# -- commands ------------------------------------------------------------------------------

def test_homology_command(capsys):
    code, doc, _ = run(capsys, "homology", str(fixture_path("sphere2")))
    assert code == EXIT_OK
    assert list(doc) == ["command", "complex", "result", "timing"]
    assert doc["result"]["betti"] == [1, 0, 1]
    assert doc["result"]["groups"] == ["Z^1", "0", "Z^1"]
    assert doc["complex"] == {"name": "S^2 (boundary of Delta^3)", "dimension": 2,
                              "simplex_counts": [4, 6, 4]}


def test_homology_of_rp2_over_both_rings(capsys):
    path = str(fixture_path("rp2"))
    _, doc, _ = run(capsys, "--no-timing", "homology", path)
    assert doc["result"]["torsion"] == [[], [2], []]
    assert doc["result"]["groups"] == ["Z^1", "Z/2", "0"]
    _, doc, _ = run(capsys, "--no-timing", "homology", path, "--ring", "z2")
    assert doc["result"]["betti"] == [1, 1, 1]
    assert doc["result"]["groups"] == ["(Z/2)^1"] * 3


def test_sq_command(capsys):
    code, doc, _ = run(capsys, "--no-timing", "sq", str(fixture_path("cp2")), "--q", "2")
    assert code == EXIT_OK
    res = doc["result"]
    assert res["matrix"] == [[1]] and res["source_basis"] == ["H^2[0]"]
    assert res["target_basis"] == ["H^4[0]"]
    assert res["integral"]["available"] and res["integral"]["matrix"] == [[1]]
    _, doc, _ = run(capsys, "--no-timing", "sq", str(fixture_path("torus")), "--q", "1", "--i", "0")
    assert doc["result"]["matrix"] == [[1, 0], [0, 1]] and "integral" not in doc["result"]


def test_sq_reports_torsion_instead_of_failing(capsys):
    code, doc, _ = run(capsys, "--no-timing", "sq", str(fixture_path("rp2")), "--q", "2")
    assert code == EXIT_OK
    assert doc["result"]["integral"] == {"available": False, "reason": "torsion Z/2 in degree 1"}


def test_sq_rejects_bad_degrees(capsys):
    path = str(fixture_path("torus"))
    assert run(capsys, "sq", path, "--q", "1", "--i", "2")[0] == EXIT_INPUT
    assert run(capsys, "sq", path, "--q", "1", "--i", "-1")[0] == EXIT_INPUT


def test_psi_command(capsys):
    code, doc, err = run(capsys, "--no-timing", "psi", str(fixture_path("s2xs2")), "--q", "2")
    assert code == EXIT_OK
    assert "w cocycle check: pass" in err
    res = doc["result"]
    assert res["kernel"] == [[1, 0], [0, 1]] and res["w cocycle check"] == "pass"
    assert res["target_basis"] == []


def test_psi_exit_codes(capsys):
    code, doc, err = run(capsys, "psi", str(fixture_path("rp2")), "--q", "2")
    assert code == EXIT_FAIL and doc is None and "torsion Z/2 in degree 1" in err
    assert run(capsys, "psi", str(fixture_path("cp2")), "--q", "1")[0] == EXIT_INPUT


def test_no_timing_output_is_reproducible(capsys):
    argv = ["--no-timing", "psi", str(fixture_path("cp2")), "--q", "2"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    assert '"timing"' not in first


def test_check_command(capsys):
    code, doc, err = run(capsys, "--no-timing", "check", "words", "--samples", "50", "--seed", "3")
    assert code == EXIT_OK
    assert doc["command"] == {"command": "check", "suite": "words", "seed": 3, "samples": 50}
    assert doc["result"]["passed"] is True
    assert err.startswith("pass")
    assert run(capsys, "check", "words", "--samples", "-1")[0] == EXIT_INPUT


def test_argument_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["check", "nonsense"])
    assert e.value.code == 2
    capsys.readouterr()


def test_console_script_runs():
    out = subprocess.run([sys.executable, "-m", "ademops.cli", "--no-timing", "homology",
                          str(fixture_path("torus"))], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"]["betti"] == [1, 2, 1]
