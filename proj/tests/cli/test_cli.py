import json
import os
import subprocess

import pytest

CLI = os.environ.get("LOCALPROP_CLI_PATH", "localprop")


def run(*args, cwd=None):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, cwd=cwd)


def write(path, obj):
    path.write_text(json.dumps(obj))
    return path


def test_version():
    r = run("--version")
    assert r.returncode == 0
    assert "1.0.0" in r.stdout


def test_verify_coloring_rainbow_triangle(tmp_path):
    f = write(tmp_path / "k3.json", {"n": 3, "colors": [0, 1, 2]})
    r = run("verify-coloring", "--input", f, "--k", 3, "--ell", 3)
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["holds"] is True
    assert payload["schema_version"] == 1
    assert payload["command"] == "verify-coloring"


def test_verify_diffset_failure_has_witness(tmp_path):
    f = write(tmp_path / "a.json", [1, 2, 3, 4])
    r = run("verify-diffset", "--input", f, "--k", 4, "--ell", 5)
    assert r.returncode == 1
    payload = json.loads(r.stdout)
    assert payload["holds"] is False
    assert payload["witness"] == {"count": 3, "elements": [1, 2, 3, 4], "subset": [0, 1, 2, 3]}


def test_solve_f_certificate_round_trip(tmp_path):
    cert = tmp_path / "cert.json"
    r = run("solve-f", "--n", 5, "--k", 3, "--ell", 3, "--certificate", cert)
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["value"] == 5
    assert payload["status"] == "optimal"
    again = run("verify-coloring", "--input", cert, "--k", 3, "--ell", 3)
    assert again.returncode == 0


def test_solve_g_certificate_round_trip(tmp_path):
    cert = tmp_path / "set.json"
    r = run("solve-g", "--n", 4, "--k", 4, "--ell", 5, "--range", 10, "--certificate", cert)
    assert r.returncode == 0
    assert json.loads(r.stdout)["value"] == 5
    assert run("verify-diffset", "--input", cert, "--k", 4, "--ell", 5).returncode == 0


def test_behrend_artifact_is_isosceles_free(tmp_path):
    art = tmp_path / "b.json"
    assert run("construct", "--kind", "behrend", "--size", 16, "--artifact", art).returncode == 0
    pts = tmp_path / "p.json"
    assert run("construct", "--kind", "collinear", "--input", art, "--artifact", pts).returncode == 0
    r = run("verify-distances", "--input", pts, "--k", 3, "--ell", 3)
    assert r.returncode == 0


def test_randomized_kinds_require_seed():
    r = run("construct", "--kind", "random-coloring", "--n", 5, "--colors", 3)
    assert r.returncode == 2


def test_seeded_output_is_byte_identical(tmp_path):
    args = ("construct", "--kind", "estimate", "--n", 6, "--colors", 5, "--k", 3, "--ell", 2,
            "--trials", 500, "--seed", 3)
    a = run(*args)
    b = run("--threads", 4, *args)
    assert a.returncode == 0
    assert a.stdout == b.stdout


@pytest.mark.parametrize(
    "args",
    [
        ("verify-coloring", "--k", 3, "--ell", 3),
        ("solve-f", "--n", 5, "--k", 3, "--ell", 9),
        ("solve-f", "--n", 5, "--k", 1, "--ell", 1),
        ("no-such-command",),
        ("profile", "--k", 6),
    ],
)
def test_usage_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_schema_error_exits_2(tmp_path):
    f = write(tmp_path / "bad.json", {"n": 3, "colors": [0, 1]})
    assert run("verify-coloring", "--input", f, "--k", 3, "--ell", 3).returncode == 2


def test_energy_and_profile_csv(tmp_path):
    f = write(tmp_path / "mono.json", {"n": 8, "colors": [0] * 28})
    r = run("--format", "json", "energy", "--input", f)
    assert r.returncode == 0
    assert json.loads(r.stdout)["color_energy"] == 784
    csv = run("--format", "csv", "profile", "--input", f, "--k", 6, "--m", 2)
    assert csv.returncode == 0
    header = csv.stdout.splitlines()[0]
    for col in ("j", "bin_count", "k_j", "poor_bound_num", "poor_bound_den", "rich_bound_num", "rich_bound_den"):
        assert col in header.split(",")


def test_lemma_check(tmp_path):
    f = write(tmp_path / "sys.json", {"n": 4, "sets": [[1, 2]] * 16, "d": 2})
    r = run("lemma-check", "--input", f)
    assert r.returncode == 0
    assert json.loads(r.stdout)["indices"] == [1, 2]
    g = write(tmp_path / "none.json", {"n": 10, "sets": [[1, 2], [3, 4], [5, 6]], "d": 2})
    assert run("lemma-check", "--input", g).returncode == 1
