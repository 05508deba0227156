import json
import os
import subprocess
import sys

HERE = os.path.dirname(__file__)
ROOT = os.path.join(HERE, os.pardir)
FIXTURES = os.path.join(ROOT, "fixtures.json")


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "xmod2", *args],
        capture_output=True, text=True, cwd=ROOT, env=env,
    )


def test_validate_fixture_file_exits_zero():
    out = run_cli("validate", FIXTURES)
    assert out.returncode == 0, out.stdout + out.stderr
    assert "pass" in out.stdout


def test_compose_prints_worked_value():
    out = run_cli("homotopy", "compose", FIXTURES, "--names", "h1,h2")
    assert out.returncode == 0
    assert "(s[+]s')(x^2)" in out.stdout and "4*b" in out.stdout


def test_invert_prints_inverse_values():
    out = run_cli("homotopy", "invert", FIXTURES, "--names", "h1")
    assert out.returncode == 0
    assert "sbar(x)" in out.stdout and "-a" in out.stdout


def test_assoc_reports_w_change():
    out = run_cli("homotopy", "assoc", FIXTURES, "--names", "h1,h2,h3")
    assert out.returncode == 0
    assert "w-change(x^2)" in out.stdout


def test_groupoid_tcm_without_free_basis_fails_with_exit_1():
    out = run_cli("groupoid", "tcm", FIXTURES, "--source", "F2", "--target", "F2")
    assert out.returncode == 1
    assert "FreeBasisRequired" in out.stdout


def test_groupoid_cm_passes():
    out = run_cli("groupoid", "cm", FIXTURES, "--source", "F1", "--target", "F1", "--samples", "4")
    assert out.returncode == 0


def test_simplicial_command():
    out = run_cli("simplicial", FIXTURES, "--module", "F2")
    assert out.returncode == 0
    assert "identity/" in out.stdout


def test_usage_error_exit_2():
    out = run_cli("frobnicate")
    assert out.returncode == 2


def test_missing_file_exit_3():
    out = run_cli("validate", os.path.join(HERE, "nope.json"))
    assert out.returncode == 3


def test_parse_error_exit_3(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    out = run_cli("validate", str(bad))
    assert out.returncode == 3
    assert "parse error" in out.stderr


def test_unresolved_reference_exit_1(tmp_path):
    doc = {"ring": "Q", "crossed": {"C": {"ideal": {"R": "missing", "labels": []}}}}
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc))
    out = run_cli("validate", str(path))
    assert out.returncode == 1
    assert "UnresolvedReference" in out.stdout


def test_selftest_deterministic_json(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    out1 = run_cli("selftest", "--seed", "7", "--samples", "6", "--json", str(a))
    out2 = run_cli("selftest", "--seed", "7", "--samples", "6", "--json", str(b))
    assert out1.returncode == 0 and out2.returncode == 0
    assert a.read_bytes() == b.read_bytes()
    payload = json.loads(a.read_text())
    assert payload["status"] == "pass"
    assert payload["params"]["seed"] == 7


def test_env_seed_fallback(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run_cli("groupoid", "cm", FIXTURES, "--source", "F1", "--target", "F1",
            "--samples", "3", "--json", str(a), env_extra={"XMOD2_SEED": "9"})
    run_cli("groupoid", "cm", FIXTURES, "--source", "F1", "--target", "F1",
            "--samples", "3", "--seed", "9", "--json", str(b))
    assert a.read_bytes() == b.read_bytes()
