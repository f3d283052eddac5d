import json
import pickle
import subprocess
import sys
from fractions import Fraction

import pytest

from kstability.certify import loads_certificates, replay
from kstability.cli import expand_text, main
from kstability.criterion import assemble_C
from kstability.ratpoly import BiPoly, UniPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_paper_lists_eight_identities(capsys):
    code, out, _ = run(capsys, "verify-paper", "--samples", "50")
    ident = out.split("identities (8):\n")[1].split("inequality chains")[0].strip().splitlines()
    assert len(ident) == 8
    # the weighted boundary-term closed form does not match its quadrature
    assert [ln.split()[0] for ln in ident] == ["PASS"] * 4 + ["FAIL"] + ["PASS"] * 3
    assert "-bP(-b)-aP(-a)+2 int tQ dt" in ident[4]
    chains = out.split("inequality chains (2):\n")[1].splitlines()[:2]
    assert all(ln.startswith("PASS") for ln in chains)
    assert code == 1


def test_verify_paper_fault_injection(capsys):
    # Q = (1 - 3t^2)/2 + t/7
    code, out, _ = run(capsys, "verify-paper", "--samples", "10", "--perturb-q", "1/2,1/7,-3/2")
    ident = out.split("identities (8):\n")[1].splitlines()[:8]
    status = [ln.split()[0] for ln in ident]
    assert status[3] == "FAIL" and status[4] == "FAIL"
    assert status[1] == status[2] == "PASS"
    assert code == 1


@pytest.mark.parametrize(
    "abc, norm, verdict",
    [(("1", "3", "3"), "(1/6, 1/2)", "KStable"), (("1", "2", "2"), "(1/4, 1/2)", "KStable")],
)
def test_check_ample(capsys, abc, norm, verdict):
    code, out, _ = run(capsys, "check", *abc)
    assert code == 0
    assert "ample: yes" in out
    assert f"normalized: {norm}" in out
    assert f"verdict: {verdict}" in out


def test_check_values_are_fractions(capsys):
    code, out, _ = run(capsys, "check", "1", "3", "3", "--approx")
    line = next(ln for ln in out.splitlines() if ln.startswith("C = "))
    value = line.split()[2]
    assert Fraction(value) == Fraction(707, 233280)
    assert "moment polytope: (0, 6) + [-3, -1] alpha2" in out


def test_check_not_ample(capsys):
    code, out, _ = run(capsys, "check", "0", "1", "1")
    assert code == 1
    assert "NotAmple" in out


def test_check_malformed(capsys):
    with pytest.raises(SystemExit) as err:
        main(["check", "1", "x", "3"])
    assert err.value.code == 2


def test_scan_csv(tmp_path, capsys):
    out = tmp_path / "s.csv"
    code, text, _ = run(capsys, "scan", "10", "--out", str(out))
    assert code == 0
    data = out.read_bytes()
    assert b"\r" not in data
    lines = data.decode().splitlines()
    assert lines[0] == "a,b,C"
    assert len(lines) == 1 + 45
    for row in lines[1:]:
        a, b, c = (Fraction(x) for x in row.split(","))
        assert 0 < a < b <= Fraction(1, 2) and c > 0
    assert "minimum C = " in text


def test_scan_two_and_approx(tmp_path, capsys):
    out = tmp_path / "s.csv"
    run(capsys, "scan", "2", "--out", str(out), "--approx")
    lines = out.read_text().splitlines()
    assert lines[0] == "a,b,C,C_approx"
    assert lines[1].startswith("1/4,1/2,11267/5242880,")


def test_scan_bad_args(tmp_path, capsys):
    code, _, err = run(capsys, "scan", "1")
    assert code == 2
    code, _, err = run(capsys, "scan", "3", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2 and "cannot write" in err


def test_scan_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "1.csv", tmp_path / "2.csv"
    run(capsys, "scan", "25", "--out", str(p1))
    run(capsys, "scan", "25", "--out", str(p2), "--workers", "3")
    assert p1.read_bytes() == p2.read_bytes()


def test_certify_writes_replayable_file(tmp_path, capsys):
    out = tmp_path / "cert.json"
    code, text, _ = run(capsys, "certify", "--delta", "1/10", "--max-depth", "12", "--out", str(out))
    assert code == 0
    assert text.count("Certified") == 2
    certs = loads_certificates(out.read_text())
    assert [c.polynomial_id for c in certs] == ["C", "C_tilde"]
    assert all(replay(c) for c in certs)


def test_certify_whole_triangle(tmp_path, capsys):
    out = tmp_path / "cert.json"
    code, text, _ = run(capsys, "certify", "--whole-triangle", "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert [p["outcome"] for p in doc["closed_triangle"]] == ["Certified", "Certified"]


@pytest.mark.parametrize(
    "argv",
    [
        ["certify", "--delta", "1/2"],
        ["certify", "--delta", "1/4"],
        ["certify", "--delta", "0"],
        ["certify", "--delta", "-1/10"],
        ["certify", "--delta=-1/10"],
        ["certify"],
        ["certify", "--delta", "1/10", "--max-depth", "-1"],
    ],
)
def test_certify_usage_errors(capsys, argv):
    # argparse reads "-1/10" as an option and exits through SystemExit
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_certify_bad_rational():
    with pytest.raises(SystemExit) as err:
        main(["certify", "--delta", "abc"])
    assert err.value.code == 2


def test_certify_small_delta_depth_zero(capsys):
    # C is already Bernstein-positive on the whole delta = 1/100 triangle
    code, text, _ = run(capsys, "certify", "--delta", "1/100", "--max-depth", "0")
    assert code == 0
    assert "depth 0 of 0" in text


def test_expand(tmp_path, capsys):
    code, out, _ = run(capsys, "expand")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a_exp,b_exp,coeff"
    terms = {}
    keys = []
    for ln in lines[1:]:
        i, j, c = ln.split(",")
        terms[(int(i), int(j))] = Fraction(c)
        keys.append((int(i) + int(j), int(i)))
    assert keys == sorted(keys)
    assert BiPoly(terms) == assemble_C()
    assert (0, 0) not in terms
    p = tmp_path / "c.txt"
    run(capsys, "expand", "--out", str(p))
    assert p.read_text() == out == expand_text()


def test_expand_restricts_to_sextic():
    from kstability.criterion import C_AT_B_HALF
    from kstability.ratpoly import substitute_line

    terms = {}
    for ln in expand_text().splitlines()[1:]:
        i, j, c = ln.split(",")
        terms[(int(i), int(j))] = Fraction(c)
    assert substitute_line(BiPoly(terms), "b", Fraction(1, 2)) == C_AT_B_HALF


def test_backend_flag(capsys):
    code, out, _ = run(capsys, "--backend", "python", "check", "1", "3", "3")
    assert code == 0
    from kstability import kernels

    kernels.use_backend(kernels.available_backends()[-1])


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kstability.cli", "check", "1", "3", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "verdict: KStable" in proc.stdout


def test_polynomials_pickle():
    p = UniPoly([1, Fraction(2, 3)])
    f = assemble_C()
    assert pickle.loads(pickle.dumps(p)) == p
    assert pickle.loads(pickle.dumps(f)) == f
