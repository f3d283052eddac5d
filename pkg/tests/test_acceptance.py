"""Exit criteria.  Run ``pytest tests/test_acceptance.py`` to get one
PASS/FAIL line per criterion in the summary section."""

import json
import random
import time
from fractions import Fraction

import pytest
from scipy.integrate import quad

from kstability import kernels
from kstability.amplecone import BundleParams, boundary_margin, is_ample, kstability_verdict
from kstability.certify import (
    CERTIFIED,
    ReplayError,
    certify_margin_ladder,
    dumps_certificates,
    loads_certificates,
    replay,
)
from kstability.cli import expand_text, main, scan_csv
from kstability.criterion import (
    C_AT_A_ZERO,
    C_AT_B_HALF,
    C_TILDE_ON_DIAGONAL,
    DISPLAYED_INT_P,
    DISPLAYED_INT_TP,
    DISPLAYED_W0,
    DISPLAYED_W1,
    Verdict,
    assemble_C,
    quadrature_blocks,
)
from kstability.identities import inequality_chains
from kstability.ratpoly import bipoly_eval, divide_linear_factor, substitute_line, symbolic_integral_ab
from kstability.rootdata import STATED_P, build_P, stated_Q

F = Fraction
HALF = F(1, 2)

c1 = pytest.mark.acceptance("1. exact identity suite")
c2 = pytest.mark.acceptance("2. boundary inequality chains at 1000 points each")
c3 = pytest.mark.acceptance("3. theorem reproduction, b+c <= 200, margin < 1/20")
c4 = pytest.mark.acceptance("4. adaptive quadrature oracle, rel. err 1e-10")
c5 = pytest.mark.acceptance("5. certify delta=1/10 depth 14, scan n=200")
c6 = pytest.mark.acceptance("6. certificate replay and tamper detection")
c7 = pytest.mark.acceptance("7. determinism of expand and scan")


# --------------------------------------------------------------------------
# 1


@c1
def test_c1_P_from_pairings():
    assert build_P() == STATED_P


@c1
def test_c1_int_P():
    assert symbolic_integral_ab(build_P(), 1) == DISPLAYED_INT_P


@c1
def test_c1_int_tP():
    assert symbolic_integral_ab(build_P(), "t") == DISPLAYED_INT_TP


@c1
def test_c1_unweighted_boundary_term():
    assert quadrature_blocks()["W0"] == DISPLAYED_W0


@c1
def test_c1_weighted_boundary_term():
    # -bP(-b) - aP(-a) + 2 int tQ versus its displayed closed form
    assert quadrature_blocks()["W1"] == DISPLAYED_W1


@c1
def test_c1_b_half_factorization():
    assert substitute_line(assemble_C(), "b", HALF) == C_AT_B_HALF


@c1
def test_c1_diagonal_quotient():
    ct = divide_linear_factor(assemble_C(), "b-a")
    assert substitute_line(ct, "b=a") == C_TILDE_ON_DIAGONAL


@c1
def test_c1_a_zero_factorization():
    assert substitute_line(assemble_C(), "a", 0) == C_AT_A_ZERO


@c1
def test_c1_runtime():
    import subprocess
    import sys

    code = (
        "import time; t = time.perf_counter();"
        "from kstability.identities import identity_suite; identity_suite();"
        "print(time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert float(out.stdout) < 1.0


# --------------------------------------------------------------------------
# 2


@c2
def test_c2_chains():
    t = time.perf_counter()
    checks = inequality_chains(1000, seed=2024)
    assert all(c.ok for c in checks), [c.detail for c in checks if not c.ok]
    assert time.perf_counter() - t < 30


# --------------------------------------------------------------------------
# 3


@c3
def test_c3_theorem_near_boundary():
    t = time.perf_counter()
    eps = F(1, 20)
    count = 0
    for s in range(2, 201):
        for b in range(1, s // 2 + 1):
            c = s - b
            for a in range(1, b):
                p = BundleParams(a, b, c)
                if boundary_margin(p) >= eps:
                    continue
                assert is_ample(p)
                assert kstability_verdict(p).verdict is Verdict.KSTABLE, p
                count += 1
    assert count > 10_000
    assert time.perf_counter() - t < 60


# --------------------------------------------------------------------------
# 4


def _float_poly(p):
    cs = [float(c) for c in p.coeffs]
    return lambda t: sum(c * t**k for k, c in enumerate(cs))


@c4
def test_c4_quadrature_oracle():
    rng = random.Random(4)
    P, Q = _float_poly(build_P()), _float_poly(stated_Q())
    integrands = {
        "int_P": (P, DISPLAYED_INT_P),
        "int_tP": (lambda t: t * P(t), DISPLAYED_INT_TP),
        "int_Q": (Q, symbolic_integral_ab(stated_Q(), 1)),
        "int_tQ": (lambda t: t * Q(t), symbolic_integral_ab(stated_Q(), "t")),
    }
    worst = 0.0
    for _ in range(100):
        a = F(rng.randint(1, 10**6), 2 * 10**6 + 1)
        b = F(rng.randint(1, 10**6), 2 * 10**6 + 1)
        a, b = min(a, b), max(a, b)
        if a == b:
            continue
        for name, (g, closed) in integrands.items():
            exact = float(bipoly_eval(closed, a, b))
            num, _ = quad(g, -float(b), -float(a), epsabs=0, epsrel=1e-13, limit=200)
            rel = abs(num - exact) / abs(exact)
            worst = max(worst, rel)
            assert rel <= 1e-10, (name, a, b, num, exact)
    assert worst <= 1e-10


# --------------------------------------------------------------------------
# 5


@c5
def test_c5_certify_delta_tenth():
    certs = certify_margin_ladder([F(1, 10)], 14)
    assert [c.outcome for c in certs] == [CERTIFIED, CERTIFIED]
    # the CLI wraps the same call and exits 0
    assert main(["certify", "--delta", "1/10", "--max-depth", "14"]) == 0


@c5
def test_c5_scan_200():
    res, _ = scan_csv(200)
    assert len(res.rows) == 19_900
    assert res.minimum > 0


# --------------------------------------------------------------------------
# 6


@c6
def test_c6_replay_from_disk(tmp_path):
    path = tmp_path / "cert.json"
    assert main(["certify", "--delta", "1/10", "--max-depth", "14", "--out", str(path)]) == 0
    certs = loads_certificates(path.read_text())
    assert all(c.outcome == CERTIFIED and replay(c) for c in certs)


@c6
def test_c6_tampered_coefficient(tmp_path):
    path = tmp_path / "cert.json"
    main(["certify", "--delta", "1/10", "--max-depth", "14", "--out", str(path)])
    doc = json.loads(path.read_text())
    leaf = doc["certificates"][0]["leaves"][0]
    x = F(leaf["coefficients"][7]) * 2
    leaf["coefficients"][7] = f"{x.numerator}/{x.denominator}"
    path.write_text(json.dumps(doc))
    cert = loads_certificates(path.read_text())[0]
    with pytest.raises(ReplayError):
        replay(cert)


# --------------------------------------------------------------------------
# 7


@c7
def test_c7_expand_deterministic():
    import subprocess
    import sys

    runs = {
        subprocess.run(
            [sys.executable, "-m", "kstability.cli", "expand"], capture_output=True, check=True
        ).stdout
        for _ in range(2)
    }
    assert len(runs) == 1
    assert runs.pop().decode() == expand_text()


@c7
def test_c7_scan_deterministic_across_workers_and_backends():
    texts = set()
    before = kernels.backend_name()
    try:
        for backend in kernels.available_backends():
            kernels.use_backend(backend)
            for workers in (1, 4):
                texts.add(scan_csv(60, workers=workers)[1])
    finally:
        kernels.use_backend(before)
    assert len(texts) == 1
