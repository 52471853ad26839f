"""Acceptance gate: nine end-to-end criteria at fixed tolerances.

Each test prints one `[acceptance] criterion N (<name>): PASS|FAIL` line
(visible with `pytest -s`, or in the captured output of a failing test)
and then asserts.

Criterion 7 encodes a strict calibration target for the stability
sweeps: every (family, sigma, lam) configuration must have ratio below
0.05 at n = 1e6 and non-increasing ratios for n >= 100.  The measured
family ratios do not all meet that target (the certainty-side family at
sigma = 0.25, lam = 0 sits near 0.078 at n = 1e6, and the uniform-hole
family dips and then rises again around n ~ 2/delta for every parameter
choice).  The test reports each offending configuration and fails; the
target is kept as written rather than loosened to fit the measurement.
"""

import io
import math
import time
from contextlib import redirect_stdout

import numpy as np
import pytest

from tempent import (
    EntropyParams,
    Family,
    entropy,
    family_a_pair,
    family_b_pair,
    make_dist,
    shannon_entropy,
)
from tempent import core
from tempent.axioms import (
    check_expansibility,
    check_generator_concavity,
    check_maximality,
    check_nonnegativity,
    sample_simplex,
)
from tempent.cli import run
from tempent.fracderiv import (
    closed_form_derivative,
    laplace_singular_quad,
    tempered_derivative_numeric,
    FracParams,
)
from tempent.lesche import _family_entropies, sweep

DECADES = [100, 1000, 10_000, 100_000, 1_000_000]

_SAMPLE_CACHE = {}


def sample_set():
    """1000 seeded random distributions with n in {2,...,20}; shared by 1 and 2."""
    if "dists" not in _SAMPLE_CACHE:
        rng = np.random.default_rng(101)
        dists = []
        for _ in range(1000):
            n = int(rng.integers(2, 21))
            w = rng.standard_exponential(n)
            dists.append(make_dist(w / w.sum()))
        _SAMPLE_CACHE["dists"] = dists
    return _SAMPLE_CACHE["dists"]


def emit(k: int, name: str, ok: bool, detail: str = ""):
    tail = f" - {detail}" if detail else ""
    print(f"[acceptance] criterion {k} ({name}): {'PASS' if ok else 'FAIL'}{tail}")


def test_criterion_1_shannon_collapse():
    t0 = time.perf_counter()
    worst = 0.0
    for p in sample_set():
        sh = shannon_entropy(p)
        for lam in (0.0, 0.5, 1.0, 10.0):
            gap = abs(entropy(p, EntropyParams(1.0, lam)) - sh)
            worst = max(worst, gap / max(1.0, sh))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and elapsed < 1.0
    emit(1, "shannon collapse", ok, f"worst={worst:.2e} time={elapsed:.2f}s")
    assert worst <= 1e-12
    assert elapsed < 1.0


def test_criterion_2_fractional_alias():
    worst = 0.0
    for p in sample_set():
        w = p.weights[p.weights > 0.0]
        logs = -np.log(w)
        for alpha in (0.25, 0.5, 0.75, 1.0):
            direct = float(np.sum(w * logs**alpha))
            worst = max(worst, abs(entropy(p, EntropyParams(alpha, 0.0)) - direct))
    ok = worst <= 1e-15
    emit(2, "one-parameter alias", ok, f"worst={worst:.2e}")
    assert worst <= 1e-15


def test_criterion_3_axiom_battery():
    t0 = time.perf_counter()
    failures = []
    for sigma in (0.25, 0.5, 0.75, 1.0):
        for lam in (0.0, 1.0, 5.0):
            params = EntropyParams(sigma, lam)
            for n in (2, 5, 20):
                r = check_maximality(n, params, samples=10_000, seed=0)
                if not (r.worst_violation <= 1e-9):
                    failures.append(("maximality", sigma, lam, n, r.worst_violation))
                r = check_nonnegativity(n, params, samples=10_000, seed=1)
                if not r.passed:
                    failures.append(("nonnegativity", sigma, lam, n, r.worst_violation))
            for p in sample_simplex(6, 32, seed=2):
                r = check_expansibility(p, params)
                if r.worst_violation != 0.0:
                    failures.append(("expansibility", sigma, lam, 6, r.worst_violation))
            r = check_generator_concavity(params)
            if not (r.worst_violation <= 1e-6):
                failures.append(("concavity", sigma, lam, None, r.worst_violation))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 30.0
    emit(3, "axiom battery", ok, f"{len(failures)} failures, time={elapsed:.1f}s")
    assert not failures, failures
    assert elapsed < 30.0


def test_criterion_4_tempering_inequality():
    W = np.stack([p.weights for p in sample_simplex(5, 10_000, seed=11)])
    worst = -math.inf
    for sigma in (0.25, 0.5, 0.75, 1.0):
        base = core._entropy_rows(W, EntropyParams(sigma, 0.0))
        for lam in (0.5, 1.0, 5.0, 10.0):
            tempered = core._entropy_rows(W, EntropyParams(sigma, lam))
            worst = max(worst, float(np.max(tempered - base)))
    ok = worst <= 1e-12
    emit(4, "tempering inequality", ok, f"worst={worst:.2e}")
    assert worst <= 1e-12


def test_criterion_5_derivative_closure():
    t0 = time.perf_counter()
    worst_rel = 0.0
    bad = []
    for p in [i / 10.0 for i in range(1, 10)]:
        for sigma in [i / 10.0 for i in range(1, 10)]:
            for lam in (0.0, 0.5, 1.0, 2.0):
                fp = FracParams(sigma=sigma, lam=lam, p=p, t=-1.0)
                num = tempered_derivative_numeric(fp)
                ref = closed_form_derivative(fp)
                err = abs(num - ref)
                worst_rel = max(worst_rel, err / abs(ref))
                if err > max(1e-6 * abs(ref), 1e-9):
                    bad.append((p, sigma, lam, err))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60.0
    emit(5, "derivative closure", ok, f"worst_rel={worst_rel:.2e} time={elapsed:.1f}s")
    assert not bad, bad
    assert elapsed < 60.0


def test_criterion_6_quadrature_identity():
    worst = 0.0
    for c in (0.1, 1.0, 2.0, 10.0, 50.0):
        for sigma in (0.05, 0.25, 0.5, 0.75, 0.95):
            got = laplace_singular_quad(c, sigma, tol=1e-10).value
            exact = math.gamma(1.0 - sigma) * c ** (sigma - 1.0)
            worst = max(worst, abs(got - exact) / exact)
    ok = worst <= 1e-8
    emit(6, "quadrature identity", ok, f"worst_rel={worst:.2e}")
    assert worst <= 1e-8


def test_criterion_7_stability_evidence():
    delta = 1e-3
    bound_viol = []
    mono_viol = []
    cross_viol = []
    for fam, ctor in ((Family.CERTAINTY_A, family_a_pair), (Family.UNIFORM_B, family_b_pair)):
        for sigma in (0.25, 0.5, 0.75):
            for lam in (0.0, 1.0, 5.0):
                params = EntropyParams(sigma, lam)
                rows = sweep([fam], DECADES, delta, params)
                ratios = [r.ratio for r in rows]
                if not (ratios[-1] < 0.05):
                    bound_viol.append((fam.value, sigma, lam, ratios[-1]))
                if any(b > a * (1.0 + 1e-12) for a, b in zip(ratios, ratios[1:])):
                    mono_viol.append((fam.value, sigma, lam, ratios))
                for n in (100, 1000, 10_000):
                    s_agg, spp_agg = _family_entropies(fam, n, delta, params)
                    pair = ctor(n, delta)
                    gap = max(
                        abs(s_agg - entropy(pair.p, params)),
                        abs(spp_agg - entropy(pair.p_prime, params)),
                    )
                    if gap > 1e-12:
                        cross_viol.append((fam.value, sigma, lam, n, gap))
    ok = not bound_viol and not mono_viol and not cross_viol
    parts = []
    if bound_viol:
        parts.append(
            "ratio(1e6) >= 0.05 at: "
            + "; ".join(f"{f} sigma={s} lam={l} ratio={r:.4f}" for f, s, l, r in bound_viol)
        )
    if mono_viol:
        parts.append(
            "non-monotone over decades at: "
            + "; ".join(f"{f} sigma={s} lam={l}" for f, s, l, _ in mono_viol)
        )
    if cross_viol:
        parts.append(f"{len(cross_viol)} aggregated/vector mismatches")
    emit(7, "stability evidence", ok, " | ".join(parts) if parts else "all 18 configs within target")
    assert not cross_viol, cross_viol
    assert not bound_viol, bound_viol
    assert not mono_viol, [v[:3] for v in mono_viol]


def test_criterion_8_instability_control():
    rows = sweep(
        [Family.CERTAINTY_A], DECADES, 1e-3, EntropyParams(0.5, 0.0), control_q=0.5
    )
    ctrl = [r.ratio for r in rows if r.family == "A_renyi"]
    increasing = all(b > a for a, b in zip(ctrl, ctrl[1:]))
    ok = ctrl[-1] > 0.4 and increasing
    emit(
        8,
        "instability control",
        ok,
        f"ratio(1e6)={ctrl[-1]:.4f} increasing={increasing}",
    )
    assert ctrl[-1] > 0.4
    assert increasing


def test_criterion_9_cli_determinism(tmp_path):
    csv_invocations = [
        [
            "check-axioms", "--sigma", "0.5", "--lambda", "1",
            "--n", "2,5", "--samples", "500", "--seed", "0",
        ],
        [
            "sweep", "--family", "A,B", "--sigma", "0.5", "--lambda", "1",
            "--delta", "1e-3", "--n", "100,1000", "--control-renyi", "0.5",
        ],
        [
            "search", "--sigma", "1", "--lambda", "0", "--delta", "0.1",
            "--n", "3", "--samples", "500", "--seed", "7",
        ],
        ["verify-frac"],
    ]
    mismatches = []
    for k, args in enumerate(csv_invocations):
        a = tmp_path / f"{k}_a.csv"
        b = tmp_path / f"{k}_b.csv"
        assert run(args + ["--out", str(a)]) == 0
        assert run(args + ["--out", str(b)]) == 0
        if a.read_bytes() != b.read_bytes():
            mismatches.append(args[0])

    outs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = run(["entropy", "--sigma", "0.5", "--lambda", "0", "--dist", "0.5,0.5"])
        assert code == 0
        outs.append(buf.getvalue())
    if outs[0] != outs[1]:
        mismatches.append("entropy")

    ok = not mismatches
    emit(9, "cli determinism", ok, "all subcommands byte-identical" if ok else str(mismatches))
    assert not mismatches, mismatches
