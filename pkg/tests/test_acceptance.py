"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines on the terminal.
"""

import math

import numpy as np

from conftest import random_error_distribution
from fanoext import (
    ErrorDistribution,
    ProbVector,
    binary_entropy,
    exact_conditional_entropy,
    exact_mutual_info,
    ext_fano_cor1,
    ext_fano_relative_form,
    ext_fano_ub,
    ext_mutual_info_lb,
    fano_conditional_entropy_ub,
    monte_carlo_error_histogram,
    qsc_bound_report,
    qsc_capacity_per_symbol,
    qsc_error_distribution,
    qsc_exact_conditional_entropy,
    qsc_spec,
    reference_distribution,
    relative_entropy,
)


def _report(name: str, ok: bool, detail: str = "") -> bool:
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}{suffix}")
    return ok


def test_qsc_tightness():
    """Extended bound equals the enumeration oracle on every small QSC."""
    worst = 0.0
    for q in (2, 3):
        for eps in (0.05, 0.1, 0.2):
            for n in (1, 2, 3, 4):
                spec = qsc_spec(q, eps)
                exact = exact_conditional_entropy(spec, n)
                bound = ext_fano_ub(qsc_error_distribution(n, q, eps), q)
                worst = max(worst, abs(bound - exact))
    assert _report("qsc-tightness", worst <= 1e-9, f"max |delta| = {worst:.3e}")


def test_dominance_over_classical_fano():
    """h_ext_ub <= h_fano_ub for q=7, eps=0.001, n=1..100, strict gap for n>=5."""
    ok = True
    min_gap = math.inf
    for n in range(1, 101):
        r = qsc_bound_report(n, 7, 0.001)
        ok = ok and (r.h_ext_ub <= r.h_fano_ub + 1e-9)
        if n >= 5:
            min_gap = min(min_gap, r.h_fano_ub - r.h_ext_ub)
    ok = ok and min_gap > 0.01
    assert _report("fano-dominance", ok, f"min gap (n>=5) = {min_gap:.4f} bits")


def test_identity_suite():
    """The three extended forms agree; MI bound equals D(p||q_ref)."""
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 51))
        q = int(rng.integers(2, 17))
        d = random_error_distribution(rng, n)
        a = ext_fano_ub(d, q)
        worst = max(
            worst,
            abs(a - ext_fano_relative_form(d, q)),
            abs(a - ext_fano_cor1(d, q)),
            abs(
                ext_mutual_info_lb(d, q)
                - relative_entropy(d.probs, reference_distribution("Q", n, q).probs)
            ),
        )
    assert _report("identity-suite", worst <= 1e-9, f"max |delta| = {worst:.3e}")


def test_n1_reduction():
    """At n=1 the extended bound is classical Fano with M = q."""
    worst = 0.0
    for q in range(2, 17):
        for pe in np.linspace(0.0, 1.0, 21):
            d = ErrorDistribution(1, ProbVector([1.0 - pe, pe]))
            classical = binary_entropy(float(pe)) + float(pe) * math.log2(q - 1)
            worst = max(worst, abs(ext_fano_ub(d, q) - classical))
    assert _report("n1-reduction", worst <= 1e-12, f"max |delta| = {worst:.3e}")


def test_error_free_channel():
    """All equivocation bounds are exactly 0; D(p||q_ref) = n log2 q."""
    ok = True
    worst = 0.0
    cases = [(2, n) for n in (1, 10, 100, 1000)] + [(7, 1), (7, 50), (7, 300), (16, 250)]
    for q, n in cases:
        d = ErrorDistribution(n, ProbVector([1.0] + [0.0] * n))
        ok = ok and ext_fano_ub(d, q) == 0.0
        ok = ok and ext_fano_cor1(d, q) == 0.0
        ok = ok and fano_conditional_entropy_ub(0.0, n * math.log2(q)) == 0.0
        ok = ok and qsc_exact_conditional_entropy(n, q, 0.0) == 0.0
        div = relative_entropy(d.probs, reference_distribution("Q", n, q).probs)
        worst = max(worst, abs(div - n * math.log2(q)))
    ok = ok and worst <= 1e-9
    assert _report("error-free-channel", ok, f"max |D - n log2 q| = {worst:.3e}")


def test_qsc_capacity_cross_check():
    """Enumerated mutual information equals n times the per-symbol capacity."""
    worst = 0.0
    for q in (2, 3):
        for eps in (0.02, 0.1, 0.25):
            for n in (1, 2, 3, 4):
                enum = exact_mutual_info(qsc_spec(q, eps), n)
                closed = n * qsc_capacity_per_symbol(q, eps)
                worst = max(worst, abs(enum - closed))
    assert _report("capacity-cross-check", worst <= 1e-9, f"max |delta| = {worst:.3e}")


def test_monte_carlo_consistency():
    """10^6 seeded trials of QSC(7, 0.001, 30) match the binomial law."""
    trials = 10**6
    n, q, eps = 30, 7, 0.001
    counts = monte_carlo_error_histogram(qsc_spec(q, eps), n, trials, seed=20240901)
    expected = qsc_error_distribution(n, q, eps)
    ok = True
    for k, pk in enumerate(expected.probs):
        se = math.sqrt(max(pk * (1.0 - pk), 1e-300) / trials)
        ok = ok and abs(counts[k] / trials - pk) <= 3.0 * se
    pb = 1.0 - (1.0 - 0.006) ** 30  # Eq.-of-record block error, = 0.16518...
    pb_emp = 1.0 - counts[0] / trials
    se_b = math.sqrt(pb * (1.0 - pb) / trials)
    ok = ok and abs(pb_emp - pb) <= 3.0 * se_b
    assert _report(
        "monte-carlo-consistency", ok,
        f"empirical P_b = {pb_emp:.5f}, theory {pb:.5f}, 3se = {3 * se_b:.2e}",
    )


def test_codebook_bound_ordering():
    """logm_ext_ub <= logm_fano_ub for q=7, eps=0.001, n=1..100.

    Known to fail for n in 1..4: with the halved error constraints the
    extended converse evaluates strictly above the classical one at very
    short blocklengths (at n=1 it reduces to I + H_b(p_e) + eps log2(q-1)
    versus the smaller I + H_b(p_e/2) + eps I / 2 + ...). The assertion is
    kept as specified; see the gap sign per blocklength in the output.
    """
    violations = []
    for n in range(1, 101):
        r = qsc_bound_report(n, 7, 0.001)
        if r.logm_ext_ub > r.logm_fano_ub + 1e-9:
            violations.append(n)
    ok = not violations
    _report(
        "codebook-bound-ordering", ok,
        f"gap sign negative at n={violations}" if violations else "gap >= 0 on all rows",
    )
    assert ok, f"extended codebook bound above classical at n={violations}"
