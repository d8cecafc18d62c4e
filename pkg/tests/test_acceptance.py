"""Acceptance gate: every headline guarantee of the package, one test per
criterion, each printing a PASS/FAIL line (visible with ``pytest -s`` or
``-rA``).

Criterion 10b is expected to fail as stated and is marked strict-xfail: at
k = 10^4 the ratio normalized by (log k)^n sits ~13% above (K)^n because the
normalization omits the gamma shift (the expansion carries an O(1/log k)
term); the companion test shows the gamma-shifted normalization converges.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from wsegre.bounds import (
    GAMMA,
    GeometryInput,
    logarithmic_volume,
    threshold_logk,
    threshold_table,
    volume_lower_bound,
)
from wsegre.chow import weighted_tangent_top_segre
from wsegre.checks import (
    check_boundary_chain,
    check_harmonic_bracketing,
    check_interior_chain,
)
from wsegre.combinatorics import sum_nondecreasing, sum_repeated
from wsegre.jets import BoundaryData, boundary_coeff, boundary_jet_sections
from wsegre.oracles import (
    check_orbifold_h0,
    check_partition_power_growth,
    count_weighted_monomials,
    sum_nondecreasing_bruteforce,
    sum_repeated_bruteforce,
)

PUBLISHED_THRESHOLDS = {6: 41534, 7: 151711, 8: 920325}


def _line(num, ok: bool, detail: str):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_threshold_values_and_runtime(capsys):
    from wsegre.cli import main
    import json

    details = []
    ok = True
    for n, published in PUBLISHED_THRESHOLDS.items():
        assert main(["threshold", "--n", str(n), "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        rounded = payload["result"]["rounded"]
        ok = ok and abs(rounded - published) <= 1
        threshold_logk(n)  # warm
        timings = []
        for _ in range(5):
            t0 = time.perf_counter()
            threshold_logk(n)
            timings.append(time.perf_counter() - t0)
        best = min(timings)
        ok = ok and best < 1e-3
        details.append(f"n={n}: {rounded} vs {published} in {best * 1e6:.1f}us")
    with capsys.disabled():
        _line(1, ok, "; ".join(details))


def test_criterion_02_threshold_coefficients():
    rows = {row.n: row for row in threshold_table()}
    ok = (5 - 2) * math.factorial(5) + 1 == 361
    ok = ok and rows[5].coefficient == 361
    ok = ok and rows[4].coefficient == 49
    note = " ".join(rows[4].footnotes)
    ok = ok and ("49" in note and "5" in note)
    _line(2, ok, f"n=5 coefficient {rows[5].coefficient}, n=4 coefficient "
                 f"{rows[4].coefficient} with discrepancy footnote")


def test_criterion_03_exact_cross_identity():
    start = time.perf_counter()
    ok = True
    for n in range(1, 6):
        for k in range(1, 7):
            lhs = weighted_tangent_top_segre(n, k) * Fraction(math.factorial(k)) ** n
            if lhs != sum_repeated(n, k):
                ok = False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    _line(3, ok, f"30 pairs exact in {elapsed:.2f}s (< 10s)")


def test_criterion_04_oracle_equivalence():
    ok = True
    for n in range(1, 5):
        for k in range(1, 5):
            ok = ok and sum_repeated(n, k) == sum_repeated_bruteforce(n, k)
            ok = ok and sum_nondecreasing(n, k) == sum_nondecreasing_bruteforce(n, k)
    _line(4, ok, "generating functions equal brute-force enumeration, n,k <= 4")


def test_criterion_05a_interior_chain():
    report = check_interior_chain(5, 100, (1000, 10000))
    _line("5a", report.passed, report.rhs)


def test_criterion_05b_boundary_chain():
    report = check_boundary_chain(100, (1000, 10000), 10**4)
    _line("5b", report.passed, report.lhs)


def test_criterion_05c_harmonic_bracketing():
    report = check_harmonic_bracketing(10**6)
    _line("5c", report.passed, report.lhs)


def test_criterion_06_orbifold_monomial_growth():
    ok = True
    details = []
    for weights in ((1, 1), (1, 2), (2, 4, 6), (1, 2, 3)):
        report = check_orbifold_h0(weights, 10**4 * math.lcm(*weights))
        ok = ok and report.passed
        details.append(f"{weights} ok" if report.passed else f"{weights} FAILED")
    exact = all(
        count_weighted_monomials((1, 1, 1), m) == math.comb(m + 2, 2)
        for m in range(3001)
    )
    ok = ok and exact
    details.append("(1,1,1) exact for m <= 3000")
    _line(6, ok, "; ".join(details))


def test_criterion_07_partition_power_growth():
    ok = True
    details = []
    for n, k in ((1, 1), (1, 2), (2, 2), (2, 3)):
        report = check_partition_power_growth(n, k, 500)
        ok = ok and report.passed
        details.append(f"({n},{k}): {report.lhs}")
    _line(7, ok, "; ".join(details))


def test_criterion_08_boundary_small_cases():
    beta = Fraction(7, 5)
    ok = True
    for k in (1, 2, 3):
        ok = ok and boundary_jet_sections(k, 0, BoundaryData(2, beta, 3)) == 0
    for c in (1, 4):
        ok = ok and boundary_jet_sections(1, 1, BoundaryData(3, beta, c)) == c
    for c, b in ((1, Fraction(1)), (3, Fraction(11, 4))):
        got = boundary_jet_sections(1, 2, BoundaryData(2, b, c))
        ok = ok and got == 2 * c + b
    _line(8, ok, "degree 0 vanishes; order 1 cases equal c and 2c + beta exactly")


def test_criterion_09_boundary_leading_coefficient():
    start = time.perf_counter()
    b = BoundaryData(2, Fraction(1), 1)
    m = 3000
    value = boundary_jet_sections(2, m, b)
    elapsed = time.perf_counter() - start
    ratio = value / Fraction(m**5, math.factorial(5))
    target = boundary_coeff(2, 2) * b.neg_dn_abs
    rel = abs(float(ratio / target) - 1)
    ok = rel <= 0.10 and elapsed < 60.0
    _line(9, ok, f"ratio {float(ratio):.6f} vs 7/16 = {float(target)} "
                 f"(gap {rel:.2%}) in {elapsed:.1f}s")


def test_criterion_10a_no_boundary_reduces_to_volume():
    rng = random.Random(23)
    ok = True
    for _ in range(30):
        n, k = rng.randint(2, 5), rng.randint(1, 7)
        kd = Fraction(rng.randint(1, 90), rng.randint(1, 11))
        g = GeometryInput(n, kd, Fraction(0))
        ok = ok and volume_lower_bound(g, k) == logarithmic_volume(n, k, kd)
    _line("10a", ok, "zero boundary term reduces the bound to the exact volume")


def _normalized_bound_ratio(shift: float) -> float:
    n, k = 2, 10**4
    g = GeometryInput(n, Fraction(9), Fraction(-1))
    scaled = volume_lower_bound(g, k) * Fraction(math.factorial(k)) ** n
    return float(math.factorial(n) * scaled) / (math.log(k) + shift) ** n


@pytest.mark.xfail(
    strict=True,
    reason="(log k)^n normalization: the ratio carries a (1 + gamma/log k)^n "
    "factor, ~13% at k = 10^4, so the stated 5% tolerance cannot hold; "
    "see the decisions ledger",
)
def test_criterion_10b_asymptotic_ratio_as_stated():
    ratio = _normalized_bound_ratio(0.0)
    target = 8.0
    rel = abs(ratio / target - 1)
    _line("10b", rel <= 0.05, f"(k!)^n n! bound/(log k)^n = {ratio:.4f} vs "
                              f"{target} (gap {rel:.2%})")


def test_criterion_10b_companion_gamma_shifted_normalization():
    ratio = _normalized_bound_ratio(GAMMA)
    target = 8.0
    rel = abs(ratio / target - 1)
    _line("10b*", rel <= 0.05, f"(k!)^n n! bound/(log k + gamma)^n = "
                               f"{ratio:.4f} vs {target} (gap {rel:.2%})")
