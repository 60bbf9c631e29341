"""Exit criteria.  Every comparison is exact integer/rational equality.

Each test logs one ``[PASS]``/``[FAIL]`` line; the lines are repeated in the
terminal summary under "acceptance criteria".
"""

import random
import time
from fractions import Fraction
from math import comb, factorial

from weylcount.cli import main
from weylcount.identities import (
    bsm_closed_form,
    check_bsm3_recurrence,
    egf_counts,
    gessel_gf,
    generalized_gessel_gf,
    total_walk_gf,
    verify_identity,
)
from weylcount.objects import count_matchings
from weylcount.series import (
    TruncatedSeries,
    bessel_I,
    bessel_J,
    series_determinant,
    series_exp,
)
from weylcount.walks import staircase


def _report_ok(report):
    return report.passed and not report.mismatches()


def test_criterion_01_walk_egf_vs_dp(acceptance_log):
    start = time.perf_counter()
    report = verify_identity("thm11-vs-dp", max_d=3, max_n=10)
    elapsed = time.perf_counter() - start
    ok = _report_ok(report) and elapsed < 60
    acceptance_log(
        1, f"walk EGF determinant = DP, d<=3, coords<=d+3, n<=10 ({len(report.records)} points, {elapsed:.1f}s)", ok
    )
    assert report.passed, report.mismatches()[:5]
    assert elapsed < 60


def test_criterion_02_total_walks_vs_dp(acceptance_log):
    report = verify_identity("thm12-vs-dp", max_d=4, max_n=12)
    d1 = egf_counts(total_walk_gf(1, 12))
    d2 = egf_counts(total_walk_gf(2, 4))
    ok = (
        _report_ok(report)
        and d1[:7] == [1, 1, 2, 3, 6, 10, 20]
        and d1 == [comb(n, n // 2) for n in range(13)]
        and d2 == [1, 1, 3, 6, 20]
    )
    acceptance_log(2, "det(J_{i-j}) = free-endpoint DP, d<=4, n<=12", ok)
    assert ok


def test_criterion_03_gessel_vs_lis(acceptance_log):
    report = verify_identity("thm14-vs-lis", max_d=4, max_n=8)
    d2 = [r.formula for r in report.records if r.point["d"] == 2]
    ok = _report_ok(report) and d2[:6] == [1, 1, 2, 5, 14, 42]
    acceptance_log(3, "det(I_{i-j}) = LIS-bounded permutation counts, d<=4, n<=8", ok)
    assert ok


def test_criterion_04_generalized_gessel_vs_pairs(acceptance_log):
    report = verify_identity("thm41-vs-pairs", max_d=3, max_n=8)
    same = all(
        generalized_gessel_gf(staircase(d), staircase(d), 16) == gessel_gf(d, 16) for d in (1, 2, 3)
    )
    pairs = {(r.point["d"], r.point["lambda"], r.point["nu"]) for r in report.records}
    ok = _report_ok(report) and same and len(pairs) >= 10
    acceptance_log(4, f"det(I_{{lam_i-nu_j}}) = skew SYT pair counts, {len(pairs)} (lam,nu) pairs", ok)
    assert ok


def test_criterion_05_bilateral_matchings(acceptance_log):
    report = verify_identity("prop21-vs-brute", max_n=7)
    bsm = [r.formula for r in report.records if r.label == "bilateral-matchings"]
    ok = _report_ok(report) and bsm[:5] == [1, 1, 3, 7, 25]
    acceptance_log(5, "n! [t^n] exp(t+t^2) = bilaterally symmetric matchings, n<=7", ok)
    assert ok


def test_criterion_06_four_way_equality(acceptance_log):
    report = verify_identity("cor22-four-way", max_d=3, max_n=5)
    labels = {r.label for r in report.records}
    ok = _report_ok(report) and labels == {
        "palindromic-tableaux",
        "bilateral-matchings",
        "tableaux-any-shape",
    }
    acceptance_log(6, "total walks = palindromic tableaux = bilateral matchings = tableaux of any shape, d<=3, n<=5", ok)
    assert ok


def test_criterion_07_closed_forms(acceptance_log):
    report = verify_identity("closed-forms-vs-brute", max_d=3, max_n=7)
    brute = [r for r in report.records if r.label == "brute-force"]
    series = [r for r in report.records if r.label == "determinant"]
    # bsm_4(3) three ways
    closed = bsm_closed_form(3, 4)
    v0, v1 = bsm_closed_form(3, 0), bsm_closed_form(3, 2)
    predicted = Fraction(4 * 43 * 3 * v1 - 36 * 3 * 1 * 1 * v0, 5 * 4 * 3)
    forced = count_matchings(4, max_crossing=3, bilateral=True)
    explicit = all(
        bsm_closed_form(1, 2 * m) == comb(2 * m, m)
        and bsm_closed_form(1, 2 * m + 1) == comb(2 * m + 2, m + 1) // 2
        and bsm_closed_form(2, 2 * m)
        == factorial(2 * m + 1) * factorial(2 * m) // (factorial(m) * factorial(m + 1)) ** 2
        for m in range(10)
    )
    ok = (
        _report_ok(report)
        and max(r.point["n"] for r in brute) == 7
        and max(r.point["n"] for r in series) == 20
        and closed == predicted == forced == 24
        and explicit
    )
    acceptance_log(7, "closed forms d=1,2,3 = brute force (n<=7) = determinant series (n<=20); bsm_4(3)=24", ok)
    assert ok


def test_criterion_08_p_recursion(acceptance_log, capsys):
    values = [bsm_closed_form(3, 2 * n) for n in range(11)]
    report = check_bsm3_recurrence(values)
    code_ok = main(["verify", "bsm3-recurrence", "--max-n", "10", "--format", "json"])
    code_bad = main(["verify", "bsm3-recurrence", "--values", "1,3,25", "--format", "json"])
    capsys.readouterr()
    ok = report.passed and values[:2] == [1, 3] and code_ok == 0 and code_bad == 1
    acceptance_log(8, "second-order P-recursion for bsm_{2n}(3), n<=10; perturbed input exits 1", ok)
    assert ok


def test_criterion_09_hook_length(acceptance_log):
    report = verify_identity("hlf-vs-enum", max_n=8)
    labels = {r.label for r in report.records}
    ok = _report_ok(report) and labels == {"syt", "ballot-det-vs-dp"}
    acceptance_log(9, "hook-length determinant = SYT enumeration; ballot DP = determinant, |shape|<=8", ok)
    assert ok


def test_criterion_10_sum_identities(acceptance_log):
    reports = [
        verify_identity("eq5-sum-squares", max_n=6),
        verify_identity("eq6-sum", max_n=6),
        verify_identity("eq7-bounded-sum-squares", max_d=3, max_n=5),
        verify_identity("eq8-bounded-sum", max_d=3, max_n=5),
    ]
    n3 = [r.formula for r in reports[0].records if r.point["n"] == 3 and r.label == "matchings"]
    ok = all(_report_ok(r) for r in reports) and n3 == [15]
    acceptance_log(10, "sum and sum-of-squares identities, unbounded n<=6, bounded d<=3 n<=5", ok)
    assert ok


def _random_series(rng, order):
    return TruncatedSeries(
        tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order + 1))
    )


def test_criterion_11_series_properties(acceptance_log):
    rng = random.Random(20061)
    ok = True
    for s in range(-8, 9):
        for order in range(13):
            a = bessel_I(s, order)
            ok &= a == bessel_I(-s, order)
            ok &= all(c == 0 for k, c in enumerate(a) if (k - abs(s)) % 2)
            ok &= (bessel_J(s, order) - bessel_I(s, order) - bessel_I(s - 1, order)).is_zero()
    for _ in range(200):
        order = rng.randint(0, 8)
        p = _random_series(rng, order)
        p = p - p[0]
        ok &= series_exp(p) * series_exp(-p) == TruncatedSeries.one(order)
    for _ in range(150):
        d, order = rng.randint(1, 4), rng.randint(0, 5)
        m = [[_random_series(rng, order) for _ in range(d)] for _ in range(d)]
        det = series_determinant(m, "leibniz")
        ok &= det == series_determinant(m, "berkowitz")
        if d >= 2:
            i, j = rng.sample(range(d), 2)
            swapped = list(m)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            ok &= series_determinant(swapped) == -det
    acceptance_log(11, "Bessel symmetry/parity, exp(p)exp(-p)=1, row-swap antisymmetry, Leibniz = Berkowitz", ok)
    assert ok
