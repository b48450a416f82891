"""Acceptance suite: one test per criterion, each printing a verdict line.

All checks are exact (tolerance zero); the bounds follow the package
contract: classification sweeps to n = 10 / 9, oracle equivalence
exhaustive to n = 8 plus 10,000 samples at n = 10, censuses to size 8 / 6,
hypothesis lemmas to n = 9 (n = 12 for the sparse rectangle case).
"""

import json
import os
import subprocess
import sys
from math import factorial

from kronlab import characters as ch
from kronlab import classify as cl
from kronlab import extreme as ex
from kronlab import kronecker as kr
from kronlab import partitions as pt

SAMPLE_SEED = 20260810


def _verdict(num: int, passed: bool, detail: str) -> None:
    print(f"[{'PASS' if passed else 'FAIL'}] criterion {num}: {detail}")
    assert passed, detail


def unordered_pairs(n):
    ps = pt.partitions_of(n)
    for i, mu in enumerate(ps):
        for nu in ps[i:]:
            yield mu, nu


def test_criterion_1_three_four_component_classification():
    report = cl.verify_34c(10)
    _verdict(
        1,
        report.passed,
        f"3/4-component classification exact for n <= 10 "
        f"({report.total_counterexamples} counterexamples, {report.wall_time_s:.1f}s)",
    )


def test_criterion_2_extreme_component_classification():
    report = cl.verify_extcomp(9)
    _verdict(
        2,
        report.passed,
        f"extreme-component classification exact for n <= 9 "
        f"({report.total_counterexamples} counterexamples, {report.wall_time_s:.1f}s)",
    )


def test_criterion_3_oracle_equivalence():
    report = cl.verify_dvir_oracle(8, samples=10000, sample_n=10, seed=SAMPLE_SEED)
    _verdict(
        3,
        report.passed,
        f"recursion equals inner-product oracle, exhaustive n <= 8 plus "
        f"10000 samples at n = 10 ({report.wall_time_s:.1f}s)",
    )


def test_criterion_4_character_table_soundness():
    ok = True
    for n in range(1, 11):
        table = ch.character_table(n)
        identity = (1,) * n
        order = factorial(n)
        for i, lam in enumerate(table.labels):
            if ch.degree(lam) != table.value(lam, identity):
                ok = False
            for j, mu in enumerate(table.labels):
                if ch.inner_product(table.row(lam), table.row(mu)) != (1 if i == j else 0):
                    ok = False
        for i, s in enumerate(table.labels):
            for j, t in enumerate(table.labels):
                total = sum(row[i] * row[j] for row in table.rows)
                expected = order // ch.class_size(t) if i == j else 0
                if total != expected:
                    ok = False
    _verdict(4, ok, "row/column orthogonality and degrees exact for n <= 10")


def _rect_products_match(a: int, b: int) -> bool:
    n = a * b
    rect = (a,) * b
    first = kr.kron_decompose((n - 1, 1), rect).coeffs == {
        (a + 1,) + (a,) * (b - 2) + (a - 1,): 1,
        (a,) * (b - 1) + (a - 1, 1): 1,
    }
    second = kr.kron_decompose((2,) + (1,) * (n - 2), rect).coeffs == {
        (b + 1,) + (b,) * (a - 2) + (b - 1,): 1,
        (b,) * (a - 1) + (b - 1, 1): 1,
    }
    return first and second


def test_criterion_5_explicit_decompositions():
    ok = True
    for a in range(2, 7):
        for b in range(2, 7):
            if a * b <= 12 and not _rect_products_match(a, b):
                ok = False
    # the five listed squares
    for n in range(2, 11):
        if kr.kron_decompose((n,), (n,)).coeffs != {(n,): 1}:
            ok = False
        if kr.kron_decompose((1,) * n, (1,) * n).coeffs != {(n,): 1}:
            ok = False
        if n >= 4:
            same = {(n,): 1, (n - 1, 1): 1, (n - 2, 2): 1, (n - 2, 1, 1): 1}
            if kr.kron_decompose((n - 1, 1), (n - 1, 1)).coeffs != same:
                ok = False
            if kr.kron_decompose((2,) + (1,) * (n - 2), (2,) + (1,) * (n - 2)).coeffs != same:
                ok = False
    ok &= kr.kron_decompose((2, 1), (2, 1)).coeffs == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    ok &= kr.kron_decompose((2, 2), (2, 2)).coeffs == {(4,): 1, (2, 2): 1, (1,) * 4: 1}
    square6 = {(6,): 1, (4, 2): 1, (3, 1, 1, 1): 1, (2, 2, 2): 1}
    ok &= kr.kron_decompose((3, 3), (3, 3)).coeffs == square6
    ok &= kr.kron_decompose((2, 2, 2), (2, 2, 2)).coeffs == square6
    for k in range(2, 6):
        want = {(k + 2, k - 1): 1, (k + 1, k): 1, (k + 1, k - 1, 1): 1, (k, k, 1): 1}
        if kr.kron_decompose((2 * k, 1), (k + 1, k)).coeffs != want:
            ok = False
    ok &= kr.kron_decompose((3, 3), (2, 2, 2)).coeffs == {
        (1,) * 6: 1,
        (2, 2, 1, 1): 1,
        (4, 1, 1): 1,
        (3, 3): 1,
    }
    # five-constituent two-row product; the fifth label has size 6, so the
    # size-5 rendering of it in print is a typo and cannot occur here
    two_row = kr.kron_decompose((3, 3), (4, 2)).coeffs
    ok &= two_row == {(5, 1): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 1, (2, 2, 1, 1): 1}
    ok &= (2, 2, 1) not in two_row
    _verdict(
        5,
        ok,
        "explicit decompositions reproduced verbatim "
        "(rectangles to n = 12, squares, balanced products, [3^2].[4,2] "
        "with [2^2,1^2] as its fifth constituent)",
    )


def test_criterion_6_almost_width_contract():
    ok = True
    checked = 0
    for n in range(2, 9):
        for mu, nu in unordered_pairs(n):
            m, _ = kr.rect_hull(mu, nu)
            if m < 2:
                continue
            chi = ex.almost_width_chi(mu, nu)
            dec = kr.kron_decompose(mu, nu)
            for lam in pt.partitions_of(n):
                if lam[0] == m - 1:
                    checked += 1
                    if dec.coeff(lam) != chi.coeff(lam[1:]):
                        ok = False
    _verdict(
        6,
        ok and checked > 1000,
        f"almost-width virtual character matches every coefficient with "
        f"first part m-1, all pairs n <= 8 ({checked} coefficients)",
    )


def test_criterion_7_skew_censuses():
    two_comp = cl.skew_two_component_census(8)
    ok = two_comp.passed
    homogeneous = 0
    from kronlab import lr

    for size in range(1, 9):
        for shape in pt.reduced_skew_shapes(size):
            dec = lr.skew_decompose(shape)
            cls = lr.classify_skew_shape(shape)
            if cls.is_irreducible():
                homogeneous += 1
                if dec != {cls.alpha: 1}:
                    ok = False
            elif len(dec) < 2:
                ok = False
    products = cl.skew_product_censuses(6)
    ok = ok and products.passed
    _verdict(
        7,
        ok,
        f"skew censuses exact: two-component families to size 8, "
        f"homogeneity to size 8 ({homogeneous} irreducible shapes), "
        f"products to size 6",
    )


def test_criterion_8_hypothesis_lemmas():
    report = cl.verify_section5(9, 12)
    _verdict(
        8,
        report.passed,
        f"width-bound, case-table, production and five-component lemmas "
        f"exact (n <= 9, sparse to n <= 12; "
        f"{report.total_counterexamples} counterexamples)",
    )


def test_criterion_9_sweep_determinism(tmp_path):
    env = dict(os.environ)
    env["KRONLAB_CACHE"] = str(tmp_path / "cache")
    outputs = []
    for threads in ("1", str(os.cpu_count() or 2)):
        result = subprocess.run(
            [sys.executable, "-m", "kronlab", "--threads", threads, "sweep", "--n", "8"],
            capture_output=True,
            env=env,
        )
        assert result.returncode == 0, result.stderr
        outputs.append(result.stdout)
    identical = outputs[0] == outputs[1]
    lines = outputs[0].decode().strip().splitlines()
    expected_pairs = 22 * 23 // 2
    _verdict(
        9,
        identical and len(lines) == expected_pairs,
        f"sweep at n = 8 is byte-identical for 1 vs {os.cpu_count() or 2} threads "
        f"({len(lines)} entries)",
    )
    json.loads(lines[0])
