"""The ten acceptance criteria, each at exact equality.

Every test records one PASS/FAIL line; ``conftest.py`` prints the lines at the
end of the run and ``python tests/test_acceptance.py`` prints them directly.
"""
import time

import pytest

from qfock.canonfock import InternalError, compare_bases, decomposition_matrix, hall_basis, inversion_check, lt_basis
from qfock.checks import (
    finite_wedge_suite,
    gamma_suite,
    hall_suite,
    hecke_suite,
    involution_suite,
    kl_suite,
    straighten_suite,
)

RESULTS = {}


def record(number, title, checks_or_ok, started, budget=None):
    if isinstance(checks_or_ok, bool):
        ok, failed = checks_or_ok, []
    else:
        failed = [c for c in checks_or_ok if not c.passed]
        ok = not failed
    elapsed = time.perf_counter() - started
    timing = f"{elapsed:.1f}s" + (f" (budget {budget}s)" if budget else "")
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  [{timing}]"
    if failed:
        line += "  failing: " + "; ".join(f"{c.name} {c.detail}" for c in failed[:3])
    RESULTS[number] = line
    print(line)
    return ok


def test_criterion_01_straightening_matches_quotient():
    t = time.perf_counter()
    checks = straighten_suite(2, (2, 3), -4, 4) + straighten_suite(3, (2, 3), -4, 4)
    assert record(1, "straighten = quotient reduction, rank = #decreasing words, n in {2,3}, l in {2,3}, [-4,4]",
                  checks, t, 30)


def test_criterion_02_hecke_relations():
    t = time.perf_counter()
    checks = hecke_suite(2, (2, 3), -4, 4) + hecke_suite(3, (2, 3), -4, 4)
    assert record(2, "quadratic, braid and Bernstein relations on the same range", checks, t, 10)


def test_criterion_03_psi_involution_commutes_with_f():
    t = time.perf_counter()
    checks = involution_suite(2, 5) + involution_suite(3, 5)
    assert record(3, "psi is an involution commuting with f_alpha, |alpha| <= 2, weights <= 5", checks, t, 30)


def test_criterion_04_hall_basis_is_canonical():
    t = time.perf_counter()
    ok = True
    for n in (2, 3):
        for w in range(5):
            try:
                hall_basis(w, n, check=True)
            except InternalError:
                ok = False
    assert record(4, "Hall basis columns psi-fixed and unitriangular, n in {2,3}, weights <= 4", ok, t, 60)


def test_criterion_05_finite_wedge_hall_equals_plus():
    t = time.perf_counter()
    assert record(5, "B_l = B_l+ for n = 3, l = 2, weights <= 5", finite_wedge_suite(3, 2, 5), t)


def test_criterion_06_hall_equals_plus_level_two():
    t = time.perf_counter()
    diffs = [d for w in range(5) for d in compare_bases(hall_basis(w, 2), lt_basis(w, 2, "+"))]
    ok = record(6, f"B = B+ entrywise for n = 2, weights <= 4 ({len(diffs)} differing entries)", not diffs, t)
    assert ok, diffs[:3]


def test_criterion_07_kl_formula_matches_lt():
    t = time.perf_counter()
    checks = [c for c in kl_suite(2, 2, 4) if c.name.startswith("b-")]
    assert record(7, "b- from KL polynomials = b- from LT algorithm, n = 2, l = 2, weights <= 4", checks, t, 60)


def test_criterion_08_inversion_and_decomposition():
    t = time.perf_counter()
    ok = all(inversion_check(w, n) for n in (2, 3) for w in range(5))
    for n in (2, 3):
        for w in range(5):
            order, mat = decomposition_matrix(w, n)
            ok &= all(mat[i][i] == 1 and not any(mat[i][i + 1:]) for i in range(len(order)))
    ok &= decomposition_matrix(2, 2) == ([(2,), (1, 1)], [[1, 0], [1, 1]])
    assert record(8, "inversion identity n in {2,3}, weights <= 4; unitriangular decomposition matrices", ok, t)


def test_criterion_09_hall_algebra():
    t = time.perf_counter()
    assert record(9, "Hall algebra: associativity, held-out prime, bar, canonical basis, worked d = (1,1)",
                  hall_suite(2, 3), t)


def test_criterion_10_gamma():
    t = time.perf_counter()
    checks = gamma_suite(2, 4, samples=10) + gamma_suite(3, 4, samples=10)
    assert record(10, "gamma: generators, twisted multiplicativity, v = 1 congruence, Fock action by two routes",
                  checks, t)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
