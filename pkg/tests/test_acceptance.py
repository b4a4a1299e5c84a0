"""Acceptance criteria 1-7.

Each test records one PASS/FAIL line; conftest prints them after the run.
``python3 tests/test_acceptance.py`` runs the same checks without pytest.
"""

import time

import pytest

from signed_partitions.bijections import MapId, forward, inverse, t_of
from signed_partitions.catalog import IdentityId
from signed_partitions.classes import ClassId, enumerate_class
from signed_partitions.core import conjugate, parse_partition, parse_signed
from signed_partitions.harness import (
    MUTATIONS, run_mutation, verify_bijection, verify_counts, verify_series,
)
from signed_partitions.qseries import product_side, sum_side
from worked_examples import MAP_ROWS, RR1_T_OF_A, T_OF

RESULTS = {}


def record(number, ok, detail, elapsed, limit=None):
    within = limit is None or elapsed < limit
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    status = "PASS" if ok and within else "FAIL"
    RESULTS[number] = f"criterion {number}: {status}  {detail}  [{elapsed:.2f}s{budget}]"
    print(RESULTS[number])
    return ok and within


def test_criterion_1_worked_examples():
    start = time.perf_counter()
    bad = []
    for bits, expected in T_OF[:2]:
        if t_of(bits) != expected:
            bad.append(f"t{bits}")
    if conjugate(RR1_T_OF_A).ascending() != (1, 4, 6):
        bad.append("t(A)'")
    for map_id, source, image in MAP_ROWS:
        if str(forward(map_id, parse_partition(source))) != image:
            bad.append(f"{map_id} forward")
    if inverse(MapId.H_GG1, parse_signed(MAP_ROWS[3][2])) != parse_partition(MAP_ROWS[3][1]):
        bad.append("H_GG1 pre-image")
    elapsed = time.perf_counter() - start
    detail = f"{len(MAP_ROWS) + 3} examples exact" if not bad else f"mismatch: {bad}"
    assert record(1, not bad, detail, elapsed, 1.0)


def test_criterion_2_count_equality():
    start = time.perf_counter()
    failed = [r.summary() for r in (verify_counts(i, 40) for i in IdentityId) if not r.passed]
    elapsed = time.perf_counter() - start
    detail = "14 identities, n <= 40" if not failed else "; ".join(failed)
    assert record(2, not failed, detail, elapsed, 300.0)


def test_criterion_3_series_against_enumeration():
    start = time.perf_counter()
    reports = [verify_series(i, 60, count_max=40) for i in IdentityId]
    failed = [r.summary() for r in reports if not r.passed]
    elapsed = time.perf_counter() - start
    detail = "14 sum sides, N = 60, counts n <= 40" if not failed else "; ".join(failed)
    assert record(3, not failed, detail, elapsed, 60.0)


def _difference_two_counts(order):
    # f[m][n]: partitions of n, parts <= m, adjacent parts differ by >= 2
    f = [[1] + [0] * order, [1, 1] + [0] * (order - 1)]
    for m in range(2, order + 1):
        row = f[m - 1][:]
        for n in range(m, order + 1):
            row[n] += f[m - 2][n - m]
        f.append(row)
    return f[order]


def test_criterion_4_product_identities():
    start = time.perf_counter()
    order = 200
    bad = [i for i in ("RR1", "GG1", "GG2") if sum_side(i, order) != product_side(i, order)]
    if _difference_two_counts(order) != list(product_side("RR1", order)):
        bad.append("RR1 restated")
    elapsed = time.perf_counter() - start
    detail = "RR1 mod 5 (series and restated), GG1, GG2 mod 8, N = 200" if not bad \
        else f"mismatch: {bad}"
    assert record(4, not bad, detail, elapsed, 30.0)


@pytest.mark.slow
def test_criterion_5_bijection_sweeps():
    start = time.perf_counter()
    failed = [r.summary() for r in (verify_bijection(m, 35) for m in MapId) if not r.passed]
    elapsed = time.perf_counter() - start
    detail = "12 maps, weight <= 35" if not failed else "; ".join(failed)
    assert record(5, not failed, detail, elapsed, 600.0)


def test_criterion_6_difference_identity():
    start = time.perf_counter()
    diff = sum_side("GG1", 40) - sum_side("GG2", 40)
    counts = [sum(1 for p in enumerate_class(ClassId.GG1, n) if p and p.ascending()[0] <= 2)
              for n in range(41)]
    ok = list(diff) == counts
    elapsed = time.perf_counter() - start
    first_bad = next((n for n in range(41) if diff[n] != counts[n]), None)
    detail = "GG1 - GG2 = smallest part in {1,2}, n <= 40" if ok else f"first mismatch n={first_bad}"
    assert record(6, ok, detail, elapsed)


def test_criterion_7_falsifiability():
    start = time.perf_counter()
    missed = []
    for m in MUTATIONS:
        report = run_mutation(m)
        first = report.first_failure
        if report.passed or first is None or not first.witness:
            missed.append(m.name)
    elapsed = time.perf_counter() - start
    ok = not missed and len(MUTATIONS) >= 5
    detail = f"{len(MUTATIONS)} mutations, each FAIL with a witness" if ok \
        else f"not caught: {missed}"
    assert record(7, ok, detail, elapsed)


if __name__ == "__main__":
    import sys
    tests = [test_criterion_1_worked_examples, test_criterion_2_count_equality,
             test_criterion_3_series_against_enumeration, test_criterion_4_product_identities,
             test_criterion_5_bijection_sweeps, test_criterion_6_difference_identity,
             test_criterion_7_falsifiability]
    ok = True
    for t in tests:
        try:
            t()
        except AssertionError:
            ok = False
    sys.exit(0 if ok else 1)
