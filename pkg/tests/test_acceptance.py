"""End-to-end acceptance suite.

Each test covers one headline criterion, enforces its time budget, and
prints a single pass/fail line so the suite output doubles as a report.
"""

import time

import pytest

from thetalab.verify import (
    check_chain,
    check_coinvariants,
    check_contraction,
    check_d_sign,
    check_e_hom,
    check_factorizations,
    check_generators,
    check_multipliers,
    check_orbit,
    check_psi,
    check_theta_laws,
)


def _run(name, budget, fn, *args, **kwargs):
    t0 = time.time()
    records = fn(*args, **kwargs)
    elapsed = time.time() - t0
    failed = [r for r in records if r["status"] != "pass"]
    ok = not failed and elapsed < budget
    print(
        f"[{'PASS' if ok else 'FAIL'}] {name}: "
        f"{len(records) - len(failed)}/{len(records)} checks, {elapsed:.2f}s"
        + (f" (budget {budget}s)" if elapsed >= budget else "")
    )
    assert not failed, failed
    assert elapsed < budget, f"{name} took {elapsed:.2f}s, budget {budget}s"


def test_criterion_01_generator_suite():
    _run("criterion-01 level-2 generator suite", 1.0, check_generators, (2, 3, 4, 5))


def test_criterion_02_psi_homomorphism():
    _run("criterion-02 psi mod-4 additivity", 10.0, check_psi, (3, 4, 5), 10000, 0)


def test_criterion_03_factorizations():
    _run("criterion-03 factorization identities", 1.0, check_factorizations, (2, 3, 4))


def test_criterion_04_chain_relation():
    _run("criterion-04 chain-relation shadow", 5.0, check_chain, (2, 3), 100, 0)


def test_criterion_05_orbit_certification():
    _run("criterion-05 orbit/stabilizer certification", 10.0, check_orbit, (2, 3, 4))


def test_criterion_06_coinvariant_dimensions():
    _run(
        "criterion-06 coinvariant dimensions",
        60.0,
        check_coinvariants,
        ((4, 1), (4, 0), (5, 1), (5, 0)),
    )


def test_criterion_07_contraction_invariance():
    _run("criterion-07 contraction invariance", 30.0, check_contraction, (4, 5))


def test_criterion_08_theta_laws():
    _run("criterion-08 theta law suite", 10.0, check_theta_laws, 0, 1e-10)


def test_criterion_09_multiplier_suite():
    _run("criterion-09 multiplier suite", 60.0, check_multipliers, 0, 100)


def test_criterion_10_e_homomorphism():
    _run("criterion-10 e-homomorphism", 120.0, check_e_hom, 0, (2, 3), 20)


def test_criterion_11_d_sign():
    _run("criterion-11 d-sign agreement", 60.0, check_d_sign, 0, 50, 5)
