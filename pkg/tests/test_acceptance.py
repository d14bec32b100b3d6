"""Acceptance gate.

Each test drives one of the verification suites from qborel.cli at its full
scope and asserts every check passes, plus the runtime budget where one is
stated.  pytest -v prints one pass/fail line per criterion.
"""

import time

from qborel.cli import (
    suite_characters,
    suite_enumerate,
    suite_hopf,
    suite_kernel,
    suite_ls,
    suite_quotient,
    suite_strata,
    suite_weyl,
)
from qborel.rootsys import build_root_system

RANK2 = ("A2", "B2", "G2")


def _run(suite, labels):
    checks = []
    for label in labels:
        checks.extend(suite(build_root_system(label), label))
    return checks


def _assert_all(checks):
    assert checks
    bad = [c for c in checks if not c.ok]
    assert not bad, "; ".join(f"{c.name} [{c.detail}]" for c in bad)


def test_01_rank2_exhaustive_stratification():
    t0 = time.perf_counter()
    checks = _run(suite_strata, RANK2)
    elapsed = time.perf_counter() - t0
    _assert_all(checks)
    # every reduced word of every rank-2 element, four structural checks each
    for label in RANK2:
        assert any(c.name.startswith(f"{label}: T^w closed") for c in checks)
        assert any("end roots" in c.name and c.name.startswith(label) for c in checks)
    assert elapsed < 10.0, f"{elapsed:.1f}s"


def test_02_a2_longest_element_strata():
    checks = suite_strata(build_root_system("A2"), "A2")
    extras = [c for c in checks if c.name.startswith("A2: w0") or "W^{w0}" in c.name]
    assert len(extras) == 3
    _assert_all(extras)


def test_03_ls_relation_shape():
    t0 = time.perf_counter()
    checks = _run(suite_ls, RANK2)
    elapsed = time.perf_counter() - t0
    _assert_all(checks)
    assert any(c.name == "A2: ls_relation(1,2) vanishes" for c in checks)
    assert elapsed < 30.0, f"{elapsed:.1f}s"


def test_04_polynomial_quotients():
    t0 = time.perf_counter()
    checks = _run(suite_quotient, RANK2 + ("A3",))
    elapsed = time.perf_counter() - t0
    _assert_all(checks)
    assert elapsed < 120.0, f"{elapsed:.1f}s"


def test_05_enumeration_completeness():
    checks = _run(suite_enumerate, RANK2 + ("A3",))
    _assert_all(checks)


def test_06_character_dichotomy():
    checks = _run(suite_characters, RANK2)
    _assert_all(checks)


def test_07_descent_tests_and_chain_normalization():
    checks = _run(suite_weyl, RANK2 + ("A3", "B3"))
    _assert_all(checks)
    # rank 3 adds the chain postcondition check on 100 random chains
    for label in ("A3", "B3"):
        assert any("normalize_reflection_sequence" in c.name and c.name.startswith(label) for c in checks)


def test_08_hopf_twist_suite():
    t0 = time.perf_counter()
    checks = suite_hopf(build_root_system("A2"), "A2")
    elapsed = time.perf_counter() - t0
    _assert_all(checks)
    assert any("coideal_check" in c.name for c in checks)
    assert any("graded by the K-exponent" in c.name for c in checks)
    assert elapsed < 120.0, f"{elapsed:.1f}s"


def test_09_kernel_self_consistency():
    checks = _run(suite_kernel, RANK2)
    _assert_all(checks)
