"""Acceptance gate: one test per shipped property suite, all exact.

Each test drives the corresponding suite in freepoisson.checks at its
default seed, so `pytest -v tests/test_acceptance.py` prints one
pass/fail line per suite.  Failure messages carry the suite's own
detail string, including the first failing case.
"""

from freepoisson.checks import run_check


def _gate(name):
    res = run_check(name)
    assert res.passed, f"{name}: {res.detail}"


def test_c01_poisson_axioms():
    _gate("poisson-axioms")


def test_c02_env_canonical():
    _gate("env-canonical")


def test_c03_leading_terms():
    _gate("leading-terms")


def test_c04_graded_top():
    _gate("graded-top")


def test_c05_lambda_shift():
    _gate("lambda-shift")


def test_c06_dependence_corpus():
    _gate("dependence-corpus")


def test_c07_pair_classifier():
    _gate("pair-classifier")


def test_c08_jacobian_inversion():
    _gate("jacobian-inversion")


def test_c09_weyl_embedding():
    _gate("weyl-embedding")


def test_c10_symmetrization():
    _gate("symmetrization")


def test_c11_h_commutation():
    _gate("h-commutation")


def test_c12_moyal():
    _gate("moyal")


def test_c13_weyl_relations():
    _gate("weyl-relations")


def test_c14_last_letter():
    _gate("last-letter")


def test_c15_cli_roundtrip():
    _gate("cli-roundtrip")
