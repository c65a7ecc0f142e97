"""Certificates pass on the recorded identities and fail on perturbations."""

import random

import pytest

import rotaperm.resolvent as rs
from rotaperm.certify import (
    beta_printed_expansions,
    beta_trace_fallback,
    cert_A_zero_classification,
    cert_beta_identity,
    cert_charsum_support,
    cert_factorizations,
    cert_resultant_Q,
    cert_resultant_g,
    cert_resultant_h,
    run_all,
)
from rotaperm.field import FieldCtx
from rotaperm.mpoly import evaluate, parse, resultant


def test_full_suite_passes():
    reports = run_all()
    assert all(r.passed for r in reports), [r.name for r in reports if not r.passed]
    names = [r.name for r in reports]
    assert names == [
        "resultant_g", "resultant_h", "factorizations", "beta_identity",
        "printed_K1", "printed_K2", "resultant_Q",
        "charsum_support_m3", "charsum_support_m5",
        "A_zero_classification_m3", "A_zero_classification_m5",
    ]


def test_only_filter():
    assert [r.name for r in run_all(only="charsum")] == [
        "charsum_support_m3", "charsum_support_m5",
    ]


def test_printed_expansions_are_informational():
    for report in beta_printed_expansions():
        assert not report.mandatory


def test_resultant_g_perturbation_fails():
    report = cert_resultant_g(p3=rs.P3 + parse("y^3"))
    assert not report.passed
    assert report.diff


def test_resultant_h_perturbation_fails():
    assert not cert_resultant_h(p2=rs.P2 + parse("z")).passed


def test_factorization_perturbation_fails():
    factors = list(rs.A_FACTORS)
    factors[0] = factors[0] + parse("a*c")  # one flipped monomial
    report = cert_factorizations(a_factors=tuple(factors))
    assert not report.passed and "A" in report.notes


def test_beta_perturbation_fails():
    # drop the cube on (a+b): beta must no longer satisfy the quadratic
    wrong = rs.product((
        parse("a^3"), parse("b^3"), parse("c^3"), parse("a + b"),
        parse("a^2 + a*b + b^2") ** 3, parse("a^2*b + a*b^2 + c^3"),
    ))
    assert not cert_beta_identity(beta=wrong).passed


def test_resultant_Q_perturbation_fails():
    assert not cert_resultant_Q(q1=rs.Q1 + parse("b*z^2")).passed  # drops the z^2 term


def test_g_evaluation_cross_check(f8):
    """The computed resultant and the recorded expansion agree pointwise."""
    rng = random.Random(71)
    g = resultant(rs.P1, rs.P3, "x")
    for _ in range(100):
        point = {v: rng.randrange(8) for v in ("y", "z", "a", "b", "c")}
        assert evaluate(g, f8, point) == evaluate(rs.G_EXPANDED, f8, point)


def test_factorizations_numeric_agreement(f8):
    lhs = rs.A_BLOCK * rs.D_BLOCK + rs.B_BLOCK * rs.C_BLOCK
    rhs = rs.product(rs.AD_BC_FACTORS)
    for a in f8.elements():
        for b in f8.elements():
            for c in f8.elements():
                point = {"a": a, "b": b, "c": c}
                assert evaluate(lhs, f8, point) == evaluate(rhs, f8, point)


@pytest.mark.parametrize("m", [3, 5])
def test_charsum_support(m):
    assert cert_charsum_support(FieldCtx(m)).passed


@pytest.mark.parametrize("m", [3, 5, 7])
def test_trace_of_artin_schreier_shift_is_one(m):
    """Tr(1 + u + u^2) = 1 for every u when m is odd."""
    ctx = FieldCtx(m)
    for u in ctx.elements():
        assert ctx.trace(1 ^ u ^ ctx.sqr(u)) == 1


@pytest.mark.parametrize("m", [3, 5])
def test_A_zero_classification(m):
    assert cert_A_zero_classification(FieldCtx(m)).passed


def test_A_zero_examples(f8):
    from rotaperm.resolvent import resolvent_coeffs
    assert resolvent_coeffs(f8, 1, 0, 1)[0] == 0   # b=0, a=c
    assert resolvent_coeffs(f8, 1, 1, 1)[0] == 0   # a=b=c
    assert resolvent_coeffs(f8, 1, 0x2, 0)[0] != 0


@pytest.mark.parametrize("m", [3, 5])
def test_beta_trace_is_zero_wherever_defined(m):
    assert beta_trace_fallback(FieldCtx(m))
