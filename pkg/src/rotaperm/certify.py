"""Symbolic and numeric certification of the identities behind the proofs.

Each certificate recomputes a derived object from defining inputs and
compares it with the recorded expansion (symbolic certs), or verifies a
trace/zero-set claim exhaustively over a small field (numeric certs).
Defining formulas outrank recorded expansions: the two long reference
expansions of K1 and K2 are diffed informationally and never gate the
exit code.

All certificates accept their inputs as keyword overrides so that tests
can verify a perturbed input really breaks the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import resolvent as rs
from .field import FieldCtx
from .mpoly import MPoly, resultant, to_text, zero
from .resolvent import resolvent_coeffs


@dataclass(frozen=True)
class CertReport:
    name: str
    status: str  # "pass" | "fail"
    diff: MPoly | None = None
    notes: str = ""
    mandatory: bool = True

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status, "mandatory": self.mandatory}
        if self.notes:
            out["notes"] = self.notes
        if self.diff is not None and self.diff:
            text = to_text(self.diff)
            out["diff"] = text if len(text) <= 400 else f"{len(self.diff.terms)} differing monomials"
        return out


def _sym_report(name: str, diff: MPoly, notes: str = "", mandatory: bool = True) -> CertReport:
    return CertReport(name, "pass" if not diff else "fail", diff, notes, mandatory)


def cert_resultant_g(p1: MPoly | None = None, p3: MPoly | None = None) -> CertReport:
    """Res_x(P1, P3) against its recorded ten-term expansion."""
    g = resultant(p1 or rs.P1, p3 or rs.P3, "x")
    return _sym_report("resultant_g", g + rs.G_EXPANDED)


def cert_resultant_h(p2: MPoly | None = None) -> CertReport:
    """Res_z(g, P2) against its expansion, block by block in y."""
    h = resultant(rs.G_EXPANDED, p2 or rs.P2, "z")
    diff = h + rs.H_EXPANDED
    blocks = []
    for label, block, power in (("A", rs.A_BLOCK, 9), ("B", rs.B_BLOCK, 6),
                                ("C", rs.C_BLOCK, 3), ("D", rs.D_BLOCK, 0)):
        if h.coefficient_of("y", power) != block:
            blocks.append(label)
    notes = f"coefficient blocks differing: {blocks}" if blocks else "y^9/y^6/y^3/1 blocks all match"
    status = "pass" if not diff and not blocks else "fail"
    return CertReport("resultant_h", status, diff, notes)


def cert_factorizations(a_factors=None, adbc_factors=None, acb2_factors=None) -> CertReport:
    """The three recorded product shapes of A, AD+BC, AC+B^2."""
    A, B, C, D = rs.A_BLOCK, rs.B_BLOCK, rs.C_BLOCK, rs.D_BLOCK
    checks = (
        ("A", A, rs.product(a_factors or rs.A_FACTORS)),
        ("AD+BC", A * D + B * C, rs.product(adbc_factors or rs.AD_BC_FACTORS)),
        ("AC+B^2", A * C + B.sqr(), rs.product(acb2_factors or rs.AC_B2_FACTORS)),
    )
    total = zero()
    failing = []
    for label, lhs, rhs in checks:
        diff = lhs + rhs
        if diff:
            failing.append(label)
            total = total + diff
    notes = f"failing products: {failing}" if failing else "all three products match"
    return _sym_report("factorizations", total, notes)


def cert_beta_identity(beta: MPoly | None = None) -> CertReport:
    """beta^2 + A(AD+BC)*beta = (AC+B^2)^3 with K1, K2 built from A..D."""
    A, B, C, D = rs.A_BLOCK, rs.B_BLOCK, rs.C_BLOCK, rs.D_BLOCK
    k1 = (A * C + B.sqr()) ** 3
    k2 = A * (A * D + B * C)
    beta = beta or rs.BETA
    residue = beta.sqr() + k2 * beta + k1
    return _sym_report("beta_identity", residue)


def beta_printed_expansions() -> list[CertReport]:
    """Informational diff of derived K1, K2 against their reference expansions."""
    A, B, C, D = rs.A_BLOCK, rs.B_BLOCK, rs.C_BLOCK, rs.D_BLOCK
    k1 = (A * C + B.sqr()) ** 3
    k2 = A * (A * D + B * C)
    return [
        _sym_report("printed_K1", k1 + rs.K1_EXPANDED, mandatory=False),
        _sym_report("printed_K2", k2 + rs.K2_EXPANDED, mandatory=False),
    ]


def beta_trace_fallback(ctx: FieldCtx) -> bool:
    """Numeric stand-in for the beta identity: the discriminant fraction
    (AC+B^2)^3 / (A^2 (AD+BC)^2) has trace 0 wherever it is defined."""
    for a in ctx.elements():
        for b in ctx.elements():
            for c in ctx.elements():
                A, B, C, D = resolvent_coeffs(ctx, a, b, c)
                if A == 0:
                    continue
                adbc = ctx.mul(A, D) ^ ctx.mul(B, C)
                if adbc == 0:
                    continue
                acb2 = ctx.mul(A, C) ^ ctx.sqr(B)
                frac = ctx.div(ctx.pow(acb2, 3), ctx.sqr(ctx.mul(A, adbc)))
                if ctx.trace(frac) != 0:
                    return False
    return True


def cert_resultant_Q(q1: MPoly | None = None, q2: MPoly | None = None) -> CertReport:
    """Res_x(Q1, Q2) of the difference system against its recorded product form."""
    r = resultant(q1 or rs.Q1, q2 or rs.Q2, "x")
    return _sym_report("resultant_Q", r + rs.EQ16_EXPANDED)


def cert_charsum_support(ctx: FieldCtx) -> CertReport:
    """Common zeros of M1, M2 and the trace obstruction, for every t != 1.

    The zero set must be exactly {0, ((1+t)(1+t+t^2))^-2} and
    Tr(1 + 1/(1+t) + (1/(1+t))^2) must be 1, which is what collapses the
    character sum to zero.
    """
    if ctx.m % 2 == 0:
        return CertReport(f"charsum_support_m{ctx.m}", "fail", None, "odd m required")
    mul, inv, sqr = ctx.mul, ctx.inv, ctx.sqr
    bad: list[str] = []
    for t in ctx.elements():
        if t == 1:
            continue
        s = 1 ^ t ^ sqr(t)           # 1 + t + t^2, never 0 for odd m
        u = 1 ^ t                    # 1 + t, nonzero for t != 1
        m1c2 = sqr(mul(sqr(t), s))                 # t^4 (1+t+t^2)^2
        m2c2 = sqr(s)                              # (1+t+t^2)^2
        c4 = mul(sqr(sqr(u)), sqr(sqr(sqr(s))))    # (1+t)^4 (1+t+t^2)^8
        zeros = set()
        for w in ctx.elements():
            w2, w4 = sqr(w), sqr(sqr(w))
            m1 = w ^ mul(w2, m1c2) ^ mul(w4, c4)
            m2 = mul(w, sqr(t)) ^ mul(w2, m2c2) ^ mul(w4, c4)
            if m1 == 0 and m2 == 0:
                zeros.add(w)
        expected = {0, inv(sqr(mul(u, s)))}
        if zeros != expected:
            bad.append(f"t={t:#x}: zero set {sorted(zeros)} != {sorted(expected)}")
        if ctx.trace(1 ^ inv(u) ^ sqr(inv(u))) != 1:
            bad.append(f"t={t:#x}: trace obstruction absent")
    notes = "; ".join(bad[:4]) if bad else f"all {ctx.q - 1} parameters verified"
    return CertReport(f"charsum_support_m{ctx.m}", "pass" if not bad else "fail", None, notes)


def cert_A_zero_classification(ctx: FieldCtx) -> CertReport:
    """A(a,b,c) = 0 iff (b=0, a=c) or (a=0, b=c) or a=b=c, exhaustively."""
    if ctx.m % 2 == 0 or ctx.m > 5:
        return CertReport(f"A_zero_classification_m{ctx.m}", "fail", None, "odd m <= 5 required")
    bad = 0
    for a in ctx.elements():
        for b in ctx.elements():
            for c in ctx.elements():
                A, _, _, _ = resolvent_coeffs(ctx, a, b, c)
                classified = (b == 0 and a == c) or (a == 0 and b == c) or (a == b == c)
                if (A == 0) != classified:
                    bad += 1
    notes = f"{bad} misclassified points" if bad else f"all {ctx.q ** 3} points classified"
    return CertReport(f"A_zero_classification_m{ctx.m}", "pass" if bad == 0 else "fail", None, notes)


def run_all(only: str | None = None, numeric_degrees: tuple[int, ...] = (3, 5)) -> list[CertReport]:
    """Every certificate in fixed registration order (filtered by substring)."""
    reports: list[CertReport] = [
        cert_resultant_g(),
        cert_resultant_h(),
        cert_factorizations(),
        cert_beta_identity(),
        *beta_printed_expansions(),
        cert_resultant_Q(),
    ]
    for m in numeric_degrees:
        reports.append(cert_charsum_support(FieldCtx(m)))
    for m in numeric_degrees:
        reports.append(cert_A_zero_classification(FieldCtx(m)))
    if only is not None:
        reports = [r for r in reports if only in r.name]
    return reports
