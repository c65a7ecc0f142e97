"""Lifting permutations of GF(2^m)^3 to polynomials over GF(2^3m).

The cubic extension is built directly over the base field, so the basis
{1, w, w^2} (w = the residue class of the extension variable) is
available by construction: an extension element x + y*w + z*w^2 packs
into an int as x | y<<m | z<<2m, and the lift of a coordinate map is
literally "unpack, apply, repack".

A lifted map becomes the unique reduced polynomial of degree < 2^3m
through pointwise interpolation F'(X) = sum_t F'(t) (1 - (X-t)^(2^3m-1));
the inner sums run over the multiplicative group in discrete-log form
(see _kernels).  Quasi-multiplicative equivalence F = a*G(c*X^d) is
decided by exhausting the valid d, matching supports, and recovering c
from coefficient ratios through the log table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainTooLarge, ReducibleModulus
from .family import FamilySpec
from .field import FieldCtx, Triple, _factorize
from .permcheck import family_images

LOG_TABLE_MAX_BASE_M = 5
LIFT_MAX_BASE_M = 5


class ExtCtx:
    """GF(2^3m) as a cubic extension of a base GF(2^m) context."""

    def __init__(self, base: FieldCtx, cubic: tuple[int, int, int] | None = None) -> None:
        self.base = base
        m = base.m
        if cubic is None:
            cubic = self._first_rootless_cubic(base)
        else:
            if self._has_root(base, cubic):
                raise ReducibleModulus(f"cubic with coefficients {cubic} has a base-field root")
        self.cubic = cubic  # (alpha, beta, gamma) of u^3 + alpha*u^2 + beta*u + gamma
        self.m = m
        self.size = 1 << (3 * m)
        self.group = self.size - 1
        self.omega = 1 << m
        alpha, beta, gamma = cubic
        # w^3 = alpha*w^2 + beta*w + gamma; w^4 = w * w^3 re-reduced.
        self._red3 = (gamma, beta, alpha)
        self._red4 = (
            base.mul(alpha, gamma),
            base.mul(alpha, beta) ^ gamma,
            base.mul(alpha, alpha) ^ beta,
        )
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None
        self.generator: int | None = None
        self.omega_primitive: bool | None = None

    @staticmethod
    def _has_root(base: FieldCtx, cubic: tuple[int, int, int]) -> bool:
        alpha, beta, gamma = cubic
        for u in base.elements():
            acc = base.mul(base.mul(u ^ alpha, u) ^ beta, u) ^ gamma
            if acc == 0:
                return True
        return False

    @classmethod
    def _first_rootless_cubic(cls, base: FieldCtx) -> tuple[int, int, int]:
        for alpha in base.elements():
            for beta in base.elements():
                for gamma in base.elements():
                    if gamma == 0:
                        continue  # root at 0
                    if not cls._has_root(base, (alpha, beta, gamma)):
                        return (alpha, beta, gamma)
        raise AssertionError("no rootless cubic over the base field")  # unreachable

    def __repr__(self) -> str:
        return f"ExtCtx(base={self.base!r}, cubic={self.cubic})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtCtx):
            return self.base == other.base and self.cubic == other.cubic
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.base, self.cubic))

    # -- packing -----------------------------------------------------------

    def pack(self, coords: Triple) -> int:
        x, y, z = coords
        return x | (y << self.m) | (z << (2 * self.m))

    def unpack(self, v: int) -> Triple:
        mask = self.base.mask
        return v & mask, (v >> self.m) & mask, (v >> (2 * self.m)) & mask

    # -- arithmetic ---------------------------------------------------------

    def mul(self, u: int, v: int) -> int:
        bm = self.base.mul
        u0, u1, u2 = self.unpack(u)
        v0, v1, v2 = self.unpack(v)
        p0 = bm(u0, v0)
        p1 = bm(u0, v1) ^ bm(u1, v0)
        p2 = bm(u0, v2) ^ bm(u1, v1) ^ bm(u2, v0)
        p3 = bm(u1, v2) ^ bm(u2, v1)
        p4 = bm(u2, v2)
        r0, r1, r2 = p0, p1, p2
        if p3:
            r0 ^= bm(p3, self._red3[0]); r1 ^= bm(p3, self._red3[1]); r2 ^= bm(p3, self._red3[2])
        if p4:
            r0 ^= bm(p4, self._red4[0]); r1 ^= bm(p4, self._red4[1]); r2 ^= bm(p4, self._red4[2])
        return self.pack((r0, r1, r2))

    def pow(self, u: int, n: int) -> int:
        if n == 0:
            return 1
        if u == 0:
            return 0
        if self._log is not None:
            return int(self._exp[(int(self._log[u]) * n) % self.group])
        n %= self.group
        if n == 0:
            return 1
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, u)
            u = self.mul(u, u)
            n >>= 1
        return r

    def inv(self, u: int) -> int:
        if u == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^3m)")
        return self.pow(u, self.group - 1)

    def element_order(self, u: int) -> int:
        """Multiplicative order of a nonzero element."""
        if u == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        order = self.group
        for p in _factorize(self.group):
            while order % p == 0 and self.pow(u, order // p) == 1:
                order //= p
        return order

    # -- discrete-log tables -------------------------------------------------

    def _ensure_tables(self) -> None:
        if self._exp is not None:
            return
        if self.m > LOG_TABLE_MAX_BASE_M:
            raise DomainTooLarge(f"log tables capped at base m={LOG_TABLE_MAX_BASE_M}")
        primes = _factorize(self.group) if self.group > 1 else []
        gen = 1
        for cand in range(2, self.size):
            if all(self.pow(cand, self.group // p) != 1 for p in primes):
                gen = cand
                break
        exp = np.zeros(self.group, dtype=np.uint32)
        log = np.full(self.size, -1, dtype=np.int64)
        v = 1
        for i in range(self.group):
            exp[i] = v
            log[v] = i
            v = self.mul(v, gen)
        self._exp, self._log = exp, log
        self.generator = gen
        self.omega_primitive = self.element_order(self.omega) == self.group

    def log_of(self, u: int) -> int:
        self._ensure_tables()
        return int(self._log[u])


def ext_new(base: FieldCtx) -> ExtCtx:
    """Cubic extension with the first rootless monic cubic (deterministic scan)."""
    return ExtCtx(base)


# ---------------------------------------------------------------------------
# reduced univariate polynomials over the extension
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LiftedPoly:
    """Sparse reduced polynomial: exponent -> nonzero packed coefficient."""

    ext: ExtCtx
    terms: tuple[tuple[int, int], ...]  # sorted by exponent

    @classmethod
    def make(cls, ext: ExtCtx, mapping: dict[int, int]) -> "LiftedPoly":
        items = tuple(sorted((e, c) for e, c in mapping.items() if c))
        for e, _ in items:
            if not 0 <= e <= ext.group:
                raise ValueError(f"exponent {e} outside 0..{ext.group}")
        return cls(ext, items)

    def coeff_map(self) -> dict[int, int]:
        return dict(self.terms)

    def evaluate(self, t: int) -> int:
        if t == 0:
            return dict(self.terms).get(0, 0)
        acc = 0
        for e, coef in self.terms:
            acc ^= self.ext.mul(coef, self.ext.pow(t, e))
        return acc

    def values(self) -> np.ndarray:
        """Evaluation at every field point, indexed by packed element."""
        ext = self.ext
        ext._ensure_tables()
        out = np.zeros(ext.size, dtype=np.uint32)
        out[0] = dict(self.terms).get(0, 0)
        if self.terms:
            exps = np.array([e for e, _ in self.terms], dtype=np.int64)
            logcs = np.array([ext.log_of(c) for _, c in self.terms], dtype=np.int64)
            by_log = _kernels.eval_terms(exps, logcs, ext._exp, ext.group)
            out[ext._exp] = by_log
        return out

    def to_json(self) -> dict:
        alpha, beta, gamma = self.ext.cubic
        return {
            "m": self.ext.m,
            "cubic": [hex(gamma), hex(beta), hex(alpha), hex(1)],
            "terms": [
                {"e": e, "c": [hex(v) for v in self.ext.unpack(coef)]}
                for e, coef in self.terms
            ],
        }


def lifted_from_json(data: dict) -> LiftedPoly:
    """Rebuild a LiftedPoly (default base modulus for its degree)."""
    base = FieldCtx(int(data["m"]))
    cubic_ascending = [int(h, 16) for h in data["cubic"]]
    if len(cubic_ascending) != 4 or cubic_ascending[3] != 1:
        raise ValueError("cubic must be monic with four coefficients")
    gamma, beta, alpha, _ = cubic_ascending
    ext = ExtCtx(base, (alpha, beta, gamma))
    mapping = {}
    for item in data["terms"]:
        coords = tuple(int(h, 16) for h in item["c"])
        if len(coords) != 3 or any(not 0 <= v < base.q for v in coords):
            raise ValueError(f"coefficient coordinates {item['c']} outside GF(2^{base.m})")
        mapping[int(item["e"])] = ext.pack(coords)
    return LiftedPoly.make(ext, mapping)


def support(p: LiftedPoly) -> tuple[tuple[int, ...], int]:
    """Sorted exponents with nonzero coefficients, and their count."""
    exps = tuple(e for e, _ in p.terms)
    return exps, len(exps)


# ---------------------------------------------------------------------------
# interpolation of a lifted coordinate map
# ---------------------------------------------------------------------------

def _map_values(ext: ExtCtx, fam) -> np.ndarray:
    """Packed F'(t) for every packed t (FamilySpec or Triple->Triple callable)."""
    m = ext.m
    mask = ext.base.mask
    n = ext.size
    if isinstance(fam, FamilySpec):
        imgs = family_images(ext.base, fam)  # indexed by x<<2m | y<<m | z
        t = np.arange(n, dtype=np.int64)
        x, y, z = t & mask, (t >> m) & mask, t >> (2 * m)
        img = imgs[(x << (2 * m)) | (y << m) | z].astype(np.int64)
        return (
            (img >> (2 * m)) | (((img >> m) & mask) << m) | ((img & mask) << (2 * m))
        ).astype(np.uint32)
    out = np.zeros(n, dtype=np.uint32)
    for t in range(n):
        out[t] = ext.pack(fam(ext.unpack(t)))
    return out


def lift_permutation(ext: ExtCtx, fam) -> LiftedPoly:
    """Unique reduced polynomial agreeing with the lifted map everywhere.

    fam is a FamilySpec (lifted through eval order x + y*w + z*w^2) or
    any callable on coordinate triples.  Base degree is capped at
    m = 5: the quadratic-cost interpolation is instantaneous at m = 3
    and takes a few minutes at m = 5.
    """
    if ext.m > LIFT_MAX_BASE_M:
        raise DomainTooLarge(f"interpolation capped at base m={LIFT_MAX_BASE_M}")
    ext._ensure_tables()
    values = _map_values(ext, fam)
    logv = np.full(ext.group, -1, dtype=np.int64)
    vals_by_log = values[ext._exp].astype(np.int64)
    nz = vals_by_log != 0
    logv[nz] = ext._log[vals_by_log[nz]]
    coeffs = _kernels.interp_coeffs(logv, ext._exp, ext.group)
    coeffs[0] = values[0]
    coeffs[ext.group] = np.bitwise_xor.reduce(values)
    mapping = {int(e): int(c) for e, c in enumerate(coeffs) if c}
    return LiftedPoly.make(ext, mapping)


def is_pp(ext: ExtCtx, p: LiftedPoly) -> bool:
    """Exhaustive bijectivity check of the polynomial map."""
    if ext.m > LIFT_MAX_BASE_M:
        raise DomainTooLarge(f"evaluation capped at base m={LIFT_MAX_BASE_M}")
    values = p.values()
    seen = np.zeros(ext.size, dtype=bool)
    seen[values] = True
    return bool(seen.all())


# ---------------------------------------------------------------------------
# quasi-multiplicative equivalence
# ---------------------------------------------------------------------------

def _reduce_exponent(e: int, d: int, group: int) -> int:
    return 0 if e == 0 else (e * d - 1) % group + 1


def qm_transform(ext: ExtCtx, q: LiftedPoly, a: int, c: int, d: int) -> LiftedPoly:
    """The reduced polynomial a * q(c * X^d)."""
    acc: dict[int, int] = {}
    for e, coef in q.terms:
        e2 = _reduce_exponent(e, d, ext.group)
        v = ext.mul(ext.mul(a, coef), ext.pow(c, e))
        acc[e2] = acc.get(e2, 0) ^ v
    return LiftedPoly.make(ext, acc)


def qm_equivalent(ext: ExtCtx, p: LiftedPoly, q: LiftedPoly) -> tuple[int, int, int] | None:
    """Witness (a, c, d) with p(X) = a*q(c*X^d), or None after exhausting d.

    Filters: term counts must agree; for each valid d the supports must
    match under e -> e*d; then c comes from coefficient ratios c^delta =
    rho via the discrete-log table, a from one coefficient, and the
    witness is verified in full before being returned.
    """
    if len(p.terms) != len(q.terms):
        return None
    if not p.terms:
        return (1, 1, 1)
    ext._ensure_tables()
    group = ext.group
    p_map = p.coeff_map()
    p_supp = set(p_map)
    q_items = list(q.terms)
    e0, qc0 = q_items[0]
    rest = q_items[1:]
    for d in range(1, group + 1):
        if math.gcd(d, group) != 1:
            continue
        mapped = [_reduce_exponent(e, d, group) for e, _ in q_items]
        if set(mapped) != p_supp:
            continue
        # constraints c^delta = rho relative to the first q-term
        anchor_ratio = ext.mul(p_map[mapped[0]], ext.inv(qc0))
        constraints = []
        for (e, qc), me in zip(rest, mapped[1:]):
            delta = (e - e0) % group
            rho = ext.mul(ext.mul(p_map[me], ext.inv(qc)), ext.inv(anchor_ratio))
            constraints.append((delta, rho))
        for c in _solve_power_constraints(ext, constraints):
            a = ext.mul(anchor_ratio, ext.inv(ext.pow(c, e0)))
            if a and qm_transform(ext, q, a, c, d).terms == p.terms:
                return (a, c, d)
    return None


def _solve_power_constraints(ext: ExtCtx, constraints) -> list[int]:
    """All nonzero c with c^delta = rho for every (delta, rho) given."""
    group = ext.group
    if not constraints:
        return [1]
    delta, rho = constraints[0]
    if rho == 0:
        return []
    if delta == 0:
        if rho != 1:
            return []
        candidates = None  # unconstrained by the first relation
    else:
        g = math.gcd(delta, group)
        lr = ext.log_of(rho)
        if lr % g:
            return []
        step = group // g
        l0 = (lr // g) * pow(delta // g, -1, step) % step
        candidates = [int(ext._exp[(l0 + k * step) % group]) for k in range(g)]
    if candidates is None:
        candidates = [int(v) for v in ext._exp]
    out = []
    for c in candidates:
        if all(ext.pow(c, dl) == rh for dl, rh in constraints[1:]):
            out.append(c)
    return out
