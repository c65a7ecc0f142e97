"""Exhaustive bijectivity checks over GF(2^m)^3.

Points pack into ints as (x << 2m) | (y << m) | z, so the domain is
enumerated in lexicographic (x, y, z) order and image membership is a
flat table lookup.  Images for a whole family are produced by numpy
table gathers (three pair tables plus a cube table cover every monomial
of the family shape), and the collision scan runs in the selected
kernel backend.

Caps: is_permutation refuses m > 9 (the 2^27 table is the ceiling) and
the pairwise difference check refuses m > 3 (2^6m pairs).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainTooLarge
from .family import FamilySpec
from .field import FieldCtx, Triple
from .mpoly import VARS
from .resolvent import D_POLY

IS_PERMUTATION_MAX_M = 9
DIFFERENCE_CHECK_MAX_M = 3

_FULL_CUBE_MAX_M = 7  # above this, images are built in x-slabs


@dataclass(frozen=True)
class PermReport:
    """Outcome of one exhaustive bijectivity scan."""

    family: str
    m: int
    is_permutation: bool
    points_checked: int
    witness: tuple[Triple, Triple] | None = None

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "m": self.m,
            "permutation": self.is_permutation,
            "points": self.points_checked,
        }
        if self.witness is not None:
            out["witness"] = [[hex(v) for v in p] for p in self.witness]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _pair_tables(ctx: FieldCtx, coeffs: tuple[int, ...]):
    """Tables P_xy, P_xz, P_yz with f(x,y,z) = x^3 ^ P_xy[x,y] ^ P_xz[x,z] ^ P_yz[y,z]."""
    mt = ctx.mul_table
    sq = ctx.sqr_table
    cube = ctx.cube_table
    q = ctx.q
    a1, a2, a3, a4, a5, a6, a7, a8 = coeffs
    zero2 = np.zeros((q, q), dtype=mt.dtype)
    idx = np.arange(q)

    p_xy = zero2.copy()
    if a3: p_xy ^= mt[sq[:, None], idx[None, :]]
    if a4: p_xy ^= mt[idx[:, None], sq[None, :]]
    p_xz = zero2.copy()
    if a5: p_xz ^= mt[sq[:, None], idx[None, :]]
    if a6: p_xz ^= mt[idx[:, None], sq[None, :]]
    p_yz = zero2.copy()
    if a1: p_yz ^= cube[:, None]
    if a2: p_yz ^= cube[None, :]
    if a7: p_yz ^= mt[idx[:, None], sq[None, :]]
    if a8: p_yz ^= mt[sq[:, None], idx[None, :]]
    return cube, p_xy, p_xz, p_yz


def family_images(ctx: FieldCtx, fam: FamilySpec) -> np.ndarray:
    """Packed image of every domain point, indexed by packed point."""
    q, m = ctx.q, ctx.m
    cube, p_xy, p_xz, p_yz = _pair_tables(ctx, fam.coeffs)
    if m <= _FULL_CUBE_MAX_M:
        f1 = (cube[:, None, None].astype(np.uint32)
              ^ p_xy[:, :, None] ^ p_xz[:, None, :] ^ p_yz[None, :, :])
        # f2(x,y,z) = f(y,z,x) and f3(x,y,z) = f(z,x,y) are axis shuffles of f1.
        f2 = f1.transpose(2, 0, 1)
        f3 = f1.transpose(1, 2, 0)
        packed = (f1 << (2 * m)) | (f2 << m) | f3
        return np.ascontiguousarray(packed).reshape(-1)
    packed = np.empty(q * q * q, dtype=np.uint32)
    cube32 = cube.astype(np.uint32)
    for x in range(q):
        f1 = cube32[x] ^ p_xy[x][:, None] ^ p_xz[x][None, :] ^ p_yz
        f2 = cube32[:, None] ^ p_xy ^ p_xz[:, x][:, None] ^ p_yz[:, x][None, :]
        f3 = cube32[None, :] ^ p_xy[:, x][None, :] ^ p_xz.T ^ p_yz[x][:, None]
        packed[x * q * q:(x + 1) * q * q] = ((f1.astype(np.uint32) << (2 * m))
                                             | (f2.astype(np.uint32) << m)
                                             | f3.astype(np.uint32)).reshape(-1)
    return packed


def _unpack(ctx: FieldCtx, p: int) -> Triple:
    return (p >> (2 * ctx.m)) & ctx.mask, (p >> ctx.m) & ctx.mask, p & ctx.mask


def is_permutation(ctx: FieldCtx, fam: FamilySpec) -> PermReport:
    """Mark all 2^3m images; bijective iff no repeat.

    The reported witness is the first collision in lexicographic scan
    order: the earliest point whose image was already taken, paired with
    the point that took it.
    """
    if ctx.m > IS_PERMUTATION_MAX_M:
        raise DomainTooLarge(f"m={ctx.m} > {IS_PERMUTATION_MAX_M} for the image table")
    space = 1 << (3 * ctx.m)
    packed = family_images(ctx, fam)
    ok, at, first = _kernels.scan_bijection(packed, space)
    if ok:
        return PermReport(fam.bitstring(), ctx.m, True, space)
    witness = (_unpack(ctx, first), _unpack(ctx, at))
    return PermReport(fam.bitstring(), ctx.m, False, at + 1, witness)


def difference_check(ctx: FieldCtx, fam: FamilySpec) -> bool:
    """True iff F(v + s) != F(v) for every v and every nonzero shift s."""
    if ctx.m > DIFFERENCE_CHECK_MAX_M:
        raise DomainTooLarge(f"m={ctx.m} > {DIFFERENCE_CHECK_MAX_M} for the pairwise check")
    q, m = ctx.q, ctx.m
    images = family_images(ctx, fam).reshape(q, q, q)
    idx = np.arange(q)
    for shift in range(1, q * q * q):
        sa, sb, sc = _unpack(ctx, shift)
        moved = images[np.ix_(idx ^ sa, idx ^ sb, idx ^ sc)]
        if (moved == images).any():
            return False
    return True


# ---------------------------------------------------------------------------
# zero count of the reduced difference form D(Y, Z)
# ---------------------------------------------------------------------------

_T_IDX = VARS.index("t")
_Y_IDX = VARS.index("Y")
_Z_IDX = VARS.index("Z")


def count_zeros_D(ctx: FieldCtx, t: int) -> int:
    """Number of (Y, Z) pairs with D(Y, Z) = 0, for one parameter t.

    D is taken from its symbolic form and never has a mixed Y*Z term,
    so the grid evaluation splits into a Y-profile and a Z-profile.
    """
    q = ctx.q
    mt = ctx.mul_table
    vec = np.arange(q)
    u = np.zeros(q, dtype=mt.dtype)
    v = np.zeros(q, dtype=mt.dtype)
    for term in D_POLY.terms:
        e_y, e_z = term[_Y_IDX], term[_Z_IDX]
        assert not (e_y and e_z), "D(Y,Z) is Y/Z-separable by construction"
        scale = ctx.pow(t, term[_T_IDX])
        if e_y:
            u ^= mt[scale, ctx.vpow(vec, e_y)]
        elif e_z:
            v ^= mt[scale, ctx.vpow(vec, e_z)]
        else:
            v ^= np.full(q, scale, dtype=mt.dtype)
    return int(np.count_nonzero((u[:, None] ^ v[None, :]) == 0))
