"""Exact arithmetic in GF(2^m) plus the small-equation solvers built on it.

Elements are plain ints: bit k of the int is the coefficient of x^k, so
0x5 = x^2 + 1 (little-endian bit-polynomial).  Addition is ^ and needs
no helper.  All interpretation lives in a FieldCtx, which carries the
degree, the reduction modulus, and precomputed tables.

Degrees up to 16 are supported; every modulus (default or supplied) is
re-validated by trial division at construction, so a wrong table entry
is caught instead of silently used.  For m <= 8 a log/antilog pair
accelerates scalar multiplication; above that multiplication falls back
to shift-and-XOR reduction.  Root finding (quadratic, cubic) is by
exhaustive scan - exactness over cleverness at this scale.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NoSolution, OddDegreeRequired, ReducibleModulus, UnsupportedDegree

FieldElem = int
Triple = tuple[int, int, int]

MAX_DEGREE = 16
LOG_TABLE_MAX_DEGREE = 8

# Minimal-weight irreducible polynomials, one per degree.  Every entry is
# re-checked by _is_irreducible() in the constructor.
DEFAULT_MODULI: dict[int, int] = {
    1: 0b11,                 # x + 1
    2: 0b111,                # x^2 + x + 1
    3: 0b1011,               # x^3 + x + 1
    4: 0b10011,              # x^4 + x + 1
    5: 0b100101,             # x^5 + x^2 + 1
    6: 0b1000011,            # x^6 + x + 1
    7: 0b10000011,           # x^7 + x + 1
    8: 0b100011101,          # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,         # x^9 + x^4 + 1
    10: 0b10000001001,       # x^10 + x^3 + 1
    11: 0b100000000101,      # x^11 + x^2 + 1
    12: 0b1000001010011,     # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,    # x^13 + x^4 + x^3 + x + 1
    14: 0b100000000101011,   # x^14 + x^5 + x^3 + x + 1
    15: 0b1000000000000011,  # x^15 + x + 1
    16: 0b10001000000001011, # x^16 + x^12 + x^3 + x + 1
}


def _poly_degree(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(p: int, m: int) -> int:
    """Remainder of the carryless division of p by m."""
    dm = _poly_degree(m)
    while _poly_degree(p) >= dm and p:
        p ^= m << (_poly_degree(p) - dm)
    return p


def _is_irreducible(modulus: int, m: int) -> bool:
    """Trial division by every polynomial of degree 1 .. m//2."""
    if _poly_degree(modulus) != m:
        return False
    if m == 1:
        return True
    for d in range(2, 1 << (m // 2 + 1)):
        if _poly_mod(modulus, d) == 0:
            return False
    return True


def _factorize(n: int) -> list[int]:
    """Prime factors of n (distinct), trial division; n <= 2^16 here."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldCtx:
    """GF(2^m) with a validated irreducible modulus.

    Immutable after construction; safe to share between threads.  All
    operations take and return plain ints < 2^m.
    """

    def __init__(self, m: int, modulus: int | None = None) -> None:
        if not 1 <= m <= MAX_DEGREE:
            raise UnsupportedDegree(f"degree {m} outside 1..{MAX_DEGREE}")
        if modulus is None:
            if m not in DEFAULT_MODULI:
                raise UnsupportedDegree(f"no default modulus for m={m}")
            modulus = DEFAULT_MODULI[m]
        if not _is_irreducible(modulus, m):
            raise ReducibleModulus(
                f"modulus {modulus:#x} is not an irreducible degree-{m} polynomial"
            )
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self.mask = self.q - 1
        # 3 is invertible mod 2^m - 1 exactly when m is odd.
        self.inv3: int | None = None
        if m % 2 == 1:
            group = max(self.q - 1, 1)
            self.inv3 = pow(3, -1, group) if group > 1 else 1
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.generator: int | None = None
        if m <= LOG_TABLE_MAX_DEGREE:
            self._build_log_tables()
        self._np_cache: dict[str, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldCtx):
            return self.m == other.m and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    # ------------------------------------------------------------------
    # scalar arithmetic
    # ------------------------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Shift-and-XOR carryless multiply, reduced by the modulus."""
        p = 0
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a & self.q:
                a ^= self.modulus
        return p

    def _build_log_tables(self) -> None:
        # The generator of the cyclic group need not be x when the
        # modulus is irreducible but imprimitive, so search for one.
        order = self.q - 1
        primes = _factorize(order) if order > 1 else []
        g = 1
        for cand in range(2, self.q):
            if all(self._pow_raw(cand, order // p) != 1 for p in primes):
                g = cand
                break
        exp = [0] * (2 * order if order > 1 else 2)
        log = [0] * self.q
        v = 1
        for i in range(order):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, g)
        for i in range(order, len(exp)):
            exp[i] = exp[i - order]
        self._exp, self._log = exp, log
        self.generator = g

    def _pow_raw(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            n >>= 1
        return r

    def mul(self, a: int, b: int) -> int:
        """Product of two field elements."""
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, n: int) -> int:
        """a**n with n >= 0; exponents of nonzero bases reduce mod 2^m - 1."""
        if n == 0:
            return 1
        if a == 0:
            return 0
        if self._log is not None and self.q > 2:
            return self._exp[(self._log[a] * n) % (self.q - 1)]
        if self.q > 2:
            n %= self.q - 1
            if n == 0:
                return 1
        return self._pow_raw(a, n)

    def inv(self, a: int) -> int:
        """Multiplicative inverse; a must be nonzero."""
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^m)")
        return self.pow(a, self.q - 2) if self.q > 2 else 1

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        """Square root (unique in characteristic 2): a^(2^(m-1))."""
        return self.pow(a, 1 << (self.m - 1))

    def cube_root(self, a: int) -> int:
        """The unique cube root a^(1/3); defined only for odd m."""
        if self.inv3 is None:
            raise OddDegreeRequired(f"cube roots need odd m, got m={self.m}")
        if a == 0:
            return 0
        return self.pow(a, self.inv3)

    def elements(self) -> range:
        return range(self.q)

    # ------------------------------------------------------------------
    # trace machinery and small-degree solvers
    # ------------------------------------------------------------------

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(m-1)), as the element 0 or 1."""
        t = 0
        v = a
        for _ in range(self.m):
            t ^= v
            v = self.sqr(v)
        return t

    def half_trace(self, b: int) -> int:
        """Solve r^2 + r = b for odd m; requires trace(b) = 0."""
        if self.m % 2 == 0:
            raise OddDegreeRequired("half-trace is the odd-degree solver")
        if self.trace(b) != 0:
            raise NoSolution(f"x^2 + x = {b:#x} has no root (trace 1)")
        r = 0
        v = b
        for _ in range((self.m - 1) // 2 + 1):
            r ^= v
            v = self.sqr(self.sqr(v))
        return r

    def solve_quadratic(self, a: int, b: int) -> set[int]:
        """All roots of x^2 + a*x + b.

        Empty iff a != 0 and Tr(b / a^2) = 1; a single (double) root
        sqrt(b) when a = 0; otherwise the two roots a*H(b/a^2) and
        a*H(b/a^2) + a.
        """
        if a == 0:
            return {self.sqrt(b)}
        u = self.div(b, self.sqr(a))
        if self.trace(u) != 0:
            return set()
        if self.m % 2 == 1:
            r = self.half_trace(u)
        else:
            # Even m: fall back to scanning for one root of z^2 + z = u.
            r = next(z for z in self.elements() if self.sqr(z) ^ z == u)
        x0 = self.mul(a, r)
        return {x0, x0 ^ a}

    def cubic_roots(self, p: int, q: int, r: int) -> set[int]:
        """All roots of Y^3 + p*Y^2 + q*Y + r, by exhaustive scan.

        For the depressed case p = 0, r != 0 the scan is cross-checked
        against the trace criterion: exactly one root iff
        Tr(q^3 / r^2 + 1) != 0.
        """
        roots = {
            y for y in self.elements()
            if self.mul(self.sqr(y), y) ^ self.mul(p, self.sqr(y)) ^ self.mul(q, y) ^ r == 0
        }
        if p == 0 and r != 0:
            crit = self.trace(self.div(self.pow(q, 3), self.sqr(r)) ^ 1)
            assert (len(roots) == 1) == (crit != 0), \
                f"cubic trace criterion violated for q={q:#x}, r={r:#x}"
        return roots

    # ------------------------------------------------------------------
    # vectorized tables (lazy; dtype covers q <= 512 packing in uint32)
    # ------------------------------------------------------------------

    def _np(self, key: str) -> np.ndarray | None:
        return self._np_cache.get(key)

    @property
    def mul_table(self) -> np.ndarray:
        """(q, q) product table; built lazily by vectorized shift-reduce."""
        t = self._np("mul")
        if t is None:
            q = self.q
            a = np.arange(q, dtype=np.uint32)
            shifted = np.broadcast_to(a[:, None], (q, q)).copy()
            b = np.arange(q, dtype=np.uint32)
            acc = np.zeros((q, q), dtype=np.uint32)
            col = b.copy()
            for _ in range(self.m):
                acc ^= np.where((col & 1).astype(bool)[None, :], shifted, 0)
                col >>= 1
                shifted <<= 1
                over = (shifted & q).astype(bool)
                shifted[over] ^= self.modulus
            t = acc.astype(np.uint16 if self.m <= 8 else np.uint32)
            self._np_cache["mul"] = t
        return t

    @property
    def sqr_table(self) -> np.ndarray:
        t = self._np("sqr")
        if t is None:
            idx = np.arange(self.q)
            t = self.mul_table[idx, idx]
            self._np_cache["sqr"] = t
        return t

    @property
    def cube_table(self) -> np.ndarray:
        t = self._np("cube")
        if t is None:
            t = self.mul_table[self.sqr_table, np.arange(self.q)]
            self._np_cache["cube"] = t
        return t

    def vpow(self, vec: np.ndarray, n: int) -> np.ndarray:
        """Elementwise vec**n through the multiplication table."""
        out = np.ones_like(vec)
        base = vec
        mt = self.mul_table
        while n:
            if n & 1:
                out = mt[out, base]
            base = mt[base, base]
            n >>= 1
        return out


def field_new(m: int, modulus: int | None = None) -> FieldCtx:
    """Construct a GF(2^m) context (default modulus from the shipped table)."""
    return FieldCtx(m, modulus)


def gcd_is_one(d: int, n: int) -> bool:
    return math.gcd(d, n) == 1
