"""Exact arithmetic in cyclotomic fields Q(zeta_L).

Values are coordinates on the power basis of Q[x]/(Phi_L), Phi_L the L-th
cyclotomic polynomial, so equality is literal coefficient equality and every
downstream identity can be asserted exactly. Elements of different orders are
compared and combined after embedding into Q(zeta_lcm).

A value that is a single rational multiple of one root of unity is kept in a
lazy (coefficient, exponent) form so that long products of character values
cost O(1); the dense coordinate vector is materialized only when addition,
equality, or serialization needs it.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = [
    "CycNum",
    "CycMatrix",
    "root_of_unity",
    "from_rational",
    "zero",
    "one",
    "add",
    "mul",
    "neg",
    "inv",
    "conj_complex",
    "euler_phi",
    "cyclotomic_poly",
    "cyc_repr",
    "exact_rank",
]

_INT64_SAFE = 1 << 61


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # num, den ascending; den monic up to sign of leading coeff +-1; exact division
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("division not exact")
        c //= lead
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[: len(den) - 1][i] != 0 for i in range(len(den) - 1)):
        raise ArithmeticError("division not exact")
    return out


_CYCLO_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_poly(L: int) -> tuple[int, ...]:
    """Coefficients of Phi_L, ascending, monic."""
    if L in _CYCLO_CACHE:
        return _CYCLO_CACHE[L]
    poly = [-1] + [0] * (L - 1) + [1]  # x^L - 1
    for d in _divisors(L):
        if d == L:
            continue
        poly = _poly_div_exact(poly, list(cyclotomic_poly(d)))
    result = tuple(poly)
    _CYCLO_CACHE[L] = result
    return result


_ROWS_CACHE: dict[int, list[tuple[int, ...]]] = {}


def _reduction_rows(L: int, upto: int) -> list[tuple[int, ...]]:
    """rows[t] = coordinates of x^t mod Phi_L for 0 <= t <= upto."""
    phi = euler_phi(L)
    rows = _ROWS_CACHE.setdefault(L, [])
    if not rows:
        for t in range(phi):
            rows.append(tuple(1 if i == t else 0 for i in range(phi)))
    cyclo = cyclotomic_poly(L)
    while len(rows) <= upto:
        prev = rows[-1]
        shifted = [0] + list(prev)
        top = shifted.pop()
        if top:
            # x^phi = -(low part of Phi_L) since Phi_L is monic
            for i in range(phi):
                shifted[i] -= top * cyclo[i]
        rows.append(tuple(shifted))
    return rows


def _reduce_poly(coeffs, L: int) -> list[int]:
    """Reduce an ascending integer poly modulo Phi_L to phi(L) coordinates."""
    phi = euler_phi(L)
    if len(coeffs) <= phi:
        return list(coeffs) + [0] * (phi - len(coeffs))
    rows = _reduction_rows(L, len(coeffs) - 1)
    out = list(coeffs[:phi])
    for t in range(phi, len(coeffs)):
        c = coeffs[t]
        if c:
            row = rows[t]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return out


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    if len(a) == 1:
        return [a[0] * x for x in b]
    if len(b) == 1:
        return [b[0] * x for x in a]
    ma = max(1, max(abs(x) for x in a))
    mb = max(1, max(abs(x) for x in b))
    if ma * mb * min(len(a), len(b)) < _INT64_SAFE:
        return np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)).tolist()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _norm_pair(den: int, nums) -> tuple[int, tuple[int, ...]]:
    if den < 0:
        den = -den
        nums = [-x for x in nums]
    g = den
    for x in nums:
        g = math.gcd(g, x)
        if g == 1:
            break
    if g > 1:
        den //= g
        nums = [x // g for x in nums]
    if all(x == 0 for x in nums):
        den = 1
    return den, tuple(nums)


class CycNum:
    """Element of Q(zeta_L), immutable, with exact canonical equality."""

    __slots__ = ("order", "_mono", "_vec")

    def __init__(self, order: int, *, mono=None, vec=None):
        self.order = order
        self._mono = mono  # (Fraction coeff, int exponent) or None
        self._vec = vec  # (den, nums tuple of length phi(order)) or None
        if mono is None and vec is None:
            raise ValueError("empty CycNum")

    # -- construction ---------------------------------------------------

    @staticmethod
    def rational(value) -> "CycNum":
        f = Fraction(value)
        return CycNum(1, vec=(f.denominator, (f.numerator,)))

    @staticmethod
    def zeta(L: int, k: int = 1) -> "CycNum":
        if L < 1:
            raise ValueError("order must be positive")
        k %= L
        g = math.gcd(k, L)
        L0, k0 = L // g, k // g
        if L0 == 1:
            return CycNum.rational(1)
        return CycNum(L0, mono=(Fraction(1), k0))

    # -- materialization -------------------------------------------------

    def _vec_pair(self) -> tuple[int, tuple[int, ...]]:
        if self._vec is None:
            coeff, k = self._mono
            L = self.order
            poly = [0] * (k + 1)
            poly[k] = coeff.numerator
            nums = _reduce_poly(poly, L)
            self._vec = _norm_pair(coeff.denominator, nums)
        return self._vec

    def _lifted_vec(self, M: int) -> tuple[int, tuple[int, ...]]:
        den, nums = self._vec_pair()
        L = self.order
        if M == L:
            return den, nums
        stride = M // L
        poly = [0] * ((len(nums) - 1) * stride + 1)
        for i, c in enumerate(nums):
            if c:
                poly[i * stride] = c
        return _norm_pair(den, _reduce_poly(poly, M))

    def lift(self, M: int) -> "CycNum":
        """Embed into Q(zeta_M); requires order | M."""
        if M % self.order:
            raise ValueError("target order must be a multiple")
        if M == self.order:
            return self
        if self._mono is not None:
            coeff, k = self._mono
            return CycNum(M, mono=(coeff, k * (M // self.order)))
        return CycNum(M, vec=self._lifted_vec(M))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        if self._mono is not None:
            return self._mono[0] == 0
        return all(x == 0 for x in self._vec[1])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        if self._mono is not None and self._mono[1] == 0:
            return True
        den, nums = self._vec_pair()
        return all(x == 0 for x in nums[1:])

    def rational_value(self) -> Fraction:
        den, nums = self._vec_pair()
        if any(x != 0 for x in nums[1:]):
            raise ValueError("not rational")
        return Fraction(nums[0], den)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "CycNum":
        if isinstance(value, CycNum):
            return value
        return CycNum.rational(value)

    def __add__(self, other):
        other = CycNum._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        M = math.lcm(self.order, other.order)
        d1, n1 = self._lifted_vec(M)
        d2, n2 = other._lifted_vec(M)
        den = d1 * d2
        nums = [x * d2 + y * d1 for x, y in zip(n1, n2)]
        return CycNum(M, vec=_norm_pair(den, nums))

    __radd__ = __add__

    def __neg__(self):
        if self._mono is not None:
            return CycNum(self.order, mono=(-self._mono[0], self._mono[1]))
        den, nums = self._vec
        return CycNum(self.order, vec=(den, tuple(-x for x in nums)))

    def __sub__(self, other):
        return self + (-CycNum._coerce(other))

    def __rsub__(self, other):
        return CycNum._coerce(other) + (-self)

    def __mul__(self, other):
        other = CycNum._coerce(other)
        if self.is_zero() or other.is_zero():
            return CycNum.rational(0)
        M = math.lcm(self.order, other.order)
        a, b = self.lift(M), other.lift(M)
        if a._mono is not None and b._mono is not None:
            c = a._mono[0] * b._mono[0]
            k = (a._mono[1] + b._mono[1]) % M
            return CycNum(M, mono=(c, k))
        if a._mono is not None or b._mono is not None:
            if b._mono is not None:
                a, b = b, a
            coeff, k = a._mono
            den, nums = b._vec_pair()
            poly = [0] * k + [x * coeff.numerator for x in nums]
            out = _reduce_poly(poly, M)
            return CycNum(M, vec=_norm_pair(den * coeff.denominator, out))
        d1, n1 = a._vec_pair()
        d2, n2 = b._vec_pair()
        out = _reduce_poly(_convolve(n1, n2), M)
        return CycNum(M, vec=_norm_pair(d1 * d2, out))

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self._mono is not None:
            coeff, k = self._mono
            return CycNum(self.order, mono=(1 / coeff, (-k) % self.order))
        L = self.order
        den, nums = self._vec
        # extended euclid in Q[x] against Phi_L
        a = [Fraction(x, den) for x in nums]
        b = [Fraction(c) for c in cyclotomic_poly(L)]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        r0, r1 = a, b

        def trim(p):
            while p and p[-1] == 0:
                p.pop()
            return p

        r0, r1 = trim(r0[:]), trim(r1[:])
        while len(r1) > 0:
            # divide r0 by r1
            q = [Fraction(0)] * max(1, len(r0) - len(r1) + 1)
            rem = r0[:]
            while len(rem) >= len(r1) and trim(rem):
                shift = len(rem) - len(r1)
                c = rem[-1] / r1[-1]
                q[shift] += c
                for i in range(len(r1)):
                    rem[shift + i] -= c * r1[i]
                rem = trim(rem)
            # s_next = s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1 if s1 else 0)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        prod[i + j] += qc * sc
            s_next = [Fraction(0)] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                s_next[i] += c
            for i, c in enumerate(prod):
                s_next[i] -= c
            r0, r1 = r1, rem
            s0, s1 = s1, trim(s_next)
        if len(r0) != 1:
            raise ArithmeticError("element not invertible modulo cyclotomic polynomial")
        g = r0[0]
        inv_coeffs = [c / g for c in s0]
        common = 1
        for c in inv_coeffs:
            common = common * c.denominator // math.gcd(common, c.denominator)
        nums_out = [0] * euler_phi(L)
        for i, c in enumerate(inv_coeffs):
            nums_out[i] = int(c * common)
        return CycNum(L, vec=_norm_pair(common, nums_out))

    def __truediv__(self, other):
        return self * CycNum._coerce(other).inv()

    def __rtruediv__(self, other):
        return CycNum._coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        if self._mono is not None:
            coeff, k = self._mono
            return CycNum(self.order, mono=(coeff**n, (k * n) % self.order))
        result = CycNum.rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, k: int) -> "CycNum":
        """Apply zeta_L -> zeta_L^k; requires gcd(k, L) = 1."""
        L = self.order
        k %= L
        if L == 1:
            return self
        if math.gcd(k, L) != 1:
            raise ValueError("galois exponent not coprime to order")
        if self._mono is not None:
            coeff, e = self._mono
            return CycNum(L, mono=(coeff, (e * k) % L))
        den, nums = self._vec
        poly = [0] * L
        for i, c in enumerate(nums):
            if c:
                poly[(i * k) % L] += c
        return CycNum(L, vec=_norm_pair(den, _reduce_poly(poly, L)))

    def conj(self) -> "CycNum":
        """Complex conjugation zeta_L -> zeta_L^{-1}."""
        return self.galois(-1)

    # -- comparison / io ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, (CycNum, int, Fraction)):
            return NotImplemented
        other = CycNum._coerce(other)
        M = math.lcm(self.order, other.order)
        return self._lifted_vec(M) == other._lifted_vec(M)

    __hash__ = None  # mutable lazy cache inside; equality crosses orders

    def to_data(self) -> dict:
        den, nums = self._vec_pair()
        coeffs = []
        for x in nums:
            f = Fraction(x, den)
            coeffs.append(f"{f.numerator}/{f.denominator}")
        return {"order": self.order, "coeffs": coeffs}

    @staticmethod
    def from_data(data: dict) -> "CycNum":
        L = int(data["order"])
        fracs = [Fraction(s) for s in data["coeffs"]]
        if len(fracs) != euler_phi(L):
            raise ValueError("coefficient count does not match order")
        common = 1
        for f in fracs:
            common = common * f.denominator // math.gcd(common, f.denominator)
        nums = [int(f * common) for f in fracs]
        return CycNum(L, vec=_norm_pair(common, nums))

    def approx(self) -> complex:
        """Floating approximation, display only."""
        den, nums = self._vec_pair()
        z = np.exp(2j * np.pi / self.order)
        return complex(sum(c * z**i for i, c in enumerate(nums)) / den)

    def __repr__(self):
        if self.is_rational():
            return f"CycNum({self.rational_value()})"
        den, nums = self._vec_pair()
        return f"CycNum(order={self.order}, coeffs={nums}, den={den})"


# -- module-level operation names ------------------------------------------


def root_of_unity(L: int, k: int) -> CycNum:
    """zeta_L^k in canonical form; the result has multiplicative order L/gcd(L,k)."""
    return CycNum.zeta(L, k)


def from_rational(value) -> CycNum:
    return CycNum.rational(value)


def zero() -> CycNum:
    return CycNum.rational(0)


def one() -> CycNum:
    return CycNum.rational(1)


def add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def neg(a: CycNum) -> CycNum:
    return -a


def inv(a: CycNum) -> CycNum:
    return a.inv()


def conj_complex(a: CycNum) -> CycNum:
    return a.conj()


def exact_rank(rows: list[list[CycNum]]) -> int:
    """Rank of a matrix given as lists of CycNum, by exact fraction-free
    Gaussian elimination (cross-multiplication instead of division, so no
    field inversions are ever needed)."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(work)):
            if not work[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        pv = work[row][col]
        for r in range(row + 1, len(work)):
            lead = work[r][col]
            if not lead.is_zero():
                work[r][col] = CycNum.rational(0)
                for cc in range(col + 1, ncols):
                    work[r][cc] = work[r][cc] * pv - lead * work[row][cc]
        rank += 1
        row += 1
        if row == len(work):
            break
    return rank


def cyc_repr(v: CycNum) -> str:
    """Compact exact string for reports: a plain rational, or power-basis
    coordinates tagged with the root order."""
    if v.is_rational():
        r = v.rational_value()
        return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
    den, nums = v._vec_pair()
    body = ",".join(str(x) for x in nums)
    suffix = "" if den == 1 else f"/{den}"
    return f"zeta{v.order}[{body}]{suffix}"


# -- exact matrices ----------------------------------------------------------


class CycMatrix:
    """Dense matrix over Q(zeta_L) with one shared denominator.

    Coefficient payload is a (rows, cols, phi(L)) integer ndarray; products go
    through integer convolution plus power-basis reduction, staying exact. An
    int64 fast path is used when magnitude bounds allow, otherwise arbitrary
    precision Python integers via object dtype.
    """

    __slots__ = ("order", "den", "arr")

    def __init__(self, order: int, den: int, arr: np.ndarray):
        self.order = order
        self.den = den
        self.arr = arr

    # -- construction --------------------------------------------------------

    @staticmethod
    def from_rows(rows: list[list[CycNum]], order: int | None = None) -> "CycMatrix":
        M = order or 1
        for row in rows:
            for v in row:
                M = math.lcm(M, v.order)
        phi = euler_phi(M)
        dens = []
        pairs = []
        for row in rows:
            prow = [v._lifted_vec(M) for v in row]
            pairs.append(prow)
            dens.extend(d for d, _ in prow)
        common = 1
        for d in dens:
            common = common * d // math.gcd(common, d)
        nrows, ncols = len(rows), len(rows[0])
        out = np.zeros((nrows, ncols, phi), dtype=object)
        for i in range(nrows):
            for j in range(ncols):
                d, nums = pairs[i][j]
                scale = common // d
                for t in range(phi):
                    out[i, j, t] = nums[t] * scale
        return CycMatrix(M, common, out)._tighten()

    @staticmethod
    def identity(n: int, order: int = 1, scalar: CycNum | None = None) -> "CycMatrix":
        s = scalar if scalar is not None else CycNum.rational(1)
        zero_c = CycNum.rational(0)
        rows = [[s if i == j else zero_c for j in range(n)] for i in range(n)]
        return CycMatrix.from_rows(rows, order=order)

    def _tighten(self) -> "CycMatrix":
        flat = self.arr.ravel()
        if self.arr.dtype == np.int64:
            g = math.gcd(self.den, int(np.gcd.reduce(np.abs(flat)))) if flat.size else self.den
            if g > 1:
                self.arr = self.arr // g
                self.den = self.den // g
            return self
        g = self.den
        for v in flat:
            g = math.gcd(g, int(v))
            if g == 1:
                break
        if g > 1:
            self.arr = self.arr // g
            self.den = self.den // g
        maxabs = 0
        for v in self.arr.ravel():
            a = abs(int(v))
            if a > maxabs:
                maxabs = a
        if maxabs < _INT64_SAFE:
            self.arr = self.arr.astype(np.int64)
        return self

    @property
    def shape(self):
        return self.arr.shape[:2]

    # -- ops -------------------------------------------------------------------

    def lift(self, M: int) -> "CycMatrix":
        if M == self.order:
            return self
        if M % self.order:
            raise ValueError("target order must be a multiple")
        nrows, ncols = self.shape
        phi = euler_phi(M)
        stride = M // self.order
        out = np.zeros((nrows, ncols, phi), dtype=object)
        src_phi = self.arr.shape[2]
        rows = _reduction_rows(M, (src_phi - 1) * stride)
        for t in range(src_phi):
            row = rows[t * stride]
            plane = self.arr[:, :, t]
            for u in range(phi):
                if row[u]:
                    out[:, :, u] = out[:, :, u] + plane * row[u]
        return CycMatrix(M, self.den, out)._tighten()

    def _common(self, other: "CycMatrix"):
        M = math.lcm(self.order, other.order)
        return self.lift(M), other.lift(M), M

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        a, b, M = self._common(other)
        phi = euler_phi(M)
        (ra, ca, _), (rb, cb, _) = a.arr.shape, b.arr.shape
        if ca != rb:
            raise ValueError("shape mismatch")
        amax = int(np.max(np.abs(a.arr))) if a.arr.size else 0
        bmax = int(np.max(np.abs(b.arr))) if b.arr.size else 0
        rows_pre = _reduction_rows(M, 2 * phi - 2)
        rowmax = 1
        for t in range(phi, 2 * phi - 1):
            for v in rows_pre[t]:
                if abs(v) > rowmax:
                    rowmax = abs(v)
        bound = amax * bmax * ca * phi * (1 + rowmax * phi)
        if a.arr.dtype == np.int64 and b.arr.dtype == np.int64 and bound < _INT64_SAFE:
            work = np.zeros((ra, cb, 2 * phi - 1), dtype=np.int64)
            aa, bb = a.arr, b.arr
        else:
            work = np.zeros((ra, cb, 2 * phi - 1), dtype=object)
            aa, bb = a.arr.astype(object), b.arr.astype(object)
        # one slab product per left coefficient index: C[:, :, s+t] gathers
        # A[:, :, s] @ B[:, :, t] over all t at once
        bflat = bb.reshape(rb, cb * phi)
        for s in range(phi):
            plane = (aa[:, :, s] @ bflat).reshape(ra, cb, phi)
            work[:, :, s : s + phi] += plane
        rows = _reduction_rows(M, 2 * phi - 2)
        out = work[:, :, :phi].copy()
        for t in range(phi, 2 * phi - 1):
            row = rows[t]
            plane = work[:, :, t]
            for u in range(phi):
                if row[u]:
                    out[:, :, u] = out[:, :, u] + plane * row[u]
        return CycMatrix(M, a.den * b.den, out)._tighten()

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        a, b, M = self._common(other)
        arr = a.arr.astype(object) * b.den + b.arr.astype(object) * a.den
        return CycMatrix(M, a.den * b.den, arr)._tighten()

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        a, b, M = self._common(other)
        arr = a.arr.astype(object) * b.den - b.arr.astype(object) * a.den
        return CycMatrix(M, a.den * b.den, arr)._tighten()

    def scale(self, c: CycNum) -> "CycMatrix":
        return CycMatrix.identity(self.shape[0], scalar=c) @ self

    def pow_int(self, k: int) -> "CycMatrix":
        if k < 0:
            raise ValueError("negative matrix power unsupported")
        n = self.shape[0]
        result = CycMatrix.identity(n, order=self.order)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        a, b, _ = self._common(other)
        a = a._tighten()
        b = b._tighten()
        if a.den != b.den or a.arr.shape != b.arr.shape:
            return False
        return bool(np.all(a.arr == b.arr))

    __hash__ = None

    def entry(self, i: int, j: int) -> CycNum:
        nums = [int(v) for v in self.arr[i, j, :]]
        return CycNum(self.order, vec=_norm_pair(self.den, nums))

    def is_zero(self) -> bool:
        return bool(np.all(self.arr == 0))

    def scalar_of_identity(self) -> CycNum | None:
        """If the matrix is c*I, return c, else None."""
        n, m = self.shape
        if n != m:
            return None
        diag = self.entry(0, 0)
        for i in range(n):
            for j in range(m):
                if i == j:
                    if self.entry(i, j) != diag:
                        return None
                elif not self.entry(i, j).is_zero():
                    return None
        return diag
