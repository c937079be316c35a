"""Finite fields as explicit discrete-log towers.

A tower fixes one ambient field F_{q^n} (q = p^f) presented as F_p[x]/(h)
for a primitive monic h, so every nonzero element is a power of the class
gamma of x and multiplication is exponent addition; addition goes through a
precomputed Zech logarithm table. For every divisor k of n the subfield
F_{q^k} is realized inside the ambient field with generator
gamma_k = gamma^{(q^n-1)/(q^k-1)}, and elements carry the level they belong
to, so Frobenius twists, traces, and norms between levels are exact exponent
bookkeeping with no floating point and no polynomial factorization at
runtime.

When no defining polynomial is supplied, the ambient modulus is the first
primitive monic polynomial in lexicographic order on coefficient tuples
(c_{deg-1}, ..., c_1, c_0), the coefficients drawn from the balanced
residue representatives -(p-1)/2 ... (p-1)/2 in ascending order. Subfield
minimal polynomials are always derived from the ambient generator; a
caller-supplied subfield polynomial is accepted only when it matches the
derived one, because an independently chosen subfield model would break the
exponent formulas tying the levels together.
"""

from __future__ import annotations

import itertools
import math

__all__ = [
    "FieldTower",
    "FqElem",
    "build_tower",
    "find_primitive_poly",
    "frobenius",
    "trace_to",
    "norm_to",
]


# -- small integer / polynomial helpers (coefficients ascending, mod p) -------


def prime_factors(n: int) -> list[int]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


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


def _poly_mul_mod(a: list[int], b: list[int], h: list[int], p: int) -> list[int]:
    deg = len(h) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # reduce: h monic
    for k in range(len(prod) - 1, deg - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(deg):
                prod[k - deg + i] = (prod[k - deg + i] - c * h[i]) % p
    prod = prod[:deg]
    return prod + [0] * (deg - len(prod))


def _poly_pow_mod(base: list[int], e: int, h: list[int], p: int) -> list[int]:
    deg = len(h) - 1
    result = [1] + [0] * (deg - 1)
    cur = list(base) + [0] * (deg - len(base))
    cur = cur[:deg]
    while e:
        if e & 1:
            result = _poly_mul_mod(result, cur, h, p)
        cur = _poly_mul_mod(cur, cur, h, p)
        e >>= 1
    return result


def _is_one(poly: list[int]) -> bool:
    return poly[0] == 1 and all(c == 0 for c in poly[1:])


def _is_primitive(h: list[int], p: int) -> bool:
    """True when the class of x generates the full unit group of F_p[x]/(h)."""
    deg = len(h) - 1
    order = p**deg - 1
    x = [0, 1] if deg > 1 else [(-h[0]) % p]
    if deg == 1:
        # linear: root -h0; primitive iff the root generates F_p^*
        r = (-h[0]) % p
        if r == 0:
            return False
        val = 1
        for _ in range(order):
            val = (val * r) % p
        if val != 1:
            return False
        for ell in prime_factors(order):
            val = pow(r, order // ell, p)
            if val == 1:
                return False
        return True
    if not _is_one(_poly_pow_mod(x, order, h, p)):
        return False
    for ell in prime_factors(order):
        if _is_one(_poly_pow_mod(x, order // ell, h, p)):
            return False
    return True


def find_primitive_poly(p: int, deg: int) -> list[int]:
    """First primitive monic polynomial of the given degree over F_p.

    Order: lexicographic on (c_{deg-1}, ..., c_0) with each coefficient
    running over the balanced representatives -(p-1)/2 .. (p-1)/2 in
    ascending order. Returns ascending coefficients [c_0, ..., c_{deg-1}, 1]
    reduced to 0..p-1.
    """
    half = (p - 1) // 2
    digits = range(-half, half + 1)
    for tup in itertools.product(digits, repeat=deg):
        coeffs = [tup[deg - 1 - i] % p for i in range(deg)] + [1]
        if _is_primitive(coeffs, p):
            return coeffs
    raise ArithmeticError("no primitive polynomial found")  # pragma: no cover


# -- elements ------------------------------------------------------------------


class FqElem:
    """Element of one level F_{q^k} of a tower, stored as gamma_k^e (or zero)."""

    __slots__ = ("tower", "level", "e")

    def __init__(self, tower: "FieldTower", level: int, e: int | None):
        self.tower = tower
        self.level = level
        self.e = e if e is None else e % (tower.level_order(level) - 1)

    # -- predicates

    def is_zero(self) -> bool:
        return self.e is None

    def is_one(self) -> bool:
        return self.e == 0

    def __bool__(self) -> bool:
        return self.e is not None

    def _amb(self) -> int | None:
        """Ambient exponent."""
        if self.e is None:
            return None
        return self.e * self.tower._M[self.level] % (self.tower.ambient_size - 1)

    # -- ring ops (same tower; levels lifted to their lcm)

    @staticmethod
    def _join(a: "FqElem", b: "FqElem") -> int:
        if a.tower is not b.tower:
            raise ValueError("elements from different towers")
        k = math.lcm(a.level, b.level)
        return k

    def __mul__(self, other: "FqElem"):
        k = FqElem._join(self, other)
        a, b = self.as_level(k), other.as_level(k)
        if a.e is None or b.e is None:
            return self.tower.zero(k)
        return FqElem(self.tower, k, a.e + b.e)

    def __add__(self, other: "FqElem"):
        k = FqElem._join(self, other)
        a, b = self.as_level(k), other.as_level(k)
        if a.e is None:
            return b
        if b.e is None:
            return a
        t = self.tower
        E = t._amb_add(a._amb(), b._amb())
        if E is None:
            return t.zero(k)
        M = t._M[k]
        if E % M:
            raise ArithmeticError("sum left the subfield level")  # pragma: no cover
        return FqElem(t, k, E // M)

    def __neg__(self):
        if self.e is None:
            return self
        half = (self.tower.level_order(self.level) - 1) // 2
        return FqElem(self.tower, self.level, self.e + half)

    def __sub__(self, other: "FqElem"):
        return self + (-other)

    def inv(self) -> "FqElem":
        if self.e is None:
            raise ZeroDivisionError("inverse of zero field element")
        return FqElem(self.tower, self.level, -self.e)

    def __truediv__(self, other: "FqElem"):
        return self * other.inv()

    def __pow__(self, t: int):
        if self.e is None:
            if t < 0:
                raise ZeroDivisionError("negative power of zero")
            return self if t else self.tower.one(self.level)
        return FqElem(self.tower, self.level, self.e * t)

    def frobenius(self, i: int = 1) -> "FqElem":
        """x -> x^{q^i}, the i-th power of the q-power Frobenius."""
        if self.e is None:
            return self
        return FqElem(self.tower, self.level, self.e * pow(self.tower.q, i, self.tower.level_order(self.level) - 1))

    def as_level(self, k: int) -> "FqElem":
        """Re-view at level k. Going up requires level | k; going down
        requires the element to actually lie in the smaller subfield."""
        t = self.tower
        if k == self.level:
            return self
        if k not in t._M:
            raise ValueError(f"level {k} not in tower")
        if self.e is None:
            return t.zero(k)
        E = self._amb()
        M = t._M[k]
        if E % M:
            raise ValueError("element does not lie in the requested subfield")
        return FqElem(t, k, E // M)

    def trace_to(self, k: int) -> "FqElem":
        """Field trace from the element's level down to level k."""
        m = self.level
        if m % k:
            raise ValueError("trace target must divide the source level")
        if self.e is None:
            return self.tower.zero(k)
        t = self.tower
        q = t.q
        steps = m // k
        E = None
        rel_order = t.level_order(m) - 1
        for j in range(steps):
            Ej = (self.e * pow(q, k * j, rel_order)) % rel_order * t._M[m] % (t.ambient_size - 1)
            E = t._amb_add(E, Ej)
        if E is None:
            return t.zero(k)
        M = t._M[k]
        if E % M:
            raise ArithmeticError("trace left the target subfield")  # pragma: no cover
        return FqElem(t, k, E // M)

    def norm_to(self, k: int) -> "FqElem":
        """Field norm from the element's level down to level k: on exponents
        the norm multiplies by (q^m-1)/(q^k-1), which re-reads the same
        exponent at the lower level."""
        m = self.level
        if m % k:
            raise ValueError("norm target must divide the source level")
        if self.e is None:
            return self.tower.zero(k)
        return FqElem(self.tower, k, self.e % (self.tower.level_order(k) - 1))

    # -- comparisons / misc

    def __eq__(self, other):
        if not isinstance(other, FqElem):
            return NotImplemented
        if self.tower is not other.tower:
            return False
        return self._amb() == other._amb()

    def __hash__(self):
        return hash((id(self.tower), self._amb()))

    def coords(self) -> tuple[int, ...]:
        """Coordinates on the power basis of the element's own level."""
        return self.tower.coords(self)

    def __repr__(self):
        if self.e is None:
            return f"FqElem(level={self.level}, 0)"
        return f"FqElem(level={self.level}, g^{self.e})"


# -- the tower -------------------------------------------------------------------


class FieldTower:
    """One ambient field F_{q^n} with all subfields F_{q^k}, k | n."""

    def __init__(
        self,
        p: int,
        f: int,
        n: int,
        poly: list[int] | None = None,
        sub_polys: dict[int, list[int]] | None = None,
    ):
        if p < 2 or any(p % ell == 0 for ell in range(2, p)):
            raise ValueError("p must be prime")
        if p == 2:
            raise ValueError("odd characteristic required")
        if f < 1 or n < 1:
            raise ValueError("f and n must be positive")
        self.p = p
        self.f = f
        self.n = n
        self.q = p**f
        N = f * n
        self.ambient_degree = N
        self.ambient_size = p**N  # = q^n

        if poly is None:
            poly = find_primitive_poly(p, N)
        else:
            poly = [c % p for c in poly]
            if len(poly) != N + 1 or poly[-1] != 1:
                raise ValueError("defining polynomial must be monic of the ambient degree")
            if not _is_primitive(poly, p):
                raise ValueError("defining polynomial must be primitive")
        self._h = tuple(poly)

        self._build_ambient_tables()
        self._build_levels()
        if sub_polys:
            for k, coeffs in sub_polys.items():
                want = list(self._level_poly[k])
                got = [c % p for c in coeffs]
                if got != want:
                    raise ValueError(
                        f"subfield polynomial for level {k} does not match the derived one {want}"
                    )

    # -- construction helpers

    def _build_ambient_tables(self):
        p, N = self.p, self.ambient_degree
        h = list(self._h)
        size = self.ambient_size
        exp_coords: list[tuple[int, ...]] = []
        cur = [1] + [0] * (N - 1)
        for _ in range(size - 1):
            exp_coords.append(tuple(cur))
            # multiply by x mod h
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for i in range(N):
                    cur[i] = (cur[i] - carry * h[i]) % p
        if tuple(cur) != exp_coords[0]:
            raise ArithmeticError("generator order check failed")  # pragma: no cover
        self._exp_coords = exp_coords
        self._dlog = {coords: t for t, coords in enumerate(exp_coords)}
        zech: list[int | None] = []
        for t in range(size - 1):
            coords = list(exp_coords[t])
            coords[0] = (coords[0] + 1) % p
            tup = tuple(coords)
            zech.append(None if all(c == 0 for c in tup) else self._dlog[tup])
        self._zech = zech
        # exponents of the prime-field scalars 1..p-1 inside the ambient group
        scalar_exp = {}
        step = (size - 1) // (p - 1)
        for c in range(1, p):
            tup = tuple([c] + [0] * (N - 1))
            scalar_exp[c] = self._dlog[tup]
        # sanity: prime-field scalars form the subgroup of index p-1
        for c, E in scalar_exp.items():
            if E % step:
                raise ArithmeticError("prime-field scalar outside expected subgroup")  # pragma: no cover
        self._scalar_exp = scalar_exp

    def _amb_add(self, E1: int | None, E2: int | None) -> int | None:
        """Ambient exponent of gamma^E1 + gamma^E2 (None encodes zero)."""
        if E1 is None:
            return E2
        if E2 is None:
            return E1
        size = self.ambient_size
        z = self._zech[(E2 - E1) % (size - 1)]
        if z is None:
            return None
        return (E1 + z) % (size - 1)

    def _amb_trace_int(self, E: int | None, fk: int) -> int:
        """Absolute trace to F_p of gamma^E viewed in the degree-fk level."""
        if E is None:
            return 0
        p = self.p
        size = self.ambient_size
        acc = None
        for j in range(fk):
            acc = self._amb_add(acc, E * pow(p, j, size - 1) % (size - 1))
        if acc is None:
            return 0
        coords = self._exp_coords[acc]
        if any(c for c in coords[1:]):
            raise ArithmeticError("trace not in the prime field")  # pragma: no cover
        return coords[0]

    def _build_levels(self):
        p, q, n = self.p, self.q, self.n
        size = self.ambient_size
        self._M: dict[int, int] = {}
        self._level_poly: dict[int, tuple[int, ...]] = {}
        self._level_coords: dict[int, list[tuple[int, ...]]] = {}
        self._level_coords_index: dict[int, dict[tuple[int, ...], int]] = {}
        self._level_abs_trace: dict[int, list[int]] = {}
        for k in _divisors(n):
            M = (size - 1) // (q**k - 1)
            self._M[k] = M
            fk = self.f * k
            # minimal polynomial of gamma^M over F_p via its Frobenius orbit
            orbit = []
            seen = set()
            for j in range(fk):
                E = M * pow(p, j, size - 1) % (size - 1)
                if E in seen:
                    raise ArithmeticError("subfield generator orbit collapsed")  # pragma: no cover
                seen.add(E)
                orbit.append(E)
            half = (size - 1) // 2
            coeffs: list[int | None] = [self._scalar_exp[1]]  # the poly "1"
            for E in orbit:
                minus_root = (E + half) % (size - 1)
                new: list[int | None] = [None] * (len(coeffs) + 1)
                for i, c in enumerate(coeffs):
                    new[i + 1] = c  # y * coeffs
                for i, c in enumerate(coeffs):
                    if c is not None:
                        term = (c + minus_root) % (size - 1)
                        new[i] = self._amb_add(new[i], term)
                coeffs = new
            ints = []
            for c in coeffs:
                if c is None:
                    ints.append(0)
                else:
                    tup = self._exp_coords[c]
                    if any(v for v in tup[1:]):
                        raise ArithmeticError("minimal polynomial has a non-scalar coefficient")  # pragma: no cover
                    ints.append(tup[0])
            if ints[-1] != 1 or len(ints) != fk + 1:
                raise ArithmeticError("minimal polynomial is not monic of the right degree")  # pragma: no cover
            self._level_poly[k] = tuple(ints)
            # power-basis coordinates for every unit of the level
            table: list[tuple[int, ...]] = []
            cur = [1] + [0] * (fk - 1)
            hk = ints
            for _ in range(q**k - 1):
                table.append(tuple(cur))
                carry = cur[-1]
                cur = [0] + cur[:-1]
                if carry:
                    for i in range(fk):
                        cur[i] = (cur[i] - carry * hk[i]) % p
            if tuple(cur) != table[0]:
                raise ArithmeticError("subfield generator order check failed")  # pragma: no cover
            # consistency: the power-basis coordinates must embed back onto gamma^{e M}
            for e in (0, 1, (q**k - 1) // 2, q**k - 2):
                e %= q**k - 1
                acc = None
                for i, c in enumerate(table[e]):
                    if c:
                        acc = self._amb_add(acc, (self._scalar_exp[c] + i * M) % (size - 1))
                if acc != e * M % (size - 1):
                    raise ArithmeticError("subfield embedding inconsistent")  # pragma: no cover
            self._level_coords[k] = table
            self._level_coords_index[k] = {tup: e for e, tup in enumerate(table)}
            self._level_abs_trace[k] = [
                self._amb_trace_int(e * M % (size - 1), fk) for e in range(q**k - 1)
            ]

    # -- public api

    def levels(self) -> list[int]:
        return sorted(self._M)

    def level_order(self, k: int) -> int:
        if k not in self._M:
            raise ValueError(f"level {k} not in tower")
        return self.q**k

    def poly(self, level: int | None = None) -> list[int]:
        k = self.n if level is None else k_check(self, level)
        return list(self._level_poly[k])

    def gamma(self, level: int | None = None) -> FqElem:
        k = self.n if level is None else k_check(self, level)
        return FqElem(self, k, 1)

    def zero(self, level: int | None = None) -> FqElem:
        k = self.n if level is None else k_check(self, level)
        return FqElem(self, k, None)

    def one(self, level: int | None = None) -> FqElem:
        k = self.n if level is None else k_check(self, level)
        return FqElem(self, k, 0)

    def from_exp(self, level: int, e: int | None) -> FqElem:
        k_check(self, level)
        return FqElem(self, level, e)

    def scalar(self, level: int, c: int) -> FqElem:
        """Image of the integer c (an F_p scalar) at the given level."""
        k_check(self, level)
        c %= self.p
        if c == 0:
            return self.zero(level)
        E = self._scalar_exp[c]
        M = self._M[level]
        if E % M:
            raise ArithmeticError("prime scalar missing from level")  # pragma: no cover
        return FqElem(self, level, E // M)

    def units(self, level: int | None = None):
        k = self.n if level is None else k_check(self, level)
        for e in range(self.level_order(k) - 1):
            yield FqElem(self, k, e)

    def elements(self, level: int | None = None):
        k = self.n if level is None else k_check(self, level)
        yield from self.units(k)
        yield self.zero(k)

    def coords(self, x: FqElem) -> tuple[int, ...]:
        if x.tower is not self:
            raise ValueError("element from a different tower")
        fk = self.f * x.level
        if x.e is None:
            return tuple([0] * fk)
        return self._level_coords[x.level][x.e]

    def from_coords(self, level: int, coords) -> FqElem:
        k_check(self, level)
        tup = tuple(c % self.p for c in coords)
        if all(c == 0 for c in tup):
            return self.zero(level)
        idx = self._level_coords_index[level].get(tup)
        if idx is None:
            raise ValueError("coordinates of the wrong length")
        return FqElem(self, level, idx)

    def abs_trace(self, x: FqElem) -> int:
        """Trace of x from its own level all the way down to F_p, as an int."""
        if x.tower is not self:
            raise ValueError("element from a different tower")
        if x.e is None:
            return 0
        return self._level_abs_trace[x.level][x.e]

    def describe(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "n": self.n,
            "q": self.q,
            "ambient_order": self.ambient_size,
            "modulus": list(self._h),
            "subfield_moduli": {k: list(v) for k, v in sorted(self._level_poly.items())},
        }

    def __repr__(self):
        return f"FieldTower(p={self.p}, f={self.f}, n={self.n})"


def k_check(tower: FieldTower, k: int) -> int:
    if k not in tower._M:
        raise ValueError(f"level {k} not in tower")
    return k


def build_tower(
    p: int,
    f: int,
    n: int,
    poly: list[int] | None = None,
    sub_polys: dict[int, list[int]] | None = None,
) -> FieldTower:
    """Construct the tower F_p < F_q < ... < F_{q^n}, q = p^f."""
    return FieldTower(p, f, n, poly=poly, sub_polys=sub_polys)


def frobenius(x: FqElem, i: int = 1) -> FqElem:
    return x.frobenius(i)


def trace_to(x: FqElem, level: int) -> FqElem:
    return x.trace_to(level)


def norm_to(x: FqElem, level: int) -> FqElem:
    return x.norm_to(level)
