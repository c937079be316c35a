"""2x2 matrix groups over a tower level, with exact Bruhat bookkeeping.

Matrices hold four same-level tower elements. The only structural fact the
rest of the engine needs is the decomposition of the group into the upper
Borel and the big cell: every matrix with a nonzero lower-left entry
factors uniquely as b * s * n_x with b upper triangular, s the unsigned
antidiagonal involution, and n_x upper unipotent. The decomposition is
recomputed and re-multiplied on every call, so a bookkeeping slip cannot
survive silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finite_field import FieldTower, FqElem

__all__ = [
    "Mat2",
    "BruhatForm",
    "mat",
    "diag",
    "unipotent",
    "weyl",
    "signed_weyl",
    "identity",
    "bruhat_decompose",
    "frobenius_conj",
    "enumerate_unipotent",
    "random_invertible",
]


class Mat2:
    """2x2 matrix with entries at one level of one tower."""

    __slots__ = ("tower", "level", "a", "b", "c", "d")

    def __init__(self, a: FqElem, b: FqElem, c: FqElem, d: FqElem):
        lvls = {a.level, b.level, c.level, d.level}
        if len(lvls) != 1:
            raise ValueError("matrix entries must share one level")
        if not (a.tower is b.tower is c.tower is d.tower):
            raise ValueError("matrix entries must share one tower")
        self.tower = a.tower
        self.level = a.level
        self.a, self.b, self.c, self.d = a, b, c, d

    def entries(self) -> tuple[FqElem, FqElem, FqElem, FqElem]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> FqElem:
        return self.a * self.d - self.b * self.c

    def trace(self) -> FqElem:
        return self.a + self.d

    def inv(self) -> "Mat2":
        dt = self.det()
        if dt.is_zero():
            raise ZeroDivisionError("matrix not invertible")
        di = dt.inv()
        return Mat2(self.d * di, -self.b * di, -self.c * di, self.a * di)

    def is_upper(self) -> bool:
        return self.c.is_zero()

    def is_scalar(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Mat2({self.a!r}, {self.b!r}; {self.c!r}, {self.d!r})"


def mat(tower: FieldTower, level: int, a, b, c, d) -> Mat2:
    """Build a matrix from tower elements or plain integers (prime scalars)."""

    def coerce(v):
        if isinstance(v, FqElem):
            return v if v.level == level else v.as_level(level)
        return tower.scalar(level, v)

    return Mat2(coerce(a), coerce(b), coerce(c), coerce(d))


def identity(tower: FieldTower, level: int) -> Mat2:
    return mat(tower, level, 1, 0, 0, 1)


def diag(x: FqElem, y: FqElem) -> Mat2:
    z = x.tower.zero(x.level)
    return Mat2(x, z, z, y.as_level(x.level))


def unipotent(x: FqElem) -> Mat2:
    t = x.tower
    return Mat2(t.one(x.level), x, t.zero(x.level), t.one(x.level))


def weyl(tower: FieldTower, level: int) -> Mat2:
    """The unsigned antidiagonal involution used in all coset representatives."""
    return mat(tower, level, 0, 1, 1, 0)


def signed_weyl(tower: FieldTower, level: int) -> Mat2:
    """The determinant-one antidiagonal element used in the twisted kernel."""
    return mat(tower, level, 0, 1, -1, 0)


@dataclass
class BruhatForm:
    """g = b            (cell 'borel', g upper triangular), or
    g = b @ s @ n_x     (cell 'big') with b upper triangular."""

    cell: str
    b: Mat2
    x: FqElem | None


def bruhat_decompose(g: Mat2) -> BruhatForm:
    """Split off the Borel part of g relative to the upper Borel subgroup.

    The big-cell branch solves g = b * s * n_x exactly and verifies the
    product before returning.
    """
    if g.c.is_zero():
        if g.a.is_zero() or g.d.is_zero():
            raise ZeroDivisionError("matrix not invertible")
        return BruhatForm("borel", g, None)
    t, lvl = g.tower, g.level
    ci = g.c.inv()
    x = g.d * ci
    dt = g.det()
    if dt.is_zero():
        raise ZeroDivisionError("matrix not invertible")
    b = Mat2(-dt * ci, g.a, t.zero(lvl), g.c)
    check = b @ weyl(t, lvl) @ unipotent(x)
    if check != g:
        raise ArithmeticError("bruhat factorization failed to reproduce input")  # pragma: no cover
    return BruhatForm("big", b, x)


def frobenius_conj(g: Mat2, i: int = 1) -> Mat2:
    """Apply the q-power Frobenius to every entry, i times."""
    return Mat2(
        g.a.frobenius(i), g.b.frobenius(i), g.c.frobenius(i), g.d.frobenius(i)
    )


def enumerate_unipotent(tower: FieldTower, level: int):
    """All upper unipotent matrices n_x, in generator-power order, zero last."""
    for x in tower.elements(level):
        yield unipotent(x)


def random_invertible(tower: FieldTower, level: int, rng) -> Mat2:
    """Uniform-ish invertible matrix from a seeded rng (for spot checks)."""
    size = tower.level_order(level)
    while True:
        es = [rng.randrange(size) for _ in range(4)]
        elems = [
            tower.zero(level) if e == size - 1 else tower.from_exp(level, e)
            for e in es
        ]
        g = Mat2(*elems)
        if not g.det().is_zero():
            return g
