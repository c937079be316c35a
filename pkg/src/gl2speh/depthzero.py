"""Division-algebra unit groups over a local field, in residue-field form.

The multiplicative group modeled here is generated by the units of the
unramified degree-n extension (the ambient tower level) together with a
uniformizing element pi_D normalizing them: pi_D x pi_D^{-1} = Frobenius(x),
and pi_D^n is central, acting through a chosen root of unity theta_pi. Group
elements are pairs (x, j) with x an ambient unit and j an unreduced integer
power of pi_D.

From a level-d character theta (regular over the base level) and theta_pi,
the module builds the d-dimensional tame representation tau: the inflated
character and its Frobenius twists on the unit torus, and a twisted cyclic
shift for pi_D whose d-th power is the scalar

    lambda = theta(-1)^{m+1} * theta_pi,      m = n / d.

All defining invariants of tau — the conjugation twist on every unit, the
d-th power of the shift, distinctness of the torus characters — are
re-verified exhaustively at construction time. Traces come with two
independent evaluation routes that must agree.

The Hom-space dimension computation at the bottom is a literal nullspace
rank over the cyclotomic field: no combinatorial shortcut is taken, so it
serves as an independent check on the expected multiplicity pattern.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycMatrix, CycNum, exact_rank
from .characters import MultChar, is_regular, norm_inflate
from .finite_field import FieldTower, FqElem

__all__ = [
    "DivisionParams",
    "DxElement",
    "TameRep",
    "build_tau",
    "tau_trace",
    "ext_square_trace",
    "predicted_char",
    "WSpace",
    "mackey_hom_dim",
]


class DivisionParams:
    """Everything fixed by one choice of (tower, theta, theta_pi).

    tower: the ambient field F_{q^n} with its subfields.
    d:     the dimension of the tame representation; must divide n.
    theta: regular multiplicative character of the level-d subfield.
    theta_pi: root of unity giving the central action of pi_D^n.
    """

    def __init__(self, tower: FieldTower, d: int, theta: MultChar, theta_pi: CycNum):
        if tower.n % d:
            raise ValueError("d must divide the ambient degree")
        if theta.tower is not tower or theta.level != d:
            raise ValueError("theta must be a level-d character of this tower")
        if not is_regular(theta):
            raise ValueError("theta must be regular over the base level")
        if not (theta_pi ** (2 * theta_pi.order) == CycNum.rational(1)):
            raise ValueError("theta_pi must be a root of unity")
        self.tower = tower
        self.d = d
        self.m = tower.n // d
        self.theta = theta
        self.theta_pi = theta_pi
        self.theta_tilde = norm_inflate(theta, tower.n)
        # lambda = theta(-1)^{m+1} * theta_pi
        self.lam = theta.at_minus_one() ** (self.m + 1) * theta_pi

    @property
    def q(self) -> int:
        return self.tower.q

    @property
    def n(self) -> int:
        return self.tower.n

    def torus_char(self, i: int) -> MultChar:
        """The i-th Frobenius twist of the inflated character."""
        return self.theta_tilde.frobenius_twist(i % self.d)

    def describe(self) -> dict:
        from .cyclotomic import cyc_repr

        return {
            "q": self.q,
            "n": self.n,
            "d": self.d,
            "m": self.m,
            "theta_level": self.theta.level,
            "theta_exponent": self.theta.exponent,
            "theta_pi": cyc_repr(self.theta_pi),
            "lambda": cyc_repr(self.lam),
        }


@dataclass(frozen=True)
class DxElement:
    """Group element x * pi_D^j with x an ambient unit (j unreduced)."""

    x: FqElem
    j: int

    def __post_init__(self):
        if self.x.is_zero():
            raise ValueError("unit part must be nonzero")

    def __mul__(self, other: "DxElement") -> "DxElement":
        # pi_D^j x' pi_D^{-j} = Frobenius^j(x')
        return DxElement(self.x * other.x.frobenius(self.j), self.j + other.j)

    def inv(self) -> "DxElement":
        return DxElement(self.x.inv().frobenius(-self.j), -self.j)

    def __repr__(self):
        return f"DxElement({self.x!r}, pi^{self.j})"


def _zero() -> CycNum:
    return CycNum.rational(0)


def _one() -> CycNum:
    return CycNum.rational(1)


class TameRep:
    """The d-dimensional representation tau of the division unit group.

    Basis vectors e_0, ..., e_{d-1}; the unit torus acts diagonally by the
    Frobenius twists of the inflated character, indexed so that e_i carries
    the i-th twist; pi_D shifts e_i to e_{i-1} for i >= 1 and sends e_0 to
    lambda * e_{d-1}.
    """

    def __init__(self, params: DivisionParams):
        self.params = params
        d = params.d
        lam = params.lam
        rows = [[_zero() for _ in range(d)] for _ in range(d)]
        for i in range(1, d):
            rows[i - 1][i] = _one()
        rows[d - 1][0] = lam
        self.pi_matrix = CycMatrix.from_rows(rows)
        self._pi_inv = self.pi_matrix.pow_int(d - 1).scale(lam.inv())
        self._verify_invariants()

    # -- actions

    def torus_matrix(self, x: FqElem) -> CycMatrix:
        p = self.params
        d = p.d
        rows = [[_zero() for _ in range(d)] for _ in range(d)]
        for i in range(d):
            rows[i][i] = p.torus_char(i)(x)
        return CycMatrix.from_rows(rows)

    def pi_power(self, j: int) -> CycMatrix:
        if j >= 0:
            return self.pi_matrix.pow_int(j)
        return self._pi_inv.pow_int(-j)

    def matrix(self, g: DxElement) -> CycMatrix:
        return self.torus_matrix(g.x) @ self.pi_power(g.j)

    # -- invariants

    def _verify_invariants(self):
        p = self.params
        d = p.d
        lam_id = CycMatrix.identity(d, scalar=p.lam)
        if not (self.pi_matrix.pow_int(d) == lam_id):
            raise ArithmeticError("pi_D^d does not act by lambda")
        if not (self.pi_matrix @ self._pi_inv == CycMatrix.identity(d)):
            raise ArithmeticError("pi_D inverse is wrong")  # pragma: no cover
        # distinct torus characters
        exps = {p.torus_char(i).exponent for i in range(d)}
        if len(exps) != d:
            raise ArithmeticError("torus characters are not pairwise distinct")
        # conjugation twist, exhaustively over the unit torus; since pi acts by
        # a monomial matrix and the torus diagonally, the two products agree
        # entrywise iff chi_c(x) = chi_r(Frob x) wherever pi has support
        support = [((i - 1) % d, i) for i in range(d)]
        for x in p.tower.units(p.n):
            fx = x.frobenius()
            for r, c in support:
                if not (p.torus_char(c)(x) == p.torus_char(r)(fx)):
                    raise ArithmeticError("conjugation twist fails on the torus")
        # one full matrix-product anchor for the same identity
        gamma = p.tower.gamma(p.n)
        lhs = self.pi_matrix @ self.torus_matrix(gamma)
        rhs = self.torus_matrix(gamma.frobenius()) @ self.pi_matrix
        if not (lhs == rhs):
            raise ArithmeticError("conjugation twist fails on the torus")  # pragma: no cover

    def trace(self, g: DxElement) -> CycNum:
        """Character value, via the closed form cross-checked against the matrix."""
        p = self.params
        d = p.d
        a, r = divmod(g.j, d)
        if r != 0:
            closed = CycNum.rational(0)
        else:
            s = CycNum.rational(0)
            for i in range(d):
                s = s + p.torus_char(i)(g.x)
            closed = (p.lam**a) * s
        mat = self.matrix(g)
        direct = CycNum.rational(0)
        for i in range(d):
            direct = direct + mat.entry(i, i)
        if not (closed == direct):
            raise RuntimeError("tame character: closed form disagrees with the matrix trace")
        return closed


def build_tau(params: DivisionParams) -> TameRep:
    return TameRep(params)


def tau_trace(tau: TameRep, g: DxElement) -> CycNum:
    return tau.trace(g)


def ext_square_trace(tau: TameRep, g: DxElement) -> CycNum:
    """Character of the exterior square of tau, by two independent routes.

    Route one sums the 2x2 principal minors of tau(g); route two evaluates
    (tr(g)^2 - tr(g^2)) / 2. A mismatch raises RuntimeError.
    """
    M = tau.matrix(g)
    d = tau.params.d
    minors = CycNum.rational(0)
    for i in range(d):
        for j in range(i + 1, d):
            minors = minors + (M.entry(i, i) * M.entry(j, j) - M.entry(i, j) * M.entry(j, i))
    t1 = tau.trace(g)
    t2 = tau.trace(g * g)
    newton = (t1 * t1 - t2) * CycNum.rational(1) / CycNum.rational(2)
    if not (minors == newton):
        raise RuntimeError("exterior-square character: minor sum disagrees with the power-sum form")
    return minors


def predicted_char(params: DivisionParams, kind: str, z: CycNum | None = None):
    """Named one-dimensional characters of the division unit group.

    norm_char: theta composed with the reduced norm; on (x, j) this is
               theta(Norm(x)) * (theta((-1)^{n+1}) * theta_pi)^j.
    mu:        the unramified character sending (x, j) to z^j.
    omega:     the central character of tau, defined where tau(g) is scalar.
    """
    if kind == "norm_char":
        at_pi = params.theta.at_minus_one() ** (params.n + 1) * params.theta_pi

        def norm_char(g: DxElement) -> CycNum:
            nx = g.x.norm_to(1).as_level(params.d)
            return params.theta(nx) * at_pi**g.j

        return norm_char
    if kind == "mu":
        if z is None:
            raise ValueError("mu requires the value z")

        def mu(g: DxElement) -> CycNum:
            return z**g.j

        return mu
    if kind == "omega":
        tau = build_tau(params)

        def omega(g: DxElement) -> CycNum:
            s = tau.matrix(g).scalar_of_identity()
            if s is None:
                raise ValueError("element does not act by a scalar")
            return s

        return omega
    raise ValueError(f"unknown character kind: {kind}")


class WSpace:
    """The d-dimensional eigenvector module with offset y.

    Basis f_0, ..., f_{d-1}. A torus pair (x1, x2) acts on f_i by
    chi_i(x1) * chi_{i+y}(x2) with chi_i the i-th Frobenius twist of the
    inflated character; pi_D acts by the twisted shift picking up one lambda
    factor for each index that wraps, on either tensor slot.
    """

    def __init__(self, params: DivisionParams, y: int):
        self.params = params
        self.y = y % params.d

    def torus_matrix(self, x1: FqElem, x2: FqElem) -> CycMatrix:
        p = self.params
        d = p.d
        rows = [[_zero() for _ in range(d)] for _ in range(d)]
        for i in range(d):
            rows[i][i] = p.torus_char(i)(x1) * p.torus_char(i + self.y)(x2)
        return CycMatrix.from_rows(rows)

    def pi_matrix(self) -> CycMatrix:
        p = self.params
        d = p.d
        lam = p.lam
        rows = [[_zero() for _ in range(d)] for _ in range(d)]
        for i in range(d):
            factor = _one()
            if i == 0:
                factor = factor * lam
            if (i + self.y) % d == 0:
                factor = factor * lam
            rows[(i - 1) % d][i] = factor
        return CycMatrix.from_rows(rows)


def _hom_dimension(space_a: WSpace, space_b: WSpace) -> int:
    """dim of {X : A_g X = X B_g for the generators g}, exactly."""
    p = space_a.params
    d = p.d
    gamma = p.tower.gamma(p.n)
    one = p.tower.one(p.n)
    gens_a = [
        space_a.torus_matrix(gamma, one),
        space_a.torus_matrix(one, gamma),
        space_a.pi_matrix(),
    ]
    gens_b = [
        space_b.torus_matrix(gamma, one),
        space_b.torus_matrix(one, gamma),
        space_b.pi_matrix(),
    ]
    # unknown X is d x d; rows of the linear system are indexed by (gen, i, j)
    rows = []
    for A, B in zip(gens_a, gens_b):
        for i in range(d):
            for j in range(d):
                row = [_zero() for _ in range(d * d)]
                # (A X)_{ij} = sum_k A_{ik} X_{kj}
                for k in range(d):
                    c = A.entry(i, k)
                    if not c.is_zero():
                        row[k * d + j] = row[k * d + j] + c
                # -(X B)_{ij} = -sum_k X_{ik} B_{kj}
                for k in range(d):
                    c = B.entry(k, j)
                    if not c.is_zero():
                        row[i * d + k] = row[i * d + k] - c
                rows.append(row)
    return d * d - exact_rank(rows)


def mackey_hom_dim(params: DivisionParams, y: int, y_prime: int) -> tuple[int, int]:
    """Hom dimensions between offset modules.

    Returns (direct, composite): the direct dimension Hom(W_y, W_{y'}), and
    the composite dimension Hom(W_y, W_{y'}) + Hom(W_y, W_{-y'}) counting
    both halves matched by the outer involution.
    """
    wy = WSpace(params, y)
    direct = _hom_dimension(wy, WSpace(params, y_prime))
    mirror = _hom_dimension(wy, WSpace(params, -y_prime))
    return direct, direct + mirror
