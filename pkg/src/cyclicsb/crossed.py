"""Crossed-product algebra arithmetic over a cyclotomic field K.

Elements are sums of u_{sigma^a} * c with right coefficients c in K, stored
as the length-s coefficient vector.  The two defining rules

    a * u_g = u_g * g(a)          u_g * u_h = u_{gh} * alpha(g, h)

expand bilinearly to the monomial product used throughout:

    (u_{sigma^i} a)(u_{sigma^j} b) = u_{sigma^{i+j}} * alpha(sigma^i, sigma^j) * sigma^j(a) * b
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cocycles import Cocycle2
from .matrices import kernel_dimension, rank_over_field
from .scalars import CyclotomicElement, GaloisAutomorphism, euler_phi


@dataclass(frozen=True)
class CrossedElement:
    order: int
    coefficients: tuple

    @classmethod
    def from_coefficients(cls, coeffs) -> "CrossedElement":
        coeffs = tuple(coeffs)
        return cls(len(coeffs), coeffs)

    @classmethod
    def monomial(cls, order: int, a: int, coeff: CyclotomicElement) -> "CrossedElement":
        conductor = coeff.conductor
        vec = [CyclotomicElement.zero(conductor)] * order
        vec[a % order] = coeff
        return cls(order, tuple(vec))

    @classmethod
    def unit(cls, order: int, conductor: int) -> "CrossedElement":
        return cls.monomial(order, 0, CyclotomicElement.one(conductor))

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("order mismatch")

    def __add__(self, other):
        self._check(other)
        return CrossedElement(
            self.order,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other):
        self._check(other)
        return CrossedElement(
            self.order,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __bool__(self):
        return any(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, CrossedElement):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))


def crossed_multiply(x: CrossedElement, y: CrossedElement, alpha: Cocycle2,
                     sigma: Optional[GaloisAutomorphism] = None) -> CrossedElement:
    if sigma is None:
        sigma = alpha.sigma
    if x.order != y.order or x.order != alpha.order:
        raise ValueError("order mismatch")
    s = x.order
    conductor = sigma.conductor
    out = [CyclotomicElement.zero(conductor)] * s
    for i, a in enumerate(x.coefficients):
        if not a:
            continue
        for j, b in enumerate(y.coefficients):
            if not b:
                continue
            k = (i + j) % s
            out[k] = out[k] + alpha.table[i][j] * sigma.apply_power(a, j) * b
    return CrossedElement(s, tuple(out))


@dataclass(frozen=True)
class AssociativityResult:
    ok: bool
    witness: Optional[tuple]

    def __bool__(self):
        return self.ok


def _basis_monomials(s: int, conductor: int):
    phi = euler_phi(conductor)
    for a in range(s):
        for p in range(phi):
            yield (a, p), CrossedElement.monomial(
                s, a, CyclotomicElement.zeta(conductor, p)
            )


def associativity_check(alpha: Cocycle2, sigma: Optional[GaloisAutomorphism] = None,
                        scope: str = "basis", count: int = 50,
                        seed: int = 0) -> AssociativityResult:
    """Test (xy)z = x(yz) under the table alpha.

    scope="basis" runs all triples of basis monomials u_{sigma^a} zeta^p,
    which decides associativity by bilinearity.  scope="random" spot-checks
    dense random elements instead.  Accepts tables that are not cocycles;
    the witness then pins the failure.
    """
    if sigma is None:
        sigma = alpha.sigma
    s = alpha.order
    n = sigma.conductor
    if scope == "basis":
        basis = list(_basis_monomials(s, n))
        for la, x in basis:
            for lb, y in basis:
                xy = crossed_multiply(x, y, alpha, sigma)
                for lc, z in basis:
                    lhs = crossed_multiply(xy, z, alpha, sigma)
                    rhs = crossed_multiply(x, crossed_multiply(y, z, alpha, sigma),
                                           alpha, sigma)
                    if lhs != rhs:
                        return AssociativityResult(False, (la, lb, lc))
        return AssociativityResult(True, None)
    if scope == "random":
        import random as _random
        rng = _random.Random(seed)
        phi = euler_phi(n)

        def rand_element():
            return CrossedElement.from_coefficients(
                CyclotomicElement(n, [Fraction(rng.randint(-3, 3)) for _ in range(phi)])
                for _ in range(s)
            )

        for trial in range(count):
            x, y, z = rand_element(), rand_element(), rand_element()
            lhs = crossed_multiply(crossed_multiply(x, y, alpha, sigma), z, alpha, sigma)
            rhs = crossed_multiply(x, crossed_multiply(y, z, alpha, sigma), alpha, sigma)
            if lhs != rhs:
                return AssociativityResult(False, (x, y, z))
        return AssociativityResult(True, None)
    raise ValueError(f"unknown scope {scope!r}")


def _flatten(element: CrossedElement) -> list:
    coords = []
    for c in element.coefficients:
        coords.extend(c.coeffs)
    return coords


def center_dimension(alpha: Cocycle2, sigma: Optional[GaloisAutomorphism] = None) -> int:
    """Dimension over Q of the centre, via the commutant of the two
    generators u_sigma and zeta on the Q-basis {u_{sigma^a} zeta^p}.

    The generators generate the whole algebra, so their commutant is the
    centre; no other products need checking.
    """
    if sigma is None:
        sigma = alpha.sigma
    s = alpha.order
    n = sigma.conductor
    generators = [
        CrossedElement.monomial(s, 1 % s, CyclotomicElement.one(n)),
        CrossedElement.monomial(s, 0, CyclotomicElement.zeta(n)),
    ]
    rows = []
    basis = [e for _, e in _basis_monomials(s, n)]
    dim = len(basis)
    columns = []
    for e in basis:
        col = []
        for b in generators:
            commutator = crossed_multiply(e, b, alpha, sigma) - \
                crossed_multiply(b, e, alpha, sigma)
            col.extend(_flatten(commutator))
        columns.append(col)
    # transpose: each matrix row is one linear condition on the z-coordinates
    rows = [[columns[j][i] for j in range(dim)] for i in range(len(columns[0]))]
    return kernel_dimension(rows, dim)


def _standard_gamma(alpha: Cocycle2):
    """Extract gamma from a standard cyclic table; reject other tables."""
    s = alpha.order
    one = alpha.sigma.one()
    gamma = alpha.table[1 % s][(s - 1) % s] if s > 1 else one
    for i in range(s):
        for j in range(s):
            expected = one if i + j < s else gamma
            if alpha.table[i][j] != expected:
                raise ValueError("splitting representation needs a standard cyclic table")
    return gamma


def _mat_zero(s, n):
    return [[CyclotomicElement.zero(n) for _ in range(s)] for _ in range(s)]


def _mat_identity(s, n):
    m = _mat_zero(s, n)
    for i in range(s):
        m[i][i] = CyclotomicElement.one(n)
    return m


def _mat_mul(a, b, s, n):
    out = _mat_zero(s, n)
    for i in range(s):
        for k in range(s):
            if not a[i][k]:
                continue
            for j in range(s):
                if b[k][j]:
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def splitting_representation(x: CrossedElement, alpha: Cocycle2,
                             sigma: Optional[GaloisAutomorphism] = None):
    """Image of x under rho: A tensor K -> M_s(K).

    rho(c) = diag(c, sigma(c), ..., sigma^{s-1}(c)) for c in K;
    rho(u_sigma) carries gamma in the corner (0, s-1) and ones on the
    subdiagonal; arbitrary elements extend additively and multiplicatively.
    """
    if sigma is None:
        sigma = alpha.sigma
    s = alpha.order
    n = sigma.conductor
    if not sigma.identity_power(s):
        raise ValueError("generator order must divide s for the splitting")
    gamma = _standard_gamma(alpha)
    u = _mat_zero(s, n)
    if s == 1:
        u[0][0] = gamma
    else:
        u[0][s - 1] = gamma
        for t in range(1, s):
            u[t][t - 1] = CyclotomicElement.one(n)
    result = _mat_zero(s, n)
    u_power = _mat_identity(s, n)
    for a, c in enumerate(x.coefficients):
        if a > 0:
            u_power = _mat_mul(u_power, u, s, n)
        if not c:
            continue
        diag = _mat_zero(s, n)
        for i in range(s):
            diag[i][i] = sigma.apply_power(c, i)
        term = _mat_mul(u_power, diag, s, n)
        for i in range(s):
            for j in range(s):
                result[i][j] = result[i][j] + term[i][j]
    return result


@dataclass(frozen=True)
class SplittingCheck:
    ok: bool
    rank: int
    witness: Optional[tuple]

    def __bool__(self):
        return self.ok


def splitting_check(alpha: Cocycle2,
                    sigma: Optional[GaloisAutomorphism] = None) -> SplittingCheck:
    """Verify rho is multiplicative on all basis monomial pairs and that the
    images span the full s x s matrix space over K."""
    if sigma is None:
        sigma = alpha.sigma
    s = alpha.order
    n = sigma.conductor
    basis = list(_basis_monomials(s, n))
    images = {}
    for label, e in basis:
        images[label] = splitting_representation(e, alpha, sigma)
    for la, x in basis:
        for lb, y in basis:
            prod = splitting_representation(crossed_multiply(x, y, alpha, sigma),
                                            alpha, sigma)
            direct = _mat_mul(images[la], images[lb], s, n)
            if prod != direct:
                return SplittingCheck(False, 0, (la, lb))
    flat = [[m[i][j] for i in range(s) for j in range(s)]
            for m in images.values()]
    rank = rank_over_field(flat)
    return SplittingCheck(rank == s * s, rank, None)
