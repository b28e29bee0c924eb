"""Semilinear monomial self-maps of projective (s-1)-space.

A map is determined by an integer exponent matrix E with constant row sums,
a vector of nonzero coefficients, and a twist t: it sends a point p to

    T(p)_i = c_i * prod_j sigma^t(p_j)^{E_ij}.

Constant row sums make T well defined on projective points; the common row
sum is the degree.  The descent generators phi_1 / psi_1, the diagonal and
circulant pieces of the birational map, and all their composites live here.
Birationality is decided on the exponent lattice: in the chart x_0 != 0 the
map acts on Laurent exponents by the reduced matrix row_i(E) - row_0(E),
and it is invertible on the torus exactly when that matrix is unimodular.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cocycles import Cocycle2, cocycle_power
from .matrices import det_int, inverse_unimodular


class OutsideTorusError(ValueError):
    """Evaluation hit a zero coordinate with a negative exponent, or landed
    in the base locus; the map is only defined off that set."""


@dataclass(frozen=True)
class SemilinearMonomialMap:
    dimension: int
    exponents: tuple
    coefficients: tuple
    twist: int
    sigma: object

    @classmethod
    def from_parts(cls, exponents, coefficients, twist, sigma) -> "SemilinearMonomialMap":
        exponents = tuple(tuple(int(e) for e in row) for row in exponents)
        coefficients = tuple(coefficients)
        s = len(exponents)
        if s == 0:
            raise ValueError("dimension must be positive")
        if any(len(row) != s for row in exponents):
            raise ValueError("exponent matrix must be square")
        if len(coefficients) != s:
            raise ValueError("need one coefficient per coordinate")
        sums = {sum(row) for row in exponents}
        if len(sums) != 1:
            raise ValueError(f"row sums must agree, got {sorted(sums)}")
        degree = sums.pop()
        if degree < 1:
            raise ValueError(f"degree must be at least 1, got {degree}")
        for i, c in enumerate(coefficients):
            if not c:
                raise ValueError(f"zero coefficient at index {i}")
        if not sigma.identity_power(s):
            raise ValueError("generator order must divide the dimension "
                             "for twists to reduce mod s")
        return cls(s, exponents, coefficients, twist % s, sigma)

    @classmethod
    def identity(cls, s: int, sigma) -> "SemilinearMonomialMap":
        one = sigma.one()
        rows = [[int(i == j) for j in range(s)] for i in range(s)]
        return cls.from_parts(rows, [one] * s, 0, sigma)

    @property
    def degree(self) -> int:
        return sum(self.exponents[0])

    def evaluate(self, point):
        """Apply the map to a tuple of coordinates.

        Zero coordinates are tolerated while no negative exponent touches
        them; a base-locus point (all outputs zero) is rejected the same way.
        """
        if len(point) != self.dimension:
            raise ValueError("point dimension mismatch")
        twisted = [self.sigma.apply_power(p, self.twist) for p in point]
        out = []
        for i, row in enumerate(self.exponents):
            value = self.coefficients[i]
            dead = False
            for p, e in zip(twisted, row):
                if e == 0:
                    continue
                if not p:
                    if e < 0:
                        raise OutsideTorusError(
                            f"zero coordinate raised to power {e}")
                    dead = True
                    continue
                value = value * p ** e
            out.append(None if dead else value)
        survivors = [v for v in out if v is not None]
        if not survivors:
            raise OutsideTorusError("point lies in the base locus")
        if len(survivors) == len(out):
            return tuple(out)
        zero = survivors[0] - survivors[0]
        return tuple(zero if v is None else v for v in out)


def compose(outer: SemilinearMonomialMap,
            inner: SemilinearMonomialMap) -> SemilinearMonomialMap:
    """The map p -> outer(inner(p))."""
    if outer.dimension != inner.dimension:
        raise ValueError("dimension mismatch")
    if outer.sigma != inner.sigma:
        raise ValueError("maps must share the generator action")
    s = outer.dimension
    sigma = outer.sigma
    exps = [[sum(outer.exponents[i][j] * inner.exponents[j][k] for j in range(s))
             for k in range(s)] for i in range(s)]
    coeffs = []
    for i in range(s):
        c = outer.coefficients[i]
        for j in range(s):
            e = outer.exponents[i][j]
            if e:
                c = c * sigma.apply_power(inner.coefficients[j], outer.twist) ** e
        coeffs.append(c)
    return SemilinearMonomialMap.from_parts(
        exps, coeffs, outer.twist + inner.twist, sigma)


def iterate(T: SemilinearMonomialMap, times: int) -> SemilinearMonomialMap:
    result = SemilinearMonomialMap.identity(T.dimension, T.sigma)
    for _ in range(times):
        result = compose(T, result)
    return result


@dataclass(frozen=True)
class EqualityWitness:
    equal: bool
    ratio: object
    shift: Optional[tuple]
    mismatch: Optional[int]

    def __bool__(self):
        return self.equal


def projectively_equal(T: SemilinearMonomialMap, U: SemilinearMonomialMap,
                       mode: str = "strict") -> EqualityWitness:
    """Decide whether T and U agree as projective maps.

    strict: exponent matrices identical and one scalar lambda with
    c^T_i = lambda * c^U_i for every i.  torus: additionally allow the rows
    of E_T - E_U to agree with one common integer vector (a shared monomial
    factor, invisible on the torus).  The witness carries lambda and the
    vector; on failure it carries the first offending coordinate.
    """
    if mode not in ("strict", "torus"):
        raise ValueError(f"unknown mode {mode!r}")
    if T.dimension != U.dimension:
        raise ValueError("dimension mismatch")
    if T.twist != U.twist or T.sigma != U.sigma:
        return EqualityWitness(False, None, None, None)
    s = T.dimension
    shift = tuple(T.exponents[0][j] - U.exponents[0][j] for j in range(s))
    if mode == "strict" and any(shift):
        return EqualityWitness(False, None, None, 0)
    for i in range(s):
        row = tuple(T.exponents[i][j] - U.exponents[i][j] for j in range(s))
        if row != shift:
            return EqualityWitness(False, None, None, i)
    ratio = T.coefficients[0] / U.coefficients[0]
    for i in range(1, s):
        if T.coefficients[i] / U.coefficients[i] != ratio:
            return EqualityWitness(False, None, None, i)
    return EqualityWitness(True, ratio, shift, None)


def projectively_equal_points(p, q) -> bool:
    """Whether two coordinate tuples name the same projective point."""
    if len(p) != len(q):
        return False
    anchor = next((i for i, v in enumerate(q) if v), None)
    if anchor is None:
        return not any(p)
    if not p[anchor]:
        return False
    ratio = p[anchor] / q[anchor]
    for a, b in zip(p, q):
        if not b:
            if a:
                return False
            continue
        if a != ratio * b:
            return False
    return True


def galois_generator_map(alpha: Cocycle2, power: int = 1) -> SemilinearMonomialMap:
    """The descent generator as a point map.

    For power=1 this is phi_1, for power=ell it is psi_1 built from the
    entrywise ell-th power table: T(p)_j = alpha_{1,j} * sigma(p_{(j+1) mod s}),
    a twisted coordinate shift whose wrap factors are the first cocycle row.
    """
    if not alpha.rational:
        raise ValueError("descent maps need a cocycle with base-field values")
    table = cocycle_power(alpha, power) if power != 1 else alpha
    s = alpha.order
    row = table.first_row()
    exps = [[int(k == (j + 1) % s) for k in range(s)] for j in range(s)]
    return SemilinearMonomialMap.from_parts(exps, row, 1, alpha.sigma)


@dataclass(frozen=True)
class DescentCheck:
    ok: bool
    scalar: object
    mismatch: Optional[int]

    def __bool__(self):
        return self.ok


def descent_cocycle_check(T: SemilinearMonomialMap) -> DescentCheck:
    """Finite-order test for a descent datum: the s-fold composite of T must
    be projectively the identity (strict mode), s being the dimension."""
    if T.twist != 1 % T.dimension:
        raise ValueError("descent generator must carry twist 1")
    composite = iterate(T, T.dimension)
    witness = projectively_equal(
        composite, SemilinearMonomialMap.identity(T.dimension, T.sigma), "strict")
    return DescentCheck(witness.equal, witness.ratio, witness.mismatch)


@dataclass(frozen=True)
class LatticeCertificate:
    reduced: tuple
    determinant: int
    birational: bool
    inverse: Optional[tuple]


def lattice_certificate(T: SemilinearMonomialMap) -> LatticeCertificate:
    """Restrict to the chart x_0 != 0 and certify lattice invertibility.

    In chart coordinates y_j = x_j / x_0 the map multiplies Laurent
    exponents by M_ij = E_ij - E_0j (i, j >= 1); constant row sums make the
    x_0 factors cancel.  The map is birational iff det M = +-1, and then the
    integer inverse of M is recorded.
    """
    s = T.dimension
    reduced = tuple(
        tuple(T.exponents[i][j] - T.exponents[0][j] for j in range(1, s))
        for i in range(1, s)
    )
    d = det_int(reduced)
    if d in (1, -1):
        inverse = tuple(tuple(r) for r in inverse_unimodular(reduced))
        return LatticeCertificate(reduced, d, True, inverse)
    return LatticeCertificate(reduced, d, False, None)


def invert_on_torus(T: SemilinearMonomialMap,
                    cert: Optional[LatticeCertificate] = None) -> SemilinearMonomialMap:
    """Inverse of T as a map on the torus, from the lattice certificate.

    The chart inverse N = M^{-1} lifts to projective exponents by giving
    column 0 the balancing entries; every row then gains the common vector
    (1, 0, ..., 0) to land back at degree 1, which changes nothing
    projectively.  Coefficients are chosen so the composite with T has all
    coefficients one.
    """
    if cert is None:
        cert = lattice_certificate(T)
    if not cert.birational:
        raise ValueError(
            f"map is not birational: lattice determinant {cert.determinant}")
    s = T.dimension
    n = cert.inverse
    rows = [[0] * s for _ in range(s)]
    rows[0][0] = 1
    for j in range(1, s):
        total = 0
        for i in range(1, s):
            rows[j][i] = n[j - 1][i - 1]
            total += n[j - 1][i - 1]
        rows[j][0] = 1 - total
    twist = (-T.twist) % s
    sigma = T.sigma
    coeffs = []
    for i in range(s):
        c = sigma.one()
        for j in range(s):
            e = rows[i][j]
            if e:
                c = c * sigma.apply_power(T.coefficients[j], twist) ** (-e)
        coeffs.append(c)
    return SemilinearMonomialMap.from_parts(rows, coeffs, twist, sigma)
