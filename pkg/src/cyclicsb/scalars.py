"""Exact scalar arithmetic underlying every check in this package.

Two interchangeable coefficient backends:

* ``CyclotomicElement`` -- an element of Q(zeta_n), stored as the canonical
  residue modulo the n-th cyclotomic polynomial, so equality is plain
  coefficient comparison.  Galois automorphisms act by zeta -> zeta^g.

* ``SymbolicScalar`` -- a Laurent monomial in named symbols times an exact
  rational coefficient.  The symbols form a free abelian group, so every
  value is invertible and identities between monomial expressions are
  decided by normal-form comparison.  There is deliberately no addition:
  all identities verified through this backend are multiplicative.

Rational numbers are ``fractions.Fraction`` throughout; it already keeps the
canonical reduced form (coprime numerator and denominator, denominator
positive) that exact equality relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("conductor must be positive")
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


def _poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_div_exact(num, den):
    """Exact quotient of integer polynomials (ascending coefficients)."""
    num = _poly_trim(num)
    den = _poly_trim(den)
    quot = [0] * (len(num) - len(den) + 1)
    while len(num) >= len(den):
        shift = len(num) - len(den)
        factor, rem = divmod(num[-1], den[-1])
        if rem:
            raise ArithmeticError("division is not exact")
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num = _poly_trim(num)
    if num:
        raise ArithmeticError("division is not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, computed by dividing x^n - 1 by the
    product of Phi_d over proper divisors d of n."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce_mod_phi(coeffs, n):
    """Remainder of a Fraction polynomial modulo Phi_n, padded to degree
    phi(n) - 1."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    work = list(coeffs)
    while len(work) > deg:
        lead = work[-1]
        if lead:
            shift = len(work) - 1 - deg
            for i in range(deg + 1):
                work[shift + i] -= lead * phi[i]
        work.pop()
    work += [Fraction(0)] * (deg - len(work))
    return tuple(Fraction(c) for c in work)


class CyclotomicElement:
    """Residue in Q[x]/(Phi_n), i.e. an element of the field Q(zeta_n).

    The coefficient vector always has length phi(n) and is the unique reduced
    representative, so ``==`` decides field equality.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        phi = euler_phi(conductor)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(
                f"need {phi} coefficients for conductor {conductor}, got {len(coeffs)}"
            )
        self.conductor = conductor
        self.coeffs = coeffs

    @classmethod
    def from_rational(cls, conductor: int, value) -> "CyclotomicElement":
        phi = euler_phi(conductor)
        return cls(conductor, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, conductor: int) -> "CyclotomicElement":
        return cls.from_rational(conductor, 0)

    @classmethod
    def one(cls, conductor: int) -> "CyclotomicElement":
        return cls.from_rational(conductor, 1)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CyclotomicElement":
        k = power % conductor
        raw = [Fraction(0)] * (k + 1)
        raw[k] = Fraction(1)
        return cls(conductor, _reduce_mod_phi(raw, conductor))

    def _check(self, other):
        if self.conductor != other.conductor:
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.from_rational(self.conductor, other)
        return None

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicElement(
            self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
        return CyclotomicElement(self.conductor, _reduce_mod_phi(prod, self.conductor))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        """Inverse via the extended Euclidean algorithm against Phi_n.

        Phi_n is irreducible over Q, so every nonzero residue is a unit.
        """
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = phi, _poly_trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        # r0 is the gcd, a nonzero constant
        c = r0[0]
        inv = [x / c for x in s0]
        return CyclotomicElement(self.conductor, _reduce_mod_phi(inv, self.conductor))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicElement.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def rational_value(self):
        """The Fraction this element equals, or None if it is irrational."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _frac_poly_divmod(num, den):
    num = [Fraction(c) for c in num]
    den = _poly_trim([Fraction(c) for c in den])
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    num = _poly_trim(num)
    while len(num) >= len(den):
        shift = len(num) - len(den)
        factor = num[-1] / den[-1]
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num = _poly_trim(num)
    return _poly_trim(quot), num


def _frac_poly_mul(a, b):
    if not a or not b:
        return []
    prod = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] += ai * bj
    return _poly_trim(prod)


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


@dataclass(frozen=True)
class GaloisAutomorphism:
    """The automorphism of Q(zeta_n) sending zeta to zeta^exponent.

    Composition multiplies exponents modulo the conductor, so powers of a
    generator are ``sigma.power(t)``.
    """

    conductor: int
    exponent: int

    def __post_init__(self):
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.conductor
                           if self.conductor > 1 else 0)
        if math.gcd(self.exponent if self.conductor > 1 else 1, self.conductor) != 1:
            raise ValueError(
                f"exponent {self.exponent} not invertible modulo {self.conductor}"
            )

    def apply(self, a: CyclotomicElement) -> CyclotomicElement:
        if a.conductor != self.conductor:
            raise ValueError(
                f"conductor mismatch: automorphism on {self.conductor}, "
                f"element in {a.conductor}"
            )
        n = self.conductor
        raw = [Fraction(0)] * n
        for i, c in enumerate(a.coeffs):
            if c:
                raw[(i * self.exponent) % n] += c
        return CyclotomicElement(n, _reduce_mod_phi(raw, n))

    def compose(self, other: "GaloisAutomorphism") -> "GaloisAutomorphism":
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch in composition")
        return GaloisAutomorphism(self.conductor, self.exponent * other.exponent)

    def power(self, t: int) -> "GaloisAutomorphism":
        if self.conductor == 1:
            return self
        return GaloisAutomorphism(self.conductor, pow(self.exponent, t, self.conductor))

    def order(self) -> int:
        k = 1
        g = self.exponent % self.conductor
        acc = g
        while acc != 1 % self.conductor:
            acc = (acc * g) % self.conductor
            k += 1
        return k

    def is_identity(self) -> bool:
        return self.exponent == 1 % self.conductor

    # --- uniform backend protocol used by the monomial-map machinery ---

    def apply_power(self, a: CyclotomicElement, t: int) -> CyclotomicElement:
        return self.power(t).apply(a)

    def one(self) -> CyclotomicElement:
        return CyclotomicElement.one(self.conductor)

    def fixes(self, a: CyclotomicElement) -> bool:
        return self.apply(a) == a

    def identity_power(self, s: int) -> bool:
        """Whether sigma^s is the identity automorphism."""
        if self.conductor == 1:
            return True
        return pow(self.exponent, s, self.conductor) == 1 % self.conductor


def fixed_by(tau, a) -> bool:
    """True iff applying tau leaves a unchanged."""
    return tau.fixes(a)


# Symbol keys are (name, tag): tag None marks a symbol declared rational over
# the base field (fixed by every automorphism), an integer tag is the
# automorphism power already applied to a point symbol.
_SymKey = tuple


def _key_sort(key):
    name, tag = key
    return (name, tag is not None, tag if tag is not None else 0)


@dataclass(frozen=True)
class SymbolicScalar:
    """A unit of the form q * prod sym_i^e_i with q a nonzero rational.

    Instances are immutable with a canonical representation (sorted exponent
    table, no zero exponents), so ``==`` decides equality in the group.
    """

    coeff: Fraction
    exps: tuple

    @staticmethod
    def _make(coeff, table: dict) -> "SymbolicScalar":
        coeff = Fraction(coeff)
        if coeff == 0:
            raise ZeroDivisionError("symbolic scalars form a group: zero excluded")
        items = tuple(sorted(
            ((k, e) for k, e in table.items() if e != 0), key=lambda kv: _key_sort(kv[0])
        ))
        return SymbolicScalar(coeff, items)

    @classmethod
    def unit(cls, value=1) -> "SymbolicScalar":
        return cls._make(value, {})

    @classmethod
    def symbol(cls, name: str) -> "SymbolicScalar":
        """A formal unit of the base field (fixed under the Galois action)."""
        return cls._make(1, {(name, None): 1})

    @classmethod
    def point(cls, name: str, tag: int = 0) -> "SymbolicScalar":
        """A formal coordinate value carrying an automorphism-power tag."""
        return cls._make(1, {(name, tag): 1})

    def _table(self) -> dict:
        return dict(self.exps)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicScalar.unit(other)
        if not isinstance(other, SymbolicScalar):
            return NotImplemented
        table = self._table()
        for k, e in other.exps:
            table[k] = table.get(k, 0) + e
        return SymbolicScalar._make(self.coeff * other.coeff, table)

    __rmul__ = __mul__

    def inverse(self) -> "SymbolicScalar":
        return SymbolicScalar._make(1 / self.coeff, {k: -e for k, e in self.exps})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicScalar.unit(other)
        if not isinstance(other, SymbolicScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return SymbolicScalar._make(self.coeff ** k, {key: e * k for key, e in self.exps})

    def __bool__(self):
        return True  # never zero

    def shifted(self, t: int, order: int) -> "SymbolicScalar":
        """Apply sigma^t: advance every point tag by t modulo the group order;
        base-field symbols are fixed."""
        table = {}
        for (name, tag), e in self.exps:
            key = (name, tag) if tag is None else (name, (tag + t) % order)
            table[key] = table.get(key, 0) + e
        return SymbolicScalar._make(self.coeff, table)

    @property
    def is_galois_fixed(self) -> bool:
        return all(tag is None for (_, tag), _ in self.exps)

    def is_one(self) -> bool:
        return self.coeff == 1 and not self.exps

    def power_of(self, name: str):
        """If self == name^e for a base-field symbol, return e, else None."""
        if self.coeff != 1:
            return None
        if not self.exps:
            return 0
        if len(self.exps) == 1 and self.exps[0][0] == (name, None):
            return self.exps[0][1]
        return None

    def __repr__(self):
        parts = []
        if self.coeff != 1 or not self.exps:
            parts.append(str(self.coeff))
        for (name, tag), e in self.exps:
            base = name if tag in (None, 0) else f"s^{tag}({name})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class SymbolicShift:
    """Generator of a cyclic Galois action of the given order on symbolic
    scalars: it advances point tags and fixes base-field symbols."""

    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")

    def apply(self, a: SymbolicScalar) -> SymbolicScalar:
        return a.shifted(1, self.order)

    def apply_power(self, a: SymbolicScalar, t: int) -> SymbolicScalar:
        return a.shifted(t, self.order)

    def one(self) -> SymbolicScalar:
        return SymbolicScalar.unit(1)

    def fixes(self, a: SymbolicScalar) -> bool:
        return a.is_galois_fixed

    def identity_power(self, s: int) -> bool:
        return s % self.order == 0
