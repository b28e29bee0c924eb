"""2-cocycles on a cyclic group of order s with values in field units.

A cocycle is stored as the full s x s table of values alpha(sigma^i, sigma^j)
together with the generator action used to twist the cocycle condition.  The
standard cyclic table (1 below the anti-diagonal wrap, gamma on and past it)
is just a constructor; verification and the crossed-product multiplication
consume arbitrary tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class CocycleCheck:
    ok: bool
    witness: Optional[tuple[int, int, int]]

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Cocycle2:
    """Table of unit values alpha(sigma^i, sigma^j) on a cyclic group of
    order s, together with sigma's action on the values.

    ``rational`` records whether every entry is fixed by sigma; the symbolic
    descent machinery only accepts rational tables.
    """

    order: int
    table: tuple
    sigma: object
    rational: bool

    @classmethod
    def from_rows(cls, rows, sigma) -> "Cocycle2":
        s = len(rows)
        if s < 1:
            raise ValueError("order must be positive")
        table = tuple(tuple(row) for row in rows)
        if any(len(row) != s for row in table):
            raise ValueError("cocycle table must be square")
        for i, row in enumerate(table):
            for j, entry in enumerate(row):
                if not entry:
                    raise ValueError(f"zero entry at ({i}, {j}): values must be units")
        rational = all(sigma.fixes(entry) for row in table for entry in row)
        return cls(s, table, sigma, rational)

    def value(self, a: int, b: int):
        s = self.order
        return self.table[a % s][b % s]

    def first_row(self) -> tuple:
        """The values alpha(sigma, sigma^j), the only ones the descent maps
        consume."""
        return self.table[1 % self.order]


def standard_cyclic_cocycle(s: int, gamma, sigma) -> Cocycle2:
    """alpha(sigma^i, sigma^j) = 1 if i + j < s, gamma otherwise.

    gamma must be a unit fixed by sigma; that makes the table rational and
    the cocycle condition an exact carry count.
    """
    if s < 1:
        raise ValueError("order must be positive")
    if not gamma:
        raise ValueError("gamma must be a unit")
    if not sigma.fixes(gamma):
        raise ValueError("gamma must be fixed by the generator automorphism")
    one = sigma.one()
    rows = [[one if i + j < s else gamma for j in range(s)] for i in range(s)]
    return Cocycle2.from_rows(rows, sigma)


def check_2cocycle(alpha: Cocycle2) -> CocycleCheck:
    """Exhaustively test alpha^f(g,h) * alpha(gh,f) = alpha(g,hf) * alpha(h,f)
    over all triples (g,h,f) = (sigma^a, sigma^b, sigma^c).

    alpha^f means f applied to the value.  Returns the first violating triple
    in lexicographic (a, b, c) order.
    """
    s = alpha.order
    sigma = alpha.sigma
    for a in range(s):
        for b in range(s):
            ab = alpha.table[a][b]
            for c in range(s):
                lhs = sigma.apply_power(ab, c) * alpha.table[(a + b) % s][c]
                rhs = alpha.table[a][(b + c) % s] * alpha.table[b][c]
                if lhs != rhs:
                    return CocycleCheck(False, (a, b, c))
    return CocycleCheck(True, None)


def cocycle_power(alpha: Cocycle2, ell: int) -> Cocycle2:
    """Entrywise ell-th power; represents the cocycle of the ell-fold tensor
    power of the algebra."""
    rows = [[entry ** ell for entry in row] for row in alpha.table]
    return Cocycle2.from_rows(rows, alpha.sigma)


def cocycle_product(alpha: Cocycle2, beta: Cocycle2) -> Cocycle2:
    if alpha.order != beta.order:
        raise ValueError("order mismatch")
    rows = [[x * y for x, y in zip(ra, rb)] for ra, rb in zip(alpha.table, beta.table)]
    return Cocycle2.from_rows(rows, alpha.sigma)


def is_normalized(alpha: Cocycle2) -> bool:
    """True iff alpha(1, g) = alpha(g, 1) = 1 for all g."""
    one = alpha.sigma.one()
    s = alpha.order
    return all(alpha.table[0][j] == one for j in range(s)) and \
        all(alpha.table[i][0] == one for i in range(s))
