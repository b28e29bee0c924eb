"""Shared helpers for the test suite."""

from cyclicsb.cocycles import standard_cyclic_cocycle
from cyclicsb.monomial_maps import compose, galois_generator_map
from cyclicsb.pipeline import build_theta1, build_theta2
from cyclicsb.scalars import SymbolicScalar, SymbolicShift


def beta_by_ratio_oracle(s, ell):
    """Derive the beta gamma-exponents without the chain recurrence.

    Build Theta with unknown base-field symbols b_i, expand both composed
    maps at a generic point, and read each gamma exponent off the coordinate
    ratio; the common-scalar requirement with b_0 = 1 and lambda = 1 then
    fixes every exponent by accumulation.
    """
    sigma = SymbolicShift(s)
    alpha = standard_cyclic_cocycle(s, SymbolicScalar.symbol("gamma"), sigma)
    phi1 = galois_generator_map(alpha)
    psi1 = galois_generator_map(alpha, power=ell)
    b = [SymbolicScalar.symbol(f"b{i}") for i in range(s)]
    theta = compose(build_theta2(tuple(b), sigma), build_theta1(s, ell, sigma))
    point = tuple(SymbolicScalar.point(f"a{i}") for i in range(s))
    left = compose(theta, phi1).evaluate(point)
    right = compose(psi1, theta).evaluate(point)
    gains = []
    for i in range(s):
        ratio = left[i] / right[i]
        # the point symbols must cancel identically
        assert ratio.is_galois_fixed
        # ratio = (b_i / b_{i+1}) * gamma^g
        table = dict(ratio.exps)
        assert table.pop((f"b{i}", None)) == 1
        assert table.pop((f"b{(i + 1) % s}", None)) == -1
        gamma_power = table.pop(("gamma", None), 0)
        assert not table
        gains.append(gamma_power)
    assert sum(gains) == 0  # the chain closes
    exponents = [0]
    for i in range(s - 1):
        exponents.append(exponents[i] + gains[i])
    return tuple(exponents)
