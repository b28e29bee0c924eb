"""End-to-end construction of the birational map between the twisted
projective spaces of a cyclic algebra and of its ell-th tensor power.

The map factors as Theta = Theta2 . Theta1: a circulant monomial map with
ell consecutive ones per exponent row, followed by a diagonal scaling by
scalars beta_i from the base field.  The beta_i satisfy a chain of equations
obtained by equating coordinates of Theta . phi_1 and psi_1 . Theta; with
the free constant k pinned to 1 and beta_0 = 1 the chain propagates to

    beta_{i+1} = beta_i * prod_{t=0}^{ell-1} a_{(i+t) mod s} / a_i^ell,

a_j being the first cocycle row alpha(sigma, sigma^j).  Closing the chain
around the wrap leaves a residual that must be 1, and the count m of wrap
entries hit along the way must equal ell - 1.  Everything is verified
exactly and packaged into a certificate.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .cocycles import Cocycle2, check_2cocycle, standard_cyclic_cocycle
from .monomial_maps import (
    SemilinearMonomialMap,
    compose,
    descent_cocycle_check,
    galois_generator_map,
    invert_on_torus,
    lattice_certificate,
    projectively_equal,
)
from .scalars import CyclotomicElement, GaloisAutomorphism, SymbolicScalar, SymbolicShift


class BetaInconsistencyError(ValueError):
    """The wrap-around residual of the beta chain is not 1."""

    def __init__(self, residual):
        super().__init__(f"wrap-around residual is {residual!r}, not 1")
        self.residual = residual


@dataclass(frozen=True)
class ThetaSpec:
    """Parameters of one pipeline run.

    gamma and sigma live in the chosen backend; the literal fields exist for
    serialization.  Birationality of Theta needs gcd(ell, s) = 1, but a
    ThetaSpec may violate it so the failure mode is observable downstream.
    """

    s: int
    ell: int
    backend: str
    gamma: object
    sigma: object
    gamma_literal: str
    conductor: Optional[int] = None
    generator: Optional[int] = None

    def __post_init__(self):
        if self.s < 2:
            raise ValueError("order must be at least 2")
        if not 1 <= self.ell < self.s:
            raise ValueError(f"need 1 <= ell < s, got ell={self.ell}, s={self.s}")

    def standard_cocycle(self) -> Cocycle2:
        return standard_cyclic_cocycle(self.s, self.gamma, self.sigma)

    def coprime(self) -> bool:
        return math.gcd(self.ell, self.s) == 1


def symbolic_spec(s: int, ell: int, gamma=None) -> ThetaSpec:
    """Spec over the symbolic backend; gamma defaults to the formal symbol
    and may instead be a nonzero rational."""
    if gamma is None:
        value = SymbolicScalar.symbol("gamma")
        literal = "gamma"
    else:
        value = SymbolicScalar.unit(Fraction(gamma))
        literal = str(Fraction(gamma))
    return ThetaSpec(s, ell, "symbolic", value, SymbolicShift(s), literal)


def cyclotomic_spec(s: int, ell: int, conductor: int, generator: int,
                    gamma) -> ThetaSpec:
    """Spec over K = Q(zeta_conductor) with sigma: zeta -> zeta^generator."""
    sigma = GaloisAutomorphism(conductor, generator)
    if not sigma.identity_power(s):
        raise ValueError(
            f"generator {generator} must have order dividing {s} modulo {conductor}")
    value = CyclotomicElement.from_rational(conductor, Fraction(gamma))
    return ThetaSpec(s, ell, "cyclotomic", value, sigma, str(Fraction(gamma)),
                     conductor, generator)


def build_theta1(s: int, ell: int, sigma=None) -> SemilinearMonomialMap:
    """Circulant monomial map: coordinate i picks up the product of the ell
    consecutive coordinates starting at i.  ell = 1 is the identity."""
    if not 1 <= ell < s:
        raise ValueError(f"need 1 <= ell < s, got ell={ell}, s={s}")
    if sigma is None:
        sigma = SymbolicShift(s)
    rows = [[0] * s for _ in range(s)]
    for i in range(s):
        for t in range(ell):
            rows[i][(i + t) % s] += 1
    one = sigma.one()
    return SemilinearMonomialMap.from_parts(rows, [one] * s, 0, sigma)


@dataclass(frozen=True)
class BetaSolution:
    values: tuple
    k: int
    residual: object
    m: int
    gamma_exponents: Optional[tuple]


def build_theta2(beta: Union[BetaSolution, tuple], sigma) -> SemilinearMonomialMap:
    """Diagonal scaling by the beta vector."""
    values = beta.values if isinstance(beta, BetaSolution) else tuple(beta)
    s = len(values)
    rows = [[int(i == j) for j in range(s)] for i in range(s)]
    return SemilinearMonomialMap.from_parts(rows, values, 0, sigma)


def build_theta(spec: ThetaSpec, beta: BetaSolution) -> SemilinearMonomialMap:
    return compose(build_theta2(beta, spec.sigma),
                   build_theta1(spec.s, spec.ell, spec.sigma))


def solve_beta_from_cocycle(alpha: Cocycle2, ell: int) -> BetaSolution:
    """Propagate the beta chain for an arbitrary rational cocycle table.

    Raises BetaInconsistencyError when the chain does not close up (with
    k = 1); for the standard cyclic table it always closes.
    """
    if not alpha.rational:
        raise ValueError("beta chain needs base-field cocycle values")
    s = alpha.order
    row = alpha.first_row()
    one = alpha.sigma.one()
    links = []
    m = 0
    for i in range(s):
        link = one
        for t in range(ell):
            link = link * row[(i + t) % s]
            if t >= 1 and (i + t) % s == s - 1:
                m += 1
        links.append(link / row[i] ** ell)
    values = [one]
    for i in range(s - 1):
        values.append(values[i] * links[i])
    # the last link must land back on beta_0 = 1
    residual = values[s - 1] * links[s - 1] / values[0]
    if residual != one:
        raise BetaInconsistencyError(residual)
    assert m == ell - 1, f"wrap count {m} differs from ell - 1"
    return BetaSolution(tuple(values), 1, residual, m, None)


def solve_beta(spec: ThetaSpec) -> BetaSolution:
    """Beta chain for the standard cyclic cocycle of the spec.

    Tracks the gamma exponent of every beta_i combinatorially (counting wrap
    hits link by link) and checks the scalar values against gamma to those
    powers, so the two bookkeepings confirm each other.
    """
    base = solve_beta_from_cocycle(spec.standard_cocycle(), spec.ell)
    s, ell = spec.s, spec.ell
    exponents = [0]
    for i in range(s - 1):
        hits = sum(1 for t in range(1, ell) if (i + t) % s == s - 1)
        exponents.append(exponents[i] + hits)
    for i, e in enumerate(exponents):
        if base.values[i] != spec.gamma ** e:
            raise BetaInconsistencyError(base.values[i])
    return BetaSolution(base.values, base.k, base.residual, base.m,
                        tuple(exponents))


@dataclass(frozen=True)
class DiagramVerdict:
    ok: bool
    ratio: object
    mismatch: Optional[int]

    def __bool__(self):
        return self.ok


def verify_diagram(spec: ThetaSpec, beta: BetaSolution) -> DiagramVerdict:
    """Strict projective comparison of Theta . phi_1 against psi_1 . Theta."""
    alpha = spec.standard_cocycle()
    phi1 = galois_generator_map(alpha)
    psi1 = galois_generator_map(alpha, power=spec.ell)
    theta = build_theta(spec, beta)
    witness = projectively_equal(compose(theta, phi1), compose(psi1, theta),
                                 "strict")
    return DiagramVerdict(witness.equal, witness.ratio, witness.mismatch)


def invert_theta1_explicit(s: int, ell: int, sigma=None) -> SemilinearMonomialMap:
    """Telescoping inverse of Theta1 on the chart a_0 = 1.

    With z_i the i-th output, consecutive outputs overlap in all but one
    factor, so a_{i+ell} = a_i * z_{i+1} / z_i.  Starting from a_0 = 1 and
    stepping by ell reaches every index exactly once when gcd(ell, s) = 1.
    """
    if math.gcd(ell, s) != 1:
        raise ValueError(f"gcd({ell}, {s}) != 1: no inverse on the torus")
    if sigma is None:
        sigma = SymbolicShift(s)
    rows = [[0] * s for _ in range(s)]
    pos = 0
    for _ in range(s - 1):
        nxt = (pos + ell) % s
        rows[nxt] = list(rows[pos])
        rows[nxt][(pos + 1) % s] += 1
        rows[nxt][pos] -= 1
        pos = nxt
    for row in rows:
        row[0] += 1
    one = sigma.one()
    return SemilinearMonomialMap.from_parts(rows, [one] * s, 0, sigma)


@dataclass(frozen=True)
class StageRecord:
    name: str
    passed: bool
    millis: float


@dataclass(frozen=True)
class PipelineCertificate:
    spec: ThetaSpec
    beta: BetaSolution
    diagram: DiagramVerdict
    lattice: object
    inverse_lattice: SemilinearMonomialMap
    inverse_explicit: SemilinearMonomialMap
    inverse_cross_check: bool
    stages: tuple

    @property
    def ok(self) -> bool:
        return True


@dataclass(frozen=True)
class PipelineFailure:
    spec: ThetaSpec
    stage: str
    witness: object
    stages: tuple

    @property
    def ok(self) -> bool:
        return False


def run_pipeline(spec: ThetaSpec) -> Union[PipelineCertificate, PipelineFailure]:
    """Execute every stage in order, stopping at the first failure.

    Stage order: cocycle construction and verification, the two descent
    checks, the beta chain, the commuting square, the lattice certificate,
    the telescoping inverse, and the cross-check of the two inverses.
    """
    stages = []
    state = {}

    def stage(name, fn):
        start = time.perf_counter()
        passed, witness = fn()
        millis = (time.perf_counter() - start) * 1000.0
        stages.append(StageRecord(name, passed, millis))
        return passed, witness

    def failure(name, witness):
        return PipelineFailure(spec, name, witness, tuple(stages))

    def s_build():
        state["alpha"] = spec.standard_cocycle()
        return True, None

    def s_cocycle():
        result = check_2cocycle(state["alpha"])
        return result.ok, result.witness

    def s_maps():
        state["phi1"] = galois_generator_map(state["alpha"])
        state["psi1"] = galois_generator_map(state["alpha"], power=spec.ell)
        return True, None

    def s_descent_phi():
        result = descent_cocycle_check(state["phi1"])
        return result.ok and result.scalar == spec.gamma, result

    def s_descent_psi():
        result = descent_cocycle_check(state["psi1"])
        return result.ok and result.scalar == spec.gamma ** spec.ell, result

    def s_beta():
        try:
            state["beta"] = solve_beta(spec)
        except BetaInconsistencyError as err:
            return False, err.residual
        return True, None

    def s_diagram():
        verdict = verify_diagram(spec, state["beta"])
        state["diagram"] = verdict
        return verdict.ok, verdict.mismatch

    def s_lattice():
        state["theta1"] = build_theta1(spec.s, spec.ell, spec.sigma)
        cert = lattice_certificate(state["theta1"])
        state["lattice"] = cert
        return cert.birational, cert.determinant

    def s_explicit():
        state["inverse_explicit"] = invert_theta1_explicit(
            spec.s, spec.ell, spec.sigma)
        return True, None

    def s_cross_check():
        state["inverse_lattice"] = invert_on_torus(
            state["theta1"], state["lattice"])
        witness = projectively_equal(
            state["inverse_explicit"], state["inverse_lattice"], "torus")
        return witness.equal, witness.mismatch

    plan = [
        ("standard_cocycle", s_build),
        ("cocycle_check", s_cocycle),
        ("generator_maps", s_maps),
        ("descent_check_phi", s_descent_phi),
        ("descent_check_psi", s_descent_psi),
        ("solve_beta", s_beta),
        ("verify_diagram", s_diagram),
        ("lattice_certificate", s_lattice),
        ("explicit_inverse", s_explicit),
        ("inverse_cross_check", s_cross_check),
    ]
    for name, fn in plan:
        passed, witness = stage(name, fn)
        if not passed:
            return failure(name, witness)
    return PipelineCertificate(
        spec=spec,
        beta=state["beta"],
        diagram=state["diagram"],
        lattice=state["lattice"],
        inverse_lattice=state["inverse_lattice"],
        inverse_explicit=state["inverse_explicit"],
        inverse_cross_check=True,
        stages=tuple(stages),
    )


def _scalar_literal(value) -> str:
    if isinstance(value, CyclotomicElement):
        rational = value.rational_value()
        return str(rational) if rational is not None else repr(value)
    return repr(value)


def _spec_dict(spec: ThetaSpec) -> dict:
    out = {"s": spec.s, "ell": spec.ell, "backend": spec.backend,
           "gamma": spec.gamma_literal}
    if spec.backend == "cyclotomic":
        out["conductor"] = spec.conductor
        out["generator"] = spec.generator
    return out


def certificate_dict(cert: PipelineCertificate) -> dict:
    """JSON-shaped serialization of a passing run."""
    return {
        "spec": _spec_dict(cert.spec),
        "beta": list(cert.beta.gamma_exponents),
        "k": cert.beta.k,
        "m": cert.beta.m,
        "diagram": {
            "verdict": cert.diagram.ok,
            "lambda": _scalar_literal(cert.diagram.ratio),
        },
        "lattice": {
            "det": cert.lattice.determinant,
            "verdict": "birational" if cert.lattice.birational else "degenerate",
        },
        "inverse_cross_check": cert.inverse_cross_check,
        "stages": [[r.name, r.passed, round(r.millis, 3)] for r in cert.stages],
    }


def failure_dict(report: PipelineFailure) -> dict:
    return {
        "spec": _spec_dict(report.spec),
        "failed_stage": report.stage,
        "witness": repr(report.witness),
        "stages": [[r.name, r.passed, round(r.millis, 3)] for r in report.stages],
    }


def spec_from_dict(data: dict) -> ThetaSpec:
    backend = data.get("backend", "symbolic")
    gamma = data.get("gamma", "gamma")
    if backend == "symbolic":
        return symbolic_spec(data["s"], data["ell"],
                             None if gamma == "gamma" else Fraction(gamma))
    if backend == "cyclotomic":
        return cyclotomic_spec(data["s"], data["ell"], data["conductor"],
                               data["generator"], Fraction(gamma))
    raise ValueError(f"unknown backend {backend!r}")


def validate_certificate(data: dict) -> bool:
    """Re-run the pipeline for the certificate's spec and compare every
    verdict field; timings are ignored."""
    result = run_pipeline(spec_from_dict(data["spec"]))
    if not result.ok:
        return False
    fresh = certificate_dict(result)
    for key in ("spec", "beta", "k", "m", "diagram", "lattice",
                "inverse_cross_check"):
        if fresh[key] != data[key]:
            return False
    if [r[:2] for r in fresh["stages"]] != [r[:2] for r in data["stages"]]:
        return False
    return True


def write_certificate(result, path: str) -> dict:
    data = certificate_dict(result) if result.ok else failure_dict(result)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(data, handle, indent=2)
        handle.write("\n")
    return data
