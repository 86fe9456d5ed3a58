"""Radial reduction of the two-body problem on the n-sphere.

After separating off an invariant-operator eigenvector, the relative motion
collapses to a single ODE in the stereographic radius r = tan(rho / 2R),
rho the geodesic distance:

    f'' + p(r) f' + q(r) f = 0,
    p = (n - 1 + (3 - n) r^2) / ((1 + r^2) r),
    q = (8 / (1 + r^2)^2) (m R^2 (E - V) - a/r^2 - b - c r^2),

with m the reduced mass and (a, b, c) rational constants fixed by the
classification case.  The tables here are the closed forms; they coincide
with -delta2/8, -(delta0 + delta1 + delta2)/8, -delta1/8 applied to the
classified eigenvector records, which is how the tests pin them down.

Also provides the interaction potentials, the oscillator equation in
zeta = r^2, and the kinetic coefficient functions A, B, C of the two-body
Hamiltonian (B vanishes identically for equal masses).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ValidationError
from .ladder import MASS_ARBITRARY, MASS_EQUAL
from .liealg import AlgebraLabel, HighestWeight

__all__ = [
    "KIND_COULOMB",
    "KIND_OSCILLATOR",
    "PhysicalParams",
    "RadialCoefficients",
    "radial_coefficients",
    "coefficients_from_record",
    "valid_cases",
    "potential",
    "spectral_ode",
    "oscillator_zeta_form",
    "hamiltonian_ABC",
]

KIND_COULOMB = "coulomb"
KIND_OSCILLATOR = "oscillator"

_F0 = Fraction(0)


def _check_kind(kind):
    if kind not in (KIND_COULOMB, KIND_OSCILLATOR):
        raise ValidationError(f"unknown potential kind {kind!r}")


@dataclass(frozen=True)
class PhysicalParams:
    """Masses, sphere radius, and coupling (gamma or omega by context)."""

    n: int
    m1: float
    m2: float
    radius: float
    coupling: float

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 2):
            raise ValidationError(f"sphere dimension must be an integer >= 2, got {self.n}")
        for name in ("m1", "m2", "radius"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValidationError(f"{name} must be positive and finite, got {v}")
        if not math.isfinite(self.coupling):
            raise ValidationError(f"coupling must be finite, got {self.coupling}")

    @property
    def reduced_mass(self):
        return self.m1 * self.m2 / (self.m1 + self.m2)

    @property
    def equal_masses(self):
        return self.m1 == self.m2


def _symmetry_algebra(n):
    """so(n+1) as a B/D label."""
    if n % 2 == 0:
        return AlgebraLabel("B", n // 2)
    return AlgebraLabel("D", (n + 1) // 2)


@dataclass(frozen=True)
class RadialCoefficients:
    """The (a, b, c) triple of one classification case, with its carrier."""

    n: int
    case_id: int
    a: Fraction
    b: Fraction
    c: Fraction
    mass_mode: str
    carrier: HighestWeight

    @property
    def symmetric(self):
        """a == c; required for the closed-form spectrum."""
        return self.a == self.c


# n = 2 admits finitely many cases; case -> (m, a, b, c, mass mode).
_N2_TABLE = {
    1: (0, _F0, _F0, _F0, MASS_ARBITRARY),
    2: (1, Fraction(1, 8), Fraction(1, 4), Fraction(1, 8), MASS_ARBITRARY),
    3: (1, Fraction(1, 8), Fraction(1, 4), _F0, MASS_EQUAL),
    4: (1, _F0, Fraction(1, 4), Fraction(1, 8), MASS_EQUAL),
    5: (2, Fraction(1, 8), Fraction(3, 4), Fraction(1, 8), MASS_EQUAL),
    6: (2, Fraction(1, 2), Fraction(3, 4), Fraction(1, 8), MASS_EQUAL),
    7: (2, Fraction(1, 8), Fraction(3, 4), Fraction(1, 2), MASS_EQUAL),
    8: (3, Fraction(1, 2), Fraction(3, 2), Fraction(1, 2), MASS_EQUAL),
}

_CASE_MIN_MK = {1: 0, 2: 1, 3: 1, 4: 2}


def valid_cases(n):
    """Case ids available in dimension n."""
    if n == 2:
        return tuple(range(1, 9))
    return (1, 2, 3, 4)


def radial_coefficients(n, case_id, mk=None):
    """Closed-form (a, b, c) for a classification case in dimension n.

    For n = 2 the case determines the weight, so mk is optional (checked if
    supplied).  For n >= 3, mk is the last weight entry and must satisfy the
    case minimum (1 for cases 2-3, 2 for case 4).
    """
    if not (isinstance(n, int) and n >= 2):
        raise ValidationError(f"sphere dimension must be an integer >= 2, got {n}")
    if case_id not in valid_cases(n):
        raise ValidationError(f"case {case_id} does not exist for n={n}")
    alg = _symmetry_algebra(n)
    k = alg.rank

    if n == 2:
        m, a, b, c, mode = _N2_TABLE[case_id]
        if mk is not None and mk != m:
            raise ValidationError(f"n=2 case {case_id} carries m={m}, got mk={mk}")
        return RadialCoefficients(2, case_id, a, b, c, mode, HighestWeight(alg, (m,)))

    if mk is None:
        raise ValidationError("mk is required for n >= 3")
    if not (isinstance(mk, int) and mk >= _CASE_MIN_MK[case_id]):
        raise ValidationError(
            f"case {case_id} needs integer mk >= {_CASE_MIN_MK[case_id]}, got {mk}"
        )
    if alg.series == "B":
        poly = Fraction(mk * (mk + 2 * k - 2))
        qpoly = Fraction(mk * mk + 2 * (k - 2) * mk - 2 * k + 3)
    else:
        poly = Fraction(mk * (mk + 2 * k - 3))
        qpoly = Fraction(mk * mk + (2 * k - 5) * mk - 2 * k + 4)

    if case_id == 1:
        a = c = poly / 8
        b = poly / 4
        mode, mk1 = MASS_ARBITRARY, mk
    elif case_id == 2:
        a, c = poly / 8, qpoly / 8
        b = (1 + poly + qpoly) / 8
        mode, mk1 = MASS_EQUAL, mk - 1
    elif case_id == 3:
        a, c = qpoly / 8, poly / 8
        b = (1 + poly + qpoly) / 8
        mode, mk1 = MASS_EQUAL, mk - 1
    else:
        a = c = qpoly / 8
        b = (4 + 2 * qpoly) / 8
        mode, mk1 = MASS_EQUAL, mk - 2
    carrier = HighestWeight(alg, (0,) * (k - 2) + (mk1, mk))
    return RadialCoefficients(n, case_id, a, b, c, mode, carrier)


def coefficients_from_record(record):
    """Map a classified eigenvector record to its (a, b, c) triple.

    a = -delta2/8, b = -(delta0 + delta1 + delta2)/8, c = -delta1/8.
    """
    n = record.carrier.algebra.sphere_dim
    return RadialCoefficients(
        n,
        record.case_id,
        -record.delta2 / 8,
        -(record.delta0 + record.delta1 + record.delta2) / 8,
        -record.delta1 / 8,
        record.mass_mode,
        record.carrier,
    )


def potential(kind, params):
    """V(r) in the stereographic coordinate."""
    _check_kind(kind)
    R, g = params.radius, params.coupling
    if kind == KIND_COULOMB:
        return lambda r: (g / (2.0 * R)) * (r - 1.0 / r)
    return lambda r: 2.0 * R * R * g * g * r * r / (1.0 - r * r) ** 2


def _check_compatible(params, coeffs):
    if params.n != coeffs.n:
        raise ValidationError(
            f"parameters are for n={params.n} but coefficients for n={coeffs.n}"
        )
    if coeffs.mass_mode == MASS_EQUAL and not params.equal_masses:
        raise ValidationError(
            f"case {coeffs.case_id} exists only for equal masses, got "
            f"m1={params.m1}, m2={params.m2}"
        )


def spectral_ode(kind, params, coeffs, energy):
    """Coefficient closures (p, q) of f'' + p f' + q f = 0 at fixed energy."""
    _check_kind(kind)
    _check_compatible(params, coeffs)
    n = params.n
    m, R = params.reduced_mass, params.radius
    a, b, c = float(coeffs.a), float(coeffs.b), float(coeffs.c)
    V = potential(kind, params)
    mR2 = m * R * R

    def p(r):
        return (n - 1 + (3 - n) * r * r) / ((1 + r * r) * r)

    def q(r):
        r2 = r * r
        return (8.0 / (1 + r2) ** 2) * (mR2 * (energy - V(r)) - a / r2 - b - c * r2)

    return p, q


def oscillator_zeta_form(params, coeffs, energy):
    """The oscillator radial equation in zeta = r^2: closures (p, q)."""
    _check_compatible(params, coeffs)
    n = params.n
    m, R, w = params.reduced_mass, params.radius, params.coupling
    a, b, c = float(coeffs.a), float(coeffs.b), float(coeffs.c)
    mR2 = m * R * R
    R4w2 = R ** 4 * w * w

    def p(z):
        return (n + (4 - n) * z) / (2.0 * z * (z + 1))

    def q(z):
        return (2.0 / (z * (z + 1) ** 2)) * (
            mR2 * energy - 2.0 * m * R4w2 * z / (z - 1) ** 2 - a / z - b - c * z
        )

    return p, q


def hamiltonian_ABC(params, alpha=None):
    """Kinetic coefficients A, B, C of the two-body radial Hamiltonian.

    alpha in (0, 1) is the gauge split of the relative angle between the
    particles; the canonical choice m2/(m1+m2) makes the pair comoving.
    B vanishes identically iff m1 == m2 with the canonical split, and
    A + C == (1+r^2)^2 / (4 m R^2 r^2) for every split.
    """
    m1, m2, R = params.m1, params.m2, params.radius
    if alpha is None:
        alpha = m2 / (m1 + m2)
    if not 0.0 < alpha < 1.0:
        raise ValidationError(f"alpha must lie in (0, 1), got {alpha}")
    beta = 1.0 - alpha
    denom = 4.0 * m1 * m2 * R * R

    def A(r):
        t = np.arctan(r)
        pre = (1 + r * r) ** 2 / (denom * r * r)
        return pre * (m1 * np.cos(2 * alpha * t) ** 2 + m2 * np.cos(2 * beta * t) ** 2)

    def B(r):
        t = np.arctan(r)
        pre = (1 + r * r) ** 2 / (2 * denom * r * r)
        return pre * (m1 * np.sin(4 * alpha * t) - m2 * np.sin(4 * beta * t))

    def C(r):
        t = np.arctan(r)
        pre = (1 + r * r) ** 2 / (denom * r * r)
        return pre * (m1 * np.sin(2 * alpha * t) ** 2 + m2 * np.sin(2 * beta * t) ** 2)

    return A, B, C
