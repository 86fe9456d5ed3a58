"""Closed-form energy levels and radial eigenfunctions.

For coefficient triples with a = c both potentials quantize explicitly:

    Coulomb    (k >= 1):  E_k = (  (k^2 - k + 1)/2 - n/4 + 2a + b
                                 + (2k - 1) A / 4 ) / (m R^2)
                                 - 2 m gamma^2 / (A + 2k - 1)^2,
    oscillator (k >= 0):  E_k = (T^2 - (n-1)^2 - 16 a + 8 b + 1) / (8 m R^2)
                                 + T W / (4 m R^2),

with A = sqrt((n-2)^2 + 32 a), W = sqrt(1 + 4 m R^4 omega^2) and
T = 4k + 2 + A.  Each level's eigenfunction is an elementary prefactor
times a terminating hypergeometric sum; the `branch_check` flag on a level
records that the quantization condition holds on the stated square-root
branch, that the opposite branch reproduces it through the reflection
parameter, and that the explicit sum matches an independent 2F1 evaluation.

Asymmetric triples (a != c) admit no such closed form; `spectrum` then
returns an empty, `numeric_only` report and the shooting oracle is the way
to get numbers.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .hyperfun import gauss_2f1, pochhammer
from .jets import Jet
from .liealg import weyl_dim
from .radial import (
    KIND_COULOMB,
    KIND_OSCILLATOR,
    _check_compatible,
    _check_kind,
    spectral_ode,
)

__all__ = [
    "EnergyLevel",
    "SpectrumReport",
    "coulomb_energy",
    "oscillator_energy",
    "closed_form_energy",
    "branch_residuals",
    "RadialEigenfunction",
    "radial_eigenfunction",
    "spectrum",
]

_BRANCH_TOL = 1e-10


def _require_symmetric(coeffs):
    if not coeffs.symmetric:
        raise ValidationError(
            f"case {coeffs.case_id} has a != c: no closed-form spectrum, "
            "use the shooting oracle"
        )


def _check_k(kind, k):
    kmin = 1 if kind == KIND_COULOMB else 0
    if not (isinstance(k, int) and k >= kmin):
        raise ValidationError(f"{kind} levels are indexed by integer k >= {kmin}, got {k}")


def coulomb_energy(params, coeffs, k):
    """k-th Coulomb level, k = 1, 2, ...; requires a = c."""
    _check_compatible(params, coeffs)
    _require_symmetric(coeffs)
    _check_k(KIND_COULOMB, k)
    n, m, R, g = params.n, params.reduced_mass, params.radius, params.coupling
    a, b = float(coeffs.a), float(coeffs.b)
    A = math.sqrt((n - 2) ** 2 + 32.0 * a)
    return (
        0.5 * (k * k - k + 1) - n / 4.0 + 2.0 * a + b + (2 * k - 1) / 4.0 * A
    ) / (m * R * R) - 2.0 * m * g * g / (A + 2 * k - 1) ** 2


def oscillator_energy(params, coeffs, k):
    """k-th oscillator level, k = 0, 1, ...; requires a = c."""
    _check_compatible(params, coeffs)
    _require_symmetric(coeffs)
    _check_k(KIND_OSCILLATOR, k)
    n, m, R, w = params.n, params.reduced_mass, params.radius, params.coupling
    a, b = float(coeffs.a), float(coeffs.b)
    A = math.sqrt((n - 2) ** 2 + 32.0 * a)
    W = math.sqrt(1.0 + 4.0 * m * R ** 4 * w * w)
    T = 4 * k + 2 + A
    return (T * T - (n - 1) ** 2 - 16.0 * a + 8.0 * b + 1.0) / (8.0 * m * R * R) + (
        T * W / (4.0 * m * R * R)
    )


def closed_form_energy(kind, params, coeffs, k):
    _check_kind(kind)
    if kind == KIND_COULOMB:
        return coulomb_energy(params, coeffs, k)
    return oscillator_energy(params, coeffs, k)


def _coulomb_data(params, coeffs, k, energy):
    n, m, R, g = params.n, params.reduced_mass, params.radius, params.coupling
    a, b = float(coeffs.a), float(coeffs.b)
    A = math.sqrt((n - 2) ** 2 + 32.0 * a)
    u = cmath.sqrt((n - 1) ** 2 + 8.0 * (m * energy * R * R + 1j * m * R * g + 2.0 * a - b))
    gam = 1.0 + A
    # quantized branch: alpha = 1 - k; the principal branch carries the
    # reflection gam - alpha instead
    alpha = (1.0 + A) / 2.0 - u.real / 2.0
    beta = (1.0 + A) / 2.0 + 0.5j * u.imag
    rho0 = (2.0 - n + A) / 2.0
    rho_i = ((n - 1) - u.conjugate()) / 2.0
    return A, u, alpha, beta, gam, rho0, rho_i


def _oscillator_data(params, coeffs, k, energy):
    n, m, R, w = params.n, params.reduced_mass, params.radius, params.coupling
    a, b = float(coeffs.a), float(coeffs.b)
    A = math.sqrt((n - 2) ** 2 + 32.0 * a)
    W = math.sqrt(1.0 + 4.0 * m * R ** 4 * w * w)
    s = cmath.sqrt(
        (n - 1) ** 2 + 8.0 * m * energy * R * R + 4.0 * m * R ** 4 * w * w
        + 16.0 * a - 8.0 * b
    )
    gam = 1.0 + A / 2.0
    alpha = (2.0 + A + W + s) / 4.0
    beta = (2.0 + A + W - s) / 4.0
    rho0 = (2.0 - n + A) / 2.0
    rho1 = (1.0 + W) / 2.0
    return A, W, s, alpha, beta, gam, rho0, rho1


def branch_residuals(kind, params, coeffs, k, energy=None):
    """Quantization residuals on both square-root branches, plus Im E.

    Flipping the branch of the indicial square root exchanges the 2F1
    parameter with its reflection gamma - parameter, so the termination
    condition must hold once on each side; both residuals and the imaginary
    part of the energy vanish at a genuine level.
    """
    _check_kind(kind)
    _require_symmetric(coeffs)
    if energy is None:
        energy = closed_form_energy(kind, params, coeffs, k)
    if kind == KIND_COULOMB:
        A, u, alpha, beta, gam, _, _ = _coulomb_data(params, coeffs, k, energy)
        stated = abs(alpha - (1 - k))
        # on the principal branch the condition lands on gamma - alpha
        reflected = abs((gam - ((1.0 + A) / 2.0 + u.real / 2.0)) - (1 - k))
    else:
        A, W, s, alpha, beta, gam, _, _ = _oscillator_data(params, coeffs, k, energy)
        stated = abs(beta + k)
        # under s -> -s the termination condition lands on alpha instead
        reflected = abs((2.0 + A + W + (-s)) / 4.0 + k)
    return {
        "stated_branch": stated,
        "reflected_branch": reflected,
        "imag_energy": abs(complex(energy).imag),
    }


@dataclass(frozen=True)
class RadialEigenfunction:
    """Closed-form radial eigenfunction, evaluable with derivatives.

    Coulomb lives on r in (0, oo), oscillator on (0, 1).  Values are
    complex in general (the prefactor exponents are complex for Coulomb);
    the physical density is |f|^2.
    """

    kind: str
    params: object
    coeffs: object
    k: int
    energy: float
    _data: tuple

    def _evaluate(self, r):
        if self.kind == KIND_COULOMB:
            A, u, alpha, beta, gam, rho0, rho_i = self._data
            pre = r ** rho0 * (r - 1j) ** rho_i * (r + 1j) ** (-(2.0 * rho0 + rho_i))
            s = 0.0
            for j in range(self.k):
                cj = (-1) ** j / (math.factorial(j) * math.factorial(self.k - 1 - j))
                cj *= pochhammer(beta, j) / pochhammer(gam, j)
                s = s + cj * (4j * r) ** j / (r + 1j) ** (2 * j)
            return pre * s
        A, W, s_, alpha, beta, gam, rho0, rho1 = self._data
        pre = r ** rho0 * (1.0 - r * r) ** rho1 * (r * r + 1.0) ** (-(rho0 + rho1))
        s = 0.0
        for j in range(self.k + 1):
            cj = (-1) ** j / (math.factorial(j) * math.factorial(self.k - j))
            cj *= pochhammer(alpha, j) / pochhammer(gam, j)
            s = s + cj * 4.0 ** j * r ** (2 * j) / (r * r + 1.0) ** (2 * j)
        return pre * s

    def __call__(self, r):
        return self._evaluate(complex(r))

    def jet(self, r):
        """(f, f', f'') at real r."""
        out = self._evaluate(Jet.variable(r))
        return out.f, out.df, out.d2f

    def hypergeometric_value(self, r):
        """Independent evaluation routing the sum through gauss_2f1."""
        if self.kind == KIND_COULOMB:
            A, u, alpha, beta, gam, rho0, rho_i = self._data
            pre = r ** rho0 * (r - 1j) ** rho_i * (r + 1j) ** (-(2.0 * rho0 + rho_i))
            z = 4j * r / (r + 1j) ** 2
            return pre * gauss_2f1(alpha, beta, gam, z) / math.factorial(self.k - 1)
        A, W, s_, alpha, beta, gam, rho0, rho1 = self._data
        pre = r ** rho0 * (1.0 - r * r) ** rho1 * (r * r + 1.0) ** (-(rho0 + rho1))
        z = 4.0 * r * r / (r * r + 1.0) ** 2
        return pre * gauss_2f1(alpha, beta, gam, z) / math.factorial(self.k)

    def ode_residual(self, r):
        """f'' + p f' + q f at real r, scaled by the local solution size."""
        p, q = spectral_ode(self.kind, self.params, self.coeffs, self.energy)
        f, df, d2f = self.jet(r)
        scale = max(abs(f), abs(df), abs(d2f), 1.0)
        return abs(d2f + p(r) * df + q(r) * f) / scale

    def norm_squared(self, nodes=240):
        """integral of |f|^2 against the volume weight r^(n-1)/(1+r^2)^n.

        Gauss-Legendre after mapping the domain: the half-angle substitution
        r = tan(theta/2) for Coulomb, affine for the oscillator.
        """
        n = self.params.n
        x, w = np.polynomial.legendre.leggauss(nodes)
        if self.kind == KIND_COULOMB:
            theta = (x + 1.0) * (math.pi / 2.0)
            r = np.tan(theta / 2.0)
            jac = (math.pi / 2.0) * (1.0 + r * r) / 2.0
        else:
            r = (x + 1.0) / 2.0
            jac = np.full_like(r, 0.5)
        total = 0.0
        for ri, wi, ji in zip(r, w, jac):
            fi = self._evaluate(complex(ri))
            total += wi * ji * abs(fi) ** 2 * ri ** (n - 1) / (1.0 + ri * ri) ** n
        return total


def radial_eigenfunction(kind, params, coeffs, k, energy=None):
    _check_kind(kind)
    _check_compatible(params, coeffs)
    _require_symmetric(coeffs)
    _check_k(kind, k)
    if energy is None:
        energy = closed_form_energy(kind, params, coeffs, k)
    if kind == KIND_COULOMB:
        data = _coulomb_data(params, coeffs, k, energy)
    else:
        data = _oscillator_data(params, coeffs, k, energy)
    return RadialEigenfunction(kind, params, coeffs, k, energy, data)


@dataclass(frozen=True)
class EnergyLevel:
    k: int
    energy: float
    multiplicity: int
    branch_check: bool


@dataclass(frozen=True)
class SpectrumReport:
    kind: str
    params: object
    coeffs: object
    levels: tuple
    numeric_only: bool

    def to_dict(self):
        """JSON-ready dict with stable field order."""
        co = self.coeffs
        return {
            "kind": self.kind,
            "n": self.params.n,
            "case": co.case_id,
            "mk": co.carrier.coeffs[-1],
            "m1": self.params.m1,
            "m2": self.params.m2,
            "radius": self.params.radius,
            "coupling": self.params.coupling,
            "a": str(co.a),
            "b": str(co.b),
            "c": str(co.c),
            "mass_mode": co.mass_mode,
            "numeric_only": self.numeric_only,
            "levels": [
                {
                    "k": lv.k,
                    "E": lv.energy,
                    "multiplicity": lv.multiplicity,
                    "verified": lv.branch_check,
                }
                for lv in self.levels
            ],
        }


def _sample_radius(kind):
    return 0.7 if kind == KIND_COULOMB else 0.45


def spectrum(kind, params, coeffs, k_min, k_max):
    """Energy levels k_min..k_max with multiplicities and branch checks.

    Returns a numeric_only report with no levels when a != c (closed form
    unavailable); callers wanting numbers there should shoot for them.
    """
    _check_kind(kind)
    _check_compatible(params, coeffs)
    if not (isinstance(k_min, int) and isinstance(k_max, int) and k_min <= k_max):
        raise ValidationError(f"need integer k_min <= k_max, got {k_min}..{k_max}")
    _check_k(kind, k_min)
    if not coeffs.symmetric:
        return SpectrumReport(kind, params, coeffs, (), True)
    mult = weyl_dim(coeffs.carrier.algebra, coeffs.carrier)
    levels = []
    r0 = _sample_radius(kind)
    for k in range(k_min, k_max + 1):
        E = closed_form_energy(kind, params, coeffs, k)
        res = branch_residuals(kind, params, coeffs, k, E)
        fn = radial_eigenfunction(kind, params, coeffs, k, E)
        direct, via_2f1 = fn(r0), fn.hypergeometric_value(r0)
        match = abs(direct - via_2f1) / max(abs(direct), 1e-30)
        ok = (
            max(res.values()) <= _BRANCH_TOL
            and match <= _BRANCH_TOL
        )
        levels.append(EnergyLevel(k, E, mult, bool(ok)))
    return SpectrumReport(kind, params, coeffs, tuple(levels), False)
