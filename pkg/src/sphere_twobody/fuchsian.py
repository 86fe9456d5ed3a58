"""Fuchsian structure of the radial equation and its Heun normal form.

The Coulomb equation has regular singular points {0, i, -i, oo} in the
stereographic radius; the oscillator has {0, 1, -1, i, -i, oo}, collapsing
to four points in zeta = r^2.  A Mobius map sends the four relevant points
to {0, 1, 2, oo}; peeling one exponent at each finite point leaves a Heun
equation whose parameters come out in closed form.  The accessory parameter
can be probed independently from the ODE coefficients by a residue limit at
t = 0, which is how the closed form is cross-checked.

When the radial coefficients satisfy a = c the Heun equation degenerates to
a hypergeometric one under the quadratic pullback z = t(2 - t); this is the
first entry of the classical table of quadratic Heun-to-hypergeometric
reductions, and `maier_classify` locates a given parameter set in that
table (or reports that none applies).
"""

import cmath
import math
from dataclasses import dataclass

from .errors import ValidationError, VerificationError
from .radial import KIND_COULOMB, KIND_OSCILLATOR, _check_compatible, _check_kind

__all__ = [
    "INFINITY",
    "SingularPoint",
    "FuchsianEq",
    "coulomb_exponents",
    "oscillator_exponents",
    "oscillator_zeta_exponents",
    "cross_ratio",
    "cross_ratio_orbit",
    "cross_ratio_classify",
    "HeunParams",
    "HeunReduction",
    "to_heun",
    "accessory_parameter_probe",
    "MaierMatch",
    "maier_classify",
    "HypergeomParams",
    "reduce_case1",
    "case1_pullback_residual",
    "psymbol",
]


class _Infinity:
    """Sentinel for the point at infinity."""

    __slots__ = ()

    def __repr__(self):
        return "oo"


INFINITY = _Infinity()


def _fmtc(x, nd=6):
    x = complex(x)
    if abs(x.imag) <= 1e-12 * max(1.0, abs(x.real)):
        return f"{x.real:.{nd}g}"
    return f"{x.real:.{nd}g}{x.imag:+.{nd}g}i"


@dataclass(frozen=True)
class SingularPoint:
    location: object  # complex or INFINITY
    exponents: tuple  # (rho_plus, rho_minus)


@dataclass(frozen=True)
class FuchsianEq:
    """Second-order equation with regular singular points only."""

    points: tuple

    def __post_init__(self):
        finite = [p.location for p in self.points if p.location is not INFINITY]
        for i, z in enumerate(finite):
            for w in finite[i + 1:]:
                if abs(complex(z) - complex(w)) < 1e-12:
                    raise ValidationError(f"coincident singular points at {z}")
        res = self.fuchs_residual()
        if abs(res) > 1e-8:
            raise ValidationError(
                f"exponent sums violate the Fuchs relation by {abs(res):.3e}"
            )

    @property
    def n_points(self):
        return len(self.points)

    def fuchs_sum(self):
        return sum(complex(e) for p in self.points for e in p.exponents)

    def fuchs_residual(self):
        """fuchs_sum minus (number of points - 2); zero for any Fuchsian eq."""
        return self.fuchs_sum() - (self.n_points - 2)

    def exponents_at(self, location):
        for p in self.points:
            if p.location is INFINITY and location is INFINITY:
                return p.exponents
            if p.location is not INFINITY and location is not INFINITY:
                if abs(complex(p.location) - complex(location)) < 1e-12:
                    return p.exponents
        raise ValidationError(f"no singular point at {location}")


def psymbol(eq):
    """Riemann-style exponent table, one column per singular point."""
    locs = [repr(p.location) if p.location is INFINITY else _fmtc(p.location)
            for p in eq.points]
    top = [_fmtc(p.exponents[0]) for p in eq.points]
    bot = [_fmtc(p.exponents[1]) for p in eq.points]
    width = [max(len(a), len(b), len(c)) for a, b, c in zip(locs, top, bot)]
    rows = [
        "  ".join(s.rjust(w) for s, w in zip(locs, width)),
        "  ".join(s.rjust(w) for s, w in zip(top, width)),
        "  ".join(s.rjust(w) for s, w in zip(bot, width)),
    ]
    return "P {\n  " + "\n  ".join(rows) + "\n}"


def _sqrtc(x):
    return cmath.sqrt(complex(x))


def _endpoint_exponents(n, coeff):
    """Exponent pair (1/2)(2 - n +- sqrt((n-2)^2 + 32 coeff)) used at 0 and oo."""
    s = _sqrtc((n - 2) ** 2 + 32.0 * coeff)
    return ((2.0 - n + s) / 2.0, (2.0 - n - s) / 2.0)


def coulomb_exponents(params, coeffs, energy):
    """Indicial exponents of the Coulomb radial equation at {0, i, -i, oo}."""
    _check_compatible(params, coeffs)
    n, m, R, g = params.n, params.reduced_mass, params.radius, params.coupling
    a, b, c = float(coeffs.a), float(coeffs.b), float(coeffs.c)
    rho0 = _endpoint_exponents(n, a)
    rhoinf = _endpoint_exponents(n, c)

    def at_pole(sign):
        s = _sqrtc((n - 1) ** 2 + 8.0 * (m * energy * R * R - sign * 1j * m * R * g + a - b + c))
        return ((n - 1 + s) / 2.0, (n - 1 - s) / 2.0)

    return FuchsianEq((
        SingularPoint(0.0, rho0),
        SingularPoint(1j, at_pole(+1)),
        SingularPoint(-1j, at_pole(-1)),
        SingularPoint(INFINITY, rhoinf),
    ))


def _oscillator_pieces(params, coeffs, energy):
    n, m, R, w = params.n, params.reduced_mass, params.radius, params.coupling
    a, b, c = float(coeffs.a), float(coeffs.b), float(coeffs.c)
    rho0 = _endpoint_exponents(n, a)
    rhoinf = _endpoint_exponents(n, c)
    s1 = _sqrtc(1.0 + 4.0 * R ** 4 * m * w * w)
    rho1 = ((1.0 + s1) / 2.0, (1.0 - s1) / 2.0)
    si = _sqrtc(
        (n - 1) ** 2 + 8.0 * m * energy * R * R + 4.0 * m * R ** 4 * w * w
        + 8.0 * (a - b + c)
    )
    rhoi = ((n - 1 + si) / 2.0, (n - 1 - si) / 2.0)
    return rho0, rho1, rhoi, rhoinf


def oscillator_exponents(params, coeffs, energy):
    """Indicial exponents of the oscillator equation at {0, +-1, +-i, oo}."""
    _check_compatible(params, coeffs)
    rho0, rho1, rhoi, rhoinf = _oscillator_pieces(params, coeffs, energy)
    return FuchsianEq((
        SingularPoint(0.0, rho0),
        SingularPoint(1.0, rho1),
        SingularPoint(-1.0, rho1),
        SingularPoint(1j, rhoi),
        SingularPoint(-1j, rhoi),
        SingularPoint(INFINITY, rhoinf),
    ))


def oscillator_zeta_exponents(params, coeffs, energy):
    """The same equation in zeta = r^2: four singular points."""
    _check_compatible(params, coeffs)
    rho0, rho1, rhoi, rhoinf = _oscillator_pieces(params, coeffs, energy)
    half = lambda pair: (pair[0] / 2.0, pair[1] / 2.0)
    return FuchsianEq((
        SingularPoint(0.0, half(rho0)),
        SingularPoint(1.0, rho1),
        SingularPoint(-1.0, rhoi),
        SingularPoint(INFINITY, half(rhoinf)),
    ))


def cross_ratio(z1, z2, z3, z4):
    """(z1-z3)(z2-z4) / ((z1-z4)(z2-z3)), with INFINITY handled by limits."""
    zs = [z1, z2, z3, z4]
    inf_at = [i for i, z in enumerate(zs) if z is INFINITY]
    if len(inf_at) > 1:
        raise ValidationError("cross ratio needs distinct points")
    if not inf_at:
        z1, z2, z3, z4 = (complex(z) for z in zs)
        return (z1 - z3) * (z2 - z4) / ((z1 - z4) * (z2 - z3))
    i = inf_at[0]
    f = [None if j == i else complex(zs[j]) for j in range(4)]
    if i == 0:
        return (f[1] - f[3]) / (f[1] - f[2])
    if i == 1:
        return (f[0] - f[2]) / (f[0] - f[3])
    if i == 2:
        return (f[1] - f[3]) / (f[0] - f[3])
    return (f[0] - f[2]) / (f[1] - f[2])


def cross_ratio_orbit(s):
    """The six values of the cross ratio under point permutations."""
    s = complex(s)
    return (s, 1 - s, 1 / s, 1 / (1 - s), s / (s - 1), (s - 1) / s)


_HARMONIC = (-1 + 0j, 0.5 + 0j, 2 + 0j)
_EQUIANHARMONIC = (0.5 + math.sqrt(3) / 2 * 1j, 0.5 - math.sqrt(3) / 2 * 1j)


def cross_ratio_classify(s, tol=1e-10):
    """'harmonic', 'equianharmonic', 'degenerate', or 'generic'."""
    s = complex(s)
    for v in (0.0, 1.0):
        if abs(s - v) <= tol:
            return "degenerate"
    if any(abs(v - h) <= tol for v in cross_ratio_orbit(s) for h in _HARMONIC):
        return "harmonic"
    if any(abs(v - e) <= tol for v in cross_ratio_orbit(s) for e in _EQUIANHARMONIC):
        return "equianharmonic"
    return "generic"


@dataclass(frozen=True)
class HeunParams:
    """Parameters of g'' + (gamma/t + delta/(t-1) + eps/(t-d)) g'
    + (alpha beta t - q) / (t (t-1) (t-d)) g = 0."""

    d: complex
    alpha: complex
    beta: complex
    gamma: complex
    delta: complex
    epsilon: complex
    q: complex

    def __post_init__(self):
        res = self.consistency_residual()
        if abs(res) > 1e-8:
            raise ValidationError(
                f"Heun parameters violate alpha+beta+1 = gamma+delta+epsilon by {abs(res):.3e}"
            )

    def consistency_residual(self):
        return (self.alpha + self.beta + 1.0) - (self.gamma + self.delta + self.epsilon)

    def coefficient_closures(self):
        """(p, q) closures of the Heun equation itself."""
        d = self.d

        def p(t):
            return self.gamma / t + self.delta / (t - 1.0) + self.epsilon / (t - d)

        def q(t):
            return (self.alpha * self.beta * t - self.q) / (t * (t - 1.0) * (t - d))

        return p, q


@dataclass(frozen=True)
class HeunReduction:
    """Heun normal form of a radial equation, plus the raw translated ODE.

    A, B are the coefficients of f'' + A f' - B f = 0 in the Mobius variable
    before peeling; sigma holds the peeled exponents at t = 0, 1, 2.
    """

    kind: str
    heun: HeunParams
    sigma: tuple
    fuchsian: FuchsianEq
    A: object
    B: object
    t_of_r: object


def to_heun(kind, params, coeffs, energy):
    """Closed-form Heun parameters of the radial equation at given energy.

    Coulomb uses t = 2r/(r + i); the oscillator is first reduced to
    zeta = r^2 and then t = 2 zeta/(zeta + 1).  Both land the singular
    points on {0, 1, 2, oo}.
    """
    _check_kind(kind)
    _check_compatible(params, coeffs)
    n, m, R = params.n, params.reduced_mass, params.radius
    a, b, c = float(coeffs.a), float(coeffs.b), float(coeffs.c)
    E = energy

    if kind == KIND_COULOMB:
        g = params.coupling
        eq = coulomb_exponents(params, coeffs, energy)
        r0p, r0m = eq.exponents_at(0.0)
        rip, rim = eq.exponents_at(1j)
        rjp, rjm = eq.exponents_at(-1j)
        rfp, rfm = eq.exponents_at(INFINITY)
        hp = HeunParams(
            d=2.0 + 0j,
            alpha=r0p + rip + rfp + rjp,
            beta=r0p + rip + rfp + rjm,
            gamma=1.0 - r0m + r0p,
            delta=1.0 - rim + rip,
            epsilon=1.0 - rfm + rfp,
            q=(
                4.0 * r0p * rip + 2.0 * r0p * rfp - (n - 3.0) * r0p
                + (n - 1.0) * (2.0 * rip + rfp) - 4.0 * m * R * g * 1j + 16.0 * a
            ),
        )

        def A(t):
            return (n * t * t - 2.0 * n * t + 2.0 * n - 2.0) / (t * (t - 1.0) * (t - 2.0))

        def B(t):
            num = 2.0 * (
                m * (E * R * R * t * t * (t - 2.0) ** 2
                     + R * g * 1j * t * (t - 2.0) * (t * t - 2.0 * t + 2.0))
                + a * (t - 2.0) ** 4 - b * t * t * (t - 2.0) ** 2 + c * t ** 4
            )
            return num / (t * t * (t - 1.0) ** 2 * (t - 2.0) ** 2)

        return HeunReduction(
            kind, hp, (r0p, rip, rfp), eq, A, B, lambda r: 2.0 * r / (r + 1j)
        )

    w = params.coupling
    eq = oscillator_exponents(params, coeffs, energy)
    zeq = oscillator_zeta_exponents(params, coeffs, energy)
    r0p, r0m = eq.exponents_at(0.0)
    r1p, r1m = eq.exponents_at(1.0)
    rip, rim = eq.exponents_at(1j)
    rfp, rfm = eq.exponents_at(INFINITY)
    hp = HeunParams(
        d=2.0 + 0j,
        alpha=0.5 * r0p + r1p + 0.5 * rfp + rip,
        beta=0.5 * r0p + r1p + 0.5 * rfp + rim,
        gamma=1.0 + 0.5 * (r0p - r0m),
        delta=1.0 + r1p - r1m,
        epsilon=1.0 + 0.5 * (rfp - rfm),
        q=(
            -2.0 * m * R * R * E + 2.0 * b + n * (r1p + 0.25 * rfp)
            + 2.0 * r0p * r1p + 0.5 * r0p * rfp + 0.25 * n * r0p
        ),
    )
    mR2 = m * R * R
    R4w2 = R ** 4 * w * w

    def A(t):
        return n * (t - 1.0) / (t * (t - 2.0))

    def B(t):
        return (2.0 / (t * (t - 2.0))) * (
            mR2 * (E + R * R * w * w * t * (t - 2.0) / (2.0 * (t - 1.0) ** 2))
            - 2.0 * a / t + a - b + c * t / (t - 2.0)
        )

    return HeunReduction(
        kind, hp, (0.5 * r0p, r1p, 0.5 * rfp), zeq, A, B,
        lambda r: 2.0 * r * r / (r * r + 1.0),
    )


def accessory_parameter_probe(reduction, t0=1e-6):
    """Recover the accessory parameter from the raw ODE by a residue limit.

    Independent of the closed-form q: evaluates the peeled equation's
    t -> 0 residue numerically with one Richardson step; accurate to about
    1e-8 for the default t0.
    """
    A, B = reduction.A, reduction.B
    s0, s1, s2 = reduction.sigma

    def g(t):
        S = s0 / t + s1 / (t - 1.0) + s2 / (t - 2.0)
        bracket = (
            -B(t) + S * A(t) + s0 * (s0 - 1.0) / (t * t)
            + 2.0 * s0 * s1 / (t * (t - 1.0)) + 2.0 * s0 * s2 / (t * (t - 2.0))
        )
        return t * bracket

    return -2.0 * (2.0 * g(t0 / 2.0) - g(t0))


# Quadratic and higher reductions of Heun to hypergeometric exist only for
# isolated parameter sets; each row is (canonical d, q/(alpha beta), local
# parameter constraints at the canonical position).
def _case1_constraints(hp):
    return {"gamma = epsilon": hp.gamma - hp.epsilon}


def _case2_constraints(hp):
    return {"gamma = 1/2": hp.gamma - 0.5, "2 eps - delta = 1": 2.0 * hp.epsilon - hp.delta - 1.0}


def _case3_constraints(hp):
    return {"gamma = delta": hp.gamma - hp.delta, "delta = epsilon": hp.delta - hp.epsilon}


def _case4_constraints(hp):
    return {
        "gamma = 1/2": hp.gamma - 0.5,
        "delta = 1/2": hp.delta - 0.5,
        "epsilon = 2/3": hp.epsilon - 2.0 / 3.0,
    }


def _case5_constraints(hp):
    return {
        "gamma = 2/3": hp.gamma - 2.0 / 3.0,
        "delta = 2/3": hp.delta - 2.0 / 3.0,
        "epsilon = 1/2": hp.epsilon - 0.5,
    }


_MAIER_TABLE = (
    (1, 2.0 + 0j, 1.0 + 0j, _case1_constraints),
    (2, 4.0 + 0j, 1.0 + 0j, _case2_constraints),
    (3, 0.5 + math.sqrt(3) / 2 * 1j, 0.5 + math.sqrt(3) / 6 * 1j, _case3_constraints),
    (4, 0.5 + 5 * math.sqrt(2) / 4 * 1j, 0.5 + math.sqrt(2) / 4 * 1j, _case4_constraints),
    (5, 0.5 + 11 * math.sqrt(15) / 90 * 1j, 0.5 + math.sqrt(15) / 18 * 1j, _case5_constraints),
)


@dataclass(frozen=True)
class MaierMatch:
    """A Heun parameter set landed on a row of the reduction table."""

    case_id: int
    d_canonical: complex
    affine: tuple  # (a, b) with u = a t + b moving d onto d_canonical
    normalized: HeunParams
    residuals: dict


def _affine_variants(hp):
    """All relabelings u = a t + b of {0, 1, d} keeping oo fixed."""
    d = complex(hp.d)
    # (P_alpha, P_beta, P_other) with attached exponent parameters.
    pts = ((0.0 + 0j, hp.gamma), (1.0 + 0j, hp.delta), (d, hp.epsilon))
    out = []
    for ia in range(3):
        for ib in range(3):
            if ib == ia:
                continue
            ic = 3 - ia - ib
            (Pa, ga), (Pb, gb), (Pc, gc) = pts[ia], pts[ib], pts[ic]
            a = 1.0 / (Pb - Pa)
            bshift = -Pa / (Pb - Pa)
            d_new = (Pc - Pa) / (Pb - Pa)
            q_new = a * hp.q + bshift * hp.alpha * hp.beta
            out.append(((a, bshift), d_new, ga, gb, gc, q_new))
    return out


def maier_classify(hp, tol=1e-10):
    """Locate hp in the hypergeometric-reduction table; None if absent.

    Raises VerificationError when both q and alpha*beta vanish, since the
    multiplicative constraints are then vacuous and the equation is
    degenerate rather than genuinely reducible.
    """
    ab = hp.alpha * hp.beta
    scale = max(abs(ab), abs(hp.q), 1.0)
    if abs(ab) <= tol * scale and abs(hp.q) <= tol * scale:
        raise VerificationError(
            "degenerate Heun equation: q and alpha*beta both vanish, "
            "reduction table does not apply"
        )
    for case_id, d0, ratio, constraints in _MAIER_TABLE:
        for (aa, bb), d_new, ga, gb, gc, q_new in _affine_variants(hp):
            if abs(d_new - d0) > tol:
                continue
            cand = HeunParams(d0, hp.alpha, hp.beta, ga, gb, gc, q_new)
            resid = dict(constraints(cand))
            resid["q = ratio * alpha beta"] = q_new - ratio * ab
            if all(abs(v) <= tol * scale for v in resid.values()):
                return MaierMatch(case_id, d0, (aa, bb), cand, resid)
    return None


@dataclass(frozen=True)
class HypergeomParams:
    """2F1 parameters of the pulled-back equation F(alpha, beta; gamma; z)."""

    alpha: complex
    beta: complex
    gamma: complex

    @staticmethod
    def z_of_t(t):
        return t * (2.0 - t)


def reduce_case1(hp, tol=1e-10):
    """Degenerate a symmetric Heun equation via z = t(2 - t).

    Needs d = 2, q = alpha beta, gamma = epsilon; the solution becomes
    2F1(alpha/2, beta/2; gamma; t(2 - t)).
    """
    ab = hp.alpha * hp.beta
    scale = max(abs(ab), abs(hp.q), 1.0)
    checks = {
        "d = 2": abs(complex(hp.d) - 2.0),
        "q = alpha beta": abs(hp.q - ab) / scale,
        "gamma = epsilon": abs(hp.gamma - hp.epsilon),
    }
    bad = {k: v for k, v in checks.items() if v > tol}
    if bad:
        raise ValidationError(f"not a symmetric (case 1) Heun equation: {bad}")
    return HypergeomParams(hp.alpha / 2.0, hp.beta / 2.0, hp.gamma)


def case1_pullback_residual(hp, ts=(0.3, 0.85, 1.4 + 0.2j, 0.6 - 0.3j)):
    """Max deviation between the Heun coefficients and the pullback of the
    hypergeometric equation under z = t(2 - t); zero in exact arithmetic."""
    hyp = reduce_case1(hp)
    al, be, ga = hyp.alpha, hyp.beta, hyp.gamma
    pH, qH = hp.coefficient_closures()
    worst = 0.0
    for t in ts:
        t = complex(t)
        z = t * (2.0 - t)
        dphi = 2.0 * (1.0 - t)
        if min(abs(z), abs(1.0 - z), abs(dphi)) < 1e-6:
            raise ValidationError(f"sample point t={t} sits on a pullback singularity")
        p_pb = 2.0 / dphi + dphi * (ga - (al + be + 1.0) * z) / (z * (1.0 - z))
        q_pb = -al * be * dphi * dphi / (z * (1.0 - z))
        worst = max(worst, abs(p_pb - pH(t)), abs(q_pb - qH(t)))
    return worst
