"""Numerical oracles, independent of every closed form in the package.

Shooting integrates the radial equation from Frobenius starts at both
endpoints and roots the Wronskian mismatch at a midpoint -- no quantization
condition, no hypergeometric function enters.  The Coulomb problem is
marched in the half-angle theta = 2 arctan r so that both endpoints are at
finite coordinate; the oscillator is marched in r on (0, 1) directly.

joint_diagonalize brute-forces the common eigenvectors of a family of
matrices by intersecting eigenspace candidates with stacked SVDs.  The
family is NOT assumed commuting: by default a commutator check runs first
and a failure raises, since common eigenvectors of a noncommuting family
span only part of the space; pass require_commuting=False to search anyway
(that partial span is exactly what the invariant-operator classification
predicts, so the cross-check needs the opt-out).
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .errors import ConvergenceError, ValidationError, VerificationError
from .radial import KIND_COULOMB, KIND_OSCILLATOR, _check_compatible, _check_kind, spectral_ode

__all__ = [
    "ShootingConfig",
    "ShootingResult",
    "shooting_mismatch",
    "shooting_eigenvalue",
    "ode_residual",
    "gauss_legendre",
    "JointEigenspace",
    "joint_diagonalize",
]


@dataclass(frozen=True)
class ShootingConfig:
    eps: float = 1e-5          # offset from the singular endpoints
    rtol: float = 1e-10
    atol_scale: float = 1e-12  # atol = atol_scale * |start vector|
    scan_points: int = 8       # bracket subdivisions when hunting a sign change
    xtol: float = 1e-11        # brentq tolerance, times the energy scale
    method: str = "DOP853"


@dataclass(frozen=True)
class ShootingResult:
    energy: float
    mismatch: float
    bracket: tuple


def _march(rhs, t0, t1, y0, config):
    atol = config.atol_scale * max(abs(y0[0]), abs(y0[1]))
    sol = solve_ivp(
        rhs, (t0, t1), y0, method=config.method, rtol=config.rtol, atol=atol,
        dense_output=False, t_eval=[t1],
    )
    if not sol.success:
        raise ConvergenceError(f"integration failed: {sol.message}")
    return sol.y[0, -1], sol.y[1, -1]


def _coulomb_halves(params, coeffs, energy, config):
    n, m, R, g = params.n, params.reduced_mass, params.radius, params.coupling
    a, c = float(coeffs.a), float(coeffs.c)
    p, q = spectral_ode(KIND_COULOMB, params, coeffs, energy)

    def rhs(theta, y):
        r = math.tan(theta / 2.0)
        one = 1.0 + r * r
        P = p(r) * one / 2.0 - r
        Q = q(r) * one * one / 4.0
        return (y[1], -P * y[1] - Q * y[0])

    eps = config.eps
    # inner Frobenius start: f ~ r^rho0 (1 + c1 r)
    A0 = math.sqrt((n - 2) ** 2 + 32.0 * a)
    rho0 = (2.0 - n + A0) / 2.0
    c1 = -4.0 * m * R * g / (1.0 + A0)
    r_in = math.tan(eps / 2.0)
    f_in = r_in ** rho0 * (1.0 + c1 * r_in)
    fp_in = r_in ** (rho0 - 1.0) * (rho0 + (rho0 + 1.0) * c1 * r_in)
    y_in = (f_in, fp_in * (1.0 + r_in * r_in) / 2.0)
    half = math.pi / 2.0
    gi = _march(rhs, eps, half, y_in, config)

    # outer start via the u = 1/r reflection, which swaps a <-> c and
    # flips the sign of the coupling
    Ainf = math.sqrt((n - 2) ** 2 + 32.0 * c)
    rhoinf = (2.0 - n + Ainf) / 2.0
    d1 = 4.0 * m * R * g / (1.0 + Ainf)
    u_out = math.tan(eps / 2.0)
    g_out = u_out ** rhoinf * (1.0 + d1 * u_out)
    gp_out = u_out ** (rhoinf - 1.0) * (rhoinf + (rhoinf + 1.0) * d1 * u_out)
    y_out = (g_out, gp_out * (-(1.0 + u_out * u_out) / 2.0))
    go = _march(rhs, math.pi - eps, half, y_out, config)
    return gi, go


def _oscillator_halves(params, coeffs, energy, config):
    n = params.n
    m, R, w = params.reduced_mass, params.radius, params.coupling
    a = float(coeffs.a)
    p, q = spectral_ode(KIND_OSCILLATOR, params, coeffs, energy)

    def rhs(r, y):
        return (y[1], -p(r) * y[1] - q(r) * y[0])

    eps = config.eps
    A0 = math.sqrt((n - 2) ** 2 + 32.0 * a)
    rho0 = (2.0 - n + A0) / 2.0
    y_in = (eps ** rho0, rho0 * eps ** (rho0 - 1.0))
    mid = 0.5
    gi = _march(rhs, eps, mid, y_in, config)

    W = math.sqrt(1.0 + 4.0 * m * R ** 4 * w * w)
    sig = (1.0 + W) / 2.0
    x = eps  # distance from r = 1
    f_out = x ** sig * (1.0 + sig * x / 2.0)
    fp_out = -(sig * x ** (sig - 1.0) * (1.0 + sig * x / 2.0) + x ** sig * sig / 2.0)
    go = _march(rhs, 1.0 - eps, mid, (f_out, fp_out), config)
    return gi, go


def shooting_mismatch(kind, params, coeffs, energy, config=None):
    """Scaled Wronskian of the two half-solutions at the matching point.

    Zero exactly at eigenvalues; smooth and sign-changing across them.
    """
    _check_kind(kind)
    _check_compatible(params, coeffs)
    config = config or ShootingConfig()
    halves = _coulomb_halves if kind == KIND_COULOMB else _oscillator_halves
    (fi, fpi), (fo, fpo) = halves(params, coeffs, energy, config)
    wron = fi * fpo - fpi * fo
    scale = abs(fi * fpo) + abs(fpi * fo) + 1e-300
    return wron / scale


def shooting_eigenvalue(kind, params, coeffs, e_lo, e_hi, config=None):
    """Locate one eigenvalue inside [e_lo, e_hi] by bisection of the mismatch.

    Scans scan_points subintervals for a sign change, then polishes with
    brentq.  Raises ConvergenceError when the bracket contains none.
    """
    if not e_lo < e_hi:
        raise ValidationError(f"empty energy bracket [{e_lo}, {e_hi}]")
    config = config or ShootingConfig()

    def w(E):
        return shooting_mismatch(kind, params, coeffs, E, config)

    grid = np.linspace(e_lo, e_hi, config.scan_points + 1)
    vals = [w(E) for E in grid]
    for (Ea, wa), (Eb, wb) in zip(zip(grid, vals), zip(grid[1:], vals[1:])):
        if wa == 0.0:
            return ShootingResult(float(Ea), 0.0, (float(Ea), float(Eb)))
        if wa * wb < 0.0:
            scale = max(1.0, abs(e_lo), abs(e_hi))
            root = brentq(w, Ea, Eb, xtol=config.xtol * scale, rtol=1e-15)
            return ShootingResult(float(root), abs(w(root)), (float(Ea), float(Eb)))
    raise ConvergenceError(
        f"no {kind} eigenvalue bracketed in [{e_lo}, {e_hi}]: "
        f"mismatch keeps sign over {config.scan_points} subintervals"
    )


def ode_residual(p, q, jet_fn, rs):
    """Max scaled residual |f'' + p f' + q f| over sample points.

    jet_fn(r) must return (f, f', f''); scaling is by the local jet size.
    """
    worst = 0.0
    for r in rs:
        f, df, d2f = jet_fn(float(r))
        scale = max(abs(f), abs(df), abs(d2f), 1.0)
        worst = max(worst, abs(d2f + p(r) * df + q(r) * f) / scale)
    return worst


def gauss_legendre(a, b, nodes):
    """Nodes and weights on (a, b)."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    mid, half = (a + b) / 2.0, (b - a) / 2.0
    return mid + half * x, half * w


@dataclass(frozen=True)
class JointEigenspace:
    eigenvalues: tuple  # one per input matrix
    basis: np.ndarray   # columns span the joint eigenspace


def _eigenvalue_clusters(mat, tol):
    vals = np.linalg.eigvals(mat)
    order = np.lexsort((vals.imag, vals.real))
    clusters = []
    for v in vals[order]:
        if clusters and abs(v - clusters[-1][-1]) <= tol:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    return [complex(np.mean(c)) for c in clusters]


def joint_diagonalize(mats, require_commuting=True, tol=1e-10):
    """All joint eigenspaces of a family of square matrices.

    Returns JointEigenspace records sorted by eigenvalue tuple.  With
    require_commuting (the default) a noncommuting family raises
    VerificationError, reporting the worst commutator norm.
    """
    mats = [np.asarray(M, dtype=complex) for M in mats]
    if not mats:
        raise ValidationError("need at least one matrix")
    d = mats[0].shape[0]
    for M in mats:
        if M.shape != (d, d):
            raise ValidationError("matrices must be square and of equal size")

    worst_comm = 0.0
    for Mi, Mj in itertools.combinations(mats, 2):
        nrm = np.abs(Mi @ Mj - Mj @ Mi).max()
        worst_comm = max(worst_comm, nrm)
    scale = max(1.0, *(np.abs(M).max() for M in mats))
    if require_commuting and worst_comm > tol * scale * scale:
        raise VerificationError(
            f"family does not commute (worst commutator entry {worst_comm:.3e}); "
            "pass require_commuting=False to search for partial joint eigenspaces"
        )

    ctol = max(tol, 1e-8) * scale
    clusters = [_eigenvalue_clusters(M, ctol) for M in mats]
    out = []
    for combo in itertools.product(*clusters):
        stack = np.vstack([M - lam * np.eye(d) for M, lam in zip(mats, combo)])
        _, sv, vh = np.linalg.svd(stack)
        null_dim = int(np.sum(sv <= tol * max(1.0, sv[0] if len(sv) else 1.0)))
        if null_dim == 0:
            continue
        basis = vh.conj().T[:, d - null_dim:]
        out.append(JointEigenspace(tuple(combo), basis))
    out.sort(key=lambda js: tuple((round(v.real, 9), round(v.imag, 9)) for v in js.eigenvalues))
    return out
