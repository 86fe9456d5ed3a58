"""Small square matrices over the Gaussian rationals, optionally with radicals.

A matrix stores real and imaginary parts separately. Entries are Fractions
on the fast path; entries of the form q*sqrt(rad) (q, rad rational) are
carried exactly by the Rad type, which is what the rank-1 ladder matrices
need (their entries are quarter square roots of integer products, and every
sum the structure relations produce pairs identical radicands, so addition
never has to combine unlike surds).

Matrices here are tiny (ladder size nu+1 <= 9), so plain loops with
zero-skipping are plenty.
"""

from fractions import Fraction

import numpy as np

__all__ = ["Rad", "GMat"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _square_free(n):
    """n = s*s*r with r square-free; returns (s, r). n is a positive int."""
    s, r, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            r *= p
        p += 1
    return s, r * n


class Rad:
    """Exact scalar fr * sqrt(rad), fr rational, rad square-free rational.

    Canonical: rad's numerator and denominator are square-free, so equal
    values compare equal and like terms always combine.
    """

    __slots__ = ("fr", "rad")

    def __init__(self, fr, rad=_ONE):
        fr = Fraction(fr)
        rad = Fraction(rad)
        if rad < 0:
            raise ValueError("radicand must be nonnegative")
        if not fr or not rad:
            fr, rad = fr if rad else _ZERO, _ONE
        elif rad != 1:
            sn, rn = _square_free(rad.numerator)
            sd, rd = _square_free(rad.denominator)
            fr *= Fraction(sn, sd)
            rad = Fraction(rn, rd)
        self.fr = fr
        self.rad = rad

    def __bool__(self):
        return bool(self.fr)

    def __float__(self):
        return float(self.fr) * float(self.rad) ** 0.5

    def __eq__(self, other):
        if isinstance(other, Rad):
            return self.fr == other.fr and self.rad == other.rad
        return self.rad == 1 and self.fr == other

    def __repr__(self):
        if self.rad == 1:
            return str(self.fr)
        return f"{self.fr}*sqrt({self.rad})"


def _mul(x, y):
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x * y
    xf, xr = (x.fr, x.rad) if isinstance(x, Rad) else (x, _ONE)
    yf, yr = (y.fr, y.rad) if isinstance(y, Rad) else (y, _ONE)
    return Rad(xf * yf, xr * yr)


def _add(x, y):
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x + y
    xf, xr = (x.fr, x.rad) if isinstance(x, Rad) else (x, _ONE)
    yf, yr = (y.fr, y.rad) if isinstance(y, Rad) else (y, _ONE)
    if not xf:
        return y
    if not yf:
        return x
    if xr != yr:
        # never reached by the ladder algebra: radicands always pair up
        raise ArithmeticError(f"cannot add unlike radicals sqrt({xr}), sqrt({yr})")
    return Rad(xf + yf, xr) if xr != 1 else xf + yf


def _neg(x):
    return Rad(-x.fr, x.rad) if isinstance(x, Rad) else -x


def _grid(n):
    return [[_ZERO] * n for _ in range(n)]


class GMat:
    """Square matrix with exact (rational or radical) complex entries."""

    __slots__ = ("n", "re", "im")

    def __init__(self, n, re=None, im=None):
        self.n = n
        self.re = re if re is not None else _grid(n)
        self.im = im if im is not None else _grid(n)

    @classmethod
    def zeros(cls, n):
        return cls(n)

    @classmethod
    def eye(cls, n, scale=1):
        m = cls(n)
        s = Fraction(scale)
        for i in range(n):
            m.re[i][i] = s
        return m

    @classmethod
    def diag(cls, values):
        m = cls(len(values))
        for i, v in enumerate(values):
            m.re[i][i] = v if isinstance(v, Rad) else Fraction(v)
        return m

    @classmethod
    def build(cls, n, entries):
        """entries: {(i, j): scalar | (re, im)} with scalars Fraction or Rad."""
        m = cls(n)
        for (i, j), v in entries.items():
            if isinstance(v, tuple):
                re, im = v
            else:
                re, im = v, _ZERO
            m.re[i][j] = re if isinstance(re, Rad) else Fraction(re)
            m.im[i][j] = im if isinstance(im, Rad) else Fraction(im)
        return m

    def __add__(self, other):
        n = self.n
        out = GMat(n)
        for i in range(n):
            for j in range(n):
                out.re[i][j] = _add(self.re[i][j], other.re[i][j])
                out.im[i][j] = _add(self.im[i][j], other.im[i][j])
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, re, im=0):
        """Multiply by the exact scalar re + i*im."""
        a, b = Fraction(re), Fraction(im)
        n = self.n
        out = GMat(n)
        for i in range(n):
            for j in range(n):
                x, y = self.re[i][j], self.im[i][j]
                out.re[i][j] = _add(_mul(a, x), _neg(_mul(b, y)))
                out.im[i][j] = _add(_mul(a, y), _mul(b, x))
        return out

    def __matmul__(self, other):
        n = self.n
        out = GMat(n)
        ore, oim = out.re, out.im
        for i in range(n):
            are, aim = self.re[i], self.im[i]
            for t in range(n):
                x, y = are[t], aim[t]
                if not x and not y:
                    continue
                bre, bim = other.re[t], other.im[t]
                ri, ii = ore[i], oim[i]
                for j in range(n):
                    u, v = bre[j], bim[j]
                    if u or v:
                        ri[j] = _add(ri[j], _add(_mul(x, u), _neg(_mul(y, v))))
                        ii[j] = _add(ii[j], _add(_mul(x, v), _mul(y, u)))
        return out

    def commutator(self, other):
        return self @ other - other @ self

    def anticommutator(self, other):
        return self @ other + other @ self

    def is_zero(self):
        return all(not x for row in self.re for x in row) and all(
            not x for row in self.im for x in row
        )

    def max_abs(self):
        """Float bound max |re| + |im| over entries; 0.0 iff exactly zero."""
        best = 0.0
        for i in range(self.n):
            for j in range(self.n):
                v = abs(float(self.re[i][j])) + abs(float(self.im[i][j]))
                if v > best:
                    best = v
        return best

    def apply(self, vec):
        """Multiply an exact column vector of (re, im) scalar pairs."""
        n = self.n
        out = []
        for i in range(n):
            sr = si = _ZERO
            for j in range(n):
                x, y = self.re[i][j], self.im[i][j]
                if not x and not y:
                    continue
                u, v = vec[j]
                sr = _add(sr, _add(_mul(x, u), _neg(_mul(y, v))))
                si = _add(si, _add(_mul(x, v), _mul(y, u)))
            out.append((sr, si))
        return out

    def to_numpy(self):
        a = np.zeros((self.n, self.n), dtype=complex)
        for i in range(self.n):
            for j in range(self.n):
                a[i, j] = float(self.re[i][j]) + 1j * float(self.im[i][j])
        return a

    def __eq__(self, other):
        if not isinstance(other, GMat) or other.n != self.n:
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        def fmt(i, j):
            x, y = self.re[i][j], self.im[i][j]
            if not y:
                return str(x)
            if not x:
                return f"({y})i"
            return f"{x}+({y})i"

        rows = ["[" + ", ".join(fmt(i, j) for j in range(self.n)) + "]" for i in range(self.n)]
        return "GMat([" + ",\n      ".join(rows) + "])"
