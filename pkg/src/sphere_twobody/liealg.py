"""Root-system combinatorics for so(2k+1) = B_k and so(2k) = D_k.

Exact rational arithmetic throughout: Weyl dimensions, Casimir eigenvalues,
restriction (branching) rules between the two series, and the dimension of
the subspace of vectors annihilated by the so(n-1) subalgebra.

Weights are written in the orthonormal epsilon-basis as integer tuples
(m_1, ..., m_k) with m_k the largest entry. Half-integer (spinor) weights
are out of scope and rejected.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import ValidationError

__all__ = [
    "AlgebraLabel",
    "HighestWeight",
    "weyl_dim",
    "casimir_eigenvalue",
    "branch_B_to_D",
    "branch_D_to_B",
    "invariant_subspace_dim",
]


@dataclass(frozen=True)
class AlgebraLabel:
    """One of the orthogonal series: B_k = so(2k+1) or D_k = so(2k)."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in ("B", "D"):
            raise ValidationError(f"series must be 'B' or 'D', got {self.series!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ValidationError(f"rank must be an integer, got {self.rank!r}")
        k = self.rank
        if self.series == "B" and k < 1:
            raise ValidationError(f"B_k needs k >= 1, got k={k}")
        if self.series == "D" and k < 2:
            raise ValidationError(f"D_k needs k >= 2, got k={k}")

    @property
    def sphere_dim(self):
        """n with so(n+1) = this algebra: n = 2k for B_k, n = 2k-1 for D_k."""
        return 2 * self.rank if self.series == "B" else 2 * self.rank - 1

    def __str__(self):
        return f"{self.series}{self.rank}"


def _check_coeffs(series, rank, coeffs):
    if len(coeffs) != rank:
        raise ValidationError(
            f"weight needs {rank} entries for rank {rank}, got {len(coeffs)}"
        )
    for m in coeffs:
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValidationError(
                f"weight entries must be integers (spinor weights are out of "
                f"scope), got {m!r}"
            )
    if series == "B":
        # m_k >= ... >= m_1 >= 0
        if any(coeffs[i] > coeffs[i + 1] for i in range(rank - 1)) or coeffs[0] < 0:
            raise ValidationError(f"not B-dominant (need 0 <= m_1 <= ... <= m_k): {coeffs}")
    else:
        # m_k >= ... >= m_2 >= |m_1|; m_1 may be negative
        if any(coeffs[i] > coeffs[i + 1] for i in range(1, rank - 1)):
            raise ValidationError(f"not D-dominant (need m_2 <= ... <= m_k): {coeffs}")
        if coeffs[1] < abs(coeffs[0]):
            raise ValidationError(f"not D-dominant (need m_2 >= |m_1|): {coeffs}")


@dataclass(frozen=True)
class HighestWeight:
    """Dominant integral weight (m_1, ..., m_k) of a B_k or D_k module."""

    algebra: AlgebraLabel
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        _check_coeffs(self.algebra.series, self.algebra.rank, self.coeffs)

    def __str__(self):
        return f"{self.algebra}({','.join(map(str, self.coeffs))})"


def _positive_roots(alg):
    """Positive roots in the epsilon-basis, as integer tuples."""
    k = alg.rank
    roots = []
    if alg.series == "B":
        for i in range(k):
            e = [0] * k
            e[i] = 1
            roots.append(tuple(e))
    for j in range(k):
        for i in range(j):
            e = [0] * k
            e[j], e[i] = 1, 1
            roots.append(tuple(e))
            e = [0] * k
            e[j], e[i] = 1, -1
            roots.append(tuple(e))
    return roots


def _delta(alg):
    """Half-sum of positive roots in the epsilon-basis."""
    k = alg.rank
    if alg.series == "B":
        return tuple(Fraction(2 * (i + 1) - 1, 2) for i in range(k))
    return tuple(Fraction(i, 1) for i in range(k))


def _dot(u, v):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(u, v))


def weyl_dim(alg, weight):
    """Dimension of the irreducible module, by the Weyl product formula."""
    w = weight if isinstance(weight, HighestWeight) else HighestWeight(alg, weight)
    if w.algebra != alg:
        raise ValidationError(f"weight {w} does not belong to {alg}")
    delta = _delta(alg)
    lam_delta = tuple(m + d for m, d in zip(w.coeffs, delta))
    dim = Fraction(1)
    for root in _positive_roots(alg):
        dim *= _dot(lam_delta, root) / _dot(delta, root)
    if dim.denominator != 1 or dim <= 0:
        raise ValidationError(f"Weyl product is not a positive integer for {w}: {dim}")
    return int(dim)


def casimir_eigenvalue(alg, weight):
    """Casimir scalar <delta+lambda, delta+lambda> - <delta, delta>, exact."""
    w = weight if isinstance(weight, HighestWeight) else HighestWeight(alg, weight)
    if w.algebra != alg:
        raise ValidationError(f"weight {w} does not belong to {alg}")
    delta = _delta(alg)
    shifted = tuple(m + d for m, d in zip(w.coeffs, delta))
    return _dot(shifted, shifted) - _dot(delta, delta)


def branch_B_to_D(weight):
    """Restriction of a B_k module to D_k: interlacing integer weights.

    Returns every (m'_1, ..., m'_k) with
    m_k >= m'_k >= m_{k-1} >= ... >= m'_2 >= m_1 >= m'_1 >= -m_1,
    each exactly once, sorted lexicographically.
    """
    if weight.algebra.series != "B":
        raise ValidationError(f"expected a B-series weight, got {weight}")
    k = weight.algebra.rank
    m = weight.coeffs
    dalg = AlgebraLabel("D", k)
    if k == 1:
        raise ValidationError("D_1 is not in scope; B_1 weights do not restrict here")
    ranges = [range(-m[0], m[0] + 1)]
    ranges += [range(m[i - 1], m[i] + 1) for i in range(1, k)]
    out = [HighestWeight(dalg, c) for c in product(*ranges)]
    out.sort(key=lambda w: w.coeffs)
    return out


def branch_D_to_B(weight):
    """Restriction of a D_k module to B_{k-1}: interlacing integer weights.

    Returns every (m'_1, ..., m'_{k-1}) with
    m_k >= m'_{k-1} >= m_{k-1} >= ... >= m_2 >= m'_1 >= |m_1|,
    sorted lexicographically.
    """
    if weight.algebra.series != "D":
        raise ValidationError(f"expected a D-series weight, got {weight}")
    k = weight.algebra.rank
    m = weight.coeffs
    balg = AlgebraLabel("B", k - 1)
    ranges = [range(abs(m[0]), m[1] + 1)]
    ranges += [range(m[i], m[i + 1] + 1) for i in range(1, k - 1)]
    out = [HighestWeight(balg, c) for c in product(*ranges)]
    out.sort(key=lambda w: w.coeffs)
    return out


def invariant_subspace_dim(alg, weight):
    """Dimension of the subspace annihilated by the so(n-1) subalgebra.

    Nonzero only when m_j = 0 for j <= k-2; then m_k - m_{k-1} + 1 (B) or
    m_k - |m_{k-1}| + 1 (D). For B_1 the whole (2m+1)-dimensional module
    qualifies.
    """
    w = weight if isinstance(weight, HighestWeight) else HighestWeight(alg, weight)
    if w.algebra != alg:
        raise ValidationError(f"weight {w} does not belong to {alg}")
    k = alg.rank
    m = w.coeffs
    if alg.series == "B" and k == 1:
        return 2 * m[0] + 1
    if any(m[j] != 0 for j in range(k - 2)):
        return 0
    if alg.series == "B":
        return m[-1] - m[-2] + 1
    return m[-1] - abs(m[-2]) + 1
