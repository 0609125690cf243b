"""The spinor-to-geometry transfer: induced real 2-forms and endomorphisms.

For a twisted spinor phi and a twist bivector f_k f_l, the induced 2-form on
R^n is

    eta_kl(X, Y) = scale2 * Re< X ^ Y . kappa(f_kl) . v, v >

with v the coefficient vector of phi.  The dual endomorphism follows the
contraction convention  eta_hat(e_a) = sum_b eta(e_a, e_b) e_b, i.e. its
operator matrix is the transpose of the 2-form's coefficient matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import IndexOutOfRange, ShapeMismatch, WrongRank, ZeroSpinor
from .linalg import Matrix, mat_mul, transpose, zeros
from .scalars import GaussianRational, Rational
from .spinrep import FormTerm, SpinorVector, clifford_action, hermitian
from .twisted import ScaledSpinor, _spin_generator, twist_bivector_action


@dataclass(frozen=True)
class TwoForm:
    """Exactly antisymmetric n x n rational matrix; entry (a, b) is the
    coefficient of e_a ^ e_b (0-indexed rows/columns)."""

    n: int
    mat: Matrix

    def __post_init__(self) -> None:
        if len(self.mat) != self.n or any(len(row) != self.n for row in self.mat):
            raise ShapeMismatch("2-form matrix has wrong shape")
        for a in range(self.n):
            for b in range(a, self.n):
                if self.mat[a][b] != -self.mat[b][a]:
                    raise ShapeMismatch("2-form matrix is not antisymmetric")

    def entry(self, a: int, b: int) -> Fraction:
        """Coefficient of e_a ^ e_b, 1-based."""
        return self.mat[a - 1][b - 1]

    def is_zero(self) -> bool:
        return all(not x for row in self.mat for x in row)

    def terms(self) -> List[Tuple[int, int, Fraction]]:
        """Nonzero (a, b, coeff) with a < b, 1-based, ascending."""
        return [(a + 1, b + 1, self.mat[a][b])
                for a in range(self.n) for b in range(a + 1, self.n)
                if self.mat[a][b]]

    def form_terms(self) -> List[FormTerm]:
        """As Clifford products e_a e_b, ready for spinor action."""
        return [FormTerm((a, b), c) for a, b, c in self.terms()]

    def __add__(self, other: TwoForm) -> TwoForm:
        if self.n != other.n:
            raise ShapeMismatch("adding 2-forms of different dimension")
        return TwoForm(self.n, [[x + y for x, y in zip(ra, rb)]
                                for ra, rb in zip(self.mat, other.mat)])

    def scale(self, c: Rational) -> TwoForm:
        c = Fraction(c)
        return TwoForm(self.n, [[x * c for x in row] for row in self.mat])

    def __neg__(self) -> TwoForm:
        return self.scale(Fraction(-1))


@dataclass(frozen=True)
class Endo:
    """An endomorphism of R^n: mat[i][j] = <e_i, T(e_j)> (column convention)."""

    n: int
    mat: Matrix

    def __post_init__(self) -> None:
        if len(self.mat) != self.n or any(len(row) != self.n for row in self.mat):
            raise ShapeMismatch("endomorphism matrix has wrong shape")

    def compose(self, other: Endo) -> Endo:
        return Endo(self.n, mat_mul(self.mat, other.mat))

    def commutator(self, other: Endo) -> Endo:
        return Endo(self.n, [[x - y for x, y in
                              zip(ra, rb)] for ra, rb in
                             zip(mat_mul(self.mat, other.mat),
                                 mat_mul(other.mat, self.mat))])

    def is_minus_identity(self) -> bool:
        return all(self.mat[i][j] == (-1 if i == j else 0)
                   for i in range(self.n) for j in range(self.n))

    def scale(self, c: Rational) -> Endo:
        c = Fraction(c)
        return Endo(self.n, [[x * c for x in row] for row in self.mat])

    def __neg__(self) -> Endo:
        return self.scale(Fraction(-1))


def two_form_from_terms(n: int, terms: Dict[Tuple[int, int], Rational]) -> TwoForm:
    """Build from {(a, b): coeff} with 1-based a != b; (b, a) entries negate."""
    mat = zeros(n)
    for (a, b), c in terms.items():
        if not (1 <= a <= n and 1 <= b <= n) or a == b:
            raise IndexOutOfRange(f"bad 2-form term indices ({a},{b})")
        c = Fraction(c)
        mat[a - 1][b - 1] += c
        mat[b - 1][a - 1] -= c
    return TwoForm(n, mat)


def eta(phi: ScaledSpinor, k: int, l: int) -> TwoForm:
    """The induced 2-form for the twist bivector f_k f_l."""
    if not (1 <= k <= phi.r and 1 <= l <= phi.r):
        raise IndexOutOfRange(f"twist indices ({k},{l}) outside 1..{phi.r}")
    n = phi.n
    mat = zeros(n)
    if k == l:
        return TwoForm(n, mat)
    w = twist_bivector_action(k, l, phi)
    for b in range(1, n + 1):
        wb = _spin_generator(phi, b, w.coeffs)
        for a in range(1, b):
            wab = _spin_generator(phi, a, wb)
            val = GaussianRational()
            for idx, c in wab.items():
                o = phi.coeffs.get(idx)
                if o is not None:
                    val = val + c * o.conj()
            entry = phi.scale2 * val.re
            mat[a - 1][b - 1] = entry
            mat[b - 1][a - 1] = -entry
    return TwoForm(n, mat)


def eta_hat(omega: TwoForm) -> Endo:
    """Metric-dual endomorphism: eta_hat(e_a) = sum_b omega(e_a, e_b) e_b."""
    return Endo(omega.n, transpose(omega.mat))


def phi_extend(phi: ScaledSpinor, beta: Dict[Tuple[int, int], Rational]) -> TwoForm:
    """Linear extension over twist bivectors: sum c_kl eta(phi, k, l)."""
    out = TwoForm(phi.n, zeros(phi.n))
    for (k, l), c in beta.items():
        c = Fraction(c)
        if not c or k == l:
            continue
        out = out + eta(phi, k, l).scale(c)
    return out


def spinc_form(phi: ScaledSpinor) -> TwoForm:
    """The single induced 2-form of a rank-2 twisted spinor."""
    if phi.r != 2 or phi.m != 1:
        raise WrongRank(f"rank-2 form needs (r, m) = (2, 1), got ({phi.r}, {phi.m})")
    return eta(phi, 1, 2)


def spinc_form_untwisted(psi: SpinorVector) -> TwoForm:
    """For an untwisted spinor in an even-dimensional space:
    entries Re( i * <e_a e_b . psi, psi> )."""
    if psi.n % 2 != 0:
        raise ShapeMismatch("untwisted rank-2 form needs even dimension")
    if psi.is_zero():
        raise ZeroSpinor("zero spinor")
    n = psi.n
    mat = zeros(n)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            val = hermitian(clifford_action(n, [FormTerm((a, b))], psi), psi)
            entry = -val.im  # Re(i * val)
            mat[a - 1][b - 1] = entry
            mat[b - 1][a - 1] = -entry
    return TwoForm(n, mat)
