"""Twisted spinors: sparse elements of Delta_n (x) Delta_r^(x m).

A basis index is a pair (spin tuple, m twist tuples); the spin slot comes
first, then twist slots 1..m.  ``ScaledSpinor`` carries an extra positive
rational ``scale2``: the represented spinor is sqrt(scale2) times the stored
coefficient vector, which keeps all arithmetic inside Q(i) while representing
irrational global normalizations exactly.  Every sesquilinear quantity is
multiplied by scale2; purely linear operations leave it untouched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .errors import IndexOutOfRange, ScaleMismatch, ShapeMismatch
from .scalars import GR_ZERO, GaussianRational, Rational
from .spinrep import (
    FormTerm,
    SpinorVector,
    _check_unit_vectors,
    _generator_on_map,
    spinor_dim_exponent,
)

TwistedIndex = Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]
TwistedCoeffMap = Dict[TwistedIndex, GaussianRational]


@dataclass(frozen=True)
class ScaledSpinor:
    """Element of Delta_n (x) Delta_r^(x m) as coefficients plus scale2 > 0."""

    n: int
    r: int
    m: int
    coeffs: TwistedCoeffMap = field(default_factory=dict)
    scale2: Rational = Fraction(1)

    def __post_init__(self) -> None:
        if not isinstance(self.scale2, Fraction):
            object.__setattr__(self, "scale2", Fraction(self.scale2))
        if self.scale2 <= 0:
            raise ShapeMismatch("scale2 must be a positive rational")
        ks, kt = spinor_dim_exponent(self.n), spinor_dim_exponent(self.r)
        cleaned: TwistedCoeffMap = {}
        for (spin, twist), c in self.coeffs.items():
            if len(spin) != ks or len(twist) != self.m or any(len(t) != kt for t in twist):
                raise ShapeMismatch(f"index {(spin, twist)} invalid for shape "
                                    f"(n={self.n}, r={self.r}, m={self.m})")
            if c:
                cleaned[(spin, twist)] = c
        object.__setattr__(self, "coeffs", cleaned)

    def shape(self) -> Tuple[int, int, int]:
        return (self.n, self.r, self.m)

    def is_zero(self) -> bool:
        return not self.coeffs

    def with_coeffs(self, coeffs: TwistedCoeffMap) -> ScaledSpinor:
        return ScaledSpinor(self.n, self.r, self.m, coeffs, self.scale2)

    def __add__(self, other: ScaledSpinor) -> ScaledSpinor:
        if self.shape() != other.shape() or self.scale2 != other.scale2:
            raise ShapeMismatch("adding spinors of different shape or scale")
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            s = out.get(idx, GR_ZERO) + c
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return self.with_coeffs(out)

    def __sub__(self, other: ScaledSpinor) -> ScaledSpinor:
        return self + other.scale(GaussianRational(Fraction(-1)))

    def scale(self, c: GaussianRational) -> ScaledSpinor:
        if not c:
            return self.with_coeffs({})
        return self.with_coeffs({idx: v * c for idx, v in self.coeffs.items()})


def _check_shapes(a: ScaledSpinor, b: ScaledSpinor) -> None:
    if a.shape() != b.shape():
        raise ShapeMismatch(f"shapes {a.shape()} and {b.shape()} differ")


def _spin_generator(phi: ScaledSpinor, i: int, coeffs: TwistedCoeffMap) -> TwistedCoeffMap:
    """kappa(e_i) on the Delta_n slot of a raw coefficient map."""
    grouped: Dict[Tuple[Tuple[int, ...], ...], Dict[Tuple[int, ...], GaussianRational]] = {}
    for (spin, twist), c in coeffs.items():
        grouped.setdefault(twist, {})[spin] = c
    out: TwistedCoeffMap = {}
    for twist, sub in grouped.items():
        for spin, c in _generator_on_map(phi.n, i, sub).items():
            out[(spin, twist)] = c
    return out


def _twist_generator(phi: ScaledSpinor, slot: int, i: int,
                     coeffs: TwistedCoeffMap) -> TwistedCoeffMap:
    """kappa(f_i) on twist slot ``slot`` (1-based) of a raw coefficient map."""
    a = slot - 1
    grouped: Dict[Tuple, Dict[Tuple[int, ...], GaussianRational]] = {}
    for (spin, twist), c in coeffs.items():
        key = (spin, twist[:a], twist[a + 1 :])
        grouped.setdefault(key, {})[twist[a]] = c
    out: TwistedCoeffMap = {}
    for (spin, head, tail), sub in grouped.items():
        for t, c in _generator_on_map(phi.r, i, sub).items():
            out[(spin, head + (t,) + tail)] = c
    return out


def _merge(acc: TwistedCoeffMap, inc: TwistedCoeffMap,
           factor: Optional[GaussianRational] = None) -> None:
    for idx, c in inc.items():
        v = c if factor is None else c * factor
        s = acc.get(idx, GR_ZERO) + v
        if s:
            acc[idx] = s
        else:
            acc.pop(idx, None)


def tangent_action(X: Sequence[Rational], phi: ScaledSpinor) -> ScaledSpinor:
    """Clifford action of the tangent vector sum(X_j e_j) on the Delta_n slot."""
    if len(X) != phi.n:
        raise ShapeMismatch(f"vector of length {len(X)} in R^{phi.n}")
    acc: TwistedCoeffMap = {}
    for j, c in enumerate(X, start=1):
        cf = Fraction(c)
        if not cf:
            continue
        _merge(acc, _spin_generator(phi, j, phi.coeffs), GaussianRational(cf))
    return phi.with_coeffs(acc)


def form_action_on_spin_slot(terms: Iterable[FormTerm], phi: ScaledSpinor) -> ScaledSpinor:
    """A sum of basis Clifford products over R^n acting on the Delta_n slot."""
    acc: TwistedCoeffMap = {}
    for term in terms:
        if term.factors and not 1 <= term.factors[0] <= term.factors[-1] <= phi.n:
            raise IndexOutOfRange(f"factors {term.factors} outside 1..{phi.n}")
        cur = phi.coeffs
        for gen in reversed(term.factors):
            cur = _spin_generator(phi, gen, cur)
        _merge(acc, cur, GaussianRational(term.coeff))
    return phi.with_coeffs(acc)


def mu_slot(a: int, omega: Iterable[FormTerm], phi: ScaledSpinor) -> ScaledSpinor:
    """Clifford multiplication by omega in twist slot a only."""
    if not 1 <= a <= phi.m:
        raise IndexOutOfRange(f"twist slot {a} outside 1..{phi.m}")
    acc: TwistedCoeffMap = {}
    for term in omega:
        if term.factors and not 1 <= term.factors[0] <= term.factors[-1] <= phi.r:
            raise IndexOutOfRange(f"factors {term.factors} outside 1..{phi.r}")
        cur = phi.coeffs
        for gen in reversed(term.factors):
            cur = _twist_generator(phi, a, gen, cur)
        _merge(acc, cur, GaussianRational(term.coeff))
    return phi.with_coeffs(acc)


def twist_bivector_action(k: int, l: int, phi: ScaledSpinor) -> ScaledSpinor:
    """The bivector f_k f_l acting as the sum of its m slot actions."""
    if not (1 <= k <= phi.r and 1 <= l <= phi.r):
        raise IndexOutOfRange(f"bivector indices ({k},{l}) outside 1..{phi.r}")
    acc: TwistedCoeffMap = {}
    for a in range(1, phi.m + 1):
        cur = _twist_generator(phi, a, l, phi.coeffs)
        cur = _twist_generator(phi, a, k, cur)
        _merge(acc, cur)
    return phi.with_coeffs(acc)


def twisted_group_action(
    g_vectors: Sequence[Sequence[Rational]],
    h_vectors: Sequence[Sequence[Rational]],
    phi: ScaledSpinor,
) -> ScaledSpinor:
    """Action of [g, h]: g on the Delta_n slot, h diagonally on all twist slots."""
    g_clean = _check_unit_vectors(phi.n, g_vectors)
    h_clean = _check_unit_vectors(phi.r, h_vectors)
    out = phi
    for x in reversed(g_clean):
        out = tangent_action(x, out)
    for a in range(1, phi.m + 1):
        for y in reversed(h_clean):
            acc: TwistedCoeffMap = {}
            for j, c in enumerate(y, start=1):
                if not c:
                    continue
                _merge(acc, _twist_generator(out, a, j, out.coeffs), GaussianRational(c))
            out = out.with_coeffs(acc)
    return out


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    pn, pd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def twisted_hermitian(phi1: ScaledSpinor, phi2: ScaledSpinor) -> GaussianRational:
    """<phi1, phi2> including the sqrt(scale2_1 * scale2_2) prefactor, which
    must be rational (always true for equal scales)."""
    _check_shapes(phi1, phi2)
    if phi1.scale2 == phi2.scale2:
        pref = phi1.scale2
    else:
        pref = _rational_sqrt(phi1.scale2 * phi2.scale2)
        if pref is None:
            raise ScaleMismatch(
                f"sqrt({phi1.scale2} * {phi2.scale2}) is irrational")
    acc = GR_ZERO
    small, big = phi1.coeffs, phi2.coeffs
    if len(big) < len(small):
        for idx, c in big.items():
            o = small.get(idx)
            if o is not None:
                acc = acc + o * c.conj()
    else:
        for idx, c in small.items():
            o = big.get(idx)
            if o is not None:
                acc = acc + c * o.conj()
    return acc * pref


def norm2(phi: ScaledSpinor) -> Fraction:
    """|phi|^2 = scale2 * sum |coeff|^2."""
    return phi.scale2 * sum((c.norm2() for c in phi.coeffs.values()), Fraction(0))


def from_untwisted(psi: SpinorVector, r: int, m: int = 0,
                   twist: Tuple[Tuple[int, ...], ...] = ()) -> ScaledSpinor:
    """Embed an untwisted spinor, optionally tensored with fixed twist basis
    vectors (one tuple per slot)."""
    if len(twist) != m:
        raise ShapeMismatch("need one twist index per slot")
    return ScaledSpinor(psi.n, r, m,
                        {(eps, twist): c for eps, c in psi.coeffs.items()})
