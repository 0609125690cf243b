"""Exact constructors for the reference spinors and their expected data.

Catalog names: qk(m), spin7_pure, spin7_reducing, generic(n).  Expected
tables stored here are inputs to regression tests; the purity / reducing
verdicts themselves are always re-derived by the certifiers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import UnsupportedDimension
from .forms import TwoForm, two_form_from_terms
from .scalars import gr
from .spinrep import SpinorVector, all_basis_indices, clifford_action, gamma_apply
from .twisted import ScaledSpinor, TwistedCoeffMap

Pair = Tuple[int, int]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "pure" | "reducing"
    spinor: ScaledSpinor
    expected_etas: Optional[Dict[Pair, TwoForm]] = None
    expected_annihilator_dim: Optional[int] = None
    metadata: Dict[str, Fraction] = field(default_factory=dict)


def maps_G_H(eps: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Entry doubling G(eps) = (e1, e1, ..., em, em) and the count H(eps) of
    -1 entries."""
    doubled: List[int] = []
    count = 0
    for e in eps:
        if e not in (1, -1):
            raise ValueError(f"entries must be +-1, got {e}")
        doubled.extend((e, e))
        if e == -1:
            count += 1
    return tuple(doubled), count


def sign_tuples(m: int, minus_count: Optional[int] = None) -> List[Tuple[int, ...]]:
    """All {+1,-1}^m tuples, optionally restricted to a given -1 count."""
    out: List[Tuple[int, ...]] = [()]
    for _ in range(m):
        out = [t + (s,) for t in out for s in (1, -1)]
    if minus_count is None:
        return out
    return [t for t in out if t.count(-1) == minus_count]


def psi_level(m: int, j: int) -> SpinorVector:
    """Sum of u_G(eps) over eps with exactly j entries -1; an element of
    Delta_{4m}.  Zero outside 0 <= j <= m."""
    if j < 0 or j > m:
        return SpinorVector(4 * m, {})
    coeffs = {maps_G_H(eps)[0]: gr(1) for eps in sign_tuples(m, j)}
    return SpinorVector(4 * m, coeffs)


def build_qk_pure(m: int) -> CatalogEntry:
    """The n = 4m, r = 3 pure spinor of the quaternion-Kaehler family."""
    if m < 1:
        raise UnsupportedDimension("need m >= 1")
    n = 4 * m
    coeffs: TwistedCoeffMap = {}
    for j in range(m + 1):
        c = gr(Fraction(1, comb(m, j)))
        for eps in sign_tuples(m, j):
            spin = maps_G_H(eps)[0]
            for delta in sign_tuples(m, m - j):
                twist = tuple((d,) for d in delta)
                coeffs[(spin, twist)] = c
    scale2 = Fraction(3, (m + 2) * (m + 1))
    phi = ScaledSpinor(n, 3, m, coeffs, scale2)
    e12: Dict[Pair, Fraction] = {}
    e13: Dict[Pair, Fraction] = {}
    e23: Dict[Pair, Fraction] = {}
    for j in range(1, m + 1):
        b = 4 * j - 4
        e12[(b + 1, b + 2)] = Fraction(1)
        e12[(b + 3, b + 4)] = Fraction(1)
        e13[(b + 1, b + 3)] = Fraction(-1)
        e13[(b + 2, b + 4)] = Fraction(1)
        e23[(b + 1, b + 4)] = Fraction(-1)
        e23[(b + 2, b + 3)] = Fraction(-1)
    expected = {
        (1, 2): two_form_from_terms(n, e12),
        (1, 3): two_form_from_terms(n, e13),
        (2, 3): two_form_from_terms(n, e23),
    }
    return CatalogEntry(
        name=f"qk(m={m})",
        kind="pure",
        spinor=phi,
        expected_etas=expected,
        expected_annihilator_dim=m * (2 * m + 1) + 3,
    )


# The two rank-7 spinors in Delta_8 (x) Delta_7 share their eight index pairs
# up to the swap of the u-indices in terms 4 and 5.
_SPIN7_PURE_TERMS: List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]] = [
    (+1, (-1, -1, -1, -1), (1, 1, 1)),
    (-1, (1, -1, -1, 1), (1, 1, -1)),
    (+1, (1, -1, 1, -1), (1, -1, 1)),
    (-1, (1, 1, -1, -1), (1, -1, -1)),
    (-1, (-1, -1, 1, 1), (-1, 1, 1)),
    (+1, (-1, 1, -1, 1), (-1, 1, -1)),
    (-1, (-1, 1, 1, -1), (-1, -1, 1)),
    (+1, (1, 1, 1, 1), (-1, -1, -1)),
]

_SPIN7_REDUCING_TERMS: List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]] = [
    (+1, (-1, -1, -1, -1), (1, 1, 1)),
    (-1, (1, -1, -1, 1), (1, 1, -1)),
    (+1, (1, -1, 1, -1), (1, -1, 1)),
    (-1, (-1, -1, 1, 1), (1, -1, -1)),
    (-1, (1, 1, -1, -1), (-1, 1, 1)),
    (+1, (-1, 1, -1, 1), (-1, 1, -1)),
    (-1, (-1, 1, 1, -1), (-1, -1, 1)),
    (+1, (1, 1, 1, 1), (-1, -1, -1)),
]

# Expected 2-forms of the rank-7 pure spinor, rows (k, l) -> signed quadruple
# of basis 2-forms ((a, b), coeff).
_SPIN7_PURE_ETAS: Dict[Pair, List[Tuple[int, int, int]]] = {
    (1, 2): [(1, 2, 1), (3, 4, -1), (5, 6, 1), (7, 8, 1)],
    (1, 3): [(1, 3, 1), (2, 4, 1), (5, 7, 1), (6, 8, -1)],
    (1, 4): [(1, 4, 1), (2, 3, -1), (5, 8, 1), (6, 7, 1)],
    (1, 5): [(1, 5, 1), (2, 6, -1), (3, 7, -1), (4, 8, -1)],
    (1, 6): [(1, 6, 1), (2, 5, 1), (3, 8, 1), (4, 7, -1)],
    (1, 7): [(1, 7, 1), (2, 8, -1), (3, 5, 1), (4, 6, 1)],
    (2, 3): [(1, 4, -1), (2, 3, 1), (5, 8, 1), (6, 7, 1)],
    (2, 4): [(1, 3, 1), (2, 4, 1), (5, 7, -1), (6, 8, 1)],
    (2, 5): [(1, 6, 1), (2, 5, 1), (3, 8, -1), (4, 7, 1)],
    (2, 6): [(1, 5, -1), (2, 6, 1), (3, 7, -1), (4, 8, -1)],
    (2, 7): [(1, 8, 1), (2, 7, 1), (3, 6, 1), (4, 5, -1)],
    (3, 4): [(1, 2, -1), (3, 4, 1), (5, 6, 1), (7, 8, 1)],
    (3, 5): [(1, 7, 1), (2, 8, 1), (3, 5, 1), (4, 6, -1)],
    (3, 6): [(1, 8, -1), (2, 7, 1), (3, 6, 1), (4, 5, 1)],
    (3, 7): [(1, 5, -1), (2, 6, -1), (3, 7, 1), (4, 8, -1)],
    (4, 5): [(1, 8, 1), (2, 7, -1), (3, 6, 1), (4, 5, 1)],
    (4, 6): [(1, 7, 1), (2, 8, 1), (3, 5, -1), (4, 6, 1)],
    (4, 7): [(1, 6, -1), (2, 5, 1), (3, 8, 1), (4, 7, 1)],
    (5, 6): [(1, 2, 1), (3, 4, 1), (5, 6, 1), (7, 8, -1)],
    (5, 7): [(1, 3, 1), (2, 4, -1), (5, 7, 1), (6, 8, 1)],
    (6, 7): [(1, 4, 1), (2, 3, 1), (5, 8, -1), (6, 7, 1)],
}


def _terms_to_spinor(terms, n, r, m, coeff_num: Fraction, scale2: Fraction) -> ScaledSpinor:
    coeffs: TwistedCoeffMap = {}
    for sign, spin, twist in terms:
        coeffs[(spin, (twist,))] = gr(sign * coeff_num)
    return ScaledSpinor(n, r, m, coeffs, scale2)


def build_spin7_pure() -> CatalogEntry:
    """The rank-7 pure spinor in Delta_8 (x) Delta_7: eight terms with
    coefficients +-1/2 and scale2 = 1 (squared norm 2, the unique positive
    scale at which both purity conditions hold; pinned by regression test)."""
    phi = _terms_to_spinor(_SPIN7_PURE_TERMS, 8, 7, 1, Fraction(1, 2), Fraction(1))
    expected = {
        pair: two_form_from_terms(8, {(a, b): Fraction(c) for a, b, c in rows})
        for pair, rows in _SPIN7_PURE_ETAS.items()
    }
    return CatalogEntry(
        name="spin7_pure",
        kind="pure",
        spinor=phi,
        expected_etas=expected,
        expected_annihilator_dim=21,
    )


def build_spin7_reducing() -> CatalogEntry:
    """The rank-7 reducing spinor: eight terms +-1 with scale2 = 1/8 (unit
    norm); every induced 2-form is the basic e_k ^ e_l."""
    phi = _terms_to_spinor(_SPIN7_REDUCING_TERMS, 8, 7, 1, Fraction(1), Fraction(1, 8))
    expected = {
        (k, l): two_form_from_terms(8, {(k, l): Fraction(1)})
        for k in range(1, 8) for l in range(k + 1, 8)
    }
    return CatalogEntry(
        name="spin7_reducing",
        kind="reducing",
        spinor=phi,
        expected_etas=expected,
        expected_annihilator_dim=21,
    )


def build_generic_reducing(n: int) -> CatalogEntry:
    """The rank-n reducing spinor sum_eps u_eps (x) gamma_n(u_eps) in
    Delta_n (x) Delta_n, stored at unit norm (scale2 = 2^-floor(n/2)); the
    raw coefficient vector induces 2-forms 2^floor(n/2) e_p ^ e_q, the
    normalized spinor the basic ones."""
    if not 2 <= n <= 8:
        raise UnsupportedDimension(f"supported range is 2 <= n <= 8, got {n}")
    k = n // 2
    coeffs: TwistedCoeffMap = {}
    for eps in all_basis_indices(n):
        g = gamma_apply(n, SpinorVector(n, {eps: gr(1)}))
        ((target, c),) = g.coeffs.items()
        coeffs[(eps, (target,))] = c
    phi = ScaledSpinor(n, n, 1, coeffs, Fraction(1, 2 ** k))
    expected = {
        (p, q): two_form_from_terms(n, {(p, q): Fraction(1)})
        for p in range(1, n + 1) for q in range(p + 1, n + 1)
    }
    return CatalogEntry(
        name=f"generic(n={n})",
        kind="reducing",
        spinor=phi,
        expected_etas=expected,
        metadata={"unnormalized_eta_factor": Fraction(2 ** k)},
    )


# The fourteen generators of the common annihilator of the two rank-7
# spinors; each is (pairs, signs) acting identically in both summands.
# The two-pair patterns group into seven classes of three aligned basis
# pairs, two independent generators per class.
_G2_ROWS: List[List[Tuple[int, int, int]]] = [
    [(1, 2, 1), (3, 4, -1)],
    [(1, 2, 1), (5, 6, 1)],
    [(1, 3, 1), (2, 4, 1)],
    [(1, 4, 1), (2, 3, -1)],
    [(1, 4, 1), (6, 7, 1)],
    [(2, 4, 1), (5, 7, -1)],
    [(1, 5, 1), (3, 7, -1)],
    [(1, 7, 1), (4, 6, 1)],
    [(2, 5, 1), (4, 7, 1)],
    [(1, 6, 1), (2, 5, 1)],
    [(1, 7, 1), (3, 5, 1)],
    [(2, 7, 1), (4, 5, -1)],
    [(2, 7, 1), (3, 6, 1)],
    [(1, 5, 1), (2, 6, -1)],
]


def g2_generators() -> List["AmbientElement"]:
    """The 14 elements of spin(8) + spin(7) spanning the common annihilator
    of the two rank-7 catalog spinors."""
    from .analysis import AmbientElement  # local import to avoid a cycle

    out = []
    for rows in _G2_ROWS:
        a = {(i, j): Fraction(s) for i, j, s in rows}
        b = {(i, j): Fraction(s) for i, j, s in rows}
        out.append(AmbientElement(n=8, r=7, a=a, b=b))
    return out


def beta_forms(m: int) -> List[TwoForm]:
    """The quaternionic-block 2-forms on R^(4m), four per index pair
    1 <= i <= j <= m.

    Diagonal pairs (i = j) give the three block complex structures plus a
    degenerate zero form; off-diagonal pairs give the four-term coupling
    forms (each is the real matrix of one quaternionic unit acting between
    blocks i and j, so each individually annihilates the rank-3 spinor)."""
    if m < 1:
        raise UnsupportedDimension("need m >= 1")
    n = 4 * m
    out: List[TwoForm] = []
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            p, q = 4 * i - 4, 4 * j - 4
            if i == j:
                variants = [
                    [],
                    [(p + 1, q + 2, 1), (p + 3, q + 4, -1)],
                    [(p + 1, q + 3, 1), (p + 2, q + 4, 1)],
                    [(p + 1, q + 4, 1), (p + 2, q + 3, -1)],
                ]
            else:
                variants = [
                    [(p + 1, q + 1, 1), (p + 2, q + 2, 1),
                     (p + 3, q + 3, 1), (p + 4, q + 4, 1)],
                    [(p + 1, q + 2, 1), (p + 2, q + 1, -1),
                     (p + 3, q + 4, -1), (p + 4, q + 3, 1)],
                    [(p + 1, q + 3, 1), (p + 2, q + 4, 1),
                     (p + 3, q + 1, -1), (p + 4, q + 2, -1)],
                    [(p + 1, q + 4, 1), (p + 2, q + 3, -1),
                     (p + 3, q + 2, 1), (p + 4, q + 1, -1)],
                ]
            for rows in variants:
                terms: Dict[Pair, Fraction] = {}
                for a, b, s in rows:
                    terms[(a, b)] = terms.get((a, b), Fraction(0)) + s
                out.append(two_form_from_terms(n, terms))
    return out


def qk_eta13_form(m: int) -> TwoForm:
    return build_qk_pure(m).expected_etas[(1, 3)]


def eta13_recursion_check(m: int) -> bool:
    """Verify the ladder action of the (1,3) 2-form on the graded sums
    psi_j:  eta13 . psi_j = -2 [ (j+1) psi_(j+1) + (j-1-m) psi_(j-1) ]."""
    n = 4 * m
    terms = qk_eta13_form(m).form_terms()
    for j in range(m + 1):
        lhs = clifford_action(n, terms, psi_level(m, j))
        rhs = psi_level(m, j + 1).scale(gr(-2 * (j + 1))) + \
            psi_level(m, j - 1).scale(gr(-2 * (j - 1 - m)))
        if lhs.coeffs != rhs.coeffs:
            return False
    return True


CATALOG_NAMES = ("qk", "spin7_pure", "spin7_reducing", "generic")


def build(name: str, *, m: Optional[int] = None, n: Optional[int] = None) -> CatalogEntry:
    """Build a catalog entry by name; qk needs m, generic needs n."""
    if name == "qk":
        if m is None:
            raise UnsupportedDimension("qk needs --m")
        return build_qk_pure(m)
    if name == "spin7_pure":
        return build_spin7_pure()
    if name == "spin7_reducing":
        return build_spin7_reducing()
    if name == "generic":
        if n is None:
            raise UnsupportedDimension("generic needs --n")
        return build_generic_reducing(n)
    raise KeyError(f"unknown catalog name {name!r}")
