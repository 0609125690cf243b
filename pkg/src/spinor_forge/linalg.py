"""Exact rational linear algebra.

Row reduction is fraction-free: each row is cleared to integers and stripped
by its gcd, and elimination uses integer cross-multiples only, so no rational
reconstruction happens until a nullspace vector is read off.  Also houses the
exact generators of rational orthogonal matrices (Cayley transforms, Givens
rotations from Pythagorean pairs) and rational unit vectors used by the group
tests.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotOrthogonal

Vector = List[Fraction]
Matrix = List[List[Fraction]]
IntRow = List[int]


def _to_int_row(row: Sequence[Fraction]) -> IntRow:
    den = 1
    for x in row:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


class RowReducer:
    """Incremental integer row echelon with recorded pivot columns."""

    def __init__(self, width: int) -> None:
        self.width = width
        self.pivots: Dict[int, IntRow] = {}  # pivot column -> reduced row

    def _reduce(self, row: IntRow) -> IntRow:
        for col in range(self.width):
            v = row[col]
            if not v:
                continue
            piv = self.pivots.get(col)
            if piv is None:
                return row
            p = piv[col]
            g = math.gcd(abs(v), abs(p))
            a, b = p // g, v // g
            row = [a * x - b * y for x, y in zip(row, piv)]
        return row

    def add(self, row: Sequence[Fraction]) -> bool:
        """Insert a row; returns True if it enlarged the row space."""
        r = self._reduce(_to_int_row(row))
        for col in range(self.width):
            if r[col]:
                g = 0
                for v in r:
                    g = math.gcd(g, v)
                if g > 1:
                    r = [v // g for v in r]
                if r[col] < 0:
                    r = [-v for v in r]
                self.pivots[col] = r
                return True
        return False

    def contains(self, row: Sequence[Fraction]) -> bool:
        return not any(self._reduce(_to_int_row(row)))

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows: Sequence[Sequence[Fraction]], width: Optional[int] = None) -> int:
    if not rows:
        return 0
    red = RowReducer(width if width is not None else len(rows[0]))
    for row in rows:
        red.add(row)
    return red.rank


def span_contains(basis: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]) -> bool:
    red = RowReducer(len(vec))
    for row in basis:
        red.add(row)
    return red.contains(vec)


def spans_equal(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> bool:
    if not a and not b:
        return True
    width = len(a[0]) if a else len(b[0])
    ra = RowReducer(width)
    for row in a:
        ra.add(row)
    rb = RowReducer(width)
    for row in b:
        rb.add(row)
    if ra.rank != rb.rank:
        return False
    return all(ra.contains(row) for row in b)


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> List[Vector]:
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    red = RowReducer(width)
    for row in rows:
        red.add(row)
    # Reduced row echelon over Q from the integer pivot rows.
    pivot_cols = sorted(red.pivots)
    rref: Dict[int, Vector] = {
        col: [Fraction(v, red.pivots[col][col]) for v in red.pivots[col]]
        for col in pivot_cols
    }
    for idx, col in enumerate(pivot_cols):
        row = rref[col]
        for above in pivot_cols[:idx]:
            f = rref[above][col]
            if f:
                rref[above] = [x - f * y for x, y in zip(rref[above], row)]
    free_cols = [c for c in range(width) if c not in red.pivots]
    basis: List[Vector] = []
    for fc in free_cols:
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for col in pivot_cols:
            vec[col] = -rref[col][fc]
        basis.append(vec)
    return basis


# -- dense Fraction matrices ------------------------------------------------

def identity(n: int) -> Matrix:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def zeros(n: int, m: Optional[int] = None) -> Matrix:
    m = n if m is None else m
    return [[Fraction(0)] * m for _ in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    return [[sum((a[i][k] * bt[j][k] for k in range(inner)), Fraction(0))
             for j in range(cols)] for i in range(rows)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c: Fraction) -> Matrix:
    return [[x * c for x in row] for row in a]


def mat_neg(a: Matrix) -> Matrix:
    return [[-x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(row) for row in zip(*a)]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def mat_inv(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(a)
    aug = [list(row) + ident for row, ident in zip(a, identity(n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [list(row) for row in a]
    out = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            out = -out
        out *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return out


def check_special_orthogonal(a: Matrix) -> None:
    n = len(a)
    if any(len(row) != n for row in a):
        raise NotOrthogonal("matrix is not square")
    if mat_mul(transpose(a), a) != identity(n):
        raise NotOrthogonal("A^T A != Id")
    if det(a) != 1:
        raise NotOrthogonal("det A != 1")


# -- exact orthogonal generators ---------------------------------------------

def cayley_so(skew: Matrix) -> Matrix:
    """(I - S)(I + S)^(-1) for skew S: always in SO(n), rational in S."""
    n = len(skew)
    eye = identity(n)
    return mat_mul(mat_sub(eye, skew), mat_inv(mat_add(eye, skew)))


def givens(n: int, i: int, j: int, c: Fraction, s: Fraction) -> Matrix:
    """Rotation by (c, s) with c^2 + s^2 = 1 in the (i, j) plane, 1-based."""
    if c * c + s * s != 1:
        raise NotOrthogonal(f"({c}, {s}) is not on the unit circle")
    g = identity(n)
    g[i - 1][i - 1] = c
    g[j - 1][j - 1] = c
    g[i - 1][j - 1] = -s
    g[j - 1][i - 1] = s
    return g


def rational_cos_sin(t: Fraction) -> Tuple[Fraction, Fraction]:
    """The rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the unit circle."""
    d = 1 + t * t
    return (1 - t * t) / d, 2 * t / d


def random_skew(n: int, rng: random.Random, bound: int = 3) -> Matrix:
    s = zeros(n)
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            s[i][j] = v
            s[j][i] = -v
    return s


def random_so_matrix(n: int, rng: random.Random, bound: int = 3) -> Matrix:
    return cayley_so(random_skew(n, rng, bound))


def random_unit_vector(n: int, rng: random.Random, support: int = 3) -> Vector:
    """Exact unit vector built by chaining rational plane rotations onto a
    basis vector.  Support is kept small so denominators stay moderate."""
    coords = rng.sample(range(n), k=min(support, n))
    v: Vector = [Fraction(0)] * n
    v[coords[0]] = Fraction(1)
    for j in coords[1:]:
        t = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        c, s = rational_cos_sin(t)
        a, b = v[coords[0]], v[j]
        v[coords[0]], v[j] = c * a - s * b, s * a + c * b
    assert sum(x * x for x in v) == 1
    return v
