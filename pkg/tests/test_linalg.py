import random
from fractions import Fraction as F

import pytest

from spinor_forge.errors import NotOrthogonal
from spinor_forge.linalg import (
    RowReducer,
    cayley_so,
    check_special_orthogonal,
    det,
    givens,
    identity,
    mat_inv,
    mat_mul,
    nullspace,
    random_skew,
    random_so_matrix,
    random_unit_vector,
    rank,
    rational_cos_sin,
    span_contains,
    spans_equal,
    transpose,
)


def random_matrix(rows, cols, rng, bound=4):
    return [[F(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(cols)]
            for _ in range(rows)]


def plain_gauss_rank(rows):
    """Independent rank oracle: straightforward elimination over Fraction."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return r


def test_rank_matches_plain_gauss_oracle():
    rng = random.Random(0)
    for _ in range(30):
        rows = random_matrix(rng.randint(1, 8), rng.randint(1, 8), rng, bound=3)
        # inject dependent rows
        if len(rows) > 2 and rng.random() < 0.5:
            rows.append([a + b for a, b in zip(rows[0], rows[1])])
        assert rank(rows) == plain_gauss_rank(rows)


def test_nullspace_vectors_are_exact_kernel_elements():
    rng = random.Random(1)
    for _ in range(30):
        n_rows, n_cols = rng.randint(1, 7), rng.randint(1, 7)
        rows = random_matrix(n_rows, n_cols, rng, bound=3)
        basis = nullspace(rows, n_cols)
        assert len(basis) == n_cols - plain_gauss_rank(rows)
        for vec in basis:
            for row in rows:
                assert sum(a * b for a, b in zip(row, vec)) == 0
        assert rank(basis) == len(basis)


def test_span_membership_and_equality():
    a = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
    b = [[F(1), F(1), F(2)], [F(1), F(-1), F(0)]]
    assert spans_equal(a, b)
    assert span_contains(a, [F(2), F(3), F(5)])
    assert not span_contains(a, [F(0), F(0), F(1)])
    assert not spans_equal(a, [[F(1), F(0), F(0)]])


def test_row_reducer_incremental():
    red = RowReducer(3)
    assert red.add([F(1), F(2), F(3)])
    assert not red.add([F(2), F(4), F(6)])
    assert red.add([F(0), F(1), F(0)])
    assert red.rank == 2


def test_mat_inv_and_det():
    rng = random.Random(2)
    for _ in range(10):
        n = rng.randint(1, 5)
        a = random_matrix(n, n, rng, bound=3)
        if det(a) == 0:
            continue
        assert mat_mul(a, mat_inv(a)) == identity(n)
    assert det([[F(2), F(0)], [F(0), F(3)]]) == 6
    assert det([[F(0), F(1)], [F(1), F(0)]]) == -1


def test_cayley_transform_lands_in_so():
    rng = random.Random(3)
    for n in (2, 3, 5, 7):
        a = cayley_so(random_skew(n, rng))
        check_special_orthogonal(a)


def test_givens_and_pythagorean_pairs():
    g = givens(4, 1, 3, F(3, 5), F(4, 5))
    check_special_orthogonal(g)
    with pytest.raises(NotOrthogonal):
        givens(4, 1, 3, F(1, 2), F(1, 2))
    c, s = rational_cos_sin(F(1, 2))
    assert c * c + s * s == 1


def test_check_special_orthogonal_rejects_reflections():
    refl = [[F(1), F(0)], [F(0), F(-1)]]
    with pytest.raises(NotOrthogonal):
        check_special_orthogonal(refl)


def test_random_unit_vectors_are_exact():
    rng = random.Random(4)
    for n in (2, 3, 7, 8):
        for _ in range(5):
            v = random_unit_vector(n, rng)
            assert sum(x * x for x in v) == 1


def test_random_so_matrix_orthogonal():
    rng = random.Random(5)
    a = random_so_matrix(4, rng)
    assert mat_mul(transpose(a), a) == identity(4)
    assert det(a) == 1
