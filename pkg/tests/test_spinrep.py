import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from spinor_forge.errors import IndexOutOfRange, NotUnitVector, OddLength
from spinor_forge.linalg import random_unit_vector
from spinor_forge.scalars import gr
from spinor_forge.spinrep import (
    FormTerm,
    SpinorVector,
    all_basis_indices,
    basis_spinor,
    clifford_action,
    gamma_apply,
    hermitian,
    kappa_generator,
    spin_action_on_spinor,
    spin_action_on_vector,
    spinor_dim_exponent,
)

# ---------------------------------------------------------------------------
# Dense Kronecker oracle.  Independent of the lazy walker: materializes the
# generator matrices from the 2x2 blocks and works in standard coordinates,
# using the unnormalized basis vectors (1, -i) and (1, i) so everything stays
# in Q(i).

ID = [[gr(1), gr(0)], [gr(0), gr(1)]]
G1 = [[gr(0, 1), gr(0)], [gr(0), gr(0, -1)]]
G2 = [[gr(0), gr(0, 1)], [gr(0, 1), gr(0)]]
T = [[gr(0), gr(0, -1)], [gr(0, 1), gr(0)]]


def kron(a, b):
    na, nb = len(a), len(b)
    return [
        [a[i // nb][j // nb] * b[i % nb][j % nb] for j in range(na * nb)]
        for i in range(na * nb)
    ]


def dense_generator(n, i):
    k = spinor_dim_exponent(n)
    if n % 2 == 1 and i == n:
        mat = [[gr(1)]]
        for _ in range(k):
            mat = kron(mat, T)
        return [[gr(0, 1) * x for x in row] for row in mat]
    j = (i + 1) // 2
    factors = [ID] * (k - j) + [G1 if i % 2 == 1 else G2] + [T] * (j - 1)
    mat = [[gr(1)]]
    for f in factors:
        mat = kron(mat, f)
    return mat


def u_raw(eps):
    """sqrt(2)^k * u_eps in standard coordinates; entries in Z[i]."""
    vec = [gr(1)]
    for s in eps:
        last = gr(0, -s)  # -i for +1, +i for -1
        vec = [c * x for c in vec for x in (gr(1), last)]
    # careful: kron of vectors: (v (x) w)_ij = v_i w_j, index i*2+j
    return vec


def u_raw_correct(eps):
    vec = [gr(1)]
    for s in eps:
        w = [gr(1), gr(0, -s)]
        vec = [a * b for a in vec for b in w]
    return vec


def dense_apply(mat, vec):
    return [sum((mat[i][j] * vec[j] for j in range(len(vec))), gr(0))
            for i in range(len(vec))]


def dense_to_sparse(n, vec):
    """Expand a standard-coordinates vector over the unnormalized basis."""
    k = spinor_dim_exponent(n)
    coeffs = {}
    for eps in all_basis_indices(n):
        ue = u_raw_correct(eps)
        val = sum((a * b.conj() for a, b in zip(vec, ue)), gr(0))
        c = val * F(1, 2 ** k)
        if c:
            coeffs[eps] = c
    return coeffs


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_lazy_generator_matches_dense_oracle(n):
    for i in range(1, n + 1):
        mat = dense_generator(n, i)
        for eps in all_basis_indices(n):
            got = kappa_generator(n, i, basis_spinor(n, eps)).coeffs
            want = dense_to_sparse(n, dense_apply(mat, u_raw_correct(eps)))
            assert got == want, (n, i, eps)


# ---------------------------------------------------------------------------
# Pinned small cases (hand-multiplied 2x2 blocks).

def test_generator_examples():
    # g1 against (1, -i)/sqrt(2) gives i * (1, i)/sqrt(2)
    assert kappa_generator(2, 1, basis_spinor(2, (1,))).coeffs == {(-1,): gr(0, 1)}
    # e1(e1 u) = -u
    twice = kappa_generator(2, 1, kappa_generator(2, 1, basis_spinor(2, (1,))))
    assert twice.coeffs == {(1,): gr(-1)}
    # i*T = [[0,1],[-1,0]] against (1,-i)/sqrt(2) gives (-i,-1)/sqrt(2) = -i u_+
    assert kappa_generator(3, 3, basis_spinor(3, (1,))).coeffs == {(1,): gr(0, -1)}


def test_generator_index_range():
    with pytest.raises(IndexOutOfRange):
        kappa_generator(4, 5, basis_spinor(4, (1, 1)))


def test_clifford_relations_all_basis_spinors():
    for n in range(2, 11):
        for eps in all_basis_indices(n):
            b = basis_spinor(n, eps)
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    lhs = kappa_generator(n, i, kappa_generator(n, j, b)) + \
                        kappa_generator(n, j, kappa_generator(n, i, b))
                    if i == j:
                        assert lhs.coeffs == b.scale(gr(-2)).coeffs
                    else:
                        assert lhs.is_zero()


def test_clifford_action_examples():
    rng = random.Random(1)
    psi = SpinorVector(4, {
        eps: gr(F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
        for eps in all_basis_indices(4)
    })
    # e_i e_j + e_j e_i kills everything for i != j
    out = clifford_action(4, [FormTerm((1, 3)), ], psi) + \
        clifford_action(4, [FormTerm((1, 3))], psi).scale(gr(0))
    anti = clifford_action(4, [FormTerm((1, 3))], psi)
    swapped = kappa_generator(4, 3, kappa_generator(4, 1, psi))
    assert (anti + swapped).is_zero()
    # empty product = identity
    assert clifford_action(4, [FormTerm(())], psi).coeffs == psi.coeffs
    # composite product equals composed generator calls
    quad = clifford_action(4, [FormTerm((1, 2, 3, 4))], psi)
    byhand = psi
    for g in (4, 3, 2, 1):
        byhand = kappa_generator(4, g, byhand)
    assert quad.coeffs == byhand.coeffs


def test_hermitian_orthonormal_basis():
    assert hermitian(basis_spinor(2, (1,)), basis_spinor(2, (1,))) == gr(1)
    assert hermitian(basis_spinor(2, (1,)), basis_spinor(2, (-1,))) == gr(0)


def test_hermitian_skew_symmetry_example():
    up, dn = basis_spinor(2, (1,)), basis_spinor(2, (-1,))
    lhs = hermitian(kappa_generator(2, 1, up), dn)
    rhs = hermitian(up, kappa_generator(2, 1, dn))
    assert lhs == gr(0, 1)
    assert rhs == -lhs


def test_hermitian_skew_symmetry_random():
    rng = random.Random(5)
    for n in (3, 5, 6):
        psi1 = SpinorVector(n, {
            eps: gr(rng.randint(-3, 3), rng.randint(-3, 3))
            for eps in rng.sample(all_basis_indices(n), min(3, 2 ** (n // 2)))
        })
        psi2 = SpinorVector(n, {
            eps: gr(rng.randint(-3, 3), rng.randint(-3, 3))
            for eps in rng.sample(all_basis_indices(n), min(3, 2 ** (n // 2)))
        })
        for x in range(1, n + 1):
            lhs = hermitian(kappa_generator(n, x, psi1), psi2)
            rhs = hermitian(psi1, kappa_generator(n, x, psi2))
            assert lhs + rhs == gr(0)


coeff_st = st.fractions(min_value=-8, max_value=8, max_denominator=6)


@st.composite
def spinors(draw, n=4):
    idx = all_basis_indices(n)
    picks = draw(st.lists(st.sampled_from(idx), min_size=1, max_size=4))
    coeffs = {}
    for eps in picks:
        coeffs[eps] = gr(draw(coeff_st), draw(coeff_st))
    return SpinorVector(n, coeffs)


@given(spinors(), spinors())
def test_hermitian_sesquilinear(psi1, psi2):
    c = gr(F(2, 3), F(-1, 2))
    assert hermitian(psi1.scale(c), psi2) == c * hermitian(psi1, psi2)
    assert hermitian(psi1, psi2.scale(c)) == hermitian(psi1, psi2) * c.conj()
    assert hermitian(psi1, psi2) == hermitian(psi2, psi1).conj()


@given(spinors(), st.integers(min_value=1, max_value=4))
def test_generator_skew_and_square(psi, i):
    # kappa(e_i)^2 = -Id and <e_i psi, psi> is purely imaginary
    assert kappa_generator(4, i, kappa_generator(4, i, psi)).coeffs == \
        psi.scale(gr(-1)).coeffs
    assert hermitian(kappa_generator(4, i, psi), psi).re == 0


def test_gamma_small_case():
    assert gamma_apply(2, basis_spinor(2, (1,))).coeffs == {(-1,): gr(0, -1)}


def test_gamma_antilinear():
    c = gr(F(2, 3), F(-1, 5))
    psi = basis_spinor(4, (1, -1)).scale(c)
    assert gamma_apply(4, psi).coeffs == \
        gamma_apply(4, basis_spinor(4, (1, -1))).scale(c.conj()).coeffs


@pytest.mark.parametrize("n,sign", [
    (1, 1), (2, -1), (3, -1), (4, -1), (5, -1),
    (6, 1), (7, 1), (8, 1), (9, 1), (10, -1),
])
def test_gamma_square_signs(n, sign):
    for eps in all_basis_indices(n):
        b = basis_spinor(n, eps)
        assert gamma_apply(n, gamma_apply(n, b)).coeffs == b.scale(gr(sign)).coeffs


def test_spin_action_repeated_vector_is_minus_one():
    rng = random.Random(9)
    x = random_unit_vector(4, rng)
    psi = basis_spinor(4, (1, -1))
    assert spin_action_on_spinor(4, [x, x], psi).coeffs == psi.scale(gr(-1)).coeffs


def test_spin_action_g1g2_eigenvector():
    # g1 g2 = [[0,-1],[1,0]] sends u_+ to i u_+
    out = spin_action_on_spinor(2, [[1, 0], [0, 1]], basis_spinor(2, (1,)))
    assert out.coeffs == {(1,): gr(0, 1)}


def test_spin_action_norm_preservation():
    rng = random.Random(11)
    for n in (3, 4, 5):
        vectors = [random_unit_vector(n, rng) for _ in range(4)]
        psi = SpinorVector(n, {
            eps: gr(rng.randint(-2, 2), rng.randint(-2, 2))
            for eps in rng.sample(all_basis_indices(n), min(3, 2 ** (n // 2)))
        })
        moved = spin_action_on_spinor(n, vectors, psi)
        assert hermitian(moved, moved) == hermitian(psi, psi)


def test_spin_action_validation():
    psi = basis_spinor(4, (1, 1))
    with pytest.raises(NotUnitVector):
        spin_action_on_spinor(4, [[1, 1, 0, 0], [1, 0, 0, 0]], psi)
    with pytest.raises(OddLength):
        spin_action_on_spinor(4, [[1, 0, 0, 0]], psi)


def test_vector_action_identity_rotation():
    rng = random.Random(13)
    x = random_unit_vector(5, rng)
    v = [F(3), F(-1), F(2), F(0), F(7)]
    assert spin_action_on_vector(5, [x, x], v) == v


def test_vector_action_is_isometry():
    rng = random.Random(17)
    vectors = [random_unit_vector(6, rng) for _ in range(4)]
    v = [F(rng.randint(-5, 5)) for _ in range(6)]
    w = [F(rng.randint(-5, 5)) for _ in range(6)]
    gv = spin_action_on_vector(6, vectors, v)
    gw = spin_action_on_vector(6, vectors, w)
    assert sum(a * b for a, b in zip(gv, gw)) == sum(a * b for a, b in zip(v, w))


def test_equivariance_of_clifford_multiplication():
    rng = random.Random(19)
    for n in (3, 4):
        vectors = [random_unit_vector(n, rng) for _ in range(2)]
        x = [F(rng.randint(-3, 3)) for _ in range(n)]
        psi = SpinorVector(n, {
            eps: gr(rng.randint(-2, 2), rng.randint(-2, 2))
            for eps in rng.sample(all_basis_indices(n), min(2, 2 ** (n // 2)))
        })
        x_psi = clifford_action(n, [FormTerm((j,), c) for j, c in enumerate(x, 1) if c], psi)
        lhs = spin_action_on_spinor(n, vectors, x_psi)
        gx = spin_action_on_vector(n, vectors, x)
        g_psi = spin_action_on_spinor(n, vectors, psi)
        rhs = clifford_action(n, [FormTerm((j,), c) for j, c in enumerate(gx, 1) if c], g_psi)
        assert lhs.coeffs == rhs.coeffs
