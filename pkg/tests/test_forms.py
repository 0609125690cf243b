import random
from fractions import Fraction as F

import pytest

from spinor_forge.errors import IndexOutOfRange, WrongRank
from spinor_forge.forms import (
    TwoForm,
    eta,
    eta_hat,
    phi_extend,
    spinc_form,
    spinc_form_untwisted,
    two_form_from_terms,
)
from spinor_forge.linalg import random_so_matrix
from spinor_forge.scalars import gr
from spinor_forge.spinrep import basis_spinor
from spinor_forge.twisted import from_untwisted

from .test_twisted import random_scaled


def test_eta_diagonal_pair_is_zero():
    rng = random.Random(0)
    phi = random_scaled(4, 3, 1, rng)
    assert eta(phi, 2, 2).is_zero()


def test_eta_antisymmetric_in_pair_and_matrix():
    rng = random.Random(1)
    phi = random_scaled(4, 3, 2, rng)
    a = eta(phi, 1, 3)
    b = eta(phi, 3, 1)
    assert a.mat == [[-x for x in row] for row in b.mat]
    # constructor enforces antisymmetry of the matrix itself
    for i in range(4):
        for j in range(4):
            assert a.mat[i][j] == -a.mat[j][i]


def test_eta_index_range():
    rng = random.Random(2)
    phi = random_scaled(4, 3, 1, rng)
    with pytest.raises(IndexOutOfRange):
        eta(phi, 0, 2)


def test_eta_unit_scaling_invariance():
    rng = random.Random(3)
    phi = random_scaled(4, 3, 1, rng)
    for c in (gr(0, 1), gr(-1), gr(0, -1)):
        scaled = phi.scale(c)
        for (k, l) in ((1, 2), (1, 3), (2, 3)):
            assert eta(scaled, k, l).mat == eta(phi, k, l).mat


def test_eta_hat_rank2_block():
    omega = two_form_from_terms(2, {(1, 2): F(1)})
    h = eta_hat(omega)
    assert h.compose(h).is_minus_identity()
    # zero form gives the zero endomorphism
    z = eta_hat(TwoForm(2, [[F(0)] * 2 for _ in range(2)]))
    assert all(not x for row in z.mat for x in row)


def test_eta_hat_catalog_square():
    from spinor_forge.catalog import build_spin7_pure

    ent = build_spin7_pure()
    h = eta_hat(ent.expected_etas[(1, 2)])
    assert h.compose(h).is_minus_identity()


def test_phi_extend_basis_and_cancellation():
    rng = random.Random(4)
    phi = random_scaled(4, 3, 1, rng)
    assert phi_extend(phi, {(1, 2): F(1)}).mat == eta(phi, 1, 2).mat
    # f1^f2 + f2^f1 = 0
    both = phi_extend(phi, {(1, 2): F(1), (2, 1): F(1)})
    assert both.is_zero()


def test_phi_extend_rotated_frame_identity():
    rng = random.Random(5)
    phi = random_scaled(4, 3, 1, rng)
    a = random_so_matrix(3, rng)
    for k in range(1, 4):
        for l in range(k + 1, 4):
            coeffs = {}
            for s in range(1, 4):
                for t in range(s + 1, 4):
                    c = a[k - 1][s - 1] * a[l - 1][t - 1] - a[k - 1][t - 1] * a[l - 1][s - 1]
                    coeffs[(s, t)] = c
            rotated = phi_extend(phi, coeffs)
            # the rotated-bivector form is the linear combination of the etas
            expect = TwoForm(4, [[F(0)] * 4 for _ in range(4)])
            for (s, t), c in coeffs.items():
                expect = expect + eta(phi, s, t).scale(c)
            assert rotated.mat == expect.mat


def test_spinc_prototype_form_and_annihilation():
    # u_(1,1) in Delta_4
    psi = basis_spinor(4, (1, 1))
    form = spinc_form_untwisted(psi)
    assert form.terms() == [(1, 2, F(-1)), (3, 4, F(-1))]
    h = eta_hat(form)
    # -J0 has blocks [[0,1],[-1,0]] in operator convention
    expect = [[F(0)] * 4 for _ in range(4)]
    expect[0][1], expect[1][0] = F(1), F(-1)
    expect[2][3], expect[3][2] = F(1), F(-1)
    assert h.mat == expect
    # (eta + 2i) psi = 0
    from spinor_forge.spinrep import clifford_action

    d = clifford_action(4, form.form_terms(), psi) + psi.scale(gr(0, 2))
    assert d.is_zero()


def test_spinc_twisted_route_agrees_with_untwisted():
    from spinor_forge.spinrep import SpinorVector

    rng = random.Random(6)
    samples = [basis_spinor(4, (1, 1))]  # the prototype itself, then random
    for _ in range(5):
        coeffs = {
            eps: gr(rng.randint(-3, 3), rng.randint(-3, 3))
            for eps in [(1, 1), (1, -1), (-1, 1), (-1, -1)]
        }
        psi = SpinorVector(4, coeffs)
        if not psi.is_zero():
            samples.append(psi)
    for psi in samples:
        twisted = from_untwisted(psi, r=2, m=1, twist=((1,),))
        assert spinc_form(twisted).mat == spinc_form_untwisted(psi).mat


def test_spinc_form_wrong_rank():
    rng = random.Random(7)
    phi = random_scaled(4, 3, 1, rng)
    with pytest.raises(WrongRank):
        spinc_form(phi)
