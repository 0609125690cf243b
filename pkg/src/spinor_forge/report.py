"""The regression/acceptance report: one row per verifiable claim.

Each criterion function recomputes its claim from scratch (catalog
constructors are resolved at call time) and returns a row with the expected
value, the computed value and an exact pass/fail.  The CLI `report` verb and
the acceptance test suite both consume these rows.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import catalog
from .analysis import (
    AmbientElement,
    ambient_annihilates,
    annihilator,
    check_pure,
    check_reducing,
    check_spinc_pure,
    cl_dims,
    commutant,
    equivariance_check,
    even_clifford_verify,
    frame_rotation_check,
    pairs,
)
from .forms import eta, eta_hat, spinc_form_untwisted
from .linalg import random_so_matrix, random_unit_vector, span_contains, spans_equal
from .scalars import gr
from .spinrep import FormTerm, all_basis_indices, basis_spinor
from .twisted import (
    ScaledSpinor,
    form_action_on_spin_slot,
    twist_bivector_action,
    twisted_hermitian,
)


@dataclass(frozen=True)
class CriterionRow:
    name: str
    expected: str
    computed: str
    passed: bool


def _row(name: str, expected: str, computed: str, passed: bool) -> CriterionRow:
    return CriterionRow(name=name, expected=expected, computed=computed, passed=passed)


def criterion_spin7_eta_table() -> CriterionRow:
    ent = catalog.build_spin7_pure()
    good = sum(
        1 for pair, expect in ent.expected_etas.items()
        if eta(ent.spinor, *pair).mat == expect.mat
    )
    return _row(
        "spin7_eta_table",
        "21/21 rows exactly equal",
        f"{good}/21 rows exactly equal",
        good == 21,
    )


def criterion_purity_certificates() -> CriterionRow:
    results: Dict[str, bool] = {}
    results["pure(spin7_pure)"] = check_pure(catalog.build_spin7_pure().spinor).is_pure
    for m in (1, 2, 3):
        results[f"pure(qk m={m})"] = check_pure(catalog.build_qk_pure(m).spinor).is_pure
    results["reducing(spin7_reducing)"] = check_reducing(
        catalog.build_spin7_reducing().spinor).is_reducing
    for n in range(2, 9):
        results[f"reducing(generic n={n})"] = check_reducing(
            catalog.build_generic_reducing(n).spinor).is_reducing
    bad = [k for k, v in results.items() if not v]
    return _row(
        "purity_certificates",
        "12/12 certificates true",
        f"{len(results) - len(bad)}/12 true" + (f"; failed: {bad}" if bad else ""),
        not bad,
    )


def criterion_g2_recovery() -> CriterionRow:
    phi1 = catalog.build_spin7_pure().spinor
    phi2 = catalog.build_spin7_reducing().spinor
    alg = annihilator([phi1, phi2])
    gens = catalog.g2_generators()
    span_ok = spans_equal([x.flat() for x in alg.basis], [x.flat() for x in gens])
    return _row(
        "g2_recovery",
        "dim=14, closed, span equals the 14 listed generators",
        f"dim={alg.dim}, closed={alg.closed}, span_equal={span_ok}",
        alg.dim == 14 and alg.closed and span_ok,
    )


def criterion_spin7_annihilators() -> CriterionRow:
    a1 = annihilator([catalog.build_spin7_pure().spinor])
    a2 = annihilator([catalog.build_spin7_reducing().spinor])
    return _row(
        "spin7_annihilators",
        "both dim=21 and closed",
        f"pure: dim={a1.dim} closed={a1.closed}; "
        f"reducing: dim={a2.dim} closed={a2.closed}",
        a1.dim == 21 and a1.closed and a2.dim == 21 and a2.closed,
    )


def criterion_qk_stabilizer() -> CriterionRow:
    parts: List[str] = []
    ok = True
    for m in (1, 2, 3):
        ent = catalog.build_qk_pure(m)
        phi = ent.spinor
        alg = annihilator([phi])
        rows = [x.flat() for x in alg.basis]
        want = m * (2 * m + 1) + 3
        betas_ok = True
        for tf in catalog.beta_forms(m):
            amb = AmbientElement(phi.n, 3, {(a, b): c for a, b, c in tf.terms()}, {})
            if amb.is_zero():
                continue
            if not (ambient_annihilates(amb, phi) and span_contains(rows, amb.flat())):
                betas_ok = False
        etas_ok = True
        for (k, l) in pairs(3):
            form = eta(phi, k, l)
            amb = AmbientElement(
                phi.n, 3,
                {(a, b): c for a, b, c in form.terms()},
                {(k, l): Fraction(2)},
            )
            if not (ambient_annihilates(amb, phi) and span_contains(rows, amb.flat())):
                etas_ok = False
        ok = ok and alg.dim == want and alg.closed and betas_ok and etas_ok
        parts.append(f"m={m}: dim={alg.dim}/{want} closed={alg.closed} "
                     f"betas={betas_ok} eta+2f={etas_ok}")
    return _row(
        "qk_stabilizer_algebra",
        "dims 6/13/24, closed, contain all beta forms and all (eta_kl + 2 f_kl)",
        "; ".join(parts),
        ok,
    )


def criterion_generic_reducing() -> CriterionRow:
    ok = True
    notes: List[str] = []
    for n in range(2, 9):
        ent = catalog.build_generic_reducing(n)
        phi = ent.spinor
        raw = ScaledSpinor(phi.n, phi.r, phi.m, phi.coeffs, Fraction(1))
        factor = Fraction(2 ** (n // 2))
        eta_ok = True
        eq_ok = True
        for (p, q) in pairs(n):
            form = eta(raw, p, q)
            if form.terms() != [(p, q, factor)]:
                eta_ok = False
            defect = form_action_on_spin_slot([FormTerm((p, q))], phi) + \
                twist_bivector_action(p, q, phi)
            if not defect.is_zero():
                eq_ok = False
        ok = ok and eta_ok and eq_ok
        notes.append(f"n={n}:{'ok' if (eta_ok and eq_ok) else 'FAIL'}")
    return _row(
        "generic_reducing_family",
        "raw eta_pq = 2^floor(n/2) e_p^e_q and e_pe_q.phi + kappa(f_pq).phi = 0, n=2..8",
        " ".join(notes),
        ok,
    )


def _random_spinor(n: int, r: int, m: int, rng: random.Random) -> ScaledSpinor:
    spin_idx = all_basis_indices(n)
    twist_idx = all_basis_indices(r)
    coeffs = {}
    terms = rng.randint(3, 7)
    for _ in range(terms):
        spin = rng.choice(spin_idx)
        twist = tuple(rng.choice(twist_idx) for _ in range(m))
        coeffs[(spin, twist)] = gr(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
        )
    phi = ScaledSpinor(n, r, m, coeffs, Fraction(rng.randint(1, 4), rng.randint(1, 4)))
    if phi.is_zero():
        coeffs[(spin_idx[0], tuple(twist_idx[0] for _ in range(m)))] = gr(1)
        phi = ScaledSpinor(n, r, m, coeffs, phi.scale2)
    return phi


def _random_vector(n: int, rng: random.Random) -> List[Fraction]:
    return [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]


def criterion_vanishing_identities() -> CriterionRow:
    shapes = [(4, 3, 1), (8, 3, 2), (8, 7, 1), (6, 3, 1)]
    rng = random.Random(20250810)
    per_shape = 50
    checked = 0
    failures = 0
    for (n, r, m) in shapes:
        quads = [(a, b, c, d)
                 for a in range(1, n + 1) for b in range(a + 1, n + 1)
                 for c in range(b + 1, n + 1) for d in range(c + 1, n + 1)]
        for _ in range(per_shape):
            phi = _random_spinor(n, r, m, rng)
            s2 = phi.scale2
            x = _random_vector(n, rng)
            y = _random_vector(n, rng)
            xy_dot = sum(a * b for a, b in zip(x, y))
            x_phi = form_action_on_spin_slot(
                [FormTerm((j,), c) for j, c in enumerate(x, 1) if c], phi)
            y_phi = form_action_on_spin_slot(
                [FormTerm((j,), c) for j, c in enumerate(y, 1) if c], phi)
            # X ^ Y acts as X.Y + <X,Y>
            xy_phi = form_action_on_spin_slot(
                [FormTerm((j,), c) for j, c in enumerate(x, 1) if c], y_phi) + \
                phi.scale(gr(xy_dot))
            norm = twisted_hermitian(phi, phi).re
            # (2) Re<X^Y phi, phi> = 0 ; (4) Re<X phi, Y phi> = <X,Y>|phi|^2
            if twisted_hermitian(xy_phi, phi).re != 0:
                failures += 1
            if twisted_hermitian(x_phi, y_phi).re != xy_dot * norm:
                failures += 1
            for (k, l) in pairs(r):
                fphi = twist_bivector_action(k, l, phi)
                fphi_s = ScaledSpinor(n, r, m, fphi.coeffs, s2)
                # (1) Re<kappa(f_kl) phi, phi> = 0
                if twisted_hermitian(fphi_s, phi).re != 0:
                    failures += 1
                # (3) Im<X^Y kappa(f_kl) phi, phi> = 0
                xy_f_phi = form_action_on_spin_slot(
                    [FormTerm((j,), c) for j, c in enumerate(x, 1) if c],
                    form_action_on_spin_slot(
                        [FormTerm((j,), c) for j, c in enumerate(y, 1) if c], fphi_s),
                ) + fphi_s.scale(gr(xy_dot))
                if twisted_hermitian(xy_f_phi, phi).im != 0:
                    failures += 1
                # (5) Re<e_abcd kappa(f_kl) phi, phi> = 0 on sampled quadruples
                for quad in rng.sample(quads, k=min(3, len(quads))):
                    e4 = form_action_on_spin_slot([FormTerm(quad)], fphi_s)
                    if twisted_hermitian(e4, phi).re != 0:
                        failures += 1
            checked += 1
    return _row(
        "vanishing_identity_suite",
        f"5 identities exact on >= 200 random spinors (got {checked})",
        f"{checked} spinors checked, {failures} identity failures",
        checked >= 200 and failures == 0,
    )


def _hat_family(phi: ScaledSpinor) -> Dict[tuple, "object"]:
    return {(k, l): eta_hat(eta(phi, k, l)) for (k, l) in pairs(phi.r)}


def criterion_hat_commutators() -> CriterionRow:
    ok = True
    notes: List[str] = []
    cases = [("spin7_pure", catalog.build_spin7_pure().spinor),
             ("qk m=1", catalog.build_qk_pure(1).spinor),
             ("qk m=2", catalog.build_qk_pure(2).spinor)]
    for label, phi in cases:
        fam = _hat_family(phi)
        rel = even_clifford_verify(fam)
        comm_ok = True
        full = dict(fam)
        for (k, l), h in list(fam.items()):
            full[(l, k)] = -h
        r = phi.r
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                for k in range(1, r + 1):
                    if len({i, j, k}) != 3:
                        continue
                    lhs = full[(i, j)].commutator(full[(j, k)])
                    if lhs.mat != full[(i, k)].scale(Fraction(-2)).mat:
                        comm_ok = False
        ok = ok and rel.ok and comm_ok
        notes.append(f"{label}: relations={rel.ok} commutators={comm_ok}")
    return _row(
        "hat_commutator_identities",
        "[h_ij, h_jk] = -2 h_ik, disjoint commute, chained anticommute, product chain",
        "; ".join(notes),
        ok,
    )


def criterion_frame_equivariance() -> CriterionRow:
    rng = random.Random(424242)
    ok = True
    rot_count = 0
    equi_count = 0
    for label, phi in (("spin7_pure", catalog.build_spin7_pure().spinor),
                       ("qk m=1", catalog.build_qk_pure(1).spinor)):
        for _ in range(10):
            a = random_so_matrix(phi.r, rng, bound=2)
            if not frame_rotation_check(phi, a, "pure"):
                ok = False
            rot_count += 1
        for _ in range(5):
            g = [random_unit_vector(phi.n, rng) for _ in range(2)]
            h = [random_unit_vector(phi.r, rng) for _ in range(2)]
            if not equivariance_check(phi, g, h, "pure"):
                ok = False
            equi_count += 1
    return _row(
        "frame_and_equivariance",
        "verdicts invariant under 20 frame rotations and 10 group elements",
        f"{rot_count} rotations and {equi_count} group elements, invariant={ok}",
        ok and rot_count == 20 and equi_count == 10,
    )


def criterion_spinc_case() -> CriterionRow:
    ok = True
    notes: List[str] = []
    for half in (2, 3):
        n = 2 * half
        psi = basis_spinor(n, (1,) * (n // 2))
        verdict = check_spinc_pure(psi)
        form = spinc_form_untwisted(psi)
        hat = eta_hat(form)
        minus_j0 = [[Fraction(0)] * n for _ in range(n)]
        for a in range(half):
            minus_j0[2 * a][2 * a + 1] = Fraction(1)
            minus_j0[2 * a + 1][2 * a] = Fraction(-1)
        j0_ok = hat.mat == minus_j0
        ok = ok and verdict and j0_ok
        notes.append(f"n={half}: check={verdict} hat=-J0:{j0_ok}")
    return _row(
        "spinc_special_case",
        "(eta + n sqrt(-1)).phi = 0 and hat = -J0 for the top basis spinor, n=2,3",
        "; ".join(notes),
        ok,
    )


_TABLE2 = {
    1: (lambda r: 2 ** (r // 2), 1),
    2: (lambda r: 2 ** (r // 2), 1),
    3: (lambda r: 2 ** (r // 2 + 1), 1),
    4: (lambda r: 2 ** (r // 2), 2),
    5: (lambda r: 2 ** (r // 2 + 1), 1),
    6: (lambda r: 2 ** (r // 2), 1),
    7: (lambda r: 2 ** (r // 2), 1),
    8: (lambda r: 2 ** (r // 2 - 1), 2),
}


def criterion_rep_constants() -> CriterionRow:
    table_ok = True
    for r in range(1, 17):
        residue = ((r - 1) % 8) + 1
        d_fn, v = _TABLE2[residue]
        got = cl_dims(r)
        if got.d_r != d_fn(r) or got.v_r != v:
            table_ok = False
    phi1 = catalog.build_spin7_pure().spinor
    d1, _ = commutant([eta_hat(eta(phi1, k, l)) for (k, l) in pairs(7)], True)
    qk = catalog.build_qk_pure(1).spinor
    d2, _ = commutant([eta_hat(eta(qk, k, l)) for (k, l) in pairs(3)], True)
    ok = table_ok and d1 == 0 and d2 == 3
    return _row(
        "representation_constants",
        "dimension table rows r=1..16; skew commutant dims 0 (rank 7) and 3 (qk m=1)",
        f"table={table_ok}, commutant(spin7)={d1}, commutant(qk m=1)={d2}",
        ok,
    )


def criterion_qk_recursion() -> CriterionRow:
    results = {m: catalog.eta13_recursion_check(m) for m in (1, 2, 3)}
    return _row(
        "qk_ladder_recursion",
        "eta13 . psi_j = -2[(j+1) psi_(j+1) + (j-1-m) psi_(j-1)] for m=1,2,3",
        ", ".join(f"m={m}:{v}" for m, v in results.items()),
        all(results.values()),
    )


CRITERIA: List[Callable[[], CriterionRow]] = [
    criterion_spin7_eta_table,
    criterion_purity_certificates,
    criterion_g2_recovery,
    criterion_spin7_annihilators,
    criterion_qk_stabilizer,
    criterion_generic_reducing,
    criterion_vanishing_identities,
    criterion_hat_commutators,
    criterion_frame_equivariance,
    criterion_spinc_case,
    criterion_rep_constants,
    criterion_qk_recursion,
]


def report_all(max_workers: Optional[int] = None) -> List[CriterionRow]:
    """Run every criterion; row order is fixed regardless of execution order.

    Parallelism is capped by ``max_workers`` (default: the
    SPINOR_FORGE_THREADS environment variable, else serial)."""
    if max_workers is None:
        max_workers = int(os.environ.get("SPINOR_FORGE_THREADS", "1"))
    if max_workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(lambda f: f(), CRITERIA))
    return [f() for f in CRITERIA]
