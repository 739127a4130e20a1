"""Acceptance suite: one test per criterion, each printing a pass line.

Every tolerance is fixed here; the whole module runs at desk scale.
"""

import itertools
import math
import time

import numpy as np
import pytest

from adskg import specfun
from adskg.ads_complex_structure import (
    apply_J,
    boost_recurrence_residual,
    candidate_jab,
    candidate_jfactors,
    check_conditions,
    diagonal_boost_mismatch,
    diagonal_jfactors,
    g_rho,
)
from adskg.ads_modes import (
    AdSParams,
    omega_rho,
    radial_eval,
    radial_eval_deriv,
    radial_wronskian,
    random_real_mode_vector,
)
from adskg.flux import ads_combined_mode, mode_flux
from adskg.geometry import Signature, killing_field, killing_residual, structure_check
from adskg.harmonics import (
    MultiIndex,
    SphericalPoint,
    all_indices,
    eval_harmonic,
    eval_harmonic_dcos,
    harmonic_fn,
    harmonic_gram,
    ladder_coeffs,
    multi_indices,
    rotate_coeffs,
    rotation_matrix_zyz,
    sphere_inner,
    to_angles,
    to_cartesian,
    wigner_block_euler,
    wigner_block_quadrature,
)
from adskg.structures import (
    FiniteSymplecticSpace,
    SampledField,
    classify_subspace,
    g_inner_from_J,
    polarization_project,
    theta_omega_quadrature,
)


def ok(num, text):
    print(f"criterion {num:2d} PASS: {text}")


def random_chain(rng, d, l):
    levels = [l]
    for _ in range(d - 3):
        levels.append(int(rng.integers(0, levels[-1] + 1)))
    m = int(rng.integers(-levels[-1], levels[-1] + 1))
    return MultiIndex(tuple(levels), m)


def random_angles(rng, d):
    return tuple(list(rng.uniform(0.25, math.pi - 0.25, size=d - 2)) + [rng.uniform(0.0, 2 * math.pi)])


def test_criterion_1_orthonormality():
    t0 = time.time()
    for d in (3, 4, 5):
        idx = all_indices(d, 4)
        gram = harmonic_gram(d, idx, order=24)
        dev = np.abs(gram - np.eye(len(idx))).max()
        assert dev <= 1e-8, (d, dev)
    # the same order-24 quadrature through the generic callable route
    rng = np.random.default_rng(1)
    for d, n_pairs in ((3, 8), (4, 6), (5, 3)):
        idx = all_indices(d, 4)
        for _ in range(n_pairs):
            la, lb = (int(v) for v in rng.choice(len(idx), size=2, replace=False))
            val = sphere_inner(d, harmonic_fn(d, idx[la]), harmonic_fn(d, idx[lb]), order=24)
            assert abs(val) <= 1e-8
        ii = int(rng.integers(len(idx)))
        val = sphere_inner(d, harmonic_fn(d, idx[ii]), harmonic_fn(d, idx[ii]), order=24)
        assert abs(val - 1.0) <= 1e-8
    elapsed = time.time() - t0
    assert elapsed < 5.0, f"orthonormality took {elapsed:.1f} s"
    ok(1, f"orthonormality delta to 1e-8 for d in 3..5, l <= 4 ({elapsed:.2f} s)")


def test_criterion_2_contiguous_relations():
    rng = np.random.default_rng(2)
    for d in (3, 4, 5, 6):
        for l in range(6):
            for _ in range(100):
                L = random_chain(rng, d, l)
                p = SphericalPoint(d, random_angles(rng, d))
                lsub = L.levels[1] if d > 3 else abs(L.m)
                lc = ladder_coeffs(d, l, lsub)
                up = MultiIndex((l + 1,) + L.levels[1:], L.m)
                x = math.cos(p.angles[0])
                lhs = x * eval_harmonic(d, L, p)
                rhs = lc.chi_plus * eval_harmonic(d, up, p)
                dlhs = (1.0 - x * x) * eval_harmonic_dcos(d, L, p)
                drhs = lc.delta_plus * eval_harmonic(d, up, p)
                if lc.chi_minus != 0.0:
                    down = MultiIndex((l - 1,) + L.levels[1:], L.m)
                    rhs += lc.chi_minus * eval_harmonic(d, down, p)
                    drhs += lc.delta_minus * eval_harmonic(d, down, p)
                assert abs(lhs - rhs) <= 1e-10
                assert abs(dlhs - drhs) <= 1e-10
    for d in range(3, 9):
        for l in range(11):
            for lsub in range(l + 1):
                diff = abs(
                    ladder_coeffs(d, l + 1, lsub).chi_minus - ladder_coeffs(d, l, lsub).chi_plus
                )
                assert diff <= 1e-14
    ok(2, "contiguous relations and ladder identity across d <= 6, l <= 5")


def test_criterion_3_hankel_identities():
    import cmath

    for l in range(7):
        for x in np.linspace(0.5, 20.0, 60):
            x = float(x)
            h1 = specfun.radial_basis("h1", l, x)
            direct = cmath.exp(1j * x) * sum(
                (1j) ** (k - l - 1) * specfun.a_coeff(k, l) / x ** (k + 1) for k in range(l + 1)
            )
            scale = max(1.0, abs(h1))
            assert abs(h1 - direct) <= 1e-10 * scale
            j = specfun.radial_basis("j", l, x).real
            n = specfun.radial_basis("n", l, x).real
            assert abs(h1 - (j + 1j * n)) <= 1e-10 * scale
            assert abs(abs(h1) ** 2 - (j * j + n * n)) <= 1e-10 * abs(h1) ** 2
    for kind in ("j_evan", "n_evan"):
        for l in range(7):
            for x in (0.5, 1.0, 5.0, 20.0):
                assert specfun.radial_basis(kind, l, x).imag == 0.0
    ok(3, "hankel closed form, envelope, and real evanescent series, l <= 6")


def test_criterion_4_wigner_completeness_and_rotation():
    rng = np.random.default_rng(4)
    angles = (0.8, 1.1, -0.5)
    rot = rotation_matrix_zyz(*angles)
    for l in range(4):
        block = wigner_block_quadrature(3, l, rot.T, order=24)
        gram = block @ np.conj(block.T)
        assert np.abs(gram - np.eye(2 * l + 1)).max() <= 1e-8
        euler = wigner_block_euler(l, *angles)
        assert np.abs(block - euler).max() <= 1e-8
        labels = multi_indices(3, l)
        c = rng.normal(size=len(labels)) + 1j * rng.normal(size=len(labels))
        cp = rotate_coeffs(3, l, euler, c)
        for _ in range(20):
            p = SphericalPoint(3, random_angles(rng, 3))
            lhs = sum(cp[i] * eval_harmonic(3, L, p) for i, L in enumerate(labels))
            mapped = to_angles(rot @ to_cartesian(np.array(p.angles)))
            p2 = SphericalPoint(3, tuple(mapped))
            rhs = sum(c[i] * eval_harmonic(3, L, p2) for i, L in enumerate(labels))
            assert abs(lhs - rhs) <= 1e-8
    ok(4, "wigner completeness and pointwise rotation expansion, d=3, l <= 3")


def test_criterion_5_killing_exactness():
    for p, q in ((1, 3), (2, 3)):
        sig = Signature(p, q)
        for a in range(sig.n):
            for b in range(sig.n):
                res = killing_residual(sig, killing_field(sig, a, b))
                assert all(poly.is_zero() for row in res for poly in row)
        rep = structure_check(sig)
        assert rep.ok
        assert rep.n_generators == sig.n * (sig.n + 1) // 2
    ok(5, "killing equation and so(p,q)/poincare brackets exact for (1,3), (2,3)")


def test_criterion_6_wronskian():
    for d in (3, 5):
        for delta in (3.1, 4.2):
            p = AdSParams(d=d, Delta=delta)
            for omega in (0.0, 0.5, 1.3, 2.7):
                for l in (0, 1, 2, 3):
                    vals = [radial_wronskian(p, omega, l, rho) for rho in np.linspace(0.2, 1.0, 5)]
                    target = -(2.0 * l + d - 2.0)
                    drift = max(abs(v - vals[0]) for v in vals) / abs(vals[0])
                    assert drift <= 1e-8
                    assert abs(vals[0] - target) <= 1e-6 * abs(target)
    ok(6, "wronskian constant in rho and equal to -(2l + d - 2) on the full grid")


def test_criterion_7_complex_structure():
    rng = np.random.default_rng(7)
    p = AdSParams(3, 4.2)
    grid = [(w, l) for w in (0.5, 1.5, 2.5, -0.5, -1.5, -2.5) for l in range(4)]
    jf = candidate_jfactors(1, p, grid)
    rep = check_conditions(jf)
    assert rep.case == "nondiagonal" and rep.essential_ok
    assert max(rep.residuals.values()) <= 1e-10
    for _ in range(20):
        phi = random_real_mode_vector(3, [0.5, 1.5, 2.5], 3, rng)
        eta = random_real_mode_vector(3, [0.5, 1.5, 2.5], 3, rng)
        twice = apply_J(jf, apply_J(jf, phi))
        minus = phi.map_entries(lambda o, lv, m, a, b: (-a, -b))
        worst = max(
            max(abs(a1 - a2), abs(b1 - b2))
            for k in phi.entries
            for (a1, b1), (a2, b2) in [(twice.get(*k), minus.get(*k))]
        )
        assert worst <= 1e-10
        base = omega_rho(p, phi, eta)
        after = omega_rho(p, apply_J(jf, phi), apply_J(jf, eta))
        assert abs(after - base) <= 1e-10 * max(1.0, abs(base))
    for d in (3, 5):
        for delta in (3.7, 4.2):
            pp = AdSParams(d, delta)
            for which in (1, 2, 3, 4):
                jab = lambda w, ll: candidate_jab(which, pp, w, ll)
                for omega in (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0):
                    for l in (0, 1, 2, 3):
                        rm, rp = boost_recurrence_residual(pp, jab, omega, l)
                        scale = abs(jab(omega, l))
                        assert rm <= 1e-10 * scale
                        assert rp <= 1e-10 * scale
    ok(7, "nondiagonal conditions, J^2, omega-compatibility, boost recurrences")


def test_criterion_8_diagonal_case():
    rng = np.random.default_rng(8)
    p = AdSParams(3, 4.2)
    grid = [(w, l) for w in (0.5, 1.5, -0.5, -1.5) for l in range(3)]
    jd = diagonal_jfactors(grid)
    for _ in range(20):
        phi = random_real_mode_vector(3, [0.5, 1.5], 2, rng)
        assert abs(g_rho(p, jd, phi)) <= 1e-12
    for omega in np.linspace(0.01, 0.99, 25):
        assert diagonal_boost_mismatch(float(omega)) is True
    for omega in (1.0, 1.0 + 1e-12, 1.5, 7.0):
        assert diagonal_boost_mismatch(float(omega)) is False
    ok(8, "diagonal case: zero norm for real solutions, boost mismatch on (0,1)")


def test_criterion_9_flux():
    omega, mass = 2.0, 1.0
    p_r = math.sqrt(omega * omega - mass * mass)
    want = 2.0 * omega / p_r
    vals = []
    for r in (3.0, 5.0, 10.0):
        for l in (0, 1, 2):
            f = specfun.radial_basis("h1", l, p_r * r)
            df = p_r * specfun.radial_basis_deriv("h1", l, p_r * r)
            v = mode_flux("minkowski", {"d": 3}, omega, l, (f, df), rho=r)
            assert v.verdict == "outgoing"
            assert abs(v.flux_per_time - want) <= 1e-8 * want
            vals.append(v.flux_per_time)
    assert max(vals) - min(vals) <= 1e-8 * want
    p = AdSParams(3, 4.2, R=1.3)
    for w in (2.5, 3.5):
        for l in (0, 1, 2):
            f, df, pr2 = ads_combined_mode(p, w, l, 0.7)
            v = mode_flux("ads", p, w, l, (f, df), rho=0.7)
            want_ads = 4.0 * w * p.R ** (p.d - 1) / pr2
            assert abs(v.flux_per_time - want_ads) <= 1e-8 * want_ads
    for kind in ("j", "n"):
        f = specfun.radial_basis(kind, 1, p_r * 5.0)
        df = p_r * specfun.radial_basis_deriv(kind, 1, p_r * 5.0)
        assert mode_flux("minkowski", {"d": 3}, omega, 1, (f, df), rho=5.0).verdict == "standing"
    for channel in ("a", "b"):
        f = radial_eval(p, 2.5, 1, channel, 0.7)
        df = radial_eval_deriv(p, 2.5, 1, channel, 0.7)
        assert mode_flux("ads", p, 2.5, 1, (f, df), rho=0.7).verdict == "standing"
    ok(9, "hankel flux 2w/p (r-independent), combined AdS flux 4wR^(d-1)/p, standing reals")


def test_criterion_10_structures():
    rng = np.random.default_rng(10)
    while True:
        a = rng.normal(size=(6, 6))
        om = a - a.T
        if abs(np.linalg.det(om)) > 1e-6:
            break
    sp = FiniteSymplecticSpace(om)
    s = om.T @ om
    w_eig, v_eig = np.linalg.eigh(s)
    from adskg.structures import ComplexStructureMatrix

    J = ComplexStructureMatrix(sp, om @ (v_eig @ np.diag(w_eig**-0.5) @ v_eig.T))
    for _ in range(20):
        u = rng.normal(size=6) + 1j * rng.normal(size=6)
        v = rng.normal(size=6) + 1j * rng.normal(size=6)
        for sign in (1, -1):
            pu = polarization_project(J, sign, u)
            pv = polarization_project(J, sign, v)
            assert abs(sp.pairing(pu, pv)) <= 1e-10
        split = sp.pairing(
            polarization_project(J, 1, u), polarization_project(J, -1, v)
        ) + sp.pairing(polarization_project(J, -1, u), polarization_project(J, 1, v))
        assert abs(split - sp.pairing(u, v)) <= 1e-10
        _, cross = g_inner_from_J(
            sp, J, polarization_project(J, 1, u), polarization_project(J, -1, v)
        )
        assert abs(cross) <= 1e-10
        _, full = g_inner_from_J(sp, J, u, v)
        _, mp = g_inner_from_J(
            sp, J, polarization_project(J, -1, u), polarization_project(J, 1, v)
        )
        assert abs(mp - full) <= 1e-10

    def oracle(basis):
        basis = np.atleast_2d(basis)
        k = basis.shape[0]
        gram = basis @ sp.omega @ basis.T
        rank = np.linalg.matrix_rank(gram, tol=1e-8)
        radical = k - rank
        iso = rank == 0
        coiso = radical == sp.dim - k
        if iso and coiso:
            return "lagrangian"
        if iso:
            return "isotropic"
        if coiso:
            return "coisotropic"
        if radical == 0:
            return "symplectic"
        return "none"

    eye = np.eye(6)
    for r in range(1, 7):
        for subset in itertools.combinations(range(6), r):
            basis = eye[list(subset)]
            assert classify_subspace(sp, basis) == oracle(basis)

    n, length, e = 128, 2.0 * math.pi, 1.7
    xs = np.arange(n) * (length / n)
    k = 4.0
    eta = SampledField((length,), np.cos(-k * xs), -e * np.sin(-k * xs))
    zeta = SampledField((length,), np.sin(-k * xs), e * np.cos(-k * xs))
    _, om_val = theta_omega_quadrature(eta, zeta, orientation=1)
    assert abs(om_val.real - e * length / 2.0) <= 1e-6
    assert abs(om_val.imag) <= 1e-12
    ok(10, "polarization identities, subspace classifier vs oracle, plane-wave omega")
