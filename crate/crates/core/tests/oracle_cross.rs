//! Cross-checks of the closed-form pipeline against the independent spectral
//! oracle: invariants, square roots, inverses, and polar factors.

use rand::Rng;
use spdroot::{
    invariants_from_stretches, invariants_from_tensor, polar_decompose, stretch_invariants,
    u_from_c, uinv_from_c, Mat64, Stretches64, SymTensor64,
};
use spdroot_oracle::{
    gen, jacobi_eigen, luehr_rubin_projector, spectral_inv_sqrt, spectral_sqrt,
};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

fn random_gram(dim: usize, rng: &mut impl Rng) -> SymTensor64 {
    loop {
        let rows: Vec<Vec<f64>> = (0..dim)
            .map(|_| (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let f = Mat64::from_rows(&rows).unwrap();
        let c = f.gram();
        if c.is_positive_definite() {
            return c;
        }
    }
}

#[test]
fn tensor_invariants_match_oracle_eigenvalues() {
    let mut rng = gen::rng(101);
    for _ in 0..50 {
        let c = random_gram(5, &mut rng);
        let inv = invariants_from_tensor(&c).unwrap();
        let eig = jacobi_eigen(&c).unwrap();
        let want = spdroot_oracle::esym(&eig.values);
        for (got, want) in inv.values().iter().zip(want) {
            assert!(rel(*got, want) <= 1e-10, "got {got}, want {want}");
        }
    }
}

#[test]
fn characteristic_polynomial_residual_at_oracle_eigenvalues() {
    let mut rng = gen::rng(102);
    for dim in 2..=6 {
        for _ in 0..20 {
            let c = gen::random_spd(dim, 100.0, &mut rng);
            let inv = invariants_from_tensor(&c).unwrap();
            let eig = jacobi_eigen(&c).unwrap();
            for &x in &eig.values {
                let mut acc = 1.0;
                let mut sign = -1.0;
                for k in 1..=dim {
                    acc = acc * x + sign * inv.at(k);
                    sign = -sign;
                }
                assert!(
                    acc.abs() <= 1e-9 * x.powi(dim as i32).max(1.0),
                    "dim {dim}: residual {acc:.3e} at x={x}"
                );
            }
        }
    }
}

#[test]
fn tensor_route_agrees_with_stretch_route() {
    // integer fixture: exact agreement
    let s = Stretches64::new(&[3.0, 2.0, 1.0]).unwrap();
    let from_stretches = invariants_from_stretches(&s);
    let diag = SymTensor64::diag(&[9.0, 4.0, 1.0]).unwrap();
    let from_tensor = invariants_from_tensor(&diag).unwrap();
    assert_eq!(from_stretches.values(), from_tensor.values());

    // generic values: 1e-12 relative
    let mut rng = gen::rng(103);
    for dim in 2..=6 {
        let lam = gen::random_stretches(dim, 0.5, 2.0, &mut rng);
        let s = Stretches64::new(&lam).unwrap();
        let sq: Vec<f64> = s.values().iter().map(|l| l * l).collect();
        let c = SymTensor64::diag(&sq).unwrap();
        let a = invariants_from_stretches(&s);
        let b = invariants_from_tensor(&c).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!(rel(*x, *y) <= 1e-12);
        }
    }
}

#[test]
fn determinant_equals_last_invariant() {
    let mut rng = gen::rng(104);
    for dim in 2..=6 {
        let c = gen::random_spd(dim, 1e3, &mut rng);
        let inv = invariants_from_tensor(&c).unwrap();
        assert!(rel(c.det(), inv.at(dim)) <= 1e-12);
    }
}

#[test]
fn stretch_invariant_round_trip_closed_forms() {
    // 500 random stretch vectors per closed-form dimension
    let mut rng = gen::rng(105);
    for dim in 2..=4 {
        for _ in 0..500 {
            let lam = gen::random_stretches(dim, 0.1, 10.0, &mut rng);
            let s = Stretches64::new(&lam).unwrap();
            let inv = invariants_from_stretches(&s);
            let si = stretch_invariants(&inv).unwrap();
            let want = spdroot_oracle::esym(s.values());
            for (got, want) in si.values().iter().zip(want) {
                assert!(rel(*got, want) <= 1e-9, "dim {dim}: got {got}, want {want}");
            }
        }
    }
}

#[test]
fn stretch_invariant_round_trip_high_dims() {
    let mut rng = gen::rng(106);
    for dim in [5, 6] {
        for _ in 0..200 {
            let lam = gen::random_stretches(dim, 0.1, 10.0, &mut rng);
            let s = Stretches64::new(&lam).unwrap();
            let inv = invariants_from_stretches(&s);
            let si = stretch_invariants(&inv).unwrap();
            let want = spdroot_oracle::esym(s.values());
            for (got, want) in si.values().iter().zip(want) {
                assert!(rel(*got, want) <= 1e-9, "dim {dim}: got {got}, want {want}");
            }
        }
    }
}

#[test]
fn square_root_matches_oracle_per_dimension() {
    let mut rng = gen::rng(107);
    for dim in 2..=6 {
        let tol = if dim <= 4 { 1e-9 } else { 1e-7 };
        for _ in 0..25 {
            let c = gen::random_spd(dim, 1e4, &mut rng);
            let inv = invariants_from_tensor(&c).unwrap();
            let si = stretch_invariants(&inv).unwrap();
            let u = u_from_c(&c, &inv, &si).unwrap();
            let want = spectral_sqrt(&c).unwrap();
            let diff = u.sub(&want).frobenius_norm();
            assert!(
                diff <= tol * want.frobenius_norm(),
                "dim {dim}: ‖U − oracle‖ = {diff:.3e}"
            );
            let resid = u.square().sub(&c).frobenius_norm();
            assert!(resid <= tol * c.frobenius_norm(), "dim {dim}: U² residual {resid:.3e}");
        }
    }
}

#[test]
fn dim6_rotated_integer_spectrum() {
    let mut rng = gen::rng(108);
    let c = gen::spd_with_eigenvalues(&[1.0, 4.0, 9.0, 16.0, 25.0, 36.0], &mut rng);
    let inv = invariants_from_tensor(&c).unwrap();
    let si = stretch_invariants(&inv).unwrap();
    let u = u_from_c(&c, &inv, &si).unwrap();
    let eig = jacobi_eigen(&u).unwrap();
    for (got, want) in eig.values.iter().zip([6.0, 5.0, 4.0, 3.0, 2.0, 1.0]) {
        assert!((got - want).abs() <= 1e-7 * want, "got {got}, want {want}");
    }
}

#[test]
fn inverse_root_matches_oracle_dim5() {
    let mut rng = gen::rng(109);
    for _ in 0..10 {
        let c = gen::random_spd(5, 1e3, &mut rng);
        let inv = invariants_from_tensor(&c).unwrap();
        let si = stretch_invariants(&inv).unwrap();
        let u_inv = uinv_from_c(&c, &inv, &si).unwrap();
        let want = spectral_inv_sqrt(&c).unwrap();
        let diff = u_inv.sub(&want).frobenius_norm();
        assert!(diff <= 1e-8 * want.frobenius_norm(), "‖U⁻¹ − oracle‖ = {diff:.3e}");
    }
}

#[test]
fn inverse_root_times_root_is_identity() {
    let mut rng = gen::rng(110);
    for dim in 2..=6 {
        let c = gen::random_spd(dim, 1e4, &mut rng);
        let inv = invariants_from_tensor(&c).unwrap();
        let si = stretch_invariants(&inv).unwrap();
        let u = u_from_c(&c, &inv, &si).unwrap();
        let u_inv = uinv_from_c(&c, &inv, &si).unwrap();
        let prod = u.to_mat().mul_sym(&u_inv);
        let id = Mat64::identity(dim).unwrap();
        let resid = prod.sub(&id).frobenius_norm();
        assert!(resid <= 1e-9, "dim {dim}: ‖U·U⁻¹ − I‖ = {resid:.3e}");
    }
}

#[test]
fn root_commutes_with_input() {
    let mut rng = gen::rng(111);
    for dim in 2..=6 {
        let c = gen::random_spd(dim, 1e4, &mut rng);
        let inv = invariants_from_tensor(&c).unwrap();
        let si = stretch_invariants(&inv).unwrap();
        let u = u_from_c(&c, &inv, &si).unwrap();
        let uc = u.to_mat().mul_sym(&c);
        let cu = c.to_mat().mul_sym(&u);
        let resid = uc.sub(&cu).frobenius_norm();
        assert!(
            resid <= 1e-10 * c.frobenius_norm() * u.frobenius_norm(),
            "dim {dim}: commutator {resid:.3e}"
        );
    }
}

#[test]
fn smallest_root_eigenvalue_is_positive() {
    let mut rng = gen::rng(112);
    for dim in 2..=6 {
        let c = gen::random_spd(dim, 1e5, &mut rng);
        let inv = invariants_from_tensor(&c).unwrap();
        let si = stretch_invariants(&inv).unwrap();
        let u = u_from_c(&c, &inv, &si).unwrap();
        let eig = jacobi_eigen(&u).unwrap();
        assert!(eig.values[dim - 1] > 0.0, "dim {dim}: U not SPD");
    }
}

#[test]
fn polar_factors_are_valid() {
    let mut rng = gen::rng(113);
    for dim in 2..=6 {
        for _ in 0..10 {
            let f = gen::random_deformation(dim, 1e4, &mut rng);
            let pf = polar_decompose(&f).unwrap();
            let id = Mat64::identity(dim).unwrap();
            let rtr = pf.r.transpose().mul(&pf.r).sub(&id).frobenius_norm();
            assert!(rtr <= 1e-9, "dim {dim}: ‖RᵀR − I‖ = {rtr:.3e}");
            if f.det() > 0.0 {
                assert!(pf.r.det() > 0.0, "dim {dim}: R flips orientation");
            }
            let recon = pf.r.mul_sym(&pf.u).sub(&f).frobenius_norm();
            assert!(recon <= 1e-9 * f.frobenius_norm(), "dim {dim}: ‖RU − F‖ = {recon:.3e}");
        }
    }
}

#[test]
fn polar_on_random_dim6_matches_oracle_invariants() {
    let mut rng = gen::rng(114);
    let mut accepted = 0;
    while accepted < 10 {
        let rows: Vec<Vec<f64>> = (0..6)
            .map(|_| (0..6).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let f = Mat64::from_rows(&rows).unwrap();
        let pf = match polar_decompose(&f) {
            Ok(pf) => pf,
            Err(_) => continue, // near-singular draw
        };
        accepted += 1;
        let c = f.gram();
        let eig = jacobi_eigen(&c).unwrap();
        let lam: Vec<f64> = eig.values.iter().map(|l| l.sqrt()).collect();
        let want = spdroot_oracle::esym(&lam);
        let inv = invariants_from_tensor(&c).unwrap();
        let si = stretch_invariants(&inv).unwrap();
        for (got, want) in si.values().iter().zip(want) {
            assert!(rel(*got, want) <= 1e-8, "got {got}, want {want}");
        }
        let resid = pf.u.square().sub(&c).frobenius_norm();
        assert!(resid <= 1e-7 * c.frobenius_norm());
    }
}

#[test]
fn luehr_rubin_matches_jacobi_eigenvectors() {
    let mut rng = gen::rng(115);
    for _ in 0..20 {
        let c = gen::random_spd(3, 50.0, &mut rng);
        let eig = jacobi_eigen(&c).unwrap();
        let vals = [eig.values[0], eig.values[1], eig.values[2]];
        let mut sum = SymTensor64::zeros(3).unwrap();
        for k in 0..3 {
            let p = luehr_rubin_projector(&c, k, vals).unwrap();
            // compare against v_k v_kᵀ
            for i in 0..3 {
                for j in 0..3 {
                    let want = eig.vectors.get(i, k) * eig.vectors.get(j, k);
                    assert!((p.get(i, j) - want).abs() <= 1e-9, "projector {k} mismatch");
                }
            }
            // idempotent
            let pp = p.square().sub(&p).frobenius_norm();
            assert!(pp <= 1e-9);
            sum = sum.add(&p);
        }
        let id = SymTensor64::identity(3).unwrap();
        assert!(sum.sub(&id).frobenius_norm() <= 1e-9);
    }
}

#[test]
fn oracle_self_consistency() {
    let mut rng = gen::rng(116);
    // V Λ Vᵀ reconstruction on a random symmetric (not necessarily SPD) tensor
    let mut a = SymTensor64::zeros(6).unwrap();
    for i in 0..6 {
        for j in i..6 {
            a.set(i, j, rng.gen_range(-2.0..2.0));
        }
    }
    let eig = jacobi_eigen(&a).unwrap();
    let mut recon = Mat64::zeros(6).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            let mut s = 0.0;
            for k in 0..6 {
                s += eig.values[k] * eig.vectors.get(i, k) * eig.vectors.get(j, k);
            }
            recon.set(i, j, s);
        }
    }
    let resid = recon.sub(&a.to_mat()).frobenius_norm();
    assert!(resid <= 1e-11 * a.frobenius_norm().max(1.0));

    // spectral sqrt squares back to C
    let c = gen::random_spd(5, 1e3, &mut rng);
    let u = spectral_sqrt(&c).unwrap();
    assert!(u.square().sub(&c).frobenius_norm() <= 1e-11 * c.frobenius_norm());
}
