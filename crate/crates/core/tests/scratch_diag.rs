//! Temporary diagnosis harness (deleted before finalizing).

use spdroot::{
    identity_residuals, invariants_from_tensor, stretch_invariants, u_from_c, uinv_from_c,
    SymTensor64,
};
use spdroot_oracle::{gen, jacobi_eigen, spectral_sqrt};

#[test]
#[ignore]
fn diagnose_dim6() {
    let mut rng = gen::rng(4242);
    let mut worst: Option<(f64, SymTensor64)> = None;
    for _ in 0..40 {
        let c = gen::random_spd(6, 1e4, &mut rng);
        let inv = invariants_from_tensor(&c).unwrap();
        let si = stretch_invariants(&inv).unwrap();
        let u = u_from_c(&c, &inv, &si).unwrap();
        let r = u.square().sub(&c).frobenius_norm() / c.frobenius_norm();
        if worst.as_ref().map_or(true, |(w, _)| r > *w) {
            worst = Some((r, c));
        }
    }
    let (wr, c) = worst.unwrap();
    println!("worst U2C residual: {wr:.3e}");

    let inv = invariants_from_tensor(&c).unwrap();
    let si = stretch_invariants(&inv).unwrap();
    let eig = jacobi_eigen(&c).unwrap();
    let lam: Vec<f64> = eig.values.iter().map(|v| v.sqrt()).collect();
    println!("lam = {lam:?}");
    let want_i = spdroot_oracle::esym(&lam);
    for (k, (got, want)) in si.values().iter().zip(&want_i).enumerate() {
        println!(
            "i{}: got {got:.16e} want {want:.16e} rel {:.2e}",
            k + 1,
            (got - want).abs() / want.abs()
        );
    }
    println!("identity residuals (rel):");
    for (k, (r, s)) in identity_residuals(&inv, si.values()).iter().enumerate() {
        println!("  k={}: {:.2e}", k + 1, (r / s).abs());
    }
    // residual with ORACLE i-vector (perfect i, same reconstruction formulas)
    let si_or = spdroot::StretchInvariants64::test_only_new(&want_i, si.route());
    let u_or_i = u_from_c(&c, &inv, &si_or).unwrap();
    let r_or = u_or_i.square().sub(&c).frobenius_norm() / c.frobenius_norm();
    println!("U2C with oracle i-vector: {r_or:.3e}");
    let u = u_from_c(&c, &inv, &si).unwrap();
    println!(
        "U2C with computed i-vector: {:.3e}",
        u.square().sub(&c).frobenius_norm() / c.frobenius_norm()
    );
    let uor = spectral_sqrt(&c).unwrap();
    println!(
        "U2C of spectral oracle itself: {:.3e}",
        uor.square().sub(&c).frobenius_norm() / c.frobenius_norm()
    );
    let ui = uinv_from_c(&c, &inv, &si_or).unwrap();
    let id = spdroot::Mat64::identity(6).unwrap();
    println!(
        "UUi with oracle i-vector: {:.3e}",
        u_or_i.to_mat().mul_sym(&ui).sub(&id).frobenius_norm()
    );
}
