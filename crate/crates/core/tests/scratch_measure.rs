//! Temporary measurement harness (deleted before finalizing).

use spdroot::{invariants_from_tensor, polar_decompose, stretch_invariants, u_from_c, uinv_from_c, Mat64};
use spdroot_oracle::{gen, spectral_sqrt};

#[test]
#[ignore]
fn measure_error_scaling() {
    let mut rng = gen::rng(999);
    for dim in [2usize, 3, 4, 5, 6] {
        for cond in [1e2, 1e4, 1e6] {
            let (mut wu2, mut wuor, mut wuui, mut wrtr) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
            for _ in 0..40 {
                let c = gen::random_spd(dim, cond, &mut rng);
                let inv = invariants_from_tensor(&c).unwrap();
                let si = stretch_invariants(&inv).unwrap();
                let u = u_from_c(&c, &inv, &si).unwrap();
                let ui = uinv_from_c(&c, &inv, &si).unwrap();
                let uor = spectral_sqrt(&c).unwrap();
                wu2 = wu2.max(u.square().sub(&c).frobenius_norm() / c.frobenius_norm());
                wuor = wuor.max(u.sub(&uor).frobenius_norm() / uor.frobenius_norm());
                let id = Mat64::identity(dim).unwrap();
                wuui = wuui.max(u.to_mat().mul_sym(&ui).sub(&id).frobenius_norm());

                let f = gen::random_deformation(dim, cond, &mut rng);
                let pf = polar_decompose(&f).unwrap();
                wrtr = wrtr.max(pf.r.transpose().mul(&pf.r).sub(&id).frobenius_norm());
            }
            println!(
                "dim {dim} cond {cond:>7.0e}: U2C {wu2:.2e}  UvsOr {wuor:.2e}  UUi {wuui:.2e}  RtR {wrtr:.2e}"
            );
        }
    }
}
