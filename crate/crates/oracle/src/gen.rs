//! Seeded fixture generators: random rotations, SPD tensors with controlled
//! spectra, and deformation gradients with controlled condition number.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spdroot::{Mat, SymTensor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rotation as a product of Givens rotations (determinant +1).
pub fn random_rotation<R: Rng>(dim: usize, rng: &mut R) -> Mat<f64> {
    let mut q = Mat::identity(dim).expect("dim in 2..=6");
    for _ in 0..(2 * dim * dim) {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim - 1);
        if j >= i {
            j += 1;
        }
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let (s, c) = theta.sin_cos();
        for k in 0..dim {
            let (qki, qkj) = (q.get(k, i), q.get(k, j));
            q.set(k, i, c * qki - s * qkj);
            q.set(k, j, s * qki + c * qkj);
        }
    }
    q
}

/// Stretches log-uniform in [lo, hi].
pub fn random_stretches<R: Rng>(dim: usize, lo: f64, hi: f64, rng: &mut R) -> Vec<f64> {
    (0..dim)
        .map(|_| (rng.gen_range(lo.ln()..=hi.ln())).exp())
        .collect()
}

/// Q·diag(eigs)·Qᵀ for a random rotation Q, exactly symmetric.
pub fn spd_with_eigenvalues<R: Rng>(eigs: &[f64], rng: &mut R) -> SymTensor<f64> {
    let dim = eigs.len();
    let q = random_rotation(dim, rng);
    let mut out = SymTensor::zeros(dim).expect("dim in 2..=6");
    for i in 0..dim {
        for j in i..dim {
            let mut s = 0.0;
            for (k, &l) in eigs.iter().enumerate() {
                s += l * q.get(i, k) * q.get(j, k);
            }
            out.set(i, j, s);
        }
    }
    out
}

/// Random SPD tensor with eigenvalue ratio exactly `cond` (squared-stretch
/// spread); interior eigenvalues are log-uniform.
pub fn random_spd<R: Rng>(dim: usize, cond: f64, rng: &mut R) -> SymTensor<f64> {
    let eigs = spread_eigs(dim, cond, rng);
    spd_with_eigenvalues(&eigs, rng)
}

/// Random deformation gradient F = Q₁·diag(λ)·Q₂ᵀ with cond(FᵀF) = `cond`.
pub fn random_deformation<R: Rng>(dim: usize, cond: f64, rng: &mut R) -> Mat<f64> {
    let eigs = spread_eigs(dim, cond, rng);
    let q1 = random_rotation(dim, rng);
    let q2 = random_rotation(dim, rng);
    let mut f = Mat::zeros(dim).expect("dim in 2..=6");
    for i in 0..dim {
        for j in 0..dim {
            let mut s = 0.0;
            for (k, &l) in eigs.iter().enumerate() {
                s += q1.get(i, k) * l.sqrt() * q2.get(j, k);
            }
            f.set(i, j, s);
        }
    }
    f
}

fn spread_eigs<R: Rng>(dim: usize, cond: f64, rng: &mut R) -> Vec<f64> {
    let hi = cond.sqrt();
    let lo = 1.0 / hi;
    let mut eigs = vec![hi, lo];
    for _ in 2..dim {
        eigs.push(rng.gen_range(lo.ln()..=hi.ln()).exp());
    }
    eigs
}
