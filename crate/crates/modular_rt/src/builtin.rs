//! Braided structures on the shipped multiplicity-free categories.

use std::collections::HashMap;

use tvk_fusion_data::builtin::{fibonacci, ising};
use tvk_fusion_data::{FusionData, Label};
use tvk_scalars::{int, zeta, Cyclotomic, Matrix};

use crate::ModularData;

fn assemble(f: FusionData, twist: Vec<Cyclotomic>, r: impl Fn(Label, Label, Label) -> Cyclotomic) -> ModularData {
    let mut rsym = HashMap::new();
    for a in f.labels() {
        for b in f.labels() {
            for k in f.labels() {
                if f.n([f.dual(b), f.dual(a), k]) > 0 {
                    let v = if a == f.unit() || b == f.unit() { int(1) } else { r(a, b, k) };
                    rsym.insert([a, b, k], Matrix::scalar(v));
                }
            }
        }
    }
    ModularData::new(f, rsym, twist).expect("builtin braiding is valid")
}

/// Fibonacci: v_tau = e^{4πi/5}, R(tau, tau, 1) = e^{-4πi/5},
/// R(tau, tau, tau) = e^{3πi/5}.
pub fn fibonacci_modular() -> ModularData {
    assemble(fibonacci(), vec![int(1), zeta(5, 2)], |_, _, k| if k == 0 { zeta(5, 3) } else { zeta(10, 3) })
}

/// Ising: v_sigma = e^{πi/8}, v_psi = -1, R(sigma, sigma, 1) = e^{-πi/8},
/// R(sigma, sigma, psi) = e^{3πi/8}, R(psi, psi, 1) = -1 and -i between
/// sigma and psi.
pub fn ising_modular() -> ModularData {
    assemble(ising(), vec![int(1), zeta(16, 1), int(-1)], |a, b, k| match (a, b, k) {
        (1, 1, 0) => zeta(16, -1),
        (1, 1, 2) => zeta(16, 3),
        (2, 2, 0) => int(-1),
        _ => zeta(4, -1),
    })
}

/// Builtin modular data by name: `fibonacci`, `ising`, and the Deligne
/// squares `fibonacci-square`, `ising-square`.
pub fn by_name(name: &str) -> Option<ModularData> {
    match name {
        "fibonacci" => Some(fibonacci_modular()),
        "ising" => Some(ising_modular()),
        "fibonacci-square" => Some(crate::deligne_square(&fibonacci_modular())),
        "ising-square" => Some(crate::deligne_square(&ising_modular())),
        _ => None,
    }
}
