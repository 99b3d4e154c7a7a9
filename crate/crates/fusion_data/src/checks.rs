//! The Biedenharn-Elliott identity and the orthonormality relation, checked
//! exactly on every label tuple.

use tvk_scalars::{Cyclotomic, Matrix};

use crate::tensor::{Contraction, Tensor};
use crate::{FusionData, Label};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub tuple: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: &'static str,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A 6j factor with one variable per slot.
struct Piece<'a> {
    t: Option<&'a Tensor>,
    tri: [[Label; 3]; 4],
    vars: [usize; 4],
}

fn piece<'a>(f: &'a FusionData, t: [Label; 6], first_var: usize) -> Piece<'a> {
    Piece { t: f.sixj(t), tri: f.vertex_triples(t), vars: [first_var, first_var + 1, first_var + 2, first_var + 3] }
}

/// Contract the pieces along `links` = (piece, slot, piece, slot); the first
/// named slot carries the triple whose inverse pairing is used.
fn contract(
    f: &FusionData,
    pieces: &[Piece],
    links: &[(usize, usize, usize, usize)],
    outputs: &[(usize, usize)],
) -> Tensor {
    let out_dims: Vec<usize> = outputs.iter().map(|&(p, s)| f.n(pieces[p].tri[s])).collect();
    if pieces.iter().any(|p| p.t.is_none()) {
        return Tensor::zeros(out_dims);
    }
    let mut c = Contraction::new();
    for p in pieces {
        c.factor(p.t.unwrap(), p.vars.to_vec());
    }
    for &(p, s, q, r) in links {
        let w: &Matrix = f.omega_inv(pieces[p].tri[s]).expect("admissible slot");
        c.weight(w, pieces[p].vars[s], pieces[q].vars[r]);
    }
    let outs: Vec<usize> = outputs.iter().map(|&(p, s)| pieces[p].vars[s]).collect();
    c.eval(&outs)
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

/// Σ_z dim(z) ∗∗∗ (|i z* b; m n k| ⊗ |z j* c; l m k| ⊗ |i j* a*; c* b z*|)
/// = ∗ (|i j* a*; l n k| ⊗ |n l* a*; c* b m*|).
pub fn check_pentagon(f: &FusionData) -> CheckReport {
    let d = |x: Label| f.dual(x);
    let adm = |t: [Label; 3]| f.n(t) > 0;
    let mut checked = 0;
    let mut failures = Vec::new();
    let labels: Vec<Label> = f.labels().collect();
    for &i in &labels {
        for &j in &labels {
            for &a in &labels {
                if !adm([d(j), i, a]) {
                    continue;
                }
                for &k in &labels {
                    for &n in &labels {
                        if !adm([n, d(i), d(k)]) {
                            continue;
                        }
                        for &l in &labels {
                            if !adm([k, j, d(l)]) {
                                continue;
                            }
                            for &m in &labels {
                                for &b in &labels {
                                    if !adm([m, b, d(n)]) {
                                        continue;
                                    }
                                    for &c in &labels {
                                        if !adm([l, c, d(m)]) || !adm([d(c), d(a), d(b)]) {
                                            continue;
                                        }
                                        checked += 1;
                                        let lhs = pentagon_lhs(f, [a, b, c, i, j, k, l, m, n]);
                                        let rhs = pentagon_rhs(f, [a, b, c, i, j, k, l, m, n]);
                                        if lhs != rhs {
                                            failures.push(Failure {
                                                tuple: [a, b, c, i, j, k, l, m, n]
                                                    .iter()
                                                    .map(|&x| f.label_name(x).to_string())
                                                    .collect(),
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    CheckReport { identity: "Biedenharn-Elliott", checked, failures }
}

fn pentagon_lhs(f: &FusionData, [a, b, c, i, j, k, l, m, n]: [Label; 9]) -> Tensor {
    let d = |x: Label| f.dual(x);
    let mut acc: Option<Tensor> = None;
    for z in f.labels() {
        let p = [
            piece(f, [i, d(z), b, m, n, k], 0),
            piece(f, [z, d(j), c, l, m, k], 4),
            piece(f, [i, d(j), d(a), d(c), b, d(z)], 8),
        ];
        let t = contract(
            f,
            &p,
            &[(0, C, 1, A), (1, B, 2, C), (2, A, 0, B)],
            &[(0, A), (2, B), (1, C), (0, D), (1, D), (2, D)],
        )
        .scale(f.dim(z));
        match acc.as_mut() {
            None => acc = Some(t),
            Some(x) => x.add_assign(&t),
        }
    }
    acc.unwrap()
}

fn pentagon_rhs(f: &FusionData, [a, b, c, i, j, k, l, m, n]: [Label; 9]) -> Tensor {
    let d = |x: Label| f.dual(x);
    let p = [piece(f, [i, d(j), d(a), l, n, k], 0), piece(f, [n, d(l), d(a), d(c), b, d(m)], 4)];
    // open slots in the same order as the left side
    contract(f, &p, &[(0, D, 1, B)], &[(0, A), (0, B), (0, C), (1, A), (1, C), (1, D)])
}

/// dim(m) Σ_z dim(z) ∗∗ (|i z k; l m n| ⊗ |z* i* k*; m' l n|)
/// = δ_{m,m'} ω_{m*,n,i} ⊗ ω_{l*,m,k*}.
pub fn check_orthonormality(f: &FusionData) -> CheckReport {
    let d = |x: Label| f.dual(x);
    let adm = |t: [Label; 3]| f.n(t) > 0;
    let mut checked = 0;
    let mut failures = Vec::new();
    let labels: Vec<Label> = f.labels().collect();
    for &i in &labels {
        for &n in &labels {
            for &m in &labels {
                if !adm([m, d(i), d(n)]) {
                    continue;
                }
                for &k in &labels {
                    for &l in &labels {
                        if !adm([l, k, d(m)]) {
                            continue;
                        }
                        for &m2 in &labels {
                            if !adm([n, i, d(m2)]) || !adm([m2, d(k), d(l)]) {
                                continue;
                            }
                            checked += 1;
                            let lhs = ortho_lhs(f, [i, k, l, m, m2, n]);
                            let rhs = ortho_rhs(f, [i, k, l, m, m2, n]);
                            if lhs != rhs {
                                failures.push(Failure {
                                    tuple: [i, k, l, m, m2, n].iter().map(|&x| f.label_name(x).to_string()).collect(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    CheckReport { identity: "orthonormality", checked, failures }
}

fn ortho_lhs(f: &FusionData, [i, k, l, m, m2, n]: [Label; 6]) -> Tensor {
    let d = |x: Label| f.dual(x);
    let mut acc: Option<Tensor> = None;
    for z in f.labels() {
        let p = [piece(f, [i, z, k, l, m, n], 0), piece(f, [d(z), d(i), d(k), m2, l, n], 4)];
        let t = contract(f, &p, &[(0, B, 1, B), (1, A, 0, C)], &[(0, A), (0, D), (1, C), (1, D)])
            .scale(&(f.dim(z) * f.dim(m)));
        match acc.as_mut() {
            None => acc = Some(t),
            Some(x) => x.add_assign(&t),
        }
    }
    acc.unwrap()
}

fn ortho_rhs(f: &FusionData, [i, k, l, m, m2, n]: [Label; 6]) -> Tensor {
    let d = |x: Label| f.dual(x);
    let dims = vec![f.n([m, d(i), d(n)]), f.n([l, k, d(m)]), f.n([n, i, d(m2)]), f.n([m2, d(k), d(l)])];
    let mut out = Tensor::zeros(dims.clone());
    if m != m2 {
        return out;
    }
    let w1 = f.omega([d(i), d(n), m]).expect("admissible");
    let w2 = f.omega([k, d(m), l]).expect("admissible");
    crate::tensor::for_each_index(&dims, |idx| {
        let v: Cyclotomic = &w1[(idx[2], idx[0])] * &w2[(idx[3], idx[1])];
        out.set(idx, v);
    });
    out
}
