//! Deligne products: labels are pairs, and every piece of data is the
//! tensor product of the factors' data, with pair bases ordered so that the
//! second factor's index varies fastest.

use std::collections::HashMap;

use tvk_fusion_data::tensor::for_each_index;
use tvk_fusion_data::{CategoryData, FusionData, Label, Tensor};
use tvk_scalars::{Cyclotomic, Matrix};

use crate::ModularData;

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = &a[(i, j)] * &b[(k, l)];
                }
            }
        }
    }
    out
}

fn kron_tensor(a: &Tensor, b: &Tensor) -> Tensor {
    let dims: Vec<usize> = a.dims().iter().zip(b.dims()).map(|(x, y)| x * y).collect();
    let mut out = Tensor::zeros(dims);
    for_each_index(a.dims(), |ia| {
        for_each_index(b.dims(), |ib| {
            let idx: Vec<usize> = ia.iter().zip(ib).zip(b.dims()).map(|((x, y), d)| x * d + y).collect();
            out.set(&idx, a.get(ia) * b.get(ib));
        });
    });
    out
}

fn admissible_sixj(f: &FusionData) -> Vec<([Label; 6], &Tensor)> {
    let n = f.rank();
    let mut out = Vec::new();
    for code in 0..n.pow(6) {
        let mut c = code;
        let t: [Label; 6] = std::array::from_fn(|_| {
            let x = c % n;
            c /= n;
            x
        });
        if let Some(x) = f.sixj(t) {
            out.push((t, x));
        }
    }
    out
}

/// The Deligne product of two fusion categories. A pair is named `a.b`,
/// except the unit, which is `1`.
pub fn product_category(a: &FusionData, b: &FusionData, name: &str) -> FusionData {
    let nb = b.rank();
    let pair = |x: Label, y: Label| x * nb + y;
    let mut labels = Vec::new();
    let mut dual = Vec::new();
    let mut qdim = Vec::new();
    for x in a.labels() {
        for y in b.labels() {
            labels.push(if x == a.unit() && y == b.unit() {
                "1".to_string()
            } else {
                format!("{}.{}", a.label_name(x), b.label_name(y))
            });
            dual.push(pair(a.dual(x), b.dual(y)));
            qdim.push(a.dim(x) * b.dim(y));
        }
    }
    let mut triples = Vec::new();
    let mut omega = Vec::new();
    for x in 0..a.rank().pow(3) {
        let s = [x / (a.rank() * a.rank()), (x / a.rank()) % a.rank(), x % a.rank()];
        if a.n(s) == 0 {
            continue;
        }
        for y in 0..nb.pow(3) {
            let t = [y / (nb * nb), (y / nb) % nb, y % nb];
            if b.n(t) == 0 {
                continue;
            }
            let p = [pair(s[0], t[0]), pair(s[1], t[1]), pair(s[2], t[2])];
            triples.push((p, a.n(s) * b.n(t)));
            omega.push((p, kron(a.omega(s).expect("admissible"), b.omega(t).expect("admissible"))));
        }
    }
    let sb = admissible_sixj(b);
    let mut sixj = Vec::new();
    for (s, x) in admissible_sixj(a) {
        for (t, y) in &sb {
            let p: [Label; 6] = std::array::from_fn(|e| pair(s[e], t[e]));
            sixj.push((p, kron_tensor(x, y)));
        }
    }
    let data = CategoryData {
        name: name.to_string(),
        notes: vec![format!("Deligne product of {} and {}", a.name(), b.name())],
        labels,
        dual,
        qdim,
        triples,
        omega,
        sixj,
    };
    FusionData::new(data).expect("product of valid categories is valid")
}

fn product_modular(a: &ModularData, b: &ModularData, name: &str) -> ModularData {
    let (fa, fb) = (a.base(), b.base());
    let base = product_category(fa, fb, name);
    let nb = fb.rank();
    let mut rsym = HashMap::new();
    for (&[x, y, k], r) in a.rsym() {
        for (&[u, v, l], q) in b.rsym() {
            rsym.insert([x * nb + u, y * nb + v, k * nb + l], kron(r, q));
        }
    }
    let twist: Vec<Cyclotomic> = fa.labels().flat_map(|x| fb.labels().map(move |y| a.twist(x) * b.twist(y))).collect();
    ModularData::new(base, rsym, twist).expect("product of modular data is modular")
}

/// M ⊠ mirror(M).
pub fn deligne_square(m: &ModularData) -> ModularData {
    if m.base().rank() == 1 {
        return m.clone();
    }
    product_modular(m, &m.mirror(), &format!("{}-square", m.name()))
}
