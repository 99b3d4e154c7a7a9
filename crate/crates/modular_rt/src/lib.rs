//! Modular categories on top of fusion data: braiding, twists, the S matrix
//! and Gauss sums, framed link evaluation through braid closures, and the
//! Reshetikhin–Turaev invariant of surgery presentations.
//!
//! Braiding convention. For labels a, b and a channel k, `r(a, b, k)` maps
//! H(b*, a*, k) to H(a*, b*, k). Picture a vertex splitting an upward k
//! edge into a (left) and b (right); the positive crossing of the two legs,
//! left strand over, turns it into the vertex splitting k into b and a,
//! with its vector multiplied by the R matrix. Twists satisfy the balancing
//! relation r(b, a, k) r(a, b, k) = v_k / (v_a v_b).

pub mod braid;
pub mod builtin;
mod document;
mod product;
pub mod surgery;

use std::collections::HashMap;

use tvk_fusion_data::{FusionData, Label, LoadError};
use tvk_scalars::{Cyclotomic, Matrix};

pub use braid::{eval_braid_closure, Braid, BraidRep};
pub use product::{deligne_square, product_category};
pub use surgery::{rt_invariant, Surgery};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModularError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("invalid braiding data: {0}")]
    Data(String),
    #[error("not modular: {0}")]
    Modularity(String),
    #[error("anomalous data: Δ+ = {plus}, Δ- = {minus}")]
    Anomaly { plus: String, minus: String },
    #[error("invalid presentation: {0}")]
    Presentation(String),
}

#[derive(Clone, Debug)]
pub struct ModularData {
    base: FusionData,
    rsym: HashMap<[Label; 3], Matrix>,
    twist: Vec<Cyclotomic>,
    s: Matrix,
    delta: (Cyclotomic, Cyclotomic),
}

impl ModularData {
    /// Validate braiding data over `base`. `rsym` must hold a matrix for
    /// every (a, b, k) with H(b*, a*, k) nonzero.
    pub fn new(
        base: FusionData,
        rsym: HashMap<[Label; 3], Matrix>,
        twist: Vec<Cyclotomic>,
    ) -> Result<Self, ModularError> {
        let f = &base;
        let bad = |m: String| ModularError::Data(m);
        if twist.len() != f.rank() {
            return Err(bad("one twist per label is required".into()));
        }
        if !twist[f.unit()].is_one() {
            return Err(bad("the twist of 1 must be 1".into()));
        }
        for i in f.labels() {
            if twist[i] != twist[f.dual(i)] {
                return Err(bad(format!("twist of {} differs from its dual's", f.label_name(i))));
            }
        }
        let name3 = |t: [Label; 3]| format!("({}, {}, {})", f.label_name(t[0]), f.label_name(t[1]), f.label_name(t[2]));
        for (&t, m) in &rsym {
            let n = f.n(channel(f, t));
            if n == 0 || m.rows() != n || m.cols() != n {
                return Err(bad(format!("rsym {} has the wrong shape", name3(t))));
            }
        }
        for a in f.labels() {
            for b in f.labels() {
                for k in f.labels() {
                    let t = [a, b, k];
                    if f.n(channel(f, t)) == 0 {
                        continue;
                    }
                    let rab = rsym.get(&t).ok_or_else(|| bad(format!("rsym {} missing", name3(t))))?;
                    let rba = rsym.get(&[b, a, k]).ok_or_else(|| bad(format!("rsym {} missing", name3([b, a, k]))))?;
                    let want = &twist[k] * (&twist[a] * &twist[b]).inv().map_err(|_| bad("zero twist".into()))?;
                    if (rba * rab) != Matrix::identity(rab.rows()).scale(&want) {
                        return Err(bad(format!("balancing fails at {}", name3(t))));
                    }
                    if (a == f.unit() || b == f.unit()) && !rab.is_identity() {
                        return Err(bad(format!("braiding with 1 must be trivial at {}", name3(t))));
                    }
                }
            }
        }
        let s = closed_form_s(f, &twist);
        if !s.is_symmetric() {
            return Err(ModularError::Modularity("S is not symmetric".into()));
        }
        if s.rank() < s.rows() {
            return Err(ModularError::Modularity("S is singular".into()));
        }
        let plus: Cyclotomic = f.labels().map(|i| &twist[i] * f.dim(i) * f.dim(i)).sum();
        let minus: Cyclotomic = f.labels().map(|i| twist[i].inv().expect("nonzero") * f.dim(i) * f.dim(i)).sum();
        Ok(ModularData { base, rsym, twist, s, delta: (plus, minus) })
    }

    pub fn base(&self) -> &FusionData {
        &self.base
    }

    pub fn name(&self) -> &str {
        self.base.name()
    }

    pub fn twist(&self, i: Label) -> &Cyclotomic {
        &self.twist[i]
    }

    pub fn twists(&self) -> &[Cyclotomic] {
        &self.twist
    }

    /// R matrix from H(b*, a*, k) to H(a*, b*, k), if k occurs in a ⊗ b.
    pub fn r(&self, a: Label, b: Label, k: Label) -> Option<&Matrix> {
        self.rsym.get(&[a, b, k])
    }

    pub fn rsym(&self) -> &HashMap<[Label; 3], Matrix> {
        &self.rsym
    }

    pub fn s_matrix(&self) -> &Matrix {
        &self.s
    }

    /// (Δ+, Δ-) = (Σ v_i dim(i)², Σ v_i⁻¹ dim(i)²).
    pub fn gauss_sums(&self) -> (&Cyclotomic, &Cyclotomic) {
        (&self.delta.0, &self.delta.1)
    }

    pub fn is_anomaly_free(&self) -> bool {
        self.delta.0 == self.delta.1
    }

    /// The same fusion data with the reversed braiding: R'(a, b, k) is the
    /// inverse of R(b, a, k), and twists are inverted.
    pub fn mirror(&self) -> ModularData {
        let rsym = self
            .rsym
            .iter()
            .map(|(&[a, b, k], _)| ([a, b, k], self.rsym[&[b, a, k]].inverse().expect("balanced R is invertible")))
            .collect();
        let twist = self.twist.iter().map(|v| v.inv().expect("nonzero")).collect();
        ModularData::new(self.base.clone(), rsym, twist).expect("mirror of valid data is valid")
    }

    pub fn to_document(&self) -> String {
        document::write(self)
    }

    pub fn from_document(text: &str) -> Result<Self, ModularError> {
        document::read(text)
    }
}

/// The triple of the space the R matrix starts from: H(b*, a*, k).
fn channel(f: &FusionData, t: [Label; 3]) -> [Label; 3] {
    [f.dual(t[1]), f.dual(t[0]), t[2]]
}

/// S_ij = Σ_k N(i, j, k*) v_k / (v_i v_j) dim(k).
fn closed_form_s(f: &FusionData, twist: &[Cyclotomic]) -> Matrix {
    let mut s = Matrix::zeros(f.rank(), f.rank());
    for i in f.labels() {
        for j in f.labels() {
            let vivj = (&twist[i] * &twist[j]).inv().expect("nonzero");
            let mut x = Cyclotomic::zero();
            for k in f.labels() {
                let n = f.n([i, j, f.dual(k)]);
                if n > 0 {
                    x += Cyclotomic::from_integer(n as i64) * &twist[k] * f.dim(k);
                }
            }
            s[(i, j)] = x * vivj;
        }
    }
    s
}

trait MatrixExt {
    fn is_identity(&self) -> bool;
}

impl MatrixExt for Matrix {
    fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows())
    }
}
