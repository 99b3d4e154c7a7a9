//! Drinfeld centers that can be written down explicitly, and the check
//! |M|_C = τ_{Z(C)}(M) on paired triangulations and surgery presentations.
//!
//! For a finite abelian group G the center of Vec_G is the double D(G):
//! labels (g, χ) ∈ G × Ĝ, all dimensions 1, fusion by the group law, trivial
//! associator, twist ⟨χ, g⟩, and R((g, χ), (h, ψ)) = ⟨χ, h⟩.

mod manifest;

use std::collections::HashMap;

use tvk_fusion_data::tensor::Tensor;
use tvk_fusion_data::{CategoryData, FusionData, Label};
use tvk_manifold::Triangulation;
use tvk_modular_rt::{rt_invariant, ModularData, ModularError, Surgery};
use tvk_scalars::{int, zeta, Cyclotomic, Matrix};
use tvk_state_sum::{tv_invariant, StateSumError};

pub use manifest::{
    load_category, load_modular, load_surgery, load_triangulation, Case, Manifest, ManifestError, Pairing,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CenterError {
    #[error("invalid group: {0}")]
    Group(String),
    #[error(transparent)]
    StateSum(#[from] StateSumError),
    #[error(transparent)]
    Modular(#[from] ModularError),
}

/// A finite abelian group Z/n_1 × ... × Z/n_r with n_1 | n_2 | ... | n_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self, CenterError> {
        if factors.iter().any(|&n| n < 2) {
            return Err(CenterError::Group("invariant factors must be at least 2".into()));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(CenterError::Group("each invariant factor must divide the next".into()));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            AbelianGroup { factors: vec![] }
        } else {
            AbelianGroup { factors: vec![n] }
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// All elements as tuples, the first coordinate varying slowest.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &n in &self.factors {
            out = out.into_iter().flat_map(|e| (0..n).map(move |x| [e.clone(), vec![x]].concat())).collect();
        }
        out
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), n)| (x + y) % n).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(x, n)| (n - x) % n).collect()
    }

    /// ⟨χ, g⟩ = Π ζ_{n_i}^{χ_i g_i}, with characters written as tuples.
    pub fn pairing(&self, chi: &[u64], g: &[u64]) -> Cyclotomic {
        chi.iter().zip(g).zip(&self.factors).map(|((c, x), &n)| zeta(n, ((c * x) % n) as i64)).product()
    }
}

fn tuple_name(x: &[u64]) -> String {
    x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Vec_A for a finite abelian group A, trivial associator, with labels
/// named by `name` (the unit must be named `1`).
fn pointed(a: &AbelianGroup, name: &str, label: impl Fn(&[u64]) -> String) -> FusionData {
    let els = a.elements();
    let index: HashMap<Vec<u64>, Label> = els.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let id = |e: &[u64]| index[e];
    let zero = vec![0; a.factors().len()];
    let labels: Vec<String> = els.iter().map(|e| if *e == zero { "1".into() } else { label(e) }).collect();
    let dual: Vec<Label> = els.iter().map(|e| id(&a.neg(e))).collect();
    let mut triples = Vec::new();
    let mut omega = Vec::new();
    for x in &els {
        for y in &els {
            let z = a.neg(&a.add(x, y));
            let t = [id(x), id(y), id(&z)];
            triples.push((t, 1));
            omega.push((t, Matrix::scalar(int(1))));
        }
    }
    // (i, j, k, l, m, n) is admissible iff k = i + j, n = m - i, l = n - j
    let mut sixj = Vec::new();
    for i in &els {
        for j in &els {
            for m in &els {
                let k = a.add(i, j);
                let n = a.add(m, &a.neg(i));
                let l = a.add(&n, &a.neg(j));
                let t = [id(i), id(j), id(&k), id(&l), id(m), id(&n)];
                sixj.push((t, Tensor::from_data(vec![1, 1, 1, 1], vec![int(1)])));
            }
        }
    }
    let data = CategoryData {
        name: name.into(),
        notes: vec![format!("pointed category of an abelian group of order {}", a.order())],
        labels,
        dual,
        qdim: vec![int(1); els.len()],
        triples,
        omega,
        sixj,
    };
    FusionData::new(data).expect("pointed data is valid")
}

/// Vec_G with labels named `g<coordinates>`.
pub fn vec_group(g: &AbelianGroup) -> FusionData {
    pointed(g, &format!("vec{}", group_tag(g)), |e| format!("g{}", tuple_name(e)))
}

fn group_tag(g: &AbelianGroup) -> String {
    if g.factors().is_empty() {
        "Z1".into()
    } else {
        g.factors().iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x")
    }
}

/// The double D(G) = Z(Vec_G). Label (g, χ) is named `g/χ`.
pub fn drinfeld_double_abelian(g: &AbelianGroup) -> ModularData {
    let r = g.factors().len();
    let both = AbelianGroup { factors: [g.factors(), g.factors()].concat() };
    let split = |e: &[u64]| (e[..r].to_vec(), e[r..].to_vec());
    let f = pointed(&both, &format!("double{}", group_tag(g)), |e| {
        let (x, c) = split(e);
        format!("{}/{}", tuple_name(&x), tuple_name(&c))
    });
    let els = both.elements();
    let mut rsym = HashMap::new();
    let mut twist = vec![Cyclotomic::zero(); els.len()];
    for (ia, a) in els.iter().enumerate() {
        let (ga, ca) = split(a);
        twist[ia] = g.pairing(&ca, &ga);
        for (ib, b) in els.iter().enumerate() {
            let (gb, _) = split(b);
            let k = els.iter().position(|e| *e == both.add(a, b)).expect("closed");
            rsym.insert([ia, ib, k], Matrix::scalar(g.pairing(&ca, &gb)));
        }
    }
    ModularData::new(f, rsym, twist).expect("the double of an abelian group is modular")
}

#[derive(Clone, Debug, PartialEq)]
pub struct MainTheoremReport {
    pub lhs: Cyclotomic,
    pub rhs: Cyclotomic,
    pub equal: bool,
}

/// |T|_F against τ_Z of a surgery presentation of the same manifold. `z`
/// is trusted to be the center of `f`.
pub fn verify_main_theorem(
    f: &FusionData,
    z: &ModularData,
    t: &Triangulation,
    surgery: &Surgery,
) -> Result<MainTheoremReport, CenterError> {
    let lhs = tv_invariant(f, t)?;
    let rhs = rt_invariant(z, surgery)?;
    let equal = lhs == rhs;
    Ok(MainTheoremReport { lhs, rhs, equal })
}
