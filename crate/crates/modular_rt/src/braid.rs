//! Braid group representations on splitting trees and framed closures.
//!
//! V_x(c_1, ..., c_n) = Hom(x, c_1 ⊗ ... ⊗ c_n) has the basis of left comb
//! splitting trees: the root x splits into y_{n-2} and c_n, y_{n-2} into
//! y_{n-3} and c_{n-1}, and so on down to c_1 and c_2. Matrix entries of a
//! generator come from planar networks: the tree below, the crossing
//! expanded over its channels, and a fusion tree above whose root closes
//! back to the splitting root. The Gram matrix of the same networks without
//! the crossing converts them into coordinates.

use std::collections::HashMap;
use std::sync::Mutex;

use tvk_fusion_data::{FusionData, Label};
use tvk_graph_eval::{evaluate, Basis, End, Network};
use tvk_scalars::{Cyclotomic, Matrix};

use crate::{ModularData, ModularError};

/// A braid word on `strands` strands: +i is σ_i and -i its inverse, with
/// generators numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braid {
    pub strands: usize,
    pub word: Vec<i32>,
}

impl Braid {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, ModularError> {
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(ModularError::Presentation(format!("generator {g} is not valid on {strands} strands")));
            }
        }
        Ok(Braid { strands, word })
    }

    /// Top position of the strand starting at each bottom position.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // at[p] is the strand at top position p
        let mut out = vec![0; self.strands];
        for (p, &s) in at.iter().enumerate() {
            out[s] = p;
        }
        out
    }

    /// Component of each bottom position in the closure, numbered by the
    /// smallest position they contain.
    pub fn components(&self) -> Vec<usize> {
        let perm = self.permutation();
        let mut comp = vec![usize::MAX; self.strands];
        let mut next = 0;
        for s in 0..self.strands {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut p = s;
            while comp[p] == usize::MAX {
                comp[p] = next;
                p = perm[p];
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    /// Sum of crossing signs between strands of the same component.
    pub fn self_writhe(&self) -> Vec<i64> {
        let comp = self.components();
        let mut w = vec![0; self.component_count()];
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            if comp[at[i]] == comp[at[i + 1]] {
                w[comp[at[i]]] += i64::from(g.signum());
            }
            at.swap(i, i + 1);
        }
        w
    }
}

/// A basis vector of V_x(c): internal colors y_1..y_{n-2} and a basis index
/// at each vertex t_1..t_{n-1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingTree {
    pub internal: Vec<Label>,
    pub index: Vec<usize>,
}

/// Edge entering vertex t_k (k = 1..n-1) from below, and its left output.
fn tree_edges(n: usize, x: usize, y: &[usize], legs: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let input: Vec<usize> = (1..n).map(|k| if k == n - 1 { x } else { y[k - 1] }).collect();
    let left: Vec<usize> = (1..n).map(|k| if k == 1 { legs[0] } else { y[k - 2] }).collect();
    (input, left)
}

pub fn splitting_trees(f: &FusionData, colors: &[Label], x: Label) -> Vec<SplittingTree> {
    let n = colors.len();
    assert!(n >= 2);
    let m = n - 2;
    let mut out = Vec::new();
    let mut internal = vec![0; m];
    loop {
        // vertex t_k reads (c_{k+1}*, left*, input)
        let col = |k: usize, input: bool| -> Label {
            if input {
                if k == n - 1 {
                    x
                } else {
                    internal[k - 1]
                }
            } else if k == 1 {
                colors[0]
            } else {
                internal[k - 2]
            }
        };
        let dims: Vec<usize> = (1..n).map(|k| f.n([f.dual(colors[k]), f.dual(col(k, false)), col(k, true)])).collect();
        if dims.iter().all(|&d| d > 0) {
            let mut index = vec![0; n - 1];
            loop {
                out.push(SplittingTree { internal: internal.clone(), index: index.clone() });
                if !bump(&mut index, &dims) {
                    break;
                }
            }
        }
        if !bump(&mut internal, &vec![f.rank(); m]) {
            break;
        }
    }
    out
}

fn bump(v: &mut [usize], dims: &[usize]) -> bool {
    for k in 0..v.len() {
        v[k] += 1;
        if v[k] < dims[k] {
            return true;
        }
        v[k] = 0;
    }
    false
}

/// The splitting tree `b` below legs `legs` with root edge `x` entering.
fn place_split(net: &mut Network, b: &SplittingTree, legs: &[usize], x: usize) {
    let n = legs.len();
    let y: Vec<usize> = b.internal.iter().map(|&c| net.edge(c)).collect();
    let (input, left) = tree_edges(n, x, &y, legs);
    for k in 1..n {
        net.fixed([End::outgoing(legs[k]), End::outgoing(left[k - 1]), End::incoming(input[k - 1])], b.index[k - 1]);
    }
}

/// The mirror image of a splitting tree above legs `legs`, root `x` leaving.
fn place_fuse(net: &mut Network, b: &SplittingTree, legs: &[usize], x: usize) {
    let n = legs.len();
    let y: Vec<usize> = b.internal.iter().map(|&c| net.edge(c)).collect();
    let (output, left) = tree_edges(n, x, &y, legs);
    for k in 1..n {
        net.fixed([End::outgoing(output[k - 1]), End::incoming(left[k - 1]), End::incoming(legs[k])], b.index[k - 1]);
    }
}

fn scalar(f: &FusionData, net: &Network) -> Result<Cyclotomic, ModularError> {
    let t = evaluate(f, net).map_err(|e| ModularError::Data(e.to_string()))?;
    Ok(t.data()[0].clone())
}

type Key = (Vec<Label>, Label, i32);
type BasisCache = HashMap<(Vec<Label>, Label), Vec<SplittingTree>>;

/// Generator matrices of the braid group action, cached per coloring.
pub struct BraidRep<'a> {
    m: &'a ModularData,
    bases: Mutex<BasisCache>,
    gens: Mutex<HashMap<Key, Matrix>>,
}

impl<'a> BraidRep<'a> {
    pub fn new(m: &'a ModularData) -> Self {
        BraidRep { m, bases: Mutex::new(HashMap::new()), gens: Mutex::new(HashMap::new()) }
    }

    pub fn basis(&self, colors: &[Label], x: Label) -> Vec<SplittingTree> {
        let key = (colors.to_vec(), x);
        if let Some(b) = self.bases.lock().expect("lock").get(&key) {
            return b.clone();
        }
        let b = splitting_trees(self.m.base(), colors, x);
        self.bases.lock().expect("lock").insert(key, b.clone());
        b
    }

    /// Gram matrix: entry (b', b) is the closed network of splitting tree b
    /// under fusion tree b'.
    fn gram(&self, colors: &[Label], x: Label) -> Result<Matrix, ModularError> {
        let f = self.m.base();
        let basis = self.basis(colors, x);
        let mut g = Matrix::zeros(basis.len(), basis.len());
        for (i, top) in basis.iter().enumerate() {
            for (j, bottom) in basis.iter().enumerate() {
                let mut net = Network::new();
                let legs: Vec<usize> = colors.iter().map(|&c| net.edge(c)).collect();
                let root = net.edge(x);
                place_split(&mut net, bottom, &legs, root);
                place_fuse(&mut net, top, &legs, root);
                g[(i, j)] = scalar(f, &net)?;
            }
        }
        Ok(g)
    }

    /// Matrix of σ_i^{±1} (generator `g`, numbered from 1) from V_x(colors)
    /// to V_x(colors with positions i, i+1 swapped).
    pub fn generator(&self, colors: &[Label], x: Label, g: i32) -> Result<Matrix, ModularError> {
        let key = (colors.to_vec(), x, g);
        if let Some(m) = self.gens.lock().expect("lock").get(&key) {
            return Ok(m.clone());
        }
        let f = self.m.base();
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (colors[i], colors[i + 1]);
        let mut after = colors.to_vec();
        after.swap(i, i + 1);
        let src = self.basis(colors, x);
        let dst = self.basis(&after, x);
        let mut e = Matrix::zeros(dst.len(), src.len());
        for k in f.labels() {
            // positive: R(a, b, k); negative: the inverse of R(b, a, k)
            let r = match (g > 0, self.m.r(a, b, k), self.m.r(b, a, k)) {
                (true, Some(r), _) => r.clone(),
                (false, _, Some(r)) => r.inverse().map_err(|_| ModularError::Data("singular R".into()))?,
                _ => continue,
            };
            for (col, bottom) in src.iter().enumerate() {
                for (row, top) in dst.iter().enumerate() {
                    let mut net = Network::new();
                    let lower: Vec<usize> = colors.iter().map(|&c| net.edge(c)).collect();
                    let mut upper = lower.clone();
                    upper[i] = net.edge(b);
                    upper[i + 1] = net.edge(a);
                    let root = net.edge(x);
                    let kk = net.edge(k);
                    place_split(&mut net, bottom, &lower, root);
                    place_fuse(&mut net, top, &upper, root);
                    let u = net.vertex(
                        [End::outgoing(kk), End::incoming(lower[i]), End::incoming(lower[i + 1])],
                        Basis::Free(0),
                    );
                    net.vertex(
                        [End::outgoing(upper[i + 1]), End::outgoing(upper[i]), End::incoming(kk)],
                        Basis::Free(1),
                    );
                    let t = evaluate(f, &net).map_err(|e| ModularError::Data(e.to_string()))?;
                    let omega = f.omega_inv(net.triple(f, u)).expect("admissible channel");
                    let mut s = Cyclotomic::zero();
                    for al in 0..omega.rows() {
                        for be in 0..omega.cols() {
                            if omega[(al, be)].is_zero() {
                                continue;
                            }
                            for ga in 0..r.rows() {
                                let x = t.get(&[al, ga]);
                                if !x.is_zero() && !r[(ga, be)].is_zero() {
                                    s += &omega[(al, be)] * &r[(ga, be)] * x;
                                }
                            }
                        }
                    }
                    if !s.is_zero() {
                        e[(row, col)] += f.dim(k) * s;
                    }
                }
            }
        }
        let gram = self.gram(&after, x)?;
        let gi = gram.inverse().map_err(|_| ModularError::Data("degenerate splitting-tree pairing".into()))?;
        let out = &gi * &e;
        self.gens.lock().expect("lock").insert(key, out.clone());
        Ok(out)
    }

    /// Matrix of the whole braid on V_x(colors); the colors must be
    /// preserved by the braid permutation for the result to be square.
    pub fn matrix(&self, braid: &Braid, colors: &[Label], x: Label) -> Result<Matrix, ModularError> {
        let mut cur = colors.to_vec();
        let mut acc = Matrix::identity(self.basis(&cur, x).len());
        for &g in &braid.word {
            let m = self.generator(&cur, x, g)?;
            acc = &m * &acc;
            let i = g.unsigned_abs() as usize - 1;
            cur.swap(i, i + 1);
        }
        Ok(acc)
    }

    /// Quantum trace Σ_x dim(x) tr(β on V_x) of a braid with bottom colors
    /// `colors`, in blackboard framing.
    pub fn closure(&self, braid: &Braid, colors: &[Label]) -> Result<Cyclotomic, ModularError> {
        let f = self.m.base();
        match braid.strands {
            0 => return Ok(Cyclotomic::one()),
            1 => return Ok(f.dim(colors[0]).clone()),
            _ => {}
        }
        let mut total = Cyclotomic::zero();
        for x in f.labels() {
            if self.basis(colors, x).is_empty() {
                continue;
            }
            let m = self.matrix(braid, colors, x)?;
            let tr: Cyclotomic = (0..m.rows()).map(|r| m[(r, r)].clone()).sum();
            total += f.dim(x) * tr;
        }
        Ok(total)
    }
}

/// F(L) of the closure of `braid` with one framing and one color per
/// component (components numbered by their smallest bottom position).
pub fn eval_braid_closure(
    m: &ModularData,
    braid: &Braid,
    framings: &[i64],
    colors: &[Label],
) -> Result<Cyclotomic, ModularError> {
    eval_with(&BraidRep::new(m), m, braid, framings, colors)
}

pub(crate) fn eval_with(
    rep: &BraidRep,
    m: &ModularData,
    braid: &Braid,
    framings: &[i64],
    colors: &[Label],
) -> Result<Cyclotomic, ModularError> {
    let nc = braid.component_count();
    if framings.len() != nc || colors.len() != nc {
        return Err(ModularError::Presentation(format!(
            "the closure has {nc} components; got {} framings and {} colors",
            framings.len(),
            colors.len()
        )));
    }
    if let Some(&c) = colors.iter().find(|&&c| c >= m.base().rank()) {
        return Err(ModularError::Presentation(format!("unknown color {c}")));
    }
    let comp = braid.components();
    let strand_colors: Vec<Label> = comp.iter().map(|&c| colors[c]).collect();
    let mut value = rep.closure(braid, &strand_colors)?;
    for (c, w) in braid.self_writhe().into_iter().enumerate() {
        value *= m.twist(colors[c]).pow(framings[c] - w);
    }
    Ok(value)
}
