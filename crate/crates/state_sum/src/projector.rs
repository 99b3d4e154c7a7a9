//! State spaces of surfaces as images of the cylinder projector.
//!
//! For the sphere the projector acts on the colorings of one circle. For a
//! genus g surface it acts on the multiplicity spaces of the one-vertex
//! graph whose 2g loops a_m, b_m leave and enter the vertex in the order
//! a_m out, b_m out, a_m in, b_m in. Its matrix entries come from
//! evaluating a planar graph on the sphere: a cone vertex u on the bottom
//! coloring, a cone vertex v on the dual of the top one, and an equator
//! colored by z whose crossings with the rays are contracted in pairs.

use std::collections::HashMap;

use tvk_fusion_data::{FusionData, Label};
use tvk_graph_eval::{evaluate, End, Network};
use tvk_scalars::{Cyclotomic, Matrix};

use crate::StateSumError;

fn n4(f: &FusionData, a: Label, b: Label, c: Label, d: Label) -> usize {
    f.labels().map(|k| f.n([a, b, k]) * f.n([f.dual(k), c, d])).sum()
}

/// The sphere projector on colorings of the equator: entry (j, i) is
/// dim(i) / (dim(j) D²) Σ_{z,w} dim(z) dim(w) N(j*, z*, i, w).
pub fn s2_projector(f: &FusionData) -> Result<Matrix, StateSumError> {
    let d = f.global_dim();
    if d.is_zero() {
        return Err(StateSumError::Precondition("global dimension is zero".into()));
    }
    let d2inv = (d * d).inv().expect("nonzero");
    let mut p = Matrix::zeros(f.rank(), f.rank());
    for j in f.labels() {
        let dj = f.dim(j).inv().expect("dimensions are nonzero");
        for i in f.labels() {
            let mut s = Cyclotomic::zero();
            for z in f.labels() {
                for w in f.labels() {
                    let n = n4(f, f.dual(j), f.dual(z), i, w);
                    if n > 0 {
                        s += f.dim(z) * f.dim(w) * Cyclotomic::from_integer(n as i64);
                    }
                }
            }
            p[(j, i)] = f.dim(i) * &dj * &d2inv * s;
        }
    }
    Ok(p)
}

pub fn s2_dimension(f: &FusionData) -> Result<usize, StateSumError> {
    Ok(s2_projector(f)?.rank())
}

/// A basis vector of Hom(1, a_1 ⊗ ... ⊗ a_n) on the left comb tree:
/// internal colors and a basis index per trivalent vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeBasis {
    pub internal: Vec<Label>,
    pub index: Vec<usize>,
}

/// Triples read at the comb vertices for the given internal colors.
fn comb_triples(f: &FusionData, legs: &[Label], internal: &[Label]) -> Vec<[Label; 3]> {
    let n = legs.len();
    if n == 3 {
        return vec![[legs[0], legs[1], legs[2]]];
    }
    let mut out = Vec::with_capacity(n - 2);
    out.push([legs[0], legs[1], f.dual(internal[0])]);
    for k in 1..n - 3 {
        out.push([internal[k - 1], legs[k + 1], f.dual(internal[k])]);
    }
    out.push([internal[n - 4], legs[n - 2], legs[n - 1]]);
    out
}

pub fn tree_bases(f: &FusionData, legs: &[Label]) -> Vec<TreeBasis> {
    assert!(legs.len() >= 3, "trees need at least three legs");
    let mut out = Vec::new();
    let m = legs.len() - 3;
    let mut internal = vec![0; m];
    loop {
        let triples = comb_triples(f, legs, &internal);
        let dims: Vec<usize> = triples.iter().map(|&t| f.n(t)).collect();
        if dims.iter().all(|&d| d > 0) {
            let mut index = vec![0; dims.len()];
            loop {
                out.push(TreeBasis { internal: internal.clone(), index: index.clone() });
                let mut k = 0;
                while k < index.len() {
                    index[k] += 1;
                    if index[k] < dims[k] {
                        break;
                    }
                    index[k] = 0;
                    k += 1;
                }
                if k == index.len() {
                    break;
                }
            }
        }
        let mut k = 0;
        while k < m {
            internal[k] += 1;
            if internal[k] < f.rank() {
                break;
            }
            internal[k] = 0;
            k += 1;
        }
        if k == m {
            break;
        }
    }
    out
}

/// dim Hom(1, a_1 ⊗ ... ⊗ a_n) from the fusion rules.
fn hom_dim(f: &FusionData, legs: &[Label]) -> usize {
    let mut v = vec![0usize; f.rank()];
    v[f.unit()] = 1;
    for &a in legs {
        let mut w = vec![0usize; f.rank()];
        for (x, &m) in v.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for y in f.labels() {
                w[y] += m * f.n([x, a, f.dual(y)]);
            }
        }
        v = w;
    }
    v[f.unit()]
}

/// Replace a vertex with the given ends (counterclockwise) by its comb tree.
fn place_comb(net: &mut Network, ends: &[End], b: &TreeBasis) {
    let n = ends.len();
    if n == 3 {
        net.fixed([ends[0], ends[1], ends[2]], b.index[0]);
        return;
    }
    let y: Vec<usize> = b.internal.iter().map(|&c| net.edge(c)).collect();
    net.fixed([ends[0], ends[1], End::outgoing(y[0])], b.index[0]);
    for k in 1..n - 3 {
        net.fixed([End::incoming(y[k - 1]), ends[k + 1], End::outgoing(y[k])], b.index[k]);
    }
    net.fixed([End::incoming(y[n - 4]), ends[n - 2], ends[n - 1]], b.index[n - 3]);
}

fn readings(f: &FusionData, net: &Network, ends: &[End]) -> Vec<Label> {
    ends.iter().map(|&e| net.reading(f, e)).collect()
}

fn scalar(f: &FusionData, net: &Network) -> Result<Cyclotomic, StateSumError> {
    let t = evaluate(f, net)?;
    Ok(t.data()[0].clone())
}

/// Tree bases at a vertex and at its dual, with the copairing between them.
/// The dual vertex lists the opposite ends in the order `second_order`,
/// which must be a rotation of the reversed first list.
struct Dual {
    first: Vec<TreeBasis>,
    second: Vec<TreeBasis>,
    /// Y[a][b]: coefficient of first_a ⊗ second_b in the copairing.
    copairing: Matrix,
}

fn dual_pair(f: &FusionData, colors: &[Label], heads: &[bool], second_order: &[usize]) -> Result<Dual, StateSumError> {
    let mut net = Network::new();
    let es: Vec<usize> = colors.iter().map(|&c| net.edge(c)).collect();
    let first_ends: Vec<End> = es.iter().zip(heads).map(|(&e, &h)| End { edge: e, head: h }).collect();
    let second_ends: Vec<End> = second_order.iter().map(|&k| first_ends[k].opposite()).collect();
    let first = tree_bases(f, &readings(f, &net, &first_ends));
    let second = tree_bases(f, &readings(f, &net, &second_ends));
    if first.len() != second.len() {
        return Err(StateSumError::Convention("dual vertices have different multiplicities".into()));
    }
    let mut gram = Matrix::zeros(first.len(), second.len());
    for (a, ba) in first.iter().enumerate() {
        for (b, bb) in second.iter().enumerate() {
            let mut g = net.clone();
            place_comb(&mut g, &first_ends, ba);
            place_comb(&mut g, &second_ends, bb);
            gram[(a, b)] = scalar(f, &g)?;
        }
    }
    let ginv = gram.inverse().map_err(|_| StateSumError::Convention("degenerate pairing of tree bases".into()))?;
    Ok(Dual { first, second, copairing: ginv.transpose() })
}

/// The cylinder projector on the state space of the genus g surface.
#[derive(Clone, Debug)]
pub struct GenusProjector {
    pub genus: usize,
    /// Basis of the domain: the loop colors (a_1, b_1, ..., a_g, b_g) and a
    /// tree basis vector at the vertex.
    pub basis: Vec<(Vec<Label>, TreeBasis)>,
    pub matrix: Matrix,
}

impl GenusProjector {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_idempotent(&self) -> bool {
        &self.matrix * &self.matrix == self.matrix
    }
}

/// Ray r of the vertex: its loop and whether it leaves the vertex.
fn ray(r: usize) -> (usize, bool) {
    let m = r / 4;
    match r % 4 {
        0 => (2 * m, true),
        1 => (2 * m + 1, true),
        2 => (2 * m, false),
        _ => (2 * m + 1, false),
    }
}

/// Readings at the vertex for loop colors `c`.
fn vertex_readings(f: &FusionData, c: &[Label]) -> Vec<Label> {
    (0..2 * c.len())
        .map(|r| {
            let (l, out) = ray(r);
            if out {
                f.dual(c[l])
            } else {
                c[l]
            }
        })
        .collect()
}

struct Gamma<'a> {
    f: &'a FusionData,
    genus: usize,
    /// Copairings at the equator crossings keyed by (z, bottom, top, out).
    cross: HashMap<(Label, Label, Label, bool), Dual>,
}

impl Gamma<'_> {
    fn rays(&self) -> usize {
        4 * self.genus
    }

    /// Contraction data for the crossings of rays p and p + 2.
    fn crossing(&mut self, z: Label, bottom: Label, top: Label, out: bool) -> Result<&Dual, StateSumError> {
        let key = (z, bottom, top, out);
        if !self.cross.contains_key(&key) {
            // east (z out), south (head iff out), west (z in), north (head iff in)
            let colors = [z, bottom, z, top];
            let heads = [false, out, true, !out];
            let d = dual_pair(self.f, &colors, &heads, &[2, 1, 0, 3])?;
            self.cross.insert(key, d);
        }
        Ok(&self.cross[&key])
    }

    /// Σ over the crossing contractions of the graph with bottom colors
    /// `ij` at basis `bu`, top colors `kl` at basis `bv`, equator `z`.
    fn mu(
        &mut self,
        ij: &[Label],
        bu: &TreeBasis,
        kl: &[Label],
        bv: &TreeBasis,
        z: Label,
    ) -> Result<Cyclotomic, StateSumError> {
        let nr = self.rays();
        let f = self.f;
        let mut net = Network::new();
        let lower: Vec<usize> = (0..nr).map(|r| net.edge(ij[ray(r).0])).collect();
        let upper: Vec<usize> = (0..nr).map(|r| net.edge(kl[ray(r).0])).collect();
        let eq: Vec<usize> = (0..nr).map(|_| net.edge(z)).collect();
        let u_ends: Vec<End> = (0..nr).map(|r| End { edge: lower[r], head: !ray(r).1 }).collect();
        let v_ends: Vec<End> = (0..nr).rev().map(|r| End { edge: upper[r], head: ray(r).1 }).collect();
        let w_ends = |r: usize| -> Vec<End> {
            let out = ray(r).1;
            vec![
                End::outgoing(eq[r]),
                End { edge: lower[r], head: out },
                End::incoming(eq[(r + nr - 1) % nr]),
                End { edge: upper[r], head: !out },
            ]
        };
        place_comb(&mut net, &u_ends, bu);
        place_comb(&mut net, &v_ends, bv);

        // crossing pairs (p, p + 2) with p = 4m, 4m + 1
        let mut pairs = Vec::new();
        for m in 0..self.genus {
            for p in [4 * m, 4 * m + 1] {
                let l = ray(p).0;
                let d = self.crossing(z, ij[l], kl[l], true)?;
                let terms: Vec<(usize, usize, Cyclotomic)> = (0..d.first.len())
                    .flat_map(|a| (0..d.second.len()).map(move |b| (a, b)))
                    .filter_map(|(a, b)| {
                        let y = &d.copairing[(a, b)];
                        (!y.is_zero()).then(|| (a, b, y.clone()))
                    })
                    .collect();
                pairs.push((p, (z, ij[l], kl[l], true), terms));
            }
        }
        let mut total = Cyclotomic::zero();
        let mut choice = vec![0usize; pairs.len()];
        if pairs.iter().any(|p| p.2.is_empty()) {
            return Ok(total);
        }
        loop {
            let mut g = net.clone();
            let mut coeff = Cyclotomic::one();
            for (k, (p, key, terms)) in pairs.iter().enumerate() {
                let (a, b, y) = &terms[choice[k]];
                coeff *= y;
                let d = &self.cross[key];
                place_comb(&mut g, &w_ends(*p), &d.first[*a]);
                place_comb(&mut g, &w_ends(p + 2), &d.second[*b]);
            }
            let val = scalar(f, &g)?;
            if !val.is_zero() {
                total += coeff * val;
            }
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < pairs[k].2.len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
        Ok(total)
    }
}

fn colorings(rank: usize, len: usize) -> Vec<Vec<Label>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|c| {
                (0..rank).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    out
}

/// The cylinder projector for the genus g surface, g ≥ 1. Entry
/// ((kl, α), (ij, β)) is Π dim(ij) / D Σ_z dim(z) μ_z paired with the
/// dual basis of α.
pub fn genus_projector(f: &FusionData, genus: usize) -> Result<GenusProjector, StateSumError> {
    if genus == 0 {
        return Err(StateSumError::Precondition("genus must be at least 1; use the sphere projector".into()));
    }
    let d = f.global_dim();
    if d.is_zero() {
        return Err(StateSumError::Precondition("global dimension is zero".into()));
    }
    let dinv = d.inv().expect("nonzero");
    let mut blocks = Vec::new();
    for c in colorings(f.rank(), 2 * genus) {
        let legs = vertex_readings(f, &c);
        let trees = tree_bases(f, &legs);
        if trees.len() != hom_dim(f, &legs) {
            return Err(StateSumError::Convention("tree basis does not match the fusion rules".into()));
        }
        if !trees.is_empty() {
            blocks.push((c, trees));
        }
    }
    let mut basis = Vec::new();
    let mut offset = Vec::new();
    for (c, trees) in &blocks {
        offset.push(basis.len());
        basis.extend(trees.iter().map(|t| (c.clone(), t.clone())));
    }
    let mut gamma = Gamma { f, genus, cross: HashMap::new() };
    let mut p = Matrix::zeros(basis.len(), basis.len());
    for (bi, (kl, _)) in blocks.iter().enumerate() {
        // the top vertex carries the dual of the top coloring
        let nr = 4 * genus;
        let colors: Vec<Label> = (0..nr).map(|r| kl[ray(r).0]).collect();
        let heads: Vec<bool> = (0..nr).map(|r| !ray(r).1).collect();
        let order: Vec<usize> = (0..nr).rev().collect();
        let top = dual_pair(f, &colors, &heads, &order)?;
        for (ij, trees) in &blocks {
            let pre = ij.iter().map(|&x| f.dim(x).clone()).product::<Cyclotomic>() * &dinv;
            for (beta, bu) in trees.iter().enumerate() {
                let col = offset[blocks.iter().position(|b| &b.0 == ij).expect("block")] + beta;
                for (ap, bv) in top.second.iter().enumerate() {
                    let mut s = Cyclotomic::zero();
                    for z in f.labels() {
                        let m = gamma.mu(ij, bu, kl, bv, z)?;
                        if !m.is_zero() {
                            s += f.dim(z) * m;
                        }
                    }
                    if s.is_zero() {
                        continue;
                    }
                    for alpha in 0..top.first.len() {
                        let y = &top.copairing[(alpha, ap)];
                        if !y.is_zero() {
                            p[(offset[bi] + alpha, col)] += &pre * y * &s;
                        }
                    }
                }
            }
        }
    }
    Ok(GenusProjector { genus, basis, matrix: p })
}

pub fn genus_dimension(f: &FusionData, genus: usize) -> Result<usize, StateSumError> {
    if genus == 0 {
        return s2_dimension(f);
    }
    Ok(genus_projector(f, genus)?.rank())
}
