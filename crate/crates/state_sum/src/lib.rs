//! Turaev–Viro–Barrett–Westbury invariants of closed oriented triangulated
//! 3-manifolds, computed on the dual skeleton, and dimensions of the
//! associated state spaces of surfaces.
//!
//! The link of the center of a tetrahedron is the boundary sphere with the
//! dual tetrahedral graph: one vertex per face, one edge per edge of the
//! tetrahedron. The sphere is oriented by the outward normal. The link edge
//! crossing an edge `e` of the triangulation carries the color of `e` and
//! is oriented so that (outward normal, link edge, e) is positive in the
//! manifold. Each link graph is matched with the reference tetrahedron of
//! the fusion data; glued faces give dual triples, which are contracted
//! through the inverse pairing.

mod projector;
mod skeleton;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use tvk_fusion_data::{Contraction, FusionData, Label, Tensor};
use tvk_manifold::Triangulation;
use tvk_scalars::Cyclotomic;

pub use projector::{genus_dimension, genus_projector, s2_dimension, s2_projector, GenusProjector};
pub use skeleton::{Skeleton, TetSlots};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StateSumError {
    /// A link graph did not match the reference tetrahedron, or glued faces
    /// did not read dual triples. This is a bug, never a property of input.
    #[error("orientation convention failure: {0}")]
    Convention(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] tvk_graph_eval::GraphError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub value: Cyclotomic,
    /// Partial and complete edge colorings examined by the search.
    pub colorings_visited: u64,
    /// Complete colorings with every face admissible.
    pub admissible_colorings: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Worker threads; 0 uses the global rayon pool.
    pub threads: usize,
}

pub fn tv_invariant(f: &FusionData, t: &Triangulation) -> Result<Cyclotomic, StateSumError> {
    tv_invariant_report(f, t).map(|r| r.value)
}

pub fn tv_invariant_report(f: &FusionData, t: &Triangulation) -> Result<Report, StateSumError> {
    tv_invariant_with(f, t, Options::default())
}

pub fn tv_invariant_with(f: &FusionData, t: &Triangulation, opts: Options) -> Result<Report, StateSumError> {
    let start = Instant::now();
    if f.global_dim().is_zero() {
        return Err(StateSumError::Precondition("global dimension is zero".into()));
    }
    let sk = Skeleton::new(t)?;
    let run = || Search::new(f, &sk).run();
    let (sum, visited, admissible) = if opts.threads == 0 {
        run()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| StateSumError::Precondition(e.to_string()))?;
        pool.install(run)
    };
    let nv = t.counts()[0] as i64;
    let value = sum * f.global_dim().pow(-nv);
    Ok(Report { value, colorings_visited: visited, admissible_colorings: admissible, elapsed: start.elapsed() })
}

/// Depth-first search over edge colorings, pruned by face admissibility.
struct Search<'a> {
    f: &'a FusionData,
    sk: &'a Skeleton,
    /// Edge classes in assignment order.
    order: Vec<usize>,
    /// Faces completed once the edge at each depth is assigned.
    completes: Vec<Vec<usize>>,
    multiplicity_free: bool,
}

impl<'a> Search<'a> {
    fn new(f: &'a FusionData, sk: &'a Skeleton) -> Self {
        let ne = sk.edge_count;
        let mut order = Vec::with_capacity(ne);
        let mut placed = vec![false; ne];
        for face in &sk.faces {
            for &(e, _) in &face.triple {
                if !placed[e] {
                    placed[e] = true;
                    order.push(e);
                }
            }
        }
        let depth: Vec<usize> = {
            let mut d = vec![0; ne];
            for (i, &e) in order.iter().enumerate() {
                d[e] = i;
            }
            d
        };
        let mut completes = vec![Vec::new(); ne];
        for (k, face) in sk.faces.iter().enumerate() {
            let last = face.triple.iter().map(|&(e, _)| depth[e]).max().expect("three edges");
            completes[last].push(k);
        }
        Search { f, sk, order, completes, multiplicity_free: f.is_multiplicity_free() }
    }

    fn read(&self, col: &[Label], slot: (usize, bool)) -> Label {
        let c = col[slot.0];
        if slot.1 {
            self.f.dual(c)
        } else {
            c
        }
    }

    fn face_ok(&self, col: &[Label], k: usize) -> bool {
        let tr = self.sk.faces[k].triple.map(|s| self.read(col, s));
        self.f.n(tr) > 0
    }

    fn run(&self) -> (Cyclotomic, u64, u64) {
        let ne = self.order.len();
        let rank = self.f.rank();
        // split the first two edges across tasks
        let split = ne.min(2);
        let tasks: Vec<Vec<Label>> = (0..rank.pow(split as u32))
            .map(|mut code| {
                (0..split)
                    .map(|_| {
                        let c = code % rank;
                        code /= rank;
                        c
                    })
                    .collect()
            })
            .collect();
        tasks
            .par_iter()
            .map(|prefix| {
                let mut col = vec![0; self.sk.edge_count];
                let mut acc = (Cyclotomic::zero(), 0u64, 0u64);
                let mut ok = true;
                for (d, &c) in prefix.iter().enumerate() {
                    col[self.order[d]] = c;
                    acc.1 += 1;
                    ok &= self.completes[d].iter().all(|&k| self.face_ok(&col, k));
                }
                if ok {
                    self.dfs(split, &mut col, &mut acc);
                }
                acc
            })
            .reduce(|| (Cyclotomic::zero(), 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2))
    }

    fn dfs(&self, depth: usize, col: &mut Vec<Label>, acc: &mut (Cyclotomic, u64, u64)) {
        if depth == self.order.len() {
            acc.2 += 1;
            let w = self.weight(col);
            if !w.is_zero() {
                acc.0 += w;
            }
            return;
        }
        let e = self.order[depth];
        for c in 0..self.f.rank() {
            col[e] = c;
            acc.1 += 1;
            if self.completes[depth].iter().all(|&k| self.face_ok(col, k)) {
                self.dfs(depth + 1, col, acc);
            }
        }
    }

    /// Π dim(c(e)) times the contraction of the tetrahedron tensors.
    fn weight(&self, col: &[Label]) -> Cyclotomic {
        let tensors: Vec<Option<&Tensor>> = self
            .sk
            .tets
            .iter()
            .map(|ts| {
                let labels: [Label; 6] = std::array::from_fn(|r| self.read(col, ts.edges[r]));
                self.f.sixj(labels)
            })
            .collect();
        if tensors.iter().any(|t| t.is_none()) {
            return Cyclotomic::zero();
        }
        let mut w: Cyclotomic = col.iter().map(|&c| self.f.dim(c)).product();
        if self.multiplicity_free {
            for t in &tensors {
                w *= &t.expect("checked").data()[0];
                if w.is_zero() {
                    return w;
                }
            }
            for face in &self.sk.faces {
                let tr = face.triple.map(|s| self.read(col, s));
                w *= &self.f.omega_inv(tr).expect("admissible")[(0, 0)];
            }
            return w;
        }
        // variables: 2k is the representative side of face k, 2k+1 the other
        let mut con = Contraction::new();
        for (ts, t) in self.sk.tets.iter().zip(&tensors) {
            let vars = ts.faces.iter().map(|&(k, rep)| 2 * k + usize::from(!rep)).collect();
            con.factor(t.expect("checked"), vars);
        }
        for (k, face) in self.sk.faces.iter().enumerate() {
            let tr = face.triple.map(|s| self.read(col, s));
            con.weight(self.f.omega_inv(tr).expect("admissible"), 2 * k, 2 * k + 1);
        }
        let total = con.eval(&[]);
        w * total.data()[0].clone()
    }
}
