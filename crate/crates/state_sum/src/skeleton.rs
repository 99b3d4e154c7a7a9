//! The dual skeleton of a triangulation, read against the reference
//! tetrahedron.

use tvk_fusion_data::tetra::{EDGE_ENDS, ROTATION};
use tvk_manifold::{tet_edge, Triangulation, TET_EDGES};

use crate::StateSumError;

/// An edge class and whether its color is dualized.
pub type Slot = (usize, bool);

/// How one tetrahedron fills the reference tetrahedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TetSlots {
    /// Color of each reference edge i..n.
    pub edges: [Slot; 6],
    /// Face class at each reference vertex A..D, and whether this
    /// tetrahedron holds the representative side of it.
    pub faces: [(usize, bool); 4],
}

/// A face class read from its representative side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSlots {
    pub triple: [Slot; 3],
}

#[derive(Clone, Debug)]
pub struct Skeleton {
    pub edge_count: usize,
    pub tets: Vec<TetSlots>,
    pub faces: Vec<FaceSlots>,
}

type V3 = [i64; 3];

fn sub(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn det(a: V3, b: V3, c: V3) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Corners of the standard simplex scaled so that all centers are integral.
const CORNER: [V3; 4] = [[0, 0, 0], [12, 0, 0], [0, 12, 0], [0, 0, 12]];

fn centroid(pts: &[usize]) -> V3 {
    let n = pts.len() as i64;
    let mut c = [0; 3];
    for &p in pts {
        for k in 0..3 {
            c[k] += CORNER[p][k];
        }
    }
    c.map(|x| x / n)
}

fn others(skip: &[usize]) -> Vec<usize> {
    (0..4).filter(|v| !skip.contains(v)).collect()
}

fn ref_other_end(e: usize, x: usize) -> usize {
    let (a, b) = EDGE_ENDS[e];
    if a == x {
        b
    } else {
        a
    }
}

fn cyclic_eq<T: PartialEq + Copy>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|r| (0..a.len()).all(|i| a[i] == b[(i + r) % a.len()]))
}

/// The link graph of one tetrahedron: counterclockwise neighbors at each
/// face vertex, and the direction of each arc.
struct Link {
    /// `rot[f]` lists the local edges around face vertex f.
    rot: [[usize; 3]; 4],
    /// `forward[le]`: the arc crossing local edge le runs from the smaller
    /// to the larger of the two faces containing it.
    forward: [bool; 6],
}

fn link(sign: i32, flipped: impl Fn(usize) -> bool) -> Link {
    let eps = i64::from(sign);
    let centre = centroid(&[0, 1, 2, 3]);
    let mut forward = [false; 6];
    for (le, &(a, b)) in TET_EDGES.iter().enumerate() {
        let cd = others(&[a, b]);
        let (c, d) = (cd[0], cd[1]);
        let mid = centroid(&[a, b]);
        let u = sub(centroid(&others(&[d])), centroid(&others(&[c])));
        let dir = if flipped(le) { sub(CORNER[a], CORNER[b]) } else { sub(CORNER[b], CORNER[a]) };
        forward[le] = eps * det(sub(mid, centre), u, dir) > 0;
    }
    let mut rot = [[0; 3]; 4];
    for (f, r) in rot.iter_mut().enumerate() {
        let fc = centroid(&others(&[f]));
        let n = sub(fc, centre);
        let vs = others(&[f]);
        let mut es = [tet_edge(vs[0], vs[1]), tet_edge(vs[0], vs[2]), tet_edge(vs[1], vs[2])];
        let dirn = |le: usize| {
            let (a, b) = TET_EDGES[le];
            sub(centroid(&[a, b]), fc)
        };
        if eps * det(n, dirn(es[0]), dirn(es[1])) < 0 {
            es.swap(1, 2);
        }
        debug_assert!(eps * det(n, dirn(es[1]), dirn(es[2])) > 0);
        *r = es;
    }
    Link { rot, forward }
}

/// The face vertex across local edge `le` from face vertex `f`.
fn across(le: usize, f: usize) -> usize {
    let (a, b) = TET_EDGES[le];
    others(&[a, b, f])[0]
}

impl Skeleton {
    pub fn new(t: &Triangulation) -> Result<Self, StateSumError> {
        let reps = t.face_representatives();
        let perms = permutations4();
        let mut tets = Vec::with_capacity(t.tet_count());
        // symbolic triple read at each (tet, face) link vertex
        let mut readings = vec![[[(0, false); 3]; 4]; t.tet_count()];
        for s in 0..t.tet_count() {
            let cls = |le: usize| t.edge_class(s, le);
            let lk = link(t.sign(s), |le| t.edge_flipped(s, le));
            // arc direction between face vertices f and g
            let runs = |f: usize, g: usize| {
                let le = across_pair(f, g);
                lk.forward[le] == (f < g)
            };
            for f in 0..4 {
                readings[s][f] = lk.rot[f].map(|le| {
                    let g = across(le, f);
                    // incoming reads the color, outgoing its dual
                    (cls(le), runs(f, g))
                });
            }
            let phi = perms
                .iter()
                .find(|p| {
                    (0..4).all(|f| {
                        let mine: Vec<usize> = lk.rot[f].iter().map(|&le| p[across(le, f)]).collect();
                        let x = p[f];
                        let theirs: Vec<usize> = ROTATION[x].iter().map(|&e| ref_other_end(e, x)).collect();
                        cyclic_eq(&mine, &theirs)
                    })
                })
                .ok_or_else(|| {
                    StateSumError::Convention(format!("link of tetrahedron {s} is not the reference graph"))
                })?;
            let mut inv = [0; 4];
            for f in 0..4 {
                inv[phi[f]] = f;
            }
            let edges: [Slot; 6] = std::array::from_fn(|er| {
                let (x, y) = EDGE_ENDS[er];
                let (f, g) = (inv[x], inv[y]);
                (cls(across_pair(f, g)), !runs(f, g))
            });
            let faces: [(usize, bool); 4] = std::array::from_fn(|x| {
                let f = inv[x];
                let k = t.face_class(s, f);
                (k, reps[k] == (s, f))
            });
            tets.push(TetSlots { edges, faces });
        }
        let mut faces = Vec::with_capacity(reps.len());
        for (k, &(s, f)) in reps.iter().enumerate() {
            let mine = readings[s][f];
            let g = t.gluing(s, f);
            let other = readings[g.tet][g.perm[f]];
            let flipped: Vec<Slot> = mine.iter().rev().map(|&(e, d)| (e, !d)).collect();
            if !cyclic_eq(&flipped, &other) {
                return Err(StateSumError::Convention(format!("face class {k} does not read dual triples")));
            }
            faces.push(FaceSlots { triple: mine });
        }
        Ok(Skeleton { edge_count: t.counts()[1], tets, faces })
    }
}

/// The local edge shared by faces f and g (the edge missing both).
fn across_pair(f: usize, g: usize) -> usize {
    let ab = others(&[f, g]);
    tet_edge(ab[0], ab[1])
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}
