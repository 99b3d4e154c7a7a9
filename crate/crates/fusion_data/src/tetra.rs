//! The reference tetrahedral graph and its orientation-preserving symmetries.
//!
//! Vertices A, B, C, D are numbered 0..4 and edges i, j, k, l, m, n are
//! numbered 0..6. The 6j tensor of a coloring is indexed by the bases of the
//! vertex triples in the order A, B, C, D.

use std::sync::OnceLock;

pub const EDGE_NAMES: [&str; 6] = ["i", "j", "k", "l", "m", "n"];

/// (tail, head) of each edge.
pub const EDGE_ENDS: [(usize, usize); 6] = [
    (0, 1), // i: A -> B
    (2, 1), // j: C -> B
    (1, 3), // k: B -> D
    (2, 3), // l: C -> D
    (3, 0), // m: D -> A
    (0, 2), // n: A -> C
];

/// Counterclockwise order of edges at each vertex.
pub const ROTATION: [[usize; 3]; 4] = [
    [4, 0, 5], // A: m, i, n
    [1, 0, 2], // B: j, i, k
    [5, 1, 3], // C: n, j, l
    [3, 2, 4], // D: l, k, m
];

/// Signed edge ends at each vertex in cyclic order: (edge, incoming?).
pub fn vertex_ends(v: usize) -> [(usize, bool); 3] {
    ROTATION[v].map(|e| (e, EDGE_ENDS[e].1 == v))
}

fn other_end(e: usize, v: usize) -> usize {
    let (a, b) = EDGE_ENDS[e];
    if a == v {
        b
    } else {
        a
    }
}

fn edge_between(x: usize, y: usize) -> usize {
    (0..6)
        .find(|&e| {
            let (a, b) = EDGE_ENDS[e];
            (a, b) == (x, y) || (a, b) == (y, x)
        })
        .expect("complete graph")
}

fn cyclic_eq(a: [usize; 3], b: [usize; 3]) -> bool {
    (0..3).any(|r| (0..3).all(|t| a[t] == b[(t + r) % 3]))
}

/// The vertex permutations preserving the rotation system. Entry `p[x]` is
/// the image of vertex `x`.
pub fn automorphisms() -> &'static [[usize; 4]] {
    static AUTOS: OnceLock<Vec<[usize; 4]>> = OnceLock::new();
    AUTOS.get_or_init(|| {
        let mut out = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = [a, b, c, d];
                        let mut seen = [false; 4];
                        p.iter().for_each(|&x| seen[x] = true);
                        if !seen.iter().all(|&s| s) {
                            continue;
                        }
                        let ok = (0..4).all(|v| {
                            let nb = ROTATION[v].map(|e| p[other_end(e, v)]);
                            let target = ROTATION[p[v]].map(|e| other_end(e, p[v]));
                            cyclic_eq(nb, target)
                        });
                        if ok {
                            out.push(p);
                        }
                    }
                }
            }
        }
        assert_eq!(out.len(), 12);
        out
    })
}

/// One re-reading of a colored reference graph through a symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reading {
    /// Colors read off in the reference positions.
    pub labels: [usize; 6],
    /// `slot[x]` is the reference slot now occupied by vertex `x`.
    pub slot: [usize; 4],
}

/// All twelve readings of the reference graph colored by `t`.
pub fn readings(t: [usize; 6], dual: &[usize]) -> Vec<Reading> {
    automorphisms()
        .iter()
        .map(|p| {
            let mut inv = [0; 4];
            for x in 0..4 {
                inv[p[x]] = x;
            }
            let mut labels = [0; 6];
            for (e2, &(tail2, head2)) in EDGE_ENDS.iter().enumerate() {
                let (x, y) = (inv[tail2], inv[head2]);
                let e = edge_between(x, y);
                labels[e2] = if EDGE_ENDS[e] == (x, y) { t[e] } else { dual[t[e]] };
            }
            Reading { labels, slot: *p }
        })
        .collect()
}

/// Normalized vertex triples (A, B, C, D) of the coloring `t`.
pub fn vertex_triples(t: [usize; 6], dual: &[usize]) -> [[usize; 3]; 4] {
    let [i, j, k, l, m, n] = t;
    let d = |x: usize| dual[x];
    [[m, d(i), d(n)], [j, i, d(k)], [n, d(j), d(l)], [l, k, d(m)]]
}
