//! Closed oriented 3-manifolds as face-glued tetrahedra.
//!
//! Each tetrahedron has local vertices 0..4; face `f` is the face missing
//! vertex `f`. A gluing of face `f` of tetrahedron `t` records the target
//! tetrahedron and a permutation of local vertices sending `f` to the target
//! face. Gluings must be involutive, orientation reversing for the stored
//! signs, and every vertex link must be a 2-sphere.
//!
//! Document format:
//!
//! ```text
//! tvk-triangulation 1
//! name <word>                       (optional)
//! tets <n>
//! glue <t> <f> <t2> <a> <b> <c>     images of the face vertices in ascending order
//! ```
//! Each face pair may be listed from one side or from both; `#` starts a
//! comment line.

mod builtin;
mod homology;
mod moves;

use std::collections::BTreeMap;
use std::fmt::Write as _;

pub use builtin::{builtin, lens, s1xs2, s3_1tet, s3_2tet, t3};
pub use homology::{elementary_divisors, first_homology};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ManifoldError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("structural error: {0}")]
    Structural(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

fn structural(msg: impl Into<String>) -> ManifoldError {
    ManifoldError::Structural(msg.into())
}

/// Face `face` of some tetrahedron is glued to face `perm[face]` of `tet`;
/// local vertex `v` goes to `perm[v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub perm: [usize; 4],
}

/// Local edges of a tetrahedron as ascending vertex pairs.
pub const TET_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn tet_edge(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    TET_EDGES.iter().position(|&e| e == (a, b)).expect("distinct vertices")
}

pub fn perm_sign(p: &[usize]) -> i32 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn invert(p: [usize; 4]) -> [usize; 4] {
    let mut q = [0; 4];
    for i in 0..4 {
        q[p[i]] = i;
    }
    q
}

/// Union-find with a parity bit per element relative to its root.
struct ParityUf {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUf {
    fn new(n: usize) -> Self {
        ParityUf { parent: (0..n).collect(), parity: vec![false; n] }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (r, p) = self.find(self.parent[x]);
        self.parent[x] = r;
        self.parity[x] ^= p;
        (r, self.parity[x])
    }

    /// Record parity(x) xor parity(y) = rel; false on contradiction.
    fn union(&mut self, x: usize, y: usize, rel: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return (px ^ py) == rel;
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ rel;
        true
    }
}

/// Dense class numbering of union-find roots, in order of first appearance.
fn number_classes(roots: impl Iterator<Item = usize>) -> (Vec<usize>, usize) {
    let mut ids = BTreeMap::new();
    let out: Vec<usize> = roots
        .map(|r| {
            let n = ids.len();
            *ids.entry(r).or_insert(n)
        })
        .collect();
    (out, ids.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    name: String,
    glue: Vec<[Gluing; 4]>,
    sign: Vec<i32>,
    vertex_class: Vec<[usize; 4]>,
    edge_class: Vec<[usize; 6]>,
    edge_flip: Vec<[bool; 6]>,
    face_class: Vec<[usize; 4]>,
    counts: [usize; 4],
}

impl Triangulation {
    /// Validate gluings and derive classes and orientation signs.
    pub fn new(name: impl Into<String>, glue: Vec<[Gluing; 4]>) -> Result<Self, ManifoldError> {
        let n = glue.len();
        if n == 0 {
            return Err(structural("no tetrahedra"));
        }
        for (t, faces) in glue.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                let mut seen = [false; 4];
                g.perm.iter().for_each(|&x| {
                    if x < 4 {
                        seen[x] = true
                    }
                });
                if g.tet >= n || !seen.iter().all(|&s| s) {
                    return Err(structural(format!("gluing of ({t}, {f}) is not a bijection onto a tetrahedron")));
                }
                if g.tet == t && g.perm[f] == f {
                    return Err(structural(format!("face ({t}, {f}) is glued to itself")));
                }
                let back = glue[g.tet][g.perm[f]];
                if back.tet != t || back.perm != invert(g.perm) {
                    return Err(structural(format!("gluing of ({t}, {f}) is not involutive")));
                }
            }
        }
        // orientation
        let mut sign = vec![0i32; n];
        for s in 0..n {
            if sign[s] != 0 {
                continue;
            }
            sign[s] = 1;
            let mut stack = vec![s];
            while let Some(t) = stack.pop() {
                for g in &glue[t] {
                    let want = -sign[t] * perm_sign(&g.perm);
                    if sign[g.tet] == 0 {
                        sign[g.tet] = want;
                        stack.push(g.tet);
                    } else if sign[g.tet] != want {
                        return Err(structural("triangulation is not orientable"));
                    }
                }
            }
        }
        // vertex classes
        let mut vu = ParityUf::new(4 * n);
        for (t, faces) in glue.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                for v in (0..4).filter(|&v| v != f) {
                    vu.union(4 * t + v, 4 * g.tet + g.perm[v], false);
                }
            }
        }
        let (vc, nv) = number_classes((0..4 * n).map(|x| vu.find(x).0));
        // oriented edge classes
        let mut eu = ParityUf::new(6 * n);
        for (t, faces) in glue.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                for (e, &(a, b)) in TET_EDGES.iter().enumerate() {
                    if a == f || b == f {
                        continue;
                    }
                    let (a2, b2) = (g.perm[a], g.perm[b]);
                    if !eu.union(6 * t + e, 6 * g.tet + tet_edge(a2, b2), a2 > b2) {
                        return Err(structural("an edge is identified with itself in reverse"));
                    }
                }
            }
        }
        let (ec, ne) = number_classes((0..6 * n).map(|x| eu.find(x).0));
        let flips: Vec<bool> = (0..6 * n).map(|x| eu.find(x).1).collect();
        // face classes
        let mut fu = ParityUf::new(4 * n);
        for (t, faces) in glue.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                fu.union(4 * t + f, 4 * g.tet + g.perm[f], false);
            }
        }
        let (fc, nf) = number_classes((0..4 * n).map(|x| fu.find(x).0));
        let tri = Triangulation {
            name: name.into(),
            sign,
            vertex_class: (0..n).map(|t| [vc[4 * t], vc[4 * t + 1], vc[4 * t + 2], vc[4 * t + 3]]).collect(),
            edge_class: (0..n).map(|t| std::array::from_fn(|e| ec[6 * t + e])).collect(),
            edge_flip: (0..n).map(|t| std::array::from_fn(|e| flips[6 * t + e])).collect(),
            face_class: (0..n).map(|t| [fc[4 * t], fc[4 * t + 1], fc[4 * t + 2], fc[4 * t + 3]]).collect(),
            counts: [nv, ne, nf, n],
            glue,
        };
        tri.check_links()?;
        let [v, e, f, t] = tri.counts.map(|x| x as i64);
        if v - e + f - t != 0 {
            return Err(structural(format!("Euler characteristic is {}, not 0", v - e + f - t)));
        }
        Ok(tri)
    }

    /// Each vertex link, built from the corner triangles, must be a sphere.
    fn check_links(&self) -> Result<(), ManifoldError> {
        let n = self.glue.len();
        // link vertices: (t, v, w) with w != v, indexed 16 t + 4 v + w
        let mut lu = ParityUf::new(16 * n);
        for (t, faces) in self.glue.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                for v in (0..4).filter(|&v| v != f) {
                    for w in (0..4).filter(|&w| w != f && w != v) {
                        lu.union(16 * t + 4 * v + w, 16 * g.tet + 4 * g.perm[v] + g.perm[w], false);
                    }
                }
            }
        }
        for class in 0..self.counts[0] {
            let corners: Vec<(usize, usize)> = (0..n)
                .flat_map(|t| (0..4).map(move |v| (t, v)))
                .filter(|&(t, v)| self.vertex_class[t][v] == class)
                .collect();
            let mut lverts = std::collections::BTreeSet::new();
            for &(t, v) in &corners {
                for w in (0..4).filter(|&w| w != v) {
                    lverts.insert(lu.find(16 * t + 4 * v + w).0);
                }
            }
            let tris = corners.len() as i64;
            let edges = 3 * tris / 2;
            let chi = lverts.len() as i64 - edges + tris;
            if chi != 2 {
                return Err(structural(format!("vertex link has Euler characteristic {chi}, not a sphere")));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tet_count(&self) -> usize {
        self.glue.len()
    }

    /// (vertices, edges, faces, tetrahedra).
    pub fn counts(&self) -> [usize; 4] {
        self.counts
    }

    pub fn gluing(&self, t: usize, f: usize) -> Gluing {
        self.glue[t][f]
    }

    pub fn gluings(&self) -> &[[Gluing; 4]] {
        &self.glue
    }

    /// Orientation sign of a tetrahedron relative to its local vertex order.
    pub fn sign(&self, t: usize) -> i32 {
        self.sign[t]
    }

    pub fn vertex_class(&self, t: usize, v: usize) -> usize {
        self.vertex_class[t][v]
    }

    pub fn edge_class(&self, t: usize, e: usize) -> usize {
        self.edge_class[t][e]
    }

    /// True when local edge `e` (ascending) runs against its class orientation.
    pub fn edge_flipped(&self, t: usize, e: usize) -> bool {
        self.edge_flip[t][e]
    }

    pub fn face_class(&self, t: usize, f: usize) -> usize {
        self.face_class[t][f]
    }

    /// Canonical representative (tet, face) of each face class: the smallest.
    pub fn face_representatives(&self) -> Vec<(usize, usize)> {
        let mut reps = vec![None; self.counts[2]];
        for t in 0..self.glue.len() {
            for f in 0..4 {
                let c = self.face_class[t][f];
                if reps[c].is_none() {
                    reps[c] = Some((t, f));
                }
            }
        }
        reps.into_iter().map(|x| x.expect("every class has a member")).collect()
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let n = self.glue.len();
        let mut uf = ParityUf::new(n);
        for (t, faces) in self.glue.iter().enumerate() {
            for g in faces {
                uf.union(t, g.tet, false);
            }
        }
        number_classes((0..n).map(|t| uf.find(t).0)).1
    }

    /// The same manifold with the local vertices of tetrahedron `t`
    /// renumbered: old local vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, t: usize, perm: [usize; 4]) -> Result<Self, ManifoldError> {
        let mut glue = self.glue.clone();
        let inv = invert(perm);
        // old face f of t becomes face perm[f]
        let mut new_faces = [Gluing { tet: 0, perm: [0; 4] }; 4];
        for f in 0..4 {
            let g = self.glue[t][f];
            let mut p = [0; 4];
            for v in 0..4 {
                // new local v = old inv[v]
                p[v] = g.perm[inv[v]];
            }
            new_faces[perm[f]] = Gluing { tet: g.tet, perm: p };
        }
        glue[t] = new_faces;
        // gluings pointing into t
        for s in 0..glue.len() {
            for f in 0..4 {
                if glue[s][f].tet == t {
                    let p = glue[s][f].perm;
                    glue[s][f].perm = p.map(|x| perm[x]);
                }
            }
        }
        Triangulation::new(self.name.clone(), glue)
    }

    /// Disjoint union; the tetrahedra of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Triangulation) -> Result<Self, ManifoldError> {
        let off = self.glue.len();
        let mut glue = self.glue.clone();
        glue.extend(other.glue.iter().map(|faces| faces.map(|g| Gluing { tet: g.tet + off, perm: g.perm })));
        Triangulation::new(format!("{}+{}", self.name, other.name), glue)
    }

    pub fn to_document(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "tvk-triangulation 1");
        let _ = writeln!(s, "name {}", self.name);
        let _ = writeln!(s, "tets {}", self.glue.len());
        for (t, faces) in self.glue.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                if (g.tet, g.perm[f]) < (t, f) {
                    continue;
                }
                let img: Vec<String> = (0..4).filter(|&v| v != f).map(|v| g.perm[v].to_string()).collect();
                let _ = writeln!(s, "glue {t} {f} {} {}", g.tet, img.join(" "));
            }
        }
        s
    }

    pub fn from_document(text: &str) -> Result<Self, ManifoldError> {
        let mut name = String::from("unnamed");
        let mut n: Option<usize> = None;
        let mut header = false;
        let mut glue: Vec<[Option<Gluing>; 4]> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let err = |msg: &str| ManifoldError::Syntax { line, msg: msg.to_string() };
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = t.split_whitespace().collect();
            match words[0] {
                "tvk-triangulation" => {
                    if words.get(1) != Some(&"1") || words.len() != 2 {
                        return Err(err("unsupported header"));
                    }
                    header = true;
                }
                "name" => {
                    name = words.get(1).ok_or_else(|| err("missing name"))?.to_string();
                }
                "tets" => {
                    let k: usize =
                        words.get(1).and_then(|w| w.parse().ok()).ok_or_else(|| err("bad tetrahedron count"))?;
                    if n.is_some() {
                        return Err(err("tets given twice"));
                    }
                    n = Some(k);
                    glue = vec![[None; 4]; k];
                }
                "glue" => {
                    let k = n.ok_or_else(|| err("glue before tets"))?;
                    if words.len() != 7 {
                        return Err(err("glue takes six integers"));
                    }
                    let nums: Vec<usize> = words[1..]
                        .iter()
                        .map(|w| w.parse())
                        .collect::<Result<_, _>>()
                        .map_err(|_| err("expected integers"))?;
                    let (t, f, t2) = (nums[0], nums[1], nums[2]);
                    if t >= k || t2 >= k || f >= 4 || nums[3..].iter().any(|&x| x >= 4) {
                        return Err(err("index out of range"));
                    }
                    let mut perm = [usize::MAX; 4];
                    for (slot, v) in (0..4).filter(|&v| v != f).enumerate() {
                        perm[v] = nums[3 + slot];
                    }
                    let used: Vec<usize> = nums[3..].to_vec();
                    let missing: Vec<usize> = (0..4).filter(|x| !used.contains(x)).collect();
                    if missing.len() != 1 {
                        return Err(err("face images must be distinct"));
                    }
                    perm[f] = missing[0];
                    let g = Gluing { tet: t2, perm };
                    let back = Gluing { tet: t, perm: invert(perm) };
                    for (a, b, x) in [(t, f, g), (t2, perm[f], back)] {
                        match glue[a][b] {
                            Some(old) if old != x => return Err(err("conflicting gluing")),
                            _ => glue[a][b] = Some(x),
                        }
                    }
                }
                _ => return Err(err("unknown keyword")),
            }
        }
        if !header {
            return Err(structural("missing 'tvk-triangulation 1' header"));
        }
        let n = n.ok_or_else(|| structural("missing tets line"))?;
        let mut out = Vec::with_capacity(n);
        for (t, faces) in glue.into_iter().enumerate() {
            let mut row = [Gluing { tet: 0, perm: [0; 4] }; 4];
            for (f, g) in faces.into_iter().enumerate() {
                row[f] = g.ok_or_else(|| structural(format!("face ({t}, {f}) is not glued")))?;
            }
            out.push(row);
        }
        Triangulation::new(name, out)
    }
}

pub use moves::{pachner_14, pachner_23, pachner_41};
