//! Evaluation of colored trivalent graphs in the 2-sphere.
//!
//! A [`Network`] is a rotation system: each vertex lists its three edge ends
//! in counterclockwise order. An end is incoming when the vertex is the head
//! of the edge. The multiplicity space of a vertex is H(x_0, x_1, x_2), where
//! x_r is the color of the r-th end if incoming and its dual otherwise.
//! Rotations of the list name the same space, so the starting end does not
//! matter.
//!
//! Networks are reduced by unit-edge deletion, bubble collapse, triangle
//! collapse through 6j symbols and fusion of parallel strands, until theta
//! graphs and tetrahedra remain.

mod reduce;
mod template;

use std::collections::BTreeSet;
use std::fmt;

use tvk_fusion_data::{FusionData, Label};

pub use reduce::{evaluate, evaluate_with_order};
pub use template::{evaluate_sum, Color, Template};

pub type EdgeId = usize;
pub type VertexId = usize;

/// An end of an edge as seen from the vertex it is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub edge: EdgeId,
    /// True when the vertex is the head of the edge.
    pub head: bool,
}

impl End {
    pub fn outgoing(edge: EdgeId) -> End {
        End { edge, head: false }
    }

    pub fn incoming(edge: EdgeId) -> End {
        End { edge, head: true }
    }

    /// The other end of the same edge.
    pub fn opposite(self) -> End {
        End { edge: self.edge, head: !self.head }
    }
}

/// The vector placed at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// A fixed basis vector of the multiplicity space.
    Index(usize),
    /// An open slot of the output tensor.
    Free(usize),
    /// One side of a contraction with the inverse pairing.
    Paired(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub ends: [End; 3],
    pub basis: Basis,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("structural error: {0}")]
    Structural(String),
}

fn structural(msg: impl Into<String>) -> GraphError {
    GraphError::Structural(msg.into())
}

/// A colored trivalent graph embedded in the 2-sphere, plus free circles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Network {
    colors: Vec<Label>,
    vertices: Vec<Vertex>,
    circles: Vec<Label>,
    pairs: Vec<(VertexId, VertexId)>,
}

impl Network {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn edge(&mut self, color: Label) -> EdgeId {
        self.colors.push(color);
        self.colors.len() - 1
    }

    pub fn vertex(&mut self, ends: [End; 3], basis: Basis) -> VertexId {
        self.vertices.push(Vertex { ends, basis });
        self.vertices.len() - 1
    }

    pub fn fixed(&mut self, ends: [End; 3], index: usize) -> VertexId {
        self.vertex(ends, Basis::Index(index))
    }

    pub fn free(&mut self, ends: [End; 3], slot: usize) -> VertexId {
        self.vertex(ends, Basis::Free(slot))
    }

    /// Contract the bases of `u` and `v` with the inverse pairing; the
    /// multiplicity space of `v` must be dual to that of `u`.
    pub fn pair(&mut self, u: VertexId, v: VertexId) {
        let k = self.pairs.len();
        self.pairs.push((u, v));
        self.vertices[u].basis = Basis::Paired(k);
        self.vertices[v].basis = Basis::Paired(k);
    }

    /// A circle without vertices.
    pub fn circle(&mut self, color: Label) {
        self.circles.push(color);
    }

    pub fn color(&self, e: EdgeId) -> Label {
        self.colors[e]
    }

    pub fn set_color(&mut self, e: EdgeId, color: Label) {
        self.colors[e] = color;
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn circles(&self) -> &[Label] {
        &self.circles
    }

    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.pairs
    }

    pub(crate) fn circles_mut(&mut self) -> &mut Vec<Label> {
        &mut self.circles
    }

    /// Color read at an end: the edge color if incoming, its dual otherwise.
    pub fn reading(&self, f: &FusionData, end: End) -> Label {
        let c = self.colors[end.edge];
        if end.head {
            c
        } else {
            f.dual(c)
        }
    }

    /// The multiplicity space of a vertex, read from its first end.
    pub fn triple(&self, f: &FusionData, v: VertexId) -> [Label; 3] {
        self.vertices[v].ends.map(|e| self.reading(f, e))
    }

    /// The same network with edge `e` reversed and recolored by the dual.
    pub fn reversed(&self, f: &FusionData, e: EdgeId) -> Network {
        let mut g = self.clone();
        g.colors[e] = f.dual(g.colors[e]);
        for v in g.vertices.iter_mut() {
            for end in v.ends.iter_mut() {
                if end.edge == e {
                    end.head = !end.head;
                }
            }
        }
        g
    }

    /// Vertex and position of every edge end, indexed by `2 * edge + head`.
    fn locate(&self) -> Result<Vec<(VertexId, usize)>, GraphError> {
        let mut at = vec![None; 2 * self.colors.len()];
        for (v, vx) in self.vertices.iter().enumerate() {
            for (p, end) in vx.ends.iter().enumerate() {
                if end.edge >= self.colors.len() {
                    return Err(structural(format!("vertex {v} uses unknown edge {}", end.edge)));
                }
                let slot = 2 * end.edge + usize::from(end.head);
                if at[slot].is_some() {
                    return Err(structural(format!("edge {} end attached twice", end.edge)));
                }
                at[slot] = Some((v, p));
            }
        }
        at.into_iter()
            .enumerate()
            .map(|(s, x)| x.ok_or_else(|| structural(format!("edge {} has a dangling end", s / 2))))
            .collect()
    }

    /// Faces of the rotation system as cyclic lists of (vertex, leaving end).
    /// Arriving at a vertex, a face continues along the next end
    /// counterclockwise, so faces are traversed clockwise.
    pub fn faces(&self) -> Result<Vec<Vec<(VertexId, End)>>, GraphError> {
        let at = self.locate()?;
        let mut used = vec![false; at.len()];
        let mut faces = Vec::new();
        for v in 0..self.vertices.len() {
            for p in 0..3 {
                let start = self.vertices[v].ends[p];
                if used[2 * start.edge + usize::from(start.head)] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut x, mut e) = (v, start);
                while !used[2 * e.edge + usize::from(e.head)] {
                    used[2 * e.edge + usize::from(e.head)] = true;
                    face.push((x, e));
                    let o = e.opposite();
                    let (y, q) = at[2 * o.edge + usize::from(o.head)];
                    x = y;
                    e = self.vertices[y].ends[(q + 1) % 3];
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Result<Vec<Vec<VertexId>>, GraphError> {
        let at = self.locate()?;
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for end in self.vertices[v].ends {
                    let o = end.opposite();
                    let (w, _) = at[2 * o.edge + usize::from(o.head)];
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        Ok(out)
    }

    /// Checks attachment, basis bookkeeping and that every component is a
    /// sphere (V - E + F = 2).
    pub fn validate(&self) -> Result<(), GraphError> {
        self.locate()?;
        let mut slots = BTreeSet::new();
        for (v, vx) in self.vertices.iter().enumerate() {
            match vx.basis {
                Basis::Free(s) => {
                    if !slots.insert(s) {
                        return Err(structural(format!("free slot {s} used twice")));
                    }
                }
                Basis::Paired(k) => {
                    let ok = self.pairs.get(k).is_some_and(|&(a, b)| (a == v || b == v) && a != b);
                    if !ok {
                        return Err(structural(format!("vertex {v} has an invalid pairing")));
                    }
                }
                Basis::Index(_) => {}
            }
        }
        if slots.iter().enumerate().any(|(i, &s)| i != s) {
            return Err(structural("free slots must be numbered 0, 1, ..."));
        }
        for (k, &(a, b)) in self.pairs.iter().enumerate() {
            if self.vertices[a].basis != Basis::Paired(k) || self.vertices[b].basis != Basis::Paired(k) {
                return Err(structural(format!("pairing {k} was overwritten")));
            }
        }
        let faces = self.faces()?;
        let at = self.locate()?;
        for comp in self.components()? {
            let members: BTreeSet<VertexId> = comp.iter().copied().collect();
            let v = comp.len() as i64;
            let e = (0..self.colors.len()).filter(|&e| members.contains(&at[2 * e].0)).count() as i64;
            let f = faces.iter().filter(|face| members.contains(&face[0].0)).count() as i64;
            if v - e + f != 2 {
                return Err(structural(format!("rotation system is not spherical (V - E + F = {})", v - e + f)));
            }
        }
        Ok(())
    }

    pub(crate) fn free_slots(&self) -> usize {
        self.vertices.iter().filter(|v| matches!(v.basis, Basis::Free(_))).count()
    }
}

impl fmt::Display for Network {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "network: {} vertices, {} edges", self.vertices.len(), self.colors.len())?;
        for (e, c) in self.colors.iter().enumerate() {
            writeln!(out, "  e{e} color {c}")?;
        }
        for (v, vx) in self.vertices.iter().enumerate() {
            let ends: Vec<String> =
                vx.ends.iter().map(|e| format!("e{}{}", e.edge, if e.head { "+" } else { "-" })).collect();
            writeln!(out, "  v{v} ({}) {:?}", ends.join(" "), vx.basis)?;
        }
        for c in &self.circles {
            writeln!(out, "  circle color {c}")?;
        }
        Ok(())
    }
}
