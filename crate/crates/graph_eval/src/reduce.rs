//! Recoupling reduction of closed networks with fixed bases.

use tvk_fusion_data::tensor::for_each_index;
use tvk_fusion_data::tetra::{EDGE_ENDS, ROTATION};
use tvk_fusion_data::{FusionData, Label, Tensor};
use tvk_scalars::Cyclotomic;

use crate::{structural, Basis, End, GraphError, Network};

/// Working copy with removable edges and vertices; every basis is fixed.
#[derive(Clone, Debug)]
struct Work {
    color: Vec<Option<Label>>,
    verts: Vec<Option<([End; 3], usize)>>,
}

/// Chooses among equivalent reduction sites. Salt 0 always takes the first.
struct Chooser {
    salt: usize,
    count: usize,
}

impl Chooser {
    fn pick(&mut self, n: usize) -> usize {
        if self.salt == 0 || n <= 1 {
            return 0;
        }
        self.count += 1;
        (self.salt.wrapping_mul(31).wrapping_add(self.count.wrapping_mul(17))) % n
    }
}

fn cyclic_eq(a: [Label; 3], b: [Label; 3]) -> bool {
    (0..3).any(|r| (0..3).all(|t| a[t] == b[(t + r) % 3]))
}

impl Work {
    fn reading(&self, f: &FusionData, end: End) -> Label {
        let c = self.color[end.edge].expect("live edge");
        if end.head {
            c
        } else {
            f.dual(c)
        }
    }

    fn triple(&self, f: &FusionData, ends: &[End; 3]) -> [Label; 3] {
        ends.map(|e| self.reading(f, e))
    }

    fn live(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.verts.len()).filter(|&v| self.verts[v].is_some())
    }

    fn ends(&self, v: usize) -> [End; 3] {
        self.verts[v].expect("live vertex").0
    }

    fn basis(&self, v: usize) -> usize {
        self.verts[v].expect("live vertex").1
    }

    fn new_edge(&mut self, c: Label) -> usize {
        self.color.push(Some(c));
        self.color.len() - 1
    }

    fn new_vertex(&mut self, ends: [End; 3], basis: usize) -> usize {
        self.verts.push(Some((ends, basis)));
        self.verts.len() - 1
    }

    /// Vertex and position of each end, indexed by `2 * edge + head`.
    fn locate(&self) -> Vec<Option<(usize, usize)>> {
        let mut at = vec![None; 2 * self.color.len()];
        for v in self.live() {
            for (p, e) in self.ends(v).iter().enumerate() {
                at[2 * e.edge + usize::from(e.head)] = Some((v, p));
            }
        }
        at
    }

    fn find(&self, end: End) -> (usize, usize) {
        for v in self.live() {
            if let Some(p) = self.ends(v).iter().position(|&e| e == end) {
                return (v, p);
            }
        }
        panic!("end not attached");
    }

    fn replace_end(&mut self, old: End, new: End) {
        let (v, p) = self.find(old);
        self.verts[v].as_mut().unwrap().0[p] = new;
    }

    /// Join the strands entering a removed vertex through `p` and `q`.
    /// Returns the color of a closed circle if one is formed.
    fn merge(&mut self, f: &FusionData, p: End, q: End) -> Option<Label> {
        let c = self.reading(f, p);
        if p.edge == q.edge {
            self.color[p.edge] = None;
            return Some(c);
        }
        let n = self.new_edge(c);
        self.replace_end(p.opposite(), End::outgoing(n));
        self.replace_end(q.opposite(), End::incoming(n));
        self.color[p.edge] = None;
        self.color[q.edge] = None;
        None
    }

    /// Remove a vertex whose end `skip` is being deleted, joining the other two.
    fn smooth(&mut self, f: &FusionData, v: usize, skip: End) -> Option<Label> {
        let ends = self.ends(v);
        let pos = ends.iter().position(|&e| e == skip).expect("end at vertex");
        self.verts[v] = None;
        self.merge(f, ends[(pos + 1) % 3], ends[(pos + 2) % 3])
    }

    fn admissible(&self, f: &FusionData) -> bool {
        self.live().all(|v| {
            let (ends, b) = self.verts[v].unwrap();
            b < f.n(self.triple(f, &ends))
        })
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let at = self.locate();
        let mut comp = vec![usize::MAX; self.verts.len()];
        let mut out = Vec::new();
        for s in self.live() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut stack = vec![s];
            let mut members = vec![];
            while let Some(v) = stack.pop() {
                members.push(v);
                for e in self.ends(v) {
                    let o = e.opposite();
                    let (w, _) = at[2 * o.edge + usize::from(o.head)].expect("attached");
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            out.push(members);
        }
        out
    }

    fn restrict(&self, members: &[usize]) -> Work {
        let mut verts = vec![None; self.verts.len()];
        let mut color = vec![None; self.color.len()];
        for &v in members {
            verts[v] = self.verts[v];
            for e in self.ends(v) {
                color[e.edge] = self.color[e.edge];
            }
        }
        Work { color, verts }
    }

    fn has_bridge(&self) -> bool {
        let at = self.locate();
        let n = self.verts.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        fn dfs(
            w: &Work,
            at: &[Option<(usize, usize)>],
            v: usize,
            parent_edge: usize,
            disc: &mut [usize],
            low: &mut [usize],
            time: &mut usize,
        ) -> bool {
            disc[v] = *time;
            low[v] = *time;
            *time += 1;
            for e in w.ends(v) {
                if e.edge == parent_edge {
                    continue;
                }
                let o = e.opposite();
                let (u, _) = at[2 * o.edge + usize::from(o.head)].unwrap();
                if disc[u] == usize::MAX {
                    if dfs(w, at, u, e.edge, disc, low, time) {
                        return true;
                    }
                    low[v] = low[v].min(low[u]);
                    if low[u] > disc[v] {
                        return true;
                    }
                } else {
                    low[v] = low[v].min(disc[u]);
                }
            }
            false
        }
        for s in self.live().collect::<Vec<_>>() {
            if disc[s] == usize::MAX && dfs(self, &at, s, usize::MAX, &mut disc, &mut low, &mut time) {
                return true;
            }
        }
        false
    }

    fn faces(&self) -> Vec<Vec<(usize, End)>> {
        let at = self.locate();
        let mut used = vec![false; at.len()];
        let mut faces = Vec::new();
        for v in self.live() {
            for p in 0..3 {
                let start = self.ends(v)[p];
                if used[2 * start.edge + usize::from(start.head)] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut x, mut e) = (v, start);
                while !used[2 * e.edge + usize::from(e.head)] {
                    used[2 * e.edge + usize::from(e.head)] = true;
                    face.push((x, e));
                    let o = e.opposite();
                    let (y, q) = at[2 * o.edge + usize::from(o.head)].unwrap();
                    x = y;
                    e = self.ends(y)[(q + 1) % 3];
                }
                faces.push(face);
            }
        }
        faces
    }

    /// The third end of `v`, not on either of the given edges.
    fn outer_end(&self, v: usize, a: usize, b: usize) -> End {
        let ends = self.ends(v);
        let mut it = ends.iter().filter(|e| e.edge != a && e.edge != b);
        let out = *it.next().expect("outer end");
        debug_assert!(it.next().is_none());
        out
    }
}

/// Value of a planar tetrahedron, given four vertices and a color lookup.
fn tet_value(f: &FusionData, verts: [([End; 3], usize); 4], color: impl Fn(usize) -> Label) -> Cyclotomic {
    let vertex_of = |end: End| -> usize { (0..4).find(|&x| verts[x].0.contains(&end)).expect("closed tetrahedron") };
    let other = |x: usize, end: End| -> usize {
        let _ = x;
        vertex_of(end.opposite())
    };
    let ref_other = |e: usize, v: usize| if EDGE_ENDS[e].0 == v { EDGE_ENDS[e].1 } else { EDGE_ENDS[e].0 };
    let mut perm = [0usize; 4];
    for code in 0..256usize {
        for (x, slot) in perm.iter_mut().enumerate() {
            *slot = (code >> (2 * x)) & 3;
        }
        let mut seen = [false; 4];
        perm.iter().for_each(|&x| seen[x] = true);
        if !seen.iter().all(|&s| s) {
            continue;
        }
        let ok = (0..4).all(|x| {
            let nb = verts[x].0.map(|e| perm[other(x, e)]);
            let target = ROTATION[perm[x]].map(|e| ref_other(e, perm[x]));
            (0..3).any(|r| (0..3).all(|t| nb[t] == target[(t + r) % 3]))
        });
        if !ok {
            continue;
        }
        let mut inv = [0; 4];
        for x in 0..4 {
            inv[perm[x]] = x;
        }
        let mut labels = [0; 6];
        for (e2, &(t2, h2)) in EDGE_ENDS.iter().enumerate() {
            let (x, y) = (inv[t2], inv[h2]);
            let end = verts[x].0.iter().copied().find(|&e| vertex_of(e.opposite()) == y).expect("complete graph");
            let c = color(end.edge);
            labels[e2] = if end.head { f.dual(c) } else { c };
        }
        let mut idx = [0; 4];
        for x in 0..4 {
            idx[perm[x]] = verts[x].1;
        }
        return match f.sixj(labels) {
            Some(t) => t.get(&idx).clone(),
            None => Cyclotomic::zero(),
        };
    }
    panic!("network with four vertices is not a planar tetrahedron");
}

fn is_tetrahedron(w: &Work) -> bool {
    let vs: Vec<usize> = w.live().collect();
    if vs.len() != 4 {
        return false;
    }
    let at = w.locate();
    let mut adj = [[0u8; 4]; 4];
    for (a, &v) in vs.iter().enumerate() {
        for e in w.ends(v) {
            let o = e.opposite();
            let (u, _) = at[2 * o.edge + usize::from(o.head)].unwrap();
            let b = vs.iter().position(|&x| x == u).unwrap();
            adj[a][b] += 1;
        }
    }
    (0..4).all(|a| (0..4).all(|b| adj[a][b] == u8::from(a != b)))
}

/// Replace the triangle (u, v, w), listed in face order, by one vertex.
fn triangle(f: &FusionData, w: &Work, [u, v, x]: [usize; 3], [euv, evw, ewu]: [usize; 3]) -> Vec<(Cyclotomic, Work)> {
    let ou = w.outer_end(u, euv, ewu);
    let ov = w.outer_end(v, euv, evw);
    let ow = w.outer_end(x, evw, ewu);
    let t_ends = [ou, ow, ov];
    let tt = w.triple(f, &t_ends);
    let nt = f.n(tt);
    if nt == 0 {
        return vec![];
    }
    let closing = [ou.opposite(), ov.opposite(), ow.opposite()];
    let nc = f.n(w.triple(f, &closing));
    let tets: Vec<Cyclotomic> = (0..nc)
        .map(|b| {
            tet_value(
                f,
                [(w.ends(u), w.basis(u)), (w.ends(v), w.basis(v)), (w.ends(x), w.basis(x)), (closing, b)],
                |e| w.color[e].expect("live edge"),
            )
        })
        .collect();
    let inv = f.omega_inv(tt).expect("admissible triple");
    let mut out = Vec::new();
    for beta in 0..nt {
        let c: Cyclotomic = (0..nc).map(|b| &inv[(beta, b)] * &tets[b]).sum();
        if c.is_zero() {
            continue;
        }
        let mut next = w.clone();
        for y in [u, v, x] {
            next.verts[y] = None;
        }
        for e in [euv, evw, ewu] {
            next.color[e] = None;
        }
        next.new_vertex(t_ends, beta);
        out.push((c, next));
    }
    out
}

/// Fuse the two face edges next to face position `i` into a z-strand and
/// collapse the resulting triangle, which moves the face edge.
fn fmove(f: &FusionData, w: &Work, face: &[(usize, End)], i: usize) -> Vec<(Cyclotomic, Work)> {
    let k = face.len();
    let (u, eu) = face[i];
    let (v, b1v) = face[(i + 1) % k];
    let (_, a2x) = face[(i + k - 1) % k];
    let b1y = b1v.opposite();
    let a2 = a2x.edge;
    let b1 = b1v.edge;
    let mut out = Vec::new();
    let mut base = w.clone();
    let a2p = base.new_edge(w.color[a2].unwrap());
    base.replace_end(a2x, End { edge: a2p, head: a2x.head });
    let b1p = base.new_edge(w.color[b1].unwrap());
    base.replace_end(b1y, End { edge: b1p, head: b1y.head });
    for z in f.labels() {
        let mut g = base.clone();
        let ze = g.new_edge(z);
        let p_ends = [b1y, a2x, End::incoming(ze)];
        let q_ends = [End::outgoing(ze), End { edge: a2p, head: !a2x.head }, End { edge: b1p, head: !b1y.head }];
        let tp = g.triple(f, &p_ends);
        let tq = g.triple(f, &q_ends);
        let (np, nq) = (f.n(tp), f.n(tq));
        if np == 0 || nq == 0 {
            continue;
        }
        let inv = f.omega_inv(tp).expect("admissible triple");
        for alpha in 0..np {
            for beta in 0..nq {
                let c = f.dim(z) * &inv[(alpha, beta)];
                if c.is_zero() {
                    continue;
                }
                let mut h = g.clone();
                let p = h.new_vertex(p_ends, alpha);
                h.new_vertex(q_ends, beta);
                for (c2, next) in triangle(f, &h, [u, v, p], [eu.edge, b1, a2]) {
                    out.push((&c * &c2, next));
                }
            }
        }
    }
    out
}

fn eval_closed(f: &FusionData, mut w: Work, ch: &mut Chooser) -> Cyclotomic {
    let mut coeff = Cyclotomic::one();
    loop {
        if !w.admissible(f) {
            return Cyclotomic::zero();
        }
        let at = w.locate();
        let units: Vec<usize> = (0..w.color.len())
            .filter(|&e| {
                w.color[e] == Some(f.unit()) && {
                    let (a, _) = at[2 * e].unwrap();
                    let (b, _) = at[2 * e + 1].unwrap();
                    a != b
                }
            })
            .collect();
        if !units.is_empty() {
            let e = units[ch.pick(units.len())];
            let (a, _) = at[2 * e].unwrap();
            let (b, _) = at[2 * e + 1].unwrap();
            for (v, end) in [(a, End::outgoing(e)), (b, End::incoming(e))] {
                if let Some(c) = w.smooth(f, v, end) {
                    coeff *= f.dim(c);
                }
            }
            w.color[e] = None;
            continue;
        }
        let comps = w.components();
        if comps.is_empty() {
            return coeff;
        }
        if comps.len() > 1 {
            for c in comps {
                let part = w.restrict(&c);
                coeff *= eval_closed(f, part, ch);
                if coeff.is_zero() {
                    return coeff;
                }
            }
            return coeff;
        }
        if w.has_bridge() {
            return Cyclotomic::zero();
        }
        let vs: Vec<usize> = w.live().collect();
        if vs.len() == 2 {
            let (u, v) = (vs[0], vs[1]);
            let tu = w.triple(f, &w.ends(u));
            debug_assert!(cyclic_eq(w.triple(f, &w.ends(v)), f.flip(tu)));
            let om = f.omega(tu).expect("admissible triple");
            return coeff * &om[(w.basis(v), w.basis(u))];
        }
        if is_tetrahedron(&w) {
            let verts = [vs[0], vs[1], vs[2], vs[3]].map(|x| (w.ends(x), w.basis(x)));
            return coeff * tet_value(f, verts, |e| w.color[e].unwrap());
        }
        let faces = w.faces();
        let min = faces.iter().map(|x| x.len()).min().expect("faces");
        let cands: Vec<&Vec<(usize, End)>> = faces.iter().filter(|x| x.len() == min).collect();
        let face = cands[ch.pick(cands.len())].clone();
        let branches = match min {
            2 => {
                let (u, e1) = face[0];
                let (v, e2) = face[1];
                let ou = w.outer_end(u, e1.edge, e2.edge);
                let ov = w.outer_end(v, e1.edge, e2.edge);
                let xa = w.reading(f, ou);
                if w.reading(f, ov) != f.dual(xa) {
                    return Cyclotomic::zero();
                }
                let tu = w.triple(f, &w.ends(u));
                let theta = &f.omega(tu).expect("admissible triple")[(w.basis(v), w.basis(u))];
                coeff = coeff * theta / f.dim(xa);
                if coeff.is_zero() {
                    return coeff;
                }
                w.verts[u] = None;
                w.verts[v] = None;
                w.color[e1.edge] = None;
                w.color[e2.edge] = None;
                let closed = w.merge(f, ou, ov);
                debug_assert!(closed.is_none());
                continue;
            }
            3 => {
                let [(u, e0), (v, e1), (x, e2)] = [face[0], face[1], face[2]];
                triangle(f, &w, [u, v, x], [e0.edge, e1.edge, e2.edge])
            }
            _ => {
                let i = ch.pick(face.len());
                fmove(f, &w, &face, i)
            }
        };
        if branches.len() == 1 {
            let (c, next) = branches.into_iter().next().unwrap();
            coeff *= c;
            w = next;
            continue;
        }
        let total: Cyclotomic = branches.into_iter().map(|(c, next)| c * eval_closed(f, next, ch)).sum();
        return coeff * total;
    }
}

/// inv_C of the network, as a tensor over its free slots in slot order.
pub fn evaluate(f: &FusionData, g: &Network) -> Result<Tensor, GraphError> {
    evaluate_with_order(f, g, 0)
}

/// As [`evaluate`], choosing reduction sites according to `salt`; the result
/// does not depend on it.
pub fn evaluate_with_order(f: &FusionData, g: &Network, salt: usize) -> Result<Tensor, GraphError> {
    g.validate()?;
    let nv = g.vertices().len();
    if let Some(e) = (0..g.edge_count()).find(|&e| g.color(e) >= f.rank()) {
        return Err(structural(format!("edge {e} has an unknown color")));
    }
    let triples: Vec<[Label; 3]> = (0..nv).map(|v| g.triple(f, v)).collect();
    let mut slot_vertex = vec![0; g.free_slots()];
    for (v, vx) in g.vertices().iter().enumerate() {
        if let Basis::Free(s) = vx.basis {
            slot_vertex[s] = v;
        }
    }
    let dims: Vec<usize> = slot_vertex.iter().map(|&v| f.n(triples[v])).collect();
    let mut out = Tensor::zeros(dims.clone());
    if triples.iter().any(|&t| f.n(t) == 0) {
        return Ok(out);
    }
    for &(a, b) in g.pairs() {
        if !cyclic_eq(triples[b], f.flip(triples[a])) {
            return Err(structural(format!("paired vertices {a} and {b} are not dual")));
        }
    }
    let circles: Cyclotomic = g.circles().iter().map(|&c| f.dim(c).clone()).product();
    let pair_dims: Vec<usize> = g.pairs().iter().flat_map(|&(a, b)| [f.n(triples[a]), f.n(triples[b])]).collect();
    for_each_index(&dims, |idx| {
        let mut total = Cyclotomic::zero();
        for_each_index(&pair_dims, |pidx| {
            let mut weight = circles.clone();
            for (k, &(a, _)) in g.pairs().iter().enumerate() {
                weight *= &f.omega_inv(triples[a]).expect("admissible triple")[(pidx[2 * k], pidx[2 * k + 1])];
            }
            if weight.is_zero() {
                return;
            }
            let verts = g
                .vertices()
                .iter()
                .enumerate()
                .map(|(v, vx)| {
                    let b = match vx.basis {
                        Basis::Index(i) => i,
                        Basis::Free(s) => idx[s],
                        Basis::Paired(k) => {
                            let (a, _) = g.pairs()[k];
                            if a == v {
                                pidx[2 * k]
                            } else {
                                pidx[2 * k + 1]
                            }
                        }
                    };
                    Some((vx.ends, b))
                })
                .collect();
            let color = (0..g.edge_count()).map(|e| Some(g.color(e))).collect();
            let mut ch = Chooser { salt, count: 0 };
            total += weight * eval_closed(f, Work { color, verts }, &mut ch);
        });
        out.set(idx, total);
    });
    Ok(out)
}
