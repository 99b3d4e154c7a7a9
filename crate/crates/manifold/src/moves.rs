//! Pachner moves. Each move cuts out a ball made of a few tetrahedra and
//! fills it with a different set of tetrahedra having the same boundary.
//! Vertices of the ball carry labels; faces are matched by label sets.

use std::collections::BTreeMap;

use crate::{invert, Gluing, ManifoldError, Triangulation};

fn face_key(labels: &[usize; 4], f: usize) -> [usize; 3] {
    let mut k = [0; 3];
    for (slot, v) in (0..4).filter(|&v| v != f).enumerate() {
        k[slot] = labels[v];
    }
    k.sort_unstable();
    k
}

fn pos(labels: &[usize; 4], l: usize) -> usize {
    labels.iter().position(|&x| x == l).expect("label present")
}

/// Replace the `removed` tetrahedra (with labels per local vertex) by
/// tetrahedra with the given label lists, appended after the kept ones.
fn rebuild(
    t: &Triangulation,
    removed: &[(usize, [usize; 4])],
    added: &[[usize; 4]],
) -> Result<Triangulation, ManifoldError> {
    let pre = |m: &str| ManifoldError::Precondition(m.to_string());
    let n = t.tet_count();
    let mut labels_of = vec![None; n];
    for &(r, l) in removed {
        labels_of[r] = Some(l);
    }
    let kept: Vec<usize> = (0..n).filter(|&s| labels_of[s].is_none()).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &s) in kept.iter().enumerate() {
        index[s] = i;
    }
    let base = kept.len();

    let mut old_faces: BTreeMap<[usize; 3], Vec<(usize, usize)>> = BTreeMap::new();
    for &(r, l) in removed {
        for f in 0..4 {
            old_faces.entry(face_key(&l, f)).or_default().push((r, f));
        }
    }
    let mut new_faces: BTreeMap<[usize; 3], Vec<(usize, usize)>> = BTreeMap::new();
    for (a, l) in added.iter().enumerate() {
        for f in 0..4 {
            new_faces.entry(face_key(l, f)).or_default().push((a, f));
        }
    }
    let old_bdry: Vec<&[usize; 3]> = old_faces.iter().filter(|(_, v)| v.len() == 1).map(|(k, _)| k).collect();
    let new_bdry: Vec<&[usize; 3]> = new_faces.iter().filter(|(_, v)| v.len() == 1).map(|(k, _)| k).collect();
    if old_bdry != new_bdry || new_faces.values().any(|v| v.len() > 2) || old_faces.values().any(|v| v.len() > 2) {
        return Err(pre("move region boundaries do not match"));
    }

    // where a local vertex of an old tetrahedron lands, given the old face it lies on
    let land = |s: usize, g: usize, w: usize| -> (usize, usize, usize) {
        match labels_of[s] {
            None => (index[s], g, w),
            Some(l) => {
                let (a, f) = new_faces[&face_key(&l, g)][0];
                (base + a, f, pos(&added[a], l[w]))
            }
        }
    };
    // glue an old face slot (s, f) to whatever its partner became
    let across = |s: usize, f: usize, local: &dyn Fn(usize) -> usize| -> Gluing {
        let g = t.gluing(s, f);
        let mut tet = 0;
        let mut perm = [0; 4];
        let mut target_face = 0;
        for v in (0..4).filter(|&v| v != f) {
            let (nt, nf, nw) = land(g.tet, g.perm[f], g.perm[v]);
            tet = nt;
            target_face = nf;
            perm[local(v)] = nw;
        }
        perm[local(f)] = target_face;
        Gluing { tet, perm }
    };

    let mut glue = vec![[Gluing { tet: 0, perm: [0; 4] }; 4]; base + added.len()];
    for (i, &s) in kept.iter().enumerate() {
        for f in 0..4 {
            glue[i][f] = across(s, f, &|v| v);
        }
    }
    for (a, l) in added.iter().enumerate() {
        for f in 0..4 {
            let key = face_key(l, f);
            let peers = &new_faces[&key];
            if peers.len() == 2 {
                let (b, f2) = if peers[0] == (a, f) { peers[1] } else { peers[0] };
                let mut perm = [0; 4];
                for v in 0..4 {
                    perm[v] = if v == f { f2 } else { pos(&added[b], l[v]) };
                }
                glue[base + a][f] = Gluing { tet: base + b, perm };
            } else {
                let (r, g) = old_faces[&key][0];
                let rl = labels_of[r].expect("removed");
                // new local v of a <-> old local of r with the same label
                let to_new: [usize; 4] = std::array::from_fn(|w| if w == g { f } else { pos(l, rl[w]) });
                glue[base + a][f] = across(r, g, &|w| to_new[w]);
            }
        }
    }
    Triangulation::new(t.name().to_string(), glue)
}

/// 1-4 move: a new vertex inside tetrahedron `tet`, coned to its faces.
pub fn pachner_14(t: &Triangulation, tet: usize) -> Result<Triangulation, ManifoldError> {
    if tet >= t.tet_count() {
        return Err(ManifoldError::Precondition(format!("no tetrahedron {tet}")));
    }
    let added: Vec<[usize; 4]> = (0..4)
        .map(|k| {
            let mut l = [0, 1, 2, 3];
            l[k] = 4;
            l
        })
        .collect();
    rebuild(t, &[(tet, [0, 1, 2, 3])], &added)
}

/// 2-3 move across face `face` of `tet`: the two tetrahedra meeting there
/// become three around the edge joining their apexes.
pub fn pachner_23(t: &Triangulation, tet: usize, face: usize) -> Result<Triangulation, ManifoldError> {
    if tet >= t.tet_count() || face >= 4 {
        return Err(ManifoldError::Precondition(format!("no face ({tet}, {face})")));
    }
    let g = t.gluing(tet, face);
    if g.tet == tet {
        return Err(ManifoldError::Precondition(format!("face ({tet}, {face}) is glued to its own tetrahedron")));
    }
    // labels: apexes 0 and 1, shared face 2, 3, 4
    let mut l1 = [0; 4];
    let mut next = 2;
    for (v, x) in l1.iter_mut().enumerate() {
        if v != face {
            *x = next;
            next += 1;
        }
    }
    let inv = invert(g.perm);
    let l2: [usize; 4] = std::array::from_fn(|w| if w == g.perm[face] { 1 } else { l1[inv[w]] });
    let added: Vec<[usize; 4]> = (2..5)
        .map(|k| {
            let mut l = [0, 1, 0, 0];
            let rest: Vec<usize> = (2..5).filter(|&x| x != k).collect();
            l[2] = rest[0];
            l[3] = rest[1];
            l
        })
        .collect();
    rebuild(t, &[(tet, l1), (g.tet, l2)], &added)
}

/// 4-1 move: remove a vertex whose star is four distinct tetrahedra
/// forming the cone over a tetrahedron boundary.
pub fn pachner_41(t: &Triangulation, vertex: usize) -> Result<Triangulation, ManifoldError> {
    let pre = |m: &str| ManifoldError::Precondition(m.to_string());
    let corners: Vec<(usize, usize)> = (0..t.tet_count())
        .flat_map(|s| (0..4).map(move |v| (s, v)))
        .filter(|&(s, v)| t.vertex_class(s, v) == vertex)
        .collect();
    let mut tets: Vec<usize> = corners.iter().map(|c| c.0).collect();
    tets.dedup();
    if corners.len() != 4 || tets.len() != 4 {
        return Err(pre("vertex star is not four distinct tetrahedra"));
    }
    let centre = |s: usize| corners.iter().find(|c| c.0 == s).expect("corner").1;
    // propagate outer labels 0..3 from the first tetrahedron
    let mut labels: BTreeMap<usize, [usize; 4]> = BTreeMap::new();
    let s0 = tets[0];
    let mut l0 = [4; 4];
    let mut next = 0;
    for (v, x) in l0.iter_mut().enumerate() {
        if v != centre(s0) {
            *x = next;
            next += 1;
        }
    }
    labels.insert(s0, l0);
    let mut stack = vec![s0];
    while let Some(s) = stack.pop() {
        let ls = labels[&s];
        for f in (0..4).filter(|&f| f != centre(s)) {
            let g = t.gluing(s, f);
            if !tets.contains(&g.tet) || g.perm[centre(s)] != centre(g.tet) {
                return Err(pre("vertex star is not a cone over a tetrahedron boundary"));
            }
            let mut lt = labels.get(&g.tet).copied().unwrap_or([usize::MAX; 4]);
            let lt_new = g.tet != s && !labels.contains_key(&g.tet);
            for v in (0..4).filter(|&v| v != f) {
                let w = g.perm[v];
                if lt[w] == usize::MAX {
                    lt[w] = ls[v];
                } else if lt[w] != ls[v] {
                    return Err(pre("inconsistent vertex star"));
                }
            }
            if lt_new {
                // the vertex off the shared face carries the outer label s lacks
                lt[g.perm[f]] = (0..4).find(|x| !ls.contains(x)).expect("four labels");
                labels.insert(g.tet, lt);
                stack.push(g.tet);
            }
        }
    }
    let removed: Vec<(usize, [usize; 4])> = tets.iter().map(|&s| (s, labels[&s])).collect();
    rebuild(t, &removed, &[[0, 1, 2, 3]])
}
