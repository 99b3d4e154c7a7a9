//! Shipped triangulations.

use std::collections::BTreeMap;

use crate::{Gluing, ManifoldError, Triangulation};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// L(p, q) as the quotient of the join of two p-gons by the free Z/p action
/// (i, j) -> (i + 1, j + q). Tetrahedron j is [a0, a1, b_j, b_{j+1}].
pub fn lens(p: usize, q: usize) -> Result<Triangulation, ManifoldError> {
    if p == 0 || gcd(p, q % p) != 1 {
        return Err(ManifoldError::Precondition(format!("lens({p},{q}) needs p >= 1 and gcd(p,q) = 1")));
    }
    let name = format!("lens({p},{q})");
    let q = q % p;
    let glue = (0..p)
        .map(|j| {
            [
                Gluing { tet: (j + p - q) % p, perm: [1, 0, 2, 3] },
                Gluing { tet: (j + q) % p, perm: [1, 0, 2, 3] },
                Gluing { tet: (j + 1) % p, perm: [0, 1, 3, 2] },
                Gluing { tet: (j + p - 1) % p, perm: [0, 1, 3, 2] },
            ]
        })
        .collect();
    Triangulation::new(name, glue)
}

/// One tetrahedron with its faces folded in pairs.
pub fn s3_1tet() -> Triangulation {
    let mut t = lens(1, 0).expect("valid");
    t.name = "s3_1tet".into();
    t
}

/// Two tetrahedra glued along their boundaries by the identity.
pub fn s3_2tet() -> Triangulation {
    let id = [0, 1, 2, 3];
    let glue = vec![[Gluing { tet: 1, perm: id }; 4], [Gluing { tet: 0, perm: id }; 4]];
    Triangulation::new("s3_2tet", glue).expect("valid")
}

/// A one-vertex, two-tetrahedron triangulation of S^1 x S^2, found by
/// exhaustive search over two-tetrahedron gluings with H_1 = Z.
pub fn s1xs2() -> Triangulation {
    let g = |tet, perm| Gluing { tet, perm };
    let glue = vec![
        [g(0, [1, 2, 3, 0]), g(0, [3, 0, 1, 2]), g(1, [2, 3, 0, 1]), g(1, [2, 3, 0, 1])],
        [g(0, [2, 3, 0, 1]), g(0, [2, 3, 0, 1]), g(1, [1, 2, 3, 0]), g(1, [3, 0, 1, 2])],
    ];
    Triangulation::new("s1xs2", glue).expect("valid")
}

/// The 3-torus from the six Kuhn simplices of the unit cube, opposite
/// faces identified by translation.
pub fn t3() -> Triangulation {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let tets: Vec<[[i32; 3]; 4]> = perms
        .iter()
        .map(|s| {
            let mut pts = [[0; 3]; 4];
            for k in 0..3 {
                pts[k + 1] = pts[k];
                pts[k + 1][s[k]] = 1;
            }
            pts
        })
        .collect();
    let mut glue = vec![[Gluing { tet: 0, perm: [0; 4] }; 4]; 6];
    for (t, pts) in tets.iter().enumerate() {
        for f in 0..4 {
            let face: Vec<[i32; 3]> = (0..4).filter(|&v| v != f).map(|v| pts[v]).collect();
            let mut found = Vec::new();
            for (t2, pts2) in tets.iter().enumerate() {
                for f2 in 0..4 {
                    if (t2, f2) == (t, f) {
                        continue;
                    }
                    let index: BTreeMap<[i32; 3], usize> = (0..4).filter(|&v| v != f2).map(|v| (pts2[v], v)).collect();
                    // a translation carrying face onto face f2 of t2
                    for &anchor in index.keys() {
                        let d: Vec<i32> = (0..3).map(|k| anchor[k] - face[0][k]).collect();
                        let moved: Option<Vec<usize>> =
                            face.iter().map(|p| index.get(&[p[0] + d[0], p[1] + d[1], p[2] + d[2]]).copied()).collect();
                        if let Some(img) = moved {
                            let mut perm = [f2; 4];
                            for (slot, v) in (0..4).filter(|&v| v != f).enumerate() {
                                perm[v] = img[slot];
                            }
                            found.push(Gluing { tet: t2, perm });
                        }
                    }
                }
            }
            assert_eq!(found.len(), 1, "Kuhn face ({t}, {f})");
            glue[t][f] = found[0];
        }
    }
    Triangulation::new("t3", glue).expect("valid")
}

/// Look up a builtin by name: `s3_1tet`, `s3_2tet`, `s1xs2`, `t3`, or
/// `lens(p,q)`.
pub fn builtin(name: &str) -> Result<Triangulation, ManifoldError> {
    let name = name.trim();
    match name {
        "s3_1tet" | "s3" => Ok(s3_1tet()),
        "s3_2tet" => Ok(s3_2tet()),
        "s1xs2" => Ok(s1xs2()),
        "t3" => Ok(t3()),
        _ => {
            let bad = || ManifoldError::Precondition(format!("unknown builtin '{name}'"));
            let args = name.strip_prefix("lens(").and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
            let (p, q) = args.split_once(',').ok_or_else(bad)?;
            let p = p.trim().parse().map_err(|_| bad())?;
            let q = q.trim().parse().map_err(|_| bad())?;
            lens(p, q)
        }
    }
}
