//! Integral first homology from the cellular chain complex.

use crate::{Triangulation, TET_EDGES};

/// Nonzero diagonal entries of the Smith normal form, ascending by
/// divisibility. The matrix is given by rows.
pub fn elementary_divisors(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut r0 = 0;
    while r0 < rows && r0 < cols {
        // pivot: smallest nonzero magnitude in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in r0..rows {
            for j in r0..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(r0, pi);
        for row in m.iter_mut() {
            row.swap(r0, pj);
        }
        let p = m[r0][r0];
        let mut clean = true;
        for i in r0 + 1..rows {
            let q = m[i][r0] / p;
            if q != 0 {
                for j in r0..cols {
                    let v = m[r0][j];
                    m[i][j] -= q * v;
                }
            }
            clean &= m[i][r0] == 0;
        }
        for j in r0 + 1..cols {
            let q = m[r0][j] / p;
            if q != 0 {
                for row in m.iter_mut().skip(r0) {
                    let v = row[r0];
                    row[j] -= q * v;
                }
            }
            clean &= m[r0][j] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let bad = (r0 + 1..rows).flat_map(|i| (r0 + 1..cols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
        if let Some((i, _)) = bad {
            for j in r0..cols {
                let v = m[i][j];
                m[r0][j] += v;
            }
            continue;
        }
        out.push(p.abs());
        r0 += 1;
    }
    out
}

/// Elementary divisors of H_1: torsion coefficients greater than 1 in
/// ascending order, then one 0 per free summand.
pub fn first_homology(t: &Triangulation) -> Vec<u64> {
    let [nv, ne, _, _] = t.counts();
    // boundary of each face class in terms of oriented edge classes
    let mut d2 = vec![vec![0i128; t.counts()[2]]; ne];
    for (c, (tet, f)) in t.face_representatives().into_iter().enumerate() {
        let vs: Vec<usize> = (0..4).filter(|&v| v != f).collect();
        let terms = [((vs[1], vs[2]), 1), ((vs[0], vs[2]), -1), ((vs[0], vs[1]), 1)];
        for ((a, b), s) in terms {
            let e = TET_EDGES.iter().position(|&x| x == (a, b)).expect("ascending pair");
            let sign = if t.edge_flipped(tet, e) { -s } else { s };
            d2[t.edge_class(tet, e)][c] += sign;
        }
    }
    let divisors = elementary_divisors(d2);
    let rank1 = nv - t.components();
    let free = ne - rank1 - divisors.len();
    let mut out: Vec<u64> = divisors.into_iter().filter(|&d| d > 1).map(|d| d as u64).collect();
    out.extend(std::iter::repeat_n(0, free));
    out
}
