//! Shipped multiplicity-free categories, generated from their fusion rules,
//! dimensions, theta values and the value of the tetrahedra with no unit edge.
//!
//! With unit vertices normalized so that a theta graph with a unit edge has
//! value dim(x), a tetrahedron containing unit edges reduces to a circle or a
//! theta graph, so only the unit-free tetrahedra carry independent data.

use std::collections::BTreeSet;

use tvk_scalars::{int, zeta, Cyclotomic, Matrix};

use crate::tensor::Tensor;
use crate::tetra;
use crate::{CategoryData, FusionData, Label};

struct Layout<'a> {
    name: &'a str,
    notes: Vec<String>,
    labels: Vec<String>,
    dual: Vec<Label>,
    dims: Vec<Cyclotomic>,
    /// N(i, j, k) for the unordered-by-rotation triple.
    admissible: &'a dyn Fn([Label; 3]) -> bool,
    /// Theta value of an admissible triple without the unit.
    theta: &'a dyn Fn([Label; 3]) -> Cyclotomic,
    /// Tetrahedra with six non-unit colors.
    tet: &'a dyn Fn([Label; 6]) -> Cyclotomic,
}

fn build(s: Layout) -> CategoryData {
    let nl = s.labels.len();
    let unit = 0;
    let mut triples = Vec::new();
    let mut omega = Vec::new();
    let theta = |t: [Label; 3]| -> Cyclotomic {
        if let Some(p) = t.iter().position(|&x| x == unit) {
            s.dims[t[(p + 1) % 3]].clone()
        } else {
            (s.theta)(t)
        }
    };
    for i in 0..nl {
        for j in 0..nl {
            for k in 0..nl {
                let t = [i, j, k];
                if !(s.admissible)(t) {
                    continue;
                }
                let rots = [t, [j, k, i], [k, i, j]];
                if *rots.iter().min().unwrap() == t {
                    triples.push((t, 1));
                }
                let flip = [s.dual[k], s.dual[j], s.dual[i]];
                let fl = [flip, [flip[1], flip[2], flip[0]], [flip[2], flip[0], flip[1]]];
                if *rots.iter().chain(fl.iter()).min().unwrap() == t {
                    omega.push((t, Matrix::scalar(theta(t))));
                }
            }
        }
    }
    let mut reps = BTreeSet::new();
    let adm6 = |t: [Label; 6]| tetra::vertex_triples(t, &s.dual).iter().all(|&v| (s.admissible)(v));
    let mut all = vec![[0; 6]];
    for _ in 0..6 {
        all = all
            .into_iter()
            .flat_map(|p| (0..nl).map(move |x| (p, x)))
            .map(|(mut p, x)| {
                p.rotate_left(1);
                p[5] = x;
                p
            })
            .collect();
    }
    for t in all {
        if !adm6(t) {
            continue;
        }
        let rep = tetra::readings(t, &s.dual).into_iter().map(|r| r.labels).min().unwrap();
        reps.insert(rep);
    }
    let sixj = reps
        .into_iter()
        .map(|t| {
            let units: Vec<usize> = (0..6).filter(|&e| t[e] == unit).collect();
            let v = match units.len() {
                0 => (s.tet)(t),
                1 => {
                    // theta graph on the vertices away from the unit edge
                    let (a, b) = tetra::EDGE_ENDS[units[0]];
                    let x = (0..4).find(|&x| x != a && x != b).unwrap();
                    theta(tetra::vertex_triples(t, &s.dual)[x])
                }
                6 => int(1),
                _ => {
                    let c = (0..6).find(|&e| t[e] != unit).unwrap();
                    s.dims[t[c]].clone()
                }
            };
            (t, Tensor::from_data(vec![1, 1, 1, 1], vec![v]))
        })
        .collect();
    CategoryData {
        name: s.name.to_string(),
        notes: s.notes,
        labels: s.labels,
        dual: s.dual,
        qdim: s.dims,
        triples,
        omega,
        sixj,
    }
}

/// The golden ratio φ = -ζ_5^2 - ζ_5^3 = (1 + √5)/2.
pub fn golden() -> Cyclotomic {
    -(zeta(5, 2) + zeta(5, 3))
}

/// √2 = ζ_8 + ζ_8^7.
pub fn sqrt2() -> Cyclotomic {
    zeta(8, 1) + zeta(8, 7)
}

/// Vec_{Z/n} with trivial associator: labels 1, g, g2, ..., g^{n-1}.
pub fn vec_zn_data(n: usize) -> CategoryData {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|a| match a {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{a}"),
        })
        .collect();
    let dual: Vec<Label> = (0..n).map(|a| (n - a) % n).collect();
    let adm = move |t: [Label; 3]| (t[0] + t[1] + t[2]).is_multiple_of(n);
    build(Layout {
        name: &format!("vecZ{n}"),
        notes: vec![
            format!("pointed category of Z/{n} with trivial 3-cocycle"),
            "all pairings and 6j symbols equal 1".into(),
        ],
        labels,
        dual,
        dims: vec![int(1); n],
        admissible: &adm,
        theta: &|_| int(1),
        tet: &|_| int(1),
    })
}

/// Fibonacci category over Q(ζ_5): labels 1 and tau with tau ⊗ tau = 1 ⊕ tau.
pub fn fibonacci_data() -> CategoryData {
    let phi = golden();
    build(Layout {
        name: "fibonacci",
        notes: vec![
            "labels 1, tau; dim(tau) = phi = (1+sqrt5)/2 = -z5^2 - z5^3".into(),
            "gauge: theta(tau,tau,tau) = phi, so the all-tau tetrahedron is -1".into(),
            "tetrahedra with unit edges reduce to circles (phi) or thetas (phi)".into(),
        ],
        labels: vec!["1".into(), "tau".into()],
        dual: vec![0, 1],
        dims: vec![int(1), phi.clone()],
        admissible: &|t| {
            let taus = t.iter().filter(|&&x| x == 1).count();
            taus != 1
        },
        theta: &|_| golden(),
        tet: &|_| int(-1),
    })
}

/// Ising category over Q(ζ_8): labels 1, sigma, psi.
pub fn ising_data() -> CategoryData {
    let s2 = sqrt2();
    build(Layout {
        name: "ising",
        notes: vec![
            "labels 1, sigma, psi; dim(sigma) = sqrt2 = z8 + z8^7, dim(psi) = 1".into(),
            "gauge: theta(sigma,sigma,psi) = sqrt2".into(),
            "the tetrahedron with two opposite psi edges and four sigma edges is -sqrt2".into(),
        ],
        labels: vec!["1".into(), "sigma".into(), "psi".into()],
        dual: vec![0, 1, 2],
        dims: vec![int(1), s2.clone(), int(1)],
        admissible: &|t| {
            let sig = t.iter().filter(|&&x| x == 1).count();
            let psi = t.iter().filter(|&&x| x == 2).count();
            (sig == 0 && psi % 2 == 0) || (sig == 2 && psi <= 1)
        },
        theta: &|_| sqrt2(),
        tet: &|_| -sqrt2(),
    })
}

pub fn vec_zn(n: usize) -> FusionData {
    FusionData::new(vec_zn_data(n)).expect("builtin data is valid")
}

pub fn fibonacci() -> FusionData {
    FusionData::new(fibonacci_data()).expect("builtin data is valid")
}

pub fn ising() -> FusionData {
    FusionData::new(ising_data()).expect("builtin data is valid")
}

/// Builtin by name: `fibonacci`, `ising`, `vecZ<n>`.
pub fn by_name(name: &str) -> Option<FusionData> {
    match name {
        "fibonacci" => Some(fibonacci()),
        "ising" => Some(ising()),
        _ => {
            let n: usize = name.strip_prefix("vecZ")?.parse().ok()?;
            (1..=12).contains(&n).then(|| vec_zn(n))
        }
    }
}
