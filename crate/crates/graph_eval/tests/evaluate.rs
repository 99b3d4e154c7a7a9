use proptest::prelude::*;
use tvk_fusion_data::builtin::{fibonacci, ising, vec_zn};
use tvk_fusion_data::tetra::{vertex_ends, EDGE_ENDS};
use tvk_fusion_data::{FusionData, Label};
use tvk_graph_eval::{evaluate, evaluate_with_order, End, GraphError, Network};
use tvk_scalars::{int, Cyclotomic};

fn shipped() -> Vec<FusionData> {
    vec![vec_zn(2), vec_zn(3), fibonacci(), ising()]
}

/// Theta graph whose first vertex reads the triple `t`; slots 0 and 1.
fn theta(f: &FusionData, t: [Label; 3]) -> Network {
    let mut g = Network::new();
    let e: Vec<usize> = t.iter().map(|&x| g.edge(f.dual(x))).collect();
    g.free([End::outgoing(e[0]), End::outgoing(e[1]), End::outgoing(e[2])], 0);
    g.free([End::incoming(e[2]), End::incoming(e[1]), End::incoming(e[0])], 1);
    g
}

/// The reference tetrahedron colored by `t`, vertex slots A, B, C, D.
fn tetrahedron(t: [Label; 6]) -> Network {
    let mut g = Network::new();
    for c in t {
        g.edge(c);
    }
    for v in 0..4 {
        let ends = vertex_ends(v).map(|(e, inc)| End { edge: e, head: inc });
        g.free(ends, v);
    }
    g
}

#[test]
fn circle_has_dimension() {
    for f in shipped() {
        for i in f.labels() {
            let mut g = Network::new();
            g.circle(i);
            assert_eq!(evaluate(&f, &g).unwrap().as_scalar().unwrap(), f.dim(i));
            // the same circle drawn with a unit chord
            let mut h = Network::new();
            let a = h.edge(i);
            let b = h.edge(i);
            let u = h.edge(f.unit());
            h.fixed([End::incoming(a), End::outgoing(b), End::outgoing(u)], 0);
            h.fixed([End::incoming(b), End::outgoing(a), End::incoming(u)], 0);
            assert_eq!(evaluate(&f, &h).unwrap().as_scalar().unwrap(), f.dim(i));
        }
    }
}

#[test]
fn theta_graph_is_the_pairing() {
    for f in shipped() {
        for i in f.labels() {
            for j in f.labels() {
                for k in f.labels() {
                    let t = [i, j, k];
                    let val = evaluate(&f, &theta(&f, t)).unwrap();
                    let n = f.n(t);
                    assert_eq!(val.dims(), &[n, n]);
                    if n == 0 {
                        continue;
                    }
                    let w = f.omega(t).unwrap();
                    for a in 0..n {
                        for b in 0..n {
                            assert_eq!(val.get(&[a, b]), &w[(b, a)]);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn tetrahedron_is_the_six_j_symbol() {
    for f in shipped() {
        let nl = f.rank();
        for code in 0..nl.pow(6) {
            let mut t = [0; 6];
            let mut c = code;
            for x in t.iter_mut() {
                *x = c % nl;
                c /= nl;
            }
            let val = evaluate(&f, &tetrahedron(t)).unwrap();
            match f.sixj(t) {
                Some(s) => assert_eq!(&val, s),
                None => assert!(val.is_zero()),
            }
        }
    }
}

#[test]
fn reversing_an_edge_with_the_dual_color_changes_nothing() {
    let f = vec_zn(3);
    let t = [1, 2, 0, 1, 2, 0];
    let g = tetrahedron([1, 1, 2, 0, 1, 2]);
    for e in 0..6 {
        assert_eq!(evaluate(&f, &g).unwrap(), evaluate(&f, &g.reversed(&f, e)).unwrap());
    }
    let h = tetrahedron(t);
    assert_eq!(evaluate(&f, &h).unwrap(), evaluate(&f, &h.reversed(&f, 2)).unwrap());
    let fib = fibonacci();
    let g = tetrahedron([1; 6]);
    for e in 0..6 {
        assert_eq!(evaluate(&fib, &g.reversed(&fib, e)).unwrap().data()[0], int(-1));
    }
}

#[test]
fn torus_rotation_system_is_rejected() {
    let mut g = Network::new();
    let e: Vec<usize> = (0..3).map(|_| g.edge(0)).collect();
    g.fixed([End::outgoing(e[0]), End::outgoing(e[1]), End::outgoing(e[2])], 0);
    g.fixed([End::incoming(e[0]), End::incoming(e[1]), End::incoming(e[2])], 0);
    assert!(matches!(evaluate(&vec_zn(2), &g), Err(GraphError::Structural(_))));
}

#[test]
fn dangling_edges_are_rejected() {
    let mut g = Network::new();
    let a = g.edge(0);
    let b = g.edge(0);
    let c = g.edge(0);
    g.fixed([End::outgoing(a), End::outgoing(b), End::outgoing(c)], 0);
    assert!(evaluate(&vec_zn(2), &g).is_err());
}

#[test]
fn inadmissible_colorings_give_zero() {
    let f = fibonacci();
    let val = evaluate(&f, &theta(&f, [0, 0, 1])).unwrap();
    assert!(val.is_empty() || val.is_zero());
    let val = evaluate(&f, &tetrahedron([1, 1, 1, 1, 0, 0])).unwrap();
    assert!(val.is_zero());
}

#[test]
fn bubble_on_a_tetrahedron_edge_scales_by_theta_over_dim() {
    // split edge i of the all-tau tetrahedron by a tau-tau bubble: value
    // theta(tau,tau,tau) / dim(tau) times the tetrahedron = -1
    let f = fibonacci();
    let mut g = Network::new();
    let t = [1usize; 6];
    for c in t {
        g.edge(c);
    }
    let i2 = g.edge(1);
    let x = g.edge(1);
    let y = g.edge(1);
    // i runs A -> B; cut it into A -> p (edge 0), p => q (x, y), q -> B (i2)
    for v in 0..4 {
        let ends = vertex_ends(v).map(
            |(e, inc)| {
                if e == 0 && v == 1 {
                    End::incoming(i2)
                } else {
                    End { edge: e, head: inc }
                }
            },
        );
        g.fixed(ends, 0);
    }
    g.fixed([End::incoming(0), End::outgoing(x), End::outgoing(y)], 0);
    g.fixed([End::outgoing(i2), End::incoming(y), End::incoming(x)], 0);
    let v = evaluate(&f, &g).unwrap();
    assert_eq!(v.data()[0], int(-1));
    let _ = EDGE_ENDS;
}

/// Random planar networks grown from a theta graph by adding chords inside
/// faces. `choices` drives every decision.
fn grow(steps: usize, choices: &[usize]) -> Network {
    let mut g = Network::new();
    let e: Vec<usize> = (0..3).map(|_| g.edge(0)).collect();
    g.fixed([End::outgoing(e[0]), End::outgoing(e[1]), End::outgoing(e[2])], 0);
    g.fixed([End::incoming(e[2]), End::incoming(e[1]), End::incoming(e[0])], 0);
    let mut it = choices.iter().copied().cycle();
    for _ in 0..steps {
        let faces = g.faces().unwrap();
        let face = &faces[it.next().unwrap() % faces.len()];
        let k = face.len();
        let a = it.next().unwrap() % k;
        let mut b = it.next().unwrap() % k;
        if b == a {
            b = (a + 1) % k;
        }
        let (da, db) = (face[a].1, face[b].1);
        let mut verts: Vec<[End; 3]> = g.vertices().iter().map(|v| v.ends).collect();
        let mut ncol = g.edge_count();
        let chord = ncol;
        ncol += 1;
        for (d, inc) in [(da, false), (db, true)] {
            let fresh = ncol;
            ncol += 1;
            let far = d.opposite();
            for v in verts.iter_mut() {
                for end in v.iter_mut() {
                    if *end == far {
                        *end = End { edge: fresh, head: far.head };
                    }
                }
            }
            verts.push([End { edge: fresh, head: d.head }, far, End { edge: chord, head: inc }]);
        }
        let mut h = Network::new();
        for _ in 0..ncol {
            h.edge(0);
        }
        for v in verts {
            h.fixed(v, 0);
        }
        g = h;
    }
    g
}

fn admissible_colorings(f: &FusionData, g: &Network) -> Vec<Vec<Label>> {
    let ne = g.edge_count();
    let nl = f.rank();
    let mut out = Vec::new();
    let mut col = vec![0; ne];
    let mut h = g.clone();
    loop {
        for (e, &c) in col.iter().enumerate() {
            h.set_color(e, c);
        }
        if (0..h.vertices().len()).all(|v| f.n(h.triple(f, v)) > 0) {
            out.push(col.clone());
        }
        let mut k = 0;
        while k < ne {
            col[k] += 1;
            if col[k] < nl {
                break;
            }
            col[k] = 0;
            k += 1;
        }
        if k == ne {
            return out;
        }
    }
}

fn colored(g: &Network, col: &[Label]) -> Network {
    let mut h = g.clone();
    for (e, &c) in col.iter().enumerate() {
        h.set_color(e, c);
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn vec_z2_networks_evaluate_to_one(steps in 1usize..5, choices in proptest::collection::vec(0usize..1000, 12), pick in 0usize..10000) {
        let f = vec_zn(2);
        let g = grow(steps, &choices);
        prop_assert!(g.validate().is_ok());
        let cols = admissible_colorings(&f, &g);
        let h = colored(&g, &cols[pick % cols.len()]);
        prop_assert_eq!(evaluate(&f, &h).unwrap().data()[0].clone(), int(1));
        prop_assert_eq!(evaluate_with_order(&f, &h, 7).unwrap().data()[0].clone(), int(1));
    }

    #[test]
    fn fibonacci_networks_are_path_independent(steps in 1usize..5, choices in proptest::collection::vec(0usize..1000, 12), pick in 0usize..10000, rev in 0usize..64) {
        let f = fibonacci();
        let g = grow(steps, &choices);
        let cols = admissible_colorings(&f, &g);
        let h = colored(&g, &cols[pick % cols.len()]);
        let base = evaluate(&f, &h).unwrap();
        for salt in [1, 2, 5, 11] {
            prop_assert_eq!(&evaluate_with_order(&f, &h, salt).unwrap(), &base);
        }
        let r = h.reversed(&f, rev % h.edge_count());
        prop_assert_eq!(&evaluate(&f, &r).unwrap(), &base);
    }
}

#[test]
fn ising_networks_are_path_independent() {
    let f = ising();
    let mut nonzero = 0;
    for seed in 0..6usize {
        let choices: Vec<usize> = (0..12).map(|i| (seed * 37 + i * 101) % 997).collect();
        let g = grow(2, &choices);
        let cols = admissible_colorings(&f, &g);
        for col in cols.iter().step_by(7) {
            let h = colored(&g, col);
            let base = evaluate(&f, &h).unwrap();
            nonzero += usize::from(!base.is_zero());
            for salt in [1, 3] {
                assert_eq!(evaluate_with_order(&f, &h, salt).unwrap(), base);
            }
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn free_slots_and_pairs() {
    // contracting the two vertices of a theta graph gives dim of the space
    let f = ising();
    for t in [[1, 1, 2], [1, 1, 0], [2, 2, 0]] {
        let mut g = theta(&f, t);
        g.pair(0, 1);
        let v = evaluate(&f, &g).unwrap();
        assert_eq!(v.data()[0], Cyclotomic::from_integer(f.n(t) as i64));
    }
}
