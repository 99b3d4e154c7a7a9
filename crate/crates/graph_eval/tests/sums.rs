use tvk_fusion_data::builtin::{fibonacci, ising, vec_zn};
use tvk_fusion_data::{FusionData, Label};
use tvk_graph_eval::{evaluate, evaluate_sum, Basis, Color, End, Network, Template};
use tvk_scalars::{int, Cyclotomic};

fn shipped() -> Vec<FusionData> {
    vec![vec_zn(2), vec_zn(3), fibonacci(), ising()]
}

/// Theta graph on slots 0 and 1 whose first vertex reads `t`.
fn theta(f: &FusionData, t: [Label; 3]) -> Network {
    let mut g = Network::new();
    let e: Vec<usize> = t.iter().map(|&x| g.edge(f.dual(x))).collect();
    g.free([End::outgoing(e[0]), End::outgoing(e[1]), End::outgoing(e[2])], 0);
    g.free([End::incoming(e[2]), End::incoming(e[1]), End::incoming(e[0])], 1);
    g
}

/// The same theta graph with its last two strands fused through a summed
/// edge: Σ_z dim(z) ∗_{p,q}.
fn fused_theta(f: &FusionData, t: [Label; 3]) -> Template {
    let mut g = Template::new();
    let z = g.var();
    let c: Vec<Color> = t.iter().map(|&x| Color::Fixed(f.dual(x))).collect();
    let e0 = g.edge(c[0]);
    // strands 1 and 2 leave the slot-0 vertex, meet at p, then q splits them
    let s1 = g.edge(c[1]);
    let s2 = g.edge(c[2]);
    let s1b = g.edge(c[1]);
    let s2b = g.edge(c[2]);
    let ze = g.edge(Color::Var(z));
    g.vertex([End::outgoing(e0), End::outgoing(s1), End::outgoing(s2)], Basis::Free(0));
    let p = g.vertex([End::incoming(s2), End::incoming(s1), End::outgoing(ze)], Basis::Index(0));
    let q = g.vertex([End::incoming(ze), End::outgoing(s1b), End::outgoing(s2b)], Basis::Index(0));
    g.vertex([End::incoming(s2b), End::incoming(s1b), End::incoming(e0)], Basis::Free(1));
    g.pair(p, q);
    g.weight_dim(z, 1);
    g
}

#[test]
fn fusing_two_strands_is_the_identity() {
    for f in shipped() {
        for i in f.labels() {
            for j in f.labels() {
                for k in f.labels() {
                    let t = [i, j, k];
                    if f.n(t) == 0 {
                        continue;
                    }
                    let plain = evaluate(&f, &theta(&f, t)).unwrap();
                    let fused = evaluate_sum(&f, &fused_theta(&f, t)).unwrap();
                    assert_eq!(plain, fused, "{} {t:?}", f.name());
                }
            }
        }
    }
}

/// Strand x of a theta graph replaced by a bubble of a summed color j and a
/// fixed color k, weighted by dim(j).
fn bubble_theta(f: &FusionData, t: [Label; 3], k: Label) -> Template {
    let mut g = Template::new();
    let j = g.var();
    let c: Vec<Color> = t.iter().map(|&x| Color::Fixed(f.dual(x))).collect();
    let e0 = g.edge(c[0]);
    let e1 = g.edge(c[1]);
    let e2 = g.edge(c[2]);
    let e2b = g.edge(c[2]);
    let bj = g.edge(Color::Var(j));
    let bk = g.edge(Color::Fixed(k));
    g.vertex([End::outgoing(e0), End::outgoing(e1), End::outgoing(e2)], Basis::Index(0));
    g.vertex([End::incoming(e2), End::outgoing(bj), End::outgoing(bk)], Basis::Index(0));
    g.vertex([End::outgoing(e2b), End::incoming(bk), End::incoming(bj)], Basis::Index(0));
    g.vertex([End::incoming(e2b), End::incoming(e1), End::incoming(e0)], Basis::Index(0));
    g.weight_dim(j, 1);
    g
}

#[test]
fn summed_bubble_matches_brute_force() {
    for f in [vec_zn(3), fibonacci()] {
        for t in [[0, 0, 0], [1, 1, 1], [1, 2, 0], [0, 1, 1]] {
            if t.iter().any(|&x| x >= f.rank()) || f.n(t) == 0 {
                continue;
            }
            let th = evaluate(&f, &theta(&f, t)).unwrap();
            for k in f.labels() {
                let got = evaluate_sum(&f, &bubble_theta(&f, t, k)).unwrap();
                // strand color seen entering the bubble is t[2]'s dual reading
                let x = f.dual(t[2]);
                let mut want = Cyclotomic::zero();
                for j in f.labels() {
                    let bt = [x, f.dual(j), f.dual(k)];
                    if f.n(bt) == 0 {
                        continue;
                    }
                    let w = &f.omega(bt).unwrap()[(0, 0)];
                    want += f.dim(j) * w / f.dim(x);
                }
                let want = want * th.get(&[0, 0]);
                assert_eq!(got.data()[0], want, "{} {t:?} k={k}", f.name());
            }
        }
    }
}

#[test]
fn empty_template_is_one() {
    let f = fibonacci();
    let v = evaluate_sum(&f, &Template::new()).unwrap();
    assert_eq!(v.as_scalar(), Some(&int(1)));
}

/// Σ_{k,l} dim(k) dim(l) N(X k Y l) = dim(X) dim(Y) dim(C), as the
/// contraction of a network with its mirror image.
#[test]
fn bubble_identity_by_contraction() {
    for f in shipped() {
        for xl in f.labels() {
            for yl in f.labels() {
                let mut g = Template::new();
                let (k, l, m) = (g.var(), g.var(), g.var());
                let x = g.edge(Color::Fixed(xl));
                let ke = g.edge(Color::Var(k));
                let me = g.edge(Color::Var(m));
                let y = g.edge(Color::Fixed(yl));
                let le = g.edge(Color::Var(l));
                let mb = g.edge(Color::Var(m));
                let u1 = g.vertex([End::outgoing(me), End::outgoing(x), End::outgoing(ke)], Basis::Index(0));
                let v1 = g.vertex([End::incoming(mb), End::incoming(ke), End::incoming(x)], Basis::Index(0));
                let u2 = g.vertex([End::incoming(me), End::outgoing(y), End::outgoing(le)], Basis::Index(0));
                let v2 = g.vertex([End::incoming(le), End::incoming(y), End::outgoing(mb)], Basis::Index(0));
                g.pair(u1, v1);
                g.pair(u2, v2);
                for v in [k, l, m] {
                    g.weight_dim(v, 1);
                }
                let got = evaluate_sum(&f, &g).unwrap();
                let want = f.dim(xl) * f.dim(yl) * f.global_dim();
                assert_eq!(got.as_scalar(), Some(&want), "{} {xl} {yl}", f.name());
            }
        }
    }
}
