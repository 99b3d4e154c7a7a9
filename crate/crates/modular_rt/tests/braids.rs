use proptest::prelude::*;
use tvk_modular_rt::builtin::{fibonacci_modular, ising_modular};
use tvk_modular_rt::*;
use tvk_scalars::{int, Matrix};

fn word(strands: usize, len: usize) -> impl Strategy<Value = Vec<i32>> {
    let n = strands as i32 - 1;
    prop::collection::vec((1..=n, any::<bool>()).prop_map(|(g, s)| if s { g } else { -g }), 0..=len)
}

#[test]
fn braid_validation() {
    assert!(Braid::new(2, vec![2]).is_err());
    assert!(Braid::new(2, vec![0]).is_err());
    let b = Braid::new(3, vec![1, 2]).unwrap();
    assert_eq!(b.component_count(), 1);
    assert_eq!(Braid::new(3, vec![1]).unwrap().components(), vec![0, 0, 1]);
    assert_eq!(Braid::new(3, vec![1, 1]).unwrap().components(), vec![0, 1, 2]);
    assert_eq!(Braid::new(2, vec![1, 1, 1]).unwrap().self_writhe(), vec![3]);
    assert_eq!(Braid::new(2, vec![1, 1]).unwrap().self_writhe(), vec![0, 0]);
}

#[test]
fn hopf_link_is_the_s_matrix() {
    for m in [fibonacci_modular(), ising_modular()] {
        let f = m.base();
        let hopf = Braid::new(2, vec![1, 1]).unwrap();
        for i in f.labels() {
            for j in f.labels() {
                assert_eq!(eval_braid_closure(&m, &hopf, &[0, 0], &[i, j]).unwrap(), m.s_matrix()[(i, j)]);
            }
        }
    }
}

#[test]
fn unknots() {
    for m in [fibonacci_modular(), ising_modular()] {
        let f = m.base();
        let rep = BraidRep::new(&m);
        let unknot = Braid::new(1, vec![]).unwrap();
        let curl = Braid::new(2, vec![1]).unwrap();
        for i in f.labels() {
            assert_eq!(&eval_braid_closure(&m, &unknot, &[0], &[i]).unwrap(), f.dim(i));
            let framed = eval_braid_closure(&m, &unknot, &[1], &[i]).unwrap();
            assert_eq!(framed, m.twist(i) * f.dim(i));
            assert_eq!(rep.closure(&curl, &[i, i]).unwrap(), framed);
            assert_eq!(eval_braid_closure(&m, &curl, &[0], &[i]).unwrap(), *f.dim(i));
        }
    }
}

#[test]
fn unlink_multiplies() {
    let m = ising_modular();
    let f = m.base();
    let b = Braid::new(2, vec![]).unwrap();
    for i in f.labels() {
        for j in f.labels() {
            assert_eq!(eval_braid_closure(&m, &b, &[0, 0], &[i, j]).unwrap(), f.dim(i) * f.dim(j));
        }
    }
}

#[test]
fn braid_group_relations_on_every_coloring() {
    for m in [fibonacci_modular(), ising_modular()] {
        let f = m.base();
        let rep = BraidRep::new(&m);
        let l = Braid::new(3, vec![1, 2, 1]).unwrap();
        let r = Braid::new(3, vec![2, 1, 2]).unwrap();
        let inv = Braid::new(3, vec![2, -2, -1, 1]).unwrap();
        for a in f.labels() {
            for b in f.labels() {
                for c in f.labels() {
                    for x in f.labels() {
                        let cols = [a, b, c];
                        let n = rep.basis(&cols, x).len();
                        if n == 0 {
                            continue;
                        }
                        assert_eq!(rep.matrix(&l, &cols, x).unwrap(), rep.matrix(&r, &cols, x).unwrap());
                        assert_eq!(rep.matrix(&inv, &cols, x).unwrap(), Matrix::identity(n));
                    }
                }
            }
        }
    }
}

#[test]
fn wrong_color_counts_are_rejected() {
    let m = fibonacci_modular();
    let b = Braid::new(2, vec![1, 1]).unwrap();
    assert!(matches!(eval_braid_closure(&m, &b, &[0], &[1, 1]), Err(ModularError::Presentation(_))));
    assert!(matches!(eval_braid_closure(&m, &b, &[0, 0], &[1, 5]), Err(ModularError::Presentation(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn far_generators_commute_and_yang_baxter_holds(w in word(4, 3), cols in prop::collection::vec(0usize..3, 4), x in 0usize..3) {
        let m = ising_modular();
        let rep = BraidRep::new(&m);
        prop_assume!(!rep.basis(&cols, x).is_empty());
        let with = |tail: &[i32]| {
            let mut v = w.clone();
            v.extend_from_slice(tail);
            rep.matrix(&Braid::new(4, v).unwrap(), &cols, x).unwrap()
        };
        prop_assert_eq!(with(&[1, 3]), with(&[3, 1]));
        prop_assert_eq!(with(&[2, 3, 2]), with(&[3, 2, 3]));
        prop_assert_eq!(with(&[-1, -2, -1]), with(&[-2, -1, -2]));
    }

    #[test]
    fn markov_moves_preserve_the_closure(w in word(3, 5), c in 0usize..2, sign in any::<bool>(), conj in 1i32..3) {
        let m = fibonacci_modular();
        let b = Braid::new(3, w.clone()).unwrap();
        let nc = b.component_count();
        let colors = vec![c; nc];
        let framings: Vec<i64> = (0..nc as i64).collect();
        let base = eval_braid_closure(&m, &b, &framings, &colors).unwrap();

        let mut stab = w.clone();
        stab.push(if sign { 3 } else { -3 });
        let s = Braid::new(4, stab).unwrap();
        prop_assert_eq!(s.component_count(), nc);
        prop_assert_eq!(&eval_braid_closure(&m, &s, &framings, &colors).unwrap(), &base);

        let mut cw = vec![conj];
        cw.extend_from_slice(&w);
        cw.push(-conj);
        let cb = Braid::new(3, cw).unwrap();
        let same: Vec<i64> = vec![0; nc];
        prop_assert_eq!(
            eval_braid_closure(&m, &cb, &same, &colors).unwrap(),
            eval_braid_closure(&m, &b, &same, &colors).unwrap()
        );
    }

    #[test]
    fn inverse_word_is_the_identity(w in word(3, 4), cols in prop::collection::vec(0usize..2, 3), x in 0usize..2) {
        let m = fibonacci_modular();
        let rep = BraidRep::new(&m);
        let n = rep.basis(&cols, x).len();
        prop_assume!(n > 0);
        let mut v = w.clone();
        v.extend(w.iter().rev().map(|g| -g));
        prop_assert_eq!(rep.matrix(&Braid::new(3, v).unwrap(), &cols, x).unwrap(), Matrix::identity(n));
    }
}

#[test]
fn trefoil_is_not_the_unknot() {
    let m = fibonacci_modular();
    let t = Braid::new(2, vec![1, 1, 1]).unwrap();
    let v = eval_braid_closure(&m, &t, &[0], &[1]).unwrap();
    assert_ne!(v, m.base().dim(1).clone());
    assert_ne!(v, int(0));
}
