use std::path::Path;

use proptest::prelude::*;
use tvk_center::*;
use tvk_fusion_data::builtin as cats;
use tvk_manifold::{builtin, lens};
use tvk_modular_rt::{deligne_square, rt_invariant, Surgery};
use tvk_scalars::{int, zeta, Cyclotomic, Matrix};
use tvk_state_sum::genus_dimension;

fn cyc(n: u64) -> AbelianGroup {
    AbelianGroup::cyclic(n)
}

#[test]
fn group_validation() {
    assert!(AbelianGroup::new(vec![2, 4]).is_ok());
    assert!(AbelianGroup::new(vec![2, 3]).is_err());
    assert!(AbelianGroup::new(vec![1]).is_err());
    assert_eq!(AbelianGroup::new(vec![2, 4]).unwrap().elements().len(), 8);
    assert_eq!(cyc(1).elements(), vec![Vec::<u64>::new()]);
}

#[test]
fn toric_code() {
    let z = drinfeld_double_abelian(&cyc(2));
    let f = z.base();
    assert_eq!(f.rank(), 4);
    assert_eq!(z.twists().iter().filter(|t| t.is_one()).count(), 3);
    assert_eq!(z.twists().iter().filter(|t| **t == int(-1)).count(), 1);
    assert_eq!(z.gauss_sums().0, &int(2));
    assert_eq!(z.gauss_sums().1, &int(2));
    assert_eq!(f.label_name(f.unit()), "1");
    assert!(f.label("1/1").is_some());
}

/// S_ab against the monodromy ⟨χ_a, g_b⟩⟨χ_b, g_a⟩ computed from the labels.
#[test]
fn double_s_matrix_is_the_monodromy_pairing() {
    for n in 2..=4u64 {
        let z = drinfeld_double_abelian(&cyc(n));
        let f = z.base();
        let parse = |i| -> (i64, i64) {
            let name = f.label_name(i);
            if name == "1" {
                return (0, 0);
            }
            let (g, c) = name.split_once('/').unwrap();
            (g.parse().unwrap(), c.parse().unwrap())
        };
        let s = z.s_matrix();
        let mut plain = true;
        let mut conj = true;
        for a in f.labels() {
            for b in f.labels() {
                let ((ga, ca), (gb, cb)) = (parse(a), parse(b));
                let m = zeta(n, (ca * gb + cb * ga) % n as i64);
                plain &= s[(a, b)] == m;
                conj &= s[(a, b)] == m.conj();
            }
        }
        assert!(plain || conj, "n = {n}");
    }
}

#[test]
fn z3_double() {
    let z = drinfeld_double_abelian(&cyc(3));
    assert_eq!(z.base().rank(), 9);
    assert_eq!(z.gauss_sums().0, &int(3));
    assert!(z.is_anomaly_free());
}

#[test]
fn trivial_group() {
    let z = drinfeld_double_abelian(&cyc(1));
    assert_eq!(z.base().rank(), 1);
    assert_eq!(rt_invariant(&z, &Surgery::unknot(3)).unwrap(), int(1));
    let f = vec_group(&cyc(1));
    assert_eq!(verify_main_theorem(&f, &z, &lens(3, 1).unwrap(), &Surgery::unknot(3)).unwrap().lhs, int(1));
}

#[test]
fn vec_group_matches_the_shipped_cyclic_categories() {
    for n in 2..=3 {
        let t = lens(4, 1).unwrap();
        let a = tvk_state_sum::tv_invariant(&vec_group(&cyc(n)), &t).unwrap();
        let b = tvk_state_sum::tv_invariant(&cats::vec_zn(n as usize), &t).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn torus_space_is_the_center_rank() {
    for n in 2..=3 {
        let f = vec_group(&cyc(n));
        let z = drinfeld_double_abelian(&cyc(n));
        assert_eq!(genus_dimension(&f, 1).unwrap(), z.base().rank());
    }
    let fib = cats::fibonacci();
    let z = deligne_square(&tvk_modular_rt::builtin::fibonacci_modular());
    assert_eq!(genus_dimension(&fib, 1).unwrap(), z.base().rank());
}

#[test]
fn toric_code_on_lens_spaces() {
    let f = cats::vec_zn(2);
    let z = drinfeld_double_abelian(&cyc(2));
    for p in 1..=5usize {
        let r = verify_main_theorem(&f, &z, &lens(p, 1).unwrap(), &Surgery::unknot(p as i64)).unwrap();
        assert!(r.equal, "L({p},1): {} vs {}", r.lhs, r.rhs);
        let want = if p % 2 == 0 { int(1) } else { Cyclotomic::from_ratio(1, 2) };
        assert_eq!(r.lhs, want);
    }
    let r = verify_main_theorem(&f, &z, &builtin("s1xs2").unwrap(), &Surgery::unknot(0)).unwrap();
    assert!(r.equal);
    let r = verify_main_theorem(&f, &z, &builtin("s3_1tet").unwrap(), &Surgery::empty()).unwrap();
    assert!(r.equal);
    assert_eq!(r.rhs, Cyclotomic::from_ratio(1, 2));
}

#[test]
fn z3_on_lens_spaces() {
    let f = cats::vec_zn(3);
    let z = drinfeld_double_abelian(&cyc(3));
    for p in 1..=4usize {
        let r = verify_main_theorem(&f, &z, &lens(p, 1).unwrap(), &Surgery::unknot(p as i64)).unwrap();
        assert!(r.equal, "L({p},1): {} vs {}", r.lhs, r.rhs);
    }
}

#[test]
fn fibonacci_lens_values() {
    let f = cats::fibonacci();
    let z = deligne_square(&tvk_modular_rt::builtin::fibonacci_modular());
    for (t, s) in [
        (builtin("s3_1tet").unwrap(), Surgery::empty()),
        (builtin("s1xs2").unwrap(), Surgery::unknot(0)),
        (lens(2, 1).unwrap(), Surgery::unknot(2)),
        (lens(3, 1).unwrap(), Surgery::unknot(3)),
    ] {
        let r = verify_main_theorem(&f, &z, &t, &s).unwrap();
        assert!(r.equal, "{}: {} vs {}", s.name, r.lhs, r.rhs);
    }
}

#[test]
fn mismatched_manifolds_are_reported_unequal() {
    let f = cats::vec_zn(2);
    let z = drinfeld_double_abelian(&cyc(2));
    let r = verify_main_theorem(&f, &z, &lens(2, 1).unwrap(), &Surgery::unknot(3)).unwrap();
    assert!(!r.equal);
}

#[test]
fn manifest_runs_every_case() {
    let text = "tvk-manifest 1\n\
        # toric code\n\
        pair builtin:vecZ2 double:2\n\
        case builtin:s3_1tet empty\n\
        case builtin:lens(3,1) unknot:3\n\
        pair builtin:fibonacci builtin:fibonacci-square\n\
        case builtin:s1xs2 unknot:0\n";
    let m = Manifest::from_document(text, Path::new(".")).unwrap();
    assert_eq!(m.pairings.len(), 2);
    let out = m.run();
    assert_eq!(out.len(), 3);
    assert!(out.iter().all(|(_, _, r)| r.as_ref().unwrap().equal));
}

#[test]
fn manifest_errors() {
    let dot = Path::new(".");
    assert!(matches!(Manifest::from_document("pair builtin:vecZ2 double:2\n", dot), Err(ManifestError::Syntax { .. })));
    assert!(matches!(
        Manifest::from_document("tvk-manifest 1\ncase builtin:s3_1tet empty\n", dot),
        Err(ManifestError::Syntax { line: 2, .. })
    ));
    assert!(matches!(
        Manifest::from_document("tvk-manifest 1\npair no-such-file.cat double:2\n", dot),
        Err(ManifestError::Input { .. })
    ));
    assert!(matches!(
        Manifest::from_document("tvk-manifest 1\npair builtin:vecZ2 double:2,3\n", dot),
        Err(ManifestError::Input { .. })
    ));
    assert!(matches!(Manifest::from_document("tvk-manifest 2\n", dot), Err(ManifestError::Syntax { .. })));
}

#[test]
fn manifest_reads_files_relative_to_its_directory() {
    let dir = std::env::temp_dir().join(format!("tvk-center-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("z2.cat"), cats::vec_zn(2).to_document()).unwrap();
    std::fs::write(dir.join("toric.mod"), drinfeld_double_abelian(&cyc(2)).to_document()).unwrap();
    std::fs::write(dir.join("l4.tri"), lens(4, 1).unwrap().to_document()).unwrap();
    std::fs::write(dir.join("l4.srg"), Surgery::unknot(4).to_document()).unwrap();
    let m = Manifest::from_document("tvk-manifest 1\npair z2.cat toric.mod\ncase l4.tri l4.srg\n", &dir).unwrap();
    let out = m.run();
    assert!(out[0].2.as_ref().unwrap().equal);
    std::fs::remove_dir_all(&dir).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn pairing_is_bilinear(n in 2u64..7, c in 0u64..7, g in 0u64..7, h in 0u64..7) {
        let a = cyc(n);
        let (c, g, h) = ([c % n], [g % n], [h % n]);
        prop_assert_eq!(a.pairing(&c, &a.add(&g, &h)), a.pairing(&c, &g) * a.pairing(&c, &h));
    }

    #[test]
    fn double_s_is_unitary_up_to_dimension(n in 2u64..5) {
        let z = drinfeld_double_abelian(&cyc(n));
        let s = z.s_matrix();
        let mut conj = s.clone();
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                conj[(i, j)] = s[(j, i)].conj();
            }
        }
        let d = int((n * n) as i64);
        prop_assert_eq!(&(s * &conj), &Matrix::identity(s.rows()).scale(&d));
        prop_assert_eq!(z.gauss_sums().0 * z.gauss_sums().1, d);
    }
}

/// Linking matrix of a framed braid closure: framings on the diagonal and
/// half the signed crossings between distinct components elsewhere.
fn linking_matrix(b: &tvk_modular_rt::Braid, framings: &[i64]) -> Vec<Vec<i64>> {
    let comp = b.components();
    let k = framings.len();
    let mut twice = vec![vec![0i64; k]; k];
    let mut at: Vec<usize> = (0..b.strands).collect();
    for &g in &b.word {
        let i = g.unsigned_abs() as usize - 1;
        let (x, y) = (comp[at[i]], comp[at[i + 1]]);
        if x != y {
            twice[x][y] += g.signum() as i64;
            twice[y][x] += g.signum() as i64;
        }
        at.swap(i, i + 1);
    }
    (0..k).map(|r| (0..k).map(|c| if r == c { framings[r] } else { twice[r][c] / 2 }).collect()).collect()
}

/// |Hom(H_1(M), Z/n)| / n from the kernel of the linking matrix mod n.
fn abelian_oracle(l: &[Vec<i64>], n: u64) -> Cyclotomic {
    let k = l.len();
    let n = n as i64;
    let mut count = 0i64;
    for code in 0..n.pow(k as u32) {
        let x: Vec<i64> = (0..k).map(|i| (code / n.pow(i as u32)) % n).collect();
        if l.iter().all(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>().rem_euclid(n) == 0) {
            count += 1;
        }
    }
    Cyclotomic::from_ratio(count, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn double_invariant_counts_homomorphisms(
        n in 2u64..4,
        word in prop::collection::vec((1i32..3, any::<bool>()), 0..6),
        framings in prop::collection::vec(-3i64..4, 3),
    ) {
        let word: Vec<i32> = word.into_iter().map(|(g, s)| if s { g } else { -g }).collect();
        let b = tvk_modular_rt::Braid::new(3, word).unwrap();
        let framings = framings[..b.component_count()].to_vec();
        let l = linking_matrix(&b, &framings);
        let s = Surgery::new("random", b, framings).unwrap();
        let z = drinfeld_double_abelian(&cyc(n));
        prop_assert_eq!(rt_invariant(&z, &s).unwrap(), abelian_oracle(&l, n));
    }
}
