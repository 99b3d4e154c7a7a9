use proptest::prelude::*;
use tvk_fusion_data::builtin::{fibonacci, ising, vec_zn};
use tvk_fusion_data::{tetra, FusionData, LoadError};
use tvk_scalars::{int, Matrix};

fn shipped() -> Vec<FusionData> {
    vec![vec_zn(2), vec_zn(3), fibonacci(), ising()]
}

#[test]
fn documents_round_trip_exactly() {
    for f in shipped() {
        let doc = f.to_document();
        let g = FusionData::from_document(&doc).unwrap();
        assert_eq!(g.to_document(), doc);
    }
}

#[test]
fn vec_z2_document_loads_with_dimension_two() {
    let doc = "tvk-category 1\nname z2\nlabels 1 g\ndual 1 1\ndual g g\nqdim 1 rat[1]\nqdim g rat[1]\n\
               triple 1 1 1 1\ntriple 1 g g 1\nomega 1 1 1 [[rat[1]]]\nomega 1 g g [[rat[1]]]\n\
               sixj 1 1 1 1 1 1 [rat[1]]\nsixj 1 1 1 g g g [rat[1]]\nsixj 1 g g 1 g g [rat[1]]\n\
               sixj 1 g g g 1 1 [rat[1]]\nsixj g g 1 g g 1 [rat[1]]\nsixj g g 1 1 1 g [rat[1]]\n";
    let f = FusionData::from_document(doc).unwrap();
    assert_eq!(*f.global_dim(), int(2));
}

fn edit(doc: &str, from: &str, to: &str) -> String {
    assert!(doc.contains(from), "{from}");
    doc.replacen(from, to, 1)
}

#[test]
fn qdim_of_unit_must_be_one() {
    let doc = edit(&vec_zn(2).to_document(), "qdim 1 rat[1]", "qdim 1 rat[2]");
    match FusionData::from_document(&doc) {
        Err(LoadError::Numeric { key, .. }) => assert_eq!(key, "qdim 1"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn structural_errors() {
    let doc = vec_zn(3).to_document();
    let bad = edit(&doc, "dual g g2", "dual g g");
    assert!(matches!(FusionData::from_document(&bad), Err(LoadError::Structural(_))));
    let bad = doc.replace("labels 1 g g2", "labels e g g2").replace("dual 1 1", "dual e e");
    assert!(FusionData::from_document(&bad).is_err());
    assert!(matches!(FusionData::from_document("labels 1\n"), Err(LoadError::Structural(_))));
    let bad = edit(&doc, "tvk-category 1", "tvk-category 1\nbogus 3");
    assert!(matches!(FusionData::from_document(&bad), Err(LoadError::Syntax { .. })));
}

#[test]
fn numeric_errors_name_their_key() {
    let doc = fibonacci().to_document();
    let bad = edit(&doc, "qdim tau cyc(5)[2:-1, 3:-1]", "qdim tau rat[2]");
    match FusionData::from_document(&bad) {
        Err(LoadError::Numeric { key, .. }) => assert!(key.contains("fusion"), "{key}"),
        other => panic!("{other:?}"),
    }
    let bad = edit(&doc, "omega tau tau tau [[cyc(5)[2:-1, 3:-1]]]", "omega tau tau tau [[rat[0]]]");
    match FusionData::from_document(&bad) {
        Err(LoadError::Numeric { key, .. }) => assert!(key.contains("omega"), "{key}"),
        other => panic!("{other:?}"),
    }
    let bad = edit(&doc, "triple tau tau tau 1\n", "");
    assert!(FusionData::from_document(&bad).is_err());
}

#[test]
fn symmetric_duplicate_must_agree() {
    let f = fibonacci();
    let (t, _) = f.sixj_representatives().next().unwrap();
    let r = tetra::readings(*t, f.duals()).into_iter().find(|r| r.labels != *t);
    if let Some(r) = r {
        let names: Vec<&str> = r.labels.iter().map(|&l| f.label_name(l)).collect();
        let doc = format!("{}sixj {} [rat[7]]\n", f.to_document(), names.join(" "));
        assert!(FusionData::from_document(&doc).is_err());
    }
}

#[test]
fn pairings_and_inverses() {
    for f in shipped() {
        for i in f.labels() {
            for j in f.labels() {
                for k in f.labels() {
                    if let Some(w) = f.omega([i, j, k]) {
                        let inv = f.omega_inv([i, j, k]).unwrap();
                        assert_eq!(&(inv * w), &Matrix::identity(w.cols()));
                        assert_eq!(w.transpose(), *f.omega(f.flip([i, j, k])).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn bubble_count_identity() {
    // Σ_{j,k,l} dim(k) dim(l) dim Hom(1, j ⊗ k ⊗ j* ⊗ l) = dim(C)^2
    for f in shipped() {
        let mut total = int(0);
        for j in f.labels() {
            for k in f.labels() {
                for l in f.labels() {
                    let hom: usize = f.labels().map(|x| f.n([j, k, x]) * f.n([f.dual(x), f.dual(j), l])).sum();
                    total += f.dim(k) * f.dim(l) * int(hom as i64);
                }
            }
        }
        assert_eq!(total, f.global_dim() * f.global_dim(), "{}", f.name());
    }
}

proptest! {
    #[test]
    fn materialized_tensors_respect_symmetry(which in 0usize..4, t in prop::array::uniform6(0usize..3)) {
        let f = &shipped()[which];
        let t = t.map(|x| x % f.rank());
        if let Some(x) = f.sixj(t) {
            for r in tetra::readings(t, f.duals()) {
                let y = f.sixj(r.labels).expect("symmetric tuple is admissible");
                let mut perm = [0; 4];
                for v in 0..4 {
                    perm[r.slot[v]] = v;
                }
                prop_assert_eq!(&x.permuted(&perm), y);
            }
        } else {
            prop_assert!(!f.admissible6(t));
        }
    }
}
