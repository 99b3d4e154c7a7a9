use tvk_fusion_data::builtin::{fibonacci, ising, vec_zn};
use tvk_state_sum::{genus_dimension, genus_projector, s2_dimension, s2_projector};

#[test]
fn sphere_space_is_one_dimensional() {
    for f in [vec_zn(2), vec_zn(3), fibonacci(), ising()] {
        let p = s2_projector(&f).unwrap();
        assert_eq!(&p * &p, p, "{}", f.name());
        assert_eq!(s2_dimension(&f).unwrap(), 1, "{}", f.name());
        // entries dim(i)² / D, independent of j
        let dinv = f.global_dim().inv().unwrap();
        for j in f.labels() {
            for i in f.labels() {
                assert_eq!(p[(j, i)], f.dim(i) * f.dim(i) * &dinv);
            }
        }
    }
}

#[test]
fn torus_projector_is_idempotent_with_center_rank() {
    // ranks: |G|² for Vec_G, and 2 × 2 and 3 × 3 for the Deligne squares
    for (f, rank) in [(vec_zn(2), 4), (vec_zn(3), 9), (fibonacci(), 4), (ising(), 9)] {
        let p = genus_projector(&f, 1).unwrap();
        assert!(p.is_idempotent(), "{}", f.name());
        assert_eq!(p.rank(), rank, "{}", f.name());
        assert_eq!(genus_dimension(&f, 1).unwrap(), rank);
    }
}

#[test]
fn torus_basis_sizes() {
    // Vec_G: one basis vector per pair; Fibonacci: 1 + 1 + 1 + 2
    assert_eq!(genus_projector(&vec_zn(2), 1).unwrap().basis.len(), 4);
    assert_eq!(genus_projector(&fibonacci(), 1).unwrap().basis.len(), 5);
}

#[test]
fn genus_two_for_z2() {
    let p = genus_projector(&vec_zn(2), 2).unwrap();
    assert!(p.is_idempotent());
    assert_eq!(p.rank(), 16);
}

#[test]
#[ignore = "about a minute in release mode"]
fn genus_two_for_fibonacci() {
    // (dimension of the Fibonacci genus two space)² = 5²
    let p = genus_projector(&fibonacci(), 2).unwrap();
    assert!(p.is_idempotent());
    assert_eq!(p.rank(), 25);
}

#[test]
fn genus_zero_falls_back_to_the_sphere() {
    assert_eq!(genus_dimension(&fibonacci(), 0).unwrap(), 1);
    assert!(genus_projector(&fibonacci(), 0).is_err());
}
