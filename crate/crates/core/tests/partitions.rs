mod common;

use nbox::search::{enumerate_max_families, SearchConfig};
use nbox::Family;

#[test]
fn random_twin_split_partitions() {
    let small = common::random_partition_suite(1000, 8, 0x5eed).unwrap();
    assert!(small >= 100, "only {small} at-most-2-neighborly samples");
}

#[test]
fn constructed_partitions() {
    common::construction_partition_suite(12).unwrap();
}

#[test]
fn maximum_families_in_dimension_three_are_partitions() {
    let cfg = SearchConfig {
        deterministic: true,
        ..SearchConfig::default()
    };
    for k in 1..=3 {
        let all = enumerate_max_families(k, 3, &cfg).unwrap();
        assert!(!all.is_empty());
        for f in &all {
            if k >= 2 {
                assert!(f.is_partition(), "k={k}: {:?}", f.to_nbx());
            }
            if k == 2 {
                assert!(f.is_total_lamination(), "k={k}: {:?}", f.to_nbx());
            }
        }
    }
    // a maximum 1-neighborly family need not be a partition
    let pinwheel = Family::parse_list(&["*00", "0*1", "101", "11*"]).unwrap();
    let ones = enumerate_max_families(1, 3, &cfg).unwrap();
    assert!(ones.iter().any(|f| f.same_members(&pinwheel)));
    assert!(!pinwheel.is_partition());

    let cube = enumerate_max_families(3, 3, &cfg).unwrap();
    assert_eq!(cube.len(), 1);
    assert!(cube[0].same_members(&Family::full_cube(3)));
}

#[test]
fn neighborly_families_fit_in_the_cube() {
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
    for _ in 0..2000 {
        let f = common::random_family(&mut rng, 6);
        if f.is_neighborly(6) {
            assert!(f.volume::<u128>() <= 64);
        }
    }
}
