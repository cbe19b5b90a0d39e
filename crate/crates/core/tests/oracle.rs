use hl_core::oracle::{
    class_size, cycle_type, oracle_open_ch, permutation_of_type, set_partitions, stirling2, stirling2_recurrence,
    vertex_stable, PermPair, SetPartition, ENUMERATION_CAP,
};
use hl_core::partition::{factorial, gen_partitions, Partition};
use hl_core::sym::SymSeries;
use hl_core::uvpoly::{q, qf};
use hl_core::Error;

#[test]
fn stirling_values() {
    assert_eq!(stirling2(4, 2), 7);
    assert_eq!(stirling2(5, 3), 25);
    assert_eq!(stirling2(0, 0), 1);
    assert_eq!(stirling2(3, 0), 0);
    for n in 0..=10 {
        for k in 0..=n {
            assert_eq!(stirling2(n, k), stirling2_recurrence(n, k), "S({n},{k})");
        }
    }
}

#[test]
fn bell_numbers() {
    let bell: Vec<usize> = (0..=7).map(|n| set_partitions(n).len()).collect();
    assert_eq!(bell, [1, 1, 2, 5, 15, 52, 203, 877]);
}

#[test]
fn set_partition_validation() {
    assert!(SetPartition::new(3, vec![vec![0, 2], vec![1]]).is_ok());
    assert!(SetPartition::new(3, vec![vec![0, 1]]).is_err());
    assert!(SetPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
    assert!(SetPartition::new(2, vec![vec![0, 1], vec![]]).is_err());
}

#[test]
fn induced_block_permutation() {
    let p = SetPartition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    // (0 2)(1 3) swaps the two blocks
    assert_eq!(p.induced(&[2, 3, 0, 1]), Some(vec![1, 0]));
    // (1 2) breaks them
    assert_eq!(p.induced(&[0, 2, 1, 3]), None);
}

#[test]
fn permutations_of_type() {
    for n in 0..=6 {
        for l in gen_partitions(n) {
            assert_eq!(cycle_type(&permutation_of_type(&l)), l);
        }
        let total: u64 = gen_partitions(n).iter().map(class_size).sum();
        assert_eq!(total, factorial(n));
    }
    let pp = PermPair::of_types(&Partition::new(vec![2, 1]), &Partition::row(3));
    assert_eq!(pp.cycle_types(), (Partition::new(vec![2, 1]), Partition::row(3)));
    assert!(PermPair::new(vec![0, 0], vec![]).is_err());
}

#[test]
fn vertex_stability() {
    // genus-0 vertex with two heavy points needs light weight
    assert!(!vertex_stable(0, 2, &[]));
    assert!(vertex_stable(0, 2, &[qf(1, 10)]));
    assert!(vertex_stable(0, 3, &[]));
    assert!(vertex_stable(1, 1, &[]));
    assert!(!vertex_stable(1, 0, &[]));
    // adding weight never destroys stability
    let mut w = vec![];
    let mut prev = vertex_stable(0, 1, &w);
    for _ in 0..12 {
        w.push(qf(1, 10));
        let now = vertex_stable(0, 1, &w);
        assert!(now || !prev);
        prev = now;
    }
    assert!(prev);
    assert!(vertex_stable(0, 0, &[q(1), q(1), qf(1, 100)]));
}

#[test]
fn oracle_caps_and_truncation() {
    let b = SymSeries::homogeneous_h(3, 3);
    assert_eq!(oracle_open_ch(0, 5, 3, &b).unwrap_err(), Error::EnumerationCap(8));
    assert!(matches!(oracle_open_ch(0, 2, 2, &b), Err(Error::Truncation { .. })));
    assert_eq!(ENUMERATION_CAP, 7);
}
