use std::collections::HashSet;

use pfbraid_core::bijection::in_vector;
use pfbraid_core::dbasis::enumerate_recursive;
use pfbraid_core::noncrossing::*;
use pfbraid_core::parking::{enumerate_parking, ParkingFunction};

#[test]
fn lambda_of_pi_is_shifted_initial_vector() {
    for n in 1..=5 {
        for b in enumerate_recursive(n) {
            let shifted: Vec<usize> = lambda_chain(&pi_chain(&b)).iter().map(|l| l + 1).collect();
            assert_eq!(shifted, in_vector(&b).values(), "{b}");
        }
    }
}

#[test]
fn pi_and_chain_to_basis_are_inverse() {
    for n in 1..=5 {
        let bases = enumerate_recursive(n);
        let chains = enumerate_chains(n);
        assert_eq!(chains.len() as u64, (n as u64 + 1).pow(n as u32 - 1));
        for b in &bases {
            assert_eq!(chain_to_basis(&pi_chain(b)), *b);
        }
        for c in &chains {
            assert_eq!(pi_chain(&chain_to_basis(c)), *c, "{c}");
        }
        let images: HashSet<_> = bases.iter().map(pi_chain).collect();
        assert_eq!(images, chains.into_iter().collect());
    }
}

#[test]
fn stanley_image_is_all_parking_functions() {
    for n in 1..=5 {
        let mut image = HashSet::new();
        for c in enumerate_chains(n) {
            let values: Vec<usize> = lambda_chain(&c).iter().map(|l| l + 1).collect();
            assert!(image.insert(ParkingFunction::new(values).unwrap()));
        }
        let all: HashSet<_> = enumerate_parking(n).unwrap().collect();
        assert_eq!(image, all);
    }
}

#[test]
fn every_partition_in_a_chain_is_noncrossing() {
    for n in 1..=6 {
        for b in enumerate_recursive(n) {
            let c = pi_chain(&b);
            for (k, p) in c.partitions().iter().enumerate() {
                assert!(is_noncrossing(p.blocks()));
                assert_eq!(p.blocks().len(), n + 1 - k);
                if k > 0 {
                    assert!(c.partitions()[k - 1].refines(p));
                }
            }
        }
    }
}

#[test]
fn chain_counts_at_six() {
    assert_eq!(enumerate_chains(6).len(), 16807);
}
