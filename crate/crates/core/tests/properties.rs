//! Property suites: exhaustive field axioms, orbit-stabilizer on every
//! materialized subgroup, certificate invariance, and proptest invariants.

mod common;

use common::{random_permutation, DESIGNS, MODEL};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use secant_designs::design::{verify_2design, Design};
use secant_designs::field::{gf8, BinaryField};
use secant_designs::iso::{are_isomorphic, canonical_form};
use secant_designs::perm::{format_generators, parse_generators, Permutation};
use secant_designs::search::{admissible_params, outer_divisibility_filter};

#[test]
fn gf8_axioms_hold_exhaustively() {
    assert_eq!(common::field_axioms_exhaustive(gf8()).unwrap(), 512);
}

#[test]
fn gf16_axioms_hold_exhaustively() {
    let f = BinaryField::new(4, 0b10011).unwrap();
    assert_eq!(common::field_axioms_exhaustive(&f).unwrap(), 4096);
}

#[test]
fn orbit_stabilizer_on_every_materialized_subgroup() {
    assert!(common::orbit_stabilizer_all().unwrap() > 70);
}

#[test]
fn certificates_survive_100_relabelings_per_design() {
    common::relabeling_invariance(100, 0x005e_c447).unwrap();
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    any::<u64>().prop_map(move |s| random_permutation(n, &mut ChaCha8Rng::seed_from_u64(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gf256_ring_laws(a in 0u32..256, b in 0u32..256, c in 0u32..256) {
        let f = BinaryField::new(8, 0x11b).unwrap();
        let (a, b, c) = (f.element(a).unwrap(), f.element(b).unwrap(), f.element(c).unwrap());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.frobenius_pow(a, 8), a);
    }

    #[test]
    fn permutation_group_laws(a in perm_strategy(12), b in perm_strategy(12)) {
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
        prop_assert!(a.pow(a.order()).is_identity());
        let mut ca: Vec<usize> = a.cycles().iter().map(Vec::len).collect();
        let mut cb: Vec<usize> = a.conjugate_by(&b).cycles().iter().map(Vec::len).collect();
        ca.sort();
        cb.sort();
        prop_assert_eq!(ca, cb);
    }

    #[test]
    fn generator_text_roundtrip(a in perm_strategy(9), b in perm_strategy(9)) {
        let gens = vec![a, b];
        let (n, back) = parse_generators(&format_generators(9, &gens)).unwrap();
        prop_assert_eq!(n, 9);
        prop_assert_eq!(back, gens);
    }

    #[test]
    fn admissible_params_identities(k in 3usize..200, pick in any::<usize>()) {
        let divisors: Vec<usize> = (1..=k).filter(|d| k % d == 0).collect();
        let d = divisors[pick % divisors.len()];
        let a = admissible_params(k, d).unwrap();
        let p = a.params;
        prop_assert_eq!(p.b * p.k, p.v * p.r);
        prop_assert_eq!(p.r * (p.k - 1), p.lambda * (p.v - 1));
        prop_assert!(a.ratio_exceeds_k);
    }

    #[test]
    fn outer_filter_matches_definition(k in 1usize..100, out in 1u64..50, stab in 1u64..10_000) {
        let n = k as u64 + 1;
        let g = (1..=n).filter(|d| n.is_multiple_of(*d) && out % d == 0).max().unwrap();
        prop_assert_eq!(outer_divisibility_filter(k, out, stab), stab % (n / g) == 0);
    }

    #[test]
    fn verified_designs_satisfy_parameter_identities(seed in any::<u64>(), b in 1usize..40) {
        // random simple 3-uniform hypergraphs on 7 points: whenever they pass,
        // the parameter identities hold
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut blocks = Vec::new();
        for _ in 0..b {
            let p = random_permutation(7, &mut rng);
            let mut blk = p.images()[..3].to_vec();
            blk.sort();
            blocks.push(blk);
        }
        blocks.sort();
        blocks.dedup();
        let d = Design::new(7, blocks).unwrap();
        if let Ok(p) = verify_2design(&d) {
            prop_assert_eq!(p.b * p.k, p.v * p.r);
            prop_assert_eq!(p.r * (p.k - 1), p.lambda * (p.v - 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn relabeled_designs_are_isomorphic_with_valid_witness(i in 0usize..4, p in perm_strategy(36)) {
        let d = &DESIGNS[i];
        let e = d.relabel(&p);
        prop_assert_eq!(verify_2design(&e).unwrap(), verify_2design(d).unwrap());
        let w = are_isomorphic(d, &e).unwrap().expect("relabeling is an isomorphism");
        prop_assert_eq!(&d.relabel(&w), &e);
        prop_assert_eq!(canonical_form(d).certificate, canonical_form(&e).certificate);
    }

    #[test]
    fn group_elements_are_automorphisms(i in 0usize..4, j in 0usize..1512) {
        prop_assert!(DESIGNS[i].is_automorphism(&MODEL.g.elements()[j]));
    }

    #[test]
    fn text_export_roundtrip(i in 0usize..4, p in perm_strategy(36)) {
        let d = DESIGNS[i].relabel(&p);
        prop_assert_eq!(Design::from_text(&d.to_text()).unwrap(), d);
    }
}
