//! Exhaustive small-n verification of the structural claims: the bijection
//! roundtrips both ways, shape heights track crossing numbers, crossing and
//! nesting are count-dual, the move restrictions carve out exactly the
//! matching/partition/braid classes, and the counting routes agree.

mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use tangled::{
    allowed_moves, beta, beta_inv, count_all, phi, psi, tangled_diagrams, vacillating_tableaux,
    DiagramClass, Label, Move, PartialMatching, TangledDiagram,
};

const BOUND: usize = 8;

fn all_diagrams(n: usize) -> impl Iterator<Item = TangledDiagram> {
    tangled_diagrams(n, BOUND).unwrap()
}

#[test]
fn diagram_count_over_two_vertices_is_seven() {
    assert_eq!(all_diagrams(2).count(), 7);
}

#[test]
fn inflate_deflate_roundtrip() {
    for n in 0..=5 {
        for d in all_diagrams(n) {
            let m = d.inflate();
            assert_eq!(m.pairs().len(), d.arcs().len(), "arc count preserved: {d:?}");
            for label in m.ground() {
                let split = d.degree(label.index()) == 2;
                assert_eq!(
                    m.ground().contains(&Label::primed(label.index())),
                    split,
                    "split form of {d:?}"
                );
            }
            assert_eq!(m.deflate().unwrap(), d, "roundtrip of {d:?}");
        }
    }
}

#[test]
fn inflation_is_onto_the_split_matchings() {
    // Every matching on a split-form ground set deflates to a valid diagram
    // and inflates back to itself.
    for n in 0..=3 {
        for split_mask in 0u32..(1 << n) {
            let mut ground = Vec::new();
            let mut required = Vec::new();
            for v in 1..=n {
                ground.push(Label::unprimed(v));
                if split_mask >> (v - 1) & 1 == 1 {
                    ground.push(Label::primed(v));
                    required.push(Label::unprimed(v));
                    required.push(Label::primed(v));
                }
            }
            for pairs in partial_matchings(&ground) {
                let covered: BTreeSet<Label> =
                    pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
                if !required.iter().all(|l| covered.contains(l)) {
                    continue;
                }
                let m = PartialMatching::new(ground.clone(), pairs).unwrap();
                let d = m.deflate().unwrap();
                assert_eq!(d.inflate(), m);
            }
        }
    }
}

/// All ways to pair up a subset of `points`.
fn partial_matchings(points: &[Label]) -> Vec<Vec<(Label, Label)>> {
    match points.split_first() {
        None => vec![vec![]],
        Some((&first, rest)) => {
            let mut out = partial_matchings(rest); // first stays single
            for (i, &partner) in rest.iter().enumerate() {
                let mut remaining = rest.to_vec();
                remaining.remove(i);
                for mut sub in partial_matchings(&remaining) {
                    sub.insert(0, (first, partner));
                    out.push(sub);
                }
            }
            out
        }
    }
}

#[test]
fn bijection_roundtrips_both_ways() {
    for n in 0..=4 {
        let mut diagram_count = 0usize;
        for d in all_diagrams(n) {
            let m = d.inflate();
            let v = psi(&m).unwrap();
            assert_eq!(phi(&v).unwrap(), m, "phi after psi on {d:?}");
            assert_eq!(beta(&v).unwrap(), d, "beta after beta_inv on {d:?}");
            diagram_count += 1;
        }
        let mut tableau_count = 0usize;
        for v in vacillating_tableaux(n, None, &Move::ALL, BOUND).unwrap() {
            let m = phi(&v).unwrap();
            assert_eq!(psi(&m).unwrap(), v, "psi after phi on {v:?}");
            assert_eq!(beta_inv(&beta(&v).unwrap()).unwrap(), v);
            tableau_count += 1;
        }
        assert_eq!(diagram_count, tableau_count, "n = {n}");
    }
}

#[test]
fn max_shape_rows_equal_crossing_number() {
    for n in 0..=4 {
        for d in all_diagrams(n) {
            let inflation = d.inflate();
            let oracle = common::max_crossing_oracle(&inflation);
            assert_eq!(d.crossing_number(), oracle, "clique search vs oracle on {d:?}");
            let v = beta_inv(&d).unwrap();
            assert_eq!(v.max_rows(), oracle, "rows vs crossings on {d:?}");
        }
    }
}

#[test]
fn nesting_number_matches_oracle() {
    for n in 0..=4 {
        for d in all_diagrams(n) {
            let oracle = common::max_nesting_oracle(&d.inflate());
            assert_eq!(d.nesting_number(), oracle, "on {d:?}");
        }
    }
}

#[test]
fn crossing_and_nesting_are_count_dual() {
    for n in 0..=5 {
        let mut noncrossing = vec![0usize; n + 3];
        let mut nonnesting = vec![0usize; n + 3];
        for d in all_diagrams(n) {
            for k in 2..n + 3 {
                if d.crossing_number() < k {
                    noncrossing[k] += 1;
                }
                if d.nesting_number() < k {
                    nonnesting[k] += 1;
                }
            }
        }
        for k in 2..n + 3 {
            assert_eq!(noncrossing[k], nonnesting[k], "n = {n}, k = {k}");
        }
    }
}

#[test]
fn formula_matches_brute_force() {
    for n in 0..=5 {
        for k in 2..=4 {
            let brute = all_diagrams(n).filter(|d| d.crossing_number() < k).count();
            assert_eq!(BigUint::from(brute), count_all(k, n), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn move_restrictions_carve_out_the_classes() {
    let classes = [DiagramClass::Matching, DiagramClass::Partition, DiagramClass::Braid];
    for n in 0..=4 {
        for class in classes {
            let moves = allowed_moves(class);
            let restricted: Vec<_> =
                vacillating_tableaux(n, None, moves, BOUND).unwrap().collect();
            for v in &restricted {
                let image = beta(v).unwrap();
                assert!(
                    image.classify().is_in(class),
                    "{class:?} image violated by {v:?} -> {image:?}"
                );
            }
            let in_class: Vec<_> =
                all_diagrams(n).filter(|d| d.classify().is_in(class)).collect();
            assert_eq!(restricted.len(), in_class.len(), "{class:?}, n = {n}");
            for d in &in_class {
                assert!(
                    beta_inv(d).unwrap().uses_only(moves),
                    "{class:?} preimage of {d:?} uses a forbidden move"
                );
            }
        }
    }
}

#[test]
fn restricted_tableau_counts_match_independent_oracles() {
    for n in 0..=6 {
        let partitions = vacillating_tableaux(n, None, allowed_moves(DiagramClass::Partition), BOUND)
            .unwrap()
            .count();
        assert_eq!(partitions as u64, common::set_partition_count(n), "partitions over [{n}]");
    }
    for p in 0..=8 {
        let matchings = vacillating_tableaux(p, None, allowed_moves(DiagramClass::Matching), BOUND)
            .unwrap()
            .count();
        assert_eq!(matchings as u64, common::matching_count(p), "matchings over [{p}]");
    }
    for n in 0..=4 {
        let braids = vacillating_tableaux(n, None, allowed_moves(DiagramClass::Braid), BOUND)
            .unwrap()
            .count();
        let by_classification = all_diagrams(n).filter(|d| d.classify().braid).count();
        assert_eq!(braids, by_classification, "braids over [{n}]");
    }
}
