#![allow(dead_code)] // each test binary uses its own subset of the oracles

//! Brute-force reference implementations, kept independent of the library's
//! computation paths: crossing/nesting by exhaustive subset search over raw
//! label positions, matchings by direct recursive pairing, set partitions by
//! block assignment.

use tangled::{Label, PartialMatching};

/// Position of a label in the alphabet order, computed from scratch.
fn pos(l: Label) -> usize {
    2 * l.index() + usize::from(l.is_primed())
}

fn cross(a: &(Label, Label), b: &(Label, Label)) -> bool {
    let (a1, a2) = (pos(a.0).min(pos(a.1)), pos(a.0).max(pos(a.1)));
    let (b1, b2) = (pos(b.0).min(pos(b.1)), pos(b.0).max(pos(b.1)));
    (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)
}

fn nest(a: &(Label, Label), b: &(Label, Label)) -> bool {
    let (a1, a2) = (pos(a.0).min(pos(a.1)), pos(a.0).max(pos(a.1)));
    let (b1, b2) = (pos(b.0).min(pos(b.1)), pos(b.0).max(pos(b.1)));
    (a1 < b1 && b2 < a2) || (b1 < a1 && a2 < b2)
}

fn largest_subset(
    pairs: &[(Label, Label)],
    related: impl Fn(&(Label, Label), &(Label, Label)) -> bool,
) -> usize {
    let n = pairs.len();
    assert!(n < 32, "oracle is for desk-scale inputs");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let chosen: Vec<&(Label, Label)> =
            (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &pairs[i]).collect();
        let ok = (0..chosen.len())
            .all(|i| (i + 1..chosen.len()).all(|j| related(chosen[i], chosen[j])));
        if ok {
            best = best.max(chosen.len());
        }
    }
    best
}

pub fn max_crossing_oracle(m: &PartialMatching) -> usize {
    largest_subset(m.pairs(), cross)
}

pub fn max_nesting_oracle(m: &PartialMatching) -> usize {
    largest_subset(m.pairs(), nest)
}

/// All perfect matchings on the given points, as sorted pair lists.
pub fn perfect_matchings(points: &[Label]) -> Vec<Vec<(Label, Label)>> {
    if points.is_empty() {
        return vec![vec![]];
    }
    if points.len() % 2 == 1 {
        return vec![];
    }
    let first = points[0];
    let mut out = Vec::new();
    for i in 1..points.len() {
        let partner = points[i];
        let rest: Vec<Label> = points[1..]
            .iter()
            .copied()
            .filter(|&p| p != partner)
            .collect();
        for mut sub in perfect_matchings(&rest) {
            sub.insert(0, (first, partner));
            out.push(sub);
        }
    }
    out
}

/// Number of set partitions of an n-element set, by explicit block
/// assignment.
pub fn set_partition_count(n: usize) -> u64 {
    fn assign(remaining: usize, blocks: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        // next element joins one of the existing blocks or opens a new one
        blocks as u64 * assign(remaining - 1, blocks) + assign(remaining - 1, blocks + 1)
    }
    assign(n, 0)
}

/// `(p-1)!!` perfect matchings on `p` points; zero for odd `p > 0`.
pub fn matching_count(p: usize) -> u64 {
    if p == 0 {
        return 1;
    }
    if p % 2 == 1 {
        return 0;
    }
    (1..p as u64).step_by(2).product()
}
