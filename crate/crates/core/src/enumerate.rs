//! Exhaustive generators at desk scale, walk-counting DPs, and the exact
//! counting formulas for k-noncrossing tangled diagrams.
//!
//! Counts use unbounded integers throughout. The two generators are
//! bounded-memory streams with a stable canonical order: diagrams by arc
//! multiset (lexicographic), then by resolution assignment with `crossing`
//! before `nesting`; tableaux in depth-first order over moves (in
//! [`Move::ALL`] order) and square positions (top row first).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bijection::{HalfStep, Move, VacillatingTableau};
use crate::tangle::{Arc, Resolution, TangledDiagram};
use crate::young::Shape;

/// Exact nonnegative integer count.
pub type Count = BigUint;

/// Default cap for the exhaustive diagram and tableau generators.
pub const DEFAULT_DIAGRAM_BOUND: usize = 6;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("n = {n} exceeds the exhaustive-enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("the closed form is defined for even arguments, got {0}")]
    OddArgument(usize),
}

/// The m-th Catalan number, by the convolution recurrence.
pub fn catalan(m: usize) -> Count {
    catalan_table(m).pop().expect("table is nonempty")
}

fn catalan_table(up_to: usize) -> Vec<Count> {
    let mut c: Vec<Count> = vec![Count::one()];
    for k in 1..=up_to {
        let sum = (0..k).map(|i| &c[i] * &c[k - 1 - i]).sum();
        c.push(sum);
    }
    c
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let mut result = Count::one();
    for i in 0..k.min(n - k) {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Numbers of closed oscillating walks on shapes with at most `max_rows`
/// rows: entry `m` counts walks `∅ → ∅` of length `m` that add or remove
/// exactly one square per step.
fn oscillating_closures(max_rows: usize, max_m: usize) -> Vec<Count> {
    let mut closures = Vec::with_capacity(max_m + 1);
    let mut current: BTreeMap<Shape, Count> = BTreeMap::new();
    current.insert(Shape::empty(), Count::one());
    closures.push(Count::one());
    for step in 0..max_m {
        // A shape larger than the remaining step count can never close.
        let budget = max_m - step - 1;
        let mut next: BTreeMap<Shape, Count> = BTreeMap::new();
        for (shape, count) in &current {
            for (_, smaller) in shape.corners() {
                *next.entry(smaller).or_insert_with(Count::zero) += count;
            }
            if shape.size() < budget {
                for (_, larger) in shape.additions() {
                    if larger.row_count() <= max_rows {
                        *next.entry(larger).or_insert_with(Count::zero) += count;
                    }
                }
            }
        }
        current = next;
        closures.push(current.get(&Shape::empty()).cloned().unwrap_or_else(Count::zero));
    }
    closures
}

/// Number of perfect matchings on `m` points with no `k` mutually crossing
/// arcs, counted as closed oscillating walks on shapes with fewer than `k`
/// rows. Zero for odd `m`.
pub fn count_matchings(k: usize, m: usize) -> Count {
    oscillating_closures(k.saturating_sub(1), m).pop().expect("table is nonempty")
}

/// `C(m/2) · C(m/2+2) − C(m/2+1)²`, the closed form for 3-noncrossing
/// perfect matchings on an even number of points.
pub fn f3_closed_form(m: usize) -> Result<Count, EnumerateError> {
    if !m.is_multiple_of(2) {
        return Err(EnumerateError::OddArgument(m));
    }
    let c = catalan_table(m / 2 + 2);
    Ok(&c[m / 2] * &c[m / 2 + 2] - &c[m / 2 + 1] * &c[m / 2 + 1])
}

/// Number of k-noncrossing tangled diagrams over `[n]` without isolated
/// vertices: sum over the count `ℓ` of degree-one vertices of
/// `binom(n,ℓ) · f_k(2n−ℓ)` matchings on the split ground set.
pub fn count_no_isolated(k: usize, n: usize) -> Count {
    let f = oscillating_closures(k.saturating_sub(1), 2 * n);
    no_isolated_from_closures(&f, n)
}

fn no_isolated_from_closures(f: &[Count], n: usize) -> Count {
    (0..=n).map(|l| binomial(n, l) * &f[2 * n - l]).sum()
}

/// Number of k-noncrossing tangled diagrams over `[n]`, summing the
/// isolated-vertex-free counts over every choice of isolated set.
pub fn count_all(k: usize, n: usize) -> Count {
    let f = oscillating_closures(k.saturating_sub(1), 2 * n);
    (0..=n)
        .map(|i| binomial(n, i) * no_isolated_from_closures(&f, n - i))
        .sum()
}

/// Number of vacillating tableaux of length `2n` with the given move set
/// and row bound, by DP over `(step, shape)` states.
pub fn count_tableaux(n: usize, max_rows: Option<usize>, moves: &[Move]) -> Count {
    let moves = canonical_moves(moves);
    let max_removal = max_removal_per_step(&moves);
    let mut current: BTreeMap<Shape, Count> = BTreeMap::new();
    current.insert(Shape::empty(), Count::one());
    for step in 1..=n {
        let budget = max_removal * (n - step);
        let mut next: BTreeMap<Shape, Count> = BTreeMap::new();
        for (shape, count) in &current {
            for (_, end) in move_candidates(shape, &moves, max_rows) {
                if end.size() <= budget {
                    *next.entry(end).or_insert_with(Count::zero) += count;
                }
            }
        }
        current = next;
    }
    current.remove(&Shape::empty()).unwrap_or_else(Count::zero)
}

/// Number of vacillating tableaux of length `2n` whose shapes all have
/// fewer than `k` rows; equals the number of k-noncrossing tangled diagrams
/// over `[n]`.
pub fn count_by_vt(k: usize, n: usize) -> Count {
    count_tableaux(n, Some(k.saturating_sub(1)), &Move::ALL)
}

fn canonical_moves(moves: &[Move]) -> Vec<Move> {
    Move::ALL
        .into_iter()
        .filter(|m| moves.contains(m))
        .collect()
}

fn max_removal_per_step(moves: &[Move]) -> usize {
    moves
        .iter()
        .map(|m| {
            let (odd, even) = m.halves();
            let delta = |h: HalfStep| match h {
                HalfStep::Nothing => 0isize,
                HalfStep::Add => -1,
                HalfStep::Remove => 1,
            };
            (delta(odd) + delta(even)).max(0) as usize
        })
        .max()
        .unwrap_or(0)
}

/// All `(odd, even)` shape pairs reachable from `from` by one move of
/// `moves`, in canonical order: moves in `Move::ALL` order, square positions
/// top row first.
fn move_candidates(from: &Shape, moves: &[Move], max_rows: Option<usize>) -> Vec<(Shape, Shape)> {
    let fits = |s: &Shape| max_rows.is_none_or(|r| s.row_count() <= r);
    let mut out = Vec::new();
    for m in moves {
        match m {
            Move::NothingNothing => out.push((from.clone(), from.clone())),
            Move::RemoveNothing => {
                for (_, t) in from.corners() {
                    out.push((t.clone(), t));
                }
            }
            Move::NothingAdd => {
                for (_, u) in from.additions() {
                    if fits(&u) {
                        out.push((from.clone(), u));
                    }
                }
            }
            Move::AddAdd => {
                for (_, t) in from.additions() {
                    if !fits(&t) {
                        continue;
                    }
                    for (_, u) in t.additions() {
                        if fits(&u) {
                            out.push((t.clone(), u));
                        }
                    }
                }
            }
            Move::AddRemove => {
                for (_, t) in from.additions() {
                    if !fits(&t) {
                        continue;
                    }
                    for (_, u) in t.corners() {
                        out.push((t.clone(), u));
                    }
                }
            }
            Move::RemoveAdd => {
                for (_, t) in from.corners() {
                    for (_, u) in t.additions() {
                        if fits(&u) {
                            out.push((t.clone(), u));
                        }
                    }
                }
            }
            Move::RemoveRemove => {
                for (_, t) in from.corners() {
                    for (_, u) in t.corners() {
                        out.push((t.clone(), u));
                    }
                }
            }
        }
    }
    out
}

/// Streams every tangled diagram over `[n]` exactly once in canonical order.
pub fn tangled_diagrams(n: usize, bound: usize) -> Result<DiagramIter, EnumerateError> {
    if n > bound {
        return Err(EnumerateError::BoundExceeded { n, bound });
    }
    Ok(DiagramIter::new(n))
}

/// Streams every vacillating tableau of length `2n` whose shapes respect
/// `max_rows` and whose moves lie in `moves`, in canonical order.
pub fn vacillating_tableaux(
    n: usize,
    max_rows: Option<usize>,
    moves: &[Move],
    bound: usize,
) -> Result<VtIter, EnumerateError> {
    if n > bound {
        return Err(EnumerateError::BoundExceeded { n, bound });
    }
    Ok(VtIter::new(n, max_rows, moves))
}

/// Depth-first stream of all tangled diagrams over `[n]`.
#[derive(Debug)]
pub struct DiagramIter {
    n: usize,
    arc_space: Vec<Arc>,
    stack: Vec<usize>,
    degrees: Vec<usize>,
    next_candidate: usize,
    choices: Vec<Vec<usize>>,
    odometer: Option<Vec<Resolution>>,
    finished: bool,
}

impl DiagramIter {
    fn new(n: usize) -> Self {
        let mut arc_space = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                arc_space.push(Arc::new(i, j));
            }
        }
        DiagramIter {
            n,
            arc_space,
            stack: Vec::new(),
            degrees: vec![0; n + 1],
            next_candidate: 0,
            choices: Vec::new(),
            odometer: Some(Vec::new()),
            finished: false,
        }
    }

    fn arcs(&self) -> Vec<Arc> {
        self.stack.iter().map(|&i| self.arc_space[i]).collect()
    }

    fn fits(&self, arc: Arc) -> bool {
        if arc.is_loop() {
            self.degrees[arc.left()] == 0
        } else {
            self.degrees[arc.left()] < 2 && self.degrees[arc.right()] < 2
        }
    }

    fn add_degrees(&mut self, arc: Arc, delta: isize) {
        for v in [arc.left(), arc.right()] {
            self.degrees[v] = self.degrees[v]
                .checked_add_signed(delta)
                .expect("degree stays in range");
        }
    }

    /// Crossing-or-nesting decisions for the current multiset: one slot per
    /// resolvable vertex, with the two endpoints of a double arc merged.
    fn compute_choices(&self) -> Vec<Vec<usize>> {
        let arcs = self.arcs();
        let mut in_double = vec![false; self.n + 1];
        let mut with_loop = vec![false; self.n + 1];
        let mut choices: Vec<Vec<usize>> = Vec::new();
        for w in arcs.windows(2) {
            if w[0] == w[1] && !w[0].is_loop() {
                in_double[w[0].left()] = true;
                in_double[w[0].right()] = true;
                choices.push(vec![w[0].left(), w[0].right()]);
            }
        }
        for arc in &arcs {
            if arc.is_loop() {
                with_loop[arc.left()] = true;
            }
        }
        for v in 1..=self.n {
            if self.degrees[v] == 2 && !with_loop[v] && !in_double[v] {
                choices.push(vec![v]);
            }
        }
        choices.sort_by_key(|group| group[0]);
        choices
    }

    /// Moves to the next arc multiset in depth-first preorder and arms the
    /// resolution odometer for it.
    fn advance_multiset(&mut self) {
        loop {
            let mut idx = self.next_candidate;
            while idx < self.arc_space.len() {
                let arc = self.arc_space[idx];
                if self.fits(arc) {
                    self.stack.push(idx);
                    self.add_degrees(arc, 1);
                    self.next_candidate = idx;
                    self.choices = self.compute_choices();
                    self.odometer = Some(vec![Resolution::Crossing; self.choices.len()]);
                    return;
                }
                idx += 1;
            }
            match self.stack.pop() {
                None => {
                    self.finished = true;
                    return;
                }
                Some(top) => {
                    self.add_degrees(self.arc_space[top], -1);
                    self.next_candidate = top + 1;
                }
            }
        }
    }

    fn build(&self, assignment: &[Resolution]) -> TangledDiagram {
        let mut resolutions = BTreeMap::new();
        for (group, &res) in self.choices.iter().zip(assignment) {
            for &v in group {
                resolutions.insert(v, res);
            }
        }
        TangledDiagram::new(self.n, self.arcs(), resolutions)
            .expect("generated diagrams are valid")
    }
}

impl Iterator for DiagramIter {
    type Item = TangledDiagram;

    fn next(&mut self) -> Option<TangledDiagram> {
        loop {
            if self.finished {
                return None;
            }
            if let Some(assignment) = self.odometer.take() {
                let diagram = self.build(&assignment);
                self.odometer = step_odometer(assignment);
                return Some(diagram);
            }
            self.advance_multiset();
        }
    }
}

/// Advances a crossing-before-nesting odometer; `None` once exhausted.
fn step_odometer(mut assignment: Vec<Resolution>) -> Option<Vec<Resolution>> {
    for slot in assignment.iter_mut().rev() {
        match slot {
            Resolution::Crossing => {
                *slot = Resolution::Nesting;
                return Some(assignment);
            }
            Resolution::Nesting => *slot = Resolution::Crossing,
        }
    }
    None
}

/// Depth-first stream of vacillating tableaux.
#[derive(Debug)]
pub struct VtIter {
    n: usize,
    max_rows: Option<usize>,
    moves: Vec<Move>,
    max_removal: usize,
    levels: Vec<Level>,
    emitted_current: bool,
    started: bool,
    finished: bool,
}

#[derive(Debug)]
struct Level {
    candidates: Vec<(Shape, Shape)>,
    index: usize,
}

impl VtIter {
    fn new(n: usize, max_rows: Option<usize>, moves: &[Move]) -> Self {
        let moves = canonical_moves(moves);
        let max_removal = max_removal_per_step(&moves);
        VtIter {
            n,
            max_rows,
            moves,
            max_removal,
            levels: Vec::new(),
            emitted_current: false,
            started: false,
            finished: false,
        }
    }

    fn current_shape(&self) -> Shape {
        self.levels
            .last()
            .map(|level| level.candidates[level.index].1.clone())
            .unwrap_or_else(Shape::empty)
    }

    fn candidates_at(&self, step: usize) -> Vec<(Shape, Shape)> {
        let budget = self.max_removal * (self.n - step);
        move_candidates(&self.current_shape(), &self.moves, self.max_rows)
            .into_iter()
            .filter(|(_, end)| end.size() <= budget)
            .collect()
    }

    fn backtrack_advance(&mut self) -> bool {
        while let Some(level) = self.levels.last_mut() {
            level.index += 1;
            if level.index < level.candidates.len() {
                return true;
            }
            self.levels.pop();
        }
        false
    }

    fn emit(&self) -> VacillatingTableau {
        let mut shapes = Vec::with_capacity(2 * self.n + 1);
        shapes.push(Shape::empty());
        for level in &self.levels {
            let (odd, even) = &level.candidates[level.index];
            shapes.push(odd.clone());
            shapes.push(even.clone());
        }
        VacillatingTableau::new(shapes).expect("generated sequences are valid")
    }
}

impl Iterator for VtIter {
    type Item = VacillatingTableau;

    fn next(&mut self) -> Option<VacillatingTableau> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if self.emitted_current {
            self.emitted_current = false;
            if !self.backtrack_advance() {
                self.finished = true;
                return None;
            }
        }
        loop {
            if self.levels.len() == self.n {
                self.emitted_current = true;
                return Some(self.emit());
            }
            let candidates = self.candidates_at(self.levels.len() + 1);
            if candidates.is_empty() {
                if !self.backtrack_advance() {
                    self.finished = true;
                    return None;
                }
            } else {
                self.levels.push(Level { candidates, index: 0 });
            }
        }
    }
}

/// A named integer sequence, indexed contiguously.
///
/// Emits as CSV lines `n,count` or as JSON
/// `{"name": …, "terms": [{"n": …, "count": "…"}, …]}` with counts as
/// decimal strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: String,
    pub terms: Vec<(usize, Count)>,
}

impl SequenceTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (n, count) in &self.terms {
            out.push_str(&format!("{n},{count}\n"));
        }
        out
    }
}

impl Serialize for SequenceTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Term<'a>(usize, &'a Count);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("n", &self.0)?;
                map.serialize_entry("count", &self.1.to_string())?;
                map.end()
            }
        }
        struct Terms<'a>(&'a [(usize, Count)]);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (n, count) in self.0 {
                    seq.serialize_element(&Term(*n, count))?;
                }
                seq.end()
            }
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("name", &self.name)?;
        map.serialize_entry("terms", &Terms(&self.terms))?;
        map.end()
    }
}

/// The counts of k-noncrossing tangled diagrams for `n = 1..=max_n`.
pub fn sequence_table(k: usize, max_n: usize) -> SequenceTable {
    let f = oscillating_closures(k.saturating_sub(1), 2 * max_n);
    let no_isolated: Vec<Count> = (0..=max_n)
        .map(|m| (0..=m).map(|l| binomial(m, l) * &f[2 * m - l]).sum())
        .collect();
    let terms = (1..=max_n)
        .map(|n| {
            let total = (0..=n).map(|i| binomial(n, i) * &no_isolated[n - i]).sum();
            (n, total)
        })
        .collect();
    SequenceTable {
        name: format!("{k}-noncrossing tangled-diagrams"),
        terms,
    }
}

/// The ten-term table of 3-noncrossing tangled-diagram counts.
pub fn three_noncrossing_table() -> SequenceTable {
    sequence_table(3, 10)
}
