//! Vacillating tableaux, the seven elementary moves, and the bijection with
//! tangled diagrams.
//!
//! A vacillating tableau is a sequence of shapes `∅ = λ⁰, λ¹, …, λ²ⁿ = ∅`
//! where each step `(λ²ʲ⁻², λ²ʲ⁻¹, λ²ʲ)` realizes one elementary move: do
//! nothing, add a square, or remove a square in each half, excluding the
//! combinations add-then-nothing and nothing-then-remove.
//!
//! [`phi`] reads such a sequence into a partial matching: added squares
//! receive the labels `j`/`j'`, removed squares give up a unique label by
//! reverse RSK insertion, which becomes the left endpoint of a recorded
//! pair. [`psi`] is the inverse, consuming a matching from its largest
//! vertex down. Composing with inflation/deflation yields [`beta`] and
//! [`beta_inv`], mutually inverse maps between vacillating tableaux and
//! tangled diagrams. The square positions matter, so the shape sequence,
//! not the move sequence, is the canonical representation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::tangle::{DiagramClass, MatchingError, PartialMatching, TangledDiagram};
use crate::young::{Label, Shape, StandardTableau, TableauError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("a shape sequence must have odd length 2n+1")]
    BadLength,
    #[error("the first and last shapes must be empty")]
    NotClosed,
    #[error("shapes {0} and {1} do not differ by at most one square")]
    IllegalTransition(usize, usize),
    #[error("step {0} is not one of the seven elementary moves")]
    IllegalMove(usize),
    #[error("not the inflation of a tangled diagram: {0}")]
    Matching(#[from] MatchingError),
    #[error("tableau inconsistency: {0}")]
    Tableau(#[from] TableauError),
    #[error("tableau nonempty after the final step")]
    NonEmptyFinal,
    #[error("unknown move code {0:?}")]
    UnknownMove(String),
}

/// What one half-step does to the current shape.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum HalfStep {
    Nothing,
    Add,
    Remove,
}

/// One of the seven elementary moves, named by its odd and even halves.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Move {
    NothingNothing,
    RemoveNothing,
    NothingAdd,
    AddAdd,
    AddRemove,
    RemoveAdd,
    RemoveRemove,
}

impl Move {
    /// All seven moves in canonical order.
    pub const ALL: [Move; 7] = [
        Move::NothingNothing,
        Move::RemoveNothing,
        Move::NothingAdd,
        Move::AddAdd,
        Move::AddRemove,
        Move::RemoveAdd,
        Move::RemoveRemove,
    ];

    pub fn halves(self) -> (HalfStep, HalfStep) {
        use HalfStep::*;
        match self {
            Move::NothingNothing => (Nothing, Nothing),
            Move::RemoveNothing => (Remove, Nothing),
            Move::NothingAdd => (Nothing, Add),
            Move::AddAdd => (Add, Add),
            Move::AddRemove => (Add, Remove),
            Move::RemoveAdd => (Remove, Add),
            Move::RemoveRemove => (Remove, Remove),
        }
    }

    /// The move with the given halves, if legal. Add-then-nothing and
    /// nothing-then-remove are not moves.
    pub fn from_halves(odd: HalfStep, even: HalfStep) -> Option<Move> {
        Move::ALL.into_iter().find(|m| m.halves() == (odd, even))
    }

    /// Two-letter code: `A` add, `R` remove, `N` nothing.
    pub fn code(self) -> &'static str {
        match self {
            Move::NothingNothing => "NN",
            Move::RemoveNothing => "RN",
            Move::NothingAdd => "NA",
            Move::AddAdd => "AA",
            Move::AddRemove => "AR",
            Move::RemoveAdd => "RA",
            Move::RemoveRemove => "RR",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Move {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Move::ALL
            .into_iter()
            .find(|m| m.code() == s)
            .ok_or_else(|| BijectionError::UnknownMove(s.to_owned()))
    }
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The moves whose tableaux map exactly onto the given diagram class.
pub fn allowed_moves(class: DiagramClass) -> &'static [Move] {
    match class {
        DiagramClass::Matching => &[Move::RemoveNothing, Move::NothingAdd],
        DiagramClass::Partition => &[
            Move::NothingNothing,
            Move::RemoveNothing,
            Move::NothingAdd,
            Move::RemoveAdd,
        ],
        DiagramClass::Braid => &[
            Move::NothingNothing,
            Move::RemoveNothing,
            Move::NothingAdd,
            Move::AddRemove,
        ],
    }
}

fn half_step(from: &Shape, to: &Shape) -> Option<HalfStep> {
    if from == to {
        Some(HalfStep::Nothing)
    } else if to.one_square_above(from).is_some() {
        Some(HalfStep::Add)
    } else if from.one_square_above(to).is_some() {
        Some(HalfStep::Remove)
    } else {
        None
    }
}

#[derive(Serialize, Deserialize)]
struct VtRepr {
    n: usize,
    shapes: Vec<Shape>,
}

/// A vacillating tableau: shapes `λ⁰ … λ²ⁿ` starting and ending empty, each
/// step realizing one elementary move.
///
/// Serializes as `{"n": n, "shapes": [[],[1],…]}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(into = "VtRepr")]
pub struct VacillatingTableau {
    shapes: Vec<Shape>,
}

impl From<VacillatingTableau> for VtRepr {
    fn from(v: VacillatingTableau) -> Self {
        VtRepr {
            n: v.n(),
            shapes: v.shapes,
        }
    }
}

impl<'de> Deserialize<'de> for VacillatingTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = VtRepr::deserialize(deserializer)?;
        if repr.shapes.len() != 2 * repr.n + 1 {
            return Err(serde::de::Error::custom(format!(
                "n = {} requires {} shapes, got {}",
                repr.n,
                2 * repr.n + 1,
                repr.shapes.len()
            )));
        }
        VacillatingTableau::new(repr.shapes).map_err(serde::de::Error::custom)
    }
}

impl VacillatingTableau {
    pub fn new(shapes: Vec<Shape>) -> Result<Self, BijectionError> {
        if shapes.len().is_multiple_of(2) {
            return Err(BijectionError::BadLength);
        }
        if !shapes[0].is_empty() || !shapes[shapes.len() - 1].is_empty() {
            return Err(BijectionError::NotClosed);
        }
        let v = VacillatingTableau { shapes };
        for j in 1..=v.n() {
            let odd = half_step(&v.shapes[2 * j - 2], &v.shapes[2 * j - 1])
                .ok_or(BijectionError::IllegalTransition(2 * j - 2, 2 * j - 1))?;
            let even = half_step(&v.shapes[2 * j - 1], &v.shapes[2 * j])
                .ok_or(BijectionError::IllegalTransition(2 * j - 1, 2 * j))?;
            if Move::from_halves(odd, even).is_none() {
                return Err(BijectionError::IllegalMove(j));
            }
        }
        Ok(v)
    }

    /// Number of diagram vertices this tableau corresponds to.
    pub fn n(&self) -> usize {
        self.shapes.len() / 2
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// The move realized at each step, recovered from the shape sequence.
    pub fn moves(&self) -> Vec<Move> {
        (1..=self.n())
            .map(|j| {
                let odd = half_step(&self.shapes[2 * j - 2], &self.shapes[2 * j - 1]).unwrap();
                let even = half_step(&self.shapes[2 * j - 1], &self.shapes[2 * j]).unwrap();
                Move::from_halves(odd, even).unwrap()
            })
            .collect()
    }

    pub fn uses_only(&self, moves: &[Move]) -> bool {
        self.moves().iter().all(|m| moves.contains(m))
    }

    /// The largest row count among all shapes in the sequence.
    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(Shape::row_count).max().unwrap_or(0)
    }
}

/// Reads a vacillating tableau into the partial matching it encodes.
///
/// Runs the step sequence forward, maintaining a tableau over the primed
/// alphabet: an added square is filled with `j` (odd half, or an even half
/// after doing nothing) or `j'` (even half after touching a square); a
/// removed square releases a unique label by reverse RSK insertion, which
/// becomes the left endpoint of the pair recorded at `j`/`j'`. The ground
/// set collects `j` always and `j'` exactly for the two-square moves.
pub fn phi(v: &VacillatingTableau) -> Result<PartialMatching, BijectionError> {
    let shapes = v.shapes();
    let mut tableau = StandardTableau::empty();
    let mut pairs = Vec::new();
    let mut ground = Vec::new();
    for j in 1..=v.n() {
        let mid = &shapes[2 * j - 1];
        let end = &shapes[2 * j];
        let odd = half_step(&shapes[2 * j - 2], mid).expect("validated transition");
        let even = half_step(mid, end).expect("validated transition");
        match odd {
            HalfStep::Nothing => {}
            HalfStep::Add => tableau = tableau.place(Label::unprimed(j), mid)?,
            HalfStep::Remove => {
                let (rest, left) = tableau.rsk_extract(mid)?;
                tableau = rest;
                pairs.push((left, Label::unprimed(j)));
            }
        }
        match even {
            HalfStep::Nothing => {}
            HalfStep::Add => {
                let entry = if odd == HalfStep::Nothing {
                    Label::unprimed(j)
                } else {
                    Label::primed(j)
                };
                tableau = tableau.place(entry, end)?;
            }
            HalfStep::Remove => {
                let (rest, left) = tableau.rsk_extract(end)?;
                tableau = rest;
                pairs.push((left, Label::primed(j)));
            }
        }
        ground.push(Label::unprimed(j));
        if odd != HalfStep::Nothing && even != HalfStep::Nothing {
            ground.push(Label::primed(j));
        }
    }
    if !tableau.is_empty() {
        return Err(BijectionError::NonEmptyFinal);
    }
    Ok(PartialMatching::new(ground, pairs)?)
}

/// Rebuilds the vacillating tableau of a matching in inflation form.
///
/// Consumes vertices from `n` down to `1`, starting from the empty tableau:
/// a right endpoint RSK-inserts the left endpoint of its pair, a left
/// endpoint gives up its own square. The shapes after every half-step form
/// the sequence, indexed `2j`, `2j−1`, `2j−2`.
pub fn psi(m: &PartialMatching) -> Result<VacillatingTableau, BijectionError> {
    let n = m.inflation_vertex_count()?;
    let mut shapes = vec![Shape::empty(); 2 * n + 1];
    let mut tableau = StandardTableau::empty();
    for j in (1..=n).rev() {
        let plain = Label::unprimed(j);
        let primed = Label::primed(j);
        let (t_odd, t_prev) = if m.contains(primed) {
            let p = m.partner(plain).expect("split vertices are fully paired");
            let q = m.partner(primed).expect("split vertices are fully paired");
            if p == primed {
                // loop: j enters and immediately leaves
                let t1 = tableau.rsk_insert(plain)?;
                let t0 = t1.remove(plain)?;
                (t1, t0)
            } else {
                match (plain < p, primed < q) {
                    // j ends one arc and j' begins one, drawn noncrossing
                    (false, true) => {
                        let t1 = tableau.remove(primed)?;
                        let t0 = t1.rsk_insert(p)?;
                        (t1, t0)
                    }
                    // both ends arrive at j
                    (false, false) => {
                        let t1 = tableau.rsk_insert(q)?;
                        let t0 = t1.rsk_insert(p)?;
                        (t1, t0)
                    }
                    // both arcs leave from j
                    (true, true) => {
                        let t1 = tableau.remove(primed)?;
                        let t0 = t1.remove(plain)?;
                        (t1, t0)
                    }
                    // j begins one arc and j' ends one, drawn crossing
                    (true, false) => {
                        let t1 = tableau.rsk_insert(q)?;
                        let t0 = t1.remove(plain)?;
                        (t1, t0)
                    }
                }
            }
        } else {
            match m.partner(plain) {
                None => (tableau.clone(), tableau.clone()),
                Some(p) if p < plain => {
                    let t0 = tableau.rsk_insert(p)?;
                    (tableau.clone(), t0)
                }
                Some(_) => {
                    let t1 = tableau.remove(plain)?;
                    (t1.clone(), t1)
                }
            }
        };
        shapes[2 * j - 1] = t_odd.shape();
        shapes[2 * j - 2] = t_prev.shape();
        tableau = t_prev;
    }
    if !tableau.is_empty() {
        return Err(BijectionError::NonEmptyFinal);
    }
    VacillatingTableau::new(shapes)
}

/// The bijection from vacillating tableaux to tangled diagrams.
pub fn beta(v: &VacillatingTableau) -> Result<TangledDiagram, BijectionError> {
    Ok(phi(v)?.deflate()?)
}

/// The inverse bijection, from tangled diagrams to vacillating tableaux.
pub fn beta_inv(d: &TangledDiagram) -> Result<VacillatingTableau, BijectionError> {
    psi(&d.inflate())
}
