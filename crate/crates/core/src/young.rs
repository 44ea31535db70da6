//! Shapes, the primed alphabet, and standard Young tableaux with RSK row
//! insertion and its unique reverse extraction.
//!
//! All values are immutable; every operation returns a fresh value, which
//! keeps roundtrip reasoning and sharing across threads trivial.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from shape and tableau operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("shape rows must be positive and weakly decreasing")]
    InvalidShape,
    #[error("tableau rows must strictly increase left to right")]
    RowOrder,
    #[error("tableau columns must strictly increase top to bottom")]
    ColumnOrder,
    #[error("duplicate entry {0}")]
    DuplicateEntry(Label),
    #[error("entry {0} not present")]
    MissingEntry(Label),
    #[error("entry {0} is not at a removable corner")]
    NotACorner(Label),
    #[error("target shape does not differ from the tableau shape by exactly one square")]
    NotOneSquareDiff,
    #[error("placing {0} there violates standardness")]
    InvalidPlacement(Label),
}

/// A vertex label `k` or `k'` in the alphabet `1 < 1' < 2 < 2' < … < n < n'`.
///
/// The derived ordering on `(index, primed)` is exactly that total order:
/// the unprimed copy of an index precedes its primed copy, and both precede
/// the next index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    index: usize,
    primed: bool,
}

impl Label {
    /// The unprimed label `index`.
    pub fn unprimed(index: usize) -> Self {
        Label { index, primed: false }
    }

    /// The primed label `index'`.
    pub fn primed(index: usize) -> Self {
        Label { index, primed: true }
    }

    /// The vertex this label belongs to.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_primed(&self) -> bool {
        self.primed
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error parsing a label string such as `"3"` or `"3'"`.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("invalid label {0:?}: expected a positive integer with an optional trailing apostrophe")]
pub struct ParseLabelError(pub String);

impl FromStr for Label {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseLabelError(s.to_owned()));
        }
        match digits.parse::<usize>() {
            Ok(index) if index >= 1 => Ok(Label { index, primed }),
            _ => Err(ParseLabelError(s.to_owned())),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integer-partition shape: weakly decreasing positive row lengths, top
/// row first. The empty shape is written `∅` and has no rows.
///
/// Serializes as a plain integer array, e.g. `[3,1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    /// The empty shape.
    pub fn empty() -> Self {
        Shape::default()
    }

    pub fn new(rows: Vec<usize>) -> Result<Self, TableauError> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::InvalidShape);
        }
        Ok(Shape { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Total number of squares.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// All `(row, shape)` pairs obtained by removing one square from the end
    /// of row `row` (0-based), in increasing row order. Only rows whose end
    /// square is a removable corner appear.
    pub fn corners(&self) -> Vec<(usize, Shape)> {
        let mut out = Vec::new();
        for r in 0..self.rows.len() {
            if r + 1 < self.rows.len() && self.rows[r + 1] == self.rows[r] {
                continue;
            }
            let mut rows = self.rows.clone();
            rows[r] -= 1;
            if rows[r] == 0 {
                rows.remove(r);
            }
            out.push((r, Shape { rows }));
        }
        out
    }

    /// All `(row, shape)` pairs obtained by adding one square at the end of
    /// row `row` (0-based; `row == row_count()` starts a new row), in
    /// increasing row order.
    pub fn additions(&self) -> Vec<(usize, Shape)> {
        let mut out = Vec::new();
        for r in 0..=self.rows.len() {
            if r > 0 && r < self.rows.len() && self.rows[r - 1] == self.rows[r] {
                continue;
            }
            let mut rows = self.rows.clone();
            if r == rows.len() {
                rows.push(1);
            } else {
                rows[r] += 1;
            }
            out.push((r, Shape { rows }));
        }
        out
    }

    /// If `target` is `self` minus one square at the end of some row,
    /// returns that row index.
    pub fn one_square_above(&self, target: &Shape) -> Option<usize> {
        self.corners()
            .into_iter()
            .find(|(_, s)| s == target)
            .map(|(r, _)| r)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<usize>::deserialize(deserializer)?;
        Shape::new(rows).map_err(serde::de::Error::custom)
    }
}

/// A standard Young tableau over the primed alphabet: distinct labels,
/// strictly increasing along every row and down every column.
///
/// Serializes as rows of label strings, e.g. `[["1","2'"],["3"]]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct StandardTableau {
    rows: Vec<Vec<Label>>,
}

impl StandardTableau {
    /// The empty tableau.
    pub fn empty() -> Self {
        StandardTableau::default()
    }

    pub fn new(rows: Vec<Vec<Label>>) -> Result<Self, TableauError> {
        Shape::new(rows.iter().map(Vec::len).collect())?;
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::RowOrder);
            }
        }
        for r in 1..rows.len() {
            for (c, entry) in rows[r].iter().enumerate() {
                if rows[r - 1][c] >= *entry {
                    return Err(TableauError::ColumnOrder);
                }
            }
        }
        let mut seen: Vec<Label> = rows.iter().flatten().copied().collect();
        seen.sort();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(TableauError::DuplicateEntry(w[0]));
        }
        Ok(StandardTableau { rows })
    }

    pub fn shape(&self) -> Shape {
        Shape {
            rows: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<Label>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, x: Label) -> bool {
        self.position(x).is_some()
    }

    pub fn entries(&self) -> impl Iterator<Item = Label> + '_ {
        self.rows.iter().flatten().copied()
    }

    fn position(&self, x: Label) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Ok(c) = row.binary_search(&x) {
                return Some((r, c));
            }
        }
        None
    }

    /// RSK row insertion. In the first row, `x` replaces the smallest entry
    /// greater than it and bumps that entry into the next row, repeating
    /// until a bumped entry lands at the end of a row. The shape grows by
    /// exactly one square.
    pub fn rsk_insert(&self, x: Label) -> Result<StandardTableau, TableauError> {
        if self.contains(x) {
            return Err(TableauError::DuplicateEntry(x));
        }
        let mut rows = self.rows.clone();
        let mut cur = x;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![cur]);
                break;
            }
            let pos = rows[r].partition_point(|&e| e < cur);
            if pos == rows[r].len() {
                rows[r].push(cur);
                break;
            }
            std::mem::swap(&mut cur, &mut rows[r][pos]);
            r += 1;
        }
        Ok(StandardTableau { rows })
    }

    /// Reverse row insertion: `target` must be the tableau's shape minus one
    /// square. The entry in that square is bumped upward, swapping at each
    /// row with the largest entry below it, and the value leaving the first
    /// row is returned. `rsk_insert`ing it into the returned tableau
    /// reproduces `self`.
    pub fn rsk_extract(&self, target: &Shape) -> Result<(StandardTableau, Label), TableauError> {
        let row = self
            .shape()
            .one_square_above(target)
            .ok_or(TableauError::NotOneSquareDiff)?;
        let mut rows = self.rows.clone();
        let mut cur = rows[row].pop().expect("corner row is nonempty");
        if rows[row].is_empty() {
            rows.remove(row);
        }
        for r in (0..row).rev() {
            // Largest entry strictly below cur; the entry directly above the
            // vacated square guarantees one exists.
            let pos = rows[r].partition_point(|&e| e < cur) - 1;
            std::mem::swap(&mut cur, &mut rows[r][pos]);
        }
        Ok((StandardTableau { rows }, cur))
    }

    /// Puts `x` into the single square of `at ∖ shape(self)` without any
    /// bumping. Fails if the result would not be standard.
    pub fn place(&self, x: Label, at: &Shape) -> Result<StandardTableau, TableauError> {
        if self.contains(x) {
            return Err(TableauError::DuplicateEntry(x));
        }
        let row = at
            .one_square_above(&self.shape())
            .ok_or(TableauError::NotOneSquareDiff)?;
        let mut rows = self.rows.clone();
        if row == rows.len() {
            rows.push(Vec::new());
        }
        let col = rows[row].len();
        let left_ok = col == 0 || rows[row][col - 1] < x;
        let above_ok = row == 0 || rows[row - 1][col] < x;
        if !left_ok || !above_ok {
            return Err(TableauError::InvalidPlacement(x));
        }
        rows[row].push(x);
        Ok(StandardTableau { rows })
    }

    /// Removes the square containing `x`, which must be a removable corner.
    pub fn remove(&self, x: Label) -> Result<StandardTableau, TableauError> {
        let (r, c) = self.position(x).ok_or(TableauError::MissingEntry(x))?;
        let removable = c + 1 == self.rows[r].len()
            && (r + 1 == self.rows.len() || self.rows[r + 1].len() <= c);
        if !removable {
            return Err(TableauError::NotACorner(x));
        }
        let mut rows = self.rows.clone();
        rows[r].pop();
        if rows[r].is_empty() {
            rows.remove(r);
        }
        Ok(StandardTableau { rows })
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Label::to_string).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(deserializer)?;
        let mut rows = Vec::with_capacity(raw.len());
        for row in raw {
            let row: Result<Vec<Label>, _> = row.iter().map(|s| s.parse()).collect();
            rows.push(row.map_err(serde::de::Error::custom)?);
        }
        StandardTableau::new(rows).map_err(serde::de::Error::custom)
    }
}
