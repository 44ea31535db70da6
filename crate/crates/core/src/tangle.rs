//! Tangled diagrams over `[n]`, their inflation to partial matchings on the
//! primed alphabet, deflation back, and crossing/nesting analysis.
//!
//! A diagram may have loops and doubled arcs; every vertex has degree at most
//! two. Each degree-two vertex that is not a loop vertex carries a
//! [`Resolution`] saying whether its two incident arc ends cross or nest at
//! that vertex. Splitting every degree-two vertex `v` into `v < v'` turns the
//! diagram into a partial matching ([`TangledDiagram::inflate`]); identifying
//! the pairs again recovers the diagram ([`PartialMatching::deflate`]).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::young::Label;

type Pair = (Label, Label);

/// Violations of the diagram invariants, reported by the constructor.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("arc ({0}, {1}) lies outside 1..={2}")]
    ArcOutOfRange(usize, usize, usize),
    #[error("vertex {0} has degree greater than two")]
    DegreeExceeded(usize),
    #[error("vertex {0} has two non-loop arc ends but no resolution")]
    MissingResolution(usize),
    #[error("vertex {0} carries a resolution but is not a resolvable degree-two vertex")]
    ExtraResolution(usize),
    #[error("double arc ({0}, {1}) has differing resolutions at its endpoints")]
    DoubleArcMismatch(usize, usize),
}

/// Violations of the partial-matching invariants and of the ground-set form
/// required for deflation.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("label {0} appears twice in the ground set")]
    DuplicateGroundLabel(Label),
    #[error("pair ({0}, {0}) is degenerate")]
    DegeneratePair(Label),
    #[error("paired label {0} is not in the ground set")]
    PairOutsideGround(Label),
    #[error("label {0} occurs in more than one pair")]
    LabelReused(Label),
    #[error("arc pairs share the label {0}")]
    SharedLabel(Label),
    #[error("ground set contains {0}' but not {0}")]
    MissingUnprimed(usize),
    #[error("ground set skips vertex {0}")]
    GroundGap(usize),
    #[error("vertex {0} is split into {0} and {0}' but not fully paired")]
    UnpairedSplit(usize),
    #[error("deflation produced an invalid diagram: {0}")]
    Diagram(#[from] DiagramError),
}

/// An arc `(left, right)` with `left <= right`; `left == right` is a loop.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    left: usize,
    right: usize,
}

impl Arc {
    /// Builds the arc between `a` and `b`, normalizing endpoint order.
    pub fn new(a: usize, b: usize) -> Self {
        Arc {
            left: a.min(b),
            right: a.max(b),
        }
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn is_loop(&self) -> bool {
        self.left == self.right
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.left, self.right).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (a, b) = <(usize, usize)>::deserialize(deserializer)?;
        Ok(Arc::new(a, b))
    }
}

/// How the two arc ends at a degree-two vertex are drawn.
///
/// At a transit vertex (one arc ends, one begins), `Nesting` is the
/// noncrossing drawing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Resolution {
    Crossing,
    Nesting,
}

/// Membership flags for the three restricted diagram classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    /// Every vertex has degree exactly one.
    pub perfect_matching: bool,
    /// No loops, and every degree-two vertex is a transit vertex drawn
    /// noncrossing.
    pub partition: bool,
    /// Every degree-two vertex is a loop vertex or a transit vertex drawn
    /// crossing.
    pub braid: bool,
}

/// One of the three restricted diagram classes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DiagramClass {
    Matching,
    Partition,
    Braid,
}

impl Classification {
    pub fn is_in(&self, class: DiagramClass) -> bool {
        match class {
            DiagramClass::Matching => self.perfect_matching,
            DiagramClass::Partition => self.partition,
            DiagramClass::Braid => self.braid,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    arcs: Vec<Arc>,
    n: usize,
    resolutions: BTreeMap<usize, Resolution>,
}

/// A tangled diagram: `n` vertices, a multiset of arcs with per-vertex
/// degree at most two, and a resolution at every degree-two vertex that is
/// not covered by a loop.
///
/// Serializes canonically as
/// `{"arcs": [[l,r],…], "n": n, "resolutions": {"v": "crossing"|"nesting"}}`
/// with arcs sorted and resolution keys in vertex order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(into = "DiagramRepr")]
pub struct TangledDiagram {
    n: usize,
    arcs: Vec<Arc>,
    resolutions: BTreeMap<usize, Resolution>,
}

impl From<TangledDiagram> for DiagramRepr {
    fn from(d: TangledDiagram) -> Self {
        DiagramRepr {
            arcs: d.arcs,
            n: d.n,
            resolutions: d.resolutions,
        }
    }
}

impl<'de> Deserialize<'de> for TangledDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = DiagramRepr::deserialize(deserializer)?;
        TangledDiagram::new(repr.n, repr.arcs, repr.resolutions).map_err(serde::de::Error::custom)
    }
}

impl TangledDiagram {
    /// Validates all invariants and returns the diagram with arcs sorted,
    /// or the first violation found.
    pub fn new(
        n: usize,
        mut arcs: Vec<Arc>,
        resolutions: BTreeMap<usize, Resolution>,
    ) -> Result<Self, DiagramError> {
        arcs.sort();
        let mut degree = vec![0usize; n + 1];
        for arc in &arcs {
            if arc.left < 1 || arc.right > n {
                return Err(DiagramError::ArcOutOfRange(arc.left, arc.right, n));
            }
            degree[arc.left] += 1;
            degree[arc.right] += 1;
        }
        if let Some(v) = (1..=n).find(|&v| degree[v] > 2) {
            return Err(DiagramError::DegreeExceeded(v));
        }
        let has_loop: Vec<bool> = (0..=n)
            .map(|v| arcs.binary_search(&Arc::new(v, v)).is_ok())
            .collect();
        for v in 1..=n {
            let resolvable = degree[v] == 2 && !has_loop[v];
            match (resolvable, resolutions.contains_key(&v)) {
                (true, false) => return Err(DiagramError::MissingResolution(v)),
                (false, true) => return Err(DiagramError::ExtraResolution(v)),
                _ => {}
            }
        }
        for w in arcs.windows(2) {
            if w[0] == w[1] && !w[0].is_loop() && resolutions[&w[0].left] != resolutions[&w[0].right]
            {
                return Err(DiagramError::DoubleArcMismatch(w[0].left, w[0].right));
            }
        }
        Ok(TangledDiagram { n, arcs, resolutions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The sorted arc multiset.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn resolutions(&self) -> &BTreeMap<usize, Resolution> {
        &self.resolutions
    }

    pub fn degree(&self, v: usize) -> usize {
        self.arcs
            .iter()
            .map(|a| usize::from(a.left == v) + usize::from(a.right == v))
            .sum()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        let mut covered = vec![false; self.n + 1];
        for a in &self.arcs {
            covered[a.left] = true;
            covered[a.right] = true;
        }
        (1..=self.n).any(|v| !covered[v])
    }

    /// Splits every degree-two vertex `v` into `v < v'` and rewires the arc
    /// ends according to the vertex's resolution, producing a partial
    /// matching in which exactly the isolated vertices are unpaired.
    pub fn inflate(&self) -> PartialMatching {
        let num = self.arcs.len();
        let mut left_label: Vec<Option<Label>> = vec![None; num];
        let mut right_label: Vec<Option<Label>> = vec![None; num];

        // Arc ends incident to each vertex; a loop owns both ends of its arc.
        let mut lefts: Vec<Vec<usize>> = vec![Vec::new(); self.n + 1];
        let mut rights: Vec<Vec<usize>> = vec![Vec::new(); self.n + 1];
        for (i, arc) in self.arcs.iter().enumerate() {
            lefts[arc.left].push(i);
            rights[arc.right].push(i);
        }

        // First pass: left ends and loops. Two left ends at v belong to arcs
        // (v,j1) <= (v,j2) in sorted order; the crossing drawing keeps v on
        // the arc with the nearer right end, the nesting drawing on the
        // farther one. At a transit vertex the outgoing arc keeps v exactly
        // when the drawing crosses.
        for v in 1..=self.n {
            match (lefts[v].as_slice(), rights[v].as_slice()) {
                (&[i], &[j]) if i == j => {
                    left_label[i] = Some(Label::unprimed(v));
                    right_label[i] = Some(Label::primed(v));
                }
                (&[a, b], _) => {
                    let (keep, split) = match self.resolutions[&v] {
                        Resolution::Crossing => (a, b),
                        Resolution::Nesting => (b, a),
                    };
                    left_label[keep] = Some(Label::unprimed(v));
                    left_label[split] = Some(Label::primed(v));
                }
                (&[out], &[_]) => {
                    left_label[out] = Some(match self.resolutions[&v] {
                        Resolution::Crossing => Label::unprimed(v),
                        Resolution::Nesting => Label::primed(v),
                    });
                }
                (&[i], &[]) => left_label[i] = Some(Label::unprimed(v)),
                _ => {}
            }
        }

        // Second pass: right ends. Two right ends at v compare by their
        // already-assigned left labels; the crossing drawing gives v to the
        // arc with the smaller left end, the nesting drawing to the larger.
        for v in 1..=self.n {
            match (lefts[v].as_slice(), rights[v].as_slice()) {
                (&[i], &[j]) if i == j => {}
                (_, &[a, b]) => {
                    let (la, lb) = (left_label[a].unwrap(), left_label[b].unwrap());
                    let (near, far) = if la < lb { (a, b) } else { (b, a) };
                    let (keep, split) = match self.resolutions[&v] {
                        Resolution::Crossing => (near, far),
                        Resolution::Nesting => (far, near),
                    };
                    right_label[keep] = Some(Label::unprimed(v));
                    right_label[split] = Some(Label::primed(v));
                }
                (&[_], &[inc]) => {
                    right_label[inc] = Some(match self.resolutions[&v] {
                        Resolution::Crossing => Label::primed(v),
                        Resolution::Nesting => Label::unprimed(v),
                    });
                }
                (&[], &[i]) => right_label[i] = Some(Label::unprimed(v)),
                _ => {}
            }
        }

        let mut ground = Vec::with_capacity(self.n + self.arcs.len());
        for v in 1..=self.n {
            ground.push(Label::unprimed(v));
            if self.degree(v) == 2 {
                ground.push(Label::primed(v));
            }
        }
        let pairs = (0..num)
            .map(|i| (left_label[i].unwrap(), right_label[i].unwrap()))
            .collect();
        PartialMatching::new(ground, pairs).expect("inflation yields a valid matching")
    }

    /// The largest number of mutually crossing arcs, read off the inflation.
    pub fn crossing_number(&self) -> usize {
        self.inflate().max_crossing()
    }

    /// The largest number of mutually nesting arcs, read off the inflation.
    pub fn nesting_number(&self) -> usize {
        self.inflate().max_nesting()
    }

    pub fn classify(&self) -> Classification {
        let mut perfect_matching = true;
        let mut partition = true;
        let mut braid = true;
        for v in 1..=self.n {
            let ins: Vec<&Arc> = self.arcs.iter().filter(|a| a.right == v && !a.is_loop()).collect();
            let outs: Vec<&Arc> = self.arcs.iter().filter(|a| a.left == v && !a.is_loop()).collect();
            let looped = self.arcs.iter().any(|a| a.is_loop() && a.left == v);
            let degree = ins.len() + outs.len() + 2 * usize::from(looped);
            if degree != 1 {
                perfect_matching = false;
            }
            if looped {
                partition = false;
            }
            if degree == 2 && !looped {
                let transit = ins.len() == 1 && outs.len() == 1;
                match self.resolutions[&v] {
                    Resolution::Nesting => braid = false,
                    Resolution::Crossing => partition = false,
                }
                if !transit {
                    partition = false;
                    braid = false;
                }
            }
        }
        Classification {
            perfect_matching,
            partition,
            braid,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatchingRepr {
    ground: Vec<Label>,
    pairs: Vec<(Label, Label)>,
}

/// A partial matching on labels from the primed alphabet.
///
/// Serializes as `{"ground": ["1","1'",…], "pairs": [["1","2'"],…]}` with
/// the ground set and the pair list sorted.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(into = "MatchingRepr")]
pub struct PartialMatching {
    ground: Vec<Label>,
    pairs: Vec<(Label, Label)>,
}

impl From<PartialMatching> for MatchingRepr {
    fn from(m: PartialMatching) -> Self {
        MatchingRepr {
            ground: m.ground,
            pairs: m.pairs,
        }
    }
}

impl<'de> Deserialize<'de> for PartialMatching {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatchingRepr::deserialize(deserializer)?;
        PartialMatching::new(repr.ground, repr.pairs).map_err(serde::de::Error::custom)
    }
}

impl PartialMatching {
    pub fn new(
        mut ground: Vec<Label>,
        pairs: Vec<(Label, Label)>,
    ) -> Result<Self, MatchingError> {
        ground.sort();
        if let Some(w) = ground.windows(2).find(|w| w[0] == w[1]) {
            return Err(MatchingError::DuplicateGroundLabel(w[0]));
        }
        let mut pairs: Vec<(Label, Label)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort();
        let mut used = Vec::new();
        for &(a, b) in &pairs {
            if a == b {
                return Err(MatchingError::DegeneratePair(a));
            }
            for x in [a, b] {
                if ground.binary_search(&x).is_err() {
                    return Err(MatchingError::PairOutsideGround(x));
                }
                used.push(x);
            }
        }
        used.sort();
        if let Some(w) = used.windows(2).find(|w| w[0] == w[1]) {
            return Err(MatchingError::LabelReused(w[0]));
        }
        Ok(PartialMatching { ground, pairs })
    }

    pub fn ground(&self) -> &[Label] {
        &self.ground
    }

    pub fn pairs(&self) -> &[(Label, Label)] {
        &self.pairs
    }

    pub fn contains(&self, x: Label) -> bool {
        self.ground.binary_search(&x).is_ok()
    }

    pub fn partner(&self, x: Label) -> Option<Label> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == x {
                Some(b)
            } else if b == x {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Checks that the ground set has the form produced by inflation
    /// (`{v, v'}` for split vertices, `{v}` for the rest, covering `1..=n`
    /// with every label of a split vertex paired) and returns `n`.
    pub fn inflation_vertex_count(&self) -> Result<usize, MatchingError> {
        let n = self.ground.last().map_or(0, |l| l.index());
        let mut present = vec![false; n + 1];
        let mut split = vec![false; n + 1];
        for l in &self.ground {
            if l.is_primed() {
                split[l.index()] = true;
            } else {
                present[l.index()] = true;
            }
        }
        for v in 1..=n {
            if split[v] && !present[v] {
                return Err(MatchingError::MissingUnprimed(v));
            }
            if !present[v] {
                return Err(MatchingError::GroundGap(v));
            }
            if split[v]
                && (self.partner(Label::unprimed(v)).is_none()
                    || self.partner(Label::primed(v)).is_none())
            {
                return Err(MatchingError::UnpairedSplit(v));
            }
        }
        Ok(n)
    }

    /// Largest set of pairwise crossing pairs.
    pub fn max_crossing(&self) -> usize {
        largest_mutual(&self.pairs, cross_unchecked)
    }

    /// Largest set of pairwise nesting pairs.
    pub fn max_nesting(&self) -> usize {
        largest_mutual(&self.pairs, nest_unchecked)
    }

    /// Identifies `v` with `v'` wherever both occur, recovering the unique
    /// diagram whose inflation is this matching.
    ///
    /// The ground set must consist of `{v, v'}` for split vertices and `{v}`
    /// for the rest, covering `1..=n` with no gaps, and every label of a
    /// split vertex must be paired.
    pub fn deflate(&self) -> Result<TangledDiagram, MatchingError> {
        let n = self.inflation_vertex_count()?;
        let arcs = self
            .pairs
            .iter()
            .map(|&(a, b)| Arc::new(a.index(), b.index()))
            .collect();
        let mut resolutions = BTreeMap::new();
        for v in 1..=n {
            if !self.contains(Label::primed(v)) {
                continue;
            }
            let plain = Label::unprimed(v);
            let primed = Label::primed(v);
            let p = self.partner(plain).ok_or(MatchingError::UnpairedSplit(v))?;
            let q = self.partner(primed).ok_or(MatchingError::UnpairedSplit(v))?;
            if p == primed {
                continue; // loop at v
            }
            let resolution = match (plain < p, primed < q) {
                // Which arc kept the unprimed copy encodes the drawing; see
                // `inflate` for the forward direction of each case.
                (true, true) | (false, false) => {
                    if p < q {
                        Resolution::Crossing
                    } else {
                        Resolution::Nesting
                    }
                }
                (false, true) => Resolution::Nesting,
                (true, false) => Resolution::Crossing,
            };
            resolutions.insert(v, resolution);
        }
        Ok(TangledDiagram::new(n, arcs, resolutions)?)
    }
}

/// Do the two disjoint pairs interleave (`a1 < b1 < a2 < b2` after sorting)?
pub fn arcs_cross(a: (Label, Label), b: (Label, Label)) -> Result<bool, MatchingError> {
    let (a, b) = disjoint_sorted(a, b)?;
    Ok(cross_unchecked(&a, &b))
}

/// Does one pair sit strictly inside the other (`a1 < b1 < b2 < a2`)?
pub fn arcs_nest(a: (Label, Label), b: (Label, Label)) -> Result<bool, MatchingError> {
    let (a, b) = disjoint_sorted(a, b)?;
    Ok(nest_unchecked(&a, &b))
}

fn disjoint_sorted(a: Pair, b: Pair) -> Result<(Pair, Pair), MatchingError> {
    let a = (a.0.min(a.1), a.0.max(a.1));
    let b = (b.0.min(b.1), b.0.max(b.1));
    for x in [a.0, a.1] {
        if x == b.0 || x == b.1 {
            return Err(MatchingError::SharedLabel(x));
        }
    }
    if a.0 == a.1 {
        return Err(MatchingError::DegeneratePair(a.0));
    }
    if b.0 == b.1 {
        return Err(MatchingError::DegeneratePair(b.0));
    }
    Ok((a, b))
}

fn cross_unchecked(a: &Pair, b: &Pair) -> bool {
    let (first, second) = if a.0 < b.0 { (a, b) } else { (b, a) };
    second.0 < first.1 && first.1 < second.1
}

fn nest_unchecked(a: &Pair, b: &Pair) -> bool {
    let (outer, inner) = if a.0 < b.0 { (a, b) } else { (b, a) };
    inner.1 < outer.1
}

/// Size of the largest subset of `pairs` in which `related` holds pairwise:
/// maximum clique by branch and bound over the compatibility graph.
fn largest_mutual<F>(pairs: &[Pair], related: F) -> usize
where
    F: Fn(&Pair, &Pair) -> bool,
{
    let n = pairs.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && related(&pairs[i], &pairs[j])).collect())
        .collect();

    fn extend(adj: &[Vec<bool>], cand: &[usize], size: usize, best: &mut usize) {
        *best = (*best).max(size);
        for (pos, &v) in cand.iter().enumerate() {
            if size + (cand.len() - pos) <= *best {
                return;
            }
            let next: Vec<usize> = cand[pos + 1..]
                .iter()
                .copied()
                .filter(|&u| adj[v][u])
                .collect();
            extend(adj, &next, size + 1, best);
        }
    }

    let mut best = 0;
    let all: Vec<usize> = (0..n).collect();
    extend(&adj, &all, 0, &mut best);
    best
}
