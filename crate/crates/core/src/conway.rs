//! Alexander–Conway polynomial of an ordered braid diagram, computed as a
//! signed sum over descending states, and the minimality certificate for
//! homogeneous words built on top of it.
//!
//! Endpoints are numbered by an [`Ordering`]. A state is a set of crossings
//! to smooth. It counts when every string of the smoothed diagram joins the
//! input of rank `2k-1` to the output of rank `2k` (coherent), and when,
//! walking the strings in rank order, each smoothed crossing is first met
//! on its former overpass (descending).

use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::geodesy::{BallTable, GeodesyError};
use crate::garside::CanonicalForm;
use crate::word::{BraidWord, SignPattern};

/// Largest diagram for which [`conway`] enumerates all states.
pub const DEFAULT_BUDGET: usize = 20;

/// Geodesic representatives examined by [`homogeneous_geodesic_converse`].
pub const REPRESENTATIVE_LIMIT: usize = 100_000;

#[derive(Debug, Error)]
pub enum ConwayError {
    #[error("ordering has {got} labels per side, expected {expected}")]
    OrderingSize { got: usize, expected: usize },
    #[error("ordering labels must be distinct")]
    DuplicateLabel,
    #[error("ordering does not give inputs odd ranks and outputs even ranks")]
    Parity,
    #[error("{crossings} crossings exceed the state budget of {budget}")]
    BudgetExceeded { crossings: usize, budget: usize },
    #[error("word is not homogeneous (column {0} has both signs)")]
    NotHomogeneous(usize),
    #[error("braid has no homogeneous geodesic representative")]
    NoHomogeneousRepresentative,
    #[error(transparent)]
    Geodesy(#[from] GeodesyError),
}

/// Numbering of the `2n` endpoints of a braid diagram: `top[p-1]` labels
/// the input at top position `p`, `bottom[p-1]` the output at bottom
/// position `p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ordering {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Ordering {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, ConwayError> {
        if top.len() != bottom.len() {
            return Err(ConwayError::OrderingSize { got: bottom.len(), expected: top.len() });
        }
        let mut all: Vec<(u32, bool)> =
            top.iter().map(|&l| (l, true)).chain(bottom.iter().map(|&l| (l, false))).collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(ConwayError::DuplicateLabel);
        }
        if all.iter().enumerate().any(|(rank, &(_, input))| input != (rank % 2 == 0)) {
            return Err(ConwayError::Parity);
        }
        Ok(Ordering { top, bottom })
    }

    /// The natural numbering, counted from the right-hand edge: top
    /// position `p` gets `2(n-p)+1`, bottom position `p` gets `2(n-p)+2`.
    pub fn standard(strands: usize) -> Self {
        Self::from_traversal(&(1..=strands).rev().collect::<Vec<_>>())
    }

    /// Numbers vertical lines in the given order of positions: the `k`-th
    /// line gets `2k-1` on top and `2k` at the bottom.
    pub fn from_traversal(order: &[usize]) -> Self {
        let n = order.len();
        let mut top = vec![0; n];
        let mut bottom = vec![0; n];
        for (k, &p) in order.iter().enumerate() {
            top[p - 1] = 2 * k as u32 + 1;
            bottom[p - 1] = 2 * k as u32 + 2;
        }
        Ordering { top, bottom }
    }

    pub fn strands(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// 1-based ranks of the top and bottom labels among all `2n`.
    fn ranks(&self) -> (Vec<usize>, Vec<usize>) {
        let mut labels: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        labels.sort_unstable();
        let rank = |l: &u32| labels.binary_search(l).expect("present") + 1;
        (self.top.iter().map(rank).collect(), self.bottom.iter().map(rank).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "top": self.top, "bottom": self.bottom })
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |labels: &[u32]| labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "top: {} / bottom: {}", side(&self.top), side(&self.bottom))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConwayPolynomial {
    coefficients: Vec<i64>,
}

impl ConwayPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        ConwayPolynomial { coefficients }
    }

    /// `a_0, a_1, …` with trailing zeros removed.
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coefficient(&self, m: usize) -> i64 {
        self.coefficients.get(m).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self.coefficients)
    }
}

impl fmt::Display for ConwayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if first {
                if a < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if a < 0 { " - " } else { " + " })?;
            }
            first = false;
            let abs = a.unsigned_abs();
            match m {
                0 => write!(f, "{abs}")?,
                _ => {
                    if abs != 1 {
                        write!(f, "{abs}*")?;
                    }
                    if m == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{m}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Precomputed data for evaluating states of one ordered diagram.
struct StateEvaluator<'a> {
    word: &'a BraidWord,
    top_rank: Vec<usize>,
    bottom_rank: Vec<usize>,
    /// Top positions sorted by rank.
    input_order: Vec<usize>,
}

impl<'a> StateEvaluator<'a> {
    fn new(word: &'a BraidWord, ordering: &Ordering) -> Result<Self, ConwayError> {
        if ordering.strands() != word.strands() {
            return Err(ConwayError::OrderingSize { got: ordering.strands(), expected: word.strands() });
        }
        let (top_rank, bottom_rank) = ordering.ranks();
        let mut input_order: Vec<usize> = (0..word.strands()).collect();
        input_order.sort_by_key(|&p| top_rank[p]);
        Ok(StateEvaluator { word, top_rank, bottom_rank, input_order })
    }

    /// Sign of the state if it is coherent and descending.
    fn evaluate(&self, smoothed: impl Fn(usize) -> bool) -> Option<i8> {
        let letters = self.word.letters();
        let n = self.word.strands();
        // coherence: unsmoothed crossings permute the strings
        let mut at: Vec<usize> = (0..n).collect();
        for (t, l) in letters.iter().enumerate() {
            if !smoothed(t) {
                at.swap(l.index() - 1, l.index());
            }
        }
        for (end, &start) in at.iter().enumerate() {
            if self.bottom_rank[end] != self.top_rank[start] + 1 {
                return None;
            }
        }
        let mut visited = vec![false; letters.len()];
        let mut sign = 1i8;
        for &start in &self.input_order {
            let mut pos = start;
            for (t, l) in letters.iter().enumerate() {
                let left = l.index() - 1;
                if pos != left && pos != left + 1 {
                    continue;
                }
                if smoothed(t) {
                    if !visited[t] {
                        visited[t] = true;
                        let over = if l.is_positive() { left + 1 } else { left };
                        if pos != over {
                            return None;
                        }
                        sign *= l.sign();
                    }
                } else {
                    pos = if pos == left { left + 1 } else { left };
                }
            }
        }
        Some(sign)
    }
}

pub fn conway(word: &BraidWord, ordering: &Ordering) -> Result<ConwayPolynomial, ConwayError> {
    conway_with_budget(word, ordering, DEFAULT_BUDGET)
}

/// Sums `sign(S)` over all descending states `S`, grouped by `|S|`.
pub fn conway_with_budget(
    word: &BraidWord,
    ordering: &Ordering,
    budget: usize,
) -> Result<ConwayPolynomial, ConwayError> {
    let c = word.len();
    if c > budget || c >= 63 {
        return Err(ConwayError::BudgetExceeded { crossings: c, budget });
    }
    let eval = StateEvaluator::new(word, ordering)?;
    let mut coefficients = vec![0i64; c + 1];
    for mask in 0u64..(1u64 << c) {
        if let Some(sign) = eval.evaluate(|t| mask >> t & 1 == 1) {
            coefficients[mask.count_ones() as usize] += sign as i64;
        }
    }
    Ok(ConwayPolynomial::new(coefficients))
}

/// `a_{|D|}`: the contribution of the state smoothing every crossing.
/// Needs no enumeration, so it works for any diagram size.
pub fn top_coefficient(word: &BraidWord, ordering: &Ordering) -> Result<i64, ConwayError> {
    let eval = StateEvaluator::new(word, ordering)?;
    Ok(eval.evaluate(|_| true).map_or(0, i64::from))
}

/// Precedence constraints between neighbouring lines of a homogeneous word:
/// `Some(true)` when line `i+1` must be traversed before line `i`.
fn line_constraints(word: &BraidWord) -> Result<Vec<Option<bool>>, ConwayError> {
    let mut rule: Vec<Option<bool>> = vec![None; word.strands().saturating_sub(1)];
    for l in word.letters() {
        let slot = &mut rule[l.index() - 1];
        match slot {
            Some(p) if *p != l.is_positive() => return Err(ConwayError::NotHomogeneous(l.index())),
            _ => *slot = Some(l.is_positive()),
        }
    }
    Ok(rule)
}

fn must_precede(rule: &[Option<bool>], a: usize, b: usize) -> bool {
    // a, b are 1-based adjacent lines
    if a + 1 == b {
        rule[a - 1] == Some(false)
    } else if b + 1 == a {
        rule[b - 1] == Some(true)
    } else {
        false
    }
}

/// An ordering whose all-smoothed state is coherent and descending: the
/// lines of the diagram in a topological order of the constraints that
/// each used column imposes on its two lines. Ties go to the rightmost
/// line, so positive words get the standard ordering.
pub fn find_homogeneous_ordering(word: &BraidWord) -> Option<Ordering> {
    let rule = line_constraints(word).ok()?;
    let n = word.strands();
    let mut done = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (1..=n).rev().find(|&p| {
            !done[p] && (1..=n).all(|q| done[q] || q == p || !must_precede(&rule, q, p))
        })?;
        done[next] = true;
        order.push(next);
    }
    Some(Ordering::from_traversal(&order))
}

/// Every homogeneous line ordering, up to `limit`.
pub fn homogeneous_orderings(word: &BraidWord, limit: usize) -> Vec<Ordering> {
    let Ok(rule) = line_constraints(word) else {
        return Vec::new();
    };
    let n = word.strands();
    let mut out = Vec::new();
    let mut done = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    extend_orders(&rule, n, &mut done, &mut order, &mut out, limit);
    out
}

fn extend_orders(
    rule: &[Option<bool>],
    n: usize,
    done: &mut [bool],
    order: &mut Vec<usize>,
    out: &mut Vec<Ordering>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if order.len() == n {
        out.push(Ordering::from_traversal(order));
        return;
    }
    for p in (1..=n).rev() {
        if done[p] || (1..=n).any(|q| !done[q] && q != p && must_precede(rule, q, p)) {
            continue;
        }
        done[p] = true;
        order.push(p);
        extend_orders(rule, n, done, order, out, limit);
        order.pop();
        done[p] = false;
    }
}

/// Evidence that a homogeneous word is geodesic: the witness ordering
/// makes the top coefficient `±1`, so `deg ∇ = |w|` and no shorter word
/// can represent the braid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalityCertificate {
    pub word: BraidWord,
    pub pattern: SignPattern,
    pub ordering: Ordering,
    pub top_coefficient: i64,
    pub degree_matches_length: bool,
}

impl MinimalityCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "geodesic": self.degree_matches_length,
            "word": self.word.render(),
            "pattern": self.pattern.to_string(),
            "ordering": self.ordering.to_json(),
            "top_coefficient": self.top_coefficient,
            "degree_equals_length": self.degree_matches_length,
        })
    }
}

/// Certificate for homogeneous words; refusal (with the offending column)
/// otherwise. A refusal says nothing about whether the word is geodesic.
pub fn certify_minimal_homogeneous(word: &BraidWord) -> Result<MinimalityCertificate, ConwayError> {
    let pattern = match word.sign_pattern() {
        Some(p) => p,
        None => {
            line_constraints(word)?;
            unreachable!("non-homogeneous words have a mixed column");
        }
    };
    let ordering = find_homogeneous_ordering(word).expect("homogeneous words have an ordering");
    let top = top_coefficient(word, &ordering)?;
    let mut degree_matches_length = top != 0;
    if word.len() <= 16 {
        let full = conway(word, &ordering)?;
        degree_matches_length &= full.degree() == Some(word.len());
    }
    Ok(MinimalityCertificate {
        word: word.clone(),
        pattern,
        ordering,
        top_coefficient: top,
        degree_matches_length,
    })
}

/// Checks, for a braid with a homogeneous geodesic representative, that
/// `w` is geodesic exactly when it is homogeneous and that all geodesic
/// representatives share one sign pattern.
pub fn homogeneous_geodesic_converse(word: &BraidWord, ball: &BallTable) -> Result<bool, ConwayError> {
    let form = CanonicalForm::from_word(word).map_err(GeodesyError::from)?;
    let reps = ball.geodesic_representatives(&form, REPRESENTATIVE_LIMIT)?;
    let patterns: Vec<Option<SignPattern>> = reps.iter().map(|r| r.sign_pattern()).collect();
    if patterns.iter().all(Option::is_none) {
        return Err(ConwayError::NoHomogeneousRepresentative);
    }
    let mut merged = Some(SignPattern::from_signs(&vec![0; word.strands().saturating_sub(1)]));
    for p in &patterns {
        merged = match (merged, p) {
            (Some(m), Some(p)) => m.merge(p),
            _ => None,
        };
    }
    let geodesic = ball.is_geodesic(word)?;
    Ok(merged.is_some() && geodesic == word.is_homogeneous())
}
