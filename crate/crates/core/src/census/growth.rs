use std::collections::HashSet;

use rayon::prelude::*;

use super::trace::MoebiusPolynomial;
use super::{CensusError, GrowthSeries, SeriesKind};
use crate::garside::CanonicalForm;
use crate::geodesy::BallTable;
use crate::word::{BraidWord, Letter};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordClass {
    Positive,
    Homogeneous,
    Alternating,
}

impl WordClass {
    fn kind(self) -> SeriesKind {
        match self {
            WordClass::Positive => SeriesKind::Positive,
            WordClass::Homogeneous => SeriesKind::Homogeneous,
            WordClass::Alternating => SeriesKind::Alternating,
        }
    }
}

fn check_ball(ball: &BallTable, strands: usize, max_len: usize) -> Result<(), CensusError> {
    if ball.strands() != strands {
        return Err(CensusError::StrandMismatch { ball: ball.strands(), expected: strands });
    }
    if ball.radius() < max_len {
        return Err(CensusError::InsufficientBall { radius: ball.radius(), needed: max_len });
    }
    Ok(())
}

/// `Γ_n(m)`: elements of length exactly `m`.
pub fn element_growth(
    strands: usize,
    max_len: usize,
    ball: &BallTable,
) -> Result<GrowthSeries, CensusError> {
    check_ball(ball, strands, max_len)?;
    Ok(GrowthSeries {
        kind: SeriesKind::GammaElements,
        strands,
        counts: ball.layer_counts()[..=max_len].to_vec(),
        exact: true,
    })
}

/// `γ_n(m)`: geodesic words of length exactly `m`.
pub fn geodesic_growth(
    strands: usize,
    max_len: usize,
    ball: &BallTable,
) -> Result<GrowthSeries, CensusError> {
    check_ball(ball, strands, max_len)?;
    let mut counts = vec![0u64; max_len + 1];
    counts[0] = 1;
    ball.for_each_geodesic(max_len, |w, _| counts[w.len()] += 1)?;
    Ok(GrowthSeries { kind: SeriesKind::GammaGeodesics, strands, counts, exact: true })
}

/// Search state for words of one class, updated letter by letter.
struct ClassState {
    class: WordClass,
    /// Strand (top position) at each position.
    at: Vec<usize>,
    /// Last role of each strand: `Some(true)` after passing over.
    last_over: Vec<Option<bool>>,
    /// Sign and use count per column.
    column: Vec<(i8, usize)>,
}

impl ClassState {
    fn new(strands: usize, class: WordClass) -> Self {
        ClassState {
            class,
            at: (0..strands).collect(),
            last_over: vec![None; strands],
            column: vec![(0, 0); strands.saturating_sub(1)],
        }
    }

    fn allows(&self, l: Letter) -> bool {
        let i = l.index() - 1;
        match self.class {
            WordClass::Positive => l.is_positive(),
            WordClass::Homogeneous => self.column[i].1 == 0 || self.column[i].0 == l.sign(),
            WordClass::Alternating => {
                let (left, right) = (self.at[i], self.at[i + 1]);
                let (over, under) = if l.is_positive() { (right, left) } else { (left, right) };
                self.last_over[over] != Some(true) && self.last_over[under] != Some(false)
            }
        }
    }

    /// Applies `l` and returns what is needed to undo it.
    fn apply(&mut self, l: Letter) -> (Option<bool>, Option<bool>) {
        let i = l.index() - 1;
        let (left, right) = (self.at[i], self.at[i + 1]);
        let saved = (self.last_over[left], self.last_over[right]);
        let (over, under) = if l.is_positive() { (right, left) } else { (left, right) };
        self.last_over[over] = Some(true);
        self.last_over[under] = Some(false);
        self.at.swap(i, i + 1);
        self.column[i] = (l.sign(), self.column[i].1 + 1);
        saved
    }

    fn undo(&mut self, l: Letter, saved: (Option<bool>, Option<bool>)) {
        let i = l.index() - 1;
        self.at.swap(i, i + 1);
        let (left, right) = (self.at[i], self.at[i + 1]);
        self.last_over[left] = saved.0;
        self.last_over[right] = saved.1;
        self.column[i].1 -= 1;
    }
}

fn walk_class<F: FnMut(&[Letter])>(
    state: &mut ClassState,
    alphabet: &[Letter],
    max_len: usize,
    prefix: &mut Vec<Letter>,
    visit: &mut F,
) {
    if prefix.len() == max_len {
        return;
    }
    for &l in alphabet {
        if state.allows(l) {
            let saved = state.apply(l);
            prefix.push(l);
            visit(prefix);
            walk_class(state, alphabet, max_len, prefix, visit);
            prefix.pop();
            state.undo(l, saved);
        }
    }
}

/// Visits every word of the class with length `1..=max_len`.
pub fn for_each_class_word<F: FnMut(&[Letter])>(
    strands: usize,
    max_len: usize,
    class: WordClass,
    mut visit: F,
) {
    let mut state = ClassState::new(strands, class);
    let alphabet = Letter::alphabet(strands);
    let mut prefix = Vec::with_capacity(max_len);
    walk_class(&mut state, &alphabet, max_len, &mut prefix, &mut visit);
}

/// Braids of crossing number `m` with a representative in the class. Words
/// in each class are geodesic, so counting distinct canonical forms among
/// class words of length `m` gives the count directly.
pub fn class_growth(strands: usize, max_len: usize, class: WordClass) -> GrowthSeries {
    let mut seen: Vec<HashSet<CanonicalForm>> = vec![HashSet::new(); max_len + 1];
    let mut words: Vec<Vec<Letter>> = Vec::new();
    for_each_class_word(strands, max_len, class, |w| words.push(w.to_vec()));
    let forms: Vec<(usize, CanonicalForm)> = words
        .par_iter()
        .map(|w| {
            let word = BraidWord::new(strands, w.clone()).expect("valid letters");
            (w.len(), CanonicalForm::from_word(&word).expect("strand count supported"))
        })
        .collect();
    for (len, f) in forms {
        seen[len].insert(f);
    }
    let mut counts: Vec<u64> = seen.iter().map(|s| s.len() as u64).collect();
    counts[0] = 1;
    GrowthSeries { kind: class.kind(), strands, counts, exact: true }
}

/// `h_n(m) = Σ_j C(n-1, j) 2^j surj(m, j)`: homogeneous words of length
/// `m`, grouped by the set of `j` columns they use.
pub fn homogeneous_word_count(strands: usize, m: usize) -> u128 {
    let g = strands.saturating_sub(1);
    (0..=g.min(m))
        .map(|j| binom(g, j) as i128 * (1i128 << j) * surjections(m, j))
        .sum::<i128>() as u128
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn surjections(m: usize, j: usize) -> i128 {
    (0..=j)
        .map(|i| {
            let term = binom(j, i) as i128 * ((j - i) as i128).pow(m as u32);
            if i % 2 == 0 { term } else { -term }
        })
        .sum()
}

type Series = Vec<i128>;

fn series_mul(a: &Series, b: &Series) -> Series {
    let len = a.len();
    let mut out = vec![0; len];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Maximal runs of consecutive set bits, as lengths.
fn runs(mask: u32, width: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut current = 0;
    for k in 0..width {
        if mask >> k & 1 == 1 {
            current += 1;
        } else if current > 0 {
            out.push(current);
            current = 0;
        }
    }
    if current > 0 {
        out.push(current);
    }
    out
}

/// Trace elements on a path of `r` generators using every generator.
fn full_support_series(r: usize, len: usize) -> Series {
    let mut total = vec![0i128; len + 1];
    for mask in 0u32..(1 << r) {
        let mut part = vec![0i128; len + 1];
        part[0] = 1;
        for run in runs(mask, r) {
            part = series_mul(&part, &MoebiusPolynomial::for_path(run).inverse_series(len));
        }
        let sign = if (r - mask.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        for (t, p) in total.iter_mut().zip(part) {
            *t += sign * p;
        }
    }
    total
}

/// `A_n(m)` through the block decomposition: the used columns split into
/// maximal runs, each run carries one of two alternating sign patterns,
/// and braids on a run with a fixed pattern are exactly the trace monoid
/// elements using all of its columns.
pub fn alternating_growth_by_blocks(strands: usize, max_len: usize) -> GrowthSeries {
    let g = strands.saturating_sub(1);
    let per_run: Vec<Series> = (0..=g).map(|r| full_support_series(r, max_len)).collect();
    let mut total = vec![0i128; max_len + 1];
    for mask in 0u32..(1 << g) {
        let mut part = vec![0i128; max_len + 1];
        part[0] = 1;
        for run in runs(mask, g) {
            let doubled: Series = per_run[run].iter().map(|c| 2 * c).collect();
            part = series_mul(&part, &doubled);
        }
        for (t, p) in total.iter_mut().zip(part) {
            *t += p;
        }
    }
    GrowthSeries {
        kind: SeriesKind::Alternating,
        strands,
        counts: total.into_iter().map(|c| c as u64).collect(),
        exact: true,
    }
}
