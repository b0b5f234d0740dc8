//! Braid words over the Artin generators and their purely syntactic
//! statistics: letter counts, sign patterns, alternation, shadows,
//! subdiagrams and homogeneous blocks.
//!
//! Strands are identified by their top (starting) position, 1-based.
//! Generator `σ_i` crosses the strands currently at positions `i` and `i+1`.
//! In a positive crossing the strand entering from the right (position
//! `i+1`) passes over; in a negative crossing the strand entering from the
//! left passes over.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator index {index} is out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("strand subset is empty")]
    EmptySubset,
    #[error("strand {strand} is out of range for {strands} strands")]
    StrandOutOfRange { strand: usize, strands: usize },
    #[error("sign pattern has {got} entries, expected {expected}")]
    PatternLength { got: usize, expected: usize },
    #[error("word uses a letter forbidden by the sign pattern at index {0}")]
    PatternMismatch(usize),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

/// One Artin generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    index: u16,
    positive: bool,
}

impl Letter {
    pub fn new(index: usize, positive: bool) -> Self {
        assert!(index >= 1 && index <= u16::MAX as usize, "generator index must be positive");
        Letter { index: index as u16, positive }
    }

    /// `σ_index`
    pub fn pos(index: usize) -> Self {
        Self::new(index, true)
    }

    /// `σ_index^{-1}`
    pub fn neg(index: usize) -> Self {
        Self::new(index, false)
    }

    /// Parses the signed-integer form: `3` is `σ_3`, `-3` is `σ_3^{-1}`.
    pub fn from_signed(value: i64) -> Option<Self> {
        if value == 0 || value.unsigned_abs() > u16::MAX as u64 {
            return None;
        }
        Some(Self::new(value.unsigned_abs() as usize, value > 0))
    }

    pub fn to_signed(self) -> i64 {
        if self.positive {
            self.index as i64
        } else {
            -(self.index as i64)
        }
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    pub fn sign(self) -> i8 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, positive: !self.positive }
    }

    pub fn from_alpha(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            Some(Self::pos((c as u8 - b'a') as usize + 1))
        } else if c.is_ascii_uppercase() {
            Some(Self::neg((c as u8 - b'A') as usize + 1))
        } else {
            None
        }
    }

    pub fn to_alpha(self) -> Option<char> {
        if self.index > 26 {
            return None;
        }
        let base = if self.positive { b'a' } else { b'A' };
        Some((base + self.index as u8 - 1) as char)
    }

    /// All `2(n-1)` letters of `B_n`: `σ_1..σ_{n-1}` then their inverses.
    pub fn alphabet(strands: usize) -> Vec<Letter> {
        let gens = strands.saturating_sub(1);
        (1..=gens).map(Letter::pos).chain((1..=gens).map(Letter::neg)).collect()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_alpha() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{}", self.to_signed()),
        }
    }
}

/// A word in the Artin generators of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WordStats {
    pub p: usize,
    pub n: usize,
    pub exp: i64,
    pub length: usize,
}

/// Entry of a sign pattern `(e_1, …, e_{n-1})`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PatternEntry {
    Positive,
    Negative,
    Unconstrained,
}

impl PatternEntry {
    fn from_sign(sign: i8) -> Self {
        match sign.signum() {
            1 => PatternEntry::Positive,
            -1 => PatternEntry::Negative,
            _ => PatternEntry::Unconstrained,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            PatternEntry::Positive => 1,
            PatternEntry::Negative => -1,
            PatternEntry::Unconstrained => 0,
        }
    }
}

/// Sign pattern of a homogeneous word. Columns the word never uses stay
/// unconstrained, so a degenerate word carries every compatible full
/// pattern at once.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignPattern {
    entries: Vec<PatternEntry>,
}

impl SignPattern {
    /// From signs `1`, `-1`, or `0` (unconstrained).
    pub fn from_signs(signs: &[i8]) -> Self {
        SignPattern { entries: signs.iter().map(|&s| PatternEntry::from_sign(s)).collect() }
    }

    /// The all-`+1` pattern on `n` strands.
    pub fn positive(strands: usize) -> Self {
        Self::from_signs(&vec![1; strands.saturating_sub(1)])
    }

    /// `(1, -1, 1, …)` when `first` is `1`, `(-1, 1, -1, …)` otherwise.
    pub fn alternating(strands: usize, first: i8) -> Self {
        let s = first.signum();
        Self::from_signs(
            &(0..strands.saturating_sub(1))
                .map(|k| if k % 2 == 0 { s } else { -s })
                .collect::<Vec<_>>(),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[PatternEntry] {
        &self.entries
    }

    /// 1-based access.
    pub fn entry(&self, index: usize) -> PatternEntry {
        self.entries[index - 1]
    }

    pub fn signs(&self) -> Vec<i8> {
        self.entries.iter().map(|e| e.as_i8()).collect()
    }

    pub fn is_fully_determined(&self) -> bool {
        !self.entries.contains(&PatternEntry::Unconstrained)
    }

    /// Replaces unconstrained entries by `default` (`1` or `-1`).
    pub fn resolved(&self, default: i8) -> Vec<i8> {
        self.entries
            .iter()
            .map(|e| match e {
                PatternEntry::Unconstrained => default.signum(),
                other => other.as_i8(),
            })
            .collect()
    }

    /// True when no column carries opposite constraints.
    pub fn compatible(&self, other: &SignPattern) -> bool {
        self.merge(other).is_some()
    }

    /// The common refinement of two patterns, if they do not conflict.
    pub fn merge(&self, other: &SignPattern) -> Option<SignPattern> {
        if self.len() != other.len() {
            return None;
        }
        let mut entries = Vec::with_capacity(self.len());
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            entries.push(match (a, b) {
                (PatternEntry::Unconstrained, x) | (x, PatternEntry::Unconstrained) => x,
                (x, y) if x == y => x,
                _ => return None,
            });
        }
        Some(SignPattern { entries })
    }

    /// Does the word avoid every letter `σ_k^{-e_k}`?
    pub fn admits(&self, word: &BraidWord) -> bool {
        word.letters.iter().all(|l| match self.entries.get(l.index() - 1) {
            Some(PatternEntry::Positive) => l.is_positive(),
            Some(PatternEntry::Negative) => !l.is_positive(),
            Some(PatternEntry::Unconstrained) => true,
            None => false,
        })
    }

    /// True for the two patterns `(1,-1,1,…)` and `(-1,1,-1,…)`, treating
    /// unconstrained entries as wildcards.
    pub fn fits_alternating(&self) -> bool {
        [1i8, -1].iter().any(|&first| {
            let alt = SignPattern::alternating(self.len() + 1, first);
            self.compatible(&alt)
        })
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            match e {
                PatternEntry::Positive => write!(f, "1")?,
                PatternEntry::Negative => write!(f, "-1")?,
                PatternEntry::Unconstrained => write!(f, "*")?,
            }
        }
        write!(f, ")")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFlags {
    pub positive: bool,
    pub negative: bool,
    pub homogeneous: Option<SignPattern>,
    pub alternating: bool,
    pub reduced: bool,
    pub degenerate: bool,
}

/// A braid diagram with crossing types forgotten.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidShadow {
    pub strands: usize,
    pub crossings: Vec<usize>,
}

impl BraidShadow {
    pub fn is_connected(&self) -> bool {
        let mut used = vec![false; self.strands.saturating_sub(1)];
        for &c in &self.crossings {
            used[c - 1] = true;
        }
        used.iter().all(|&u| u)
    }

    /// Splits the used columns into maximal runs of consecutive indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut used = vec![false; self.strands.saturating_sub(1)];
        for &c in &self.crossings {
            used[c - 1] = true;
        }
        let mut runs: Vec<Vec<usize>> = Vec::new();
        let mut current = Vec::new();
        for (k, &u) in used.iter().enumerate() {
            if u {
                current.push(k + 1);
            } else if !current.is_empty() {
                runs.push(std::mem::take(&mut current));
            }
        }
        if !current.is_empty() {
            runs.push(current);
        }
        runs
    }
}

/// Homogeneous blocks: maximal runs of equal sign in a full pattern.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BlockProfile {
    pub blocks: Vec<Vec<usize>>,
    pub counts: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, WordError> {
        if strands == 0 {
            return Err(WordError::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(WordError::IndexOutOfRange { index: bad.index(), strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord { strands, letters: Vec::new() }
    }

    /// From signed integers, `[1, -2]` is `σ_1σ_2^{-1}`.
    pub fn from_signed(strands: usize, values: &[i64]) -> Result<Self, WordError> {
        let letters = values
            .iter()
            .map(|&v| Letter::from_signed(v).ok_or_else(|| WordError::MalformedToken(v.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    /// Parses numeric (`"1 -2 3"`) or alpha (`"aBc"`) syntax. Numeric syntax
    /// is detected by the presence of a digit.
    pub fn parse(text: &str, strands: usize) -> Result<Self, WordError> {
        if strands == 0 {
            return Err(WordError::NoStrands);
        }
        let text = text.trim();
        let letters = if text.chars().any(|c| c.is_ascii_digit()) {
            text.split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .ok()
                        .and_then(Letter::from_signed)
                        .ok_or_else(|| WordError::MalformedToken(tok.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.chars()
                .map(|c| Letter::from_alpha(c).ok_or_else(|| WordError::MalformedToken(c.to_string())))
                .collect::<Result<Vec<_>, _>>()?
        };
        Self::new(strands, letters)
    }

    /// Alpha form when `n <= 27`, numeric form otherwise.
    pub fn render(&self) -> String {
        if self.strands <= 27 {
            self.letters.iter().map(|l| l.to_alpha().expect("index <= 26")).collect()
        } else {
            self.render_numeric()
        }
    }

    pub fn render_numeric(&self) -> String {
        self.letters.iter().map(|l| l.to_signed().to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        assert!(letter.index() < self.strands, "letter out of range");
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, WordError> {
        if self.strands != other.strands {
            return Err(WordError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The word of the inverse braid.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn stats(&self) -> WordStats {
        let p = self.letters.iter().filter(|l| l.is_positive()).count();
        let n = self.letters.len() - p;
        WordStats { p, n, exp: p as i64 - n as i64, length: p + n }
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|l| !l.is_positive())
    }

    /// Column usage: for each index, whether a positive / negative letter occurs.
    fn column_signs(&self) -> Vec<(bool, bool)> {
        let mut cols = vec![(false, false); self.strands - 1];
        for l in &self.letters {
            let c = &mut cols[l.index() - 1];
            if l.is_positive() {
                c.0 = true;
            } else {
                c.1 = true;
            }
        }
        cols
    }

    /// The maximal sign pattern the word satisfies, if it is homogeneous.
    pub fn sign_pattern(&self) -> Option<SignPattern> {
        let mut entries = Vec::with_capacity(self.strands - 1);
        for (pos, neg) in self.column_signs() {
            entries.push(match (pos, neg) {
                (true, true) => return None,
                (true, false) => PatternEntry::Positive,
                (false, true) => PatternEntry::Negative,
                (false, false) => PatternEntry::Unconstrained,
            });
        }
        Some(SignPattern { entries })
    }

    pub fn is_homogeneous(&self) -> bool {
        self.sign_pattern().is_some()
    }

    /// Some index in `1..n-1` occurs in no letter.
    pub fn is_degenerate(&self) -> bool {
        self.column_signs().iter().any(|&(p, n)| !p && !n)
    }

    /// Every index is used either zero times or at least twice.
    pub fn is_reduced(&self) -> bool {
        let mut counts = vec![0usize; self.strands - 1];
        for l in &self.letters {
            counts[l.index() - 1] += 1;
        }
        counts.iter().all(|&c| c != 1)
    }

    /// Walks every strand from top to bottom and requires its crossings to
    /// alternate between over- and underpasses.
    pub fn is_alternating(&self) -> bool {
        // last role per strand: Some(true) = over
        let mut last: Vec<Option<bool>> = vec![None; self.strands];
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let left = l.index() - 1;
            let (a, b) = (at[left], at[left + 1]);
            let right_over = l.is_positive();
            for (strand, over) in [(a, !right_over), (b, right_over)] {
                if last[strand] == Some(over) {
                    return false;
                }
                last[strand] = Some(over);
            }
            at.swap(left, left + 1);
        }
        true
    }

    pub fn classify(&self) -> ClassFlags {
        ClassFlags {
            positive: self.is_positive(),
            negative: self.is_negative(),
            homogeneous: self.sign_pattern(),
            alternating: self.is_alternating(),
            reduced: self.is_reduced(),
            degenerate: self.is_degenerate(),
        }
    }

    /// Image of the braid in the symmetric group, `σ_i ↦ (i, i+1)`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_after(l.index());
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Deletes every strand not in `keep` (strand identities are top
    /// positions). A crossing survives when both of its strands are kept;
    /// it is re-indexed by the relative order of the kept strands there.
    pub fn subdiagram(&self, keep: &[usize]) -> Result<BraidWord, WordError> {
        let mut kept = vec![false; self.strands];
        for &s in keep {
            if s == 0 || s > self.strands {
                return Err(WordError::StrandOutOfRange { strand: s, strands: self.strands });
            }
            kept[s - 1] = true;
        }
        let size = kept.iter().filter(|&&k| k).count();
        if size == 0 {
            return Err(WordError::EmptySubset);
        }
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut letters = Vec::new();
        for l in &self.letters {
            let left = l.index() - 1;
            if kept[at[left]] && kept[at[left + 1]] {
                let rank = at[..left].iter().filter(|&&s| kept[s]).count();
                letters.push(Letter::new(rank + 1, l.is_positive()));
            }
            at.swap(left, left + 1);
        }
        Ok(BraidWord { strands: size, letters })
    }

    /// Signs of the crossings between each unordered pair of strands,
    /// keyed by strand identities `(i, j)` with `i < j` (1-based).
    pub fn pair_crossings(&self) -> Vec<((usize, usize), i8)> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut out = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let left = l.index() - 1;
            let (a, b) = (at[left], at[left + 1]);
            out.push(((a.min(b) + 1, a.max(b) + 1), l.sign()));
            at.swap(left, left + 1);
        }
        out
    }

    pub fn shadow(&self) -> BraidShadow {
        BraidShadow {
            strands: self.strands,
            crossings: self.letters.iter().map(|l| l.index()).collect(),
        }
    }

    /// Letter totals per homogeneous block of `pattern`, with unconstrained
    /// entries resolved to `+1`.
    pub fn block_profile(&self, pattern: &SignPattern) -> Result<BlockProfile, WordError> {
        if pattern.len() != self.strands - 1 {
            return Err(WordError::PatternLength { got: pattern.len(), expected: self.strands - 1 });
        }
        let full = pattern.resolved(1);
        if let Some(bad) = self.letters.iter().find(|l| full[l.index() - 1] != l.sign()) {
            return Err(WordError::PatternMismatch(bad.index()));
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0usize; full.len()];
        for k in 0..full.len() {
            if k == 0 || full[k] != full[k - 1] {
                blocks.push(Vec::new());
            }
            blocks.last_mut().unwrap().push(k + 1);
            block_of[k] = blocks.len() - 1;
        }
        let mut counts = vec![0; blocks.len()];
        for l in &self.letters {
            counts[block_of[l.index() - 1]] += 1;
        }
        Ok(BlockProfile { blocks, counts })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    /// The 15-strand homogeneous sample.
    pub(crate) fn sample_15_strands() -> BraidWord {
        crate::samples::homogeneous_example()
    }

    #[test]
    fn parse_alpha_and_numeric() {
        let a = w("aBAB", 3);
        assert_eq!(
            a.letters(),
            &[Letter::pos(1), Letter::neg(2), Letter::neg(1), Letter::neg(2)]
        );
        assert!(w("", 5).is_empty());
        assert_eq!(w("", 5).strands(), 5);
        assert_eq!(w("1 -3", 4).letters(), &[Letter::pos(1), Letter::neg(3)]);
        assert_eq!(w("1 -3", 4).render(), "aC");
        assert_eq!(w("aC", 4).render_numeric(), "1 -3");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            BraidWord::parse("c", 3),
            Err(WordError::IndexOutOfRange { index: 3, strands: 3 })
        );
        assert!(matches!(BraidWord::parse("1 x", 3), Err(WordError::MalformedToken(_))));
        assert!(matches!(BraidWord::parse("1 0", 3), Err(WordError::MalformedToken(_))));
        assert!(matches!(BraidWord::parse("a-b", 3), Err(WordError::MalformedToken(_))));
        assert_eq!(BraidWord::parse("a", 0), Err(WordError::NoStrands));
    }

    #[test]
    fn render_numeric_above_27_strands() {
        let word = BraidWord::from_signed(30, &[27, -1]).unwrap();
        assert_eq!(word.render(), "27 -1");
        assert_eq!(BraidWord::parse(&word.render(), 30).unwrap(), word);
    }

    #[test]
    fn stats_examples() {
        assert_eq!(w("abbAAbba", 3).stats(), WordStats { p: 6, n: 2, exp: 4, length: 8 });
        assert_eq!(w("", 3).stats(), WordStats { p: 0, n: 0, exp: 0, length: 0 });
        let s = w("aB", 3).stats();
        assert_eq!((s.p, s.n, s.exp), (1, 1, 0));
    }

    #[test]
    fn classify_sample_15_strands() {
        let word = sample_15_strands();
        let flags = word.classify();
        let pattern = flags.homogeneous.expect("homogeneous");
        assert_eq!(pattern.resolved(1), vec![1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1, 1, 1, 1]);
        assert_eq!(pattern.entry(6), PatternEntry::Unconstrained);
        assert!(flags.degenerate);
        assert!(!word.shadow().is_connected());
    }

    #[test]
    fn classify_alternating_but_split() {
        let word = w("aC", 4);
        let flags = word.classify();
        assert!(flags.alternating);
        assert_eq!(flags.homogeneous.unwrap().signs(), vec![1, 0, -1]);
        assert!(flags.degenerate);
    }

    #[test]
    fn positive_words_and_alternation() {
        let ab = w("ab", 3);
        assert!(ab.classify().positive);
        // strand 1 is under at both crossings
        assert!(!ab.is_alternating());
        assert!(w("aa", 2).is_alternating());
        assert!(w("aBaB", 3).is_alternating());
        assert!(!w("aA", 2).is_alternating());
    }

    #[test]
    fn alternating_patterns_give_alternating_words() {
        for text in ["aBaBBa", "AbAb", "aBcBa"] {
            let word = w(text, 4);
            assert!(word.sign_pattern().unwrap().fits_alternating());
            assert!(word.is_alternating(), "{text}");
        }
    }

    #[test]
    fn reduced_flag() {
        assert!(!w("aab", 3).is_reduced());
        assert!(w("aabb", 3).is_reduced());
        assert!(w("", 3).is_reduced());
    }

    #[test]
    fn permutation_examples() {
        assert!(w("abbAAbba", 3).permutation().is_identity());
        assert!(w("", 4).permutation().is_identity());
        let cyc = w("abc", 4).permutation();
        assert_eq!(cyc.image(1), 4);
        assert_eq!(cyc.images(), vec![4, 1, 2, 3]);
    }

    #[test]
    fn free_reduction() {
        assert!(w("aA", 2).free_reduce().is_empty());
        assert_eq!(w("abBa", 3).free_reduce(), w("aa", 3));
        assert_eq!(w("abbAAbba", 3).free_reduce(), w("abbAAbba", 3));
        assert_eq!(w("abBAc", 4).free_reduce(), w("c", 4));
    }

    #[test]
    fn subdiagram_examples() {
        let a = w("a", 3);
        assert!(a.subdiagram(&[1, 3]).unwrap().is_empty());
        assert_eq!(a.subdiagram(&[1, 3]).unwrap().strands(), 2);
        assert_eq!(a.subdiagram(&[1, 2]).unwrap(), w("a", 2));
        assert_eq!(a.subdiagram(&[]), Err(WordError::EmptySubset));
        assert!(a.subdiagram(&[4]).is_err());
    }

    #[test]
    fn subdiagram_of_winding_block() {
        let word = crate::generator::build_w(6).unwrap();
        for r in 3..=6 {
            assert_eq!(word.subdiagram(&[1, 2, r]).unwrap(), w("abbAAbba", 3), "r = {r}");
        }
    }

    #[test]
    fn block_profiles() {
        let word = w("abDf", 7);
        let pattern = SignPattern::from_signs(&[1, 1, -1, -1, 1, 1]);
        let prof = word.block_profile(&pattern).unwrap();
        assert_eq!(prof.blocks, vec![vec![1, 2], vec![3, 4], vec![5, 6]]);
        assert_eq!(prof.counts, vec![2, 1, 1]);
        assert_eq!(
            word.block_profile(&SignPattern::positive(7)),
            Err(WordError::PatternMismatch(4))
        );
        let pos = w("abab", 3).block_profile(&SignPattern::positive(3)).unwrap();
        assert_eq!(pos.counts, vec![4]);
        let empty = w("", 4).block_profile(&SignPattern::from_signs(&[1, -1, 0])).unwrap();
        assert!(empty.counts.iter().all(|&c| c == 0));
    }

    #[test]
    fn shadows() {
        let s = w("aA", 2).shadow();
        assert_eq!(s.crossings, vec![1, 1]);
        assert!(w("ab", 3).shadow().is_connected());
        assert_eq!(w("aC", 5).shadow().components(), vec![vec![1], vec![3]]);
    }

    #[test]
    fn pattern_merging() {
        let a = SignPattern::from_signs(&[1, 0, -1]);
        let b = SignPattern::from_signs(&[0, -1, -1]);
        assert_eq!(a.merge(&b).unwrap().signs(), vec![1, -1, -1]);
        assert!(!a.compatible(&SignPattern::from_signs(&[-1, 0, 0])));
    }
}
