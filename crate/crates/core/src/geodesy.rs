//! Exact word length in `B_n` from an exhaustively built ball of the
//! Cayley graph, and everything derived from it: geodesic tests, R-sets,
//! dead ends, bounded conjugacy length and the closed-form recognizer for
//! geodesics in `B_3`.

use std::collections::HashMap;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::garside::{CanonicalForm, GarsideError};
use crate::word::{BraidWord, Letter};

const CACHE_MAGIC: &[u8; 8] = b"BRAIDBAL";
const CACHE_VERSION: u8 = 1;

/// Default element budget for a ball.
pub const DEFAULT_BUDGET: usize = 5_000_000;

#[derive(Debug, Error)]
pub enum GeodesyError {
    #[error("braid lies outside the radius-{radius} ball")]
    OutOfBall { radius: usize },
    #[error("element budget of {budget} exceeded while building layer {layer}")]
    BudgetExceeded { budget: usize, layer: usize },
    #[error("ball is for {ball} strands, word has {word}")]
    StrandMismatch { ball: usize, word: usize },
    #[error("operation requires 3 strands, got {0}")]
    NotB3(usize),
    #[error("need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error(transparent)]
    Garside(#[from] GarsideError),
    #[error("ball cache: {0}")]
    Io(#[from] io::Error),
    #[error("ball cache file is malformed: {0}")]
    CacheFormat(&'static str),
}

/// Word lengths of every braid within distance `radius` of the identity.
#[derive(Clone, Debug)]
pub struct BallTable {
    strands: usize,
    radius: usize,
    lengths: HashMap<CanonicalForm, u32>,
    layers: Vec<Vec<CanonicalForm>>,
}

/// Letters ending geodesic representatives of a braid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RSet {
    letters: Vec<Letter>,
}

impl RSet {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.letters.contains(&l)
    }

    /// Some letter appears together with its inverse.
    pub fn has_inverse_pair(&self) -> bool {
        self.letters.iter().any(|l| self.contains(l.inverse()))
    }

    pub fn render(&self) -> Vec<String> {
        self.letters.iter().map(|l| l.to_string()).collect()
    }
}

/// Length of a braid that may lie beyond the ball.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LengthBound {
    Exact(u32),
    /// The length is strictly greater than the value.
    Greater(u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConjugacyLength {
    pub value: u32,
    pub exact: bool,
}

pub fn build_ball(strands: usize, radius: usize) -> Result<BallTable, GeodesyError> {
    BallTable::build(strands, radius, DEFAULT_BUDGET)
}

impl BallTable {
    /// Breadth-first search from the identity. Each layer is expanded in
    /// parallel and merged in canonical-form order, so the result does not
    /// depend on the thread count.
    pub fn build(strands: usize, radius: usize, budget: usize) -> Result<Self, GeodesyError> {
        if strands < 2 {
            return Err(GeodesyError::TooFewStrands(strands));
        }
        let identity = CanonicalForm::identity(strands)?;
        let alphabet = Letter::alphabet(strands);
        let mut lengths = HashMap::new();
        lengths.insert(identity.clone(), 0u32);
        let mut layers = vec![vec![identity]];
        for m in 0..radius {
            let frontier = &layers[m];
            let found: Vec<Vec<CanonicalForm>> = frontier
                .par_iter()
                .map(|f| {
                    alphabet
                        .iter()
                        .map(|&s| f.mul_letter(s))
                        .filter(|g| !lengths.contains_key(g))
                        .collect()
                })
                .collect();
            let mut next = Vec::new();
            for g in found.into_iter().flatten() {
                if !lengths.contains_key(&g) {
                    lengths.insert(g.clone(), m as u32 + 1);
                    next.push(g);
                }
            }
            if lengths.len() > budget {
                return Err(GeodesyError::BudgetExceeded { budget, layer: m + 1 });
            }
            next.sort_unstable();
            layers.push(next);
        }
        Ok(BallTable { strands, radius, lengths, layers })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Number of elements in the ball.
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// `Γ_n(0..=radius)`.
    pub fn layer_counts(&self) -> Vec<u64> {
        self.layers.iter().map(|l| l.len() as u64).collect()
    }

    /// Elements of length exactly `m`, sorted.
    pub fn layer(&self, m: usize) -> &[CanonicalForm] {
        &self.layers[m]
    }

    pub fn length_of(&self, form: &CanonicalForm) -> Option<u32> {
        self.lengths.get(form).copied()
    }

    fn form_of(&self, word: &BraidWord) -> Result<CanonicalForm, GeodesyError> {
        if word.strands() != self.strands {
            return Err(GeodesyError::StrandMismatch { ball: self.strands, word: word.strands() });
        }
        Ok(CanonicalForm::from_word(word)?)
    }

    fn require(&self, form: &CanonicalForm) -> Result<u32, GeodesyError> {
        self.length_of(form).ok_or(GeodesyError::OutOfBall { radius: self.radius })
    }

    /// Crossing number of the braid represented by `word`.
    pub fn length(&self, word: &BraidWord) -> Result<u32, GeodesyError> {
        let form = self.form_of(word)?;
        self.require(&form)
    }

    pub fn is_geodesic(&self, word: &BraidWord) -> Result<bool, GeodesyError> {
        let form = self.form_of(word)?;
        match self.length_of(&form) {
            Some(l) => Ok(l as usize == word.len()),
            // a braid outside the ball is longer than every word that fits in it
            None if word.len() <= self.radius => unreachable!("word shorter than its braid"),
            None => Err(GeodesyError::OutOfBall { radius: self.radius }),
        }
    }

    /// `R(b)`: letters `s` with `l(b·s^{-1}) = l(b) - 1`. Only `b` itself
    /// has to lie in the ball, since `l(b·s^{-1})` is `l(b) ± 1`.
    pub fn r_set_of(&self, form: &CanonicalForm) -> Result<RSet, GeodesyError> {
        let l = self.require(form)?;
        let letters = Letter::alphabet(self.strands)
            .into_iter()
            .filter(|&s| l > 0 && self.length_of(&form.mul_letter(s.inverse())) == Some(l - 1))
            .collect();
        Ok(RSet { letters })
    }

    pub fn r_set(&self, word: &BraidWord) -> Result<RSet, GeodesyError> {
        let form = self.form_of(word)?;
        self.r_set_of(&form)
    }

    /// No letter increases the length. Equivalent to a full R-set.
    pub fn is_dead_end_form(&self, form: &CanonicalForm) -> Result<bool, GeodesyError> {
        Ok(self.r_set_of(form)?.len() == 2 * (self.strands - 1))
    }

    pub fn is_dead_end(&self, word: &BraidWord) -> Result<bool, GeodesyError> {
        let form = self.form_of(word)?;
        self.is_dead_end_form(&form)
    }

    /// Length of a braid up to twice the radius, by splitting a geodesic
    /// at its midpoint: `l(b) = R + min { l(x^{-1}b) : l(x) = R }` whenever
    /// `R <= l(b) <= 2R`.
    pub fn length_extended(&self, form: &CanonicalForm) -> LengthBound {
        if let Some(l) = self.length_of(form) {
            return LengthBound::Exact(l);
        }
        let r = self.radius;
        let word = form.to_word();
        let best = self.layers[r]
            .par_iter()
            .filter_map(|x| {
                let rest = x.inverse().mul_word(&word).ok()?;
                self.length_of(&rest)
            })
            .min();
        match best {
            Some(rest) => LengthBound::Exact(r as u32 + rest),
            None => LengthBound::Greater(2 * r as u32),
        }
    }

    /// All geodesic words representing `form`, at most `limit` of them.
    pub fn geodesic_representatives(
        &self,
        form: &CanonicalForm,
        limit: usize,
    ) -> Result<Vec<BraidWord>, GeodesyError> {
        let l = self.require(form)?;
        let mut out = Vec::new();
        let mut suffix = Vec::with_capacity(l as usize);
        self.collect_representatives(form, l, &mut suffix, &mut out, limit);
        Ok(out)
    }

    fn collect_representatives(
        &self,
        form: &CanonicalForm,
        l: u32,
        suffix: &mut Vec<Letter>,
        out: &mut Vec<BraidWord>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if l == 0 {
            let letters: Vec<Letter> = suffix.iter().rev().copied().collect();
            out.push(BraidWord::new(self.strands, letters).expect("valid letters"));
            return;
        }
        for s in Letter::alphabet(self.strands) {
            let prev = form.mul_letter(s.inverse());
            if self.length_of(&prev) == Some(l - 1) {
                suffix.push(s);
                self.collect_representatives(&prev, l - 1, suffix, out, limit);
                suffix.pop();
            }
        }
    }

    /// Calls `visit` on every geodesic word of length `1..=max_len`, in
    /// depth-first order. Prefixes of geodesics are geodesic, so non-geodesic
    /// prefixes are pruned.
    pub fn for_each_geodesic<F>(&self, max_len: usize, mut visit: F) -> Result<(), GeodesyError>
    where
        F: FnMut(&[Letter], &CanonicalForm),
    {
        if max_len > self.radius {
            return Err(GeodesyError::OutOfBall { radius: self.radius });
        }
        let alphabet = Letter::alphabet(self.strands);
        let mut prefix = Vec::with_capacity(max_len);
        let root = CanonicalForm::identity(self.strands)?;
        self.walk(&root, &alphabet, max_len, &mut prefix, &mut visit);
        Ok(())
    }

    fn walk<F>(
        &self,
        form: &CanonicalForm,
        alphabet: &[Letter],
        max_len: usize,
        prefix: &mut Vec<Letter>,
        visit: &mut F,
    ) where
        F: FnMut(&[Letter], &CanonicalForm),
    {
        if prefix.len() == max_len {
            return;
        }
        for &s in alphabet {
            let next = form.mul_letter(s);
            if self.length_of(&next) == Some(prefix.len() as u32 + 1) {
                prefix.push(s);
                visit(prefix, &next);
                self.walk(&next, alphabet, max_len, prefix, visit);
                prefix.pop();
            }
        }
    }

    fn conj_min(&self, form: &CanonicalForm, bound: usize) -> u32 {
        let own = self.length_of(form).expect("checked by caller");
        self.layers[..=bound]
            .par_iter()
            .flat_map(|layer| layer.par_iter())
            .filter_map(|c| {
                let conj = c.inverse().mul(form).ok()?.mul(c).ok()?;
                // conjugates outside the ball are longer than `form` itself
                self.length_of(&conj)
            })
            .min()
            .unwrap_or(own)
            .min(own)
    }

    fn is_central(&self, form: &CanonicalForm) -> bool {
        Letter::alphabet(self.strands).iter().filter(|l| l.is_positive()).all(|&s| {
            let left = CanonicalForm::identity(self.strands).expect("valid").mul_letter(s);
            left.mul(form).expect("same strands") == form.mul_letter(s)
        })
    }

    /// Minimum of `l(c^{-1} b c)` over conjugators with `l(c) <= conj_bound`.
    /// `exact` is set when one more conjugator layer does not improve the
    /// value and the value is 0 or 1, or when `b` is central.
    pub fn min_conj_length_bounded(
        &self,
        word: &BraidWord,
        conj_bound: usize,
    ) -> Result<ConjugacyLength, GeodesyError> {
        let form = self.form_of(word)?;
        self.require(&form)?;
        if conj_bound > self.radius {
            return Err(GeodesyError::OutOfBall { radius: self.radius });
        }
        let value = self.conj_min(&form, conj_bound);
        let stable = conj_bound < self.radius && self.conj_min(&form, conj_bound + 1) == value;
        let exact = (stable && value <= 1) || self.is_central(&form);
        Ok(ConjugacyLength { value, exact })
    }

    /// Writes the ball as a cache file: magic, version, strands, radius,
    /// then per layer a count followed by encoded canonical forms.
    pub fn write_to(&self, path: &Path) -> Result<(), GeodesyError> {
        let mut out = BufWriter::new(File::create(path)?);
        out.write_all(CACHE_MAGIC)?;
        out.write_all(&[CACHE_VERSION, self.strands as u8])?;
        out.write_all(&(self.radius as u32).to_le_bytes())?;
        for layer in &self.layers {
            out.write_all(&(layer.len() as u64).to_le_bytes())?;
            for f in layer {
                out.write_all(&f.encode())?;
            }
        }
        out.flush()?;
        Ok(())
    }

    /// Reads a cache file, keeping only layers up to `max_radius`.
    pub fn read_from(path: &Path, max_radius: Option<usize>) -> Result<Self, GeodesyError> {
        let mut bytes = Vec::new();
        BufReader::new(File::open(path)?).read_to_end(&mut bytes)?;
        if bytes.len() < 14 || &bytes[..8] != CACHE_MAGIC {
            return Err(GeodesyError::CacheFormat("bad magic"));
        }
        if bytes[8] != CACHE_VERSION {
            return Err(GeodesyError::CacheFormat("unsupported version"));
        }
        let strands = bytes[9] as usize;
        let stored = u32::from_le_bytes(bytes[10..14].try_into().expect("4 bytes")) as usize;
        let radius = max_radius.map_or(stored, |r| r.min(stored));
        let mut pos = 14;
        let mut layers = Vec::with_capacity(radius + 1);
        let mut lengths = HashMap::new();
        for m in 0..=radius {
            let count_bytes = bytes.get(pos..pos + 8).ok_or(GeodesyError::CacheFormat("truncated"))?;
            let count = u64::from_le_bytes(count_bytes.try_into().expect("8 bytes")) as usize;
            pos += 8;
            let mut layer = Vec::with_capacity(count);
            for _ in 0..count {
                let (form, used) = CanonicalForm::decode(&bytes[pos..])
                    .map_err(|_| GeodesyError::CacheFormat("bad record"))?;
                if form.strands() != strands {
                    return Err(GeodesyError::CacheFormat("strand count mismatch"));
                }
                pos += used;
                lengths.insert(form.clone(), m as u32);
                layer.push(form);
            }
            layers.push(layer);
        }
        Ok(BallTable { strands, radius, lengths, layers })
    }

    /// Loads the smallest cached ball of at least `radius`, or builds one
    /// and stores it under `cache_dir`.
    pub fn load_or_build(
        strands: usize,
        radius: usize,
        cache_dir: Option<&Path>,
    ) -> Result<Self, GeodesyError> {
        let Some(dir) = cache_dir else {
            return build_ball(strands, radius);
        };
        if let Some(path) = find_cached(dir, strands, radius)? {
            return Self::read_from(&path, Some(radius));
        }
        let ball = build_ball(strands, radius)?;
        fs::create_dir_all(dir)?;
        ball.write_to(&cache_path(dir, strands, radius))?;
        Ok(ball)
    }
}

pub fn cache_path(dir: &Path, strands: usize, radius: usize) -> PathBuf {
    dir.join(format!("ball-n{strands}-r{radius}.bin"))
}

fn find_cached(dir: &Path, strands: usize, radius: usize) -> Result<Option<PathBuf>, GeodesyError> {
    if !dir.is_dir() {
        return Ok(None);
    }
    let prefix = format!("ball-n{strands}-r");
    let mut best: Option<(usize, PathBuf)> = None;
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()) else { continue };
        let Some(r) = name
            .strip_prefix(&prefix)
            .and_then(|rest| rest.strip_suffix(".bin"))
            .and_then(|r| r.parse::<usize>().ok())
        else {
            continue;
        };
        if r >= radius && best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, path));
        }
    }
    Ok(best.map(|(_, p)| p))
}

/// Closed-form geodesic test in `B_3`. A freely reduced word over
/// `{a, b, A, B}` is geodesic iff it avoids, as contiguous factors, each of
/// these combinations: a factor from `{ab, ba}` together with one from
/// `{AB, BA}`; `aba`, `bab` together with `A` or `B`; `ABA`, `BAB`
/// together with `a` or `b`.
pub fn b3_geodesic(word: &BraidWord) -> Result<bool, GeodesyError> {
    if word.strands() != 3 {
        return Err(GeodesyError::NotB3(word.strands()));
    }
    if !word.is_freely_reduced() {
        return Ok(false);
    }
    Ok(b3_letters_geodesic(word.letters()))
}

pub(crate) fn b3_letters_geodesic(letters: &[Letter]) -> bool {
    let text: String = letters.iter().map(|l| l.to_alpha().expect("index <= 2")).collect();
    let has = |p: &str| text.contains(p);
    if (has("ab") || has("ba")) && (has("AB") || has("BA")) {
        return false;
    }
    let positive_triple = has("aba") || has("bab");
    let negative_triple = has("ABA") || has("BAB");
    !((positive_triple && (has("A") || has("B"))) || (negative_triple && (has("a") || has("b"))))
}
