//! Word problem for `B_n` via the left-greedy (Garside) normal form.
//!
//! Every braid is written uniquely as `Δ^p · A_1 ⋯ A_k` where each `A_j` is
//! a simple element (a positive permutation braid, neither trivial nor
//! `Δ`) and every consecutive pair is left-weighted. Simple elements are
//! stored as permutations of strand positions.

use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;
use crate::word::{BraidWord, Letter};

/// Largest strand count supported by the normal form.
pub const MAX_STRANDS: usize = 16;

const FORMAT_VERSION: u8 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GarsideError {
    #[error("{0} strands exceeds the supported maximum of {MAX_STRANDS}")]
    TooManyStrands(usize),
    #[error("Δ needs at least 2 strands, got {0}")]
    DeltaTooSmall(usize),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("expected a positive braid")]
    NotPositive,
    #[error("malformed canonical form encoding: {0}")]
    Decode(&'static str),
}

/// A positive permutation braid: every pair of strands crosses at most
/// once, positively. `img[p]` is the final position of the strand starting
/// at position `p` (0-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple {
    n: u8,
    img: [u8; MAX_STRANDS],
}

impl Simple {
    pub fn identity(n: usize) -> Self {
        let mut img = [0u8; MAX_STRANDS];
        for (p, slot) in img.iter_mut().enumerate().take(n) {
            *slot = p as u8;
        }
        Simple { n: n as u8, img }
    }

    /// The half twist: reverses all positions.
    pub fn delta(n: usize) -> Self {
        let mut img = [0u8; MAX_STRANDS];
        for (p, slot) in img.iter_mut().enumerate().take(n) {
            *slot = (n - 1 - p) as u8;
        }
        Simple { n: n as u8, img }
    }

    /// `σ_i`, 1-based.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::identity(n).mul_generator(i)
    }

    /// `Δ σ_i^{-1}`, the simple complement of `σ_i`.
    pub fn delta_complement(n: usize, i: usize) -> Self {
        Self::delta(n).mul_generator(i)
    }

    pub fn strands(&self) -> usize {
        self.n as usize
    }

    fn images(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    /// 1-based images.
    pub fn permutation(&self) -> Permutation {
        let imgs: Vec<usize> = self.images().iter().map(|&i| i as usize + 1).collect();
        Permutation::from_images(&imgs).expect("bijection")
    }

    pub fn from_images(images: &[u8]) -> Option<Self> {
        let n = images.len();
        if n > MAX_STRANDS {
            return None;
        }
        let mut seen = [false; MAX_STRANDS];
        let mut img = [0u8; MAX_STRANDS];
        for (p, &i) in images.iter().enumerate() {
            if i as usize >= n || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
            img[p] = i;
        }
        Some(Simple { n: n as u8, img })
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(p, &i)| p == i as usize)
    }

    pub fn is_delta(&self) -> bool {
        *self == Self::delta(self.n as usize)
    }

    fn inverse_images(&self) -> [u8; MAX_STRANDS] {
        let mut inv = [0u8; MAX_STRANDS];
        for (p, &i) in self.images().iter().enumerate() {
            inv[i as usize] = p as u8;
        }
        inv
    }

    /// Crossing count (number of inversions).
    pub fn len(&self) -> usize {
        let imgs = self.images();
        let mut count = 0;
        for a in 0..imgs.len() {
            for b in a + 1..imgs.len() {
                if imgs[a] > imgs[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Bit `i-1` set iff `σ_i` is a left divisor: the strands starting at
    /// positions `i, i+1` cross.
    pub fn starting_set(&self) -> u32 {
        let imgs = self.images();
        let mut set = 0;
        for i in 0..imgs.len().saturating_sub(1) {
            if imgs[i] > imgs[i + 1] {
                set |= 1 << i;
            }
        }
        set
    }

    /// Bit `i-1` set iff `σ_i` is a right divisor: the strands ending at
    /// positions `i, i+1` crossed.
    pub fn finishing_set(&self) -> u32 {
        let inv = self.inverse_images();
        let mut set = 0;
        for i in 0..(self.n as usize).saturating_sub(1) {
            if inv[i] > inv[i + 1] {
                set |= 1 << i;
            }
        }
        set
    }

    /// `self · σ_i`; only simple when `σ_i` is not a right divisor.
    fn mul_generator(mut self, i: usize) -> Self {
        let (a, b) = ((i - 1) as u8, i as u8);
        for slot in self.img.iter_mut().take(self.n as usize) {
            if *slot == a {
                *slot = b;
            } else if *slot == b {
                *slot = a;
            }
        }
        self
    }

    /// `σ_i^{-1} · self`; only simple when `σ_i` is a left divisor.
    fn strip_left_generator(mut self, i: usize) -> Self {
        self.img.swap(i - 1, i);
        self
    }

    /// Conjugation by `Δ`: `σ_i ↦ σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.n as usize;
        let mut img = [0u8; MAX_STRANDS];
        for (p, slot) in img.iter_mut().enumerate().take(n) {
            *slot = (n as u8 - 1) - self.img[n - 1 - p];
        }
        Simple { n: self.n, img }
    }

    /// A positive word for this simple element.
    pub fn to_letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        let mut s = *self;
        loop {
            let set = s.starting_set();
            if set == 0 {
                break;
            }
            let i = set.trailing_zeros() as usize + 1;
            out.push(Letter::pos(i));
            s = s.strip_left_generator(i);
        }
        out
    }
}

impl fmt::Debug for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple{:?}", self.images())
    }
}

/// Makes the pair `(a, b)` left-weighted without changing the product `ab`.
fn left_weight(mut a: Simple, mut b: Simple) -> (Simple, Simple) {
    loop {
        let movable = b.starting_set() & !a.finishing_set();
        if movable == 0 {
            return (a, b);
        }
        let i = movable.trailing_zeros() as usize + 1;
        a = a.mul_generator(i);
        b = b.strip_left_generator(i);
    }
}

/// Left normal form `Δ^delta_power · factors`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    strands: u8,
    delta_power: i32,
    factors: Vec<Simple>,
}

impl CanonicalForm {
    pub fn identity(strands: usize) -> Result<Self, GarsideError> {
        check_strands(strands)?;
        Ok(CanonicalForm { strands: strands as u8, delta_power: 0, factors: Vec::new() })
    }

    pub fn from_word(word: &BraidWord) -> Result<Self, GarsideError> {
        let mut form = Self::identity(word.strands())?;
        for &l in word.letters() {
            form.push_letter(l);
        }
        Ok(form)
    }

    pub fn strands(&self) -> usize {
        self.strands as usize
    }

    pub fn delta_power(&self) -> i32 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Membership in the positive monoid.
    pub fn is_positive(&self) -> bool {
        self.delta_power >= 0
    }

    /// Right-multiplies by one letter in place.
    pub fn push_letter(&mut self, letter: Letter) {
        let n = self.strands as usize;
        assert!(letter.index() < n, "letter out of range");
        if letter.is_positive() {
            self.append_simple(Simple::generator(n, letter.index()));
        } else {
            // A·Δ^{-1} = Δ^{-1}·τ(A)
            self.delta_power -= 1;
            for f in self.factors.iter_mut() {
                *f = f.flip();
            }
            self.append_simple(Simple::delta_complement(n, letter.index()));
        }
    }

    pub fn mul_letter(&self, letter: Letter) -> Self {
        let mut out = self.clone();
        out.push_letter(letter);
        out
    }

    pub fn mul_word(&self, word: &BraidWord) -> Result<Self, GarsideError> {
        if word.strands() != self.strands() {
            return Err(GarsideError::StrandMismatch(self.strands(), word.strands()));
        }
        let mut out = self.clone();
        for &l in word.letters() {
            out.push_letter(l);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &CanonicalForm) -> Result<Self, GarsideError> {
        self.mul_word(&rhs.to_word())
    }

    pub fn inverse(&self) -> Self {
        let word = self.to_word().inverse();
        Self::from_word(&word).expect("strand count already validated")
    }

    fn append_simple(&mut self, s: Simple) {
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (a, b) = (self.factors[j - 1], self.factors[j]);
            let (a2, b2) = left_weight(a, b);
            if a2 == a {
                break;
            }
            self.factors[j - 1] = a2;
            self.factors[j] = b2;
            j -= 1;
        }
        self.trim();
    }

    fn trim(&mut self) {
        let n = self.strands as usize;
        if n >= 2 {
            let delta = Simple::delta(n);
            let lead = self.factors.iter().take_while(|&&f| f == delta).count();
            if lead > 0 {
                self.factors.drain(..lead);
                self.delta_power += lead as i32;
            }
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    /// Every consecutive factor pair is left-weighted and no factor is
    /// trivial or `Δ`.
    pub fn is_left_weighted(&self) -> bool {
        let n = self.strands as usize;
        let delta = Simple::delta(n);
        self.factors.iter().all(|f| !f.is_identity() && *f != delta)
            && self
                .factors
                .windows(2)
                .all(|p| p[1].starting_set() & !p[0].finishing_set() == 0)
    }

    /// A word for the braid: `Δ^p` followed by positive words for the factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands as usize;
        let delta: Vec<Letter> = delta_letters(n);
        let mut letters = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<Letter> = delta.iter().rev().map(|l| l.inverse()).collect();
            for _ in 0..-self.delta_power {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(f.to_letters());
        }
        BraidWord::new(n, letters).expect("indices in range")
    }

    /// Exponent sum `p(w) - n(w)` of any representative word.
    pub fn exponent_sum(&self) -> i64 {
        let n = self.strands as i64;
        self.delta_power as i64 * n * (n - 1) / 2
            + self.factors.iter().map(|f| f.len() as i64).sum::<i64>()
    }

    pub fn permutation(&self) -> Permutation {
        let n = self.strands as usize;
        let mut perm = Permutation::identity(n);
        if self.delta_power.rem_euclid(2) == 1 {
            perm = Simple::delta(n).permutation();
        }
        for f in &self.factors {
            perm = perm.then(&f.permutation());
        }
        perm
    }

    /// Byte encoding: version, strands, zigzag varint `delta_power`, varint
    /// factor count, then `n` image bytes (0-based) per factor.
    pub fn encode(&self) -> Vec<u8> {
        let n = self.strands as usize;
        let mut out = Vec::with_capacity(4 + n * self.factors.len());
        out.push(FORMAT_VERSION);
        out.push(self.strands);
        let zz = ((self.delta_power << 1) ^ (self.delta_power >> 31)) as u32;
        write_varint(&mut out, zz as u64);
        write_varint(&mut out, self.factors.len() as u64);
        for f in &self.factors {
            out.extend_from_slice(f.images());
        }
        out
    }

    /// Decodes one form from the front of `bytes`, returning it with the
    /// number of bytes consumed.
    pub fn decode(bytes: &[u8]) -> Result<(Self, usize), GarsideError> {
        let mut pos = 0;
        let mut next = |bytes: &[u8]| -> Result<u8, GarsideError> {
            let b = *bytes.get(pos).ok_or(GarsideError::Decode("truncated"))?;
            pos += 1;
            Ok(b)
        };
        if next(bytes)? != FORMAT_VERSION {
            return Err(GarsideError::Decode("unknown version"));
        }
        let n = next(bytes)? as usize;
        if n == 0 || n > MAX_STRANDS {
            return Err(GarsideError::Decode("bad strand count"));
        }
        let mut cursor = pos;
        let zz = read_varint(bytes, &mut cursor)? as u32;
        let delta_power = ((zz >> 1) as i32) ^ -((zz & 1) as i32);
        let count = read_varint(bytes, &mut cursor)? as usize;
        let mut factors = Vec::with_capacity(count.min(1 << 16));
        for _ in 0..count {
            let chunk = bytes.get(cursor..cursor + n).ok_or(GarsideError::Decode("truncated"))?;
            factors.push(Simple::from_images(chunk).ok_or(GarsideError::Decode("bad factor"))?);
            cursor += n;
        }
        let form = CanonicalForm { strands: n as u8, delta_power, factors };
        if !form.is_left_weighted() {
            return Err(GarsideError::Decode("not a normal form"));
        }
        Ok((form, cursor))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_power)?;
        for s in &self.factors {
            write!(f, " {}", s.permutation())?;
        }
        Ok(())
    }
}

fn write_varint(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

fn read_varint(bytes: &[u8], pos: &mut usize) -> Result<u64, GarsideError> {
    let mut v = 0u64;
    for shift in (0..64).step_by(7) {
        let b = *bytes.get(*pos).ok_or(GarsideError::Decode("truncated varint"))?;
        *pos += 1;
        v |= ((b & 0x7f) as u64) << shift;
        if b & 0x80 == 0 {
            return Ok(v);
        }
    }
    Err(GarsideError::Decode("varint overflow"))
}

fn check_strands(n: usize) -> Result<(), GarsideError> {
    if n > MAX_STRANDS {
        Err(GarsideError::TooManyStrands(n))
    } else {
        Ok(())
    }
}

fn delta_letters(n: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for top in (1..n).rev() {
        out.extend((1..=top).map(Letter::pos));
    }
    out
}

pub fn canonical_form(word: &BraidWord) -> Result<CanonicalForm, GarsideError> {
    CanonicalForm::from_word(word)
}

/// Do the two words represent the same braid?
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool, GarsideError> {
    if u.strands() != v.strands() {
        return Err(GarsideError::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(CanonicalForm::from_word(u)? == CanonicalForm::from_word(v)?)
}

/// `Δ = (σ_1⋯σ_{n-1})(σ_1⋯σ_{n-2})⋯(σ_1σ_2)σ_1`.
pub fn delta(n: usize) -> Result<BraidWord, GarsideError> {
    if n < 2 {
        return Err(GarsideError::DeltaTooSmall(n));
    }
    check_strands(n)?;
    Ok(BraidWord::new(n, delta_letters(n)).expect("indices in range"))
}

pub fn is_positive_braid(word: &BraidWord) -> Result<bool, GarsideError> {
    Ok(CanonicalForm::from_word(word)?.is_positive())
}

/// `x ≻ y`: `x = z·y` for some positive braid `z`. Both inputs must
/// represent positive braids.
pub fn right_divisible(x: &BraidWord, y: &BraidWord) -> Result<bool, GarsideError> {
    if x.strands() != y.strands() {
        return Err(GarsideError::StrandMismatch(x.strands(), y.strands()));
    }
    if !is_positive_braid(x)? || !is_positive_braid(y)? {
        return Err(GarsideError::NotPositive);
    }
    let z = x.concat(&y.inverse()).expect("same strands");
    is_positive_braid(&z)
}
