//! Geodesic braid words that are neither homogeneous nor alternating.
//!
//! The construction interleaves free shadows `v_i` with routing words
//! `u_i` and a fixed pure word `w`:
//!
//! ```text
//! W = v_1 u_1 w v_2 u_2 w … v_k u_k w v_{k+1} u_{k+1}
//! ```
//!
//! Crossing signs in `v_i u_i` are forced by which strands meet: strands 1
//! and 2 (by top position) cross each other and every other strand
//! positively, except that strand 2 crosses the remaining strands
//! negatively. Each `u_i` brings strand 1 and then strand 2 back to the
//! left edge so that `w` can wind strand 1 around the others. Every
//! output ships with a 3-regular winding certificate.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::winding::{k_regular_certificate, verify_winding, WindingCertificate, WindingError};
use crate::word::{BraidWord, Letter};

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error("too few strands ({0}) for this construction")]
    TooFewStrands(usize),
    #[error("expected {expected} shadow lengths, got {got}")]
    ShadowCount { expected: usize, got: usize },
    #[error("shadow {index} has {got} columns, expected {expected}")]
    ShadowLength { index: usize, got: usize, expected: usize },
    #[error("shadow column {column} out of range for {strands} strands")]
    ColumnOutOfRange { column: usize, strands: usize },
    #[error("shadows must be given explicitly or drawn from a seed")]
    NoShadowSource,
    #[error("certificate rejected at subset {0:?}")]
    CertificateFailed(Option<usize>),
    #[error(transparent)]
    Winding(#[from] WindingError),
}

#[derive(Clone, Debug)]
pub struct GeneratorSpec {
    pub strands: usize,
    pub k: usize,
    /// Lengths `x_1..x_{k+1}` of the free shadows.
    pub x: Vec<usize>,
    /// Explicit shadow columns; empty to draw them from `seed`.
    pub shadows: Vec<Vec<usize>>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct GeneratedWord {
    pub word: BraidWord,
    pub certificate: WindingCertificate,
    pub shadows: Vec<Vec<usize>>,
    pub routing_lengths: Vec<usize>,
}

/// The fixed pure word: strand 1 travels to the right edge and back,
/// passing under a double negative twist in the middle. Length `4n - 4`.
pub fn build_w(strands: usize) -> Result<BraidWord, GeneratorError> {
    if strands < 2 {
        return Err(GeneratorError::TooFewStrands(strands));
    }
    let n = strands as i64;
    let mut letters: Vec<i64> = (1..n).collect();
    letters.extend((2..n).rev());
    letters.extend([-1, -1]);
    letters.extend(2..n);
    letters.extend((1..n).rev());
    Ok(BraidWord::from_signed(strands, &letters).expect("indices in range"))
}

fn forced_sign(a: usize, b: usize) -> bool {
    // strands by 0-based top position
    let (lo, hi) = (a.min(b), a.max(b));
    !(lo == 1 && hi > 1)
}

/// Draws `x_i` uniform columns for each shadow.
pub fn random_shadows(strands: usize, x: &[usize], seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    x.iter().map(|&len| (0..len).map(|_| rng.gen_range(1..strands)).collect()).collect()
}

impl GeneratorSpec {
    fn resolve_shadows(&self) -> Result<Vec<Vec<usize>>, GeneratorError> {
        let n = self.strands;
        if self.k >= 1 && n < 3 {
            return Err(GeneratorError::TooFewStrands(n));
        }
        if n < 2 {
            return Err(GeneratorError::TooFewStrands(n));
        }
        if self.x.len() != self.k + 1 {
            return Err(GeneratorError::ShadowCount { expected: self.k + 1, got: self.x.len() });
        }
        let shadows = if !self.shadows.is_empty() {
            if self.shadows.len() != self.k + 1 {
                return Err(GeneratorError::ShadowCount {
                    expected: self.k + 1,
                    got: self.shadows.len(),
                });
            }
            for (index, (s, &len)) in self.shadows.iter().zip(&self.x).enumerate() {
                if s.len() != len {
                    return Err(GeneratorError::ShadowLength { index, got: s.len(), expected: len });
                }
            }
            self.shadows.clone()
        } else {
            let seed = self.seed.ok_or(GeneratorError::NoShadowSource)?;
            random_shadows(n, &self.x, seed)
        };
        if let Some(&column) = shadows.iter().flatten().find(|&&c| c == 0 || c >= n) {
            return Err(GeneratorError::ColumnOutOfRange { column, strands: n });
        }
        Ok(shadows)
    }
}

/// Builds `W` and its certificate, which is verified before returning.
pub fn construct(spec: &GeneratorSpec) -> Result<GeneratedWord, GeneratorError> {
    let shadows = spec.resolve_shadows()?;
    let n = spec.strands;
    let w = if spec.k >= 1 { Some(build_w(n)?) } else { None };
    // at[p] = strand (0-based top position) currently at 0-based position p
    let mut at: Vec<usize> = (0..n).collect();
    let mut letters = Vec::new();
    let mut routing_lengths = Vec::with_capacity(spec.k + 1);

    let cross = |column: usize, at: &mut Vec<usize>, letters: &mut Vec<Letter>| {
        let positive = forced_sign(at[column - 1], at[column]);
        letters.push(Letter::new(column, positive));
        at.swap(column - 1, column);
    };

    for (i, shadow) in shadows.iter().enumerate() {
        for &column in shadow {
            cross(column, &mut at, &mut letters);
        }
        let before = letters.len();
        for (strand, target) in [(0, 0), (1, 1)] {
            if n <= target {
                break;
            }
            let mut p = at.iter().position(|&s| s == strand).expect("strand present");
            while p > target {
                cross(p, &mut at, &mut letters);
                p -= 1;
            }
        }
        routing_lengths.push(letters.len() - before);
        if i < spec.k {
            for &l in w.as_ref().expect("k >= 1").letters() {
                letters.push(l);
                at.swap(l.index() - 1, l.index());
            }
        }
    }

    let word = BraidWord::new(n, letters).expect("columns checked");
    let certificate = if n >= 3 { k_regular_certificate(&word, 3) } else { k_regular_certificate(&word, 2) };
    let report = verify_winding(&certificate, &[])?;
    if !report.valid {
        return Err(GeneratorError::CertificateFailed(report.first_failing_subset));
    }
    Ok(GeneratedWord { word, certificate, shadows, routing_lengths })
}

/// Lower bound on the number of distinct length-`m` outputs with `k`
/// copies of `w`:
///
/// `floor(prod_{j=1..k} (m - t - j(4n-4)) / k!) * (n-1)^d`,
///
/// where `t = (k+1)(n-1)(n-2)/2` bounds the routing crossings and
/// `d = m - t - k(4n-4)` is the number of free shadow crossings. Zero when
/// `d < 0`.
pub fn lower_bound_count(strands: usize, k: usize, m: usize) -> BigUint {
    if strands < 3 {
        return BigUint::zero();
    }
    let wlen = 4 * strands - 4;
    let t = (k + 1) * (strands - 1) * (strands - 2) / 2;
    let Some(d) = m.checked_sub(t + k * wlen) else {
        return BigUint::zero();
    };
    let mut product = BigUint::one();
    let mut factorial = BigUint::one();
    for j in 1..=k {
        product *= BigUint::from(m - t - j * wlen);
        factorial *= BigUint::from(j);
    }
    product / factorial * BigUint::from(strands - 1).pow(d as u32)
}

/// Smallest word length from which a construction with `k` copies of `w`
/// is guaranteed to fit, `(k+1)(n-1)(n-2)/2 + k(4n-4) + k + 1`.
pub fn threshold(strands: usize, k: usize) -> usize {
    (k + 1) * (strands - 1) * (strands - 2) / 2 + k * (4 * strands - 4) + k + 1
}
