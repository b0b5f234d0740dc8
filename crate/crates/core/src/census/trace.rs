//! Counting elements of the trace monoid `⟨a_1..a_g | a_i a_j = a_j a_i,
//! |i-j| >= 2⟩`, once by enumerating lexicographic normal forms and once
//! by inverting its Möbius polynomial.

use rayon::prelude::*;
use serde::Serialize;

use super::{CensusError, GrowthSeries, SeriesKind};

/// `μ(z) = Σ_C (-1)^{|C|} z^{|C|}` over sets `C` of pairwise commuting
/// generators. On a path of `g` generators there are `C(g-k+1, k)` such
/// sets of size `k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MoebiusPolynomial {
    pub coefficients: Vec<i64>,
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

impl MoebiusPolynomial {
    pub fn for_path(generators: usize) -> Self {
        let g = generators as i64;
        let coefficients = (0..=(g + 1) / 2)
            .map(|k| if k % 2 == 0 { 1 } else { -1 } * binomial(g - k + 1, k))
            .collect();
        MoebiusPolynomial { coefficients }
    }

    /// Coefficients of `1/μ(z)` up to `z^len`.
    pub fn inverse_series(&self, len: usize) -> Vec<i128> {
        let mut out = vec![0i128; len + 1];
        out[0] = 1;
        for m in 1..=len {
            let mut acc = 0i128;
            for (k, &c) in self.coefficients.iter().enumerate().skip(1) {
                if k > m {
                    break;
                }
                acc -= c as i128 * out[m - k];
            }
            out[m] = acc;
        }
        out
    }
}

pub fn trace_growth_moebius(strands: usize, max_len: usize) -> Result<GrowthSeries, CensusError> {
    if strands < 2 {
        return Err(CensusError::TooFewStrands(2));
    }
    let counts = MoebiusPolynomial::for_path(strands - 1)
        .inverse_series(max_len)
        .into_iter()
        .map(|c| u64::try_from(c).expect("trace counts are nonnegative and fit u64"))
        .collect();
    Ok(GrowthSeries { kind: SeriesKind::Trace, strands, counts, exact: true })
}

/// Appending `a` keeps a word in lexicographic normal form unless some
/// larger letter can be reached from the end through letters commuting
/// with `a`.
fn extends(word: &[u8], a: u8) -> bool {
    for &c in word.iter().rev() {
        if c.abs_diff(a) <= 1 {
            return true;
        }
        if c > a {
            return false;
        }
    }
    true
}

fn count_from(word: &mut Vec<u8>, generators: u8, max_len: usize, counts: &mut [u64]) {
    counts[word.len()] += 1;
    if word.len() == max_len {
        return;
    }
    for a in 1..=generators {
        if extends(word, a) {
            word.push(a);
            count_from(word, generators, max_len, counts);
            word.pop();
        }
    }
}

pub fn trace_growth_brute(strands: usize, max_len: usize) -> Result<GrowthSeries, CensusError> {
    if strands < 2 {
        return Err(CensusError::TooFewStrands(2));
    }
    let g = (strands - 1) as u8;
    let mut counts = vec![0u64; max_len + 1];
    counts[0] = 1;
    if max_len > 0 {
        let parts: Vec<Vec<u64>> = (1..=g)
            .into_par_iter()
            .map(|a| {
                let mut local = vec![0u64; max_len + 1];
                count_from(&mut vec![a], g, max_len, &mut local);
                local
            })
            .collect();
        for part in parts {
            for (c, p) in counts.iter_mut().zip(part) {
                *c += p;
            }
        }
    }
    Ok(GrowthSeries { kind: SeriesKind::Trace, strands, counts, exact: true })
}

/// Both counts, which must agree term by term.
pub fn trace_growth(
    strands: usize,
    max_len: usize,
) -> Result<(GrowthSeries, MoebiusPolynomial), CensusError> {
    let brute = trace_growth_brute(strands, max_len)?;
    let moebius = trace_growth_moebius(strands, max_len)?;
    if let Some(m) = (0..=max_len).find(|&m| brute.counts[m] != moebius.counts[m]) {
        return Err(CensusError::Disagreement(m));
    }
    Ok((brute, MoebiusPolynomial::for_path(strands - 1)))
}
