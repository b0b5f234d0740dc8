//! Winding certificates: a family of strand subsets such that every pair of
//! strands is covered exactly `m` times, each subset carrying evidence that
//! its subdiagram is geodesic. A valid certificate proves the whole word is
//! geodesic, because the crossing counts of the subdiagrams add up to `m`
//! times the crossing count of the word.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geodesy::{b3_letters_geodesic, BallTable, GeodesyError};
use crate::word::{BraidWord, Letter, WordError};

/// Nested certificates deeper than this are rejected.
pub const MAX_NESTING: usize = 8;

#[derive(Debug, Error)]
pub enum WindingError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("strands {0} and {1} are covered {2} times, expected {3}")]
    Coverage(usize, usize, usize, usize),
    #[error("oracle evidence on {0} strands needs a ball for that strand count")]
    MissingBall(usize),
    #[error("certificate nesting deeper than {MAX_NESTING}")]
    TooDeep,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Geodesy(#[from] GeodesyError),
}

/// Why a subdiagram is geodesic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Evidence {
    /// The subdiagram is homogeneous.
    Homogeneous,
    /// At most 3 strands, checked by the closed-form recognizer.
    B3,
    /// Checked against a ball table.
    Oracle,
    /// A certificate for the subdiagram itself.
    Nested(Box<WindingCertificate>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindingCertificate {
    pub word: BraidWord,
    pub multiplicity: usize,
    pub subsets: Vec<Vec<usize>>,
    pub evidence: Vec<Evidence>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WindingReport {
    pub valid: bool,
    pub first_failing_subset: Option<usize>,
    pub subdiagram_lengths: Vec<usize>,
    pub total: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum EvidenceJson {
    Homogeneous,
    B3,
    Oracle,
    Nested(Box<CertificateJson>),
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    word: String,
    strands: usize,
    m: usize,
    subsets: Vec<Vec<usize>>,
    evidence: Vec<EvidenceJson>,
}

impl WindingCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_repr()).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, WindingError> {
        let repr: CertificateJson = serde_json::from_value(value.clone())
            .map_err(|e| WindingError::Malformed(e.to_string()))?;
        Self::from_repr(repr)
    }

    fn to_repr(&self) -> CertificateJson {
        CertificateJson {
            word: self.word.render(),
            strands: self.word.strands(),
            m: self.multiplicity,
            subsets: self.subsets.clone(),
            evidence: self
                .evidence
                .iter()
                .map(|e| match e {
                    Evidence::Homogeneous => EvidenceJson::Homogeneous,
                    Evidence::B3 => EvidenceJson::B3,
                    Evidence::Oracle => EvidenceJson::Oracle,
                    Evidence::Nested(c) => EvidenceJson::Nested(Box::new(c.to_repr())),
                })
                .collect(),
        }
    }

    fn from_repr(repr: CertificateJson) -> Result<Self, WindingError> {
        let word = BraidWord::parse(&repr.word, repr.strands)?;
        let evidence = repr
            .evidence
            .into_iter()
            .map(|e| {
                Ok(match e {
                    EvidenceJson::Homogeneous => Evidence::Homogeneous,
                    EvidenceJson::B3 => Evidence::B3,
                    EvidenceJson::Oracle => Evidence::Oracle,
                    EvidenceJson::Nested(c) => Evidence::Nested(Box::new(Self::from_repr(*c)?)),
                })
            })
            .collect::<Result<_, WindingError>>()?;
        Ok(WindingCertificate { word, multiplicity: repr.m, subsets: repr.subsets, evidence })
    }
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - (k - 1 - i)) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The certificate for k-regular winding: every `k`-subset of strands, each
/// checked by the 3-strand recognizer (or homogeneity when `k <= 2`).
pub fn k_regular_certificate(word: &BraidWord, k: usize) -> WindingCertificate {
    let n = word.strands();
    let evidence = if k >= 3 { Evidence::B3 } else { Evidence::Homogeneous };
    let subsets = combinations(n, k);
    WindingCertificate {
        word: word.clone(),
        multiplicity: binomial(n.saturating_sub(2), k.saturating_sub(2)),
        evidence: vec![evidence; subsets.len()],
        subsets,
    }
}

/// True when every `k`-strand subdiagram is geodesic. Subdiagrams with 3
/// strands go through the closed-form recognizer, memoized by letters;
/// larger ones need `ball`.
pub fn k_regular_check(
    word: &BraidWord,
    k: usize,
    ball: Option<&BallTable>,
) -> Result<bool, WindingError> {
    if k < 2 || k > word.strands() {
        return Err(WindingError::Malformed(format!("k = {k} on {} strands", word.strands())));
    }
    let mut memo: HashMap<Vec<Letter>, bool> = HashMap::new();
    for subset in combinations(word.strands(), k) {
        let sub = word.subdiagram(&subset)?;
        let ok = match k {
            2 => sub.is_homogeneous(),
            3 => *memo
                .entry(sub.letters().to_vec())
                .or_insert_with(|| sub.is_freely_reduced() && b3_letters_geodesic(sub.letters())),
            _ => match ball {
                Some(b) if b.strands() == k => b.is_geodesic(&sub)?,
                _ => return Err(WindingError::MissingBall(k)),
            },
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks coverage and every piece of evidence. Coverage and structural
/// problems are errors; failing evidence yields `valid = false` with the
/// index of the first failing subset.
pub fn verify_winding(
    cert: &WindingCertificate,
    balls: &[&BallTable],
) -> Result<WindingReport, WindingError> {
    verify_at_depth(cert, balls, 0)
}

fn verify_at_depth(
    cert: &WindingCertificate,
    balls: &[&BallTable],
    depth: usize,
) -> Result<WindingReport, WindingError> {
    if depth > MAX_NESTING {
        return Err(WindingError::TooDeep);
    }
    let n = cert.word.strands();
    if cert.multiplicity == 0 {
        return Err(WindingError::Malformed("multiplicity must be positive".into()));
    }
    if cert.subsets.len() != cert.evidence.len() {
        return Err(WindingError::Malformed(format!(
            "{} subsets but {} evidence entries",
            cert.subsets.len(),
            cert.evidence.len()
        )));
    }
    let mut cover = vec![vec![0usize; n + 1]; n + 1];
    for subset in &cert.subsets {
        let mut sorted = subset.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() || sorted.is_empty() {
            return Err(WindingError::Malformed(format!("bad subset {subset:?}")));
        }
        if let Some(&s) = sorted.iter().find(|&&s| s == 0 || s > n) {
            return Err(WindingError::Malformed(format!("strand {s} out of range")));
        }
        for (x, &i) in sorted.iter().enumerate() {
            for &j in &sorted[x + 1..] {
                cover[i][j] += 1;
            }
        }
    }
    for (i, row) in cover.iter().enumerate().skip(1) {
        for (j, &c) in row.iter().enumerate().skip(i + 1) {
            if c != cert.multiplicity {
                return Err(WindingError::Coverage(i, j, c, cert.multiplicity));
            }
        }
    }

    let mut lengths = Vec::with_capacity(cert.subsets.len());
    let mut failing = None;
    for (idx, (subset, evidence)) in cert.subsets.iter().zip(&cert.evidence).enumerate() {
        let sub = cert.word.subdiagram(subset)?;
        lengths.push(sub.len());
        if failing.is_some() {
            continue;
        }
        let ok = match evidence {
            Evidence::Homogeneous => sub.is_homogeneous(),
            Evidence::B3 => match sub.strands() {
                1 => true,
                2 => sub.is_homogeneous(),
                3 => sub.is_freely_reduced() && b3_letters_geodesic(sub.letters()),
                k => return Err(WindingError::Malformed(format!("b3 evidence on {k} strands"))),
            },
            Evidence::Oracle => {
                let ball = balls
                    .iter()
                    .find(|b| b.strands() == sub.strands())
                    .ok_or(WindingError::MissingBall(sub.strands()))?;
                ball.is_geodesic(&sub)?
            }
            Evidence::Nested(inner) => {
                inner.word == sub && verify_at_depth(inner, balls, depth + 1)?.valid
            }
        };
        if !ok {
            failing = Some(idx);
        }
    }
    let total: usize = lengths.iter().sum();
    if failing.is_none() {
        // the counting identity behind the certificate
        assert_eq!(total, cert.multiplicity * cert.word.len(), "subdiagram lengths do not add up");
    }
    Ok(WindingReport {
        valid: failing.is_none(),
        first_failing_subset: failing,
        subdiagram_lengths: lengths,
        total,
    })
}
