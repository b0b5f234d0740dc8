//! Growth series, trace-monoid counts, recurrence fitting and bounded
//! conjecture scans.

mod growth;
mod recurrence;
mod scan;
mod trace;

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::geodesy::GeodesyError;

pub use growth::{
    alternating_growth_by_blocks, class_growth, element_growth, for_each_class_word,
    geodesic_growth, homogeneous_word_count, WordClass,
};
pub use recurrence::{fit_recurrence, Recurrence};
pub use scan::{conjecture_scan, lemma_conditions, ConjectureReport, ScanId, ScanOptions, ScanStatus, Witness};
pub use trace::{trace_growth, trace_growth_brute, trace_growth_moebius, MoebiusPolynomial};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("ball radius {radius} is smaller than the requested length {needed}")]
    InsufficientBall { radius: usize, needed: usize },
    #[error("ball is for {ball} strands, expected {expected}")]
    StrandMismatch { ball: usize, expected: usize },
    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("brute-force and Möbius trace counts disagree at length {0}")]
    Disagreement(usize),
    #[error("need at least {0} strands")]
    TooFewStrands(usize),
    #[error("unknown conjecture id `{0}`")]
    UnknownScan(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Geodesy(#[from] GeodesyError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    GammaElements,
    GammaGeodesics,
    Positive,
    Alternating,
    Homogeneous,
    Trace,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::GammaElements => "gamma_elements",
            SeriesKind::GammaGeodesics => "gamma_geodesics",
            SeriesKind::Positive => "positive",
            SeriesKind::Alternating => "alternating",
            SeriesKind::Homogeneous => "homogeneous",
            SeriesKind::Trace => "trace",
        }
    }
}

/// Counts indexed by length `m = 0..=L`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GrowthSeries {
    pub kind: SeriesKind,
    pub strands: usize,
    pub counts: Vec<u64>,
    pub exact: bool,
}

impl GrowthSeries {
    /// `counts(m+1) / counts(m)`.
    pub fn ratio(&self, m: usize) -> f64 {
        self.counts[m + 1] as f64 / self.counts[m] as f64
    }
}

/// One row per length, one column per series. Series must share a length.
pub fn to_csv(series: &[GrowthSeries]) -> String {
    let mut out = String::from("m");
    for s in series {
        write!(out, ",{}", s.kind.name()).expect("string write");
    }
    out.push('\n');
    let rows = series.iter().map(|s| s.counts.len()).min().unwrap_or(0);
    for m in 0..rows {
        write!(out, "{m}").expect("string write");
        for s in series {
            write!(out, ",{}", s.counts[m]).expect("string write");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let a = GrowthSeries { kind: SeriesKind::Trace, strands: 2, counts: vec![1, 1, 1], exact: true };
        let b = GrowthSeries { kind: SeriesKind::Positive, strands: 2, counts: vec![1, 1, 1], exact: true };
        assert_eq!(to_csv(&[a, b]), "m,trace,positive\n0,1,1\n1,1,1\n2,1,1\n");
    }
}
