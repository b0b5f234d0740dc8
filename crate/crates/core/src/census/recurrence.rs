//! Exact fitting of integer linear recurrences `T(m) = Σ c_k T(m-k)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::CensusError;

/// Equations beyond the ones used to solve for the coefficients that a
/// fit must also satisfy.
const HELD_OUT: usize = 2;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Recurrence {
    /// `c_1..c_d`.
    pub coefficients: Vec<i64>,
    /// First `m` at which the relation holds.
    pub valid_from: usize,
}

impl Recurrence {
    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    /// Next term after `terms`.
    pub fn predict(&self, terms: &[u64]) -> i128 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, &c)| c as i128 * terms[terms.len() - 1 - k] as i128)
            .sum()
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T(m) =")?;
        let mut first = true;
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sep = match (first, c < 0) {
                (true, true) => " -",
                (true, false) => "",
                (false, true) => " -",
                (false, false) => " +",
            };
            let mag = c.unsigned_abs();
            let coef = if mag == 1 { String::new() } else { format!("{mag}*") };
            write!(f, "{sep} {coef}T(m-{})", k + 1)?;
            first = false;
        }
        if first {
            write!(f, " 0")?;
        }
        write!(f, " for m >= {}", self.valid_from)
    }
}

/// Solves the square system by Gauss–Jordan elimination; `None` when it is
/// singular.
fn solve(mut rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let d = rows.len();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let p = rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &factor * y;
                }
            }
        }
    }
    Some(rows.into_iter().map(|row| row[d].clone()).collect())
}

/// Smallest-degree integer recurrence consistent with every term from
/// some starting point. Among fits of equal degree the earliest start
/// wins. The coefficients come from `d` equations and must hold on at
/// least two further ones.
pub fn fit_recurrence(terms: &[u64], max_degree: usize) -> Result<Option<Recurrence>, CensusError> {
    let needed = 2 * max_degree + 2;
    if terms.len() < needed {
        return Err(CensusError::InsufficientTerms { needed, got: terms.len() });
    }
    let t: Vec<BigInt> = terms.iter().map(|&x| BigInt::from(x)).collect();
    for d in 1..=max_degree {
        // equations m = s+d .. len-1; the first d determine the coefficients
        let mut s = 0;
        while s + 2 * d + HELD_OUT <= terms.len() {
            let rows: Vec<Vec<BigRational>> = (s + d..s + 2 * d)
                .map(|m| {
                    let mut row: Vec<BigRational> =
                        (1..=d).map(|k| BigRational::from_integer(t[m - k].clone())).collect();
                    row.push(BigRational::from_integer(t[m].clone()));
                    row
                })
                .collect();
            if let Some(c) = solve(rows) {
                if c.iter().all(|x| x.denom().is_one()) {
                    let ints: Vec<BigInt> = c.iter().map(|x| x.numer().clone()).collect();
                    let holds = (s + 2 * d..terms.len()).all(|m| {
                        let sum: BigInt = (1..=d).map(|k| &ints[k - 1] * &t[m - k]).sum();
                        sum == t[m]
                    });
                    if holds && ints.iter().all(|x| x.abs() <= BigInt::from(i64::MAX)) {
                        return Ok(Some(Recurrence {
                            coefficients: ints.iter().map(|x| x.to_i64().expect("bounded")).collect(),
                            valid_from: s + d,
                        }));
                    }
                }
            }
            s += 1;
        }
    }
    Ok(None)
}
