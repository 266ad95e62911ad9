//! Bernoulli numbers in the topologists' convention:
//!
//! ```text
//! z/(e^z - 1) + z/2 = 1 + sum_{n>=1} (-1)^(n-1) B_n z^(2n) / (2n)!
//! ```
//!
//! so every `B_n` is positive: `B_1 = 1/6`, `B_2 = 1/30`, `B_3 = 1/42`.
//! The primary algorithm is the power-series inversion of
//! `(e^z - 1)/z = sum z^k/(k+1)!`.

use std::sync::RwLock;

use num_bigint::BigInt;
use serde::Serialize;

use super::fraction::{factorial, ExactFraction};
use crate::error::{Error, Result};

/// Coefficients `c_0, c_1, ...` of `z/(e^z - 1)`, grown on demand.
static SERIES: RwLock<Vec<ExactFraction>> = RwLock::new(Vec::new());

fn extend_series(series: &mut Vec<ExactFraction>, order: usize) {
    if series.is_empty() {
        series.push(ExactFraction::one());
    }
    while series.len() <= order {
        let m = series.len();
        // c_m = -sum_{k=1}^m c_{m-k} / (k+1)!
        let c: ExactFraction = (1..=m)
            .map(|k| &series[m - k] * &ExactFraction::inv_factorial(k as u32 + 1))
            .sum();
        series.push(-c);
    }
}

/// Coefficients of `z/(e^z - 1)` through `z^order`.
pub fn inverse_exp_series(order: usize) -> Vec<ExactFraction> {
    {
        let guard = SERIES.read().unwrap_or_else(|e| e.into_inner());
        if guard.len() > order {
            return guard[..=order].to_vec();
        }
    }
    let mut guard = SERIES.write().unwrap_or_else(|e| e.into_inner());
    extend_series(&mut guard, order);
    guard[..=order].to_vec()
}

fn from_series(n: usize, c2n: &ExactFraction) -> ExactFraction {
    let b = c2n * &ExactFraction::from(factorial(2 * n as u32));
    if n % 2 == 1 {
        b
    } else {
        -b
    }
}

/// `B_n`, `n >= 1`.
pub fn bernoulli(n: usize) -> Result<ExactFraction> {
    if n == 0 {
        return Err(Error::Domain("Bernoulli numbers are indexed from B_1".into()));
    }
    let series = inverse_exp_series(2 * n);
    Ok(from_series(n, &series[2 * n]))
}

/// Numerator and denominator of `B_n / 2n` in lowest terms.
pub fn num_denom(n: usize) -> Result<(BigInt, BigInt)> {
    let b = bernoulli(n)?;
    let q = b / ExactFraction::from(2 * n as i64);
    Ok((q.numer().clone(), q.denom().clone()))
}

/// `B_1, ..., B_max_index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BernoulliTable {
    pub max_index: usize,
    values: Vec<ExactFraction>,
}

impl BernoulliTable {
    pub fn new(max_index: usize) -> Result<Self> {
        if max_index == 0 {
            return Err(Error::Domain("table needs at least B_1".into()));
        }
        let series = inverse_exp_series(2 * max_index);
        let values = (1..=max_index).map(|n| from_series(n, &series[2 * n])).collect();
        Ok(Self { max_index, values })
    }

    /// `B_n` for `1 <= n <= max_index`.
    pub fn get(&self, n: usize) -> Option<&ExactFraction> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[ExactFraction] {
        &self.values
    }

    /// Coefficients of `1 + sum (-1)^(n-1) B_n z^(2n)/(2n)! - z/2` through
    /// `z^(2 max_index)`: the series `z/(e^z - 1)` rebuilt from the table.
    pub fn rebuild_series(&self) -> Vec<ExactFraction> {
        let order = 2 * self.max_index;
        let mut out = vec![ExactFraction::zero(); order + 1];
        out[0] = ExactFraction::one();
        out[1] = ExactFraction::new(-1, 2).expect("nonzero");
        for (i, b) in self.values.iter().enumerate() {
            let n = i + 1;
            let term = b * &ExactFraction::inv_factorial(2 * n as u32);
            out[2 * n] = if n % 2 == 1 { term } else { -term };
        }
        out
    }

    /// Whether the table reproduces the generating series exactly. Returns
    /// the first mismatching power of `z` otherwise.
    pub fn check_generating_series(&self) -> std::result::Result<(), usize> {
        let expected = inverse_exp_series(2 * self.max_index);
        match self
            .rebuild_series()
            .iter()
            .zip(&expected)
            .position(|(a, b)| a != b)
        {
            None => Ok(()),
            Some(i) => Err(i),
        }
    }
}
