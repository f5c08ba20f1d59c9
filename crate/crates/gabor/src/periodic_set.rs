//! N-periodic subsets of the integers, stored by their residues mod N.

use crate::error::{GaborError, Result};

/// An N-periodic subset of the integers.
///
/// Membership is invariant under translation by the period, so the set is
/// fully described by its sorted residues in `[0, period)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicSet {
    period: i64,
    residues: Vec<i64>,
}

impl PeriodicSet {
    /// Builds a set from a period and an arbitrary list of representatives.
    /// Representatives are reduced mod the period, deduplicated and sorted.
    pub fn new(period: i64, residues: &[i64]) -> Result<Self> {
        if period < 1 {
            return Err(GaborError::InvalidSet(format!("period {period} < 1")));
        }
        if residues.is_empty() {
            return Err(GaborError::InvalidSet("empty residue list".into()));
        }
        let mut reduced: Vec<i64> = residues.iter().map(|r| r.rem_euclid(period)).collect();
        reduced.sort_unstable();
        reduced.dedup();
        Ok(Self { period, residues: reduced })
    }

    /// The full line, i.e. every integer.
    pub fn full_line() -> Self {
        Self { period: 1, residues: vec![0] }
    }

    pub fn period(&self) -> i64 {
        self.period
    }

    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    pub fn contains(&self, j: i64) -> bool {
        self.residues.binary_search(&j.rem_euclid(self.period)).is_ok()
    }

    /// Cardinality of the truncation to `{0, ..., k-1}`.
    pub fn truncation_cardinality(&self, k: i64) -> i64 {
        assert!(k >= 1, "truncation length must be positive");
        let full = k / self.period;
        let rest = k % self.period;
        let partial = self.residues.iter().filter(|&&r| r < rest).count() as i64;
        full * self.residues.len() as i64 + partial
    }

    /// Re-expresses the set with a period that is a multiple of the current one.
    pub fn with_period(&self, new_period: i64) -> Result<Self> {
        if new_period < 1 || new_period % self.period != 0 {
            return Err(GaborError::InvalidSet(format!(
                "period {new_period} is not a multiple of {}",
                self.period
            )));
        }
        let mut residues = Vec::new();
        for block in 0..new_period / self.period {
            for &r in &self.residues {
                residues.push(block * self.period + r);
            }
        }
        residues.sort_unstable();
        Ok(Self { period: new_period, residues })
    }

    /// True when the set is all of the integers.
    pub fn is_full_line(&self) -> bool {
        self.residues.len() as i64 == self.period
    }

    /// Members of the set inside `[lo, hi]`, in increasing order.
    pub fn members_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        let mut out = Vec::new();
        for j in lo..=hi {
            if self.contains(j) {
                out.push(j);
            }
        }
        out
    }
}
