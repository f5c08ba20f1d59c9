//! JSON representations of sets, windows, systems and operators.
//!
//! Complex numbers are `[re, im]` pairs; a missing `set` means the full line.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GaborError, Result};
use crate::kframe::KOperator;
use crate::periodic_set::PeriodicSet;
use crate::signal::{GaborSystem, Window};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetDto {
    pub period: i64,
    pub residues: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowDto {
    pub offset: i64,
    pub values: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemDto {
    /// Modulation order M.
    pub m: i64,
    /// Translation step N.
    pub n: i64,
    /// Index set; omitted means the full line.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<SetDto>,
    pub windows: Vec<WindowDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KOperatorDto {
    /// Dense square matrix, row-major, entries `[re, im]`.
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl From<&PeriodicSet> for SetDto {
    fn from(set: &PeriodicSet) -> Self {
        Self { period: set.period(), residues: set.residues().to_vec() }
    }
}

impl TryFrom<&SetDto> for PeriodicSet {
    type Error = GaborError;

    fn try_from(dto: &SetDto) -> Result<Self> {
        PeriodicSet::new(dto.period, &dto.residues)
    }
}

impl From<&Window> for WindowDto {
    fn from(w: &Window) -> Self {
        match w.support() {
            None => Self { offset: 0, values: Vec::new() },
            Some((lo, hi)) => Self {
                offset: lo,
                values: (lo..=hi).map(|j| [w.value(j).re, w.value(j).im]).collect(),
            },
        }
    }
}

impl From<&WindowDto> for Window {
    fn from(dto: &WindowDto) -> Self {
        Window::new(
            dto.offset,
            dto.values.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
        )
    }
}

impl From<&GaborSystem> for SystemDto {
    fn from(sys: &GaborSystem) -> Self {
        Self {
            m: sys.modulation_order(),
            n: sys.translation_step(),
            set: (!sys.set().is_full_line()).then(|| sys.set().into()),
            windows: sys.windows().iter().map(WindowDto::from).collect(),
        }
    }
}

impl TryFrom<&SystemDto> for GaborSystem {
    type Error = GaborError;

    fn try_from(dto: &SystemDto) -> Result<Self> {
        let set = match &dto.set {
            Some(s) => PeriodicSet::try_from(s)?,
            None => PeriodicSet::full_line(),
        };
        GaborSystem::new(dto.m, dto.n, set, dto.windows.iter().map(Window::from).collect())
    }
}

impl From<&KOperator> for KOperatorDto {
    fn from(op: &KOperator) -> Self {
        let matrix = (0..op.matrix.nrows())
            .map(|i| {
                (0..op.matrix.ncols())
                    .map(|j| [op.matrix[(i, j)].re, op.matrix[(i, j)].im])
                    .collect()
            })
            .collect();
        Self { matrix }
    }
}

impl TryFrom<&KOperatorDto> for KOperator {
    type Error = GaborError;

    fn try_from(dto: &KOperatorDto) -> Result<Self> {
        let rows = dto.matrix.len();
        if rows == 0 || dto.matrix.iter().any(|r| r.len() != rows) {
            return Err(GaborError::DimensionMismatch(format!(
                "operator matrix must be square and nonempty; got {rows} rows"
            )));
        }
        let matrix = DMatrix::from_fn(rows, rows, |i, j| {
            Complex64::new(dto.matrix[i][j][0], dto.matrix[i][j][1])
        });
        Ok(KOperator { matrix })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_a;

    #[test]
    fn system_round_trip() {
        let sys = example_a();
        let dto = SystemDto::from(&sys);
        let json = serde_json::to_string(&dto).unwrap();
        let parsed: SystemDto = serde_json::from_str(&json).unwrap();
        let back = GaborSystem::try_from(&parsed).unwrap();
        assert!(sys.same_parameters(&back));
        for (a, b) in sys.windows().iter().zip(back.windows()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn restricted_set_round_trip() {
        let set = PeriodicSet::new(3, &[0, 2]).unwrap();
        let sys = GaborSystem::new(2, 3, set, vec![Window::delta(2)]).unwrap();
        let dto = SystemDto::from(&sys);
        assert!(dto.set.is_some());
        let back = GaborSystem::try_from(&dto).unwrap();
        assert!(sys.same_parameters(&back));
    }

    #[test]
    fn operator_round_trip_and_validation() {
        let op = KOperator::identity(3);
        let dto = KOperatorDto::from(&op);
        let back = KOperator::try_from(&dto).unwrap();
        assert!((&op.matrix - &back.matrix).norm() <= 1e-15);
        let ragged = KOperatorDto { matrix: vec![vec![[1.0, 0.0]], vec![]] };
        assert!(KOperator::try_from(&ragged).is_err());
    }
}
