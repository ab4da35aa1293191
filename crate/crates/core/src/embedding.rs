//! Turning a feature's co-occurrence counts with the class into a two-register
//! state `Σ a(i,j) |x_i y_j⟩` and the density operators derived from it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{partial_trace, DensityOperator, Subsystem};
use crate::order::{natural_cmp, sorted_distinct};

/// Joint counts `n(i, j)` of feature value `i` with class label `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    values: Vec<String>,
    labels: Vec<String>,
    /// Row-major `values.len() × labels.len()`.
    counts: Vec<u64>,
}

impl ContingencyTable {
    /// Tallies paired columns. Values and labels are ordered with
    /// [`natural_cmp`].
    pub fn build<V, L>(feature: &[V], labels: &[L]) -> Result<Self>
    where
        V: AsRef<str>,
        L: AsRef<str>,
    {
        if feature.len() != labels.len() {
            return Err(Error::LengthMismatch {
                features: feature.len(),
                labels: labels.len(),
            });
        }
        if feature.is_empty() {
            return Err(Error::AllZeroCounts);
        }
        let values = sorted_distinct(feature.iter().map(AsRef::as_ref));
        let label_set = sorted_distinct(labels.iter().map(AsRef::as_ref));
        let mut table = ContingencyTable {
            counts: vec![0; values.len() * label_set.len()],
            values,
            labels: label_set,
        };
        for (v, l) in feature.iter().zip(labels) {
            let i = table.value_index(v.as_ref()).expect("value was collected");
            let j = table.label_index(l.as_ref()).expect("label was collected");
            table.counts[i * table.labels.len() + j] += 1;
        }
        Ok(table)
    }

    /// Builds a table directly from counts, for tests and callers that
    /// already hold aggregated statistics.
    pub fn from_counts(values: Vec<String>, labels: Vec<String>, counts: Vec<Vec<u64>>) -> Result<Self> {
        if values.is_empty() || labels.is_empty() {
            return Err(Error::AllZeroCounts);
        }
        if counts.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: values.len(),
                actual: counts.len(),
            });
        }
        if let Some(row) = counts.iter().find(|r| r.len() != labels.len()) {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                actual: row.len(),
            });
        }
        Ok(ContingencyTable {
            values,
            labels,
            counts: counts.into_iter().flatten().collect(),
        })
    }

    fn value_index(&self, v: &str) -> Option<usize> {
        self.values.binary_search_by(|x| natural_cmp(x, v)).ok()
    }

    fn label_index(&self, l: &str) -> Option<usize> {
        self.labels.binary_search_by(|x| natural_cmp(x, l)).ok()
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_values(&self) -> usize {
        self.values.len()
    }

    pub fn num_labels(&self) -> usize {
        self.labels.len()
    }

    pub fn count(&self, value: usize, label: usize) -> u64 {
        self.counts[value * self.labels.len() + label]
    }

    pub fn row(&self, value: usize) -> &[u64] {
        let m = self.labels.len();
        &self.counts[value * m..(value + 1) * m]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.counts.chunks(self.labels.len())
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Per-label totals.
    pub fn label_totals(&self) -> Vec<u64> {
        let m = self.labels.len();
        let mut out = vec![0; m];
        for row in self.rows() {
            for (o, c) in out.iter_mut().zip(row) {
                *o += c;
            }
        }
        debug_assert_eq!(out.len(), m);
        out
    }

    /// A feature that takes a single value carries no split information.
    pub fn is_constant(&self) -> bool {
        self.values.len() < 2
    }
}

/// How raw counts become amplitudes before normalization.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmplitudeMode {
    /// `a(i, j) ∝ n(i, j)`.
    #[default]
    Joint,
    /// `a(i, j) ∝ n(i, j) / Σ_j n(i, j)`.
    Conditional,
}

impl AmplitudeMode {
    pub fn as_str(self) -> &'static str {
        match self {
            AmplitudeMode::Joint => "joint",
            AmplitudeMode::Conditional => "conditional",
        }
    }
}

impl std::str::FromStr for AmplitudeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "joint" => Ok(AmplitudeMode::Joint),
            "conditional" => Ok(AmplitudeMode::Conditional),
            other => Err(Error::InvalidConfig(format!("unknown amplitude mode {other:?}"))),
        }
    }
}

/// Unit-norm, nonnegative amplitudes over `|x_i y_j⟩`, index `i * dim_y + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeState {
    dim_x: usize,
    dim_y: usize,
    amplitudes: Vec<f64>,
}

impl AmplitudeState {
    pub fn dims(&self) -> (usize, usize) {
        (self.dim_x, self.dim_y)
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }
}

pub fn embed_state(table: &ContingencyTable, mode: AmplitudeMode) -> Result<AmplitudeState> {
    let mut amplitudes: Vec<f64> = match mode {
        AmplitudeMode::Joint => table.counts.iter().map(|&c| c as f64).collect(),
        AmplitudeMode::Conditional => table
            .rows()
            .flat_map(|row| {
                let total: u64 = row.iter().sum();
                row.iter()
                    .map(move |&c| if total == 0 { 0.0 } else { c as f64 / total as f64 })
            })
            .collect(),
    };
    let norm = amplitudes.iter().map(|a| a * a).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::AllZeroCounts);
    }
    for a in &mut amplitudes {
        *a /= norm;
    }
    Ok(AmplitudeState {
        dim_x: table.num_values(),
        dim_y: table.num_labels(),
        amplitudes,
    })
}

/// The pure-state projector `|ψ⟩⟨ψ|`.
pub fn joint_density(state: &AmplitudeState) -> DensityOperator {
    DensityOperator::pure(&state.amplitudes).expect("amplitude state is unit norm")
}

/// Reduced operators of the feature register and the class register, both
/// zero-padded to the larger of the two dimensions.
pub fn reduced_pair(state: &AmplitudeState) -> Result<(DensityOperator, DensityOperator)> {
    let joint = joint_density(state);
    let dims = state.dims();
    let rho_x = partial_trace(&joint, dims, Subsystem::X)?;
    let rho_y = partial_trace(&joint, dims, Subsystem::Y)?;
    let d = dims.0.max(dims.1);
    Ok((rho_x.zero_padded(d), rho_y.zero_padded(d)))
}
