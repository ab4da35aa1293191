//! Attribute-selection criteria.
//!
//! Fidelity and quantum information gain are computed on the reduced
//! operators of the embedded feature/class state; classical information gain
//! and Gini work directly on the counts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::embedding::{embed_state, joint_density, reduced_pair, AmplitudeMode, ContingencyTable};
use crate::error::{Error, Result};
use crate::linalg::{fidelity, partial_trace, von_neumann_entropy, Subsystem};

/// Scores closer than this are treated as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    #[default]
    Fidelity,
    Qig,
    Cig,
    Gini,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Maximize,
    Minimize,
}

impl CriterionKind {
    pub const ALL: [CriterionKind; 4] = [
        CriterionKind::Fidelity,
        CriterionKind::Qig,
        CriterionKind::Cig,
        CriterionKind::Gini,
    ];

    pub fn direction(self) -> Direction {
        match self {
            CriterionKind::Gini => Direction::Minimize,
            _ => Direction::Maximize,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CriterionKind::Fidelity => "fidelity",
            CriterionKind::Qig => "qig",
            CriterionKind::Cig => "cig",
            CriterionKind::Gini => "gini",
        }
    }

    pub fn score(self, table: &ContingencyTable, mode: AmplitudeMode) -> Result<f64> {
        match self {
            CriterionKind::Fidelity => score_fidelity(table, mode),
            CriterionKind::Qig => score_qig(table, mode),
            CriterionKind::Cig => Ok(score_cig(table)),
            CriterionKind::Gini => Ok(score_gini(table)),
        }
    }
}

impl fmt::Display for CriterionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CriterionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fidelity" => Ok(CriterionKind::Fidelity),
            "qig" => Ok(CriterionKind::Qig),
            "cig" => Ok(CriterionKind::Cig),
            "gini" => Ok(CriterionKind::Gini),
            other => Err(Error::InvalidConfig(format!("unknown criterion {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureScore {
    pub feature_index: usize,
    pub score: f64,
    pub direction: Direction,
}

/// Fidelity between the feature register and the class register.
pub fn score_fidelity(table: &ContingencyTable, mode: AmplitudeMode) -> Result<f64> {
    let state = embed_state(table, mode)?;
    let (rho_x, rho_y) = reduced_pair(&state)?;
    fidelity(&rho_x, &rho_y)
}

/// Von Neumann mutual information `S(ρ_X) + S(ρ_Y) − S(ρ_XY)` in bits.
pub fn score_qig(table: &ContingencyTable, mode: AmplitudeMode) -> Result<f64> {
    let state = embed_state(table, mode)?;
    let joint = joint_density(&state);
    let s_x = von_neumann_entropy(&partial_trace(&joint, state.dims(), Subsystem::X)?)?;
    let s_y = von_neumann_entropy(&partial_trace(&joint, state.dims(), Subsystem::Y)?)?;
    let s_xy = von_neumann_entropy(&joint)?;
    Ok((s_x + s_y - s_xy).max(0.0))
}

fn shannon(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let n = total as f64;
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum()
}

fn gini_impurity(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let n = total as f64;
    1.0 - counts.iter().map(|&c| (c as f64 / n).powi(2)).sum::<f64>()
}

/// ID3 information gain in bits.
pub fn score_cig(table: &ContingencyTable) -> f64 {
    let n = table.total() as f64;
    if n == 0.0 {
        return 0.0;
    }
    let conditional: f64 = table
        .rows()
        .map(|row| row.iter().sum::<u64>() as f64 / n * shannon(row))
        .sum();
    (shannon(&table.label_totals()) - conditional).max(0.0)
}

/// Weighted Gini impurity of the children; lower is better.
pub fn score_gini(table: &ContingencyTable) -> f64 {
    let n = table.total() as f64;
    if n == 0.0 {
        return 0.0;
    }
    table
        .rows()
        .map(|row| row.iter().sum::<u64>() as f64 / n * gini_impurity(row))
        .sum()
}

/// Index of the best score: greatest for maximizing criteria, least for Gini.
/// Ties (within [`TIE_TOLERANCE`]) go to the lowest feature index.
pub fn select_best(scores: &[FeatureScore]) -> Result<usize> {
    let mut best: Option<&FeatureScore> = None;
    for s in scores {
        best = match best {
            None => Some(s),
            Some(b) => {
                let better = match s.direction {
                    Direction::Maximize => s.score > b.score + TIE_TOLERANCE,
                    Direction::Minimize => s.score < b.score - TIE_TOLERANCE,
                };
                let tied = (s.score - b.score).abs() <= TIE_TOLERANCE;
                if better || (tied && s.feature_index < b.feature_index) {
                    Some(s)
                } else {
                    Some(b)
                }
            }
        };
    }
    best.map(|b| b.feature_index).ok_or(Error::EmptyScoreList)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn table(counts: Vec<Vec<u64>>) -> ContingencyTable {
        let values = (0..counts.len()).map(|i| i.to_string()).collect();
        let labels = (0..counts[0].len()).map(|i| i.to_string()).collect();
        ContingencyTable::from_counts(values, labels, counts).unwrap()
    }

    fn x1() -> ContingencyTable {
        table(vec![vec![1, 1], vec![1, 1]])
    }

    fn x2() -> ContingencyTable {
        // X2 = 0 -> labels {0, 1}; X2 = 1 -> labels {1, 0}
        table(vec![vec![1, 1], vec![1, 1]])
    }

    fn x3() -> ContingencyTable {
        table(vec![vec![1, 0], vec![1, 2]])
    }

    fn scores(kind: CriterionKind, values: &[f64]) -> Vec<FeatureScore> {
        values
            .iter()
            .enumerate()
            .map(|(i, &score)| FeatureScore {
                feature_index: i,
                score,
                direction: kind.direction(),
            })
            .collect()
    }

    #[test]
    fn fidelity_on_toy_table() {
        assert_abs_diff_eq!(
            score_fidelity(&x1(), AmplitudeMode::Joint).unwrap(),
            1.0,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            score_fidelity(&x2(), AmplitudeMode::Joint).unwrap(),
            1.0,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            score_fidelity(&x3(), AmplitudeMode::Joint).unwrap(),
            0.9718253158075502,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            score_fidelity(&x3(), AmplitudeMode::Conditional).unwrap(),
            0.9948848769417225,
            epsilon = 1e-12
        );
    }

    #[test]
    fn qig_on_toy_table() {
        assert_abs_diff_eq!(score_qig(&x1(), AmplitudeMode::Joint).unwrap(), 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(
            score_qig(&x3(), AmplitudeMode::Joint).unwrap(),
            1.1000955191655146,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            score_qig(&x3(), AmplitudeMode::Joint).unwrap(),
            1.100108,
            epsilon = 1e-4
        );
        let single_class = table(vec![vec![2], vec![3]]);
        assert_abs_diff_eq!(
            score_qig(&single_class, AmplitudeMode::Joint).unwrap(),
            0.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn cig_on_toy_table() {
        assert_abs_diff_eq!(score_cig(&x3()), 0.31127812445913283, epsilon = 1e-12);
        assert_eq!(score_cig(&x1()), 0.0);
        assert_abs_diff_eq!(score_cig(&table(vec![vec![2, 0], vec![0, 2]])), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn gini_on_toy_table() {
        assert_abs_diff_eq!(score_gini(&x3()), 1.0 / 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(score_gini(&x1()), 0.5, epsilon = 1e-15);
        assert_eq!(score_gini(&table(vec![vec![2, 0], vec![0, 2]])), 0.0);
    }

    #[test]
    fn select_best_examples() {
        let fid = scores(CriterionKind::Fidelity, &[1.0, 1.0, 0.9718]);
        assert_eq!(select_best(&fid).unwrap(), 0);
        let cig = scores(CriterionKind::Cig, &[0.0, 0.0, 0.311]);
        assert_eq!(select_best(&cig).unwrap(), 2);
        let gini = scores(CriterionKind::Gini, &[0.5, 0.5, 1.0 / 3.0]);
        assert_eq!(select_best(&gini).unwrap(), 2);
        assert_eq!(select_best(&scores(CriterionKind::Gini, &[0.2])).unwrap(), 0);
        assert!(matches!(select_best(&[]), Err(Error::EmptyScoreList)));
    }

    #[test]
    fn select_best_tie_prefers_lowest_index_regardless_of_order() {
        let mut s = scores(CriterionKind::Fidelity, &[0.5, 0.9, 0.9]);
        s.reverse();
        assert_eq!(select_best(&s).unwrap(), 1);
    }

    #[test]
    fn criterion_names_round_trip() {
        for k in CriterionKind::ALL {
            assert_eq!(k.as_str().parse::<CriterionKind>().unwrap(), k);
        }
        assert!("entropy".parse::<CriterionKind>().is_err());
    }
}
