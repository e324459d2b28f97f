//! Report types emitted by the command-line surface.

use serde::{Deserialize, Serialize};

use indhom_core::chain::GradedHomology;
use indhom_core::Graph;

/// Homology of one independence complex, both degree conventions spelled
/// out per row.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HomologyReport {
    pub graph: String,
    pub r_ind: usize,
    pub groups: Vec<HomologyGroupRow>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HomologyGroupRow {
    /// Marking degree: cardinality of the independent sets spanning the
    /// chain group.
    pub degree: i64,
    /// Reduced simplicial degree (one lower).
    pub reduced_degree: i64,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

pub fn homology_report(g: &Graph, r_ind: usize, h: &GradedHomology) -> HomologyReport {
    let groups = h
        .degrees()
        .map(|d| {
            let shape = h.shape(d);
            HomologyGroupRow {
                degree: d,
                reduced_degree: d - 1,
                rank: shape.free_rank,
                torsion: shape
                    .torsion
                    .iter()
                    .map(|t| u64::try_from(t).expect("torsion fits u64 at desk scale"))
                    .collect(),
            }
        })
        .collect();
    HomologyReport {
        graph: g.display_name(),
        r_ind,
        groups,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckRow {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub graph: String,
    pub r_ind: usize,
    pub elapsed_ms: u64,
    pub checks: Vec<CheckRow>,
    pub pass: bool,
}
