//! Command implementations behind the `indhom` binary.

pub mod render;
pub mod report;

use std::time::Instant;

use indhom_core::error::Error as CoreError;
use indhom_core::lab::{self, SearchSpace};
use indhom_core::marking::build_bigraded;
use indhom_core::spectral::{acyclicity_check, run_spectral, ConvergenceReport, EngineOptions};
use indhom_core::{family, independence_chain_complex, Graph};

use report::{CheckRow, CheckStatus, HomologyReport, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Resolve a graph argument: `family:` spec or path to a graph file.
pub fn load_graph(source: &str) -> Result<Graph, CoreError> {
    family::graph_from_source(source, || {
        std::fs::read_to_string(source).map_err(|e| CoreError::Parse {
            line: 0,
            msg: format!("cannot read '{source}': {e}"),
        })
    })
}

pub fn cmd_homology(g: &Graph, r_ind: usize) -> HomologyReport {
    let h = independence_chain_complex(g, r_ind).homology();
    report::homology_report(g, r_ind, &h)
}

pub fn cmd_pages(
    g: &Graph,
    r_ind: usize,
    check_build: bool,
) -> Result<ConvergenceReport, CoreError> {
    let opts = EngineOptions {
        check_build,
        check_splitting: r_ind == 1,
    };
    let seq = indhom_core::spectral::run_to_collapse(g, r_ind, &opts)?;
    Ok(seq.convergence_report())
}

/// Run every verification relevant for `(g, r_ind)`. The report always
/// contains one row per check; inapplicable checks are marked skipped.
pub fn cmd_verify(g: &Graph, r_ind: usize) -> Result<VerifyReport, CoreError> {
    let started = Instant::now();
    let mut checks = Vec::new();
    let mut pass = true;
    let fail = |checks: &mut Vec<CheckRow>, name: &str, detail: String| {
        checks.push(CheckRow {
            name: name.into(),
            status: CheckStatus::Fail,
            detail,
        });
    };

    // Differential identities, verified during the build.
    let bigraded = match build_bigraded(g, r_ind, true) {
        Ok(b) => {
            checks.push(CheckRow {
                name: "bicomplex identities".into(),
                status: CheckStatus::Pass,
                detail: String::new(),
            });
            b
        }
        Err(e) => {
            pass = false;
            fail(&mut checks, "bicomplex identities", e.to_string());
            return Ok(VerifyReport {
                graph: g.display_name(),
                r_ind,
                elapsed_ms: started.elapsed().as_millis() as u64,
                checks,
                pass,
            });
        }
    };

    // Relabeling complexes at fixed total mark count are acyclic away from
    // the origin.
    let mut bad_rows = Vec::new();
    for i in 0..=bigraded.alpha() {
        let row = bigraded.delta_row_check(i);
        if !row.pass {
            bad_rows.push(i);
        }
    }
    if bad_rows.is_empty() {
        checks.push(CheckRow {
            name: "delta-row triviality".into(),
            status: CheckStatus::Pass,
            detail: String::new(),
        });
    } else {
        pass = false;
        fail(
            &mut checks,
            "delta-row triviality",
            format!("nontrivial homology at i in {bad_rows:?}"),
        );
    }

    // Total-complex acyclicity.
    let acyclic = acyclicity_check(&bigraded);
    if acyclic.pass {
        checks.push(CheckRow {
            name: "total-complex acyclicity".into(),
            status: CheckStatus::Pass,
            detail: String::new(),
        });
    } else {
        pass = false;
        fail(
            &mut checks,
            "total-complex acyclicity",
            format!("{:?}", acyclic.groups),
        );
    }

    // First-page splitting cross-check (order 1 only).
    let seq = if r_ind == 1 {
        match run_spectral(bigraded, true) {
            Ok(seq) => {
                checks.push(CheckRow {
                    name: "first-page splitting".into(),
                    status: CheckStatus::Pass,
                    detail: String::new(),
                });
                seq
            }
            Err(e) => {
                pass = false;
                fail(&mut checks, "first-page splitting", e.to_string());
                return Ok(VerifyReport {
                    graph: g.display_name(),
                    r_ind,
                    elapsed_ms: started.elapsed().as_millis() as u64,
                    checks,
                    pass,
                });
            }
        }
    } else {
        checks.push(CheckRow {
            name: "first-page splitting".into(),
            status: CheckStatus::Skipped,
            detail: "r >= 2".into(),
        });
        run_spectral(bigraded, false)?
    };

    // Convergence verdicts.
    let report = seq.convergence_report();
    if report.einf_is_single_diagonal_z && report.position_at_alpha.unwrap_or(true) {
        checks.push(CheckRow {
            name: "stable-page survivor".into(),
            status: CheckStatus::Pass,
            detail: String::new(),
        });
    } else {
        pass = false;
        fail(
            &mut checks,
            "stable-page survivor",
            format!("e_infinity = {:?}", report.e_infinity),
        );
    }
    if report.q0_matches_direct {
        checks.push(CheckRow {
            name: "bottom row vs direct homology".into(),
            status: CheckStatus::Pass,
            detail: String::new(),
        });
    } else {
        pass = false;
        fail(
            &mut checks,
            "bottom row vs direct homology",
            String::new(),
        );
    }

    // Diagonal checks (order 1 only).
    if r_ind == 1 {
        let census = lab::diagonal_census_check_on(&seq);
        if census.pass {
            checks.push(CheckRow {
                name: "diagonal census".into(),
                status: CheckStatus::Pass,
                detail: String::new(),
            });
        } else {
            pass = false;
            fail(&mut checks, "diagonal census", format!("{:?}", census.rows));
        }
        let e2 = lab::e2_diagonal_check_on(&seq)?;
        if e2.pass {
            checks.push(CheckRow {
                name: "second-page diagonal".into(),
                status: CheckStatus::Pass,
                detail: format!("{} witness(es)", e2.witnesses.len()),
            });
        } else {
            pass = false;
            fail(
                &mut checks,
                "second-page diagonal",
                format!("entries {:?}, discrepancies {:?}", e2.entries, e2.discrepancies),
            );
        }
    } else {
        for name in ["diagonal census", "second-page diagonal"] {
            checks.push(CheckRow {
                name: name.into(),
                status: CheckStatus::Skipped,
                detail: "r >= 2".into(),
            });
        }
    }

    Ok(VerifyReport {
        graph: g.display_name(),
        r_ind,
        elapsed_ms: started.elapsed().as_millis() as u64,
        checks,
        pass,
    })
}

pub fn cmd_search(space: &SearchSpace, r_ind: usize) -> Result<lab::SearchReport, CoreError> {
    lab::search_counterexamples(space, r_ind)
}
