//! Text and CSV rendering. Renderers are pure views over the report
//! structs, so grids and JSON always describe the same data.

use std::collections::BTreeMap;

use indhom_core::lab::SearchReport;
use indhom_core::spectral::{ConvergenceReport, PageSummary};

use crate::report::{CheckStatus, HomologyReport, VerifyReport};

fn group_string(rank: usize, torsion: &[u64]) -> String {
    if rank == 0 && torsion.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    match rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for t in torsion {
        parts.push(format!("Z/{t}"));
    }
    parts.join(" + ")
}

pub fn homology_text(r: &HomologyReport) -> String {
    let mut out = format!(
        "reduced homology of Ind_{}({}) — marking degree n holds H~ in reduced degree n-1\n",
        r.r_ind, r.graph
    );
    for row in &r.groups {
        out.push_str(&format!(
            "  n={} (reduced {}): {}\n",
            row.degree,
            row.reduced_degree,
            group_string(row.rank, &row.torsion)
        ));
    }
    out
}

pub fn homology_csv(r: &HomologyReport) -> String {
    let mut out = String::from("degree,reduced_degree,rank,torsion\n");
    for row in &r.groups {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.degree,
            row.reduced_degree,
            row.rank,
            join_torsion(&row.torsion)
        ));
    }
    out
}

fn join_torsion(t: &[u64]) -> String {
    t.iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// Cell contents of one page grid, exactly the entries of the summary.
pub fn grid_cells(page: &PageSummary) -> BTreeMap<(usize, usize), String> {
    page.entries
        .iter()
        .map(|e| ((e.p, e.q), group_string(e.free_rank, &e.torsion)))
        .collect()
}

pub fn page_grid(page: &PageSummary, max_p: usize, max_q: usize) -> String {
    let cells = grid_cells(page);
    let width = cells
        .values()
        .map(String::len)
        .chain(std::iter::once(3))
        .max()
        .unwrap_or(3)
        + 2;
    let mut out = format!("E^{}\n", page.r);
    for q in (0..=max_q).rev() {
        out.push_str(&format!(" q={q:<2}|"));
        for p in 0..=max_p {
            let cell = cells.get(&(p, q)).cloned().unwrap_or_else(|| ".".into());
            out.push_str(&format!(" {cell:<width$}"));
        }
        out.push('\n');
    }
    out.push_str("      ");
    for p in 0..=max_p {
        out.push_str(&format!(" {:<width$}", format!("p={p}")));
    }
    out.push('\n');
    for d in &page.differentials {
        out.push_str(&format!(
            "  d^{}: ({},{}) -> ({},{}) rank {}\n",
            page.r,
            d.p,
            d.q,
            d.p + page.r - 1,
            d.q + page.r,
            d.rank
        ));
    }
    out
}

pub fn pages_text(r: &ConvergenceReport) -> String {
    let mut out = format!(
        "spectral pages for {} (r_ind = {}), alpha = {}, collapse at page {}\n",
        r.graph, r.r_ind, r.alpha, r.collapse_page
    );
    for page in &r.pages {
        out.push('\n');
        out.push_str(&page_grid(page, r.alpha, r.alpha));
    }
    out.push('\n');
    match &r.e_infinity {
        Some(pos) => out.push_str(&format!(
            "stable page: single entry at (p,q) = ({},{})\n",
            pos.p, pos.q
        )),
        None => out.push_str("stable page: no unique surviving entry\n"),
    }
    out.push_str(&format!(
        "survivor is a single diagonal Z: {}\n",
        r.einf_is_single_diagonal_z
    ));
    if let Some(at_alpha) = r.position_at_alpha {
        out.push_str(&format!("survivor at (alpha, alpha): {at_alpha}\n"));
    }
    out.push_str(&format!(
        "first-page bottom row matches direct homology: {}\n",
        r.q0_matches_direct
    ));
    out
}

pub fn pages_csv(r: &ConvergenceReport) -> String {
    let mut out = String::from("page,p,q,free_rank,torsion,out_rank\n");
    for page in &r.pages {
        for e in &page.entries {
            let out_rank = page
                .differentials
                .iter()
                .find(|d| (d.p, d.q) == (e.p, e.q))
                .map_or(0, |d| d.rank);
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                page.r,
                e.p,
                e.q,
                e.free_rank,
                join_torsion(&e.torsion),
                out_rank
            ));
        }
    }
    out
}

pub fn verify_text(r: &VerifyReport) -> String {
    let mut out = format!(
        "verification of {} (r_ind = {}) — {} ms\n",
        r.graph, r.r_ind, r.elapsed_ms
    );
    for check in &r.checks {
        let status = match check.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        };
        if check.detail.is_empty() {
            out.push_str(&format!("  {:<28} {}\n", check.name, status));
        } else {
            out.push_str(&format!(
                "  {:<28} {} ({})\n",
                check.name, status, check.detail
            ));
        }
    }
    out.push_str(&format!(
        "overall: {}\n",
        if r.pass { "all pass" } else { "FAILED" }
    ));
    out
}

pub fn verify_csv(r: &VerifyReport) -> String {
    let mut out = String::from("check,status,detail\n");
    for check in &r.checks {
        let status = match check.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        };
        out.push_str(&format!(
            "{},{},{}\n",
            check.name,
            status,
            check.detail.replace(',', ";")
        ));
    }
    out
}

pub fn search_text(r: &SearchReport) -> String {
    let mut out = format!(
        "column-vanishing sweep over {} candidates (r_ind = {})\n",
        r.candidates, r.r_ind
    );
    for g in &r.graphs {
        let applicable: Vec<usize> = g
            .census
            .iter()
            .filter(|(_, &n)| n == 0)
            .map(|(&p, _)| p)
            .collect();
        out.push_str(&format!(
            "  {}: checked p in {:?}, {} violation(s)\n",
            g.graph,
            applicable,
            g.violations.len()
        ));
    }
    if r.violations.is_empty() {
        out.push_str("no violations\n");
    } else {
        out.push_str("violations:\n");
        for v in &r.violations {
            let u = v
                .u
                .as_ref()
                .map(|u| format!("{u:?}"))
                .unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "  {} p={} q={} U={} group={}\n",
                v.graph,
                v.p,
                v.q,
                u,
                group_string(v.group.rank, &v.group.torsion)
            ));
        }
    }
    out
}

pub fn search_csv(r: &SearchReport) -> String {
    let mut out = String::from("graph,p,q,u,reduced_degree,rank,torsion,zero\n");
    for g in &r.graphs {
        for c in &g.checks {
            let u = c
                .u
                .as_ref()
                .map(|u| {
                    u.iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(";")
                })
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                g.graph,
                c.p,
                c.q,
                u,
                c.reduced_degree,
                c.group.rank,
                join_torsion(&c.group.torsion),
                c.zero
            ));
        }
    }
    out
}
