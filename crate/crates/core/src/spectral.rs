//! The spectral sequence of the marking complex filtered by 2-mark count.
//!
//! Conventions, fixed once: entries live at `(p, q)` with `q <= p <= alpha`;
//! the first page is the homology of the fixed-`q` column complexes under
//! `d`; the page-`r` differential moves `(p, q) -> (p + r - 1, q + r)` and is
//! evaluated on a class by pushing a zig-zag representative through `delta`.
//!
//! Every page entry is computed exactly, as a subquotient of the ambient
//! bidegree: the lattice of `d`-cycles extendable to a zig-zag of length `r`
//! modulo boundaries and images of earlier differentials. This agrees with
//! iterated kernel-mod-image page turning but stays in integer matrices the
//! whole way, so torsion is carried exactly and zig-zags can always be
//! re-solved over the integers.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chain::independence_chain_complex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{canonical_torsion, GroupShape, Subquotient};
use crate::marking::{build_bigraded, BigradedComplex};
use crate::matrix::IntMatrix;
use crate::snf::{kernel_basis, rank as matrix_rank, LinearSolver};

/// A zig-zag representative: components `x_0, ..., x_{r-1}` with
/// `x_k` in bidegree `(p + k, q + k)`, `d x_0 = 0` and
/// `delta x_{k-1} + d x_k = 0`.
pub type ZigZag = Vec<Vec<BigInt>>;

/// One entry of a page: the group as a subquotient of the ambient bidegree,
/// plus a zig-zag per generator.
pub struct PageEntry {
    pub sub: Subquotient,
    pub zigzags: Vec<ZigZag>,
}

/// A full page: entry groups indexed by `(p, q)`.
pub struct SpectralPage {
    pub page: usize,
    entries: BTreeMap<(usize, usize), PageEntry>,
}

impl SpectralPage {
    pub fn entry(&self, p: usize, q: usize) -> Option<&PageEntry> {
        self.entries.get(&(p, q))
    }

    pub fn shape(&self, p: usize, q: usize) -> GroupShape {
        self.entries
            .get(&(p, q))
            .map_or_else(GroupShape::zero, |e| e.sub.group().shape())
    }

    pub fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.keys().copied()
    }

    /// Positions with a nonzero group.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .filter(|(_, e)| !e.sub.group().is_zero())
            .map(|(&k, _)| k)
            .collect()
    }
}

/// The differential of one page out of one position, in generator
/// coordinates of source and target entries.
pub struct PageDifferential {
    pub page: usize,
    pub source: (usize, usize),
    pub target: (usize, usize),
    pub matrix: IntMatrix,
    pub rank: usize,
    pub is_zero_map: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct EngineOptions {
    /// Verify the bicomplex identities while building.
    pub check_build: bool,
    /// Cross-check the first page against the per-subgraph splitting
    /// (independence order 1 only).
    pub check_splitting: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            check_build: true,
            check_splitting: true,
        }
    }
}

/// The sequence run to its stable page, all pages retained.
pub struct SpectralSequence {
    bigraded: BigradedComplex,
    pages: Vec<SpectralPage>,
    diffs: Vec<Vec<PageDifferential>>,
}

/// Build the bigraded complex of `g` and run the sequence to collapse.
pub fn run_to_collapse(g: &Graph, r_ind: usize, opts: &EngineOptions) -> Result<SpectralSequence> {
    let bigraded = build_bigraded(g, r_ind, opts.check_build)?;
    run_spectral(bigraded, opts.check_splitting)
}

/// Run the sequence over an already-built bigraded complex.
pub fn run_spectral(bigraded: BigradedComplex, check_splitting: bool) -> Result<SpectralSequence> {
    let alpha = bigraded.alpha();
    let mut memo: KernelMemo = HashMap::new();
    let mut pages = Vec::new();
    let mut diffs = Vec::new();
    // No differential fits the bidegree range beyond page alpha, so page
    // alpha + 1 is the stable one.
    let last = alpha + 1;
    for r in 1..=last {
        let page = build_page(&bigraded, r, &mut memo)?;
        let d = page_differentials(&bigraded, &page)?;
        pages.push(page);
        diffs.push(d);
    }
    let seq = SpectralSequence {
        bigraded,
        pages,
        diffs,
    };
    if check_splitting && seq.bigraded.r_ind() == 1 {
        seq.cross_check_first_page()?;
    }
    Ok(seq)
}

impl SpectralSequence {
    pub fn bigraded(&self) -> &BigradedComplex {
        &self.bigraded
    }

    pub fn alpha(&self) -> usize {
        self.bigraded.alpha()
    }

    pub fn page_count(&self) -> usize {
        self.pages.len()
    }

    /// Page `r` (1-based). Pages beyond the stored range equal the last one.
    pub fn page(&self, r: usize) -> &SpectralPage {
        assert!(r >= 1);
        let idx = (r - 1).min(self.pages.len() - 1);
        &self.pages[idx]
    }

    pub fn differentials(&self, r: usize) -> &[PageDifferential] {
        assert!(r >= 1);
        if r - 1 < self.diffs.len() {
            &self.diffs[r - 1]
        } else {
            &[]
        }
    }

    pub fn final_page(&self) -> &SpectralPage {
        self.pages.last().expect("at least one page is always built")
    }

    /// Smallest page index from which every stored differential vanishes.
    pub fn collapse_page(&self) -> usize {
        let mut collapse = 1;
        for (idx, page_diffs) in self.diffs.iter().enumerate() {
            if page_diffs.iter().any(|d| !d.is_zero_map) {
                collapse = idx + 2;
            }
        }
        collapse
    }

    /// First-page cross-check against the splitting into subgraph
    /// complexes (independence order 1): group shapes must agree at every
    /// position, with torsion compared after canonicalizing direct sums.
    fn cross_check_first_page(&self) -> Result<()> {
        let b = &self.bigraded;
        let alpha = b.alpha();
        let e1 = &self.pages[0];
        for q in 0..=alpha {
            let summands = b.splitting_decomposition(q)?;
            let homologies: Vec<_> = summands
                .iter()
                .map(|s| s.complex.homology())
                .collect();
            for p in 0..=alpha {
                let mut free = 0usize;
                let mut torsion = Vec::new();
                for h in &homologies {
                    let shape = h.shape(p as i64);
                    free += shape.free_rank;
                    torsion.extend(shape.torsion);
                }
                let expected = GroupShape {
                    free_rank: free,
                    torsion: canonical_torsion(torsion),
                };
                let got = e1.shape(p, q);
                let got_canon = GroupShape {
                    free_rank: got.free_rank,
                    torsion: canonical_torsion(got.torsion.clone()),
                };
                if expected != got_canon {
                    return Err(Error::Identity(format!(
                        "first page at ({p},{q}) is {got} but the subgraph splitting gives {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Recompute all convergence verdicts from the stored pages.
    pub fn convergence_report(&self) -> ConvergenceReport {
        let b = &self.bigraded;
        let alpha = b.alpha();
        let final_page = self.final_page();
        let support = final_page.support();
        let einf_is_single_diagonal_z = support.len() == 1 && {
            let (p, q) = support[0];
            p == q && final_page.shape(p, q).is_free_of_rank(1)
        };
        let einf_position = if support.len() == 1 { Some(support[0]) } else { None };
        let position_at_alpha = (b.r_ind() == 1)
            .then(|| einf_position == Some((alpha, alpha)));

        let direct = independence_chain_complex(b.graph(), b.r_ind()).homology();
        let e1 = &self.pages[0];
        let q0_matches_direct = (0..=alpha as i64)
            .all(|p| e1.shape(p as usize, 0) == direct.shape(p));

        let pages = self
            .pages
            .iter()
            .enumerate()
            .map(|(idx, page)| PageSummary {
                r: page.page,
                entries: page
                    .support()
                    .into_iter()
                    .map(|(p, q)| entry_summary(page, p, q))
                    .collect(),
                differentials: self.diffs[idx]
                    .iter()
                    .filter(|d| d.rank > 0)
                    .map(|d| DiffSummary {
                        p: d.source.0,
                        q: d.source.1,
                        rank: d.rank,
                    })
                    .collect(),
            })
            .collect();

        ConvergenceReport {
            graph: b.graph().display_name(),
            r_ind: b.r_ind(),
            alpha,
            collapse_page: self.collapse_page(),
            pages,
            e_infinity: einf_position.map(|(p, q)| PositionSummary { p, q }),
            einf_is_single_diagonal_z,
            position_at_alpha,
            q0_matches_direct,
        }
    }
}

fn entry_summary(page: &SpectralPage, p: usize, q: usize) -> EntrySummary {
    let shape = page.shape(p, q);
    EntrySummary {
        p,
        q,
        free_rank: shape.free_rank,
        torsion: shape
            .torsion
            .iter()
            .map(|t| u64::try_from(t).expect("torsion coefficient fits in u64 at desk scale"))
            .collect(),
    }
}

/// Serializable summary of one run: every page's nonzero entries and nonzero
/// differentials, the stable position, and the convergence verdicts.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub graph: String,
    pub r_ind: usize,
    pub alpha: usize,
    pub collapse_page: usize,
    pub pages: Vec<PageSummary>,
    pub e_infinity: Option<PositionSummary>,
    pub einf_is_single_diagonal_z: bool,
    /// For independence order 1: whether the survivor sits at
    /// `(alpha, alpha)`. `None` for higher orders, where only
    /// diagonal-uniqueness is asserted; the observed position is recorded in
    /// `e_infinity`.
    pub position_at_alpha: Option<bool>,
    pub q0_matches_direct: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PageSummary {
    pub r: usize,
    pub entries: Vec<EntrySummary>,
    pub differentials: Vec<DiffSummary>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EntrySummary {
    pub p: usize,
    pub q: usize,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiffSummary {
    pub p: usize,
    pub q: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PositionSummary {
    pub p: usize,
    pub q: usize,
}

/// Direct verification that the total complex is acyclic: one `Z` in total
/// degree 0 and nothing else.
pub struct AcyclicityReport {
    pub groups: Vec<(i64, GroupShape)>,
    pub pass: bool,
}

pub fn acyclicity_check(b: &BigradedComplex) -> AcyclicityReport {
    let h = b.total_complex().homology();
    let groups: Vec<(i64, GroupShape)> = h.degrees().map(|d| (d, h.shape(d))).collect();
    let pass = groups
        .iter()
        .all(|(d, s)| if *d == 0 { s.is_free_of_rank(1) } else { s.is_zero() });
    AcyclicityReport { groups, pass }
}

// ---------------------------------------------------------------------------
// Page construction from ambient lattices.
// ---------------------------------------------------------------------------

type KernelMemo = HashMap<(i64, i64, usize), Rc<IntMatrix>>;

fn dim_at(b: &BigradedComplex, i: i64, j: i64) -> usize {
    if i < 0 || j < 0 {
        0
    } else {
        b.dim(i as usize, j as usize)
    }
}

fn d_at(b: &BigradedComplex, i: i64, j: i64) -> IntMatrix {
    if i < 0 || j < 0 {
        IntMatrix::zeros(dim_at(b, i - 1, j), 0)
    } else {
        b.d(i as usize, j as usize)
    }
}

fn delta_at(b: &BigradedComplex, i: i64, j: i64) -> IntMatrix {
    if i < 0 || j < 0 {
        IntMatrix::zeros(dim_at(b, i, j + 1), 0)
    } else {
        b.delta(i as usize, j as usize)
    }
}

/// Relation matrix of the zig-zag system of `len` components starting at
/// `(p, q)`: variables `x_0..x_{len-1}` with `x_k` at `(p+k, q+k)`,
/// relations `d x_0 = 0` and `delta x_{k-1} + d x_k = 0`.
fn stacked_system(b: &BigradedComplex, p: i64, q: i64, len: usize) -> IntMatrix {
    let col_dims: Vec<usize> = (0..len).map(|k| dim_at(b, p + k as i64, q + k as i64)).collect();
    let mut row_dims = Vec::with_capacity(len);
    row_dims.push(dim_at(b, p - 1, q));
    for k in 1..len {
        row_dims.push(dim_at(b, p + k as i64 - 1, q + k as i64));
    }
    let mut blocks: Vec<Vec<Option<IntMatrix>>> = vec![vec![None; len]; len];
    blocks[0][0] = Some(d_at(b, p, q));
    for k in 1..len {
        blocks[k][k - 1] = Some(delta_at(b, p + k as i64 - 1, q + k as i64 - 1));
        blocks[k][k] = Some(d_at(b, p + k as i64, q + k as i64));
    }
    let grid: Vec<Vec<Option<&IntMatrix>>> = blocks
        .iter()
        .map(|row| row.iter().map(Option::as_ref).collect())
        .collect();
    IntMatrix::from_blocks(&row_dims, &col_dims, &grid)
}

fn stacked_kernel(b: &BigradedComplex, memo: &mut KernelMemo, p: i64, q: i64, len: usize) -> Rc<IntMatrix> {
    if let Some(k) = memo.get(&(p, q, len)) {
        return Rc::clone(k);
    }
    let system = stacked_system(b, p, q, len);
    let kernel = Rc::new(kernel_basis(&system));
    memo.insert((p, q, len), Rc::clone(&kernel));
    kernel
}

/// Generators of the lattice of `d`-cycles at `(p, q)` that extend to
/// zig-zags of length `r` (the classes alive on page `r`).
fn alive_lattice(b: &BigradedComplex, memo: &mut KernelMemo, p: usize, q: usize, r: usize) -> IntMatrix {
    if r == 1 {
        return kernel_basis(&b.d(p, q));
    }
    let kernel = stacked_kernel(b, memo, p as i64, q as i64, r);
    kernel.row_slice(0, b.dim(p, q))
}

/// Generators of the lattice of zig-zag ends of length `len` landing at
/// `(p, q)` (the sources of everything that has died into `(p, q+1)` by page
/// `len + 1`).
fn end_lattice(b: &BigradedComplex, memo: &mut KernelMemo, p: i64, q: i64, len: usize) -> IntMatrix {
    let dim_last = dim_at(b, p, q);
    if len == 1 {
        return kernel_basis(&d_at(b, p, q));
    }
    let start_p = p - len as i64 + 1;
    let start_q = q - len as i64 + 1;
    let kernel = stacked_kernel(b, memo, start_p, start_q, len);
    let total: usize = (0..len)
        .map(|k| dim_at(b, start_p + k as i64, start_q + k as i64))
        .sum();
    kernel.row_slice(total - dim_last, dim_last)
}

fn build_page(b: &BigradedComplex, r: usize, memo: &mut KernelMemo) -> Result<SpectralPage> {
    let alpha = b.alpha();
    let mut entries = BTreeMap::new();
    for p in 0..=alpha {
        for q in 0..=p {
            if b.dim(p, q) == 0 {
                continue;
            }
            let alive = alive_lattice(b, memo, p, q, r);
            let mut boundary_parts = vec![b.d(p + 1, q)];
            if r >= 2 && q >= 1 {
                let ends = end_lattice(b, memo, p as i64, q as i64 - 1, r - 1);
                boundary_parts.push(b.delta(p, q - 1).mul(&ends));
            }
            let refs: Vec<&IntMatrix> = boundary_parts.iter().collect();
            let dead = IntMatrix::hstack(&refs);
            let sub = Subquotient::new(&alive, &dead).map_err(|e| {
                Error::Contract(format!(
                    "page {r} entry ({p},{q}) is not a valid subquotient: {e}"
                ))
            })?;
            let zigzags = solve_zigzags(b, p, q, r, &sub)?;
            entries.insert((p, q), PageEntry { sub, zigzags });
        }
    }
    Ok(SpectralPage { page: r, entries })
}

/// Extend every generator of an entry to a zig-zag of length `r` by one
/// integer solve of the block system `delta x_{k-1} + d x_k = 0`.
fn solve_zigzags(
    b: &BigradedComplex,
    p: usize,
    q: usize,
    r: usize,
    sub: &Subquotient,
) -> Result<Vec<ZigZag>> {
    let gens = sub.group().generator_count();
    if r == 1 {
        return Ok((0..gens)
            .map(|g| vec![sub.group().generators.column(g)])
            .collect());
    }
    let col_dims: Vec<usize> = (1..r).map(|k| dim_at(b, (p + k) as i64, (q + k) as i64)).collect();
    let mut row_dims = Vec::with_capacity(r - 1);
    for k in 1..r {
        row_dims.push(dim_at(b, (p + k) as i64 - 1, (q + k) as i64));
    }
    let mut blocks: Vec<Vec<Option<IntMatrix>>> = vec![vec![None; r - 1]; r - 1];
    for k in 1..r {
        blocks[k - 1][k - 1] = Some(d_at(b, (p + k) as i64, (q + k) as i64));
        if k >= 2 {
            blocks[k - 1][k - 2] = Some(delta_at(b, (p + k) as i64 - 1, (q + k) as i64 - 1));
        }
    }
    let grid: Vec<Vec<Option<&IntMatrix>>> = blocks
        .iter()
        .map(|row| row.iter().map(Option::as_ref).collect())
        .collect();
    let system = IntMatrix::from_blocks(&row_dims, &col_dims, &grid);
    let solver = LinearSolver::new(&system);
    let delta0 = b.delta(p, q);
    let mut out = Vec::with_capacity(gens);
    for g in 0..gens {
        let x0 = sub.group().generators.column(g);
        let mut rhs = delta0.mul_vec(&x0).iter().map(|v| -v).collect::<Vec<BigInt>>();
        let trailing: usize = row_dims.iter().skip(1).sum();
        rhs.extend(vec![BigInt::from(0); trailing]);
        let solution = solver.solve(&rhs).ok_or_else(|| {
            Error::Contract(format!(
                "zig-zag extension insoluble at page {r}, position ({p},{q})"
            ))
        })?;
        let mut chain = vec![x0];
        let mut off = 0;
        for &dim in &col_dims {
            chain.push(solution[off..off + dim].to_vec());
            off += dim;
        }
        out.push(chain);
    }
    Ok(out)
}

/// All differentials on one page: `(p, q) -> (p + r - 1, q + r)`, one matrix
/// per populated source whose target bidegree is populated.
fn page_differentials(b: &BigradedComplex, page: &SpectralPage) -> Result<Vec<PageDifferential>> {
    let r = page.page;
    let mut out = Vec::new();
    for (&(p, q), entry) in &page.entries {
        let target = (p + r - 1, q + r);
        let Some(target_entry) = page.entries.get(&target) else {
            continue;
        };
        let gens = entry.sub.group().generator_count();
        if gens == 0 && target_entry.sub.group().generator_count() == 0 {
            continue;
        }
        let delta_last = delta_at(b, (p + r) as i64 - 1, (q + r) as i64 - 1);
        let mut cols = Vec::with_capacity(gens);
        let mut is_zero_map = true;
        for zz in &entry.zigzags {
            let last = zz.last().expect("zig-zags are nonempty");
            let image = delta_last.mul_vec(last);
            let coords = target_entry.sub.project(&image).map_err(|e| {
                Error::Contract(format!(
                    "page {r} differential out of ({p},{q}) does not land in its target: {e}"
                ))
            })?;
            if !target_entry.sub.coords_are_zero(&coords) {
                is_zero_map = false;
            }
            cols.push(coords);
        }
        let matrix = IntMatrix::from_columns(target_entry.sub.group().generator_count(), &cols);
        let rank = if is_zero_map { 0 } else { matrix_rank(&matrix) };
        out.push(PageDifferential {
            page: r,
            source: (p, q),
            target,
            matrix,
            rank,
            is_zero_map,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn shapes_of(page: &SpectralPage) -> BTreeMap<(usize, usize), String> {
        page.support()
            .into_iter()
            .map(|(p, q)| ((p, q), page.shape(p, q).to_string()))
            .collect()
    }

    #[test]
    fn first_page_of_c6_matches_worked_example() {
        let seq = run_to_collapse(&family::cycle(6).unwrap(), 1, &EngineOptions::default()).unwrap();
        let e1 = seq.page(1);
        assert_eq!(e1.shape(2, 0).to_string(), "Z^2");
        assert_eq!(e1.shape(2, 1).to_string(), "Z^6");
        assert_eq!(e1.shape(2, 2).to_string(), "Z^3");
        assert_eq!(e1.shape(3, 3).to_string(), "Z^2");
        assert_eq!(e1.shape(1, 0).to_string(), "0");
        assert_eq!(e1.shape(3, 0).to_string(), "0");
        assert_eq!(e1.shape(3, 1).to_string(), "0");
        assert_eq!(e1.shape(3, 2).to_string(), "0");
    }

    #[test]
    fn c6_second_page_and_collapse() {
        let seq = run_to_collapse(&family::cycle(6).unwrap(), 1, &EngineOptions::default()).unwrap();
        let e2 = seq.page(2);
        // The three-dimensional diagonal entry dies on page two; one class
        // survives at (2,1) until the page-two differential into (3,3).
        assert_eq!(e2.shape(2, 2).to_string(), "0");
        assert_eq!(e2.shape(2, 1).to_string(), "Z");
        assert_eq!(e2.shape(2, 0).to_string(), "0");
        assert_eq!(e2.shape(3, 3).to_string(), "Z^2");
        let d2: Vec<_> = seq
            .differentials(2)
            .iter()
            .filter(|d| !d.is_zero_map)
            .collect();
        assert_eq!(d2.len(), 1);
        assert_eq!(d2[0].source, (2, 1));
        assert_eq!(d2[0].target, (3, 3));
        assert_eq!(d2[0].rank, 1);
        let final_page = seq.final_page();
        assert_eq!(final_page.support(), vec![(3, 3)]);
        assert_eq!(final_page.shape(3, 3).to_string(), "Z");
        let report = seq.convergence_report();
        assert!(report.einf_is_single_diagonal_z);
        assert_eq!(report.position_at_alpha, Some(true));
        assert!(report.q0_matches_direct);
    }

    #[test]
    fn single_vertex_collapses_at_one_one() {
        let seq = run_to_collapse(&family::complete(1).unwrap(), 1, &EngineOptions::default()).unwrap();
        let report = seq.convergence_report();
        assert!(report.einf_is_single_diagonal_z);
        assert_eq!(report.e_infinity, Some(PositionSummary { p: 1, q: 1 }));
    }

    #[test]
    fn complete_graph_first_page() {
        let seq = run_to_collapse(&family::complete(4).unwrap(), 1, &EngineOptions::default()).unwrap();
        let e1 = seq.page(1);
        assert_eq!(e1.shape(1, 0).to_string(), "Z^3");
        assert_eq!(e1.shape(1, 1).to_string(), "Z^4");
        assert_eq!(shapes_of(e1).len(), 2);
        let report = seq.convergence_report();
        assert!(report.einf_is_single_diagonal_z);
        assert_eq!(report.position_at_alpha, Some(true));
    }

    #[test]
    fn cube_needs_a_page_three_differential() {
        let seq = run_to_collapse(&family::cube_skeleton(), 1, &EngineOptions::default()).unwrap();
        let e1 = seq.page(1);
        assert_eq!(e1.shape(2, 1).to_string(), "Z^8");
        assert_eq!(e1.shape(2, 2).to_string(), "Z^4");
        assert_eq!(e1.shape(4, 4).to_string(), "Z^2");
        assert_eq!(e1.shape(2, 0).to_string(), "Z^3");
        let d3: Vec<_> = seq
            .differentials(3)
            .iter()
            .filter(|d| !d.is_zero_map)
            .collect();
        assert_eq!(d3.len(), 1);
        assert_eq!(d3[0].source, (2, 1));
        assert_eq!(d3[0].target, (4, 4));
        assert_eq!(d3[0].rank, 1);
        let report = seq.convergence_report();
        assert!(report.einf_is_single_diagonal_z);
        assert_eq!(report.position_at_alpha, Some(true));
        assert_eq!(report.collapse_page, 4);
    }

    #[test]
    fn petersen_first_page_and_page_two_image() {
        let seq = run_to_collapse(&family::petersen(), 1, &EngineOptions::default()).unwrap();
        let e1 = seq.page(1);
        assert_eq!(e1.shape(3, 1).to_string(), "Z^20");
        assert_eq!(e1.shape(3, 2).to_string(), "Z^30");
        assert_eq!(e1.shape(3, 3).to_string(), "Z^10");
        assert_eq!(e1.shape(4, 4).to_string(), "Z^5");
        assert_eq!(e1.shape(3, 0).to_string(), "Z^4");
        let d2 = seq
            .differentials(2)
            .iter()
            .find(|d| d.source == (3, 2))
            .expect("the (3,2) differential exists on page two");
        assert_eq!(d2.target, (4, 4));
        assert_eq!(d2.rank, 4);
        let report = seq.convergence_report();
        assert!(report.einf_is_single_diagonal_z);
        assert_eq!(report.position_at_alpha, Some(true));
    }

    #[test]
    fn two_independence_runs_collapse() {
        for (g, expected_pos) in [
            (family::cycle(4).unwrap(), (2, 2)),
            (family::cycle(5).unwrap(), (3, 3)),
        ] {
            let seq = run_to_collapse(&g, 2, &EngineOptions::default()).unwrap();
            let report = seq.convergence_report();
            assert!(report.einf_is_single_diagonal_z, "graph {:?}", g);
            assert!(report.q0_matches_direct);
            assert_eq!(
                report.e_infinity,
                Some(PositionSummary {
                    p: expected_pos.0,
                    q: expected_pos.1
                })
            );
        }
    }

    #[test]
    fn ind2_first_pages_match_worked_examples() {
        let seq = run_to_collapse(&family::cycle(4).unwrap(), 2, &EngineOptions::default()).unwrap();
        let e1 = seq.page(1);
        assert_eq!(e1.shape(2, 1).to_string(), "Z^8");
        assert_eq!(e1.shape(2, 2).to_string(), "Z^6");
        assert_eq!(e1.shape(2, 0).to_string(), "Z^3");

        let seq = run_to_collapse(&family::cycle(5).unwrap(), 2, &EngineOptions::default()).unwrap();
        let e1 = seq.page(1);
        assert_eq!(e1.shape(3, 2).to_string(), "Z^5");
        assert_eq!(e1.shape(3, 3).to_string(), "Z^5");
        assert_eq!(e1.shape(2, 1).to_string(), "0");
        assert_eq!(e1.shape(3, 1).to_string(), "0");
        assert_eq!(e1.shape(2, 0).to_string(), "Z"); // the answer row
    }

    #[test]
    fn differentials_compose_to_zero() {
        for g in [family::cycle(6).unwrap(), family::cube_skeleton()] {
            let seq = run_to_collapse(&g, 1, &EngineOptions::default()).unwrap();
            for r in 1..=seq.page_count() {
                let page = seq.page(r);
                for d in seq.differentials(r) {
                    // Follow with the next differential out of the target.
                    let Some(next) = seq
                        .differentials(r)
                        .iter()
                        .find(|n| n.source == d.target)
                    else {
                        continue;
                    };
                    let composite = next.matrix.mul(&d.matrix);
                    let target_entry = page.entry(next.target.0, next.target.1).unwrap();
                    for c in 0..composite.cols() {
                        assert!(target_entry.sub.coords_are_zero(&composite.column(c)));
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_is_a_page_invariant() {
        let seq = run_to_collapse(&family::petersen(), 1, &EngineOptions::default()).unwrap();
        let chi: Vec<i64> = (1..=seq.page_count())
            .map(|r| {
                let page = seq.page(r);
                page.support()
                    .into_iter()
                    .map(|(p, q)| {
                        let sign = if (p as i64 - q as i64).rem_euclid(2) == 0 {
                            1
                        } else {
                            -1
                        };
                        sign * page.shape(p, q).free_rank as i64
                    })
                    .sum()
            })
            .collect();
        assert!(chi.windows(2).all(|w| w[0] == w[1]), "chi per page: {chi:?}");
    }
}
