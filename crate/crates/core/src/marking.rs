//! The bigraded complex of vertex markings and its two differentials.
//!
//! A marking labels each vertex 0, 1 or 2 such that the marked support is
//! r-independent. `T[i][j]` is spanned by markings with `i` marked vertices
//! of which `j` are 2-marked. The differential `d` relabels one 1-marked
//! vertex to 0 (dropping it), `delta` relabels one 1-marked vertex to 2;
//! both carry the sign `(-1)^{# 1-marked vertices below v}`. The identities
//! `d^2 = 0`, `delta^2 = 0` and `d delta + delta d = 0` are verified at
//! build time unless explicitly disabled.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::chain::{independence_chain_complex, ChainComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::group::GroupShape;
use crate::matrix::IntMatrix;

/// A vertex marking: one code in {0,1,2} per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marking {
    codes: Vec<u8>,
}

impl Marking {
    pub fn new(codes: Vec<u8>) -> Result<Self> {
        if codes.iter().any(|&c| c > 2) {
            return Err(Error::InvalidParameter(
                "marking codes must be 0, 1 or 2".into(),
            ));
        }
        Ok(Marking { codes })
    }

    pub fn trivial(n: usize) -> Self {
        Marking { codes: vec![0; n] }
    }

    pub fn from_sets(n: usize, ones: &VertexSet, twos: &VertexSet) -> Self {
        let mut codes = vec![0u8; n];
        for v in ones.iter() {
            codes[v] = 1;
        }
        for v in twos.iter() {
            debug_assert_eq!(codes[v], 0, "1- and 2-marked sets must be disjoint");
            codes[v] = 2;
        }
        Marking { codes }
    }

    pub fn code(&self, v: usize) -> u8 {
        self.codes[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.codes.len()
    }

    /// The 1-marked vertices.
    pub fn one_marked(&self) -> VertexSet {
        self.codes
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// The 2-marked vertices.
    pub fn two_marked(&self) -> VertexSet {
        self.codes
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 2)
            .map(|(v, _)| v)
            .collect()
    }

    /// The marked support (1- and 2-marked vertices).
    pub fn support(&self) -> VertexSet {
        self.codes
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Bidegree `(i, j)`: total marked count and 2-marked count.
    pub fn bidegree(&self) -> (usize, usize) {
        let mut i = 0;
        let mut j = 0;
        for &c in &self.codes {
            if c != 0 {
                i += 1;
            }
            if c == 2 {
                j += 1;
            }
        }
        (i, j)
    }

    /// Copy with vertex `v` relabeled to `code`.
    pub fn relabel(&self, v: usize, code: u8) -> Marking {
        let mut codes = self.codes.clone();
        codes[v] = code;
        Marking { codes }
    }
}

impl fmt::Debug for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.codes {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The full bigraded complex of markings of a graph, with both differentials
/// assembled as integer matrices at every bidegree.
pub struct BigradedComplex {
    graph: Graph,
    r_ind: usize,
    alpha: usize,
    bases: BTreeMap<(usize, usize), Vec<Marking>>,
    d_mats: BTreeMap<(usize, usize), IntMatrix>,
    delta_mats: BTreeMap<(usize, usize), IntMatrix>,
}

/// Build the bigraded complex of `g` for independence order `r`. With
/// `check` set, the three differential identities are verified at every
/// bidegree before the value is returned.
pub fn build_bigraded(g: &Graph, r: usize, check: bool) -> Result<BigradedComplex> {
    if r < 1 {
        return Err(Error::InvalidParameter(
            "independence order must be at least 1".into(),
        ));
    }
    let n = g.vertex_count();
    let sets = g.r_independent_sets(r, None);
    let alpha = sets.iter().map(VertexSet::len).max().unwrap_or(0);
    let mut bases: BTreeMap<(usize, usize), Vec<Marking>> = BTreeMap::new();
    for s in &sets {
        let members: Vec<usize> = s.iter().collect();
        let i = members.len();
        for pick in 0u64..(1u64 << i) {
            let mut twos = Vec::new();
            let mut ones = Vec::new();
            for (pos, &v) in members.iter().enumerate() {
                if pick & (1 << pos) != 0 {
                    twos.push(v);
                } else {
                    ones.push(v);
                }
            }
            let j = twos.len();
            let m = Marking::from_sets(n, &VertexSet::new(ones), &VertexSet::new(twos));
            bases.entry((i, j)).or_default().push(m);
        }
    }
    for level in bases.values_mut() {
        level.sort_by_key(|m| (m.two_marked(), m.one_marked()));
    }
    let index: HashMap<(usize, usize), HashMap<Marking, usize>> = bases
        .iter()
        .map(|(&key, level)| {
            (
                key,
                level
                    .iter()
                    .enumerate()
                    .map(|(c, m)| (m.clone(), c))
                    .collect(),
            )
        })
        .collect();
    let dim = |i: usize, j: usize| bases.get(&(i, j)).map_or(0, Vec::len);

    let mut d_mats = BTreeMap::new();
    let mut delta_mats = BTreeMap::new();
    for (&(i, j), level) in &bases {
        let mut d = IntMatrix::zeros(if i == 0 { 0 } else { dim(i - 1, j) }, level.len());
        let mut delta = IntMatrix::zeros(dim(i, j + 1), level.len());
        for (c, m) in level.iter().enumerate() {
            for (pos, v) in m.one_marked().iter().enumerate() {
                let sign = BigInt::from(if pos % 2 == 0 { 1 } else { -1 });
                let dropped = m.relabel(v, 0);
                let row = index[&(i - 1, j)][&dropped];
                d.add_to(row, c, &sign);
                let promoted = m.relabel(v, 2);
                let row = index[&(i, j + 1)][&promoted];
                delta.add_to(row, c, &sign);
            }
        }
        d_mats.insert((i, j), d);
        delta_mats.insert((i, j), delta);
    }

    let complex = BigradedComplex {
        graph: g.clone(),
        r_ind: r,
        alpha,
        bases,
        d_mats,
        delta_mats,
    };
    if check {
        complex.verify_identities()?;
    }
    Ok(complex)
}

impl BigradedComplex {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn r_ind(&self) -> usize {
        self.r_ind
    }

    /// The r-independence number: largest total marking count.
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.bases.get(&(i, j)).map_or(0, Vec::len)
    }

    pub fn total_dim(&self) -> usize {
        self.bases.values().map(Vec::len).sum()
    }

    pub fn basis(&self, i: usize, j: usize) -> &[Marking] {
        self.bases.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bases.keys().copied()
    }

    /// The differential dropping one 1-mark: `(i, j) -> (i-1, j)`.
    pub fn d(&self, i: usize, j: usize) -> IntMatrix {
        match self.d_mats.get(&(i, j)) {
            Some(m) => m.clone(),
            None => IntMatrix::zeros(
                if i == 0 { 0 } else { self.dim(i - 1, j) },
                self.dim(i, j),
            ),
        }
    }

    /// The differential promoting one 1-mark to a 2-mark: `(i, j) -> (i, j+1)`.
    pub fn delta(&self, i: usize, j: usize) -> IntMatrix {
        match self.delta_mats.get(&(i, j)) {
            Some(m) => m.clone(),
            None => IntMatrix::zeros(self.dim(i, j + 1), self.dim(i, j)),
        }
    }

    /// Verify `d^2 = 0`, `delta^2 = 0` and `d delta + delta d = 0` at every
    /// bidegree, reporting the first violation with its basis labels.
    pub fn verify_identities(&self) -> Result<()> {
        for &(i, j) in self.bases.keys() {
            let dd = self.d(i.wrapping_sub(1), j).mul(&self.d(i, j));
            if i >= 1 {
                self.expect_zero(&dd, i, j, "d∘d")?;
            }
            let delta2 = self.delta(i, j + 1).mul(&self.delta(i, j));
            self.expect_zero(&delta2, i, j, "delta∘delta")?;
            let mixed = self
                .d(i, j + 1)
                .mul(&self.delta(i, j))
                .add(&self.delta(i.wrapping_sub(1), j).mul(&self.d(i, j)));
            if i >= 1 {
                self.expect_zero(&mixed, i, j, "d∘delta + delta∘d")?;
            } else {
                self.expect_zero(&self.d(i, j + 1).mul(&self.delta(i, j)), i, j, "d∘delta")?;
            }
        }
        Ok(())
    }

    fn expect_zero(&self, m: &IntMatrix, i: usize, j: usize, what: &str) -> Result<()> {
        use num_traits::Zero;
        for row in 0..m.rows() {
            for col in 0..m.cols() {
                if !Zero::is_zero(m.get(row, col)) {
                    let label = &self.basis(i, j)[col];
                    return Err(Error::Identity(format!(
                        "{what} nonzero at bidegree ({i},{j}), basis element {label}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The total complex: degree `n = i - j`, differential `d + delta`,
    /// labels retaining their bidegree of origin.
    pub fn total_complex(&self) -> ChainComplex<((usize, usize), Marking)> {
        let alpha = self.alpha;
        let blocks_at = |n: usize| -> Vec<(usize, usize)> {
            (0..=alpha.saturating_sub(n)).map(|j| (n + j, j)).collect()
        };
        let mut basis = Vec::new();
        let mut boundary = Vec::new();
        for n in 0..=alpha {
            let cols = blocks_at(n);
            let mut level = Vec::new();
            for &(i, j) in &cols {
                for m in self.basis(i, j) {
                    level.push(((i, j), m.clone()));
                }
            }
            if n == 0 {
                boundary.push(IntMatrix::zeros(0, level.len()));
            } else {
                let rows = blocks_at(n - 1);
                let row_dims: Vec<usize> = rows.iter().map(|&(i, j)| self.dim(i, j)).collect();
                let col_dims: Vec<usize> = cols.iter().map(|&(i, j)| self.dim(i, j)).collect();
                let mut mats: Vec<Vec<Option<IntMatrix>>> = vec![vec![None; cols.len()]; rows.len()];
                for (bj, &(i, j)) in cols.iter().enumerate() {
                    // d lands in (i-1, j); delta lands in (i, j+1).
                    if let Some(bi) = rows.iter().position(|&rc| rc == (i.wrapping_sub(1), j)) {
                        mats[bi][bj] = Some(self.d(i, j));
                    }
                    if let Some(bi) = rows.iter().position(|&rc| rc == (i, j + 1)) {
                        mats[bi][bj] = Some(self.delta(i, j));
                    }
                }
                let grid: Vec<Vec<Option<&IntMatrix>>> = mats
                    .iter()
                    .map(|row| row.iter().map(Option::as_ref).collect())
                    .collect();
                boundary.push(IntMatrix::from_blocks(&row_dims, &col_dims, &grid));
            }
            basis.push(level);
        }
        ChainComplex::new(0, basis, boundary)
            .expect("total differential squares to zero by the bicomplex identities")
    }

    /// The complex `(T[•][j], d)` for fixed 2-mark count `j`, graded by the
    /// total marking count.
    pub fn column_complex(&self, j: usize) -> ChainComplex<Marking> {
        let mut basis = Vec::new();
        let mut boundary = Vec::new();
        for i in 0..=self.alpha {
            basis.push(self.basis(i, j).to_vec());
            if i == 0 {
                boundary.push(IntMatrix::zeros(0, self.dim(0, j)));
            } else {
                boundary.push(self.d(i, j));
            }
        }
        ChainComplex::new(0, basis, boundary).expect("d squares to zero")
    }

    /// The complex `(T[i][•], delta)` for fixed total marking count `i`,
    /// re-graded by `k = i - j` so that `delta` lowers the degree.
    pub fn row_complex(&self, i: usize) -> ChainComplex<Marking> {
        let mut basis = Vec::new();
        let mut boundary = Vec::new();
        for k in 0..=i {
            let j = i - k;
            basis.push(self.basis(i, j).to_vec());
            if k == 0 {
                boundary.push(IntMatrix::zeros(0, self.dim(i, i)));
            } else {
                boundary.push(self.delta(i, j));
            }
        }
        ChainComplex::new(0, basis, boundary).expect("delta squares to zero")
    }

    /// Check that the `delta` complex at fixed `i` has trivial homology,
    /// except for a single `Z` at `i = 0` generated by the trivial marking.
    pub fn delta_row_check(&self, i: usize) -> DeltaRowReport {
        let h = self.row_complex(i).homology();
        let mut groups = Vec::new();
        let mut pass = true;
        for k in 0..=i as i64 {
            let shape = h.shape(k);
            let j = i - k as usize;
            let expected_z = i == 0 && k == 0;
            if expected_z {
                if !shape.is_free_of_rank(1) {
                    pass = false;
                }
            } else if !shape.is_zero() {
                pass = false;
            }
            groups.push((j, shape));
        }
        DeltaRowReport { i, groups, pass }
    }

    /// Decompose `(T[•][j], d)` into one summand per independent 2-marked
    /// set `U`, each identified with the independence chain complex of
    /// `G - N[U]` shifted by `j`. Only meaningful for `r = 1`; the block
    /// structure is verified exactly against the column differential.
    pub fn splitting_decomposition(&self, j: usize) -> Result<Vec<SplitSummand>> {
        if self.r_ind != 1 {
            return Err(Error::InvalidParameter(
                "the closed-form splitting requires independence order 1".into(),
            ));
        }
        let us = self.graph.r_independent_sets(1, Some(j));
        let mut summands = Vec::with_capacity(us.len());
        for u in &us {
            let nbhd = self.graph.closed_neighborhood(u)?;
            let (subgraph, relabel) = self.graph.delete_vertices(&nbhd)?;
            let complex = independence_chain_complex(&subgraph, 1).shifted(j as i64);
            summands.push(SplitSummand {
                two_marked: u.clone(),
                subgraph,
                relabel,
                complex,
                offsets: BTreeMap::new(),
            });
        }
        // Column bases are sorted by (2-marked, 1-marked), so each summand is
        // a contiguous block in U order. Record offsets and verify the block
        // dimensions and differentials match the subgraph complexes exactly.
        for i in 0..=self.alpha {
            let level = self.basis(i, j);
            let mut cursor = 0usize;
            for summand in summands.iter_mut() {
                let dim = summand.complex.dim(i as i64);
                for offset in 0..dim {
                    let m = &level[cursor + offset];
                    if m.two_marked() != summand.two_marked {
                        return Err(Error::Identity(format!(
                            "splitting block for {} is not contiguous at degree {i}",
                            summand.two_marked
                        )));
                    }
                }
                if dim > 0 {
                    summand.offsets.insert(i as i64, cursor);
                }
                cursor += dim;
            }
            if cursor != level.len() {
                return Err(Error::Identity(format!(
                    "splitting blocks at degree {i} cover {cursor} of {} basis elements",
                    level.len()
                )));
            }
        }
        // Block-diagonal d must equal the shifted subgraph boundaries.
        for i in 1..=self.alpha as i64 {
            let d = self.d(i as usize, j);
            for summand in &summands {
                let cdim = summand.complex.dim(i);
                let rdim = summand.complex.dim(i - 1);
                if cdim == 0 {
                    continue;
                }
                let coff = summand.offsets[&i];
                let expected = summand.complex.boundary(i);
                for c in 0..cdim {
                    for r in 0..rdim {
                        let roff = summand.offsets[&(i - 1)];
                        if d.get(roff + r, coff + c) != expected.get(r, c) {
                            return Err(Error::Identity(format!(
                                "splitting differential mismatch for {} at degree {i}",
                                summand.two_marked
                            )));
                        }
                    }
                }
                // Entries outside the block must vanish in this column range.
                use num_traits::Zero;
                for c in 0..cdim {
                    for r in 0..d.rows() {
                        let roff = summand.offsets.get(&(i - 1)).copied();
                        let inside = roff.map_or(false, |ro| r >= ro && r < ro + rdim);
                        if !inside && !Zero::is_zero(d.get(r, coff + c)) {
                            return Err(Error::Identity(format!(
                                "splitting block for {} leaks outside its rows at degree {i}",
                                summand.two_marked
                            )));
                        }
                    }
                }
            }
        }
        Ok(summands)
    }
}

/// One summand of the column splitting: the 2-marked set, the graph left
/// after deleting its closed neighborhood, and that graph's independence
/// chain complex shifted into column degrees.
pub struct SplitSummand {
    pub two_marked: VertexSet,
    pub subgraph: Graph,
    pub relabel: Vec<Option<usize>>,
    pub complex: ChainComplex<VertexSet>,
    /// Block start offset inside the column complex, per degree.
    pub offsets: BTreeMap<i64, usize>,
}

/// Homology shapes of one `delta` row complex, indexed by 2-mark count.
#[derive(Clone, Debug)]
pub struct DeltaRowReport {
    pub i: usize,
    pub groups: Vec<(usize, GroupShape)>,
    pub pass: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn p3_bigraded() -> BigradedComplex {
        build_bigraded(&family::path(3).unwrap(), 1, true).unwrap()
    }

    #[test]
    fn worked_example_differentials_on_p3() {
        let b = p3_bigraded();
        // The marking 1-marking both endpoints of the path.
        let m = Marking::new(vec![1, 0, 1]).unwrap();
        let level = b.basis(2, 0);
        let col = level.iter().position(|x| x == &m).unwrap();
        let d = b.d(2, 0);
        let row_plus = b
            .basis(1, 0)
            .iter()
            .position(|x| x == &Marking::new(vec![0, 0, 1]).unwrap())
            .unwrap();
        let row_minus = b
            .basis(1, 0)
            .iter()
            .position(|x| x == &Marking::new(vec![1, 0, 0]).unwrap())
            .unwrap();
        assert_eq!(d.get(row_plus, col), &BigInt::from(1));
        assert_eq!(d.get(row_minus, col), &BigInt::from(-1));

        let delta = b.delta(2, 0);
        let row_plus = b
            .basis(2, 1)
            .iter()
            .position(|x| x == &Marking::new(vec![2, 0, 1]).unwrap())
            .unwrap();
        let row_minus = b
            .basis(2, 1)
            .iter()
            .position(|x| x == &Marking::new(vec![1, 0, 2]).unwrap())
            .unwrap();
        assert_eq!(delta.get(row_plus, col), &BigInt::from(1));
        assert_eq!(delta.get(row_minus, col), &BigInt::from(-1));

        // A fully 2-marked vertex is annihilated by both differentials.
        let m = Marking::new(vec![0, 2, 0]).unwrap();
        let col = b.basis(1, 1).iter().position(|x| x == &m).unwrap();
        use num_traits::Zero;
        let d = b.d(1, 1);
        for r in 0..d.rows() {
            assert!(Zero::is_zero(d.get(r, col)));
        }
        let delta = b.delta(1, 1);
        for r in 0..delta.rows() {
            assert!(Zero::is_zero(delta.get(r, col)));
        }
    }

    #[test]
    fn bidegree_dimensions_follow_binomial_rule() {
        for (g, r) in [
            (family::cycle(6).unwrap(), 1),
            (family::path(5).unwrap(), 1),
            (family::cycle(5).unwrap(), 2),
            (family::petersen(), 1),
        ] {
            let b = build_bigraded(&g, r, true).unwrap();
            for i in 0..=b.alpha() {
                let count = g.r_independent_sets(r, Some(i)).len();
                for j in 0..=i {
                    let binom = binomial(i, j);
                    assert_eq!(
                        b.dim(i, j),
                        binom * count,
                        "dim mismatch at ({i},{j}) for {:?}",
                        g
                    );
                }
            }
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut out = 1usize;
        for t in 0..k.min(n - k) {
            out = out * (n - t) / (t + 1);
        }
        out
    }

    #[test]
    fn t21_of_c6_has_dimension_18() {
        let b = build_bigraded(&family::cycle(6).unwrap(), 1, true).unwrap();
        assert_eq!(b.dim(2, 1), 18);
    }

    #[test]
    fn total_complex_of_single_vertex_is_acyclic() {
        let g = family::complete(1).unwrap();
        let b = build_bigraded(&g, 1, true).unwrap();
        let h = b.total_complex().homology();
        assert_eq!(h.shape(0).to_string(), "Z");
        assert!(h.support() == vec![0]);
    }

    #[test]
    fn total_complex_of_c6_is_acyclic() {
        let b = build_bigraded(&family::cycle(6).unwrap(), 1, true).unwrap();
        let h = b.total_complex().homology();
        assert_eq!(h.support(), vec![0]);
        assert_eq!(h.shape(0).to_string(), "Z");
    }

    #[test]
    fn column_zero_matches_direct_independence_complex() {
        for (g, r) in [
            (family::cycle(6).unwrap(), 1),
            (family::cycle(4).unwrap(), 2),
        ] {
            let b = build_bigraded(&g, r, true).unwrap();
            let col = b.column_complex(0);
            let direct = independence_chain_complex(&g, r);
            for i in 0..=b.alpha() as i64 {
                assert_eq!(col.dim(i), direct.dim(i));
            }
            let hc = col.homology();
            let hd = direct.homology();
            for i in 0..=b.alpha() as i64 {
                assert_eq!(hc.shape(i), hd.shape(i));
            }
        }
    }

    #[test]
    fn c6_column_one_is_six_shifted_p3_blocks() {
        let b = build_bigraded(&family::cycle(6).unwrap(), 1, true).unwrap();
        let summands = b.splitting_decomposition(1).unwrap();
        assert_eq!(summands.len(), 6);
        for s in &summands {
            assert_eq!(s.subgraph.vertex_count(), 3);
            assert_eq!(s.subgraph.edge_count(), 2);
        }
        let h = b.column_complex(1).homology();
        assert_eq!(h.shape(2).to_string(), "Z^6");
        assert_eq!(h.support(), vec![2]);
    }

    #[test]
    fn c6_column_two_splits_into_single_vertices_and_empties() {
        let b = build_bigraded(&family::cycle(6).unwrap(), 1, true).unwrap();
        let summands = b.splitting_decomposition(2).unwrap();
        assert_eq!(summands.len(), 9);
        let empties = summands
            .iter()
            .filter(|s| s.subgraph.vertex_count() == 0)
            .count();
        let singles = summands
            .iter()
            .filter(|s| s.subgraph.vertex_count() == 1)
            .count();
        assert_eq!(empties, 3);
        assert_eq!(singles, 6);
    }

    #[test]
    fn petersen_column_one_splits_into_ten_cycles() {
        let b = build_bigraded(&family::petersen(), 1, true).unwrap();
        let summands = b.splitting_decomposition(1).unwrap();
        assert_eq!(summands.len(), 10);
        for s in &summands {
            assert_eq!(s.subgraph.vertex_count(), 6);
            assert_eq!(s.subgraph.edge_count(), 6);
            assert!((0..6).all(|v| s.subgraph.degree(v) == 2));
        }
    }

    #[test]
    fn splitting_rejected_for_higher_independence() {
        let b = build_bigraded(&family::cycle(4).unwrap(), 2, true).unwrap();
        assert!(b.splitting_decomposition(1).is_err());
    }

    #[test]
    fn delta_rows_are_trivial_except_origin() {
        let b = p3_bigraded();
        for i in 0..=b.alpha() {
            let report = b.delta_row_check(i);
            assert!(report.pass, "row {i} failed: {:?}", report.groups);
        }
        let zero_row = b.delta_row_check(0);
        assert_eq!(zero_row.groups[0].1.to_string(), "Z");
    }

    #[test]
    fn trivial_marking_spans_the_origin() {
        let b = p3_bigraded();
        assert_eq!(b.basis(0, 0), &[Marking::trivial(3)]);
    }
}
