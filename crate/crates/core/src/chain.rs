//! Labeled chain complexes of free Z-modules, their integer homology with
//! representative cycles, induced maps on homology, and the direct
//! construction of the augmented chain complex of an r-independence complex.
//!
//! Degrees follow the marking convention throughout: the basis in degree `i`
//! of an independence complex is the set of r-independent sets of cardinality
//! `i`, with the empty set alone in degree 0. Homology in degree `n` of that
//! complex is the reduced simplicial homology in degree `n - 1`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::group::{GroupShape, Subquotient};
use crate::matrix::IntMatrix;
use crate::snf::kernel_basis;

/// Chain complex over a contiguous degree range with labeled bases.
/// `boundary(k)` maps degree `k` to degree `k - 1`; composition of
/// consecutive boundaries is verified to vanish at construction.
#[derive(Clone)]
pub struct ChainComplex<L> {
    min_degree: i64,
    basis: Vec<Vec<L>>,
    boundary: Vec<IntMatrix>,
}

impl<L: Clone + fmt::Debug> ChainComplex<L> {
    pub fn new(min_degree: i64, basis: Vec<Vec<L>>, boundary: Vec<IntMatrix>) -> Result<Self> {
        if basis.len() != boundary.len() {
            return Err(Error::Contract(
                "basis/boundary length mismatch in chain complex".into(),
            ));
        }
        for k in 0..basis.len() {
            let expected_rows = if k == 0 { 0 } else { basis[k - 1].len() };
            if boundary[k].rows() != expected_rows || boundary[k].cols() != basis[k].len() {
                return Err(Error::Contract(format!(
                    "boundary matrix shape mismatch in degree {}",
                    min_degree + k as i64
                )));
            }
        }
        for k in 2..basis.len() {
            let square = boundary[k - 1].mul(&boundary[k]);
            if !square.is_zero() {
                return Err(Error::Identity(format!(
                    "boundary squared is nonzero from degree {}",
                    min_degree + k as i64
                )));
            }
        }
        Ok(ChainComplex {
            min_degree,
            basis,
            boundary,
        })
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.basis.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.min_degree..=self.max_degree()
    }

    fn offset(&self, degree: i64) -> Option<usize> {
        if degree < self.min_degree {
            return None;
        }
        let k = (degree - self.min_degree) as usize;
        (k < self.basis.len()).then_some(k)
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.offset(degree).map_or(0, |k| self.basis[k].len())
    }

    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    pub fn basis(&self, degree: i64) -> &[L] {
        self.offset(degree).map_or(&[], |k| &self.basis[k])
    }

    /// Boundary matrix out of `degree`; zero-dimensional outside the range.
    pub fn boundary(&self, degree: i64) -> IntMatrix {
        match self.offset(degree) {
            Some(k) => self.boundary[k].clone(),
            None => {
                let rows = self.dim(degree - 1);
                IntMatrix::zeros(rows, 0)
            }
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|d| {
                let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * self.dim(d) as i64
            })
            .sum()
    }

    pub fn shifted(mut self, s: i64) -> Self {
        self.min_degree += s;
        self
    }

    /// Integer homology in every degree, with representatives in ambient
    /// chain coordinates.
    pub fn homology(&self) -> GradedHomology {
        let mut groups = Vec::with_capacity(self.basis.len());
        for degree in self.degrees() {
            let cycles = if degree == self.min_degree {
                IntMatrix::identity(self.dim(degree))
            } else {
                kernel_basis(&self.boundary(degree))
            };
            let boundaries = if degree < self.max_degree() {
                self.boundary(degree + 1)
            } else {
                IntMatrix::zeros(self.dim(degree), 0)
            };
            let sub = Subquotient::new(&cycles, &boundaries)
                .expect("boundaries lie in cycles because the boundary squares to zero");
            groups.push(sub);
        }
        GradedHomology {
            min_degree: self.min_degree,
            groups,
        }
    }
}

/// Homology of a chain complex, one group per degree.
pub struct GradedHomology {
    min_degree: i64,
    groups: Vec<Subquotient>,
}

impl GradedHomology {
    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.groups.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.min_degree..=self.max_degree()
    }

    pub fn group(&self, degree: i64) -> Option<&Subquotient> {
        if degree < self.min_degree {
            return None;
        }
        self.groups.get((degree - self.min_degree) as usize)
    }

    /// Isomorphism type in `degree`; zero outside the carried range.
    pub fn shape(&self, degree: i64) -> GroupShape {
        self.group(degree)
            .map_or_else(GroupShape::zero, |g| g.group().shape())
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(|g| g.group().is_zero())
    }

    /// Degrees with a nonzero group.
    pub fn support(&self) -> Vec<i64> {
        self.degrees()
            .filter(|&d| !self.shape(d).is_zero())
            .collect()
    }
}

/// The augmented, degree-shifted chain complex of `Ind_r(G)`: degree `i`
/// basis is the r-independent sets of cardinality `i`, the empty set sits in
/// degree 0, and the boundary deletes one vertex at a time with the sign
/// `(-1)^{#smaller members}`. For the empty graph this is a single `Z` in
/// degree 0.
pub fn independence_chain_complex(g: &Graph, r: usize) -> ChainComplex<VertexSet> {
    assert!(r >= 1, "independence order must be at least 1");
    let all = g.r_independent_sets(r, None);
    let alpha = all.iter().map(VertexSet::len).max().unwrap_or(0);
    let mut basis: Vec<Vec<VertexSet>> = vec![Vec::new(); alpha + 1];
    for s in all {
        basis[s.len()].push(s);
    }
    let index: Vec<HashMap<&VertexSet, usize>> = basis
        .iter()
        .map(|level| level.iter().enumerate().map(|(c, s)| (s, c)).collect())
        .collect();
    let mut boundary = Vec::with_capacity(alpha + 1);
    for i in 0..=alpha {
        let rows = if i == 0 { 0 } else { basis[i - 1].len() };
        let mut m = IntMatrix::zeros(rows, basis[i].len());
        if i > 0 {
            for (c, s) in basis[i].iter().enumerate() {
                for (pos, v) in s.iter().enumerate() {
                    let face = s.remove(v);
                    let row = index[i - 1][&face];
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    m.add_to(row, c, &BigInt::from(sign));
                }
            }
        }
        boundary.push(m);
    }
    ChainComplex::new(0, basis, boundary).expect("simplicial boundary squares to zero")
}

/// Block-diagonal direct sum; labels keep the index of their part.
pub fn direct_sum<L: Clone + fmt::Debug>(parts: &[ChainComplex<L>]) -> ChainComplex<(usize, L)> {
    if parts.is_empty() {
        return ChainComplex::new(0, Vec::new(), Vec::new()).expect("empty complex is valid");
    }
    let min = parts.iter().map(|c| c.min_degree()).min().unwrap();
    let max = parts.iter().map(|c| c.max_degree()).max().unwrap();
    let mut basis = Vec::new();
    let mut boundary = Vec::new();
    for degree in min..=max {
        let mut level: Vec<(usize, L)> = Vec::new();
        for (pi, part) in parts.iter().enumerate() {
            for label in part.basis(degree) {
                level.push((pi, label.clone()));
            }
        }
        let row_dims: Vec<usize> = parts.iter().map(|p| p.dim(degree - 1)).collect();
        let col_dims: Vec<usize> = parts.iter().map(|p| p.dim(degree)).collect();
        let blocks: Vec<IntMatrix> = parts.iter().map(|p| p.boundary(degree)).collect();
        let grid: Vec<Vec<Option<&IntMatrix>>> = (0..parts.len())
            .map(|bi| {
                (0..parts.len())
                    .map(|bj| if bi == bj { Some(&blocks[bi]) } else { None })
                    .collect()
            })
            .collect();
        let m = if degree == min {
            IntMatrix::zeros(0, level.len())
        } else {
            IntMatrix::from_blocks(&row_dims, &col_dims, &grid)
        };
        basis.push(level);
        boundary.push(m);
    }
    ChainComplex::new(min, basis, boundary).expect("blocks of valid complexes compose to zero")
}

/// Matrix of the map induced on homology by a chain map `f` acting from
/// `source_degree` to `target_degree` (columns: source generators, rows:
/// target generator coordinates). Fails if `f` does not carry some
/// representative into the target cycle lattice.
pub fn induced_map_on_homology(
    f: &IntMatrix,
    source: &GradedHomology,
    target: &GradedHomology,
    source_degree: i64,
    target_degree: i64,
) -> Result<IntMatrix> {
    let src = source.group(source_degree);
    let tgt = target.group(target_degree);
    let src_gens = src.map_or(0, |s| s.group().generator_count());
    let tgt_gens = tgt.map_or(0, |t| t.group().generator_count());
    let mut cols = Vec::with_capacity(src_gens);
    if let (Some(src), Some(tgt)) = (src, tgt) {
        for gi in 0..src_gens {
            let rep = src.group().generators.column(gi);
            let image = f.mul_vec(&rep);
            let coords = tgt.project(&image)?;
            cols.push(coords);
        }
    } else if src.is_some() {
        for _ in 0..src_gens {
            cols.push(Vec::new());
        }
    }
    Ok(IntMatrix::from_columns(tgt_gens, &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use num_traits::Zero;

    fn shapes(h: &GradedHomology) -> Vec<(i64, String)> {
        h.degrees()
            .filter(|&d| !h.shape(d).is_zero())
            .map(|d| (d, h.shape(d).to_string()))
            .collect()
    }

    #[test]
    fn p3_complex_matches_picture() {
        let p3 = family::path(3).unwrap();
        let c = independence_chain_complex(&p3, 1);
        assert_eq!(c.basis(0), &[VertexSet::empty()]);
        assert_eq!(c.dim(1), 3);
        assert_eq!(c.basis(2), &[VertexSet::new(vec![0, 2])]);
        assert_eq!(c.max_degree(), 2);
        let h = c.homology();
        assert_eq!(shapes(&h), vec![(1, "Z".to_string())]);
    }

    #[test]
    fn empty_graph_has_one_z_in_degree_zero() {
        let g = crate::graph::build_graph(0, &[]).unwrap();
        let c = independence_chain_complex(&g, 1);
        assert_eq!(c.total_dim(), 1);
        let h = c.homology();
        assert_eq!(shapes(&h), vec![(0, "Z".to_string())]);
    }

    #[test]
    fn c6_homology_is_z2_in_degree_two() {
        let c6 = family::cycle(6).unwrap();
        let h = independence_chain_complex(&c6, 1).homology();
        assert_eq!(shapes(&h), vec![(2, "Z^2".to_string())]);
    }

    #[test]
    fn complete_graph_homology() {
        for n in 2..=5 {
            let kn = family::complete(n).unwrap();
            let h = independence_chain_complex(&kn, 1).homology();
            assert_eq!(shapes(&h), vec![(1, GroupShape::free(n - 1).to_string())]);
        }
    }

    #[test]
    fn two_independence_of_c4_is_tetrahedron_skeleton() {
        let c4 = family::cycle(4).unwrap();
        let c = independence_chain_complex(&c4, 2);
        assert_eq!(c.dim(1), 4);
        assert_eq!(c.dim(2), 6);
        assert_eq!(c.max_degree(), 2);
        let h = c.homology();
        assert_eq!(shapes(&h), vec![(2, "Z^3".to_string())]);
    }

    #[test]
    fn euler_characteristic_equals_alternating_homology_ranks() {
        for g in [
            family::cycle(6).unwrap(),
            family::petersen(),
            family::path(7).unwrap(),
            family::cube_skeleton(),
        ] {
            let c = independence_chain_complex(&g, 1);
            let h = c.homology();
            let from_ranks: i64 = h
                .degrees()
                .map(|d| {
                    let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                    sign * h.shape(d).free_rank as i64
                })
                .sum();
            assert_eq!(c.euler_characteristic(), from_ranks);
        }
    }

    #[test]
    fn representatives_are_cycles() {
        let g = family::petersen();
        let c = independence_chain_complex(&g, 1);
        let h = c.homology();
        for d in h.degrees() {
            let boundary = c.boundary(d);
            if let Some(sub) = h.group(d) {
                for gi in 0..sub.group().generator_count() {
                    let rep = sub.group().generators.column(gi);
                    assert!(boundary.mul_vec(&rep).iter().all(Zero::is_zero));
                }
            }
        }
    }

    #[test]
    fn induced_identity_and_zero_maps() {
        let c6 = family::cycle(6).unwrap();
        let c = independence_chain_complex(&c6, 1);
        let h = c.homology();
        let id = IntMatrix::identity(c.dim(2));
        let m = induced_map_on_homology(&id, &h, &h, 2, 2).unwrap();
        assert_eq!(m, IntMatrix::identity(2));
        let zero = IntMatrix::zeros(c.dim(2), c.dim(2));
        let m = induced_map_on_homology(&zero, &h, &h, 2, 2).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn direct_sum_is_blockwise() {
        let p3 = independence_chain_complex(&family::path(3).unwrap(), 1);
        let parts = vec![p3.clone(), p3.clone().shifted(1)];
        let sum = direct_sum(&parts);
        assert_eq!(sum.min_degree(), 0);
        assert_eq!(sum.max_degree(), 3);
        assert_eq!(sum.dim(1), 3 + 1);
        let h = sum.homology();
        assert_eq!(h.shape(1).to_string(), "Z");
        assert_eq!(h.shape(2).to_string(), "Z");
    }
}
