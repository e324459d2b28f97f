//! Finitely generated abelian groups presented as subquotients `K / B` of an
//! ambient lattice, with explicit generator lifts and a projection map.
//!
//! Every homology group and every spectral page entry in this crate is such a
//! subquotient: `K` is a sublattice of some chain group (cycles, or zig-zag
//! extendable cycles) and `B` a sublattice of `K` (boundaries). Generators are
//! stored as ambient vectors so differentials can be evaluated on them
//! directly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{vec_is_zero, IntMatrix};
use crate::snf::{smith_normal_form, unimodular_inverse, LinearSolver};

/// Isomorphism type of a finitely generated abelian group:
/// `Z^free_rank + Z/t_1 + Z/t_2 + ...` with `t_1 | t_2 | ...`, each `t_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupShape {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl GroupShape {
    pub fn free(rank: usize) -> Self {
        GroupShape {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free_of_rank(&self, rank: usize) -> bool {
        self.free_rank == rank && self.torsion.is_empty()
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// A finitely generated abelian group together with generator lifts into an
/// ambient free module. Free generators come first, then torsion generators
/// in ascending divisibility order.
#[derive(Clone, Debug)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub generators: IntMatrix,
    pub ambient_dim: usize,
}

impl AbelianGroup {
    pub fn zero(ambient_dim: usize) -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
            generators: IntMatrix::zeros(ambient_dim, 0),
            ambient_dim,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn shape(&self) -> GroupShape {
        GroupShape {
            free_rank: self.free_rank,
            torsion: self.torsion.clone(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape())
    }
}

/// Presentation of `K / B` for sublattices `B <= K` of an ambient `Z^n`,
/// carrying the maps needed to move between ambient vectors and group
/// coordinates.
pub struct Subquotient {
    group: AbelianGroup,
    ambient_dim: usize,
    lattice_rank: usize,
    /// Basis of the `K` lattice, one column per basis vector.
    basis: IntMatrix,
    basis_solver: Option<LinearSolver>,
    /// Unimodular change of coordinates on `Z^lattice_rank` diagonalizing the
    /// relation matrix.
    to_group: IntMatrix,
    /// Modulus per transformed coordinate: `1` trivial, `>= 2` torsion,
    /// `0` free.
    moduli: Vec<BigInt>,
    free_idx: Vec<usize>,
    torsion_idx: Vec<usize>,
}

impl Subquotient {
    /// Present the quotient of the column lattice of `k` by the column
    /// lattice of `b`. Fails if `b` does not lie inside the `k` lattice.
    pub fn new(k: &IntMatrix, b: &IntMatrix) -> Result<Self> {
        let n = k.rows();
        if b.cols() > 0 && b.rows() != n {
            return Err(Error::Contract(format!(
                "subquotient ambient mismatch: {} vs {}",
                n,
                b.rows()
            )));
        }
        let snf_k = smith_normal_form(k);
        let lattice_rank = snf_k.rank;
        if lattice_rank == 0 {
            if !b.is_zero() {
                return Err(Error::Contract(
                    "relation lattice is not contained in a zero sublattice".into(),
                ));
            }
            return Ok(Subquotient {
                group: AbelianGroup::zero(n),
                ambient_dim: n,
                lattice_rank: 0,
                basis: IntMatrix::zeros(n, 0),
                basis_solver: None,
                to_group: IntMatrix::zeros(0, 0),
                moduli: Vec::new(),
                free_idx: Vec::new(),
                torsion_idx: Vec::new(),
            });
        }
        let kv = k.mul(&snf_k.v);
        let idx: Vec<usize> = (0..lattice_rank).collect();
        let basis = kv.select_columns(&idx);
        let basis_solver = LinearSolver::new(&basis);
        let relations = basis_solver.solve_all(b).ok_or_else(|| {
            Error::Contract("relation lattice is not contained in the sublattice".into())
        })?;
        let snf_x = smith_normal_form(&relations);
        let t = snf_x.rank;
        let mut moduli = vec![BigInt::zero(); lattice_rank];
        for (i, m) in moduli.iter_mut().enumerate().take(t) {
            *m = snf_x.d.get(i, i).clone();
        }
        let free_idx: Vec<usize> = (t..lattice_rank).collect();
        let torsion_idx: Vec<usize> = (0..t)
            .filter(|&i| moduli[i] > BigInt::from(1))
            .collect();
        let inv = unimodular_inverse(&snf_x.u).expect("Smith transform is unimodular");
        let all_gens = basis.mul(&inv);
        let order: Vec<usize> = free_idx.iter().chain(torsion_idx.iter()).copied().collect();
        let generators = all_gens.select_columns(&order);
        let torsion: Vec<BigInt> = torsion_idx.iter().map(|&i| moduli[i].clone()).collect();
        let group = AbelianGroup {
            free_rank: free_idx.len(),
            torsion,
            generators,
            ambient_dim: n,
        };
        Ok(Subquotient {
            group,
            ambient_dim: n,
            lattice_rank,
            basis,
            basis_solver: Some(basis_solver),
            to_group: snf_x.u,
            moduli,
            free_idx,
            torsion_idx,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn lattice_basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Rank of the sublattice `K` being quotiented.
    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    /// Coordinates of the class of `v` in generator order (free coordinates
    /// first, torsion coordinates reduced into `[0, t)`). Fails when `v` does
    /// not lie in the `K` lattice.
    pub fn project(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.ambient_dim {
            return Err(Error::Contract(format!(
                "projection of a vector of length {} into ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        let Some(solver) = &self.basis_solver else {
            if vec_is_zero(v) {
                return Ok(Vec::new());
            }
            return Err(Error::Contract(
                "nonzero vector projected into a zero sublattice".into(),
            ));
        };
        let y = solver
            .solve(v)
            .ok_or_else(|| Error::Contract("vector does not lie in the sublattice".into()))?;
        let c = self.to_group.mul_vec(&y);
        let mut coords = Vec::with_capacity(self.group.generator_count());
        for &i in &self.free_idx {
            coords.push(c[i].clone());
        }
        for &i in &self.torsion_idx {
            coords.push(c[i].mod_floor(&self.moduli[i]));
        }
        Ok(coords)
    }

    /// Ambient representative of the class with the given coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.group.generator_count());
        self.group.generators.mul_vec(coords)
    }

    /// Whether the class coordinates are those of the zero class.
    pub fn coords_are_zero(&self, coords: &[BigInt]) -> bool {
        let free = self.group.free_rank;
        coords[..free].iter().all(Zero::is_zero)
            && coords[free..]
                .iter()
                .zip(&self.group.torsion)
                .all(|(c, t)| c.mod_floor(t).is_zero())
    }
}

/// Present `K / B`; see [`Subquotient::new`].
pub fn subquotient(k: &IntMatrix, b: &IntMatrix) -> Result<Subquotient> {
    Subquotient::new(k, b)
}

/// Normalize a multiset of torsion coefficients into the ascending
/// divisibility chain of the direct sum they present. Needed when comparing
/// a direct sum of groups against a single presentation: `Z/2 + Z/3` and
/// `Z/6` are the same group.
pub fn canonical_torsion(parts: impl IntoIterator<Item = BigInt>) -> Vec<BigInt> {
    let one = BigInt::from(1);
    let mut v: Vec<BigInt> = parts.into_iter().filter(|t| *t > one).collect();
    loop {
        let mut changed = false;
        for a in 0..v.len() {
            for b in 0..v.len() {
                if a == b {
                    continue;
                }
                let (small, large) = if a < b { (a, b) } else { (b, a) };
                let rem = &v[large] % &v[small];
                if !rem.is_zero() {
                    let g = v[small].gcd(&v[large]);
                    let l = &v[small] / &g * &v[large];
                    v[small] = g;
                    v[large] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    v.sort();
    v.retain(|t| *t > one);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_rank_two() {
        let k = IntMatrix::identity(2);
        let b = IntMatrix::zeros(2, 0);
        let sq = Subquotient::new(&k, &b).unwrap();
        assert_eq!(sq.group().shape(), GroupShape::free(2));
    }

    #[test]
    fn z_mod_2z() {
        let k = IntMatrix::identity(1);
        let b = IntMatrix::from_rows(vec![vec![2]]);
        let sq = Subquotient::new(&k, &b).unwrap();
        assert_eq!(sq.group().free_rank, 0);
        assert_eq!(sq.group().torsion, vec![BigInt::from(2)]);
        assert_eq!(format!("{}", sq.group()), "Z/2");
    }

    #[test]
    fn relations_outside_lattice_are_rejected() {
        let k = IntMatrix::from_rows(vec![vec![2], vec![0]]);
        let b = IntMatrix::from_rows(vec![vec![1], vec![0]]);
        assert!(Subquotient::new(&k, &b).is_err());
    }

    #[test]
    fn project_then_lift_is_identity_on_generators() {
        // K = Z^2, B generated by (2, 0): group Z + Z/2.
        let k = IntMatrix::identity(2);
        let b = IntMatrix::from_rows(vec![vec![2], vec![0]]);
        let sq = Subquotient::new(&k, &b).unwrap();
        assert_eq!(sq.group().free_rank, 1);
        assert_eq!(sq.group().torsion, vec![BigInt::from(2)]);
        for g in 0..sq.group().generator_count() {
            let col = sq.group().generators.column(g);
            let coords = sq.project(&col).unwrap();
            let mut expected = vec![BigInt::zero(); sq.group().generator_count()];
            expected[g] = BigInt::from(1);
            assert_eq!(coords, expected);
        }
    }

    #[test]
    fn shape_display() {
        assert_eq!(GroupShape::zero().to_string(), "0");
        assert_eq!(GroupShape::free(1).to_string(), "Z");
        assert_eq!(GroupShape::free(4).to_string(), "Z^4");
        let s = GroupShape {
            free_rank: 2,
            torsion: vec![BigInt::from(2), BigInt::from(4)],
        };
        assert_eq!(s.to_string(), "Z^2 + Z/2 + Z/4");
    }
}
