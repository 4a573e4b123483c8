//! Tolerance-aware linear subspaces of an algebra, stored as orthonormal
//! row bases.

use std::sync::OnceLock;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, AlgebraId, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{orthonormal_complement, svd_null_space};
use crate::scalar::{inner, norm_l2, Tolerances, C64, ZERO};

#[derive(Debug, Clone)]
pub struct Subspace {
    parent: AlgebraId,
    ambient: usize,
    basis: Vec<Vec<C64>>,
    tol: Tolerances,
    complement: OnceLock<Vec<Vec<C64>>>,
}

impl Subspace {
    pub fn zero(alg: &StructureAlgebra) -> Self {
        Self::from_rows(alg, Vec::new())
    }

    pub fn whole(alg: &StructureAlgebra) -> Self {
        let d = alg.dim();
        Self::from_rows(alg, (0..d).map(|i| crate::scalar::unit_vector(d, i)).collect())
    }

    /// Span of elements of `alg`.
    pub fn span(alg: &StructureAlgebra, vectors: &[AlgebraElement]) -> Result<Self> {
        if vectors.iter().any(|v| v.parent() != alg.id()) {
            return Err(Error::ParentMismatch);
        }
        Ok(Self::from_rows(
            alg,
            vectors.iter().map(|v| v.coeffs().to_vec()).collect(),
        ))
    }

    /// Span of raw coefficient vectors. Panics if a vector has the wrong
    /// length.
    pub fn from_rows(alg: &StructureAlgebra, rows: Vec<Vec<C64>>) -> Self {
        Self::from_rows_with(alg, rows, Tolerances::default())
    }

    pub fn from_rows_with(alg: &StructureAlgebra, rows: Vec<Vec<C64>>, tol: Tolerances) -> Self {
        Self::reduce(alg.id(), alg.dim(), rows, tol)
    }

    /// Modified Gram–Schmidt with one re-orthogonalization pass; a vector is
    /// kept when its residual exceeds `tol.rank · max(1, ‖v‖)`.
    fn reduce(parent: AlgebraId, ambient: usize, rows: Vec<Vec<C64>>, tol: Tolerances) -> Self {
        let mut basis: Vec<Vec<C64>> = Vec::new();
        for mut v in rows {
            assert_eq!(v.len(), ambient, "vector length does not match the algebra");
            if basis.len() == ambient {
                break;
            }
            let n0 = norm_l2(&v);
            if n0 == 0.0 {
                continue;
            }
            for _ in 0..2 {
                for b in &basis {
                    let c = inner(b, &v);
                    if c != ZERO {
                        for (vi, bi) in v.iter_mut().zip(b) {
                            *vi -= c * bi;
                        }
                    }
                }
            }
            let n = norm_l2(&v);
            if n > tol.rank * n0.max(1.0) {
                v.iter_mut().for_each(|z| *z /= n);
                basis.push(v);
            }
        }
        Self {
            parent,
            ambient,
            basis,
            tol,
            complement: OnceLock::new(),
        }
    }

    fn same_parent(&self, other: &Subspace) -> Result<()> {
        if self.parent != other.parent || self.ambient != other.ambient {
            Err(Error::ParentMismatch)
        } else {
            Ok(())
        }
    }

    pub fn parent(&self) -> AlgebraId {
        self.parent
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Orthonormal basis rows.
    pub fn basis(&self) -> &[Vec<C64>] {
        &self.basis
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// Orthonormal basis of the orthogonal complement, computed once.
    pub fn complement_basis(&self) -> &[Vec<C64>] {
        self.complement
            .get_or_init(|| orthonormal_complement(&self.basis, self.ambient))
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        Self {
            parent: self.parent,
            ambient: self.ambient,
            basis: self.complement_basis().to_vec(),
            tol: self.tol,
            complement: OnceLock::new(),
        }
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &[C64]) -> Vec<C64> {
        let mut out = vec![ZERO; self.ambient];
        for b in &self.basis {
            let c = inner(b, v);
            for (o, bi) in out.iter_mut().zip(b) {
                *o += c * bi;
            }
        }
        out
    }

    /// `‖v − proj(v)‖₂`, using whichever of the basis or its complement is
    /// smaller.
    pub fn residual(&self, v: &[C64]) -> f64 {
        assert_eq!(v.len(), self.ambient, "vector length does not match the algebra");
        if self.basis.len() == self.ambient {
            return 0.0;
        }
        if self.ambient - self.basis.len() <= self.basis.len() {
            let nz: Vec<usize> = (0..v.len()).filter(|&i| v[i] != ZERO).collect();
            self.complement_basis()
                .iter()
                .map(|q| {
                    nz.iter()
                        .map(|&i| q[i].conj() * v[i])
                        .sum::<C64>()
                        .norm_sqr()
                })
                .sum::<f64>()
                .sqrt()
        } else {
            let p = self.project(v);
            v.iter()
                .zip(&p)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt()
        }
    }

    /// Membership of a raw coefficient vector:
    /// `‖v − proj(v)‖ ≤ EPS_MEMBER · max(1, ‖v‖)`.
    pub fn contains_vec(&self, v: &[C64]) -> bool {
        self.residual(v) <= self.tol.member * norm_l2(v).max(1.0)
    }

    pub fn contains(&self, v: &AlgebraElement) -> Result<bool> {
        if v.parent() != self.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(self.contains_vec(v.coeffs()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.same_parent(other)?;
        Ok(self.basis.len() <= other.basis.len()
            && self.basis.iter().all(|b| other.contains_vec(b)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.same_parent(other)?;
        Ok(self.basis.len() == other.basis.len()
            && self.is_subspace_of(other)?
            && other.is_subspace_of(self)?)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_parent(other)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::reduce(self.parent, self.ambient, rows, self.tol))
    }

    /// `S ∩ T`: coefficient vectors `a` with `(I − P_T) Σ aᵢ sᵢ = 0`, found
    /// as the right null space of the components of `S`'s basis in the
    /// complement of `T`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_parent(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::reduce(self.parent, self.ambient, Vec::new(), self.tol));
        }
        let comp = other.complement_basis();
        if comp.is_empty() {
            return Ok(self.clone());
        }
        let r = self.basis.len();
        let m = DMatrix::from_fn(comp.len(), r, |k, i| inner(&comp[k], &self.basis[i]));
        let rows = svd_null_space(m, self.tol.member)
            .into_iter()
            .map(|a| {
                let mut v = vec![ZERO; self.ambient];
                for (ai, s) in a.iter().zip(&self.basis) {
                    for (vi, si) in v.iter_mut().zip(s) {
                        *vi += ai * si;
                    }
                }
                v
            })
            .collect();
        Ok(Self::reduce(self.parent, self.ambient, rows, self.tol))
    }

    pub fn elements(&self) -> Vec<AlgebraElement> {
        self.basis
            .iter()
            .map(|b| AlgebraElement::from_parts(self.parent, b.clone()))
            .collect()
    }

    pub fn to_file(&self, algebra: serde_json::Value) -> SubspaceFile {
        SubspaceFile {
            algebra,
            basis: self
                .basis
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|z| {
                            let z = crate::scalar::clamp_noise(*z);
                            [z.re, z.im]
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Read the basis of a subspace file against an already-resolved algebra.
    pub fn from_file_basis(alg: &StructureAlgebra, file: &SubspaceFile, tol: Tolerances) -> Result<Self> {
        let mut rows = Vec::with_capacity(file.basis.len());
        for (r, row) in file.basis.iter().enumerate() {
            if row.len() != alg.dim() {
                return Err(Error::Malformed(format!(
                    "basis row {r} has length {}, algebra has dimension {}",
                    row.len(),
                    alg.dim()
                )));
            }
            rows.push(row.iter().map(|p| C64::new(p[0], p[1])).collect());
        }
        Ok(Self::from_rows_with(alg, rows, tol))
    }
}

/// On-disk subspace format. `algebra` is either a spec string (see
/// [`crate::algebra::AlgebraSpec`]) or an inline algebra object.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubspaceFile {
    pub algebra: serde_json::Value,
    pub basis: Vec<Vec<[f64; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupTable, NamedGroup};
    use crate::scalar::ONE;

    fn d6_algebra() -> StructureAlgebra {
        StructureAlgebra::group_algebra(&GroupTable::named(NamedGroup::Dihedral(6)).unwrap()).unwrap()
    }

    fn vec_of(pairs: &[(usize, f64)], d: usize) -> Vec<C64> {
        let mut v = vec![ZERO; d];
        for &(i, x) in pairs {
            v[i] += C64::new(x, 0.0);
        }
        v
    }

    #[test]
    fn empty_and_dependent_spans() {
        let a = d6_algebra();
        assert_eq!(Subspace::span(&a, &[]).unwrap().rank(), 0);
        let v = a.basis_element(2);
        let s = Subspace::span(&a, &[v.clone(), v.scale(C64::new(2.0, 0.0))]).unwrap();
        assert_eq!(s.rank(), 1);
        let s = Subspace::span(&a, &[a.basis_element(0), a.basis_element(1), a.basis_element(2)]).unwrap();
        assert_eq!(s.rank(), 3);
    }

    #[test]
    fn membership() {
        let a = d6_algebra();
        let l = Subspace::from_rows(
            &a,
            vec![
                vec_of(&[(1, 1.0), (2, -1.0)], 6),
                vec_of(&[(3, 1.0), (5, -1.0)], 6),
                vec_of(&[(4, 1.0), (5, -1.0)], 6),
            ],
        );
        assert!(l.contains_vec(&vec![ZERO; 6]));
        for b in l.basis() {
            assert!(l.contains_vec(b));
        }
        assert!(l.contains_vec(&vec_of(&[(3, 1.0), (5, -1.0)], 6)));
        assert!(!l.contains_vec(&vec_of(&[(0, 1.0)], 6)));
        let other = StructureAlgebra::matrix_algebra(2).unwrap();
        assert_eq!(l.contains(&other.basis_element(0)).unwrap_err(), Error::ParentMismatch);
    }

    #[test]
    fn lattice_operations() {
        let a = d6_algebra();
        let s = Subspace::from_rows(&a, vec![vec_of(&[(0, 1.0)], 6), vec_of(&[(1, 1.0)], 6)]);
        let t = Subspace::from_rows(&a, vec![vec_of(&[(1, 1.0)], 6), vec_of(&[(2, 1.0)], 6)]);
        let zero = Subspace::zero(&a);
        assert!(s.sum(&zero).unwrap().equals(&s).unwrap());
        assert!(s.intersect(&s).unwrap().equals(&s).unwrap());
        let meet = s.intersect(&t).unwrap();
        assert_eq!(meet.rank(), 1);
        assert!(meet.contains_vec(&vec_of(&[(1, 1.0)], 6)));
        assert_eq!(s.sum(&t).unwrap().rank(), 3);
        assert!(!s.equals(&t).unwrap());
        let whole = Subspace::whole(&a);
        assert!(whole.contains_vec(&vec_of(&[(5, 3.0)], 6)));
        assert!(whole.intersect(&s).unwrap().equals(&s).unwrap());
        assert_eq!(s.orthogonal_complement().rank(), 4);
    }

    #[test]
    fn respan_is_equal() {
        let a = d6_algebra();
        let s = Subspace::from_rows(
            &a,
            vec![
                vec![ONE, C64::new(0.0, 1.0), ZERO, ONE, ZERO, ZERO],
                vec![ZERO, ONE, ONE, ZERO, C64::new(2.0, -1.0), ZERO],
            ],
        );
        let t = Subspace::from_rows(&a, s.basis().to_vec());
        assert!(s.equals(&t).unwrap());
        for (i, u) in s.basis().iter().enumerate() {
            for (j, v) in s.basis().iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((inner(u, v) - C64::new(expect, 0.0)).norm() < 1e-10);
            }
        }
    }
}
