//! `ℂ[G]⊗A` viewed as `A`-valued functions on `G`.
//!
//! Coefficients are group-major: the slice `f(x)` occupies
//! `x·dim(A) .. (x+1)·dim(A)`, so translations permute whole blocks.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::scalar::{Tolerances, C64, ZERO};
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct GeneralizedAlgebra {
    group: GroupTable,
    coeff: StructureAlgebra,
    algebra: StructureAlgebra,
    coeff_center: Subspace,
    tol: Tolerances,
}

impl GeneralizedAlgebra {
    pub fn new(group: GroupTable, coeff: StructureAlgebra) -> Result<Self> {
        Self::with_tolerances(group, coeff, Tolerances::default())
    }

    pub fn with_tolerances(group: GroupTable, coeff: StructureAlgebra, tol: Tolerances) -> Result<Self> {
        let algebra = StructureAlgebra::generalized_group_algebra(&group, &coeff)?;
        let coeff_center = coeff.center_with(&tol);
        Ok(Self {
            group,
            coeff,
            algebra,
            coeff_center,
            tol,
        })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    /// The coefficient algebra `A`.
    pub fn coeff(&self) -> &StructureAlgebra {
        &self.coeff
    }

    /// The tensor algebra `ℂ[G]⊗A` as structure constants.
    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    /// `Z(A)`
    pub fn coeff_center(&self) -> &Subspace {
        &self.coeff_center
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// `dim(A)`
    pub fn block(&self) -> usize {
        self.coeff.dim()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `f(x)` as a coefficient vector of `A`.
    pub fn slice<'a>(&self, f: &'a [C64], x: usize) -> &'a [C64] {
        let d = self.block();
        &f[x * d..(x + 1) * d]
    }

    /// The element `x ⊗ v`.
    pub fn embed(&self, x: usize, v: &[C64]) -> Vec<C64> {
        let d = self.block();
        let mut out = vec![ZERO; self.dim()];
        out[x * d..(x + 1) * d].copy_from_slice(v);
        out
    }

    pub fn span_rows(&self, rows: Vec<Vec<C64>>) -> Subspace {
        Subspace::from_rows_with(&self.algebra, rows, self.tol)
    }

    /// `(x·f)(y) = f(x⁻¹y)`
    pub fn left_translate(&self, x: usize, f: &[C64]) -> Vec<C64> {
        left_translate(&self.group, x, f)
    }

    /// `(f·x)(y) = f(yx)`
    pub fn right_translate(&self, f: &[C64], x: usize) -> Vec<C64> {
        right_translate(&self.group, f, x)
    }

    /// `(fa)(y) = f(y)·a` for the basis element `a = b_i` of `A`.
    pub fn right_mul_coeff(&self, f: &[C64], i: usize) -> Vec<C64> {
        let d = self.block();
        let mut out = Vec::with_capacity(f.len());
        for chunk in f.chunks(d) {
            out.extend(self.coeff.right_mul_basis(chunk, i));
        }
        out
    }

    /// `(af)(y) = a·f(y)` for the basis element `a = b_i` of `A`.
    pub fn left_mul_coeff(&self, i: usize, f: &[C64]) -> Vec<C64> {
        let d = self.block();
        let mut out = Vec::with_capacity(f.len());
        for chunk in f.chunks(d) {
            out.extend(self.coeff.left_mul_basis(i, chunk));
        }
        out
    }

    /// `(f·x⁻¹)a − a(x·f)` for the basis element `a = b_i`.
    pub fn translate_commutator(&self, f: &[C64], x: usize, i: usize) -> Vec<C64> {
        let right = self.right_mul_coeff(&self.right_translate(f, self.group.inv(x)), i);
        let left = self.left_mul_coeff(i, &self.left_translate(x, f));
        right.iter().zip(&left).map(|(r, l)| r - l).collect()
    }

    /// `F̃ = {f : f(x) ∈ F for all x}`, spanned by `x ⊗ v` over a basis of `F`.
    pub fn lift(&self, f: &Subspace) -> Result<Subspace> {
        if f.parent() != self.coeff.id() {
            return Err(Error::ParentMismatch);
        }
        let mut rows = Vec::with_capacity(self.group.order() * f.rank());
        for x in 0..self.group.order() {
            for v in f.basis() {
                rows.push(self.embed(x, v));
            }
        }
        Ok(self.span_rows(rows))
    }

    /// `span{z_C ⊗ w}` over conjugacy classes `C` and a basis of `W ⊆ A`.
    pub fn class_function_space(&self, w: &Subspace) -> Result<Subspace> {
        if w.parent() != self.coeff.id() {
            return Err(Error::ParentMismatch);
        }
        let d = self.block();
        let mut rows = Vec::new();
        for class in self.group.conjugacy_classes() {
            for v in w.basis() {
                let mut row = vec![ZERO; self.dim()];
                for &x in class {
                    row[x * d..(x + 1) * d].copy_from_slice(v);
                }
                rows.push(row);
            }
        }
        Ok(self.span_rows(rows))
    }
}

/// `(x·f)(y) = f(x⁻¹y)`; `f` may be `A`-valued, with blocks of length
/// `f.len() / |G|`.
pub fn left_translate(g: &GroupTable, x: usize, f: &[C64]) -> Vec<C64> {
    let d = f.len() / g.order();
    let mut out = vec![ZERO; f.len()];
    for z in 0..g.order() {
        let y = g.mul(x, z);
        out[y * d..(y + 1) * d].copy_from_slice(&f[z * d..(z + 1) * d]);
    }
    out
}

/// `(f·x)(y) = f(yx)`
pub fn right_translate(g: &GroupTable, f: &[C64], x: usize) -> Vec<C64> {
    let d = f.len() / g.order();
    let xi = g.inv(x);
    let mut out = vec![ZERO; f.len()];
    for z in 0..g.order() {
        let y = g.mul(z, xi);
        out[y * d..(y + 1) * d].copy_from_slice(&f[z * d..(z + 1) * d]);
    }
    out
}
