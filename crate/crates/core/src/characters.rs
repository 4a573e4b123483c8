//! Character tables by the class-sum eigenvector method, and the
//! Wedderburn data of `ℂ[G]` derived from them: minimal central
//! idempotents, minimal two-sided ideals and their trace-zero parts.
//!
//! Multiplication by a class sum `z_l` on the center of `ℂ[G]`, written in
//! the orthonormal basis `z_m / √|C_m|`, is a normal matrix whose adjoint is
//! multiplication by the inverse class sum. Random real combinations of
//! `N + Nᴴ` and `i(N − Nᴴ)` are therefore Hermitian and commute, and their
//! common eigenvectors are the central idempotents up to scale. Each
//! eigenvector gives `χ(C_m)/χ(e)` directly, and the degree follows from
//! the first orthogonality relation.

use std::cmp::Ordering;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, StructureAlgebra};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::scalar::{clamp_noise, Tolerances, C64, ONE, ZERO};
use crate::subspace::Subspace;

const SPECTRAL_GAP: f64 = 1e-6;
const MAX_REDRAWS: usize = 20;
const ORTHOGONALITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    order: usize,
    /// `values[j][i] = χ_j(C_i)`
    values: Vec<Vec<C64>>,
    degrees: Vec<usize>,
    class_sizes: Vec<usize>,
    class_reps: Vec<usize>,
}

impl CharacterTable {
    /// Compute the table of `g`. `seed` drives the random combinations;
    /// the result does not depend on it except through failure modes.
    pub fn compute(g: &GroupTable, seed: u64) -> Result<Self> {
        let classes = g.conjugacy_classes();
        let k = classes.len();
        let order = g.order();
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();

        let ops = class_operators(g);
        let vectors = common_eigenvectors(&ops, seed)?;

        let mut rows = Vec::with_capacity(k);
        for v in vectors {
            let v0 = v[0];
            let ratio: Vec<C64> = (0..k)
                .map(|m| (v[m] / (sizes[m] as f64).sqrt() / v0).conj())
                .collect();
            let weight: f64 = (0..k).map(|m| sizes[m] as f64 * ratio[m].norm_sqr()).sum();
            let degree = (order as f64 / weight).sqrt();
            let rounded = degree.round();
            if (degree - rounded).abs() > 1e-6 || rounded < 1.0 {
                return Err(Error::OrthogonalityFailure {
                    residual: (degree - rounded).abs(),
                });
            }
            let values: Vec<C64> = ratio.iter().map(|r| r * rounded).collect();
            rows.push((rounded as usize, values));
        }

        rows.sort_by(|a, b| row_order(a, b));
        let table = Self {
            order,
            degrees: rows.iter().map(|r| r.0).collect(),
            values: rows.into_iter().map(|r| r.1).collect(),
            class_sizes: sizes,
            class_reps: reps,
        };
        let residual = table.orthogonality_residual();
        let degree_sum: usize = table.degrees.iter().map(|n| n * n).sum();
        if residual > ORTHOGONALITY_TOL || degree_sum != order {
            return Err(Error::OrthogonalityFailure { residual });
        }
        Ok(table)
    }

    pub fn num_classes(&self) -> usize {
        self.values.len()
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    /// `χ_j(C_i)`
    pub fn value(&self, j: usize, class: usize) -> C64 {
        self.values[j][class]
    }

    pub fn row(&self, j: usize) -> &[C64] {
        &self.values[j]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, j: usize) -> usize {
        self.degrees[j]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.class_reps
    }

    /// Largest deviation from the row relation
    /// `(1/|G|) Σ_i |C_i| χ_j(C_i) conj(χ_l(C_i)) = δ_jl`.
    pub fn row_orthogonality_residual(&self) -> f64 {
        let k = self.values.len();
        let mut worst: f64 = 0.0;
        for j in 0..k {
            for l in 0..k {
                let s: C64 = (0..k)
                    .map(|i| self.values[j][i] * self.values[l][i].conj() * self.class_sizes[i] as f64)
                    .sum::<C64>()
                    / self.order as f64;
                let target = if j == l { ONE } else { ZERO };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }

    /// Largest deviation from the column relation
    /// `Σ_j χ_j(C_i) conj(χ_j(C_m)) = δ_im |G|/|C_i|`, relative to `|G|`.
    pub fn column_orthogonality_residual(&self) -> f64 {
        let k = self.values.len();
        let mut worst: f64 = 0.0;
        for i in 0..k {
            for m in 0..k {
                let s: C64 = (0..k).map(|j| self.values[j][i] * self.values[j][m].conj()).sum();
                let target = if i == m {
                    self.order as f64 / self.class_sizes[i] as f64
                } else {
                    0.0
                };
                worst = worst.max((s - C64::new(target, 0.0)).norm() / self.order as f64);
            }
        }
        worst
    }

    pub fn orthogonality_residual(&self) -> f64 {
        self.row_orthogonality_residual()
            .max(self.column_orthogonality_residual())
    }

    pub fn to_file(&self) -> CharacterTableFile {
        CharacterTableFile {
            k: self.values.len(),
            degrees: self.degrees.clone(),
            class_sizes: self.class_sizes.clone(),
            values: self
                .values
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|z| {
                            let z = clamp_noise(*z);
                            [z.re, z.im]
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// JSON dump of a character table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterTableFile {
    pub k: usize,
    pub degrees: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub values: Vec<Vec<[f64; 2]>>,
}

fn is_trivial_row(values: &[C64]) -> bool {
    values.iter().all(|v| (v - ONE).norm() < 1e-6)
}

fn quantize(x: f64) -> i64 {
    (x * 1e6).round() as i64
}

/// Trivial character first, then by degree, then lexicographically on the
/// values (real part, then imaginary part, class by class).
fn row_order(a: &(usize, Vec<C64>), b: &(usize, Vec<C64>)) -> Ordering {
    let ta = is_trivial_row(&a.1);
    let tb = is_trivial_row(&b.1);
    tb.cmp(&ta).then(a.0.cmp(&b.0)).then_with(|| {
        a.1.iter()
            .zip(&b.1)
            .map(|(x, y)| {
                quantize(x.re)
                    .cmp(&quantize(y.re))
                    .then(quantize(x.im).cmp(&quantize(y.im)))
            })
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// `N_l[n][m] = c_{lmn} √(|C_n|/|C_m|)` where `c_{lmn}` counts pairs
/// `(a, b) ∈ C_l × C_m` with `ab` equal to the representative of `C_n`.
fn class_operators(g: &GroupTable) -> Vec<DMatrix<C64>> {
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let mut ops = Vec::with_capacity(k);
    for cl in classes {
        let mut coeff = DMatrix::<f64>::zeros(k, k);
        for (m, cm) in classes.iter().enumerate() {
            for &a in cl {
                for &b in cm {
                    let p = g.mul(a, b);
                    let n = g.class_of(p);
                    if classes[n][0] == p {
                        coeff[(n, m)] += 1.0;
                    }
                }
            }
        }
        ops.push(DMatrix::from_fn(k, k, |n, m| {
            let scale = (classes[n].len() as f64 / classes[m].len() as f64).sqrt();
            C64::new(coeff[(n, m)] * scale, 0.0)
        }));
    }
    ops
}

fn random_hermitian(ops: &[DMatrix<C64>], rng: &mut ChaCha8Rng) -> DMatrix<C64> {
    let k = ops[0].nrows();
    let mut h = DMatrix::from_element(k, k, ZERO);
    let i = C64::new(0.0, 1.0);
    for n in ops {
        let adj = n.adjoint();
        let s: f64 = rng.random_range(-1.0..1.0);
        let t: f64 = rng.random_range(-1.0..1.0);
        h += (n + &adj) * C64::new(s, 0.0) + (n - &adj) * (i * t);
    }
    h
}

/// Eigenvalue clusters (indices into the sorted spectrum) separated by
/// more than the spectral gap.
fn clusters(eigenvalues: &[f64]) -> Vec<Vec<usize>> {
    let mut idx: Vec<usize> = (0..eigenvalues.len()).collect();
    idx.sort_by(|&a, &b| eigenvalues[a].total_cmp(&eigenvalues[b]));
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &i in &idx {
        match out.last_mut() {
            Some(c) if eigenvalues[i] - eigenvalues[*c.last().unwrap()] < SPECTRAL_GAP => c.push(i),
            _ => out.push(vec![i]),
        }
    }
    out
}

/// Common eigenvectors of the commuting class operators, as columns in the
/// orthonormal class basis.
fn common_eigenvectors(ops: &[DMatrix<C64>], seed: u64) -> Result<Vec<Vec<C64>>> {
    let k = ops[0].nrows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let column = |m: &DMatrix<C64>, c: usize| -> Vec<C64> { m.column(c).iter().cloned().collect() };

    let mut last = None;
    for _ in 0..MAX_REDRAWS {
        let eig = SymmetricEigen::new(random_hermitian(ops, &mut rng));
        let vals: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
        if clusters(&vals).iter().all(|c| c.len() == 1) {
            return Ok((0..k).map(|c| column(&eig.eigenvectors, c)).collect());
        }
        last = Some(eig);
    }

    // Refine each degenerate eigenspace of the last draw with further
    // combinations restricted to it.
    let eig = last.expect("at least one draw");
    let vals: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
    let mut pending: Vec<DMatrix<C64>> = Vec::new();
    let mut done: Vec<Vec<C64>> = Vec::new();
    for c in clusters(&vals) {
        if c.len() == 1 {
            done.push(column(&eig.eigenvectors, c[0]));
        } else {
            pending.push(DMatrix::from_fn(k, c.len(), |r, s| eig.eigenvectors[(r, c[s])]));
        }
    }
    for _ in 0..MAX_REDRAWS {
        if pending.is_empty() {
            break;
        }
        let h = random_hermitian(ops, &mut rng);
        let mut next = Vec::new();
        for basis in pending {
            let restricted = basis.adjoint() * &h * &basis;
            let sub = SymmetricEigen::new(restricted);
            let rotated = &basis * &sub.eigenvectors;
            let vals: Vec<f64> = sub.eigenvalues.iter().cloned().collect();
            for c in clusters(&vals) {
                if c.len() == 1 {
                    done.push(column(&rotated, c[0]));
                } else {
                    next.push(DMatrix::from_fn(k, c.len(), |r, s| rotated[(r, c[s])]));
                }
            }
        }
        pending = next;
    }
    if !pending.is_empty() {
        return Err(Error::DegenerateSpectrum);
    }
    Ok(done)
}

/// `ℂ[G]` together with its character table and minimal central
/// idempotents `ω_j = (n_j/|G|) Σ_x χ_j(x⁻¹) x`, indexed like the table rows.
#[derive(Debug, Clone)]
pub struct GroupAlgebra {
    group: GroupTable,
    algebra: StructureAlgebra,
    table: CharacterTable,
    idempotents: Vec<AlgebraElement>,
    tol: Tolerances,
}

impl GroupAlgebra {
    pub fn new(group: GroupTable, seed: u64) -> Result<Self> {
        Self::with_tolerances(group, seed, Tolerances::default())
    }

    pub fn with_tolerances(group: GroupTable, seed: u64, tol: Tolerances) -> Result<Self> {
        let table = CharacterTable::compute(&group, seed)?;
        let algebra = StructureAlgebra::group_algebra(&group)?;
        let idempotents = central_idempotents(&group, &algebra, &table);
        Ok(Self {
            group,
            algebra,
            table,
            idempotents,
            tol,
        })
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// Span of raw coefficient vectors of `ℂ[G]` at this object's tolerances.
    pub fn span_rows(&self, rows: Vec<Vec<C64>>) -> Subspace {
        Subspace::from_rows_with(&self.algebra, rows, self.tol)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn num_blocks(&self) -> usize {
        self.idempotents.len()
    }

    pub fn idempotents(&self) -> &[AlgebraElement] {
        &self.idempotents
    }

    pub fn idempotent(&self, j: usize) -> &AlgebraElement {
        &self.idempotents[j]
    }

    /// `χ̃_j(z) = Σ_x z(x) χ_j(x)`
    pub fn chi_tilde(&self, j: usize, z: &[C64]) -> C64 {
        z.iter()
            .enumerate()
            .map(|(x, zx)| zx * self.table.value(j, self.group.class_of(x)))
            .sum()
    }

    /// `K_j = span{ω_j·x : x ∈ G}`
    pub fn minimal_ideal(&self, j: usize) -> Subspace {
        let w = self.idempotents[j].coeffs();
        let rows = (0..self.group.order())
            .map(|x| self.algebra.right_mul_basis(w, x))
            .collect();
        self.span_rows(rows)
    }

    /// Basis of `ker χ̃_j`: `x − (χ_j(x)/n_j)·e` for `x ≠ e`.
    fn kernel_rows(&self, j: usize) -> Vec<Vec<C64>> {
        let n = self.group.order();
        let nj = self.table.degree(j) as f64;
        (1..n)
            .map(|x| {
                let mut v = vec![ZERO; n];
                v[x] = ONE;
                v[0] = -self.table.value(j, self.group.class_of(x)) / nj;
                v
            })
            .collect()
    }

    pub fn chi_kernel(&self, j: usize) -> Subspace {
        self.span_rows(self.kernel_rows(j))
    }

    /// Trace-zero part of the j-th block: `ker(χ̃_j)·ω_j`.
    pub fn sl_block(&self, j: usize) -> Subspace {
        let w = self.idempotents[j].coeffs();
        let rows = self
            .kernel_rows(j)
            .iter()
            .map(|z| self.algebra.mul_slices(z, w))
            .collect();
        self.span_rows(rows)
    }

    /// `span{ω_1, …, ω_k}`
    pub fn idempotent_span(&self) -> Subspace {
        self.span_rows(self.idempotents.iter().map(|w| w.coeffs().to_vec()).collect())
    }

    /// `span{z_C}` over conjugacy classes `C`.
    pub fn class_sum_span(&self) -> Subspace {
        let n = self.group.order();
        let rows = self
            .group
            .conjugacy_classes()
            .iter()
            .map(|c| {
                let mut v = vec![ZERO; n];
                for &x in c {
                    v[x] = ONE;
                }
                v
            })
            .collect();
        self.span_rows(rows)
    }

    /// Projection onto `span{ω_j}` along `⊕_j ker(χ̃_j)ω_j`:
    /// `v ↦ Σ_j (χ̃_j(v)/n_j) ω_j`.
    pub fn central_projection(&self, v: &[C64]) -> Vec<C64> {
        let mut out = vec![ZERO; v.len()];
        for (j, w) in self.idempotents.iter().enumerate() {
            let c = self.chi_tilde(j, v) / self.table.degree(j) as f64;
            crate::scalar::axpy(c, w.coeffs(), &mut out);
        }
        out
    }
}

fn central_idempotents(
    g: &GroupTable,
    alg: &StructureAlgebra,
    t: &CharacterTable,
) -> Vec<AlgebraElement> {
    let n = g.order() as f64;
    (0..t.num_classes())
        .map(|j| {
            let scale = t.degree(j) as f64 / n;
            let coeffs = (0..g.order())
                .map(|x| t.value(j, g.class_of(g.inv(x))) * scale)
                .collect();
            alg.element(coeffs).expect("length matches")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::NamedGroup;
    use crate::scalar::{max_abs_diff, norm_inf};

    fn ga(spec: NamedGroup) -> GroupAlgebra {
        GroupAlgebra::new(GroupTable::named(spec).unwrap(), 0).unwrap()
    }

    fn close(a: C64, re: f64, im: f64) -> bool {
        (a - C64::new(re, im)).norm() < 1e-8
    }

    #[test]
    fn d6_table() {
        let a = ga(NamedGroup::Dihedral(6));
        let t = a.table();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert!(t.row(0).iter().all(|&v| close(v, 1.0, 0.0)));
        let sign = t.row(1);
        assert!(close(sign[1], 1.0, 0.0) && close(sign[2], -1.0, 0.0));
        let chi3 = t.row(2);
        assert!(close(chi3[0], 2.0, 0.0));
        assert!(close(chi3[1], -1.0, 0.0));
        assert!(close(chi3[2], 0.0, 0.0));
    }

    #[test]
    fn cyclic_tables_are_roots_of_unity() {
        for n in 1..=7 {
            let a = ga(NamedGroup::Cyclic(n));
            let t = a.table();
            assert!(t.degrees().iter().all(|&d| d == 1));
            for j in 0..n {
                for i in 0..n {
                    let v = t.value(j, i);
                    assert!((v.norm() - 1.0).abs() < 1e-9);
                    assert!((v.powu(n as u32) - ONE).norm() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn q8_and_s4_degrees() {
        assert_eq!(ga(NamedGroup::Quaternion).table().degrees(), &[1, 1, 1, 1, 2]);
        assert_eq!(ga(NamedGroup::Symmetric(4)).table().degrees(), &[1, 1, 2, 3, 3]);
        assert_eq!(ga(NamedGroup::Alternating(4)).table().degrees(), &[1, 1, 1, 3]);
    }

    #[test]
    fn table_independent_of_seed() {
        let g = GroupTable::named(NamedGroup::Symmetric(4)).unwrap();
        let a = CharacterTable::compute(&g, 0).unwrap();
        for seed in 1..5 {
            let b = CharacterTable::compute(&g, seed).unwrap();
            assert_eq!(a.degrees(), b.degrees());
            for j in 0..a.num_classes() {
                assert!(max_abs_diff(a.row(j), b.row(j)) < 1e-8);
            }
        }
    }

    #[test]
    fn larger_groups() {
        let s5 = GroupTable::named(NamedGroup::Symmetric(5)).unwrap();
        let t = CharacterTable::compute(&s5, 0).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 4, 4, 5, 5, 6]);
        let d8 = GroupTable::named(NamedGroup::Dihedral(8)).unwrap();
        let z3 = GroupTable::named(NamedGroup::Cyclic(3)).unwrap();
        let p = GroupTable::direct_product(&d8, &z3).unwrap();
        let t = CharacterTable::compute(&p, 7).unwrap();
        assert_eq!(t.num_classes(), 15);
    }

    #[test]
    fn idempotent_examples() {
        let triv = ga(NamedGroup::Cyclic(1));
        assert!(close(triv.idempotent(0).coeffs()[0], 1.0, 0.0));

        let a = ga(NamedGroup::Dihedral(6));
        for c in a.idempotent(0).coeffs() {
            assert!(close(*c, 1.0 / 6.0, 0.0));
        }
        // ω₃ = (2e − r − r²)/3
        let expect = [2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 0.0, 0.0, 0.0];
        for (c, e) in a.idempotent(2).coeffs().iter().zip(expect) {
            assert!(close(*c, e, 0.0));
        }
        assert!(close(a.chi_tilde(2, a.idempotent(2).coeffs()), 2.0, 0.0));
        for j in 0..3 {
            let e = crate::scalar::unit_vector(6, 0);
            assert!(close(a.chi_tilde(j, &e), a.table().degree(j) as f64, 0.0));
            for l in 0..3 {
                let expect = if j == l { a.table().degree(j) as f64 } else { 0.0 };
                assert!(close(a.chi_tilde(j, a.idempotent(l).coeffs()), expect, 0.0));
            }
        }
    }

    #[test]
    fn blocks_of_d6() {
        let a = ga(NamedGroup::Dihedral(6));
        assert_eq!(a.minimal_ideal(0).rank(), 1);
        assert_eq!(a.minimal_ideal(2).rank(), 4);
        assert_eq!(a.sl_block(0).rank(), 0);
        let sl = a.sl_block(2);
        assert_eq!(sl.rank(), 3);
        assert!(sl.is_subspace_of(&a.minimal_ideal(2)).unwrap());
        assert!(!sl.contains_vec(a.idempotent(2).coeffs()));
        assert_eq!(sl.intersect(&a.algebra().center()).unwrap().rank(), 0);
    }

    #[test]
    fn wedderburn_invariants_hold_for_small_groups() {
        for spec in [
            NamedGroup::Cyclic(6),
            NamedGroup::Dihedral(8),
            NamedGroup::Quaternion,
            NamedGroup::Alternating(4),
        ] {
            let a = ga(spec);
            let n = a.group().order();
            let k = a.num_blocks();
            let mut total = vec![ZERO; n];
            for w in a.idempotents() {
                crate::scalar::axpy(ONE, w.coeffs(), &mut total);
            }
            assert!(max_abs_diff(&total, &crate::scalar::unit_vector(n, 0)) < 1e-8);
            for i in 0..k {
                for j in 0..k {
                    let p = a.algebra().mul_slices(a.idempotent(i).coeffs(), a.idempotent(j).coeffs());
                    let target: Vec<C64> = if i == j {
                        a.idempotent(i).coeffs().to_vec()
                    } else {
                        vec![ZERO; n]
                    };
                    assert!(max_abs_diff(&p, &target) < 1e-8);
                }
                for x in 0..n {
                    assert!(norm_inf(&a.algebra().commutator_with_basis(a.idempotent(i).coeffs(), x)) < 1e-8);
                }
                let via_meet = a.minimal_ideal(i).intersect(&a.chi_kernel(i)).unwrap();
                assert!(via_meet.equals(&a.sl_block(i)).unwrap());
            }
            let center = a.algebra().center();
            assert!(center.equals(&a.idempotent_span()).unwrap());
            assert!(center.equals(&a.class_sum_span()).unwrap());
        }
    }
}
