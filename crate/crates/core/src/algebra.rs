//! Finite-dimensional associative algebras over ℂ given by structure
//! constants, and elements of them.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupTable, NamedGroup};
use crate::linalg::GramAccumulator;
use crate::scalar::{max_abs_diff, Tolerances, C64, ONE, ZERO};
use crate::subspace::Subspace;

/// Largest dimension any constructor will build.
pub const DEFAULT_MAX_DIM: usize = 1024;
const EXHAUSTIVE_ASSOC_DIM: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 10_000;

/// Structural fingerprint of an algebra. Subspaces and elements carry the
/// fingerprint of their parent so operations can reject mixed operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraId(pub u64);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    GroupAlgebra { order: usize },
    Matrix { n: usize },
    DirectSum { dims: Vec<usize> },
    Trivial { dim: usize },
    Tensor { group_order: usize, coeff_dim: usize },
    Custom,
}

#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    dim: usize,
    // products b_i·b_j live in entries[offsets[i*dim+j]..offsets[i*dim+j+1]]
    offsets: Vec<u32>,
    entries: Vec<(u32, C64)>,
    unit: Option<Vec<C64>>,
    labels: Vec<String>,
    provenance: Provenance,
    id: AlgebraId,
}

impl StructureAlgebra {
    /// Build and validate from `(i, j, k, c)` meaning `b_i·b_j += c·b_k`.
    pub fn from_structure<I>(
        dim: usize,
        triples: I,
        unit: Option<Vec<C64>>,
        labels: Option<Vec<String>>,
        provenance: Provenance,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, C64)>,
    {
        if dim == 0 {
            return Err(Error::Malformed("algebra dimension must be positive".into()));
        }
        if dim > DEFAULT_MAX_DIM {
            return Err(Error::DimBoundExceeded {
                dim,
                bound: DEFAULT_MAX_DIM,
            });
        }
        let mut buckets: Vec<Vec<(u32, C64)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in triples {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Malformed(format!(
                    "structure constant index ({i}, {j}, {k}) out of range"
                )));
            }
            let bucket = &mut buckets[i * dim + j];
            match bucket.iter_mut().find(|(kk, _)| *kk as usize == k) {
                Some(slot) => slot.1 += c,
                None => bucket.push((k as u32, c)),
            }
        }
        let mut offsets = Vec::with_capacity(dim * dim + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        for mut b in buckets {
            b.retain(|(_, c)| *c != ZERO);
            b.sort_by_key(|(k, _)| *k);
            entries.extend(b);
            offsets.push(entries.len() as u32);
        }
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return Err(Error::Malformed(format!(
                    "{} labels for dimension {dim}",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..dim).map(|i| format!("b{i}")).collect(),
        };
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::Malformed("unit has the wrong length".into()));
            }
        }
        let mut alg = Self {
            dim,
            offsets,
            entries,
            unit,
            labels,
            provenance,
            id: AlgebraId(0),
        };
        alg.id = alg.fingerprint();
        alg.validate(&Tolerances::default())?;
        Ok(alg)
    }

    fn fingerprint(&self) -> AlgebraId {
        let mut h = DefaultHasher::new();
        self.dim.hash(&mut h);
        self.offsets.hash(&mut h);
        for (k, c) in &self.entries {
            k.hash(&mut h);
            c.re.to_bits().hash(&mut h);
            c.im.to_bits().hash(&mut h);
        }
        self.unit.is_some().hash(&mut h);
        AlgebraId(h.finish())
    }

    fn validate(&self, tol: &Tolerances) -> Result<()> {
        let d = self.dim;
        let check = |i: usize, j: usize, l: usize| -> Result<()> {
            let left = self.right_mul_basis(&self.product_dense(i, j), l);
            let right = self.left_mul_basis(i, &self.product_dense(j, l));
            let residual = max_abs_diff(&left, &right);
            if residual > tol.assoc {
                Err(Error::AlgebraNotAssociative { i, j, l, residual })
            } else {
                Ok(())
            }
        };
        if d <= EXHAUSTIVE_ASSOC_DIM {
            for i in 0..d {
                for j in 0..d {
                    for l in 0..d {
                        check(i, j, l)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                check(
                    rng.random_range(0..d),
                    rng.random_range(0..d),
                    rng.random_range(0..d),
                )?;
            }
        }
        if let Some(u) = &self.unit {
            let mut residual: f64 = 0.0;
            for i in 0..d {
                let e = crate::scalar::unit_vector(d, i);
                residual = residual
                    .max(max_abs_diff(&self.mul_slices(u, &e), &e))
                    .max(max_abs_diff(&self.mul_slices(&e, u), &e));
            }
            if residual > tol.assoc {
                return Err(Error::BadUnit { residual });
            }
        }
        Ok(())
    }

    /// `ℂ[G]` with `b_x·b_y = b_{xy}` and unit `b_e`.
    pub fn group_algebra(g: &GroupTable) -> Result<Self> {
        let n = g.order();
        let triples = (0..n).flat_map(|x| (0..n).map(move |y| (x, y, g.mul(x, y), ONE)));
        Self::from_structure(
            n,
            triples,
            Some(crate::scalar::unit_vector(n, g.identity())),
            Some(g.labels().to_vec()),
            Provenance::GroupAlgebra { order: n },
        )
    }

    /// `M_n` with matrix units `E_pq` in row-major order.
    pub fn matrix_algebra(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("matrix size must be positive".into()));
        }
        let dim = n.checked_mul(n).unwrap_or(usize::MAX);
        if dim > DEFAULT_MAX_DIM {
            return Err(Error::DimBoundExceeded {
                dim,
                bound: DEFAULT_MAX_DIM,
            });
        }
        let idx = move |p: usize, q: usize| p * n + q;
        let triples = (0..n).flat_map(move |p| {
            (0..n).flat_map(move |q| (0..n).map(move |s| (idx(p, q), idx(q, s), idx(p, s), ONE)))
        });
        let mut unit = vec![ZERO; dim];
        for p in 0..n {
            unit[idx(p, p)] = ONE;
        }
        let labels = (0..dim).map(|k| format!("E{}{}", k / n, k % n)).collect();
        Self::from_structure(dim, triples, Some(unit), Some(labels), Provenance::Matrix { n })
    }

    /// The field ℂ as a one-dimensional algebra.
    pub fn complex() -> Self {
        let mut a = Self::matrix_algebra(1).expect("M_1 is valid");
        a.labels = vec!["1".into()];
        a
    }

    /// Block-diagonal direct sum; unital iff every part is.
    pub fn direct_sum(parts: &[StructureAlgebra]) -> Result<Self> {
        match parts {
            [] => return Err(Error::Malformed("direct sum of no algebras".into())),
            [single] => return Ok(single.clone()),
            _ => {}
        }
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        if dim > DEFAULT_MAX_DIM {
            return Err(Error::DimBoundExceeded {
                dim,
                bound: DEFAULT_MAX_DIM,
            });
        }
        let mut triples = Vec::new();
        let mut labels = Vec::with_capacity(dim);
        let mut unit = Some(Vec::with_capacity(dim));
        let mut offset = 0;
        for (block, p) in parts.iter().enumerate() {
            for i in 0..p.dim {
                for j in 0..p.dim {
                    for &(k, c) in p.product(i, j) {
                        triples.push((offset + i, offset + j, offset + k as usize, c));
                    }
                }
                labels.push(format!("[{block}]{}", p.labels[i]));
            }
            unit = match (unit, &p.unit) {
                (Some(mut u), Some(pu)) => {
                    u.extend_from_slice(pu);
                    Some(u)
                }
                _ => None,
            };
            offset += p.dim;
        }
        Self::from_structure(
            dim,
            triples,
            unit,
            Some(labels),
            Provenance::DirectSum {
                dims: parts.iter().map(|p| p.dim).collect(),
            },
        )
    }

    /// `d`-dimensional algebra with all products zero.
    pub fn trivial_algebra(d: usize) -> Result<Self> {
        Self::from_structure(d, std::iter::empty(), None, None, Provenance::Trivial { dim: d })
    }

    /// `ℂ[G]⊗A`: basis `(x, i)` at index `x·dim(A) + i` (group-major), with
    /// `(x,i)·(y,j) = (xy, b_i b_j)`.
    pub fn generalized_group_algebra(g: &GroupTable, a: &StructureAlgebra) -> Result<Self> {
        let n = g.order();
        let da = a.dim;
        let dim = n * da;
        if dim > DEFAULT_MAX_DIM {
            return Err(Error::DimBoundExceeded {
                dim,
                bound: DEFAULT_MAX_DIM,
            });
        }
        let mut triples = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                for i in 0..da {
                    for j in 0..da {
                        for &(k, c) in a.product(i, j) {
                            triples.push((x * da + i, y * da + j, xy * da + k as usize, c));
                        }
                    }
                }
            }
        }
        let unit = a.unit.as_ref().map(|u| {
            let mut v = vec![ZERO; dim];
            v[g.identity() * da..(g.identity() + 1) * da].copy_from_slice(u);
            v
        });
        let labels = (0..dim)
            .map(|k| format!("({},{})", g.label(k / da), a.labels[k % da]))
            .collect();
        Self::from_structure(
            dim,
            triples,
            unit,
            Some(labels),
            Provenance::Tensor {
                group_order: n,
                coeff_dim: da,
            },
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn unit(&self) -> Option<&[C64]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Sparse `b_i·b_j`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[(u32, C64)] {
        let p = i * self.dim + j;
        &self.entries[self.offsets[p] as usize..self.offsets[p + 1] as usize]
    }

    fn product_dense(&self, i: usize, j: usize) -> Vec<C64> {
        let mut v = vec![ZERO; self.dim];
        for &(k, c) in self.product(i, j) {
            v[k as usize] += c;
        }
        v
    }

    /// Product of raw coefficient vectors.
    pub fn mul_slices(&self, u: &[C64], v: &[C64]) -> Vec<C64> {
        let mut out = vec![ZERO; self.dim];
        let vnz: Vec<usize> = (0..self.dim).filter(|&j| v[j] != ZERO).collect();
        for (i, &ui) in u.iter().enumerate() {
            if ui == ZERO {
                continue;
            }
            for &j in &vnz {
                let w = ui * v[j];
                for &(k, c) in self.product(i, j) {
                    out[k as usize] += w * c;
                }
            }
        }
        out
    }

    /// `u·b_j`
    pub fn right_mul_basis(&self, u: &[C64], j: usize) -> Vec<C64> {
        let mut out = vec![ZERO; self.dim];
        for (i, &ui) in u.iter().enumerate() {
            if ui != ZERO {
                for &(k, c) in self.product(i, j) {
                    out[k as usize] += ui * c;
                }
            }
        }
        out
    }

    /// `b_i·v`
    pub fn left_mul_basis(&self, i: usize, v: &[C64]) -> Vec<C64> {
        let mut out = vec![ZERO; self.dim];
        for (j, &vj) in v.iter().enumerate() {
            if vj != ZERO {
                for &(k, c) in self.product(i, j) {
                    out[k as usize] += vj * c;
                }
            }
        }
        out
    }

    /// `[u, b_j] = u·b_j − b_j·u`
    pub fn commutator_with_basis(&self, u: &[C64], j: usize) -> Vec<C64> {
        let mut out = self.right_mul_basis(u, j);
        for (o, l) in out.iter_mut().zip(self.left_mul_basis(j, u)) {
            *o -= l;
        }
        out
    }

    pub fn element(&self, coeffs: Vec<C64>) -> Result<AlgebraElement> {
        if coeffs.len() != self.dim {
            return Err(Error::ParentMismatch);
        }
        Ok(AlgebraElement {
            parent: self.id,
            coeffs,
        })
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement {
            parent: self.id,
            coeffs: crate::scalar::unit_vector(self.dim, i),
        }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            parent: self.id,
            coeffs: vec![ZERO; self.dim],
        }
    }

    fn check_parent(&self, u: &AlgebraElement) -> Result<()> {
        if u.parent != self.id {
            Err(Error::ParentMismatch)
        } else {
            Ok(())
        }
    }

    pub fn multiply(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(u)?;
        self.check_parent(v)?;
        Ok(AlgebraElement {
            parent: self.id,
            coeffs: self.mul_slices(&u.coeffs, &v.coeffs),
        })
    }

    pub fn commutator(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        let uv = self.multiply(u, v)?;
        let vu = self.multiply(v, u)?;
        Ok(uv.sub(&vu))
    }

    /// Center as the null space of `z ↦ ([z, b_i])_i`.
    pub fn center(&self) -> Subspace {
        self.center_with(&Tolerances::default())
    }

    pub fn center_with(&self, tol: &Tolerances) -> Subspace {
        let d = self.dim;
        let mut acc = GramAccumulator::new(d);
        let mut columns = vec![Vec::new(); d];
        for i in 0..d {
            for (k, col) in columns.iter_mut().enumerate() {
                col.clear();
                col.extend(self.product(k, i).iter().map(|&(m, c)| (m as usize, c)));
                col.extend(self.product(i, k).iter().map(|&(m, c)| (m as usize, -c)));
            }
            acc.add_columns(d, &columns);
        }
        Subspace::from_rows_with(self, acc.null_space(tol.rank), *tol)
    }

    pub fn to_file(&self) -> AlgebraFile {
        let mut structure = Vec::with_capacity(self.entries.len());
        for i in 0..self.dim {
            for j in 0..self.dim {
                for &(k, c) in self.product(i, j) {
                    structure.push(StructureEntry {
                        i,
                        j,
                        k: k as usize,
                        re: c.re,
                        im: c.im,
                    });
                }
            }
        }
        AlgebraFile {
            dim: self.dim,
            structure,
            unit: self.unit.as_ref().map(|u| u.iter().map(|z| [z.re, z.im]).collect()),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn from_file(f: &AlgebraFile) -> Result<Self> {
        Self::from_structure(
            f.dim,
            f.structure
                .iter()
                .map(|e| (e.i, e.j, e.k, C64::new(e.re, e.im))),
            f.unit
                .as_ref()
                .map(|u| u.iter().map(|p| C64::new(p[0], p[1])).collect()),
            f.labels.clone(),
            Provenance::Custom,
        )
    }
}

impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.dim == other.dim && self.entries == other.entries
    }
}

/// On-disk algebra format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub structure: Vec<StructureEntry>,
    pub unit: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    parent: AlgebraId,
    coeffs: Vec<C64>,
}

impl AlgebraElement {
    pub(crate) fn from_parts(parent: AlgebraId, coeffs: Vec<C64>) -> Self {
        Self { parent, coeffs }
    }

    pub fn parent(&self) -> AlgebraId {
        self.parent
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C64> {
        self.coeffs
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            parent: self.parent,
            coeffs: self.coeffs.iter().map(|z| z * s).collect(),
        }
    }

    /// Panics if the parents differ.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.parent, other.parent, "adding elements of different algebras");
        Self {
            parent: self.parent,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Panics if the parents differ.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.parent, other.parent, "subtracting elements of different algebras");
        Self {
            parent: self.parent,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn norm_l1(&self) -> f64 {
        crate::scalar::norm_l1(&self.coeffs)
    }

    pub fn norm_l2(&self) -> f64 {
        crate::scalar::norm_l2(&self.coeffs)
    }
}

/// Textual algebra description used by the CLI and the corpus:
///
/// * `complex`, `matrix:<n>`, `trivial:<d>`
/// * `group:<group-spec>` for `ℂ[G]`
/// * `sum:<alg>+<alg>[+...]`
/// * `tensor:<group-spec>@<alg>` for `ℂ[G]⊗A`
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSpec {
    Complex,
    Matrix(usize),
    Trivial(usize),
    Group(NamedGroup),
    Sum(Vec<AlgebraSpec>),
    Tensor(NamedGroup, Box<AlgebraSpec>),
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<StructureAlgebra> {
        match self {
            AlgebraSpec::Complex => Ok(StructureAlgebra::complex()),
            AlgebraSpec::Matrix(n) => StructureAlgebra::matrix_algebra(*n),
            AlgebraSpec::Trivial(d) => StructureAlgebra::trivial_algebra(*d),
            AlgebraSpec::Group(g) => StructureAlgebra::group_algebra(&GroupTable::named(g.clone())?),
            AlgebraSpec::Sum(parts) => {
                let built = parts.iter().map(|p| p.build()).collect::<Result<Vec<_>>>()?;
                StructureAlgebra::direct_sum(&built)
            }
            AlgebraSpec::Tensor(g, a) => StructureAlgebra::generalized_group_algebra(
                &GroupTable::named(g.clone())?,
                &a.build()?,
            ),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "complex" || s == "C" {
            return Ok(AlgebraSpec::Complex);
        }
        if let Some(rest) = s.strip_prefix("tensor:") {
            let (g, a) = rest
                .split_once('@')
                .ok_or_else(|| Error::Malformed("tensor spec needs <group>@<algebra>".into()))?;
            return Ok(AlgebraSpec::Tensor(g.parse()?, Box::new(a.parse()?)));
        }
        if let Some(rest) = s.strip_prefix("sum:") {
            let parts = rest.split('+').map(str::parse).collect::<Result<Vec<_>>>()?;
            return Ok(AlgebraSpec::Sum(parts));
        }
        if let Some(rest) = s.strip_prefix("group:") {
            return Ok(AlgebraSpec::Group(rest.parse()?));
        }
        let parse_n = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| Error::Malformed(format!("bad algebra parameter `{p}`")))
        };
        if let Some(rest) = s.strip_prefix("matrix:") {
            return Ok(AlgebraSpec::Matrix(parse_n(rest)?));
        }
        if let Some(rest) = s.strip_prefix("trivial:") {
            return Ok(AlgebraSpec::Trivial(parse_n(rest)?));
        }
        Err(Error::Malformed(format!("unknown algebra spec `{s}`")))
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Complex => write!(f, "complex"),
            AlgebraSpec::Matrix(n) => write!(f, "matrix:{n}"),
            AlgebraSpec::Trivial(d) => write!(f, "trivial:{d}"),
            AlgebraSpec::Group(g) => write!(f, "group:{g}"),
            AlgebraSpec::Sum(parts) => {
                write!(f, "sum:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            AlgebraSpec::Tensor(g, a) => write!(f, "tensor:{g}@{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d6() -> GroupTable {
        GroupTable::named(NamedGroup::Dihedral(6)).unwrap()
    }

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn trivial_group_algebra_is_one_dimensional() {
        let g = GroupTable::named(NamedGroup::Cyclic(1)).unwrap();
        let a = StructureAlgebra::group_algebra(&g).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.center().rank(), 1);
    }

    #[test]
    fn z2_square() {
        let g = GroupTable::named(NamedGroup::Cyclic(2)).unwrap();
        let a = StructureAlgebra::group_algebra(&g).unwrap();
        let f = a.element(vec![ONE, ONE]).unwrap();
        let ff = a.multiply(&f, &f).unwrap();
        assert_eq!(ff.coeffs(), &[c(2.0), c(2.0)]);
    }

    #[test]
    fn d6_center_dimension() {
        let a = StructureAlgebra::group_algebra(&d6()).unwrap();
        let z = a.center();
        assert_eq!(z.rank(), 3);
        let class_sum = a.element(vec![ZERO, ONE, ONE, ZERO, ZERO, ZERO]).unwrap();
        assert!(z.contains(&class_sum).unwrap());
        assert!(!z.contains(&a.basis_element(1)).unwrap());
    }

    #[test]
    fn matrix_units() {
        let m = StructureAlgebra::matrix_algebra(2).unwrap();
        let e01 = m.basis_element(1);
        let e10 = m.basis_element(2);
        assert_eq!(m.multiply(&e01, &e10).unwrap(), m.basis_element(0));
        assert_eq!(m.multiply(&e10, &e01).unwrap(), m.basis_element(3));
        let comm = m.commutator(&e01, &e10).unwrap();
        assert_eq!(comm.coeffs(), &[ONE, ZERO, ZERO, -ONE]);
        assert_eq!(m.center().rank(), 1);
        assert_eq!(StructureAlgebra::matrix_algebra(1).unwrap().dim(), 1);
    }

    #[test]
    fn direct_sums() {
        let c1 = StructureAlgebra::complex();
        let m2 = StructureAlgebra::matrix_algebra(2).unwrap();
        let m3 = StructureAlgebra::matrix_algebra(3).unwrap();
        let s = StructureAlgebra::direct_sum(&[c1.clone(), c1, m2.clone()]).unwrap();
        assert_eq!((s.dim(), s.center().rank()), (6, 3));
        let s = StructureAlgebra::direct_sum(&[m2.clone(), m3]).unwrap();
        assert_eq!((s.dim(), s.center().rank()), (13, 2));
        assert!(s.is_unital());
        assert_eq!(StructureAlgebra::direct_sum(&[m2.clone()]).unwrap(), m2);
        let t = StructureAlgebra::trivial_algebra(2).unwrap();
        assert!(!StructureAlgebra::direct_sum(&[m2, t]).unwrap().is_unital());
    }

    #[test]
    fn trivial_algebra_products_vanish() {
        let t = StructureAlgebra::trivial_algebra(3).unwrap();
        let b = t.basis_element(0);
        assert_eq!(t.multiply(&b, &b).unwrap(), t.zero());
        assert_eq!(t.center().rank(), 3);
        assert!(!t.is_unital());
    }

    #[test]
    fn generalized_products() {
        let z2 = GroupTable::named(NamedGroup::Cyclic(2)).unwrap();
        let m2 = StructureAlgebra::matrix_algebra(2).unwrap();
        let t = StructureAlgebra::generalized_group_algebra(&z2, &m2).unwrap();
        assert_eq!(t.dim(), 8);
        // (g, E01)·(g, E10) = (e, E00)
        let p = t.multiply(&t.basis_element(4 + 1), &t.basis_element(4 + 2)).unwrap();
        assert_eq!(p, t.basis_element(0));

        let triv = StructureAlgebra::trivial_algebra(2).unwrap();
        let t = StructureAlgebra::generalized_group_algebra(&d6(), &triv).unwrap();
        assert!(t.entries.is_empty());

        let one = GroupTable::named(NamedGroup::Cyclic(1)).unwrap();
        let t = StructureAlgebra::generalized_group_algebra(&one, &m2).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.center().rank(), 1);
    }

    #[test]
    fn d6_commutator_r_s() {
        let a = StructureAlgebra::group_algebra(&d6()).unwrap();
        let comm = a.commutator(&a.basis_element(1), &a.basis_element(3)).unwrap();
        // rs − sr = rs − r²s
        let mut expect = vec![ZERO; 6];
        expect[4] = ONE;
        expect[5] = -ONE;
        assert_eq!(comm.coeffs(), expect.as_slice());
    }

    #[test]
    fn parent_mismatch() {
        let m2 = StructureAlgebra::matrix_algebra(2).unwrap();
        let t4 = StructureAlgebra::trivial_algebra(4).unwrap();
        assert_eq!(
            m2.multiply(&m2.basis_element(0), &t4.basis_element(0)).unwrap_err(),
            Error::ParentMismatch
        );
    }

    #[test]
    fn rejects_nonassociative_constants() {
        // b0·b0 = b1, b1·b0 = b0, everything else 0
        let err = StructureAlgebra::from_structure(
            2,
            [(0, 0, 1, ONE), (1, 0, 0, ONE)],
            None,
            None,
            Provenance::Custom,
        )
        .unwrap_err();
        assert!(matches!(err, Error::AlgebraNotAssociative { .. }));
    }

    #[test]
    fn rejects_bad_unit() {
        let err = StructureAlgebra::from_structure(
            1,
            [(0, 0, 0, ONE)],
            Some(vec![c(2.0)]),
            None,
            Provenance::Custom,
        )
        .unwrap_err();
        assert!(matches!(err, Error::BadUnit { .. }));
    }

    #[test]
    fn file_round_trip() {
        let m = StructureAlgebra::matrix_algebra(2).unwrap();
        let json = serde_json::to_string(&m.to_file()).unwrap();
        let back = StructureAlgebra::from_file(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn spec_parsing() {
        for s in [
            "complex",
            "matrix:2",
            "trivial:2",
            "group:dihedral:6",
            "sum:matrix:2+matrix:3",
            "tensor:dihedral:6@sum:matrix:2+matrix:3",
        ] {
            let spec: AlgebraSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build().unwrap();
        }
        assert_eq!(
            "tensor:dihedral:6@matrix:2".parse::<AlgebraSpec>().unwrap().build().unwrap().dim(),
            24
        );
        assert!("matrix:x".parse::<AlgebraSpec>().is_err());
    }
}
