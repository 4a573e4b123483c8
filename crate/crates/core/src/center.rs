//! Centers of `ℂ[G]⊗A`: the structure-constant center, the translation
//! system `(f·x⁻¹)a = a(x·f)`, class functions and the conjugation average.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::GramAccumulator;
use crate::scalar::{max_abs_diff, C64, ZERO};
use crate::subspace::Subspace;
use crate::tensor::GeneralizedAlgebra;

/// The center computed two independent ways.
#[derive(Debug, Clone)]
pub struct CenterPair {
    /// Null space of `[z, b] = 0` over the tensor structure constants.
    pub structural: Subspace,
    /// Null space of `(f·x⁻¹)a − a(x·f) = 0` over `x ∈ G` and basis `a`.
    pub translational: Subspace,
}

/// `span{z_C}` inside `ℂ[G]⊗ℂ` (pass a tensor over `ℂ`).
pub fn class_sum_basis(t: &GeneralizedAlgebra) -> Result<Subspace> {
    if t.block() != 1 {
        return Err(Error::Malformed("class sums live in ℂ[G]; use a complex coefficient algebra".into()));
    }
    t.class_function_space(&Subspace::whole(t.coeff()))
}

/// Solution space of the translation system, assembled column by column
/// from translations and products in `A`.
pub fn translation_center(t: &GeneralizedAlgebra) -> Subspace {
    let n = t.dim();
    let g = t.group();
    let d = t.block();
    let mut acc = GramAccumulator::new(n);
    for x in 0..g.order() {
        for a in 0..d {
            let columns: Vec<Vec<(usize, C64)>> = (0..n)
                .map(|k| {
                    let mut unit = vec![ZERO; n];
                    unit[k] = C64::new(1.0, 0.0);
                    let image = t.translate_commutator(&unit, x, a);
                    image
                        .into_iter()
                        .enumerate()
                        .filter(|(_, v)| *v != ZERO)
                        .collect()
                })
                .collect();
            acc.add_columns(n, &columns);
        }
    }
    t.span_rows(acc.null_space(t.tolerances().rank))
}

pub fn generalized_center(t: &GeneralizedAlgebra) -> Result<CenterPair> {
    let structural = t.algebra().center_with(&t.tolerances());
    let translational = translation_center(t);
    if !structural.equals(&translational)? {
        return Err(Error::CrossCheckMismatch(format!(
            "structure-constant center has rank {}, translation system rank {}",
            structural.rank(),
            translational.rank()
        )));
    }
    Ok(CenterPair {
        structural,
        translational,
    })
}

/// Every slice `f(x)` lies in `Z(A)`.
pub fn center_valued_check(t: &GeneralizedAlgebra, f: &[C64]) -> bool {
    (0..t.group().order()).all(|x| t.coeff_center().contains_vec(t.slice(f, x)))
}

/// `f♯(x) = (1/|G|) Σ_y f(y x y⁻¹)`
pub fn sharp_projection(t: &GeneralizedAlgebra, f: &[C64]) -> Vec<C64> {
    let g = t.group();
    let d = t.block();
    let n = g.order();
    let mut out = vec![ZERO; f.len()];
    for x in 0..n {
        let block = &mut out[x * d..(x + 1) * d];
        for y in 0..n {
            let c = g.conjugate(y, x);
            for (o, v) in block.iter_mut().zip(&f[c * d..(c + 1) * d]) {
                *o += v;
            }
        }
        block.iter_mut().for_each(|o| *o /= n as f64);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CenterReport {
    pub dim_center: usize,
    /// `k_G · dim Z(A)`
    pub dim_predicted: usize,
    pub equal_as_subspaces: bool,
    pub sharp_is_projection: bool,
    pub discrepancy_norm: f64,
}

/// Compare `Z(ℂ[G]) ⊗ Z(A)`, realized as `Z(A)`-valued class functions,
/// with the center of `ℂ[G]⊗A`, and check that the conjugation average maps
/// `Z(A)`-valued functions onto that center.
pub fn verify_center_tensor(t: &GeneralizedAlgebra) -> Result<CenterReport> {
    if !t.coeff().is_unital() {
        return Err(Error::NonUnital);
    }
    let pair = generalized_center(t)?;
    let center = &pair.structural;
    let predicted = t.class_function_space(t.coeff_center())?;
    let equal = center.equals(&predicted)?;

    let mut discrepancy: f64 = 0.0;
    for v in predicted.basis() {
        discrepancy = discrepancy.max(center.residual(v));
    }
    for v in center.basis() {
        discrepancy = discrepancy.max(predicted.residual(v));
    }

    let mut images = Vec::new();
    for x in 0..t.group().order() {
        for z in t.coeff_center().basis() {
            let f = t.embed(x, z);
            let s = sharp_projection(t, &f);
            let ss = sharp_projection(t, &s);
            discrepancy = discrepancy.max(max_abs_diff(&s, &ss));
            discrepancy = discrepancy.max(center.residual(&s));
            images.push(s);
        }
    }
    let range = t.span_rows(images);
    let sharp_is_projection = range.equals(center)? && discrepancy <= t.tolerances().member;

    Ok(CenterReport {
        dim_center: center.rank(),
        dim_predicted: t.group().num_classes() * t.coeff_center().rank(),
        equal_as_subspaces: equal,
        sharp_is_projection,
        discrepancy_norm: discrepancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureAlgebra;
    use crate::group::{GroupTable, NamedGroup};
    use crate::scalar::{norm_l1, unit_vector};

    fn tensor(g: NamedGroup, a: StructureAlgebra) -> GeneralizedAlgebra {
        GeneralizedAlgebra::new(GroupTable::named(g).unwrap(), a).unwrap()
    }

    #[test]
    fn complex_coefficients_give_class_sums() {
        let t = tensor(NamedGroup::Dihedral(6), StructureAlgebra::complex());
        let z = generalized_center(&t).unwrap();
        let cs = class_sum_basis(&t).unwrap();
        assert_eq!(cs.rank(), 3);
        assert!(z.structural.equals(&cs).unwrap());
        let ab = tensor(NamedGroup::Cyclic(4), StructureAlgebra::complex());
        assert_eq!(class_sum_basis(&ab).unwrap().rank(), 4);
    }

    #[test]
    fn trivial_coefficients_make_everything_central() {
        let t = tensor(NamedGroup::Dihedral(6), StructureAlgebra::trivial_algebra(2).unwrap());
        let z = generalized_center(&t).unwrap();
        assert_eq!(z.structural.rank(), 12);
        let cf = t.class_function_space(&Subspace::whole(t.coeff())).unwrap();
        assert_eq!(cf.rank(), 6);
        assert!(matches!(verify_center_tensor(&t), Err(Error::NonUnital)));
    }

    #[test]
    fn s3_with_m2() {
        let t = tensor(NamedGroup::Symmetric(3), StructureAlgebra::matrix_algebra(2).unwrap());
        let r = verify_center_tensor(&t).unwrap();
        assert_eq!(r.dim_center, 3);
        assert_eq!(r.dim_predicted, 3);
        assert!(r.equal_as_subspaces);
        assert!(r.sharp_is_projection);
        let z = generalized_center(&t).unwrap();
        for v in z.structural.basis() {
            assert!(center_valued_check(&t, v));
        }
        assert!(!center_valued_check(&t, &t.embed(1, &[ZERO, C64::new(1.0, 0.0), ZERO, ZERO])));
    }

    #[test]
    fn sharp_of_point_mass_is_class_average() {
        let t = tensor(NamedGroup::Dihedral(6), StructureAlgebra::complex());
        let s = sharp_projection(&t, &unit_vector(6, 4));
        for x in 0..6 {
            let expect = if x >= 3 { 1.0 / 3.0 } else { 0.0 };
            assert!((s[x] - C64::new(expect, 0.0)).norm() < 1e-12);
        }
        assert!(norm_l1(&s) <= 1.0 + 1e-12);
    }
}
