//! Lie ideals: the direct commutator test, the translation criterion for
//! `ℂ[G]⊗A`, the block classification of Lie ideals of `ℂ[G]`, and the
//! constructions built from it.
//!
//! All scans stop at the first violation in a fixed order: basis row of
//! `L`, then group element, then basis element of the coefficient algebra.

use serde::Serialize;

use crate::algebra::StructureAlgebra;
use crate::characters::GroupAlgebra;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::scalar::{axpy, inner, norm_l2, C64, ZERO};
use crate::subspace::Subspace;
use crate::tensor::GeneralizedAlgebra;

/// A vector produced from a member of `L` that fails to lie in `L`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// Index of the offending basis row of `L`.
    pub row: usize,
    pub element: Vec<C64>,
    /// Group element used by a translation test, if any.
    pub group_element: Option<usize>,
    /// Basis index of the partner (algebra basis, or coefficient basis for
    /// translation tests).
    pub basis: usize,
    pub image: Vec<C64>,
    /// `‖image − proj_L(image)‖₂`
    pub residual: f64,
}

fn check_member(
    l: &Subspace,
    row: usize,
    group_element: Option<usize>,
    basis: usize,
    image: Vec<C64>,
) -> Option<Witness> {
    if l.contains_vec(&image) {
        return None;
    }
    Some(Witness {
        row,
        element: l.basis()[row].clone(),
        group_element,
        basis,
        residual: l.residual(&image),
        image,
    })
}

fn same_parent(alg: &StructureAlgebra, l: &Subspace) -> Result<()> {
    if l.parent() != alg.id() || l.ambient_dim() != alg.dim() {
        Err(Error::ParentMismatch)
    } else {
        Ok(())
    }
}

/// First `(l, b)` with `[l, b] ∉ L`, scanning basis rows of `L` and then
/// basis elements of the algebra.
pub fn lie_ideal_witness(alg: &StructureAlgebra, l: &Subspace) -> Result<Option<Witness>> {
    same_parent(alg, l)?;
    if l.rank() == alg.dim() {
        return Ok(None);
    }
    for (r, v) in l.basis().iter().enumerate() {
        for b in 0..alg.dim() {
            if let Some(w) = check_member(l, r, None, b, alg.commutator_with_basis(v, b)) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// `[L, A] ⊆ L`
pub fn is_lie_ideal(alg: &StructureAlgebra, l: &Subspace) -> Result<bool> {
    Ok(lie_ideal_witness(alg, l)?.is_none())
}

/// First violation of `b·l ∈ L` or `l·b ∈ L`.
pub fn ideal_witness(alg: &StructureAlgebra, l: &Subspace) -> Result<Option<Witness>> {
    same_parent(alg, l)?;
    if l.rank() == alg.dim() {
        return Ok(None);
    }
    for (r, v) in l.basis().iter().enumerate() {
        for b in 0..alg.dim() {
            if let Some(w) = check_member(l, r, None, b, alg.left_mul_basis(b, v)) {
                return Ok(Some(w));
            }
            if let Some(w) = check_member(l, r, None, b, alg.right_mul_basis(v, b)) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Two-sided ideal test.
pub fn is_ideal(alg: &StructureAlgebra, l: &Subspace) -> Result<bool> {
    Ok(ideal_witness(alg, l)?.is_none())
}

/// Translation criterion: `(f·x⁻¹)a − a(x·f) ∈ L` for every basis row `f`
/// of `L`, every `x ∈ G` and every basis element `a` of the coefficient
/// algebra. Computed from translations and products in `A` only.
pub fn discrete_lie_criterion(t: &GeneralizedAlgebra, l: &Subspace) -> Result<Option<Witness>> {
    let all: Vec<usize> = (0..t.group().order()).collect();
    discrete_lie_criterion_on(t, l, &all)
}

/// The translation criterion with `x` restricted to `elements`.
pub fn discrete_lie_criterion_on(
    t: &GeneralizedAlgebra,
    l: &Subspace,
    elements: &[usize],
) -> Result<Option<Witness>> {
    same_parent(t.algebra(), l)?;
    if l.rank() == t.dim() {
        return Ok(None);
    }
    for (r, f) in l.basis().iter().enumerate() {
        for &x in elements {
            for a in 0..t.block() {
                if let Some(w) = check_member(l, r, Some(x), a, t.translate_commutator(f, x, a)) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// For `G × H` with `H` abelian: `w·f ∈ L` for `w ∈ {e}×H`, and the
/// translation criterion for `z ∈ G×{e}`. Together these suffice for `L`
/// to be a Lie ideal of `ℂ[G×H]⊗A`.
///
/// `t` must be built over `direct_product(g, h)`.
pub fn h_abelian_sufficiency(
    g: &GroupTable,
    h: &GroupTable,
    t: &GeneralizedAlgebra,
    l: &Subspace,
) -> Result<Option<Witness>> {
    if !h.is_abelian() {
        return Err(Error::NotAbelian(format!("second factor of order {}", h.order())));
    }
    if t.group().order() != g.order() * h.order() {
        return Err(Error::Malformed("tensor algebra is not over G × H".into()));
    }
    same_parent(t.algebra(), l)?;
    let nh = h.order();
    for (r, f) in l.basis().iter().enumerate() {
        for w in 0..nh {
            if let Some(wit) = check_member(l, r, Some(w), 0, t.left_translate(w, f)) {
                return Ok(Some(wit));
            }
        }
    }
    let g_factor: Vec<usize> = (0..g.order()).map(|x| x * nh).collect();
    discrete_lie_criterion_on(t, l, &g_factor)
}

/// Which sandwich containments hold for a given block pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    /// `Σ_{δ_j=1} sl_block(j) ⊆ L`
    pub lower: bool,
    /// `L ⊆ Σ_{δ_j=1} K_j + span{ω_j}`
    pub upper: bool,
}

impl Sandwich {
    pub fn holds(&self) -> bool {
        self.lower && self.upper
    }
}

#[derive(Debug, Clone)]
pub struct LieIdealClassification {
    pub is_lie_ideal: bool,
    /// `delta[j] = 1` iff `ω_j·L ⊄ span{ω_j}`.
    pub delta: Vec<u8>,
    /// Projection of `L` onto `span{ω_j}` along the trace-zero blocks.
    pub central_part: Subspace,
    pub sandwich: Sandwich,
    pub witness: Option<Witness>,
}

/// `delta[j] = 1` iff some basis row `v` has `ω_j·v ∉ span{ω_j}`.
pub fn block_pattern(ga: &GroupAlgebra, l: &Subspace) -> Vec<u8> {
    let tol = ga.tolerances();
    (0..ga.num_blocks())
        .map(|j| {
            let w = ga.idempotent(j).coeffs();
            let ww = inner(w, w);
            let escapes = l.basis().iter().any(|v| {
                let u = ga.algebra().mul_slices(w, v);
                let c = inner(w, &u) / ww;
                let mut r = u.clone();
                axpy(-c, w, &mut r);
                norm_l2(&r) > tol.member * norm_l2(&u).max(1.0)
            });
            u8::from(escapes)
        })
        .collect()
}

/// Check both containments of the sandwich for `delta`.
pub fn sandwich(ga: &GroupAlgebra, l: &Subspace, delta: &[u8]) -> Result<Sandwich> {
    let mut lower = true;
    let mut upper_rows: Vec<Vec<C64>> = ga.idempotents().iter().map(|w| w.coeffs().to_vec()).collect();
    for (j, &d) in delta.iter().enumerate() {
        if d == 1 {
            lower &= ga.sl_block(j).is_subspace_of(l)?;
            upper_rows.extend(ga.minimal_ideal(j).basis().iter().cloned());
        }
    }
    let upper = l.is_subspace_of(&ga.span_rows(upper_rows))?;
    Ok(Sandwich { lower, upper })
}

pub fn classify_lie_ideal(ga: &GroupAlgebra, l: &Subspace) -> Result<LieIdealClassification> {
    let witness = lie_ideal_witness(ga.algebra(), l)?;
    let delta = block_pattern(ga, l);
    let central_part = ga.span_rows(l.basis().iter().map(|v| ga.central_projection(v)).collect());
    let sandwich = sandwich(ga, l, &delta)?;
    let is_lie_ideal = witness.is_none();
    if is_lie_ideal && !sandwich.holds() {
        return Err(Error::SandwichViolation(format!(
            "lower containment {}, upper containment {} for delta {:?}",
            sandwich.lower, sandwich.upper, delta
        )));
    }
    Ok(LieIdealClassification {
        is_lie_ideal,
        delta,
        central_part,
        sandwich,
        witness,
    })
}

/// `Σ_{j ∈ blocks} sl_block(j) + C` for `C ⊆ span{ω_j}`.
pub fn canonical_lie_ideal(ga: &GroupAlgebra, blocks: &[usize], central: &Subspace) -> Result<Subspace> {
    if !central.is_subspace_of(&ga.idempotent_span())? {
        return Err(Error::CentralPartNotCentral);
    }
    let mut rows = central.basis().to_vec();
    for &j in blocks {
        if j >= ga.num_blocks() {
            return Err(Error::Malformed(format!(
                "block {j} out of range for {} blocks",
                ga.num_blocks()
            )));
        }
        rows.extend(ga.sl_block(j).basis().iter().cloned());
    }
    Ok(ga.span_rows(rows))
}

/// `span{Σ_{x∈V} x⊗a}` for central nonzero `a` and a conjugation-invariant
/// `V` (the whole group when `None`).
pub fn span_of_central_indicator(
    t: &GeneralizedAlgebra,
    a: &[C64],
    support: Option<&[usize]>,
) -> Result<Subspace> {
    if !t.coeff().is_unital() {
        return Err(Error::NonUnital);
    }
    if a.len() != t.block() {
        return Err(Error::ParentMismatch);
    }
    if a.iter().all(|z| *z == ZERO) {
        return Err(Error::ZeroElement);
    }
    if !t.coeff_center().contains_vec(a) {
        return Err(Error::NotCentral);
    }
    let g = t.group();
    let all: Vec<usize> = (0..g.order()).collect();
    let v = support.unwrap_or(&all);
    let mut member = vec![false; g.order()];
    for &x in v {
        if x >= g.order() {
            return Err(Error::Malformed(format!("element {x} out of range")));
        }
        member[x] = true;
    }
    for &x in v {
        if (0..g.order()).any(|y| !member[g.conjugate(y, x)]) {
            return Err(Error::NotInvariant);
        }
    }
    let d = t.block();
    let mut f = vec![ZERO; t.dim()];
    for x in (0..g.order()).filter(|&x| member[x]) {
        f[x * d..(x + 1) * d].copy_from_slice(a);
    }
    Ok(t.span_rows(vec![f]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::NamedGroup;
    use crate::scalar::{max_abs_diff, ONE};

    fn d6() -> GroupAlgebra {
        GroupAlgebra::new(GroupTable::named(NamedGroup::Dihedral(6)).unwrap(), 0).unwrap()
    }

    /// `Σ c_x x` from (label index, coefficient) pairs.
    fn combo(n: usize, terms: &[(usize, f64)]) -> Vec<C64> {
        let mut v = vec![ZERO; n];
        for &(x, c) in terms {
            v[x] += C64::new(c, 0.0);
        }
        v
    }

    fn example_l(a: &GroupAlgebra) -> Subspace {
        // e, r, r², s, rs, r²s
        a.span_rows(vec![
            combo(6, &[(1, 1.0), (2, -1.0)]),
            combo(6, &[(3, 1.0), (5, -1.0)]),
            combo(6, &[(4, 1.0), (5, -1.0)]),
        ])
    }

    #[test]
    fn trivial_subspaces_are_lie_ideals() {
        let m2 = StructureAlgebra::matrix_algebra(2).unwrap();
        assert!(is_lie_ideal(&m2, &Subspace::zero(&m2)).unwrap());
        assert!(is_lie_ideal(&m2, &Subspace::whole(&m2)).unwrap());
        assert!(is_ideal(&m2, &Subspace::whole(&m2)).unwrap());
    }

    #[test]
    fn e00_is_not_a_lie_ideal_of_m2() {
        let m2 = StructureAlgebra::matrix_algebra(2).unwrap();
        let l = Subspace::from_rows(&m2, vec![vec![ONE, ZERO, ZERO, ZERO]]);
        let w = lie_ideal_witness(&m2, &l).unwrap().unwrap();
        assert_eq!(w.basis, 1);
        // [E00, E01] = E01
        assert!(max_abs_diff(&w.image, &[ZERO, ONE, ZERO, ZERO]) < 1e-12);
    }

    #[test]
    fn example_in_d6() {
        let a = d6();
        let l = example_l(&a);
        assert!(l.equals(&a.sl_block(2)).unwrap());
        assert!(is_lie_ideal(a.algebra(), &l).unwrap());
        assert!(!is_ideal(a.algebra(), &l).unwrap());
        for j in 0..3 {
            assert!(is_ideal(a.algebra(), &a.minimal_ideal(j)).unwrap());
        }
        let c = classify_lie_ideal(&a, &l).unwrap();
        assert_eq!(c.delta, vec![0, 0, 1]);
        assert_eq!(c.central_part.rank(), 0);
        assert!(c.sandwich.holds());
    }

    #[test]
    fn classification_of_center_and_whole() {
        let a = d6();
        let z = a.algebra().center();
        let c = classify_lie_ideal(&a, &z).unwrap();
        assert!(c.is_lie_ideal);
        assert_eq!(c.delta, vec![0, 0, 0]);
        assert!(c.central_part.equals(&a.idempotent_span()).unwrap());
        let whole = Subspace::whole(a.algebra());
        let c = classify_lie_ideal(&a, &whole).unwrap();
        assert_eq!(c.delta, vec![0, 0, 1]);
        assert_eq!(c.central_part.rank(), 3);
    }

    #[test]
    fn canonical_ideals() {
        let a = d6();
        let zero = Subspace::zero(a.algebra());
        assert_eq!(canonical_lie_ideal(&a, &[], &zero).unwrap().rank(), 0);
        let all = canonical_lie_ideal(&a, &[0, 1, 2], &a.idempotent_span()).unwrap();
        assert_eq!(all.rank(), 6);
        let ex = canonical_lie_ideal(&a, &[2], &zero).unwrap();
        assert!(ex.equals(&example_l(&a)).unwrap());
        let not_central = a.span_rows(vec![combo(6, &[(1, 1.0)])]);
        assert!(matches!(
            canonical_lie_ideal(&a, &[], &not_central),
            Err(Error::CentralPartNotCentral)
        ));
    }

    #[test]
    fn non_lie_ideal_breaks_lower_containment() {
        let a = d6();
        let l = a.span_rows(vec![combo(6, &[(1, 1.0), (2, -1.0)])]);
        let c = classify_lie_ideal(&a, &l).unwrap();
        assert!(!c.is_lie_ideal);
        assert!(c.sandwich.upper);
        assert!(!c.sandwich.lower);
    }

    #[test]
    fn criterion_matches_direct_test_on_example() {
        let g = GroupTable::named(NamedGroup::Dihedral(6)).unwrap();
        let t = GeneralizedAlgebra::new(g, StructureAlgebra::complex()).unwrap();
        let a = d6();
        let l = t.span_rows(example_l(&a).basis().to_vec());
        assert!(discrete_lie_criterion(&t, &l).unwrap().is_none());
        assert!(is_lie_ideal(t.algebra(), &l).unwrap());
        let bad = t.span_rows(vec![combo(6, &[(1, 1.0)])]);
        assert!(discrete_lie_criterion(&t, &bad).unwrap().is_some());
        assert!(!is_lie_ideal(t.algebra(), &bad).unwrap());
    }

    #[test]
    fn product_example() {
        let d6 = GroupTable::named(NamedGroup::Dihedral(6)).unwrap();
        let p = GroupTable::direct_product(&d6, &d6).unwrap();
        let t = GeneralizedAlgebra::new(p.clone(), StructureAlgebra::complex()).unwrap();
        let at = |x: usize, y: usize| x * 6 + y;
        let l = t.span_rows(vec![
            combo(36, &[(at(1, 0), 1.0), (at(2, 0), -1.0)]),
            combo(36, &[(at(3, 0), 1.0), (at(5, 0), -1.0)]),
            combo(36, &[(at(4, 0), 1.0), (at(5, 0), -1.0)]),
        ]);
        let factors: Vec<usize> = (0..6).map(|x| at(x, 0)).chain((0..6).map(|y| at(0, y))).collect();
        assert!(discrete_lie_criterion_on(&t, &l, &factors).unwrap().is_none());
        assert!(discrete_lie_criterion(&t, &l).unwrap().is_some());
        assert!(!is_lie_ideal(t.algebra(), &l).unwrap());

        let f = combo(
            36,
            &[
                (at(1, 0), 1.0),
                (at(2, 0), -1.0),
                (at(3, 0), 1.0),
                (at(5, 0), -2.0),
                (at(4, 0), 1.0),
            ],
        );
        let rr = at(1, 1);
        let comm = t.algebra().commutator_with_basis(&f, rr);
        let expect = combo(36, &[(at(4, 1), -3.0), (at(3, 1), 3.0)]);
        assert!(max_abs_diff(&comm, &expect) < 1e-10);
        assert!(!l.contains_vec(&comm));
    }

    #[test]
    fn abelian_factor_test() {
        let d6 = GroupTable::named(NamedGroup::Dihedral(6)).unwrap();
        let z2 = GroupTable::named(NamedGroup::Cyclic(2)).unwrap();
        let p = GroupTable::direct_product(&d6, &z2).unwrap();
        let t = GeneralizedAlgebra::new(p, StructureAlgebra::complex()).unwrap();
        let whole = Subspace::whole(t.algebra());
        assert!(h_abelian_sufficiency(&d6, &z2, &t, &whole).unwrap().is_none());
        assert!(matches!(
            h_abelian_sufficiency(&z2, &d6, &t, &whole),
            Err(Error::NotAbelian(_))
        ));
    }

    #[test]
    fn central_indicator() {
        let g = GroupTable::named(NamedGroup::Dihedral(6)).unwrap();
        let t = GeneralizedAlgebra::new(g, StructureAlgebra::matrix_algebra(2).unwrap()).unwrap();
        let ident = vec![ONE, ZERO, ZERO, ONE];
        let l = span_of_central_indicator(&t, &ident, None).unwrap();
        assert_eq!(l.rank(), 1);
        assert!(is_lie_ideal(t.algebra(), &l).unwrap());
        let l = span_of_central_indicator(&t, &ident, Some(&[3, 4, 5])).unwrap();
        assert!(is_lie_ideal(t.algebra(), &l).unwrap());
        assert!(matches!(
            span_of_central_indicator(&t, &ident, Some(&[3])),
            Err(Error::NotInvariant)
        ));
        assert!(matches!(
            span_of_central_indicator(&t, &[ZERO, ONE, ZERO, ZERO], None),
            Err(Error::NotCentral)
        ));
        assert!(matches!(
            span_of_central_indicator(&t, &[ZERO; 4], None),
            Err(Error::ZeroElement)
        ));
    }
}
