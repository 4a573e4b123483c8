use galg_core::center::sharp_projection;
use galg_core::lie::{canonical_lie_ideal, classify_lie_ideal, is_lie_ideal};
use galg_core::scalar::{max_abs_diff, norm_l1, ZERO};
use galg_core::tensor::{left_translate, right_translate};
use galg_core::{
    CharacterTable, GeneralizedAlgebra, GroupAlgebra, GroupTable, NamedGroup, StructureAlgebra, Subspace, C64,
};
use proptest::prelude::*;

fn vector(dim: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), dim).prop_map(|v| v.into_iter().map(|(a, b)| C64::new(a, b)).collect())
}

fn rows(dim: usize, max: usize) -> impl Strategy<Value = Vec<Vec<C64>>> {
    prop::collection::vec(vector(dim), 0..=max)
}

fn d6() -> GroupTable {
    GroupTable::named(NamedGroup::Dihedral(6)).unwrap()
}

/// Naive convolution `Σ f(x)h(y) b_{xy}`.
fn convolve(g: &GroupTable, f: &[C64], h: &[C64]) -> Vec<C64> {
    let mut out = vec![ZERO; g.order()];
    for x in 0..g.order() {
        for y in 0..g.order() {
            out[g.mul(x, y)] += f[x] * h[y];
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimension_formula(u in rows(9, 6), w in rows(9, 6)) {
        let m3 = StructureAlgebra::matrix_algebra(3).unwrap();
        let (u, w) = (Subspace::from_rows(&m3, u), Subspace::from_rows(&m3, w));
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.rank() + meet.rank(), u.rank() + w.rank());
        prop_assert!(meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn span_ignores_choice_of_generators(base in rows(6, 4), mix in prop::collection::vec(vector(4), 4)) {
        let alg = StructureAlgebra::group_algebra(&d6()).unwrap();
        let u = Subspace::from_rows(&alg, base.clone());
        // combinations of the generators span a subspace of the original
        let combos: Vec<Vec<C64>> = mix
            .iter()
            .map(|c| {
                let mut v = vec![ZERO; 6];
                for (coef, row) in c.iter().zip(&base) {
                    for (vi, ri) in v.iter_mut().zip(row) {
                        *vi += coef * ri;
                    }
                }
                v
            })
            .collect();
        let w = Subspace::from_rows(&alg, combos);
        prop_assert!(w.is_subspace_of(&u).unwrap());
        let again = Subspace::from_rows(&alg, u.basis().to_vec());
        prop_assert!(again.equals(&u).unwrap());
    }

    #[test]
    fn group_algebra_product_is_convolution(f in vector(6), h in vector(6)) {
        let g = d6();
        let alg = StructureAlgebra::group_algebra(&g).unwrap();
        prop_assert!(max_abs_diff(&alg.mul_slices(&f, &h), &convolve(&g, &f, &h)) < 1e-12);
    }

    #[test]
    fn translations_compose(f in vector(24), x in 0..6usize, y in 0..6usize) {
        let g = d6();
        let xy = g.mul(x, y);
        prop_assert_eq!(left_translate(&g, x, &left_translate(&g, y, &f)), left_translate(&g, xy, &f));
        prop_assert_eq!(
            right_translate(&g, &right_translate(&g, &f, x), y),
            right_translate(&g, &f, g.mul(y, x))
        );
        prop_assert_eq!(
            right_translate(&g, &left_translate(&g, x, &f), y),
            left_translate(&g, x, &right_translate(&g, &f, y))
        );
    }

    #[test]
    fn left_translation_is_left_multiplication(f in vector(6), x in 0..6usize) {
        let g = d6();
        let mut bx = vec![ZERO; 6];
        bx[x] = C64::new(1.0, 0.0);
        prop_assert!(max_abs_diff(&left_translate(&g, x, &f), &convolve(&g, &bx, &f)) < 1e-12);
    }

    #[test]
    fn sharp_is_a_contracting_projection(f in vector(24)) {
        let t = GeneralizedAlgebra::new(d6(), StructureAlgebra::matrix_algebra(2).unwrap()).unwrap();
        let s = sharp_projection(&t, &f);
        prop_assert!(max_abs_diff(&sharp_projection(&t, &s), &s) < 1e-12);
        prop_assert!(norm_l1(&s) <= norm_l1(&f) * (1.0 + 1e-12));
        let cf = t.class_function_space(&Subspace::whole(t.coeff())).unwrap();
        prop_assert!(cf.residual(&s) < 1e-9);
    }

    #[test]
    fn character_table_is_seed_independent(seed in any::<u64>()) {
        let g = GroupTable::named(NamedGroup::Symmetric(4)).unwrap();
        let base = CharacterTable::compute(&g, 0).unwrap();
        let other = CharacterTable::compute(&g, seed).unwrap();
        for j in 0..base.num_classes() {
            prop_assert!(max_abs_diff(base.row(j), other.row(j)) < 1e-9);
        }
    }

    #[test]
    fn central_projection_is_central_and_idempotent(v in vector(8)) {
        let ga = GroupAlgebra::new(GroupTable::named(NamedGroup::Quaternion).unwrap(), 0).unwrap();
        let p = ga.central_projection(&v);
        prop_assert!(ga.class_sum_span().residual(&p) < 1e-9);
        prop_assert!(max_abs_diff(&ga.central_projection(&p), &p) < 1e-9);
    }

    #[test]
    fn canonical_ideals_classify_to_their_pattern(mask in 0u32..32, central in 0u32..32) {
        let ga = GroupAlgebra::new(GroupTable::named(NamedGroup::Symmetric(4)).unwrap(), 0).unwrap();
        let blocks: Vec<usize> = (0..5).filter(|j| mask >> j & 1 == 1).collect();
        let c = ga.span_rows((0..5).filter(|j| central >> j & 1 == 1).map(|j| ga.idempotent(j).coeffs().to_vec()).collect());
        let l = canonical_lie_ideal(&ga, &blocks, &c).unwrap();
        prop_assert!(is_lie_ideal(ga.algebra(), &l).unwrap());
        let k = classify_lie_ideal(&ga, &l).unwrap();
        prop_assert!(k.is_lie_ideal && k.sandwich.holds());
        for j in 0..5 {
            let expected = u8::from(blocks.contains(&j) && ga.table().degree(j) > 1);
            prop_assert_eq!(k.delta[j], expected);
        }
    }
}
