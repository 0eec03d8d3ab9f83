use proptest::prelude::*;

use hopf_galois::cleft::crossed_closed_forms;
use hopf_galois::comodule::ComoduleAlgebra;
use hopf_galois::convcat::{compose, convolve, is_member, unit_map, Class, HomSpace, Variant};
use hopf_galois::fixtures::{crossed_product_data, graded_m2, h4_regular};
use hopf_galois::galois::GaloisExtension;
use hopf_galois::{Field, Matrix};

fn fixtures() -> Vec<ComoduleAlgebra> {
    vec![h4_regular(Field::Rationals).unwrap(), graded_m2(Field::Prime(3))]
}

/// A random element of a hom-space, as a combination of its basis.
fn element(space: &HomSpace, coeffs: &[i64]) -> Matrix {
    let f = space.field();
    let mut out = space.basis()[0].scale(&f.zero());
    for (b, c) in space.basis().iter().zip(coeffs) {
        out = out.add(&b.scale(&f.from_i64(*c)));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prime_fields_are_fields(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), a in 0u64..11, b in 0u64..11, c in 0u64..11) {
        let f = Field::prime(p).unwrap();
        let (a, b, c) = (f.element(a % p), f.element(b % p), f.element(c % p));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn convolution_is_associative_and_unital(seed in 0usize..2, fs in proptest::collection::vec(-2i64..=2, 3 * 16)) {
        let ca = &fixtures()[seed];
        let field = ca.field();
        let (na, nh) = (ca.dim(), ca.hopf().dim());
        let mk = |k: usize| Matrix::from_vec(field, na, nh, fs[k * na * nh..(k + 1) * na * nh].iter().map(|x| field.from_i64(*x)).collect());
        let (f, g, h) = (mk(0), mk(1), mk(2));
        for v in Variant::ALL {
            let left = convolve(ca, v, &convolve(ca, v, &f, &g), &h);
            let right = convolve(ca, v, &f, &convolve(ca, v, &g, &h));
            prop_assert_eq!(left, right);
            prop_assert_eq!(convolve(ca, v, &unit_map(ca), &f), f.clone());
            prop_assert_eq!(convolve(ca, v, &f, &unit_map(ca)), f.clone());
        }
    }

    #[test]
    fn composition_stays_in_the_right_class(seed in 0usize..2, a in proptest::collection::vec(-2i64..=2, 16), b in proptest::collection::vec(-2i64..=2, 16)) {
        let ca = &fixtures()[seed];
        for v in Variant::ALL {
            for first in Class::ALL {
                for second in Class::ALL.into_iter().filter(|c| c.source() == first.target()) {
                    let (s1, s2) = (HomSpace::compute(ca, first, v), HomSpace::compute(ca, second, v));
                    if s1.dim() == 0 || s2.dim() == 0 {
                        continue;
                    }
                    let (f, g) = (element(&s1, &a), element(&s2, &b));
                    let (class, fg) = compose(ca, v, (first, &f), (second, &g)).unwrap();
                    prop_assert!(is_member(ca, class, v, &fg), "{} then {}", first.name(), second.name());
                }
            }
        }
    }

    #[test]
    fn translation_map_splits_the_canonical_map(seed in 0usize..2, h in proptest::collection::vec(-3i64..=3, 4)) {
        let ca = &fixtures()[seed];
        let g = GaloisExtension::new(ca).unwrap();
        let field = ca.field();
        let hv: Vec<_> = h.iter().take(ca.hopf().dim()).map(|x| field.from_i64(*x)).collect();
        let one_h = hopf_galois::hopf::kron_vec(ca.algebra().unit(), &hv);
        prop_assert_eq!(g.can().mul_vec(&g.gamma().mul_vec(&hv)), one_h);
    }

    #[test]
    fn every_nonzero_parameter_gives_a_crossed_product(n in -20i64..=20, d in 1i64..=9) {
        prop_assume!(n != 0);
        let q = Field::Rationals;
        let data = crossed_product_data(q, &q.from_ratio(n, d).unwrap()).unwrap();
        for c in crossed_closed_forms(&data).unwrap() {
            prop_assert!(c.passed(), "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn hom_space_elements_satisfy_their_constraints(seed in 0usize..2, coeffs in proptest::collection::vec(-2i64..=2, 16)) {
        let ca = &fixtures()[seed];
        for class in Class::ALL {
            let space = HomSpace::compute(ca, class, Variant::Plain);
            if space.dim() > 0 {
                prop_assert!(is_member(ca, class, Variant::Plain, &element(&space, &coeffs)));
            }
        }
    }
}
