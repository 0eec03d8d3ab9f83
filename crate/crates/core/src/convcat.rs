//! The two-object categories whose morphisms are linear maps `H → A` with
//! prescribed coaction behaviour, composed by convolution.
//!
//! In the first category composition is `(f*g)(h) = f(h_(1))g(h_(2))`, in the
//! primed one it is `(f⋆g)(h) = f(h_(2))g(h_(1))`. A composite of `f: i → j`
//! followed by `g: j → k` is `g*f` (respectively `g⋆f`).

use std::sync::OnceLock;

use rand::Rng;

use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, SpanCoordinates, Vector};
use crate::scalar::Field;
use crate::tensor::{operator_matrix, permute_rows, solution_space, swap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Convolution `f*g`, coaction constraints twisted by `S`.
    Plain,
    /// Opposite convolution `f⋆g`, constraints twisted by `S̄`.
    Primed,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Plain, Variant::Primed];

    fn index(self) -> usize {
        match self {
            Variant::Plain => 0,
            Variant::Primed => 1,
        }
    }
}

/// Hom-set of a two-object category, named by source and target objects.
/// `V: 1→1`, `U: 1→2`, `T: 2→1`, `W: 2→2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    V,
    U,
    T,
    W,
}

impl Class {
    pub const ALL: [Class; 4] = [Class::V, Class::U, Class::T, Class::W];

    pub fn source(self) -> u8 {
        match self {
            Class::V | Class::U => 1,
            Class::T | Class::W => 2,
        }
    }

    pub fn target(self) -> u8 {
        match self {
            Class::V | Class::T => 1,
            Class::U | Class::W => 2,
        }
    }

    pub fn from_ends(source: u8, target: u8) -> Class {
        match (source, target) {
            (1, 1) => Class::V,
            (1, 2) => Class::U,
            (2, 1) => Class::T,
            (2, 2) => Class::W,
            _ => panic!("objects are 1 and 2"),
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Class::V => "(1,1)",
            Class::U => "(1,2)",
            Class::T => "(2,1)",
            Class::W => "(2,2)",
        }
    }
}

/// `f(h) ∈ A` coacted minus the prescribed value; zero exactly on members.
pub fn residual(ca: &ComoduleAlgebra, class: Class, variant: Variant, f: &Matrix) -> Matrix {
    let h = ca.hopf();
    let field = ca.field();
    let nh = h.dim();
    let ih = Matrix::identity(field, nh);
    let delta = h.comul_matrix();
    let flip = || swap(field, nh, nh).mul(delta);
    let lhs = ca.coaction().mul(f);
    let rhs = match (class, variant) {
        (Class::V, _) => Matrix::identity(field, ca.dim()).kron(&h.unit_column()).mul(f),
        (Class::T, Variant::Plain) | (Class::U, Variant::Primed) => f.kron(&ih).mul(delta),
        (Class::U, Variant::Plain) => f.kron(h.antipode()).mul(&flip()),
        (Class::T, Variant::Primed) => f.kron(h.antipode_inv()).mul(&flip()),
        (Class::W, Variant::Plain) => {
            // w(h_(2))⊗S(h_(1))h_(3)
            let d3 = permute_rows(&h.comul_iterated_matrix(3), &[nh, nh, nh], &[1, 0, 2]);
            f.kron(&h.algebra().mul_matrix().mul(&h.antipode().kron(&ih))).mul(&d3)
        }
        (Class::W, Variant::Primed) => {
            // w'(h_(2))⊗h_(3)S̄(h_(1))
            let d3 = permute_rows(&h.comul_iterated_matrix(3), &[nh, nh, nh], &[1, 2, 0]);
            f.kron(&h.algebra().mul_matrix().mul(&ih.kron(h.antipode_inv()))).mul(&d3)
        }
    };
    lhs.sub(&rhs)
}

pub fn is_member(ca: &ComoduleAlgebra, class: Class, variant: Variant, f: &Matrix) -> bool {
    residual(ca, class, variant, f).is_zero()
}

/// Convolution of two maps `H → A` in the given variant.
pub fn convolve(ca: &ComoduleAlgebra, variant: Variant, f: &Matrix, g: &Matrix) -> Matrix {
    let h = ca.hopf();
    let mu = ca.algebra().mul_matrix();
    match variant {
        Variant::Plain => mu.mul(&f.kron(g)).mul(h.comul_matrix()),
        Variant::Primed => mu
            .mul(&f.kron(g))
            .mul(&swap(ca.field(), h.dim(), h.dim()))
            .mul(h.comul_matrix()),
    }
}

/// The identity morphism `h ↦ ε(h)1_A`.
pub fn unit_map(ca: &ComoduleAlgebra) -> Matrix {
    Matrix::column_vector(ca.field(), ca.algebra().unit().clone()).mul(&ca.hopf().counit_row())
}

/// `f: i → j` followed by `g: j → k`.
pub fn compose(
    ca: &ComoduleAlgebra,
    variant: Variant,
    f: (Class, &Matrix),
    g: (Class, &Matrix),
) -> Result<(Class, Matrix)> {
    if f.0.target() != g.0.source() {
        return Err(Error::NotComposable(format!(
            "{} followed by {}",
            f.0.name(),
            g.0.name()
        )));
    }
    let class = Class::from_ends(f.0.source(), g.0.target());
    Ok((class, convolve(ca, variant, g.1, f.1)))
}

/// `γ(f′) = f′∘S`, from the primed category to the plain one.
pub fn gamma(ca: &ComoduleAlgebra, f: &Matrix) -> Matrix {
    f.mul(ca.hopf().antipode())
}

/// `γ̄(f) = f∘S̄`, the inverse of [`gamma`].
pub fn gamma_inv(ca: &ComoduleAlgebra, f: &Matrix) -> Matrix {
    f.mul(ca.hopf().antipode_inv())
}

/// Two-sided convolution inverse, found by solving `f*u = ηε` and checking `u*f = ηε`.
pub fn convolution_inverse(ca: &ComoduleAlgebra, variant: Variant, f: &Matrix) -> Result<Matrix> {
    let field = ca.field();
    let (na, nh) = (ca.dim(), ca.hopf().dim());
    let op = operator_matrix(field, na, nh, |u| convolve(ca, variant, f, u));
    let target = unit_map(ca);
    let sol = op.solve(&target.to_vector()).map_err(|_| Error::NotInvertible)?;
    let u = Matrix::from_vector(field, na, nh, &sol.particular);
    if convolve(ca, variant, &u, f) != target {
        return Err(Error::NotInvertible);
    }
    Ok(u)
}

/// A basis of one hom-space, with coordinates.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub class: Class,
    pub variant: Variant,
    basis: Vec<Matrix>,
    coords: SpanCoordinates,
    shape: (usize, usize),
    field: Field,
}

impl HomSpace {
    pub fn compute(ca: &ComoduleAlgebra, class: Class, variant: Variant) -> HomSpace {
        let field = ca.field();
        let (na, nh) = (ca.dim(), ca.hopf().dim());
        let basis = solution_space(field, na, nh, |f| residual(ca, class, variant, f));
        let flat: Vec<Vector> = basis.iter().map(Matrix::to_vector).collect();
        let coords = SpanCoordinates::new(field, na * nh, &flat).expect("kernel basis is independent");
        HomSpace {
            class,
            variant,
            basis,
            coords,
            shape: (na, nh),
            field,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coordinates(&self, f: &Matrix) -> Option<Vector> {
        self.coords.coords(&f.to_vector())
    }

    pub fn element(&self, coeffs: &[crate::Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.shape.0, self.shape.1);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                out.axpy(c, b);
            }
        }
        out
    }

    /// A seeded random element with small integer coefficients.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Matrix {
        let coeffs: Vec<_> = (0..self.dim()).map(|_| self.field.from_i64(rng.gen_range(-3..=3))).collect();
        self.element(&coeffs)
    }
}

/// All eight hom-spaces of both categories, computed on first use.
#[derive(Debug)]
pub struct HomSpaces {
    ca: ComoduleAlgebra,
    cache: [[OnceLock<HomSpace>; 4]; 2],
}

impl HomSpaces {
    pub fn new(ca: &ComoduleAlgebra) -> HomSpaces {
        HomSpaces {
            ca: ca.clone(),
            cache: Default::default(),
        }
    }

    pub fn comodule_algebra(&self) -> &ComoduleAlgebra {
        &self.ca
    }

    pub fn get(&self, class: Class, variant: Variant) -> &HomSpace {
        self.cache[variant.index()][class.index()].get_or_init(|| HomSpace::compute(&self.ca, class, variant))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hopf::{cyclic_group_algebra, HopfAlgebra};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn trivial_coaction_makes_class_v_everything() {
        let h = cyclic_group_algebra(q(), 2);
        let ca = ComoduleAlgebra::trivial(&h, fixtures::matrix_algebra_m2(q())).unwrap();
        assert_eq!(HomSpace::compute(&ca, Class::V, Variant::Plain).dim(), 8);
    }

    #[test]
    fn colinear_maps_on_kc2_are_two_dimensional() {
        let ca = fixtures::kc2_regular(q());
        assert_eq!(HomSpace::compute(&ca, Class::T, Variant::Plain).dim(), 2);
    }

    #[test]
    fn graded_m2_has_the_expected_colinear_map() {
        let ca = fixtures::graded_m2(q());
        let t = Matrix::from_i64(q(), &[&[1, 0], &[0, 1], &[0, 1], &[1, 0]]);
        assert!(is_member(&ca, Class::T, Variant::Plain, &t));
        let u = t.mul(ca.hopf().antipode());
        assert_eq!(convolve(&ca, Variant::Plain, &t, &u), unit_map(&ca));
        assert_eq!(convolution_inverse(&ca, Variant::Plain, &t).unwrap(), u);
    }

    #[test]
    fn unit_map_is_a_convolution_unit_and_identity_morphism() {
        let ca = fixtures::h4_regular(q()).unwrap();
        let e = unit_map(&ca);
        let id = Matrix::identity(q(), 4);
        assert_eq!(convolve(&ca, Variant::Plain, &id, &e), id);
        assert_eq!(convolve(&ca, Variant::Primed, &e, &id), id);
        for v in Variant::ALL {
            assert!(is_member(&ca, Class::V, v, &e));
            assert!(is_member(&ca, Class::W, v, &e));
        }
    }

    #[test]
    fn identity_inverts_to_antipode() {
        let ca = fixtures::h4_regular(q()).unwrap();
        let id = Matrix::identity(q(), 4);
        assert_eq!(&convolution_inverse(&ca, Variant::Plain, &id).unwrap(), ca.hopf().antipode());
        let zero = Matrix::zeros(q(), 4, 4);
        assert!(matches!(convolution_inverse(&ca, Variant::Plain, &zero), Err(Error::NotInvertible)));
        assert_eq!(convolution_inverse(&ca, Variant::Plain, &unit_map(&ca)).unwrap(), unit_map(&ca));
    }

    #[test]
    fn gamma_is_a_bijection_on_every_hom_space() {
        for ca in [fixtures::h4_regular(q()).unwrap(), fixtures::graded_m2(q())] {
            let spaces = HomSpaces::new(&ca);
            for class in Class::ALL {
                let primed = spaces.get(class, Variant::Primed);
                let plain = spaces.get(class, Variant::Plain);
                assert_eq!(primed.dim(), plain.dim());
                let cols: Vec<Vector> = primed
                    .basis()
                    .iter()
                    .map(|f| plain.coordinates(&gamma(&ca, f)).expect("γ lands in the plain category"))
                    .collect();
                let m = Matrix::from_columns(q(), plain.dim(), &cols);
                assert!(m.is_invertible(), "γ on {}", class.name());
                for f in plain.basis() {
                    assert_eq!(&gamma(&ca, &gamma_inv(&ca, f)), f);
                }
            }
        }
    }

    #[test]
    fn gamma_preserves_composition() {
        let ca = fixtures::h4_regular(q()).unwrap();
        let spaces = HomSpaces::new(&ca);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f_class in Class::ALL {
            for g_class in Class::ALL.into_iter().filter(|g| g.source() == f_class.target()) {
                let f = spaces.get(f_class, Variant::Primed).sample(&mut rng);
                let g = spaces.get(g_class, Variant::Primed).sample(&mut rng);
                let (_, gf) = compose(&ca, Variant::Primed, (f_class, &f), (g_class, &g)).unwrap();
                let (_, plain) =
                    compose(&ca, Variant::Plain, (f_class, &gamma(&ca, &f)), (g_class, &gamma(&ca, &g))).unwrap();
                assert_eq!(gamma(&ca, &gf), plain);
            }
        }
    }

    #[test]
    fn composites_land_in_the_right_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for ca in [
            fixtures::h4_regular(Field::Prime(5)).unwrap(),
            fixtures::graded_m2(q()),
            ComoduleAlgebra::trivial(&HopfAlgebra::sweedler_h4(q()).unwrap(), fixtures::dual_numbers(q())).unwrap(),
        ] {
            let spaces = HomSpaces::new(&ca);
            for variant in Variant::ALL {
                for f_class in Class::ALL {
                    for g_class in Class::ALL.into_iter().filter(|g| g.source() == f_class.target()) {
                        for _ in 0..3 {
                            let f = spaces.get(f_class, variant).sample(&mut rng);
                            let g = spaces.get(g_class, variant).sample(&mut rng);
                            let (class, gf) = compose(&ca, variant, (f_class, &f), (g_class, &g)).unwrap();
                            assert!(is_member(&ca, class, variant, &gf), "{:?} {:?}∘{:?}", variant, g_class, f_class);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mismatched_ends_do_not_compose() {
        let ca = fixtures::kc2_regular(q());
        let e = unit_map(&ca);
        assert!(matches!(
            compose(&ca, Variant::Plain, (Class::V, &e), (Class::W, &e)),
            Err(Error::NotComposable(_))
        ));
    }

    #[test]
    fn convolution_is_associative_on_samples() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let space = HomSpace::compute(&ca, Class::V, Variant::Plain);
        for variant in Variant::ALL {
            let (a, b, c) = (space.sample(&mut rng), space.sample(&mut rng), space.sample(&mut rng));
            let left = convolve(&ca, variant, &convolve(&ca, variant, &a, &b), &c);
            let right = convolve(&ca, variant, &a, &convolve(&ca, variant, &b, &c));
            assert_eq!(left, right);
        }
    }
}
