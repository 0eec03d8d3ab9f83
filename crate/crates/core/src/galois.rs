//! Canonical maps, the Galois test and the translation map `γ(h) = can⁻¹(1⊗h)`.

use crate::comodule::{ComoduleAlgebra, InducedModule, RightModule};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::Check;
use crate::tensor::{permute_legs, permute_rows, swap};

/// `A` as a right module over its coinvariants.
pub fn restricted_regular(ca: &ComoduleAlgebra) -> RightModule {
    let b = ca.coinvariants();
    let action = (0..b.dim())
        .map(|k| ca.algebra().right_mult(&ca.coinvariant_image(k)))
        .collect();
    RightModule::new(b.algebra().clone(), ca.dim(), action).expect("restriction is well formed")
}

/// `can: A⊗_B A → A⊗H, a⊗a' ↦ aa'_[0]⊗a'_[1]` in quotient coordinates.
#[derive(Debug, Clone)]
pub struct CanonicalMap {
    pub square: InducedModule,
    pub matrix: Matrix,
    pub inverse: Option<Matrix>,
}

impl CanonicalMap {
    pub fn is_galois(&self) -> bool {
        self.inverse.is_some()
    }
}

pub fn canonical_map(ca: &ComoduleAlgebra) -> Result<CanonicalMap> {
    let field = ca.field();
    let square = ca.tensor_over_base(&restricted_regular(ca))?;
    let ia = Matrix::identity(field, ca.dim());
    let ih = Matrix::identity(field, ca.hopf().dim());
    let matrix = ca
        .algebra()
        .mul_matrix()
        .kron(&ih)
        .mul(&ia.kron(ca.coaction()))
        .mul(square.section());
    let inverse = if matrix.is_square() { matrix.invert().ok() } else { None };
    Ok(CanonicalMap { square, matrix, inverse })
}

/// `can′: a⊗a' ↦ a_[0]a'⊗a_[1]` on `A⊗_B A`, given the balanced square.
pub fn canonical_map_prime(ca: &ComoduleAlgebra, square: &InducedModule) -> Result<Matrix> {
    let field = ca.field();
    let (na, nh) = (ca.dim(), ca.hopf().dim());
    let ia = Matrix::identity(field, na);
    let ih = Matrix::identity(field, nh);
    let spread = permute_rows(&ca.coaction().kron(&ia), &[na, nh, na], &[0, 2, 1]);
    let on_tensor = ca.algebra().mul_matrix().kron(&ih).mul(&spread);
    let relations = crate::comodule::balanced_relations(square.base(), ca);
    if !relations.is_empty() && !on_tensor.mul(&Matrix::from_columns(field, na * na, &relations)).is_zero() {
        return Err(Error::IllDefinedStructure("can′ does not descend to A⊗_B A".into()));
    }
    Ok(on_tensor.mul(square.section()))
}

/// `Φ(a⊗h) = a_[0]⊗a_[1]S(h)` and its inverse `a⊗h ↦ a_[0]⊗S̄(h)a_[1]`.
pub fn phi_comparison(ca: &ComoduleAlgebra) -> (Matrix, Matrix) {
    let h = ca.hopf();
    let field = ca.field();
    let ia = Matrix::identity(field, ca.dim());
    let ih = Matrix::identity(field, h.dim());
    let mu = h.algebra().mul_matrix();
    let spread = ca.coaction().kron(&ih);
    let phi = ia.kron(&mu.mul(&ih.kron(h.antipode()))).mul(&spread);
    let (na, nh) = (ca.dim(), h.dim());
    let flipped = permute_rows(&ia.kron(&ih.kron(h.antipode_inv())).mul(&spread), &[na, nh, nh], &[0, 2, 1]);
    let phi_inv = ia.kron(mu).mul(&flipped);
    (phi, phi_inv)
}

/// A comodule algebra whose canonical map is bijective, with its translation map.
#[derive(Debug, Clone)]
pub struct GaloisExtension {
    ca: ComoduleAlgebra,
    square: InducedModule,
    can: Matrix,
    can_inv: Matrix,
    gamma: Matrix,
    representatives: Matrix,
}

impl GaloisExtension {
    pub fn new(ca: &ComoduleAlgebra) -> Result<GaloisExtension> {
        let can = canonical_map(ca)?;
        let Some(can_inv) = can.inverse.clone() else {
            return Err(Error::NotGalois(format!(
                "canonical map {}x{} is not invertible",
                can.matrix.rows(),
                can.matrix.cols()
            )));
        };
        let field = ca.field();
        let one = Matrix::column_vector(field, ca.algebra().unit().clone());
        let gamma = can_inv.mul(&one.kron(&Matrix::identity(field, ca.hopf().dim())));
        let representatives = can.square.section().mul(&gamma);
        Ok(GaloisExtension {
            ca: ca.clone(),
            square: can.square,
            can: can.matrix,
            can_inv,
            gamma,
            representatives,
        })
    }

    pub fn comodule_algebra(&self) -> &ComoduleAlgebra {
        &self.ca
    }

    /// `A⊗_B A` with `A` acting on the right leg.
    pub fn square(&self) -> &InducedModule {
        &self.square
    }

    pub fn can(&self) -> &Matrix {
        &self.can
    }

    pub fn can_inv(&self) -> &Matrix {
        &self.can_inv
    }

    /// `γ: H → A⊗_B A` in quotient coordinates.
    pub fn gamma(&self) -> &Matrix {
        &self.gamma
    }

    /// `s∘γ: H → A⊗A`, the chosen representatives `Σ l_i(h)⊗r_i(h)`.
    pub fn representatives(&self) -> &Matrix {
        &self.representatives
    }

    /// `π: A⊗A → A⊗_B A`.
    pub fn projection(&self) -> &Matrix {
        self.square.projection()
    }

    pub fn check_identity(&self, which: TranslationIdentity) -> Check {
        let (lhs, rhs) = self.identity_sides(which);
        Check::equal(which.name(), &lhs, &rhs)
    }

    pub fn verify_translation_identities(&self) -> Vec<Check> {
        TranslationIdentity::ALL.iter().map(|&t| self.check_identity(t)).collect()
    }

    fn identity_sides(&self, which: TranslationIdentity) -> (Matrix, Matrix) {
        let ca = &self.ca;
        let h = ca.hopf();
        let field = ca.field();
        let (na, nh) = (ca.dim(), h.dim());
        let ia = Matrix::identity(field, na);
        let ih = Matrix::identity(field, nh);
        let mu = ca.algebra().mul_matrix();
        let rho = ca.coaction();
        let sg = &self.representatives;
        let pi = self.projection();
        let one_a = Matrix::column_vector(field, ca.algebra().unit().clone());
        match which {
            TranslationIdentity::CanInverse => {
                let lhs = mu.kron(&ih).mul(&ia.kron(rho)).mul(sg);
                (lhs, one_a.kron(&ih))
            }
            TranslationIdentity::BaseCentral => {
                let b = ca.coinvariants();
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for k in 0..b.dim() {
                    let ib = ca.coinvariant_image(k);
                    let left = ca.algebra().left_mult(&ib);
                    let right = ca.algebra().right_mult(&ib);
                    lhs.push(pi.mul(&left.kron(&ia)).mul(sg));
                    rhs.push(pi.mul(&ia.kron(&right)).mul(sg));
                }
                (Matrix::vstack_all(field, nh, &lhs), Matrix::vstack_all(field, nh, &rhs))
            }
            TranslationIdentity::Comultiplication => {
                let lhs = self.gamma.kron(&ih).mul(h.comul_matrix());
                let rhs = pi.kron(&ih).mul(&ia.kron(rho)).mul(sg);
                (lhs, rhs)
            }
            TranslationIdentity::Antipode => {
                let lhs = self
                    .gamma
                    .kron(h.antipode())
                    .mul(&swap(field, nh, nh))
                    .mul(h.comul_matrix());
                let spread = permute_rows(&rho.kron(&ia).mul(sg), &[na, nh, na], &[0, 2, 1]);
                (lhs, pi.kron(&ih).mul(&spread))
            }
            TranslationIdentity::Counit => (mu.mul(sg), one_a.mul(&h.counit_row())),
            TranslationIdentity::CoactionRecovery => {
                let lhs = pi.mul(&mu.kron(&ia)).mul(&ia.kron(sg)).mul(rho);
                (lhs, pi.mul(&one_a.kron(&ia)))
            }
            TranslationIdentity::InverseAntipodeRecovery => {
                let spread = ia.kron(&sg.mul(h.antipode_inv())).mul(rho);
                let moved = permute_rows(&spread, &[na, na, na], &[1, 2, 0]);
                let lhs = pi.mul(&ia.kron(mu)).mul(&moved);
                (lhs, pi.mul(&ia.kron(&one_a)))
            }
            TranslationIdentity::AntiMultiplicative => {
                let lhs = self.gamma.mul(h.algebra().mul_matrix());
                let both = permute_legs(field, &[na, na, na, na], &[2, 0, 1, 3]).mul(&sg.kron(sg));
                (lhs, pi.mul(&mu.kron(mu)).mul(&both))
            }
        }
    }
}

/// The identities satisfied by the translation map, for `h, h' ∈ H` and `a ∈ A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationIdentity {
    /// `Σ l_i(h) r_i(h)_[0] ⊗ r_i(h)_[1] = 1⊗h`
    CanInverse,
    /// `b γ(h) = γ(h) b` for `b ∈ B`
    BaseCentral,
    /// `γ(h_(1))⊗h_(2) = Σ l_i(h) ⊗ r_i(h)_[0] ⊗ r_i(h)_[1]`
    Comultiplication,
    /// `γ(h_(2))⊗S(h_(1)) = Σ l_i(h)_[0] ⊗ r_i(h) ⊗ l_i(h)_[1]`
    Antipode,
    /// `Σ l_i(h) r_i(h) = ε(h)1`
    Counit,
    /// `Σ a_[0] l_i(a_[1]) ⊗ r_i(a_[1]) = 1⊗a`
    CoactionRecovery,
    /// `Σ l_i(S̄(a_[1])) ⊗ r_i(S̄(a_[1])) a_[0] = a⊗1`
    InverseAntipodeRecovery,
    /// `γ(hh') = Σ l_i(h') l_j(h) ⊗ r_j(h) r_i(h')`
    AntiMultiplicative,
}

impl TranslationIdentity {
    pub const ALL: [TranslationIdentity; 8] = [
        TranslationIdentity::CanInverse,
        TranslationIdentity::BaseCentral,
        TranslationIdentity::Comultiplication,
        TranslationIdentity::Antipode,
        TranslationIdentity::Counit,
        TranslationIdentity::CoactionRecovery,
        TranslationIdentity::InverseAntipodeRecovery,
        TranslationIdentity::AntiMultiplicative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TranslationIdentity::CanInverse => "translation inverts can",
            TranslationIdentity::BaseCentral => "translation values centralize B",
            TranslationIdentity::Comultiplication => "translation and comultiplication",
            TranslationIdentity::Antipode => "translation and antipode",
            TranslationIdentity::Counit => "translation multiplies to counit",
            TranslationIdentity::CoactionRecovery => "translation recovers 1⊗a",
            TranslationIdentity::InverseAntipodeRecovery => "translation recovers a⊗1",
            TranslationIdentity::AntiMultiplicative => "translation is anti-multiplicative",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hopf::{cyclic_group_algebra, HopfAlgebra};
    use crate::scalar::Field;

    fn all_pass(g: &GaloisExtension) {
        for c in g.verify_translation_identities() {
            assert!(c.passed(), "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn hopf_algebra_over_itself_is_galois_with_known_inverse() {
        let h = HopfAlgebra::sweedler_h4(Field::Rationals).unwrap();
        let ca = ComoduleAlgebra::regular(&h);
        let can = canonical_map(&ca).unwrap();
        assert!(can.is_galois());
        // candidate inverse a⊗k ↦ aS(k_(1))⊗k_(2), built independently
        let f = ca.field();
        let n = h.dim();
        let id = Matrix::identity(f, n);
        let candidate = h
            .algebra()
            .mul_matrix()
            .kron(&id)
            .mul(&id.kron(&h.antipode().kron(&id)))
            .mul(&id.kron(h.comul_matrix()));
        let composed = can.matrix.mul(&can.square.projection().mul(&candidate));
        assert!(composed.is_identity());
        all_pass(&GaloisExtension::new(&ca).unwrap());
    }

    #[test]
    fn graded_m2_is_galois() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let can = canonical_map(&ca).unwrap();
        assert_eq!(can.square.dim(), 8);
        assert!(can.is_galois());
        let g = GaloisExtension::new(&ca).unwrap();
        all_pass(&g);
        // γ(g) is represented by e12⊗e21 + e21⊗e12
        let f = ca.field();
        let mut expected = vec![f.zero(); 16];
        expected[4 + 2] = f.one();
        expected[2 * 4 + 1] = f.one();
        assert_eq!(g.gamma().col(1), g.projection().mul_vec(&expected));
    }

    #[test]
    fn trivial_coaction_is_not_galois() {
        let ca = fixtures::trivial_kxk(Field::Rationals);
        let can = canonical_map(&ca).unwrap();
        assert_eq!((can.matrix.rows(), can.matrix.cols()), (4, 2));
        assert!(!can.is_galois());
        assert!(matches!(GaloisExtension::new(&ca), Err(Error::NotGalois(_))));
    }

    #[test]
    fn graded_dual_numbers_are_not_galois() {
        let ca = fixtures::graded_dual_numbers(Field::Rationals);
        assert!(!canonical_map(&ca).unwrap().is_galois());
    }

    #[test]
    fn can_prime_factors_through_phi() {
        for ca in [
            fixtures::graded_m2(Field::Rationals),
            fixtures::kc2_regular(Field::Rationals),
            fixtures::h4_regular(Field::Prime(5)).unwrap(),
            fixtures::trivial_kxk(Field::Rationals),
        ] {
            let can = canonical_map(&ca).unwrap();
            let can_p = canonical_map_prime(&ca, &can.square).unwrap();
            let (phi, phi_inv) = phi_comparison(&ca);
            assert_eq!(can_p, phi.mul(&can.matrix));
            assert!(phi.mul(&phi_inv).is_identity());
            let prime_bijective = can_p.is_square() && can_p.is_invertible();
            assert_eq!(prime_bijective, can.is_galois());
        }
    }

    #[test]
    fn phi_for_trivial_coaction_is_id_tensor_antipode() {
        let h = HopfAlgebra::sweedler_h4(Field::Rationals).unwrap();
        let ca = ComoduleAlgebra::trivial(&h, fixtures::dual_numbers(Field::Rationals)).unwrap();
        let (phi, _) = phi_comparison(&ca);
        assert_eq!(phi, Matrix::identity(ca.field(), 2).kron(h.antipode()));
    }

    #[test]
    fn translation_of_unit_is_one_tensor_one() {
        let ca = fixtures::kc2_regular(Field::Rationals);
        let g = GaloisExtension::new(&ca).unwrap();
        let f = ca.field();
        let mut one_one = vec![f.zero(); 4];
        one_one[0] = f.one();
        assert_eq!(g.gamma().col(0), g.projection().mul_vec(&one_one));
        all_pass(&g);
    }

    #[test]
    fn regular_translation_matches_antipode_formula() {
        let h = cyclic_group_algebra(Field::Prime(5), 4);
        let ca = ComoduleAlgebra::regular(&h);
        let g = GaloisExtension::new(&ca).unwrap();
        // γ(h) = S(h_(1))⊗h_(2)
        let id = Matrix::identity(ca.field(), 4);
        let expected = h.antipode().kron(&id).mul(h.comul_matrix());
        assert_eq!(g.gamma(), &g.projection().mul(&expected));
        all_pass(&g);
    }
}
