//! Right comodule algebras, their coinvariants, right modules over the
//! coinvariants, relative Hopf modules and the induction `M ↦ M⊗_B A`.

use crate::algebra::{Algebra, SubalgebraEmbedding};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::matrix::{Matrix, QuotientSpace, SpanCoordinates, Vector};
use crate::report::ValidationReport;
use crate::scalar::{Field, Scalar};

/// Product in the tensor product algebra `X⊗Y`: `(x⊗y)(x'⊗y') = xx'⊗yy'`.
pub fn tensor_mul(x: &Algebra, y: &Algebra, a: &[Scalar], b: &[Scalar]) -> Vector {
    let (nx, ny) = (x.dim(), y.dim());
    let mut out = vec![x.field().zero(); nx * ny];
    for (p, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, k) = (p / ny, p % ny);
        for (q, d) in b.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let (j, l) = (q / ny, q % ny);
            let cd = c * d;
            for (r, e) in x.basis_product(i, j) {
                let ce = &cd * e;
                for (s, f) in y.basis_product(k, l) {
                    out[r * ny + s] += &(&ce * f);
                }
            }
        }
    }
    out
}

/// An algebra `A` with an algebra map `ρ: A → A⊗H` making it a right `H`-comodule,
/// together with its coinvariant subalgebra `B = {a : ρ(a) = a⊗1}`.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebra {
    hopf: HopfAlgebra,
    algebra: Algebra,
    coaction: Matrix,
    coinvariants: SubalgebraEmbedding,
}

/// Checks the comodule algebra axioms without building anything.
pub fn validate_comodule_algebra(hopf: &HopfAlgebra, algebra: &Algebra, coaction: &Matrix) -> ValidationReport {
    let mut report = algebra.validate();
    let (na, nh) = (algebra.dim(), hopf.dim());
    if coaction.rows() != na * nh || coaction.cols() != na {
        report.push("coaction shape", vec![coaction.rows(), coaction.cols()]);
        return report;
    }
    let field = algebra.field();
    let ia = Matrix::identity(field, na);
    let lhs = coaction.kron(&Matrix::identity(field, nh)).mul(coaction);
    let rhs = ia.kron(hopf.comul_matrix()).mul(coaction);
    if let Some((_, j)) = lhs.first_difference(&rhs) {
        report.push("coaction coassociativity", vec![j]);
    }
    if let Some((_, j)) = ia.kron(&hopf.counit_row()).mul(coaction).first_difference(&ia) {
        report.push("coaction counit", vec![j]);
    }
    let rho_cols = coaction.columns();
    'mult: for i in 0..na {
        for j in 0..na {
            let lhs = coaction.mul_vec(&algebra.mul_matrix().col(i * na + j));
            let rhs = tensor_mul(algebra, hopf.algebra(), &rho_cols[i], &rho_cols[j]);
            if lhs != rhs {
                report.push("coaction is multiplicative", vec![i, j]);
                break 'mult;
            }
        }
    }
    let one = algebra.unit();
    if coaction.mul_vec(one) != crate::hopf::kron_vec(one, hopf.unit()) {
        report.push("coaction is unital", vec![]);
    }
    report
}

/// Basis of `{x : ρ(x) = x⊗1}` for a coaction `ρ: X → X⊗H`.
pub fn coinvariant_basis(hopf: &HopfAlgebra, dim: usize, coaction: &Matrix) -> Vec<Vector> {
    let field = hopf.field();
    let trivial = Matrix::identity(field, dim).kron(&hopf.unit_column());
    coaction.sub(&trivial).kernel()
}

impl ComoduleAlgebra {
    /// Validates the data and computes the coinvariants.
    pub fn new(hopf: HopfAlgebra, algebra: Algebra, coaction: Matrix) -> Result<ComoduleAlgebra> {
        if hopf.field() != algebra.field() {
            return Err(Error::Validation("Hopf algebra and algebra live over different fields".into()));
        }
        let report = validate_comodule_algebra(&hopf, &algebra, &coaction);
        if !report.passed() {
            return Err(Error::Validation(format!("not a comodule algebra: {}", report.summary())));
        }
        let basis = coinvariant_basis(&hopf, algebra.dim(), &coaction);
        let labels = coinvariant_labels(&algebra, &basis);
        let coinvariants = algebra.subalgebra(basis, labels)?;
        Ok(ComoduleAlgebra {
            hopf,
            algebra,
            coaction,
            coinvariants,
        })
    }

    /// `H` as a comodule algebra over itself via `Δ`.
    pub fn regular(hopf: &HopfAlgebra) -> ComoduleAlgebra {
        ComoduleAlgebra::new(hopf.clone(), hopf.algebra().clone(), hopf.comul_matrix().clone())
            .expect("H coacting on itself is a comodule algebra")
    }

    /// `A` with the trivial coaction `a ↦ a⊗1`.
    pub fn trivial(hopf: &HopfAlgebra, algebra: Algebra) -> Result<ComoduleAlgebra> {
        let rho = Matrix::identity(algebra.field(), algebra.dim()).kron(&hopf.unit_column());
        ComoduleAlgebra::new(hopf.clone(), algebra, rho)
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn coact(&self, a: &[Scalar]) -> Vector {
        self.coaction.mul_vec(a)
    }

    pub fn coinvariants(&self) -> &SubalgebraEmbedding {
        &self.coinvariants
    }

    /// `ι(b)` for the `k`-th basis element of `B`.
    pub fn coinvariant_image(&self, k: usize) -> Vector {
        self.coinvariants.basis_image(k)
    }

    pub fn validate(&self) -> ValidationReport {
        validate_comodule_algebra(&self.hopf, &self.algebra, &self.coaction)
    }

    /// The regular right `B`-module `B`.
    pub fn regular_base_module(&self) -> RightModule {
        RightModule::regular(self.coinvariants.algebra())
    }

    /// `M⊗_B A` with its induced right `A`-action and `H`-coaction.
    pub fn tensor_over_base(&self, m: &RightModule) -> Result<InducedModule> {
        InducedModule::new(self, m)
    }
}

fn coinvariant_labels(algebra: &Algebra, basis: &[Vector]) -> Vec<String> {
    basis
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let support: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            match support.as_slice() {
                [i] if v[*i].is_one() => algebra.labels()[*i].clone(),
                _ => format!("b{k}"),
            }
        })
        .collect()
}

/// A finite-dimensional right module over an algebra, stored as one matrix per
/// basis element: `action[k]` is `m ↦ m·e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightModule {
    algebra: Algebra,
    dim: usize,
    action: Vec<Matrix>,
}

impl RightModule {
    pub fn new(algebra: Algebra, dim: usize, action: Vec<Matrix>) -> Result<RightModule> {
        if action.len() != algebra.dim() || action.iter().any(|r| r.rows() != dim || r.cols() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "a module of dimension {dim} needs {} square action matrices of size {dim}",
                algebra.dim()
            )));
        }
        Ok(RightModule { algebra, dim, action })
    }

    pub fn regular(algebra: &Algebra) -> RightModule {
        let action = (0..algebra.dim()).map(|k| algebra.right_mult(&algebra.basis(k))).collect();
        RightModule::new(algebra.clone(), algebra.dim(), action).expect("regular module is well formed")
    }

    /// A one-dimensional module given by a character `χ`, listed on the basis.
    pub fn from_character(algebra: &Algebra, chi: &[Scalar]) -> Result<RightModule> {
        let field = algebra.field();
        let action = chi.iter().map(|c| Matrix::from_vec(field, 1, 1, vec![c.clone()])).collect();
        RightModule::new(algebra.clone(), 1, action)
    }

    pub fn zero(algebra: &Algebra) -> RightModule {
        let field = algebra.field();
        RightModule::new(algebra.clone(), 0, vec![Matrix::zeros(field, 0, 0); algebra.dim()])
            .expect("zero module is well formed")
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of `m ↦ m·b`.
    pub fn act(&self, b: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (c, r) in b.iter().zip(&self.action) {
            if !c.is_zero() {
                out.axpy(c, r);
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.algebra.dim();
        'assoc: for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.mul(&self.algebra.basis(i), &self.algebra.basis(j));
                if self.act(&prod) != self.action[j].mul(&self.action[i]) {
                    report.push("module associativity", vec![i, j]);
                    break 'assoc;
                }
            }
        }
        if !self.act(self.algebra.unit()).is_identity() {
            report.push("module unit", vec![]);
        }
        report
    }

    /// Module maps `self → other`.
    pub fn homs(&self, other: &RightModule) -> Vec<Matrix> {
        let field = self.field();
        crate::tensor::solution_space(field, other.dim, self.dim, |f| {
            let blocks: Vec<Matrix> = (0..self.action.len())
                .map(|k| f.mul(&self.action[k]).sub(&other.action[k].mul(f)))
                .collect();
            Matrix::vstack_all(field, self.dim, &blocks)
        })
    }
}

/// A right module over an algebra `X` that is also a right `H`-comodule,
/// with `ρ(m·x) = m_[0]x_[0]⊗m_[1]x_[1]` for a given coaction on `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeHopfModule {
    pub module: RightModule,
    pub coaction: Matrix,
}

impl RelativeHopfModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn act(&self, x: &[Scalar]) -> Matrix {
        self.module.act(x)
    }

    /// Checks module, comodule and compatibility axioms, where `algebra_coaction`
    /// is the coaction of the acting algebra.
    pub fn validate(&self, hopf: &HopfAlgebra, algebra_coaction: &Matrix) -> ValidationReport {
        let mut report = self.module.validate();
        let field = self.field();
        let n = self.dim();
        let nh = hopf.dim();
        let rho = &self.coaction;
        if rho.rows() != n * nh || rho.cols() != n {
            report.push("coaction shape", vec![rho.rows(), rho.cols()]);
            return report;
        }
        let id = Matrix::identity(field, n);
        let lhs = rho.kron(&Matrix::identity(field, nh)).mul(rho);
        let rhs = id.kron(hopf.comul_matrix()).mul(rho);
        if let Some((_, j)) = lhs.first_difference(&rhs) {
            report.push("comodule coassociativity", vec![j]);
        }
        if let Some((_, j)) = id.kron(&hopf.counit_row()).mul(rho).first_difference(&id) {
            report.push("comodule counit", vec![j]);
        }
        let nx = self.module.algebra().dim();
        for x in 0..nx {
            let lhs = rho.mul(&self.module.action()[x]);
            let rhs = self.coacted_action(hopf, algebra_coaction, x).mul(rho);
            if lhs != rhs {
                report.push("relative Hopf module compatibility", vec![x]);
                break;
            }
        }
        report
    }

    /// `m⊗h ↦ m·x_[0]⊗h·x_[1]` for the basis element `x`.
    fn coacted_action(&self, hopf: &HopfAlgebra, algebra_coaction: &Matrix, x: usize) -> Matrix {
        let field = self.field();
        let nh = hopf.dim();
        let n = self.dim();
        let mut out = Matrix::zeros(field, n * nh, n * nh);
        for r in 0..algebra_coaction.rows() {
            let c = algebra_coaction.get(r, x);
            if c.is_zero() {
                continue;
            }
            let (xi, h) = (r / nh, r % nh);
            let term = self.module.action()[xi].kron(&hopf.algebra().right_mult(&hopf.basis(h)));
            out.axpy(c, &term);
        }
        out
    }

    /// Linear maps `self → other` commuting with the actions and coactions.
    pub fn morphisms(&self, other: &RelativeHopfModule, hopf: &HopfAlgebra) -> Vec<Matrix> {
        let field = self.field();
        let (n, m) = (self.dim(), other.dim());
        let ih = Matrix::identity(field, hopf.dim());
        crate::tensor::solution_space(field, m, n, |f| {
            let mut blocks: Vec<Matrix> = (0..self.module.action().len())
                .map(|k| f.mul(&self.module.action()[k]).sub(&other.module.action()[k].mul(f)))
                .collect();
            blocks.push(other.coaction.mul(f).sub(&f.kron(&ih).mul(&self.coaction)));
            Matrix::vstack_all(field, n, &blocks)
        })
    }

    /// Basis of the coinvariants `{m : ρ(m) = m⊗1}`.
    pub fn coinvariant_basis(&self, hopf: &HopfAlgebra) -> Vec<Vector> {
        coinvariant_basis(hopf, self.dim(), &self.coaction)
    }
}

/// `P = M⊗_B A` realized as a quotient of `M⊗A`, with its induced relative Hopf module structure.
#[derive(Debug, Clone)]
pub struct InducedModule {
    base: RightModule,
    quotient: QuotientSpace,
    module: RelativeHopfModule,
    algebra_dim: usize,
}

/// Relations `(m·b)⊗a − m⊗ι(b)a` spanning the kernel of `M⊗A → M⊗_B A`.
pub fn balanced_relations(m: &RightModule, ca: &ComoduleAlgebra) -> Vec<Vector> {
    let field = ca.field();
    let na = ca.dim();
    let ia = Matrix::identity(field, na);
    let im = Matrix::identity(field, m.dim());
    let mut relations = Vec::new();
    for k in 0..ca.coinvariants().dim() {
        let left = ca.algebra().left_mult(&ca.coinvariant_image(k));
        let rel = m.action()[k].kron(&ia).sub(&im.kron(&left));
        relations.extend(rel.columns().into_iter().filter(|c| c.iter().any(|x| !x.is_zero())));
    }
    relations
}

impl InducedModule {
    pub fn new(ca: &ComoduleAlgebra, m: &RightModule) -> Result<InducedModule> {
        let field = ca.field();
        if m.algebra() != ca.coinvariants().algebra() {
            return Err(Error::Validation("module is not over the coinvariants of this comodule algebra".into()));
        }
        let na = ca.dim();
        let nm = m.dim();
        let relations = balanced_relations(m, ca);
        let quotient = QuotientSpace::new(field, nm * na, &relations);
        let pi = quotient.projection();
        let s = quotient.section();
        let rel_matrix = Matrix::from_columns(field, nm * na, &relations);
        let im = Matrix::identity(field, nm);

        let mut action = Vec::with_capacity(na);
        for a in 0..na {
            let op = im.kron(&ca.algebra().right_mult(&ca.algebra().basis(a)));
            if !pi.mul(&op).mul(&rel_matrix).is_zero() {
                return Err(Error::IllDefinedStructure(format!(
                    "right action of basis element {a} does not descend to the balanced tensor product"
                )));
            }
            action.push(pi.mul(&op).mul(s));
        }
        let ih = Matrix::identity(field, ca.hopf().dim());
        let co = pi.kron(&ih).mul(&im.kron(ca.coaction()));
        if !co.mul(&rel_matrix).is_zero() {
            return Err(Error::IllDefinedStructure(
                "coaction does not descend to the balanced tensor product".into(),
            ));
        }
        let coaction = co.mul(s);
        let module = RelativeHopfModule {
            module: RightModule::new(ca.algebra().clone(), quotient.dim(), action)?,
            coaction,
        };
        Ok(InducedModule {
            base: m.clone(),
            quotient,
            module,
            algebra_dim: na,
        })
    }

    pub fn base(&self) -> &RightModule {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    /// `π: M⊗A → M⊗_B A`.
    pub fn projection(&self) -> &Matrix {
        self.quotient.projection()
    }

    /// `s: M⊗_B A → M⊗A`, a section of `π`.
    pub fn section(&self) -> &Matrix {
        self.quotient.section()
    }

    pub fn relative(&self) -> &RelativeHopfModule {
        &self.module
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    /// Matrix of `p ↦ p·a`.
    pub fn act(&self, a: &[Scalar]) -> Matrix {
        self.module.act(a)
    }

    pub fn coaction(&self) -> &Matrix {
        &self.module.coaction
    }

    /// The adjunction unit `η_M: m ↦ m⊗_B 1`, as a `dim P × dim M` matrix.
    pub fn unit_map(&self, ca: &ComoduleAlgebra) -> Matrix {
        let field = ca.field();
        let one = Matrix::column_vector(field, ca.algebra().unit().clone());
        self.projection().mul(&Matrix::identity(field, self.base.dim()).kron(&one))
    }
}

/// A linear map together with whether it is bijective onto its intended target.
#[derive(Debug, Clone)]
pub struct AdjunctionMap {
    /// The map in the coordinates of its (ambient) domain and codomain.
    pub matrix: Matrix,
    pub bijective: bool,
}

/// `η_M: M → (M⊗_B A)^{coH}`.
pub fn adjunction_unit(m: &RightModule, ca: &ComoduleAlgebra) -> Result<AdjunctionMap> {
    let p = ca.tensor_over_base(m)?;
    let eta = p.unit_map(ca);
    let coinv = p.relative().coinvariant_basis(ca.hopf());
    let field = ca.field();
    let image_coinvariant = p
        .coaction()
        .mul(&eta)
        .sub(&Matrix::identity(field, p.dim()).kron(&ca.hopf().unit_column()).mul(&eta))
        .is_zero();
    let bijective = image_coinvariant && eta.rank() == m.dim() && coinv.len() == m.dim();
    Ok(AdjunctionMap { matrix: eta, bijective })
}

/// `ε_N: N^{coH}⊗_B A → N, x⊗a ↦ x·a` for a relative Hopf module `N` over `A`.
/// The matrix is expressed in the quotient coordinates of the domain.
pub fn adjunction_counit(n: &RelativeHopfModule, ca: &ComoduleAlgebra) -> Result<AdjunctionMap> {
    let field = ca.field();
    let coinv = n.coinvariant_basis(ca.hopf());
    let c = Matrix::from_columns(field, n.dim(), &coinv);
    let coords = SpanCoordinates::new(field, n.dim(), &coinv)?;
    let base = ca.coinvariants();
    let mut action = Vec::with_capacity(base.dim());
    for k in 0..base.dim() {
        let moved = n.act(&ca.coinvariant_image(k)).mul(&c);
        let restricted = coords
            .coords_matrix(&moved)
            .ok_or_else(|| Error::InternalInvariant("coinvariants are not stable under B".into()))?;
        action.push(restricted);
    }
    let module = RightModule::new(base.algebra().clone(), coinv.len(), action)?;
    let induced = ca.tensor_over_base(&module)?;
    let na = ca.dim();
    let mut cols = Vec::with_capacity(coinv.len() * na);
    for x in 0..coinv.len() {
        for a in 0..na {
            cols.push(n.act(&ca.algebra().basis(a)).mul_vec(&coinv[x]));
        }
    }
    let on_tensor = Matrix::from_columns(field, n.dim(), &cols);
    let relations = balanced_relations(&module, ca);
    if !relations.is_empty() && !on_tensor.mul(&Matrix::from_columns(field, coinv.len() * na, &relations)).is_zero() {
        return Err(Error::IllDefinedStructure("counit does not descend to the balanced tensor product".into()));
    }
    let eps = on_tensor.mul(induced.section());
    let bijective = eps.is_square() && eps.is_invertible();
    Ok(AdjunctionMap { matrix: eps, bijective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hopf::{cyclic_group_algebra, HopfAlgebra};

    #[test]
    fn trivial_coaction_has_everything_coinvariant() {
        let h = cyclic_group_algebra(Field::Rationals, 2);
        let ca = ComoduleAlgebra::trivial(&h, h.algebra().clone()).unwrap();
        assert_eq!(ca.coinvariants().dim(), 2);
    }

    #[test]
    fn h4_over_itself_has_scalar_coinvariants() {
        let h = HopfAlgebra::sweedler_h4(Field::Rationals).unwrap();
        let ca = ComoduleAlgebra::regular(&h);
        assert_eq!(ca.coinvariants().dim(), 1);
        assert_eq!(ca.coinvariant_image(0), h.unit().clone());
    }

    #[test]
    fn graded_matrices_have_diagonal_coinvariants() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let b = ca.coinvariants();
        assert_eq!(b.dim(), 2);
        // e11 and e22 are the unit vectors 0 and 3
        let f = Field::Rationals;
        assert!(b.restrict(&crate::matrix::unit_vector(f, 4, 0)).is_some());
        assert!(b.restrict(&crate::matrix::unit_vector(f, 4, 3)).is_some());
        assert!(b.restrict(&crate::matrix::unit_vector(f, 4, 1)).is_none());
    }

    #[test]
    fn broken_coaction_is_rejected() {
        let h = cyclic_group_algebra(Field::Rationals, 2);
        let zero = Matrix::zeros(Field::Rationals, 4, 2);
        let r = validate_comodule_algebra(&h, h.algebra(), &zero);
        assert!(!r.passed());
    }

    #[test]
    fn regular_base_module_induces_a() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let p = ca.tensor_over_base(&ca.regular_base_module()).unwrap();
        assert_eq!(p.dim(), 4);
        let rep = p.relative().validate(ca.hopf(), ca.coaction());
        assert!(rep.passed(), "{}", rep.summary());
        // explicit iso A → B⊗_B A, a ↦ 1⊗a, intertwines coactions
        let f = ca.field();
        let one_b = Matrix::column_vector(f, ca.coinvariants().algebra().unit().clone());
        let iso = p.projection().mul(&one_b.kron(&Matrix::identity(f, 4)));
        assert!(iso.is_invertible());
        let ih = Matrix::identity(f, ca.hopf().dim());
        assert_eq!(p.coaction().mul(&iso), iso.kron(&ih).mul(ca.coaction()));
    }

    #[test]
    fn simple_module_induces_a_row() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let k = fixtures::graded_m2_simple_module(&ca);
        let p = ca.tensor_over_base(&k).unwrap();
        assert_eq!(p.dim(), 2);
        assert!(p.relative().validate(ca.hopf(), ca.coaction()).passed());
        assert!(adjunction_unit(&k, &ca).unwrap().bijective);
        assert!(adjunction_counit(p.relative(), &ca).unwrap().bijective);
    }

    #[test]
    fn regular_h_module_k_induces_h() {
        let h = HopfAlgebra::sweedler_h4(Field::Rationals).unwrap();
        let ca = ComoduleAlgebra::regular(&h);
        let k = ca.regular_base_module();
        let p = ca.tensor_over_base(&k).unwrap();
        assert_eq!(p.dim(), 4);
        assert!(adjunction_unit(&k, &ca).unwrap().bijective);
    }

    #[test]
    fn counit_fails_for_shifted_module_over_non_galois_extension() {
        // graded dual numbers: x has degree g and x² = 0, so A_g A_g ≠ A_1
        let ca = fixtures::graded_dual_numbers(Field::Rationals);
        assert_eq!(ca.coinvariants().dim(), 1);
        let k = ca.regular_base_module();
        assert!(adjunction_unit(&k, &ca).unwrap().bijective);
        let f = ca.field();
        let g = ca.hopf().algebra().left_mult(&ca.hopf().basis(1));
        let shifted = RelativeHopfModule {
            module: RightModule::regular(ca.algebra()),
            coaction: Matrix::identity(f, 2).kron(&g).mul(ca.coaction()),
        };
        assert!(shifted.validate(ca.hopf(), ca.coaction()).passed());
        let eps = adjunction_counit(&shifted, &ca).unwrap();
        assert!(!eps.bijective);
    }

    #[test]
    fn counit_on_a_is_bijective() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let a = RelativeHopfModule {
            module: RightModule::regular(ca.algebra()),
            coaction: ca.coaction().clone(),
        };
        assert!(adjunction_counit(&a, &ca).unwrap().bijective);
    }

    #[test]
    fn counit_on_zero_action_is_not_bijective() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let f = ca.field();
        // N = A as a comodule but with zero action: not unital, so ε lands in 0
        let n = RelativeHopfModule {
            module: RightModule::new(ca.algebra().clone(), 4, vec![Matrix::zeros(f, 4, 4); 4]).unwrap(),
            coaction: ca.coaction().clone(),
        };
        assert!(!adjunction_counit(&n, &ca).unwrap().bijective);
    }

    #[test]
    fn module_homs_of_regular_module() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let b = ca.regular_base_module();
        assert_eq!(b.homs(&b).len(), 2);
        assert!(b.validate().passed());
    }
}
