//! The endomorphism comodule algebra `E = End_A(M⊗_B A)` and its coinvariants `F ≅ End_B(M)`.
//!
//! For finite-dimensional `H` every `A`-linear endomorphism is rational; the
//! coaction is still solved for and checked rather than assumed.

use crate::algebra::Algebra;
use crate::comodule::{ComoduleAlgebra, InducedModule, RelativeHopfModule, RightModule};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, SpanCoordinates, Vector};
use crate::report::Check;
use crate::tensor::right_leg_component;

/// Right `A`-linear maps `P → Q`.
pub fn hom_a(p: &RelativeHopfModule, q: &RelativeHopfModule) -> Vec<Matrix> {
    p.module.homs(&q.module)
}

/// `ρ(f)(p) = f(p_[0])_[0]⊗f(p_[0])_[1]S(p_[1])` as a map `P → P⊗H`.
pub fn coaction_of_endomorphism(p: &RelativeHopfModule, ca: &ComoduleAlgebra, f: &Matrix) -> Matrix {
    let h = ca.hopf();
    let field = ca.field();
    let ih = Matrix::identity(field, h.dim());
    let ip = Matrix::identity(field, p.dim());
    let twist = h.algebra().mul_matrix().mul(&ih.kron(h.antipode()));
    ip.kron(&twist)
        .mul(&p.coaction.kron(&ih))
        .mul(&f.kron(&ih))
        .mul(&p.coaction)
}

/// `E = End_A(P)` for `P = M⊗_B A`, realized on a basis of concrete endomorphisms.
#[derive(Debug, Clone)]
pub struct EndAlgebra {
    base: ComoduleAlgebra,
    induced: InducedModule,
    basis: Vec<Matrix>,
    coords: SpanCoordinates,
    comodule: ComoduleAlgebra,
}

impl EndAlgebra {
    pub fn build(m: &RightModule, ca: &ComoduleAlgebra) -> Result<EndAlgebra> {
        let induced = ca.tensor_over_base(m)?;
        let field = ca.field();
        let p = induced.relative();
        let n = p.dim();
        let basis = hom_a(p, p);
        let flat: Vec<Vector> = basis.iter().map(Matrix::to_vector).collect();
        let coords = SpanCoordinates::new(field, n * n, &flat)?;
        let ne = basis.len();
        let coords_of = |f: &Matrix| -> Result<Vector> {
            coords
                .coords(&f.to_vector())
                .ok_or_else(|| Error::InternalInvariant("endomorphism left End_A(P)".into()))
        };
        let labels = (0..ne).map(|i| format!("f{i}")).collect();
        let unit = coords_of(&Matrix::identity(field, n))?;
        let mut mul = Matrix::zeros(field, ne, ne * ne);
        for i in 0..ne {
            for j in 0..ne {
                mul.set_col(i * ne + j, &coords_of(&basis[i].mul(&basis[j]))?);
            }
        }
        let algebra = Algebra::new(field, labels, mul, unit)?;

        let nh = ca.hopf().dim();
        let mut rho = Matrix::zeros(field, ne * nh, ne);
        for (k, f) in basis.iter().enumerate() {
            let r = coaction_of_endomorphism(p, ca, f);
            for l in 0..nh {
                let g = right_leg_component(field, n, nh, l).mul(&r);
                let c = coords.coords(&g.to_vector()).ok_or_else(|| {
                    Error::NotRational(format!("component {l} of the coaction of basis endomorphism {k} is not A-linear"))
                })?;
                for (i, x) in c.into_iter().enumerate() {
                    if !x.is_zero() {
                        rho.set(i * nh + l, k, x);
                    }
                }
            }
        }
        let comodule = ComoduleAlgebra::new(ca.hopf().clone(), algebra, rho)?;
        Ok(EndAlgebra {
            base: ca.clone(),
            induced,
            basis,
            coords,
            comodule,
        })
    }

    pub fn induced(&self) -> &InducedModule {
        &self.induced
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis endomorphisms of `P`.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn comodule_algebra(&self) -> &ComoduleAlgebra {
        &self.comodule
    }

    /// The endomorphism of `P` with the given coordinates in `E`.
    pub fn endomorphism(&self, coeffs: &[crate::Scalar]) -> Matrix {
        let n = self.induced.dim();
        let mut out = Matrix::zeros(self.comodule.field(), n, n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                out.axpy(c, b);
            }
        }
        out
    }

    /// Turns a map `H → E` in coordinates into the family of endomorphisms `h ↦ f(h)`.
    pub fn endomorphisms_of(&self, f: &Matrix) -> Vec<Matrix> {
        (0..f.cols()).map(|h| self.endomorphism(&f.col(h))).collect()
    }

    /// Coordinates in `E` of an endomorphism of `P`, if it is `A`-linear.
    pub fn coordinates(&self, f: &Matrix) -> Option<Vector> {
        self.coords.coords(&f.to_vector())
    }

    /// `ρ(f(p)) = f_[0](p_[0])⊗f_[1]p_[1]` for all basis endomorphisms.
    pub fn check_coaction_equation(&self) -> Check {
        let ca = &self.comodule;
        let h = ca.hopf();
        let field = ca.field();
        let p = self.induced.relative();
        let nh = h.dim();
        let rho_e = ca.coaction();
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for (k, f) in self.basis.iter().enumerate() {
            lhs.push(p.coaction.mul(f));
            let mut sum = Matrix::zeros(field, p.dim() * nh, p.dim());
            for r in 0..rho_e.rows() {
                let c = rho_e.get(r, k);
                if c.is_zero() {
                    continue;
                }
                let (i, l) = (r / nh, r % nh);
                let term = self.basis[i]
                    .kron(&h.algebra().left_mult(&h.basis(l)))
                    .mul(&p.coaction);
                sum.axpy(c, &term);
            }
            rhs.push(sum);
        }
        let cols = p.dim();
        Check::equal(
            "endomorphism coaction is compatible with P",
            &Matrix::vstack_all(field, cols, &lhs),
            &Matrix::vstack_all(field, cols, &rhs),
        )
    }

    /// `F = E^{coH} ≅ End_B(M)` through `g ↦ g⊗_B A` and `f ↦ η⁻¹fη`.
    pub fn identify_coinvariants(&self) -> Result<CoinvariantIdentification> {
        let ca = &self.comodule;
        let field = ca.field();
        let base = self.induced.base();
        let m = base.dim();
        let induced = &self.induced;
        let eta = self.eta();
        let eta_coords = SpanCoordinates::new(field, induced.dim(), &eta.columns())
            .map_err(|_| Error::NotGalois("η_M is not injective".into()))?;
        let end_basis = base.homs(base);
        let end_flat: Vec<Vector> = end_basis.iter().map(Matrix::to_vector).collect();
        let end_coords = SpanCoordinates::new(field, m * m, &end_flat)?;
        let f_emb = ca.coinvariants();

        let mut to_end = Vec::with_capacity(f_emb.dim());
        for k in 0..f_emb.dim() {
            let f = self.endomorphism(&f_emb.basis_image(k));
            let restricted = eta_coords
                .coords_matrix(&f.mul(&eta))
                .ok_or_else(|| Error::NotGalois("coinvariant endomorphism leaves η(M)".into()))?;
            to_end.push(
                end_coords
                    .coords(&restricted.to_vector())
                    .ok_or_else(|| Error::InternalInvariant("restriction is not B-linear".into()))?,
            );
        }
        let mut from_end = Vec::with_capacity(end_basis.len());
        for g in &end_basis {
            let lifted = self.lift(g);
            let e = self
                .coordinates(&lifted)
                .ok_or_else(|| Error::InternalInvariant("g⊗_B A is not A-linear".into()))?;
            from_end.push(
                f_emb
                    .restrict(&e)
                    .ok_or_else(|| Error::InternalInvariant("g⊗_B A is not coinvariant".into()))?,
            );
        }
        Ok(CoinvariantIdentification {
            f_to_end: Matrix::from_columns(field, end_basis.len(), &to_end),
            end_to_f: Matrix::from_columns(field, f_emb.dim(), &from_end),
            end_basis,
        })
    }

    /// `η_M: m ↦ m⊗_B 1`.
    pub fn eta(&self) -> Matrix {
        self.induced.unit_map(&self.base)
    }

    /// The comodule algebra `A` that `P` is induced over.
    pub fn base(&self) -> &ComoduleAlgebra {
        &self.base
    }

    /// `g⊗_B A` for a `B`-linear `g: M → M`.
    pub fn lift(&self, g: &Matrix) -> Matrix {
        let field = self.comodule.field();
        let ia = Matrix::identity(field, self.induced.algebra_dim());
        self.induced
            .projection()
            .mul(&g.kron(&ia))
            .mul(self.induced.section())
    }
}

/// The isomorphism `F ≅ End_B(M)` in coordinates.
#[derive(Debug, Clone)]
pub struct CoinvariantIdentification {
    pub f_to_end: Matrix,
    pub end_to_f: Matrix,
    pub end_basis: Vec<Matrix>,
}

impl CoinvariantIdentification {
    pub fn is_isomorphism(&self) -> bool {
        self.f_to_end.is_square()
            && self.f_to_end.mul(&self.end_to_f).is_identity()
            && self.end_to_f.mul(&self.f_to_end).is_identity()
    }

    /// `g ↦ g⊗_B A` turns composition in `End_B(M)` into the product of `F`.
    pub fn is_multiplicative(&self, e: &EndAlgebra) -> bool {
        let f_alg = e.comodule_algebra().coinvariants().algebra();
        let n = self.end_basis.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let composite = self.end_basis[i].mul(&self.end_basis[j]);
                let lifted = e.coordinates(&e.lift(&composite)).and_then(|c| e.comodule_algebra().coinvariants().restrict(&c));
                let product = f_alg.mul(&self.end_to_f.col(i), &self.end_to_f.col(j));
                lifted == Some(product)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hopf::kron_vec;
    use crate::scalar::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn homs_of_regular_m2() {
        let ca = fixtures::graded_m2(q());
        let a = RelativeHopfModule {
            module: RightModule::regular(ca.algebra()),
            coaction: ca.coaction().clone(),
        };
        assert_eq!(hom_a(&a, &a).len(), 4);
        let zero = RelativeHopfModule {
            module: RightModule::new(ca.algebra().clone(), 0, vec![Matrix::zeros(q(), 0, 0); 4]).unwrap(),
            coaction: Matrix::zeros(q(), 0, 0),
        };
        let row = ca.tensor_over_base(&fixtures::graded_m2_simple_module(&ca)).unwrap();
        assert!(hom_a(row.relative(), &zero).is_empty());
    }

    #[test]
    fn identity_coacts_trivially() {
        let ca = fixtures::graded_m2(q());
        let e = EndAlgebra::build(&ca.regular_base_module(), &ca).unwrap();
        let id = Matrix::identity(q(), 4);
        let r = coaction_of_endomorphism(e.induced().relative(), &ca, &id);
        assert_eq!(r, id.kron(&ca.hopf().unit_column()));
    }

    #[test]
    fn left_multiplication_by_g_coacts_by_g() {
        let ca = fixtures::kc2_regular(q());
        let e = EndAlgebra::build(&ca.regular_base_module(), &ca).unwrap();
        assert_eq!(e.dim(), 2);
        let p = e.induced().relative();
        // P = k⊗_k A is A itself with the same basis
        let lg = ca.algebra().left_mult(&ca.algebra().basis(1));
        let coords = e.coordinates(&lg).unwrap();
        let rho = e.comodule_algebra().coact(&coords);
        assert_eq!(rho, kron_vec(&coords, &ca.hopf().basis(1)));
        assert!(e.check_coaction_equation().passed());
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn dimensions_of_e_and_f() {
        let kc2 = fixtures::kc2_regular(q());
        let e = EndAlgebra::build(&kc2.regular_base_module(), &kc2).unwrap();
        assert_eq!((e.dim(), e.comodule_algebra().coinvariants().dim()), (2, 1));

        let m2 = fixtures::graded_m2(q());
        let e = EndAlgebra::build(&m2.regular_base_module(), &m2).unwrap();
        assert_eq!((e.dim(), e.comodule_algebra().coinvariants().dim()), (4, 2));
        let k = fixtures::graded_m2_simple_module(&m2);
        let e = EndAlgebra::build(&k, &m2).unwrap();
        assert_eq!((e.dim(), e.comodule_algebra().coinvariants().dim()), (1, 1));
    }

    #[test]
    fn coinvariants_are_module_endomorphisms() {
        for (ca, m) in [
            (fixtures::graded_m2(q()), None),
            (fixtures::graded_m2(Field::Prime(3)), Some(())),
            (fixtures::h4_regular(q()).unwrap(), None),
        ] {
            let module = match m {
                Some(()) => fixtures::graded_m2_simple_module(&ca),
                None => ca.regular_base_module(),
            };
            let e = EndAlgebra::build(&module, &ca).unwrap();
            assert!(e.comodule_algebra().validate().passed());
            assert!(e.check_coaction_equation().passed());
            let id = e.identify_coinvariants().unwrap();
            assert!(id.is_isomorphism());
            assert!(id.is_multiplicative(&e));
        }
    }
}
