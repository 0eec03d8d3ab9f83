//! The isomorphism between the convolution categories built on `E = End_A(M⊗_B A)`
//! and the full subcategory of relative Hopf modules on `M⊗H` and `M⊗_B A`.
//!
//! Objects: `1 ↦ X1 = M⊗H` (coaction `id⊗Δ`), `2 ↦ X2 = M⊗_B A`. A morphism
//! `f: i → j` of the plain category goes to a `B`-linear, `H`-colinear map
//! `α(f): X_i → X_j`. Hom-spaces on both sides are solved independently and every
//! map is compared in coordinates.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comodule::{ComoduleAlgebra, RelativeHopfModule, RightModule};
use crate::convcat::{compose, unit_map, Class, HomSpaces, Variant};
use crate::endomorphism::EndAlgebra;
use crate::error::{Error, Result};
use crate::galois::GaloisExtension;
use crate::hopf::kron_vec;
use crate::matrix::{unit_vector, Matrix, SpanCoordinates, Vector};
use crate::report::{Check, Status};
use crate::tensor::right_leg_component;

/// Basis of `Hom_B^H(X_i, X_j)` with coordinates.
#[derive(Debug, Clone)]
pub struct MorphismSpace {
    basis: Vec<Matrix>,
    coords: SpanCoordinates,
    rows: usize,
    cols: usize,
}

impl MorphismSpace {
    fn new(source: &RelativeHopfModule, target: &RelativeHopfModule, ca: &ComoduleAlgebra) -> Result<MorphismSpace> {
        let basis = source.morphisms(target, ca.hopf());
        let flat: Vec<Vector> = basis.iter().map(Matrix::to_vector).collect();
        let (rows, cols) = (target.dim(), source.dim());
        let coords = SpanCoordinates::new(ca.field(), rows * cols, &flat)?;
        Ok(MorphismSpace { basis, coords, rows, cols })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn coordinates(&self, f: &Matrix) -> Option<Vector> {
        if f.rows() != self.rows || f.cols() != self.cols {
            return None;
        }
        self.coords.coords(&f.to_vector())
    }
}

/// Deliberate corruptions used as negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tamper {
    /// Build `α` on `(2,1)` without precomposing with `S̄`, and invert `η_M`
    /// with an unchecked left inverse.
    OmitAntipodeInGamma12,
}

/// How many pairs the functoriality checks visit.
#[derive(Debug, Clone, Copy)]
pub struct PairPolicy {
    /// Every basis pair is checked when both bases have at most this many elements.
    pub exhaustive_up_to: usize,
    /// Otherwise this many seeded random pairs.
    pub samples: usize,
    pub seed: u64,
}

impl Default for PairPolicy {
    fn default() -> PairPolicy {
        PairPolicy {
            exhaustive_up_to: 8,
            samples: 64,
            seed: 0,
        }
    }
}

/// All the data attached to a Galois extension `A` and a right `B`-module `M`.
#[derive(Debug)]
pub struct CategoryIso {
    galois: GaloisExtension,
    end: EndAlgebra,
    spaces: HomSpaces,
    x1: RelativeHopfModule,
    x2: RelativeHopfModule,
    morphisms: [MorphismSpace; 4],
    eta: Matrix,
    eta_coords: SpanCoordinates,
    tamper: Option<Tamper>,
}

/// Matrices of the maps between coordinatized hom-spaces for one class.
#[derive(Debug, Clone)]
pub struct IsoPackage {
    pub class: Class,
    /// `γ`: primed coordinates to plain coordinates.
    pub gamma: Matrix,
    /// `β`: primed coordinates to relative Hopf module coordinates.
    pub beta: Matrix,
    /// The explicit inverse formula: relative Hopf module coordinates to plain coordinates.
    pub inverse: Matrix,
    /// `α` computed from its defining composite, plain to relative Hopf module coordinates.
    pub alpha: Matrix,
    pub checks: Vec<Check>,
}

impl CategoryIso {
    pub fn new(ca: &ComoduleAlgebra, m: &RightModule) -> Result<CategoryIso> {
        let galois = GaloisExtension::new(ca)?;
        let end = EndAlgebra::build(m, ca)?;
        let field = ca.field();
        let h = ca.hopf();
        let nh = h.dim();
        let ih = Matrix::identity(field, nh);
        let im = Matrix::identity(field, m.dim());
        let x1 = RelativeHopfModule {
            module: RightModule::new(
                m.algebra().clone(),
                m.dim() * nh,
                m.action().iter().map(|r| r.kron(&ih)).collect(),
            )?,
            coaction: im.kron(h.comul_matrix()),
        };
        let p = end.induced();
        let b = ca.coinvariants();
        let x2 = RelativeHopfModule {
            module: RightModule::new(
                b.algebra().clone(),
                p.dim(),
                (0..b.dim()).map(|k| p.act(&ca.coinvariant_image(k))).collect(),
            )?,
            coaction: p.coaction().clone(),
        };
        let morphisms = [
            MorphismSpace::new(&x1, &x1, ca)?,
            MorphismSpace::new(&x1, &x2, ca)?,
            MorphismSpace::new(&x2, &x1, ca)?,
            MorphismSpace::new(&x2, &x2, ca)?,
        ];
        let eta = end.eta();
        let eta_coords = SpanCoordinates::new(field, p.dim(), &eta.columns())
            .map_err(|_| Error::NotGalois("η_M is not injective".into()))?;
        let spaces = HomSpaces::new(end.comodule_algebra());
        Ok(CategoryIso {
            galois,
            end,
            spaces,
            x1,
            x2,
            morphisms,
            eta,
            eta_coords,
            tamper: None,
        })
    }

    pub fn with_tamper(mut self, tamper: Tamper) -> CategoryIso {
        self.tamper = Some(tamper);
        self
    }

    fn ca(&self) -> &ComoduleAlgebra {
        self.galois.comodule_algebra()
    }

    pub fn galois(&self) -> &GaloisExtension {
        &self.galois
    }

    /// The comodule algebra `E`.
    pub fn e(&self) -> &ComoduleAlgebra {
        self.end.comodule_algebra()
    }

    pub fn end_algebra(&self) -> &EndAlgebra {
        &self.end
    }

    pub fn hom_spaces(&self) -> &HomSpaces {
        &self.spaces
    }

    pub fn x1(&self) -> &RelativeHopfModule {
        &self.x1
    }

    pub fn x2(&self) -> &RelativeHopfModule {
        &self.x2
    }

    pub fn morphism_space(&self, class: Class) -> &MorphismSpace {
        &self.morphisms[class_index(class)]
    }

    fn m_dim(&self) -> usize {
        self.end.induced().base().dim()
    }

    fn p_dim(&self) -> usize {
        self.end.induced().dim()
    }

    fn h_dim(&self) -> usize {
        self.ca().hopf().dim()
    }

    fn eta_inverse(&self, x: &Matrix) -> Result<Matrix> {
        if self.tamper == Some(Tamper::OmitAntipodeInGamma12) {
            return Ok(self.eta_coords.left_inverse().mul(x));
        }
        self.eta_coords
            .coords_matrix(x)
            .ok_or_else(|| Error::MembershipViolation("value does not lie in η_M(M)".into()))
    }

    fn endo(&self, f: &Matrix, h: usize) -> Matrix {
        self.end.endomorphism(&f.col(h))
    }

    fn e_coords(&self, endo: &Matrix) -> Result<Vector> {
        self.end
            .coordinates(endo)
            .ok_or_else(|| Error::MembershipViolation("map is not A-linear".into()))
    }

    fn from_columns(&self, cols: &[Vector]) -> Matrix {
        Matrix::from_columns(self.e().field(), self.end.dim(), cols)
    }

    /// `δ1(φ)(p) = φ(p_[0])⊗p_[1]`.
    pub fn delta1(&self, phi: &Matrix) -> Matrix {
        let ih = Matrix::identity(self.e().field(), self.h_dim());
        phi.kron(&ih).mul(self.end.induced().coaction())
    }

    /// `(M⊗ε)∘ϕ`.
    pub fn delta1_inv(&self, varphi: &Matrix) -> Matrix {
        let im = Matrix::identity(self.e().field(), self.m_dim());
        im.kron(&self.ca().hopf().counit_row()).mul(varphi)
    }

    /// `δ2(Θ)(m⊗h) = Θ(m⊗h_(1))⊗h_(2)`.
    pub fn delta2(&self, theta: &Matrix) -> Matrix {
        let field = self.e().field();
        let ih = Matrix::identity(field, self.h_dim());
        let im = Matrix::identity(field, self.m_dim());
        theta.kron(&ih).mul(&im.kron(self.ca().hopf().comul_matrix()))
    }

    pub fn delta2_inv(&self, theta: &Matrix) -> Matrix {
        let im = Matrix::identity(self.e().field(), self.m_dim());
        im.kron(&self.ca().hopf().counit_row()).mul(theta)
    }

    /// `Θ(m⊗h) = η⁻¹(v′(h)(m⊗1))`, for `v′: H → F`.
    pub fn beta11_tilde(&self, v: &Matrix) -> Result<Matrix> {
        let (nm, nh) = (self.m_dim(), self.h_dim());
        let mut theta = Matrix::zeros(self.e().field(), nm, nm * nh);
        for h in 0..nh {
            let block = self.eta_inverse(&self.endo(v, h).mul(&self.eta))?;
            for m in 0..nm {
                theta.set_col(m * nh + h, &block.col(m));
            }
        }
        Ok(theta)
    }

    /// `β̂11(Θ)(h)(m⊗a) = Θ(m⊗h)⊗a`.
    pub fn beta11_hat(&self, theta: &Matrix) -> Result<Matrix> {
        let field = self.e().field();
        let (nm, nh) = (self.m_dim(), self.h_dim());
        let ia = Matrix::identity(field, self.ca().dim());
        let im = Matrix::identity(field, nm);
        let p = self.end.induced();
        let mut cols = Vec::with_capacity(nh);
        for h in 0..nh {
            let pick = im.kron(&Matrix::column_vector(field, unit_vector(field, nh, h)));
            let theta_h = theta.mul(&pick);
            cols.push(self.e_coords(&p.projection().mul(&theta_h.kron(&ia)).mul(p.section()))?);
        }
        Ok(self.from_columns(&cols))
    }

    /// `β21(t′)(m⊗h) = t′(h)(m⊗1)`.
    pub fn beta21(&self, t: &Matrix) -> Matrix {
        let (nm, nh) = (self.m_dim(), self.h_dim());
        let mut psi = Matrix::zeros(self.e().field(), self.p_dim(), nm * nh);
        for h in 0..nh {
            let block = self.endo(t, h).mul(&self.eta);
            for m in 0..nm {
                psi.set_col(m * nh + h, &block.col(m));
            }
        }
        psi
    }

    /// `β̄21(ψ)(h)(m⊗a) = ψ(m⊗h)a`.
    pub fn beta21_bar(&self, psi: &Matrix) -> Result<Matrix> {
        let field = self.e().field();
        let (nm, nh, na) = (self.m_dim(), self.h_dim(), self.ca().dim());
        let p = self.end.induced();
        let acts: Vec<Matrix> = (0..na).map(|a| p.act(&self.ca().algebra().basis(a))).collect();
        let mut cols = Vec::with_capacity(nh);
        for h in 0..nh {
            let mut on_tensor = Vec::with_capacity(nm * na);
            for m in 0..nm {
                let value = psi.col(m * nh + h);
                for act in &acts {
                    on_tensor.push(act.mul_vec(&value));
                }
            }
            let map = Matrix::from_columns(field, self.p_dim(), &on_tensor).mul(p.section());
            cols.push(self.e_coords(&map)?);
        }
        Ok(self.from_columns(&cols))
    }

    /// `β̃12(u′)(m⊗a) = η⁻¹(u′(a_[1])(m⊗a_[0]))`, a map `M⊗_B A → M`.
    pub fn beta12_tilde(&self, u: &Matrix) -> Result<Matrix> {
        let ca = self.ca();
        let field = ca.field();
        let (nm, nh, na) = (self.m_dim(), self.h_dim(), ca.dim());
        let p = self.end.induced();
        let mut on_tensor = Matrix::zeros(field, self.p_dim(), nm * na);
        let endos: Vec<Matrix> = (0..nh).map(|h| self.endo(u, h)).collect();
        for m in 0..nm {
            for a in 0..na {
                let mut acc = vec![field.zero(); self.p_dim()];
                for r in 0..na * nh {
                    let c = ca.coaction().get(r, a);
                    if c.is_zero() {
                        continue;
                    }
                    let (a0, h) = (r / nh, r % nh);
                    let v = endos[h].mul_vec(&p.projection().col(m * na + a0));
                    for (x, y) in acc.iter_mut().zip(v) {
                        *x += &(c * &y);
                    }
                }
                on_tensor.set_col(m * na + a, &acc);
            }
        }
        Ok(self.eta_inverse(&on_tensor)?.mul(p.section()))
    }

    /// `α̂12(φ)(h)(m⊗a) = Σ φ(m⊗l_i(h))⊗r_i(h)a`.
    pub fn alpha12_hat(&self, phi: &Matrix) -> Result<Matrix> {
        let ca = self.ca();
        let field = ca.field();
        let (nm, nh, na) = (self.m_dim(), self.h_dim(), ca.dim());
        let p = self.end.induced();
        let phi_pi = phi.mul(p.projection());
        let sg = self.galois.representatives();
        let mut cols = Vec::with_capacity(nh);
        for h in 0..nh {
            let mut on_tensor = Vec::with_capacity(nm * na);
            for m in 0..nm {
                for a in 0..na {
                    let mut acc = vec![field.zero(); nm * na];
                    for lr in 0..na * na {
                        let c = sg.get(lr, h);
                        if c.is_zero() {
                            continue;
                        }
                        let (l, r) = (lr / na, lr % na);
                        let left = phi_pi.col(m * na + l);
                        let right = ca.algebra().mul(&ca.algebra().basis(r), &ca.algebra().basis(a));
                        for (x, y) in acc.iter_mut().zip(kron_vec(&left, &right)) {
                            *x += &(c * &y);
                        }
                    }
                    on_tensor.push(p.projection().mul_vec(&acc));
                }
            }
            let map = Matrix::from_columns(field, self.p_dim(), &on_tensor).mul(p.section());
            cols.push(self.e_coords(&map)?);
        }
        Ok(self.from_columns(&cols))
    }

    /// `β22(w′)(p) = w′(p_[1])(p_[0])`.
    pub fn beta22(&self, w: &Matrix) -> Matrix {
        let field = self.e().field();
        let (np, nh) = (self.p_dim(), self.h_dim());
        let rho = self.end.induced().coaction();
        let mut kappa = Matrix::zeros(field, np, np);
        for h in 0..nh {
            let term = self.endo(w, h).mul(&right_leg_component(field, np, nh, h)).mul(rho);
            kappa = kappa.add(&term);
        }
        kappa
    }

    /// `ᾱ22(κ)(h)(m⊗a) = Σ κ(m⊗l_i(h))r_i(h)a`.
    pub fn alpha22_bar(&self, kappa: &Matrix) -> Result<Matrix> {
        let ca = self.ca();
        let field = ca.field();
        let (nm, nh, na) = (self.m_dim(), self.h_dim(), ca.dim());
        let p = self.end.induced();
        let kappa_pi = kappa.mul(p.projection());
        let sg = self.galois.representatives();
        let mut cols = Vec::with_capacity(nh);
        for h in 0..nh {
            let mut on_tensor = Vec::with_capacity(nm * na);
            for m in 0..nm {
                for a in 0..na {
                    let mut acc = vec![field.zero(); self.p_dim()];
                    for lr in 0..na * na {
                        let c = sg.get(lr, h);
                        if c.is_zero() {
                            continue;
                        }
                        let (l, r) = (lr / na, lr % na);
                        let ra = ca.algebra().mul(&ca.algebra().basis(r), &ca.algebra().basis(a));
                        let v = p.act(&ra).mul_vec(&kappa_pi.col(m * na + l));
                        for (x, y) in acc.iter_mut().zip(v) {
                            *x += &(c * &y);
                        }
                    }
                    on_tensor.push(acc);
                }
            }
            let map = Matrix::from_columns(field, self.p_dim(), &on_tensor).mul(p.section());
            cols.push(self.e_coords(&map)?);
        }
        Ok(self.from_columns(&cols))
    }

    fn gamma(&self, f: &Matrix) -> Matrix {
        f.mul(self.ca().hopf().antipode())
    }

    fn gamma_inv(&self, f: &Matrix) -> Matrix {
        f.mul(self.ca().hopf().antipode_inv())
    }

    /// `β` on a morphism of the primed category.
    pub fn beta(&self, class: Class, f: &Matrix) -> Result<Matrix> {
        Ok(match class {
            Class::V => self.delta2(&self.beta11_tilde(f)?),
            Class::U => self.beta21(f),
            Class::T => self.delta1(&self.beta12_tilde(f)?),
            Class::W => self.beta22(f),
        })
    }

    /// `α = β∘γ̄` on a morphism of the plain category.
    pub fn alpha(&self, class: Class, f: &Matrix) -> Result<Matrix> {
        if class == Class::T && self.tamper == Some(Tamper::OmitAntipodeInGamma12) {
            return Ok(self.delta1(&self.beta12_tilde(f)?));
        }
        self.beta(class, &self.gamma_inv(f))
    }

    /// The explicit inverse of `α`, back into the plain category.
    pub fn alpha_inv(&self, class: Class, d: &Matrix) -> Result<Matrix> {
        Ok(match class {
            Class::V => self.gamma(&self.beta11_hat(&self.delta2_inv(d))?),
            Class::U => self.gamma(&self.beta21_bar(d)?),
            Class::T => self.alpha12_hat(&self.delta1_inv(d))?,
            Class::W => self.alpha22_bar(d)?,
        })
    }

    fn d_coords(&self, class: Class, d: &Matrix) -> Result<Vector> {
        self.morphism_space(class).coordinates(d).ok_or_else(|| {
            Error::MembershipViolation(format!("image of a {} morphism is not B-linear and H-colinear", class.name()))
        })
    }

    fn c_coords(&self, class: Class, variant: Variant, f: &Matrix) -> Result<Vector> {
        self.spaces.get(class, variant).coordinates(f).ok_or_else(|| {
            Error::MembershipViolation(format!("map is not a {} morphism of the {:?} category", class.name(), variant))
        })
    }

    pub fn iso_package(&self, class: Class) -> Result<IsoPackage> {
        let field = self.e().field();
        let plain = self.spaces.get(class, Variant::Plain);
        let primed = self.spaces.get(class, Variant::Primed);
        let d = self.morphism_space(class);
        let name = class.name();
        let mut checks = vec![Check::from_bool(
            format!("{name} hom-space dimensions"),
            plain.dim() == primed.dim() && plain.dim() == d.dim(),
            format!("plain {}, primed {}, relative Hopf modules {}", plain.dim(), primed.dim(), d.dim()),
        )];

        let gamma_cols = primed
            .basis()
            .iter()
            .map(|f| self.c_coords(class, Variant::Plain, &self.gamma(f)))
            .collect::<Result<Vec<_>>>()?;
        let gamma = Matrix::from_columns(field, plain.dim(), &gamma_cols);
        let beta_cols = primed
            .basis()
            .iter()
            .map(|f| self.beta(class, f).and_then(|x| self.d_coords(class, &x)))
            .collect::<Result<Vec<_>>>()?;
        let beta = Matrix::from_columns(field, d.dim(), &beta_cols);
        let inv_cols = d
            .basis()
            .iter()
            .map(|x| self.alpha_inv(class, x).and_then(|f| self.c_coords(class, Variant::Plain, &f)))
            .collect::<Result<Vec<_>>>()?;
        let inverse = Matrix::from_columns(field, plain.dim(), &inv_cols);
        let alpha_cols = plain
            .basis()
            .iter()
            .map(|f| self.alpha(class, f).and_then(|x| self.d_coords(class, &x)))
            .collect::<Result<Vec<_>>>()?;
        let alpha = Matrix::from_columns(field, d.dim(), &alpha_cols);

        match inverse.invert() {
            Ok(inv_inv) => {
                checks.push(Check::pass(format!("{name} inverse formula is bijective"), "matrix is invertible"));
                checks.push(Check::equal(format!("{name} α∘γ = β"), &inv_inv.mul(&gamma), &beta));
                checks.push(Check::equal(format!("{name} α agrees with the inverted inverse formula"), &alpha, &inv_inv));
            }
            Err(_) => checks.push(Check::fail(format!("{name} inverse formula is bijective"), "matrix is singular")),
        }
        checks.push(Check::from_bool(
            format!("{name} round trips"),
            alpha.is_square() && inverse.mul(&alpha).is_identity() && alpha.mul(&inverse).is_identity(),
            "inverse∘α and α∘inverse are identities",
        ));
        Ok(IsoPackage {
            class,
            gamma,
            beta,
            inverse,
            alpha,
            checks,
        })
    }

    /// `α(g)∘α(f) = α(g*f)` for `f: i → j`, `g: j → k`.
    pub fn functoriality(&self, f_class: Class, g_class: Class, policy: PairPolicy) -> Check {
        let name = format!("functoriality {} then {}", f_class.name(), g_class.name());
        match self.functoriality_inner(f_class, g_class, policy) {
            Ok(None) => Check::pass(name, "holds on every visited pair"),
            Ok(Some(detail)) => Check::fail(name, detail),
            Err(e) => Check::fail(name, e.to_string()),
        }
    }

    fn functoriality_inner(&self, f_class: Class, g_class: Class, policy: PairPolicy) -> Result<Option<String>> {
        let e = self.e();
        let fs = self.spaces.get(f_class, Variant::Plain);
        let gs = self.spaces.get(g_class, Variant::Plain);
        let pairs: Vec<(Matrix, Matrix, String)> =
            if fs.dim() <= policy.exhaustive_up_to && gs.dim() <= policy.exhaustive_up_to {
                let mut v = Vec::new();
                for (i, f) in fs.basis().iter().enumerate() {
                    for (j, g) in gs.basis().iter().enumerate() {
                        v.push((f.clone(), g.clone(), format!("basis pair ({i}, {j})")));
                    }
                }
                v
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
                (0..policy.samples)
                    .map(|k| (fs.sample(&mut rng), gs.sample(&mut rng), format!("sample {k}")))
                    .collect()
            };
        for (f, g, label) in pairs {
            let (class, gf) = compose(e, Variant::Plain, (f_class, &f), (g_class, &g))?;
            let lhs = self.alpha(g_class, &g)?.mul(&self.alpha(f_class, &f)?);
            let rhs = self.alpha(class, &gf)?;
            if lhs != rhs {
                let (r, c) = lhs.first_difference(&rhs).unwrap_or((0, 0));
                return Ok(Some(format!("fails at {label}, entry ({r}, {c})")));
            }
        }
        Ok(None)
    }

    /// The transported products on `Hom_B(M⊗H, M)` and `Hom_B(M⊗_B A, M)` and the units.
    pub fn delta_checks(&self) -> Vec<Check> {
        let mut checks = Vec::new();
        let v_basis = self.morphism_space(Class::V).basis();
        let thetas: Vec<Matrix> = v_basis.iter().map(|d| self.delta2_inv(d)).collect();
        let round2 = thetas.iter().zip(v_basis).all(|(t, d)| &self.delta2(t) == d);
        checks.push(Check::from_bool("δ2 round trip", round2, "δ2(δ̄2(θ)) = θ on a basis"));
        let mult = thetas.iter().all(|a| {
            thetas
                .iter()
                .all(|b| self.delta2(&a.mul(&self.delta2(b))) == self.delta2(a).mul(&self.delta2(b)))
        });
        checks.push(Check::from_bool("δ2 is multiplicative", mult, "Θ·Θ′ = Θ∘δ2(Θ′) goes to composition"));
        let t_basis = self.morphism_space(Class::T).basis();
        let round1 = t_basis.iter().all(|d| &self.delta1(&self.delta1_inv(d)) == d);
        checks.push(Check::from_bool("δ1 round trip", round1, "δ1(δ̄1(ϕ)) = ϕ on a basis"));

        let unit = unit_map(self.e());
        for (class, size) in [(Class::V, self.x1.dim()), (Class::W, self.x2.dim())] {
            let ok = self
                .alpha(class, &unit)
                .map(|x| x.is_identity() && x.rows() == size)
                .unwrap_or(false);
            checks.push(Check::from_bool(
                format!("{} α preserves the unit", class.name()),
                ok,
                "ηε goes to the identity",
            ));
        }
        checks
    }

    /// Everything: bijectivity and commutativity per class, functoriality for all
    /// eight composable patterns, and the transported structure.
    pub fn verify(&self, policy: PairPolicy) -> Vec<Check> {
        let mut checks = Vec::new();
        for class in Class::ALL {
            match self.iso_package(class) {
                Ok(p) => checks.extend(p.checks),
                Err(e) => checks.push(Check::fail(format!("{} isomorphism", class.name()), e.to_string())),
            }
        }
        for (f, g) in composable_patterns() {
            checks.push(self.functoriality(f, g, policy));
        }
        checks.extend(self.delta_checks());
        checks
    }

    pub fn dimensions(&self) -> Vec<(Class, usize, usize, usize)> {
        Class::ALL
            .iter()
            .map(|&c| {
                (
                    c,
                    self.spaces.get(c, Variant::Plain).dim(),
                    self.spaces.get(c, Variant::Primed).dim(),
                    self.morphism_space(c).dim(),
                )
            })
            .collect()
    }
}

/// The eight pairs `(f, g)` with `f: i → j`, `g: j → k`.
pub fn composable_patterns() -> Vec<(Class, Class)> {
    let mut v = Vec::new();
    for f in Class::ALL {
        for g in Class::ALL {
            if f.target() == g.source() {
                v.push((f, g));
            }
        }
    }
    v
}

fn class_index(c: Class) -> usize {
    match c {
        Class::V => 0,
        Class::U => 1,
        Class::T => 2,
        Class::W => 3,
    }
}

/// Summary status of a batch of checks.
pub fn overall(checks: &[Check]) -> Status {
    if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Field;

    fn assert_all_pass(checks: &[Check]) {
        for c in checks {
            assert!(c.passed(), "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn graded_m2_with_regular_module() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let iso = CategoryIso::new(&ca, &ca.regular_base_module()).unwrap();
        for (_, a, b, c) in iso.dimensions() {
            assert_eq!((a, a), (b, c));
        }
        assert_all_pass(&iso.verify(PairPolicy::default()));
    }

    #[test]
    fn graded_m2_with_simple_module_over_f3() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let k = fixtures::graded_m2_simple_module(&ca);
        let iso = CategoryIso::new(&ca, &k).unwrap();
        let dims: Vec<usize> = iso.dimensions().iter().map(|d| d.1).collect();
        assert_eq!(dims, vec![2, 1, 1, 2]);
        assert_all_pass(&iso.verify(PairPolicy::default()));
    }

    #[test]
    fn h4_with_ground_module() {
        let ca = fixtures::h4_regular(Field::Rationals).unwrap();
        let iso = CategoryIso::new(&ca, &fixtures::ground_module(&ca)).unwrap();
        for (_, a, b, c) in iso.dimensions() {
            assert_eq!((a, b, c), (4, 4, 4));
        }
        assert_all_pass(&iso.verify(PairPolicy::default()));
    }

    #[test]
    fn dropping_the_antipode_breaks_functoriality() {
        let ca = fixtures::h4_regular(Field::Rationals).unwrap();
        let iso = CategoryIso::new(&ca, &fixtures::ground_module(&ca))
            .unwrap()
            .with_tamper(Tamper::OmitAntipodeInGamma12);
        let check = iso.functoriality(Class::T, Class::V, PairPolicy::default());
        assert_eq!(check.status, Status::Fail, "{}", check.detail);
    }

    #[test]
    fn unit_goes_to_identity_and_delta_of_counit_is_identity() {
        let ca = fixtures::graded_m2(Field::Rationals);
        let iso = CategoryIso::new(&ca, &ca.regular_base_module()).unwrap();
        let f = ca.field();
        let theta = Matrix::identity(f, 2).kron(&ca.hopf().counit_row());
        assert!(iso.delta2(&theta).is_identity());
        assert!(iso.beta22(&unit_map(iso.e())).is_identity());
    }

    #[test]
    fn non_galois_input_is_rejected() {
        let ca = fixtures::trivial_kxk(Field::Rationals);
        assert!(matches!(
            CategoryIso::new(&ca, &ca.regular_base_module()),
            Err(Error::NotGalois(_))
        ));
    }
}
