//! Extending a right `B`-module `M` to a right `A`-module.
//!
//! A candidate is a right `B`-linear `φ: M⊗_B A → M` with `m·a = φ(m⊗_B a)`. Each
//! candidate corresponds to a colinear map `t: H → E = End_A(M⊗_B A)`, and `φ` is a
//! module structure extending the `B`-action exactly when `t` is an algebra map.

use crate::cleft::{find_cleft, CleftingDatum};
use crate::cohomology::{classes, colinear_algebra_maps, omega_classes, omega_equivalent, ModuleAlgebraAction};
use crate::comodule::{ComoduleAlgebra, RightModule};
use crate::convcat::{is_member, Class, Variant};
use crate::error::{Error, Result};
use crate::hopf::kron_vec;
use crate::maintheorem::CategoryIso;
use crate::matrix::{unit_vector, vec_add, vec_scale, Matrix, SpanCoordinates, Vector};
use crate::report::{Check, Status};
use crate::scalar::{Field, Scalar};
use crate::search::{all_coefficients, sample_coefficients, solve_quadratic_family, span_contains, AffineFamily, Certificate, SearchPolicy};
use crate::tensor::solution_space;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Three statements that should be simultaneously true or false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub name: &'static str,
    pub labels: [&'static str; 3],
    pub values: [bool; 3],
}

impl Equivalence {
    pub fn agrees(&self) -> bool {
        self.values.iter().all(|&v| v == self.values[0])
    }

    pub fn holds(&self) -> bool {
        self.values.iter().all(|&v| v)
    }

    pub fn check(&self) -> Check {
        let detail = self
            .labels
            .iter()
            .zip(self.values)
            .map(|(l, v)| format!("{l}: {v}"))
            .collect::<Vec<_>>()
            .join(", ");
        Check::from_bool(self.name, self.agrees(), detail)
    }
}

/// A candidate `φ` and the map `t: H → E` (coordinates in `E`) attached to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftingPair {
    pub phi: Matrix,
    pub t: Matrix,
}

#[derive(Debug)]
pub struct Lifting {
    iso: CategoryIso,
    ca: ComoduleAlgebra,
    module: RightModule,
    candidates: Vec<Matrix>,
    candidate_coords: SpanCoordinates,
}

impl Lifting {
    pub fn new(ca: &ComoduleAlgebra, m: &RightModule) -> Result<Lifting> {
        if m.dim() == 0 {
            return Err(Error::Validation("the zero module has nothing to lift".into()));
        }
        let iso = CategoryIso::new(ca, m)?;
        let candidates = iso.x2().module.homs(m);
        let flat: Vec<Vector> = candidates.iter().map(Matrix::to_vector).collect();
        let candidate_coords = SpanCoordinates::new(ca.field(), m.dim() * iso.x2().dim(), &flat)?;
        Ok(Lifting {
            iso,
            ca: ca.clone(),
            module: m.clone(),
            candidates,
            candidate_coords,
        })
    }

    pub fn iso(&self) -> &CategoryIso {
        &self.iso
    }

    pub fn e(&self) -> &ComoduleAlgebra {
        self.iso.e()
    }

    /// Basis of right `B`-linear maps `M⊗_B A → M`.
    pub fn candidate_basis(&self) -> &[Matrix] {
        &self.candidates
    }

    pub fn candidate(&self, coeffs: &[Scalar]) -> Matrix {
        let field = self.ca.field();
        let mut out = Matrix::zeros(field, self.module.dim(), self.iso.x2().dim());
        for (c, b) in coeffs.iter().zip(&self.candidates) {
            if !c.is_zero() {
                out.axpy(c, b);
            }
        }
        out
    }

    pub fn candidate_coordinates(&self, phi: &Matrix) -> Option<Vector> {
        self.candidate_coords.coords(&phi.to_vector())
    }

    /// `t(h)(m⊗_B a) = Σ m·l_i(h)⊗_B r_i(h)a`.
    pub fn phi_to_t(&self, phi: &Matrix) -> Result<Matrix> {
        self.iso.alpha12_hat(phi)
    }

    /// `φ = η⁻¹(u′(a_[1])(m⊗_B a_[0]))` with `u′ = t∘S̄`.
    pub fn t_to_phi(&self, t: &Matrix) -> Result<Matrix> {
        self.iso.beta12_tilde(&t.mul(self.ca.hopf().antipode_inv()))
    }

    pub fn pair(&self, phi: &Matrix) -> Result<LiftingPair> {
        Ok(LiftingPair {
            phi: phi.clone(),
            t: self.phi_to_t(phi)?,
        })
    }

    /// `m ↦ m·e_a` for every basis element of `A`.
    pub fn actions(&self, phi: &Matrix) -> Vec<Matrix> {
        let field = self.ca.field();
        let im = Matrix::identity(field, self.module.dim());
        let phi_pi = phi.mul(self.iso.end_algebra().induced().projection());
        (0..self.ca.dim())
            .map(|a| phi_pi.mul(&im.kron(&Matrix::column_vector(field, self.ca.algebra().basis(a)))))
            .collect()
    }

    fn act(&self, actions: &[Matrix], a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.ca.field(), self.module.dim(), self.module.dim());
        for (c, x) in a.iter().zip(actions) {
            if !c.is_zero() {
                out.axpy(c, x);
            }
        }
        out
    }

    fn endo(&self, t: &Matrix, h: &[Scalar]) -> Matrix {
        self.iso.end_algebra().endomorphism(&t.mul_vec(h))
    }

    /// `t` is colinear and both defining identities of the pair hold.
    pub fn pair_checks(&self, pair: &LiftingPair) -> Vec<Check> {
        let field = self.ca.field();
        let h = self.ca.hopf();
        let a = self.ca.algebra();
        let p = self.iso.end_algebra().induced();
        let eta = self.iso.end_algebra().eta();
        let (nm, na, nh) = (self.module.dim(), self.ca.dim(), h.dim());
        let acts = self.actions(&pair.phi);
        let u = pair.t.mul(h.antipode_inv());
        let pm = |m: &Vector, x: &Vector| p.projection().mul_vec(&kron_vec(m, x));

        let mut first = true;
        for m in 0..nm {
            for ai in 0..na {
                let lhs = eta.mul_vec(&acts[ai].col(m));
                let mut rhs = vec![field.zero(); p.dim()];
                for (x, c) in self.ca.coact(&a.basis(ai)).into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (a0, hh) = (x / nh, x % nh);
                    let v = self.endo(&u, &h.basis(hh)).mul_vec(&pm(&unit_vector(field, nm, m), &a.basis(a0)));
                    rhs = vec_add(&rhs, &vec_scale(&c, &v));
                }
                first &= lhs == rhs;
            }
        }

        let sg = self.iso.galois().representatives();
        let mut second = true;
        for hi in 0..nh {
            let th = self.endo(&pair.t, &h.basis(hi));
            for m in 0..nm {
                for ai in 0..na {
                    let lhs = th.mul_vec(&pm(&unit_vector(field, nm, m), &a.basis(ai)));
                    let mut rhs = vec![field.zero(); p.dim()];
                    for lr in 0..na * na {
                        let c = sg.get(lr, hi);
                        if c.is_zero() {
                            continue;
                        }
                        let (l, r) = (lr / na, lr % na);
                        let v = pm(&acts[l].col(m), &a.mul(&a.basis(r), &a.basis(ai)));
                        rhs = vec_add(&rhs, &vec_scale(c, &v));
                    }
                    second &= lhs == rhs;
                }
            }
        }
        vec![
            Check::from_bool("t is colinear", is_member(self.e(), Class::T, Variant::Plain, &pair.t), "Hom^H(H,E) membership"),
            Check::from_bool("m·a⊗1 = u′(a_[1])(m⊗a_[0])", first, "on every basis pair"),
            Check::from_bool("t(h)(m⊗a) = Σ m·l_i(h)⊗r_i(h)a", second, "on every basis triple"),
        ]
    }

    fn t_unital(&self, t: &Matrix) -> bool {
        t.mul_vec(self.ca.hopf().unit()) == *self.e().algebra().unit()
    }

    fn u_unital(&self, t: &Matrix) -> bool {
        let h = self.ca.hopf();
        t.mul(h.antipode_inv()).mul_vec(h.unit()) == *self.e().algebra().unit()
    }

    fn acts_unitally(&self, acts: &[Matrix]) -> bool {
        self.act(acts, self.ca.algebra().unit()).is_identity()
    }

    fn t_multiplicative(&self, t: &Matrix) -> bool {
        let (h, e) = (self.ca.hopf(), self.e().algebra());
        (0..h.dim()).all(|i| {
            (0..h.dim()).all(|k| t.mul_vec(&h.mul(&h.basis(i), &h.basis(k))) == e.mul(&t.col(i), &t.col(k)))
        })
    }

    fn u_antimultiplicative(&self, t: &Matrix) -> bool {
        let (h, e) = (self.ca.hopf(), self.e().algebra());
        let u = t.mul(h.antipode_inv());
        (0..h.dim()).all(|i| {
            (0..h.dim()).all(|k| u.mul_vec(&h.mul(&h.basis(i), &h.basis(k))) == e.mul(&u.col(k), &u.col(i)))
        })
    }

    fn acts_associatively(&self, acts: &[Matrix]) -> bool {
        let a = self.ca.algebra();
        (0..a.dim()).all(|i| (0..a.dim()).all(|j| acts[j].mul(&acts[i]) == self.act(acts, &a.mul(&a.basis(i), &a.basis(j)))))
    }

    fn extends_base_action(&self, acts: &[Matrix]) -> bool {
        let b = self.ca.coinvariants();
        (0..b.dim()).all(|k| self.act(acts, &b.basis_image(k)) == self.module.action()[k])
    }

    /// `t(1) = 1`, `u′(1) = 1`, `m·1 = m`.
    pub fn unitality(&self, pair: &LiftingPair) -> Equivalence {
        Equivalence {
            name: "unitality statements agree",
            labels: ["t(1) = 1", "u′(1) = 1", "m·1 = m"],
            values: [self.t_unital(&pair.t), self.u_unital(&pair.t), self.acts_unitally(&self.actions(&pair.phi))],
        }
    }

    /// `t` multiplicative, `u` anti-multiplicative, the action associative.
    pub fn associativity(&self, pair: &LiftingPair) -> Equivalence {
        Equivalence {
            name: "associativity statements agree",
            labels: ["t multiplicative", "u anti-multiplicative", "action associative"],
            values: [
                self.t_multiplicative(&pair.t),
                self.u_antimultiplicative(&pair.t),
                self.acts_associatively(&self.actions(&pair.phi)),
            ],
        }
    }

    /// `t` algebra map, `u` anti-algebra map, `φ` a right `A`-module structure extending `M`.
    pub fn lifting_theorem(&self, pair: &LiftingPair) -> Equivalence {
        let acts = self.actions(&pair.phi);
        Equivalence {
            name: "lifting statements agree",
            labels: ["t algebra map", "u anti-algebra map", "φ is a right A-module extending M"],
            values: [
                self.t_unital(&pair.t) && self.t_multiplicative(&pair.t),
                self.u_unital(&pair.t) && self.u_antimultiplicative(&pair.t),
                self.acts_unitally(&acts) && self.acts_associatively(&acts) && self.extends_base_action(&acts),
            ],
        }
    }

    /// `φ ↦ t ↦ φ` and `t ↦ φ ↦ t` on bases of both candidate spaces.
    pub fn round_trip_checks(&self) -> Result<Vec<Check>> {
        let t_basis = self.iso.hom_spaces().get(Class::T, Variant::Plain).basis().to_vec();
        let mut phi_ok = true;
        for phi in &self.candidates {
            phi_ok &= self.t_to_phi(&self.phi_to_t(phi)?)? == *phi;
        }
        let mut t_ok = true;
        for t in &t_basis {
            let phi = self.t_to_phi(t)?;
            t_ok &= self.candidate_coordinates(&phi).is_some() && self.phi_to_t(&phi)? == *t;
        }
        Ok(vec![
            Check::from_bool("φ ↦ t ↦ φ is the identity", phi_ok, format!("{} basis candidates", self.candidates.len())),
            Check::from_bool("t ↦ φ ↦ t is the identity", t_ok, format!("{} basis colinear maps", t_basis.len())),
            Check::from_bool(
                "candidate spaces have equal dimension",
                self.candidates.len() == t_basis.len(),
                format!("{} and {}", self.candidates.len(), t_basis.len()),
            ),
        ])
    }

    /// Candidates visited by the equivalence checks: all of them over small F_p,
    /// otherwise the basis and seeded samples.
    pub fn enumerate_candidates(&self, policy: SearchPolicy) -> (Vec<Matrix>, Certificate) {
        let field = self.ca.field();
        let d = self.candidates.len();
        if let Some(all) = all_coefficients(field, d, policy.cap) {
            let out: Vec<Matrix> = all.map(|c| self.candidate(&c)).collect();
            let n = out.len() as u64;
            return (out, Certificate { exhaustive: true, visited: n });
        }
        let mut out = self.candidates.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
        for _ in 0..policy.tries {
            out.push(self.candidate(&sample_coefficients(&mut rng, field, d, policy.bound)));
        }
        let n = out.len() as u64;
        (out, Certificate { exhaustive: false, visited: n })
    }

    /// The three equivalences, on every enumerated candidate.
    pub fn equivalence_checks(&self, policy: SearchPolicy) -> Result<Vec<Check>> {
        let (cands, cert) = self.enumerate_candidates(policy);
        let mut unit = (true, 0usize);
        let mut assoc = (true, 0usize);
        let mut lift = (true, 0usize);
        let mut pairs_ok = true;
        for phi in &cands {
            let pair = self.pair(phi)?;
            pairs_ok &= self.pair_checks(&pair).iter().all(Check::passed);
            let (u, a, l) = (self.unitality(&pair), self.associativity(&pair), self.lifting_theorem(&pair));
            unit.0 &= u.agrees();
            assoc.0 &= a.agrees();
            lift.0 &= l.agrees();
            unit.1 += u.holds() as usize;
            assoc.1 += a.holds() as usize;
            lift.1 += l.holds() as usize;
        }
        let detail = |n: usize| format!("{}; all true on {n}", cert.describe());
        Ok(vec![
            Check::from_bool("pair identities hold for every candidate", pairs_ok, cert.describe()),
            Check::from_bool("unitality statements agree", unit.0, detail(unit.1)),
            Check::from_bool("associativity statements agree", assoc.0, detail(assoc.1)),
            Check::from_bool("lifting statements agree", lift.0, detail(lift.1)),
        ])
    }

    /// `m·a·b - m·(ab)` as a function of candidate coordinates.
    fn associativity_residual(&self, coeffs: &[Scalar]) -> Vector {
        let acts = self.actions(&self.candidate(coeffs));
        let a = self.ca.algebra();
        let mut out = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                out.extend(acts[j].mul(&acts[i]).sub(&self.act(&acts, &a.mul(&a.basis(i), &a.basis(j)))).to_vector());
            }
        }
        out
    }

    /// `Λ_M`: every candidate that is a right `A`-module structure extending `M`.
    pub fn actions_set(&self, cap: u64) -> Result<(Vec<Matrix>, Certificate)> {
        let field = self.ca.field();
        let nm = self.module.dim();
        let eta = self.iso.end_algebra().eta();
        let cols: Vec<Vector> = self.candidates.iter().map(|phi| phi.mul(&eta).to_vector()).collect();
        let m = Matrix::from_columns(field, nm * nm, &cols);
        let Some(family) = AffineFamily::solutions(&m, &Matrix::identity(field, nm).to_vector()) else {
            return Ok((Vec::new(), Certificate { exhaustive: true, visited: 0 }));
        };
        let (points, cert) = solve_quadratic_family(&family, cap, |c| self.associativity_residual(c))?;
        let found = points
            .iter()
            .map(|c| self.candidate(c))
            .filter(|phi| self.extends_base_action(&self.actions(phi)))
            .collect();
        Ok((found, cert))
    }

    /// `(M,φ₁) ≅ (M,φ₂)` as right `A`-modules.
    pub fn modules_isomorphic(&self, phi1: &Matrix, phi2: &Matrix, policy: SearchPolicy) -> bool {
        let field = self.ca.field();
        let nm = self.module.dim();
        let (a1, a2) = (self.actions(phi1), self.actions(phi2));
        let sols = solution_space(field, nm, nm, |f| {
            let blocks: Vec<Matrix> = a1.iter().zip(&a2).map(|(x, y)| f.mul(x).sub(&y.mul(f))).collect();
            Matrix::vstack_all(field, nm, &blocks)
        });
        invertible_in_span(field, nm, &sols, policy)
    }

    /// `t₁(h)∘(f⊗_B A) = (f⊗_B A)∘t₂(h)` for an invertible `B`-linear `f: M → M`.
    pub fn maps_equivalent(&self, t1: &Matrix, t2: &Matrix, policy: SearchPolicy) -> bool {
        let field = self.ca.field();
        let nm = self.module.dim();
        let h = self.ca.hopf();
        let end_b = self.module.homs(&self.module);
        let lifted: Vec<Matrix> = end_b.iter().map(|f| self.iso.end_algebra().lift(f)).collect();
        let cols: Vec<Vector> = lifted
            .iter()
            .map(|lf| {
                (0..h.dim())
                    .flat_map(|i| {
                        let e1 = self.endo(t1, &h.basis(i));
                        let e2 = self.endo(t2, &h.basis(i));
                        e1.mul(lf).sub(&lf.mul(&e2)).to_vector()
                    })
                    .collect()
            })
            .collect();
        let rows = cols.first().map_or(0, Vec::len);
        let kernel = Matrix::from_columns(field, rows, &cols).kernel();
        let fs: Vec<Matrix> = kernel
            .iter()
            .map(|c| {
                let mut f = Matrix::zeros(field, nm, nm);
                for (x, g) in c.iter().zip(&end_b) {
                    if !x.is_zero() {
                        f.axpy(x, g);
                    }
                }
                f
            })
            .collect();
        invertible_in_span(field, nm, &fs, policy)
    }

    /// `Λ_M` and `Ω_E` enumerated separately and compared class by class.
    pub fn classify(&self, policy: SearchPolicy) -> Result<Classification> {
        let (actions, certificate) = self.actions_set(policy.cap)?;
        let action_classes = classes(actions.len(), |i, j| self.modules_isomorphic(&actions[i], &actions[j], policy));
        let omega = omega_classes(self.e(), policy)?;
        let ts = actions.iter().map(|phi| self.phi_to_t(phi)).collect::<Result<Vec<_>>>()?;

        let mut checks = vec![Check::from_bool(
            "φ ↦ t is a bijection Λ → Ω_E",
            ts.len() == omega.maps.len() && ts.iter().all(|t| omega.maps.contains(t)),
            format!("|Λ| = {}, |Ω_E| = {}", ts.len(), omega.maps.len()),
        )];
        let mut agree = true;
        for i in 0..ts.len() {
            for j in 0..ts.len() {
                let modules = self.modules_isomorphic(&actions[i], &actions[j], policy);
                let maps = self.maps_equivalent(&ts[i], &ts[j], policy);
                let conj = omega_equivalent(self.e(), &ts[i], &ts[j], policy);
                agree &= modules == maps && maps == conj;
            }
        }
        checks.push(Check::from_bool(
            "module isomorphism, the intertwining equation and conjugacy agree",
            agree,
            format!("{} pairs", ts.len() * ts.len()),
        ));
        checks.push(Check::from_bool(
            "|Λ/≅| = |Ω_E/∼|",
            action_classes.len() == omega.classes.len(),
            format!("{} vs {}", action_classes.len(), omega.classes.len()),
        ));

        let cohomology_order = self.cohomology_order(&omega.maps, policy)?;
        if let Some(n) = cohomology_order {
            checks.push(Check::from_bool(
                "|Ω_E/∼| = |H¹(H, End_B(M))|",
                n == omega.classes.len(),
                format!("{} vs {n}", omega.classes.len()),
            ));
        }
        Ok(Classification {
            actions,
            action_classes,
            algebra_maps: omega.maps,
            map_classes: omega.classes,
            cohomology_order,
            certificate,
            checks,
        })
    }

    fn cohomology_order(&self, omega: &[Matrix], policy: SearchPolicy) -> Result<Option<usize>> {
        let e = self.e();
        let Some(t0) = omega.first() else {
            return Ok(None);
        };
        if !e.hopf().is_cocommutative() || !e.coinvariants().algebra().is_commutative() {
            return Ok(None);
        }
        let datum = CleftingDatum::new(e, t0.clone())?;
        let action = ModuleAlgebraAction::from_datum(e, &datum)?;
        Ok(Some(action.first_cohomology(policy)?.order()))
    }

    /// `M⊗H ≅ M⊗_B A` as relative Hopf modules exactly when `E` is cleft.
    pub fn stability(&self, policy: SearchPolicy) -> Result<Vec<Check>> {
        let field = self.ca.field();
        let (x1, x2) = (self.iso.x1(), self.iso.x2());
        let basis = self.iso.morphism_space(Class::U).basis();
        let square = x1.dim() == x2.dim();
        let flat: Vec<Vector> = basis.iter().map(Matrix::to_vector).collect();
        let mut witness: Option<Matrix> = None;
        let stable = square
            && span_contains(field, x2.dim() * x1.dim(), &flat, policy, |v| {
                let m = Matrix::from_vector(field, x2.dim(), x1.dim(), v);
                m.is_invertible()
            });
        if stable {
            witness = first_invertible(field, x2.dim(), &flat, policy);
        }
        let search = find_cleft(self.e(), policy);
        let cleft = search.datum.is_some();

        let mut checks = Vec::new();
        let exhaustive = all_coefficients(field, flat.len(), policy.cap).is_some();
        let verdict = if stable == cleft {
            Status::Pass
        } else if (!stable && !exhaustive) || (!cleft && !search.certificate.exhaustive) {
            Status::Inconclusive
        } else {
            Status::Fail
        };
        checks.push(Check::new(
            "H-stable iff E is cleft",
            verdict,
            format!("stable: {stable}, cleft: {cleft} ({})", search.certificate.describe()),
        ));
        if let Some(psi) = witness {
            let inv = psi.invert()?;
            let t = self.iso.alpha_inv(Class::T, &inv)?;
            checks.push(Check::from_bool(
                "the inverse of an isomorphism M⊗H → M⊗_B A gives a clefting map",
                CleftingDatum::new(self.e(), t).is_ok(),
                "transported through the category isomorphism",
            ));
        }
        if let Some(d) = &search.datum {
            let psi = self.iso.alpha(Class::T, &d.t)?;
            checks.push(Check::from_bool(
                "a clefting map gives an isomorphism M⊗_B A → M⊗H",
                psi.is_invertible(),
                "transported through the category isomorphism",
            ));
        }
        Ok(checks)
    }
}

fn invertible_in_span(field: Field, n: usize, maps: &[Matrix], policy: SearchPolicy) -> bool {
    let flat: Vec<Vector> = maps.iter().map(Matrix::to_vector).collect();
    span_contains(field, n * n, &flat, policy, |v| Matrix::from_vector(field, n, n, v).is_invertible())
}

fn first_invertible(field: Field, rows: usize, flat: &[Vector], policy: SearchPolicy) -> Option<Matrix> {
    let found = std::cell::RefCell::new(None);
    let cols = flat.first().map_or(0, |v| v.len() / rows.max(1));
    span_contains(field, rows * cols, flat, policy, |v| {
        let m = Matrix::from_vector(field, rows, cols, v);
        let ok = m.is_invertible();
        if ok {
            found.borrow_mut().get_or_insert(m);
        }
        ok
    });
    found.into_inner()
}

/// `Λ_M` and `Ω_E` with their classes.
#[derive(Debug, Clone)]
pub struct Classification {
    pub actions: Vec<Matrix>,
    pub action_classes: Vec<Vec<usize>>,
    pub algebra_maps: Vec<Matrix>,
    pub map_classes: Vec<Vec<usize>>,
    pub cohomology_order: Option<usize>,
    pub certificate: Certificate,
    pub checks: Vec<Check>,
}

/// Every lifting check, or a single degenerate verdict for the zero module.
pub fn lifting_report(ca: &ComoduleAlgebra, m: &RightModule, policy: SearchPolicy) -> Result<Vec<Check>> {
    if m.dim() == 0 {
        return Ok(vec![Check::new(
            "lifting",
            Status::Degenerate,
            "M = 0: every statement is vacuous",
        )]);
    }
    let lifting = Lifting::new(ca, m)?;
    let mut checks = lifting.round_trip_checks()?;
    checks.extend(lifting.equivalence_checks(policy)?);
    checks.extend(lifting.classify(policy)?.checks);
    checks.extend(lifting.stability(policy)?);
    Ok(checks)
}

/// `Ω_E` for the endomorphism comodule algebra, exposed for the classification command.
pub fn endomorphism_algebra_maps(lifting: &Lifting, cap: u64) -> Result<(Vec<Matrix>, Certificate)> {
    colinear_algebra_maps(lifting.e(), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use Field;

    fn all_pass(checks: &[Check]) {
        for c in checks {
            assert!(c.passed(), "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn graded_m2_with_regular_base_module() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let l = Lifting::new(&ca, &ca.regular_base_module()).unwrap();
        assert_eq!(l.candidate_basis().len(), 4);
        all_pass(&l.round_trip_checks().unwrap());
        all_pass(&l.equivalence_checks(SearchPolicy::default()).unwrap());
        let c = l.classify(SearchPolicy::default()).unwrap();
        all_pass(&c.checks);
        assert!(!c.actions.is_empty());
        for phi in &c.actions {
            let pair = l.pair(phi).unwrap();
            assert!(l.lifting_theorem(&pair).holds());
        }
        all_pass(&l.stability(SearchPolicy::default()).unwrap());
    }

    #[test]
    fn graded_m2_with_one_dimensional_module() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let m = fixtures::graded_m2_simple_module(&ca);
        let l = Lifting::new(&ca, &m).unwrap();
        all_pass(&l.round_trip_checks().unwrap());
        all_pass(&l.equivalence_checks(SearchPolicy::default()).unwrap());
        let c = l.classify(SearchPolicy::default()).unwrap();
        all_pass(&c.checks);
        assert!(c.actions.is_empty());
        all_pass(&l.stability(SearchPolicy::default()).unwrap());
    }

    #[test]
    fn zero_map_fails_unitality_everywhere() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let l = Lifting::new(&ca, &ca.regular_base_module()).unwrap();
        let zero = l.candidate(&vec![Field::Prime(3).zero(); 4]);
        let pair = l.pair(&zero).unwrap();
        assert_eq!(l.unitality(&pair).values, [false, false, false]);
    }

    #[test]
    fn zero_module_is_degenerate() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let m = RightModule::zero(ca.coinvariants().algebra());
        let r = lifting_report(&ca, &m, SearchPolicy::default()).unwrap();
        assert_eq!(r[0].status, Status::Degenerate);
    }

    #[test]
    fn non_galois_input_is_rejected() {
        let ca = fixtures::trivial_kxk(Field::Rationals);
        assert!(matches!(
            Lifting::new(&ca, &ca.regular_base_module()),
            Err(Error::NotGalois(_))
        ));
    }
}
