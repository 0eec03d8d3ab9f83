//! Cleft extensions and crossed products `B#_σH`.
//!
//! A comodule algebra is cleft when some colinear `t: H → A` is convolution
//! invertible. Such a `t` yields a measuring `h·b = t(h_(1))bu(h_(2))` and a
//! cocycle `σ(h⊗k) = t(h_(1))t(k_(1))u(h_(2)k_(2))`, and `A` is recovered as the
//! crossed product on `B⊗H`.

use std::fmt;

use crate::algebra::Algebra;
use crate::comodule::ComoduleAlgebra;
use crate::convcat::{convolution_inverse, convolve, is_member, unit_map, Class, HomSpace, Variant};
use crate::error::{Error, Result};
use crate::galois::GaloisExtension;
use crate::hopf::{kron_vec, HopfAlgebra};
use crate::matrix::{unit_vector, vec_add, vec_scale, Matrix, Vector};
use crate::report::{Check, Status};
use crate::scalar::Scalar;
use crate::search::{first_success, Certificate, SearchPolicy};
use crate::tensor::{operator_matrix, permute_legs, solution_space};

/// A colinear `t: H → A` with its two-sided convolution inverse `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleftingDatum {
    pub t: Matrix,
    pub u: Matrix,
    pub normalized: bool,
}

impl CleftingDatum {
    /// Checks colinearity and solves for the convolution inverse.
    pub fn new(ca: &ComoduleAlgebra, t: Matrix) -> Result<CleftingDatum> {
        if !is_member(ca, Class::T, Variant::Plain, &t) {
            return Err(Error::MembershipViolation("t is not H-colinear".into()));
        }
        let u = convolution_inverse(ca, Variant::Plain, &t)?;
        let normalized = t.mul_vec(ca.hopf().unit()) == *ca.algebra().unit();
        Ok(CleftingDatum { t, u, normalized })
    }

    /// `t′ = u(1)t`, `u′ = u·t(1)`, so that `t′(1) = 1`.
    pub fn normalize(&self, ca: &ComoduleAlgebra) -> CleftingDatum {
        let a = ca.algebra();
        let one = ca.hopf().unit();
        let t1 = self.t.mul_vec(one);
        let u1 = self.u.mul_vec(one);
        CleftingDatum {
            t: a.left_mult(&u1).mul(&self.t),
            u: a.right_mult(&t1).mul(&self.u),
            normalized: true,
        }
    }

    pub fn verify(&self, ca: &ComoduleAlgebra) -> Vec<Check> {
        let unit = unit_map(ca);
        let mut checks = vec![
            Check::from_bool(
                "t is H-colinear",
                is_member(ca, Class::T, Variant::Plain, &self.t),
                "ρ∘t = (t⊗H)∘Δ",
            ),
            Check::equal("t*u = ηε", &convolve(ca, Variant::Plain, &self.t, &self.u), &unit),
            Check::equal("u*t = ηε", &convolve(ca, Variant::Plain, &self.u, &self.t), &unit),
        ];
        if self.normalized {
            checks.push(Check::from_bool(
                "t(1) = 1",
                self.t.mul_vec(ca.hopf().unit()) == *ca.algebra().unit(),
                "normalized",
            ));
        }
        checks
    }
}

/// Outcome of [`find_cleft`].
#[derive(Debug, Clone)]
pub struct CleftSearch {
    pub datum: Option<CleftingDatum>,
    pub certificate: Certificate,
    pub hom_dim: usize,
}

impl CleftSearch {
    pub fn status(&self) -> Status {
        match (&self.datum, self.certificate.exhaustive) {
            (Some(_), _) => Status::Pass,
            (None, true) => Status::Fail,
            (None, false) => Status::Inconclusive,
        }
    }

    pub fn describe(&self) -> String {
        match &self.datum {
            Some(_) => format!("clefting map found after {}", self.certificate.describe()),
            None => format!(
                "no convolution invertible colinear map in {}-dimensional Hom^H(H,A), {}",
                self.hom_dim,
                self.certificate.describe()
            ),
        }
    }
}

/// Searches `Hom^H(H,A)` for a convolution invertible element and normalizes it.
pub fn find_cleft(ca: &ComoduleAlgebra, policy: SearchPolicy) -> CleftSearch {
    let space = HomSpace::compute(ca, Class::T, Variant::Plain);
    let (found, certificate) = first_success(ca.field(), space.dim(), policy, |c| {
        let t = space.element(c);
        convolution_inverse(ca, Variant::Plain, &t).ok().map(|u| CleftingDatum {
            t,
            u,
            normalized: false,
        })
    });
    CleftSearch {
        datum: found.map(|d| d.normalize(ca)),
        certificate,
        hom_dim: space.dim(),
    }
}

/// The conditions making `B⊗H` with the twisted product an associative unital algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `h·(bc) = (h_(1)·b)(h_(2)·c)`.
    Measuring,
    /// `h·1 = ε(h)1`.
    MeasuringUnit,
    /// `1·b = b`.
    TwistedUnit,
    /// `h·(k·b) = σ(h_(1)⊗k_(1))((h_(2)k_(2))·b)σ̄(h_(3)⊗k_(3))`.
    TwistedModule,
    /// `σ(h⊗1) = σ(1⊗h) = ε(h)1`.
    CocycleNormalization,
    /// `(h_(1)·σ(k_(1)⊗l_(1)))σ(h_(2)⊗k_(2)l_(2)) = σ(h_(1)⊗k_(1))σ(h_(2)k_(2)⊗l)`.
    Cocycle,
    /// `σ̄` is a two-sided convolution inverse of `σ`.
    CocycleInverse,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::Measuring,
        Condition::MeasuringUnit,
        Condition::TwistedUnit,
        Condition::TwistedModule,
        Condition::CocycleNormalization,
        Condition::Cocycle,
        Condition::CocycleInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Measuring => "measuring",
            Condition::MeasuringUnit => "measuring unit",
            Condition::TwistedUnit => "twisted module unit",
            Condition::TwistedModule => "twisted module",
            Condition::CocycleNormalization => "cocycle normalization",
            Condition::Cocycle => "cocycle",
            Condition::CocycleInverse => "cocycle inverse",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A measuring `H⊗B → B` and a cocycle `H⊗H → B` with its convolution inverse.
///
/// `action` is `nB × nH·nB` (column `h·nB + b` holds `e_h·e_b`); `cocycle` and
/// `cocycle_inv` are `nB × nH²`.
#[derive(Debug, Clone)]
pub struct CrossedData {
    hopf: HopfAlgebra,
    base: Algebra,
    action: Matrix,
    cocycle: Matrix,
    cocycle_inv: Matrix,
}

impl CrossedData {
    /// Shape checks only; the algebraic conditions are checked by [`CrossedData::violations`].
    /// A missing `cocycle_inv` is solved for.
    pub fn new(
        hopf: HopfAlgebra,
        base: Algebra,
        action: Matrix,
        cocycle: Matrix,
        cocycle_inv: Option<Matrix>,
    ) -> Result<CrossedData> {
        let (nh, nb) = (hopf.dim(), base.dim());
        if (action.rows(), action.cols()) != (nb, nh * nb) {
            return Err(Error::DimensionMismatch(format!(
                "action must be {nb}x{}, got {}x{}",
                nh * nb,
                action.rows(),
                action.cols()
            )));
        }
        if (cocycle.rows(), cocycle.cols()) != (nb, nh * nh) {
            return Err(Error::DimensionMismatch(format!(
                "cocycle must be {nb}x{}, got {}x{}",
                nh * nh,
                cocycle.rows(),
                cocycle.cols()
            )));
        }
        let cocycle_inv = match cocycle_inv {
            Some(m) => {
                if (m.rows(), m.cols()) != (nb, nh * nh) {
                    return Err(Error::DimensionMismatch("cocycle inverse has the wrong shape".into()));
                }
                m
            }
            None => pair_convolution_inverse(&hopf, &base, &cocycle).map_err(|_| Error::InvalidCrossedData {
                conditions: vec![Condition::CocycleInverse.name().into()],
                detail: "σ has no convolution inverse".into(),
            })?,
        };
        Ok(CrossedData {
            hopf,
            base,
            action,
            cocycle,
            cocycle_inv,
        })
    }

    /// `σ(h⊗k) = ε(h)ε(k)1`.
    pub fn trivial_cocycle(hopf: &HopfAlgebra, base: &Algebra) -> Matrix {
        let one = Matrix::column_vector(base.field(), base.unit().clone());
        one.mul(&hopf.counit_row().kron(&hopf.counit_row()))
    }

    /// `h·b = ε(h)b`.
    pub fn trivial_action(hopf: &HopfAlgebra, base: &Algebra) -> Matrix {
        hopf.counit_row().kron(&Matrix::identity(base.field(), base.dim()))
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn cocycle(&self) -> &Matrix {
        &self.cocycle
    }

    pub fn cocycle_inv(&self) -> &Matrix {
        &self.cocycle_inv
    }

    pub fn with_cocycle(&self, cocycle: Matrix, cocycle_inv: Option<Matrix>) -> Result<CrossedData> {
        CrossedData::new(self.hopf.clone(), self.base.clone(), self.action.clone(), cocycle, cocycle_inv)
    }

    /// `h·b` for vectors `h ∈ H`, `b ∈ B`.
    pub fn act(&self, h: &[Scalar], b: &[Scalar]) -> Vector {
        self.action.mul_vec(&kron_vec(h, b))
    }

    pub fn sigma(&self, h: &[Scalar], k: &[Scalar]) -> Vector {
        self.cocycle.mul_vec(&kron_vec(h, k))
    }

    pub fn sigma_bar(&self, h: &[Scalar], k: &[Scalar]) -> Vector {
        self.cocycle_inv.mul_vec(&kron_vec(h, k))
    }

    fn e(&self, i: usize) -> Vector {
        self.hopf.basis(i)
    }

    fn b(&self, i: usize) -> Vector {
        self.base.basis(i)
    }

    /// Every violated condition with the first failing basis indices.
    pub fn violations(&self) -> Vec<(Condition, Vec<usize>)> {
        Condition::ALL
            .iter()
            .filter_map(|&c| self.first_violation(c).map(|idx| (c, idx)))
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            return Ok(());
        }
        Err(Error::InvalidCrossedData {
            conditions: v.iter().map(|(c, _)| c.name().to_string()).collect(),
            detail: v
                .iter()
                .map(|(c, idx)| format!("{c} at {idx:?}"))
                .collect::<Vec<_>>()
                .join("; "),
        })
    }

    fn first_violation(&self, which: Condition) -> Option<Vec<usize>> {
        let (nh, nb) = (self.hopf.dim(), self.base.dim());
        let field = self.base.field();
        let h = &self.hopf;
        let bmul = |x: &[Scalar], y: &[Scalar]| self.base.mul(x, y);
        match which {
            Condition::Measuring => {
                for i in 0..nh {
                    for b in 0..nb {
                        for c in 0..nb {
                            let lhs = self.act(&self.e(i), &bmul(&self.b(b), &self.b(c)));
                            let mut rhs = vec![field.zero(); nb];
                            for (coef, idx) in h.sweedler(&self.e(i), 2) {
                                let term = bmul(&self.act(&self.e(idx[0]), &self.b(b)), &self.act(&self.e(idx[1]), &self.b(c)));
                                rhs = vec_add(&rhs, &vec_scale(&coef, &term));
                            }
                            if lhs != rhs {
                                return Some(vec![i, b, c]);
                            }
                        }
                    }
                }
                None
            }
            Condition::MeasuringUnit => (0..nh).find_map(|i| {
                let lhs = self.act(&self.e(i), self.base.unit());
                (lhs != vec_scale(&h.counit()[i], self.base.unit())).then(|| vec![i])
            }),
            Condition::TwistedUnit => (0..nb).find_map(|b| (self.act(h.unit(), &self.b(b)) != self.b(b)).then(|| vec![b])),
            Condition::TwistedModule => {
                for i in 0..nh {
                    for k in 0..nh {
                        let ti = h.sweedler(&self.e(i), 3);
                        let tk = h.sweedler(&self.e(k), 3);
                        for b in 0..nb {
                            let lhs = self.act(&self.e(i), &self.act(&self.e(k), &self.b(b)));
                            let mut rhs = vec![field.zero(); nb];
                            for (ci, x) in &ti {
                                for (ck, y) in &tk {
                                    let hk = h.mul(&self.e(x[1]), &self.e(y[1]));
                                    let s = self.sigma(&self.e(x[0]), &self.e(y[0]));
                                    let sb = self.sigma_bar(&self.e(x[2]), &self.e(y[2]));
                                    let term = bmul(&bmul(&s, &self.act(&hk, &self.b(b))), &sb);
                                    rhs = vec_add(&rhs, &vec_scale(&(ci * ck), &term));
                                }
                            }
                            if lhs != rhs {
                                return Some(vec![i, k, b]);
                            }
                        }
                    }
                }
                None
            }
            Condition::CocycleNormalization => (0..nh).find_map(|i| {
                let expect = vec_scale(&h.counit()[i], self.base.unit());
                (self.sigma(&self.e(i), h.unit()) != expect || self.sigma(h.unit(), &self.e(i)) != expect)
                    .then(|| vec![i])
            }),
            Condition::Cocycle => {
                for i in 0..nh {
                    let ti = h.sweedler(&self.e(i), 2);
                    for k in 0..nh {
                        let tk = h.sweedler(&self.e(k), 2);
                        for l in 0..nh {
                            let tl = h.sweedler(&self.e(l), 2);
                            let mut lhs = vec![field.zero(); nb];
                            for (ci, x) in &ti {
                                for (ck, y) in &tk {
                                    for (cl, z) in &tl {
                                        let inner = self.act(&self.e(x[0]), &self.sigma(&self.e(y[0]), &self.e(z[0])));
                                        let kl = h.mul(&self.e(y[1]), &self.e(z[1]));
                                        let term = bmul(&inner, &self.sigma(&self.e(x[1]), &kl));
                                        lhs = vec_add(&lhs, &vec_scale(&(&(ci * ck) * cl), &term));
                                    }
                                }
                            }
                            let mut rhs = vec![field.zero(); nb];
                            for (ci, x) in &ti {
                                for (ck, y) in &tk {
                                    let hk = h.mul(&self.e(x[1]), &self.e(y[1]));
                                    let term = bmul(&self.sigma(&self.e(x[0]), &self.e(y[0])), &self.sigma(&hk, &self.e(l)));
                                    rhs = vec_add(&rhs, &vec_scale(&(ci * ck), &term));
                                }
                            }
                            if lhs != rhs {
                                return Some(vec![i, k, l]);
                            }
                        }
                    }
                }
                None
            }
            Condition::CocycleInverse => {
                let unit = pair_unit(h, &self.base);
                let a = pair_convolve(h, &self.base, &self.cocycle, &self.cocycle_inv);
                let b = pair_convolve(h, &self.base, &self.cocycle_inv, &self.cocycle);
                if a != unit {
                    a.first_difference(&unit).map(|(r, c)| vec![r, c])
                } else if b != unit {
                    b.first_difference(&unit).map(|(r, c)| vec![r, c])
                } else {
                    None
                }
            }
        }
    }

    /// Structure constants of `(b#h)(c#k) = b(h_(1)·c)σ(h_(2)⊗k_(1))#h_(3)k_(2)`,
    /// basis `e_b#e_h` at index `b·nH + h`.
    pub fn multiplication(&self) -> Matrix {
        let (nh, nb) = (self.hopf.dim(), self.base.dim());
        let n = nb * nh;
        let field = self.base.field();
        let h = &self.hopf;
        let mut mul = Matrix::zeros(field, n, n * n);
        for i in 0..nh {
            let th = h.sweedler(&self.e(i), 3);
            for k in 0..nh {
                let tk = h.sweedler(&self.e(k), 2);
                for b in 0..nb {
                    for c in 0..nb {
                        let mut acc = vec![field.zero(); n];
                        for (ch, x) in &th {
                            let bc = self.base.mul(&self.b(b), &self.act(&self.e(x[0]), &self.b(c)));
                            for (ck, y) in &tk {
                                let left = self.base.mul(&bc, &self.sigma(&self.e(x[1]), &self.e(y[0])));
                                let right = h.mul(&self.e(x[2]), &self.e(y[1]));
                                acc = vec_add(&acc, &vec_scale(&(ch * ck), &kron_vec(&left, &right)));
                            }
                        }
                        mul.set_col((b * nh + i) * n + (c * nh + k), &acc);
                    }
                }
            }
        }
        mul
    }

    /// The crossed product as a comodule algebra with coaction `B⊗Δ`; the data
    /// are validated first.
    pub fn build(&self) -> Result<ComoduleAlgebra> {
        self.validate()?;
        let (nh, nb) = (self.hopf.dim(), self.base.dim());
        let field = self.base.field();
        let mut labels = Vec::with_capacity(nb * nh);
        for b in self.base.labels() {
            for h in self.hopf.labels() {
                labels.push(format!("{b}#{h}"));
            }
        }
        let unit = kron_vec(self.base.unit(), self.hopf.unit());
        let algebra = Algebra::new(field, labels, self.multiplication(), unit)?;
        let coaction = Matrix::identity(field, nb).kron(self.hopf.comul_matrix());
        ComoduleAlgebra::new(self.hopf.clone(), algebra, coaction)
    }

    /// `can(a⊗h⊗k) = aσ(h_(1)⊗k_(1))⊗h_(2)k_(2)⊗k_(3)` on `B⊗H⊗H ≅ A⊗_B A`.
    pub fn canonical_map(&self) -> Matrix {
        let (nh, nb) = (self.hopf.dim(), self.base.dim());
        let h = &self.hopf;
        let field = self.base.field();
        let mut cols = Vec::with_capacity(nb * nh * nh);
        for a in 0..nb {
            for i in 0..nh {
                for k in 0..nh {
                    let mut acc = vec![field.zero(); nb * nh * nh];
                    for (ci, x) in h.sweedler(&self.e(i), 2) {
                        for (ck, y) in h.sweedler(&self.e(k), 3) {
                            let b = self.base.mul(&self.b(a), &self.sigma(&self.e(x[0]), &self.e(y[0])));
                            let hk = h.mul(&self.e(x[1]), &self.e(y[1]));
                            let v = kron_vec(&kron_vec(&b, &hk), &self.e(y[2]));
                            acc = vec_add(&acc, &vec_scale(&(&ci * &ck), &v));
                        }
                    }
                    cols.push(acc);
                }
            }
        }
        Matrix::from_columns(field, nb * nh * nh, &cols)
    }

    /// `can⁻¹(a⊗h⊗k) = aσ̄(h_(1)S(k_(2))⊗k_(3))⊗h_(2)S(k_(1))⊗k_(4)`.
    pub fn canonical_inverse(&self) -> Matrix {
        let (nh, nb) = (self.hopf.dim(), self.base.dim());
        let h = &self.hopf;
        let field = self.base.field();
        let mut cols = Vec::with_capacity(nb * nh * nh);
        for a in 0..nb {
            for i in 0..nh {
                for k in 0..nh {
                    let mut acc = vec![field.zero(); nb * nh * nh];
                    for (ci, x) in h.sweedler(&self.e(i), 2) {
                        for (ck, y) in h.sweedler(&self.e(k), 4) {
                            let left = h.mul(&self.e(x[0]), &h.antipode_of(&self.e(y[1])));
                            let b = self.base.mul(&self.b(a), &self.sigma_bar(&left, &self.e(y[2])));
                            let mid = h.mul(&self.e(x[1]), &h.antipode_of(&self.e(y[0])));
                            let v = kron_vec(&kron_vec(&b, &mid), &self.e(y[3]));
                            acc = vec_add(&acc, &vec_scale(&(&ci * &ck), &v));
                        }
                    }
                    cols.push(acc);
                }
            }
        }
        Matrix::from_columns(field, nb * nh * nh, &cols)
    }

    /// `t(h) = 1#h`.
    pub fn section(&self) -> Matrix {
        let field = self.base.field();
        let one = Matrix::column_vector(field, self.base.unit().clone());
        one.kron(&Matrix::identity(field, self.hopf.dim()))
    }

    /// `u(h) = σ̄(S(h_(2))⊗h_(3))#S(h_(1))`.
    pub fn section_inverse(&self) -> Matrix {
        let (nh, nb) = (self.hopf.dim(), self.base.dim());
        let h = &self.hopf;
        let field = self.base.field();
        let cols: Vec<Vector> = (0..nh)
            .map(|i| {
                let mut acc = vec![field.zero(); nb * nh];
                for (c, x) in h.sweedler(&self.e(i), 3) {
                    let b = self.sigma_bar(&h.antipode_of(&self.e(x[1])), &self.e(x[2]));
                    acc = vec_add(&acc, &vec_scale(&c, &kron_vec(&b, &h.antipode_of(&self.e(x[0])))));
                }
                acc
            })
            .collect();
        Matrix::from_columns(field, nb * nh, &cols)
    }

    /// `Σ l_i(h)⊗r_i(h) = (σ̄(S(h_(2))⊗h_(3))#S(h_(1)))⊗(1#h_(4))`, in `A⊗A`.
    pub fn translation_representatives(&self) -> Matrix {
        let (nh, nb) = (self.hopf.dim(), self.base.dim());
        let h = &self.hopf;
        let field = self.base.field();
        let n = nb * nh;
        let cols: Vec<Vector> = (0..nh)
            .map(|i| {
                let mut acc = vec![field.zero(); n * n];
                for (c, x) in h.sweedler(&self.e(i), 4) {
                    let b = self.sigma_bar(&h.antipode_of(&self.e(x[1])), &self.e(x[2]));
                    let l = kron_vec(&b, &h.antipode_of(&self.e(x[0])));
                    let r = kron_vec(self.base.unit(), &self.e(x[3]));
                    acc = vec_add(&acc, &vec_scale(&c, &kron_vec(&l, &r)));
                }
                acc
            })
            .collect();
        Matrix::from_columns(field, n * n, &cols)
    }
}

/// Coalgebra structure of `H⊗H`: `Δ(h⊗k) = (h_(1)⊗k_(1))⊗(h_(2)⊗k_(2))`.
fn pair_comul(h: &HopfAlgebra) -> Matrix {
    let n = h.dim();
    let both = h.comul_matrix().kron(h.comul_matrix());
    permute_legs(h.field(), &[n, n, n, n], &[0, 2, 1, 3]).mul(&both)
}

fn pair_unit(h: &HopfAlgebra, b: &Algebra) -> Matrix {
    CrossedData::trivial_cocycle(h, b)
}

/// Convolution of maps `H⊗H → B`.
pub fn pair_convolve(h: &HopfAlgebra, b: &Algebra, f: &Matrix, g: &Matrix) -> Matrix {
    b.mul_matrix().mul(&f.kron(g)).mul(&pair_comul(h))
}

fn pair_convolution_inverse(h: &HopfAlgebra, b: &Algebra, f: &Matrix) -> Result<Matrix> {
    let field = b.field();
    let (nb, n2) = (b.dim(), h.dim() * h.dim());
    let comul = pair_comul(h);
    let op = operator_matrix(field, nb, n2, |g| b.mul_matrix().mul(&f.kron(g)).mul(&comul));
    let target = pair_unit(h, b);
    let sol = op.solve(&target.to_vector()).map_err(|_| Error::NotInvertible)?;
    let g = Matrix::from_vector(field, nb, n2, &sol.particular);
    if pair_convolve(h, b, &g, f) != target {
        return Err(Error::NotInvertible);
    }
    Ok(g)
}

/// `ω(h⊗b) = t(h_(1))bu(h_(2))`, `σ(h⊗k) = t(h_(1))t(k_(1))u(h_(2)k_(2))` and
/// `σ̄(h⊗k) = t(h_(1)k_(1))u(k_(2))u(h_(2))`, restricted to `B`.
pub fn extract_crossed_data(ca: &ComoduleAlgebra, datum: &CleftingDatum) -> Result<CrossedData> {
    if !datum.normalized {
        return Err(Error::InternalInvariant("clefting datum is not normalized".into()));
    }
    let h = ca.hopf();
    let a = ca.algebra();
    let binc = ca.coinvariants();
    let (nh, nb) = (h.dim(), binc.dim());
    let field = ca.field();
    let t = |x: &[Scalar]| datum.t.mul_vec(x);
    let u = |x: &[Scalar]| datum.u.mul_vec(x);
    let restrict = |v: Vector, what: &str, idx: Vec<usize>| {
        binc.restrict(&v)
            .ok_or_else(|| Error::InternalInvariant(format!("{what} at {idx:?} is not coinvariant")))
    };
    let mut action = Vec::with_capacity(nh * nb);
    for i in 0..nh {
        let terms = h.sweedler(&h.basis(i), 2);
        for b in 0..nb {
            let mut acc = vec![field.zero(); a.dim()];
            for (c, x) in &terms {
                let v = a.mul(&a.mul(&t(&h.basis(x[0])), &binc.basis_image(b)), &u(&h.basis(x[1])));
                acc = vec_add(&acc, &vec_scale(c, &v));
            }
            action.push(restrict(acc, "ω", vec![i, b])?);
        }
    }
    let mut sigma = Vec::with_capacity(nh * nh);
    let mut sigma_bar = Vec::with_capacity(nh * nh);
    for i in 0..nh {
        let ti = h.sweedler(&h.basis(i), 2);
        for k in 0..nh {
            let tk = h.sweedler(&h.basis(k), 2);
            let mut s = vec![field.zero(); a.dim()];
            let mut sb = vec![field.zero(); a.dim()];
            for (ci, x) in &ti {
                for (ck, y) in &tk {
                    let c = ci * ck;
                    let hk2 = h.mul(&h.basis(x[1]), &h.basis(y[1]));
                    let v = a.mul(&a.mul(&t(&h.basis(x[0])), &t(&h.basis(y[0]))), &u(&hk2));
                    s = vec_add(&s, &vec_scale(&c, &v));
                    let hk1 = h.mul(&h.basis(x[0]), &h.basis(y[0]));
                    let w = a.mul(&a.mul(&t(&hk1), &u(&h.basis(y[1]))), &u(&h.basis(x[1])));
                    sb = vec_add(&sb, &vec_scale(&c, &w));
                }
            }
            sigma.push(restrict(s, "σ", vec![i, k])?);
            sigma_bar.push(restrict(sb, "σ̄", vec![i, k])?);
        }
    }
    let data = CrossedData::new(
        h.clone(),
        binc.algebra().clone(),
        Matrix::from_columns(field, nb, &action),
        Matrix::from_columns(field, nb, &sigma),
        Some(Matrix::from_columns(field, nb, &sigma_bar)),
    )?;
    data.validate()?;
    Ok(data)
}

/// `ψ(b⊗h) = bt(h)` and `φ(a) = a_[0]u(a_[1])⊗a_[2]`, between `B⊗H` and `A`.
pub fn comparison_maps(ca: &ComoduleAlgebra, datum: &CleftingDatum) -> Result<(Matrix, Matrix)> {
    let field = ca.field();
    let (na, nh) = (ca.dim(), ca.hopf().dim());
    let ih = Matrix::identity(field, nh);
    let ia = Matrix::identity(field, na);
    let incl = ca.coinvariants().inclusion();
    let mu = ca.algebra().mul_matrix();
    let psi = mu.mul(&incl.kron(&datum.t));
    let rho2 = ca.coaction().kron(&ih).mul(ca.coaction());
    let raw = mu.mul(&ia.kron(&datum.u)).kron(&ih).mul(&rho2);
    let phi = ca.coinvariants().coordinates().left_inverse().kron(&ih).mul(&raw);
    if incl.kron(&ih).mul(&phi) != raw {
        return Err(Error::InternalInvariant("a_[0]u(a_[1]) is not coinvariant".into()));
    }
    Ok((psi, phi))
}

/// Identification `B⊗H⊗H → A⊗_B A`, `b⊗h⊗k ↦ (b#h)⊗(1#k)`, for a crossed product `A`.
fn crossed_square_identification(data: &CrossedData, galois: &GaloisExtension) -> Matrix {
    let (nh, nb) = (data.hopf.dim(), data.base.dim());
    let field = data.base.field();
    let n = nb * nh;
    let mut cols = Vec::with_capacity(n * nh);
    for b in 0..nb {
        for h in 0..nh {
            for k in 0..nh {
                let left = unit_vector(field, n, b * nh + h);
                let right = kron_vec(data.base.unit(), &data.hopf.basis(k));
                cols.push(galois.projection().mul_vec(&kron_vec(&left, &right)));
            }
        }
    }
    Matrix::from_columns(field, galois.projection().rows(), &cols)
}

/// Closed formulas for `can⁻¹`, `t`, `u` and the translation map of a crossed
/// product, compared with the ones computed by linear algebra.
pub fn crossed_closed_forms(data: &CrossedData) -> Result<Vec<Check>> {
    let cp = data.build()?;
    let galois = GaloisExtension::new(&cp)?;
    let ident = crossed_square_identification(data, &galois);
    let can = data.canonical_map();
    let inv = data.canonical_inverse();
    let t = data.section();
    let u = data.section_inverse();
    let unit = unit_map(&cp);
    let mut checks = vec![
        Check::from_bool(
            "B⊗H⊗H identifies with A⊗_B A",
            ident.is_invertible(),
            format!("{}x{}", ident.rows(), ident.cols()),
        ),
        Check::equal("closed can agrees with the computed one", &galois.can().mul(&ident), &can),
        Check::equal("closed can⁻¹ agrees with the computed one", &ident.mul(&inv), galois.can_inv()),
        Check::from_bool(
            "closed can⁻¹ is a two-sided inverse",
            inv.mul(&can).is_identity() && can.mul(&inv).is_identity(),
            "can∘can⁻¹ and can⁻¹∘can are identities",
        ),
        Check::from_bool(
            "t(h) = 1#h is colinear",
            is_member(&cp, Class::T, Variant::Plain, &t),
            "ρ∘t = (t⊗H)∘Δ",
        ),
        Check::equal("t*u = ηε", &convolve(&cp, Variant::Plain, &t, &u), &unit),
        Check::equal("u*t = ηε", &convolve(&cp, Variant::Plain, &u, &t), &unit),
    ];
    match convolution_inverse(&cp, Variant::Plain, &t) {
        Ok(solved) => checks.push(Check::equal("closed u agrees with the solved inverse", &u, &solved)),
        Err(e) => checks.push(Check::fail("closed u agrees with the solved inverse", e.to_string())),
    }
    checks.push(Check::equal(
        "closed translation map agrees with the computed one",
        &galois.projection().mul(&data.translation_representatives()),
        galois.gamma(),
    ));
    Ok(checks)
}

/// Statuses of the three implications of the structure theorem.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub cleft: CleftSearch,
    pub checks: Vec<Check>,
}

fn leg(name: &str, checks: &[Check]) -> Check {
    match checks.iter().find(|c| !c.passed()) {
        None => Check::pass(name, format!("{} checks pass", checks.len())),
        Some(c) => Check::new(name, c.status, format!("{}: {}", c.name, c.detail)),
    }
}

/// Cleft ⇒ crossed product ⇒ Galois with normal basis ⇒ cleft, each leg run on its own.
pub fn structure_theorem_check(ca: &ComoduleAlgebra, policy: SearchPolicy) -> StructureReport {
    let search = find_cleft(ca, policy);
    let mut checks = Vec::new();

    let (leg12, built) = match &search.datum {
        None => (vec![Check::new("clefting map", search.status(), search.describe())], None),
        Some(d) => {
            let mut c = d.verify(ca);
            let built = cleft_to_crossed(ca, d, &mut c);
            (c, built)
        }
    };
    checks.push(leg("cleft implies crossed product", &leg12));

    let leg23 = match &built {
        None => vec![Check::fail("crossed product", "no crossed product was built")],
        Some((data, cp)) => crossed_to_galois(data, cp),
    };
    checks.push(leg("crossed product implies Galois with normal basis", &leg23));

    let leg31 = galois_to_cleft(ca, policy);
    checks.push(leg("Galois with normal basis implies cleft", &leg31));

    let statuses: Vec<Status> = checks.iter().map(|c| c.status).collect();
    checks.push(Check::from_bool(
        "the three statements agree",
        statuses.windows(2).all(|w| w[0] == w[1]),
        format!("{statuses:?}"),
    ));
    checks.extend(leg12);
    checks.extend(leg23);
    checks.extend(leg31);
    StructureReport { cleft: search, checks }
}

fn cleft_to_crossed(ca: &ComoduleAlgebra, d: &CleftingDatum, checks: &mut Vec<Check>) -> Option<(CrossedData, ComoduleAlgebra)> {
    let data = match extract_crossed_data(ca, d) {
        Ok(x) => x,
        Err(e) => {
            checks.push(Check::fail("crossed data", e.to_string()));
            return None;
        }
    };
    checks.push(Check::pass("crossed data", "measuring, twisted module and cocycle conditions hold"));
    let cp = match data.build() {
        Ok(x) => x,
        Err(e) => {
            checks.push(Check::fail("crossed product", e.to_string()));
            return None;
        }
    };
    let (psi, phi) = match comparison_maps(ca, d) {
        Ok(x) => x,
        Err(e) => {
            checks.push(Check::fail("comparison maps", e.to_string()));
            return None;
        }
    };
    let ih = Matrix::identity(ca.field(), ca.hopf().dim());
    let nb = data.base.dim();
    checks.push(Check::from_bool(
        "ψ and φ are inverse",
        psi.mul(&phi).is_identity() && phi.mul(&psi).is_identity(),
        "ψ∘φ and φ∘ψ are identities",
    ));
    let transported = phi.mul(ca.algebra().mul_matrix()).mul(&psi.kron(&psi));
    checks.push(Check::equal(
        "transported multiplication is the crossed product",
        &transported,
        cp.algebra().mul_matrix(),
    ));
    checks.push(Check::equal(
        "ψ is H-colinear",
        &ca.coaction().mul(&psi),
        &psi.kron(&ih).mul(&Matrix::identity(ca.field(), nb).kron(ca.hopf().comul_matrix())),
    ));
    checks.push(Check::from_bool(
        "ψ preserves the unit",
        psi.mul_vec(cp.algebra().unit()) == *ca.algebra().unit(),
        "ψ(1#1) = 1",
    ));
    Some((data, cp))
}

fn crossed_to_galois(data: &CrossedData, cp: &ComoduleAlgebra) -> Vec<Check> {
    let mut checks = match crossed_closed_forms(data) {
        Ok(c) => c,
        Err(e) => return vec![Check::fail("crossed product is Galois", e.to_string())],
    };
    let (nb, nh) = (data.base.dim(), data.hopf.dim());
    checks.push(Check::from_bool(
        "coinvariants are B#1",
        cp.coinvariants().dim() == nb
            && (0..nb).all(|b| cp.coinvariants().restrict(&kron_vec(&data.base.basis(b), data.hopf.unit())).is_some()),
        format!("dim {} vs {}", cp.coinvariants().dim(), nb),
    ));
    let left_linear = (0..nb).all(|b| {
        let bb = kron_vec(&data.base.basis(b), data.hopf.unit());
        cp.algebra().left_mult(&bb) == data.base.left_mult(&data.base.basis(b)).kron(&Matrix::identity(data.base.field(), nh))
    });
    checks.push(Check::from_bool(
        "B⊗H → B#_σH is left B-linear",
        left_linear,
        "(b#1)(c#h) = bc#h",
    ));
    checks
}

/// Left `B`-linear colinear maps `B⊗H → A`.
pub fn normal_basis_maps(ca: &ComoduleAlgebra) -> Vec<Matrix> {
    let field = ca.field();
    let b = ca.coinvariants();
    let (na, nb, nh) = (ca.dim(), b.dim(), ca.hopf().dim());
    let ih = Matrix::identity(field, nh);
    let ib = Matrix::identity(field, nb);
    let lefts: Vec<(Matrix, Matrix)> = (0..nb)
        .map(|k| {
            (
                b.algebra().left_mult(&b.algebra().basis(k)).kron(&ih),
                ca.algebra().left_mult(&b.basis_image(k)),
            )
        })
        .collect();
    let coact = ib.kron(ca.hopf().comul_matrix());
    solution_space(field, na, nb * nh, |x| {
        let mut blocks: Vec<Matrix> = lefts.iter().map(|(lb, la)| x.mul(lb).sub(&la.mul(x))).collect();
        blocks.push(ca.coaction().mul(x).sub(&x.kron(&ih).mul(&coact)));
        Matrix::vstack_all(field, nb * nh, &blocks)
    })
}

fn galois_to_cleft(ca: &ComoduleAlgebra, policy: SearchPolicy) -> Vec<Check> {
    let mut checks = Vec::new();
    match GaloisExtension::new(ca) {
        Ok(_) => checks.push(Check::pass("A is Galois", "can is bijective")),
        Err(e) => {
            checks.push(Check::fail("A is Galois", e.to_string()));
            return checks;
        }
    }
    let maps = normal_basis_maps(ca);
    let field = ca.field();
    let nb = ca.coinvariants().dim();
    let (found, cert) = first_success(field, maps.len(), policy, |c| {
        let mut x = Matrix::zeros(field, ca.dim(), nb * ca.hopf().dim());
        for (ci, m) in c.iter().zip(&maps) {
            x.axpy(ci, m);
        }
        x.is_invertible().then_some(x)
    });
    let Some(psi) = found else {
        let status = if cert.exhaustive { Status::Fail } else { Status::Inconclusive };
        checks.push(Check::new(
            "A ≅ B⊗H as left B-module and comodule",
            status,
            format!("no invertible map among {} candidates dimensions, {}", maps.len(), cert.describe()),
        ));
        return checks;
    };
    checks.push(Check::pass(
        "A ≅ B⊗H as left B-module and comodule",
        format!("invertible map found, {}", cert.describe()),
    ));
    let one_b = Matrix::column_vector(field, ca.coinvariants().algebra().unit().clone());
    let t = psi.mul(&one_b.kron(&Matrix::identity(field, ca.hopf().dim())));
    match CleftingDatum::new(ca, t) {
        Ok(d) => checks.extend(d.verify(ca).into_iter().map(|mut c| {
            c.name = format!("t(h) = ψ(1⊗h): {}", c.name);
            c
        })),
        Err(e) => checks.push(Check::fail("t(h) = ψ(1⊗h) is convolution invertible", e.to_string())),
    }
    checks
}

/// Outcome of the smash product test.
#[derive(Debug, Clone)]
pub struct SmashReport {
    pub algebra_map: Option<Matrix>,
    pub checks: Vec<Check>,
}

/// Looks for a colinear algebra map `t: H → A`; when one exists, checks that
/// `(t, t∘S)` has trivial cocycle and that `A` is the smash product.
pub fn smash_check(ca: &ComoduleAlgebra, cap: u64) -> SmashReport {
    let (maps, cert) = match crate::cohomology::colinear_algebra_maps(ca, cap) {
        Ok(x) => x,
        Err(e) => {
            return SmashReport {
                algebra_map: None,
                checks: vec![Check::new("colinear algebra map", Status::Inconclusive, e.to_string())],
            }
        }
    };
    let Some(t) = maps.first().cloned() else {
        let status = if cert.exhaustive { Status::Pass } else { Status::Inconclusive };
        return SmashReport {
            algebra_map: None,
            checks: vec![Check::new(
                "colinear algebra map",
                status,
                format!("none exists, A is not a smash product ({})", cert.describe()),
            )],
        };
    };
    let mut checks = vec![Check::pass(
        "colinear algebra map",
        format!("{} found ({})", maps.len(), cert.describe()),
    )];
    let u = t.mul(ca.hopf().antipode());
    let d = CleftingDatum {
        t: t.clone(),
        u,
        normalized: true,
    };
    checks.extend(d.verify(ca).into_iter().map(|mut c| {
        c.name = format!("(t, t∘S): {}", c.name);
        c
    }));
    match extract_crossed_data(ca, &d) {
        Ok(data) => {
            checks.push(Check::equal(
                "cocycle is trivial",
                data.cocycle(),
                &CrossedData::trivial_cocycle(&data.hopf, &data.base),
            ));
            let mut inner = Vec::new();
            cleft_to_crossed(ca, &d, &mut inner);
            checks.push(leg("A is isomorphic to the smash product", &inner));
        }
        Err(e) => checks.push(Check::fail("crossed data", e.to_string())),
    }
    SmashReport {
        algebra_map: Some(t),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hopf::cyclic_group_algebra;
    use crate::scalar::Field;

    fn all_pass(checks: &[Check]) {
        for c in checks {
            assert!(c.passed(), "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn regular_comodule_algebra_is_cleft_by_identity() {
        let ca = fixtures::kc2_regular(Field::Rationals);
        let id = Matrix::identity(ca.field(), 2);
        let d = CleftingDatum::new(&ca, id).unwrap();
        assert_eq!(&d.u, ca.hopf().antipode());
        all_pass(&d.verify(&ca));
        let data = extract_crossed_data(&ca, &d).unwrap();
        assert_eq!(data.cocycle(), &CrossedData::trivial_cocycle(data.hopf(), data.base()));
    }

    #[test]
    fn graded_m2_search_is_exhaustive_and_succeeds() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let s = find_cleft(&ca, SearchPolicy::default());
        let d = s.datum.expect("graded M_2 is cleft");
        assert!(d.normalized);
        all_pass(&d.verify(&ca));
        let data = extract_crossed_data(&ca, &d).unwrap();
        // g acts on the diagonal k×k by the flip
        let flip = data.act(&ca.hopf().basis(1), &data.base().basis(0));
        assert_eq!(flip, data.base().basis(1));
    }

    #[test]
    fn explicit_graded_m2_section() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let f = ca.field();
        let t = Matrix::from_i64(f, &[&[1, 0], &[0, 1], &[0, 1], &[1, 0]]);
        let d = CleftingDatum::new(&ca, t.clone()).unwrap();
        assert_eq!(d.u, t.mul(ca.hopf().antipode()));
    }

    #[test]
    fn trivial_coaction_is_not_cleft() {
        let ca = fixtures::trivial_kxk(Field::Prime(3));
        let s = find_cleft(&ca, SearchPolicy::default());
        assert!(s.datum.is_none());
        assert!(s.certificate.exhaustive);
        let r = structure_theorem_check(&ca, SearchPolicy::default());
        let agree = r.checks.iter().find(|c| c.name == "the three statements agree").unwrap();
        assert!(agree.passed(), "{}", agree.detail);
        assert_eq!(r.checks[0].status, Status::Fail);
    }

    #[test]
    fn structure_theorem_on_graded_m2() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        all_pass(&structure_theorem_check(&ca, SearchPolicy::default()).checks);
    }

    #[test]
    fn quadratic_extension_from_cocycle() {
        let f = Field::Rationals;
        let h = cyclic_group_algebra(f, 2);
        let b = Algebra::ground(f);
        let mut sigma = CrossedData::trivial_cocycle(&h, &b);
        sigma.set(0, 3, f.from_i64(-1));
        let data = CrossedData::new(h.clone(), b.clone(), CrossedData::trivial_action(&h, &b), sigma, None).unwrap();
        assert_eq!(data.cocycle_inv().get(0, 3), &f.from_i64(-1));
        let cp = data.build().unwrap();
        let x = cp.algebra().basis(1);
        assert_eq!(cp.algebra().mul(&x, &x), vec![f.from_i64(-1), f.zero()]);
        all_pass(&crossed_closed_forms(&data).unwrap());
        all_pass(&structure_theorem_check(&cp, SearchPolicy::default()).checks);
    }

    #[test]
    fn broken_cocycle_is_rejected_by_name() {
        let f = Field::Rationals;
        let h = cyclic_group_algebra(f, 4);
        let b = Algebra::ground(f);
        let mut sigma = CrossedData::trivial_cocycle(&h, &b);
        // σ(g⊗g) = 2 alone breaks the cocycle identity but nothing else
        sigma.set(0, 5, f.from_i64(2));
        let data = CrossedData::new(h, b.clone(), CrossedData::trivial_action(&cyclic_group_algebra(f, 4), &b), sigma, None).unwrap();
        let v: Vec<Condition> = data.violations().into_iter().map(|(c, _)| c).collect();
        assert_eq!(v, vec![Condition::Cocycle]);
        match data.build() {
            Err(Error::InvalidCrossedData { conditions, .. }) => assert_eq!(conditions, vec!["cocycle".to_string()]),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn smash_product_with_flip_is_m2() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let r = smash_check(&ca, 1_000_000);
        assert!(r.algebra_map.is_some());
        all_pass(&r.checks);
    }
}
