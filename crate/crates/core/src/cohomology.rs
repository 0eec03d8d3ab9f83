//! First Sweedler cohomology of a cocommutative `H` acting on a commutative `B`,
//! and the set `Ω_A` of colinear algebra maps `H → A` up to conjugation by units of `B`.
//!
//! Maps `H → B` are `nB × nH` matrices; convolution is `μ_B(f⊗g)Δ`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::cleft::CleftingDatum;
use crate::comodule::ComoduleAlgebra;
use crate::convcat::{convolution_inverse, convolve, is_member, Class, HomSpace, Variant};
use crate::error::{Error, Result};
use crate::hopf::{kron_vec, HopfAlgebra};
use crate::matrix::{vec_add, vec_scale, Matrix, Vector};
use crate::report::{Check, Status};
use crate::scalar::{Field, Scalar};
use crate::search::{all_coefficients, sample_coefficients, solve_quadratic_family, span_contains, AffineFamily, Certificate, SearchPolicy};
use crate::tensor::operator_matrix;

/// A left action `H⊗B → B`, `nB × nH·nB` with column `h·nB + b` holding `e_h·e_b`.
#[derive(Debug, Clone)]
pub struct ModuleAlgebraAction {
    hopf: HopfAlgebra,
    base: Algebra,
    action: Matrix,
}

impl ModuleAlgebraAction {
    pub fn new(hopf: HopfAlgebra, base: Algebra, action: Matrix) -> Result<ModuleAlgebraAction> {
        if (action.rows(), action.cols()) != (base.dim(), hopf.dim() * base.dim()) {
            return Err(Error::DimensionMismatch("action has the wrong shape".into()));
        }
        Ok(ModuleAlgebraAction { hopf, base, action })
    }

    /// `h·b = ε(h)b`.
    pub fn trivial(hopf: &HopfAlgebra, base: &Algebra) -> ModuleAlgebraAction {
        let action = hopf.counit_row().kron(&Matrix::identity(base.field(), base.dim()));
        ModuleAlgebraAction {
            hopf: hopf.clone(),
            base: base.clone(),
            action,
        }
    }

    /// `h·b = t(h_(1))bu(h_(2))` on the coinvariants.
    pub fn from_datum(ca: &ComoduleAlgebra, datum: &CleftingDatum) -> Result<ModuleAlgebraAction> {
        let h = ca.hopf();
        let a = ca.algebra();
        let b = ca.coinvariants();
        let field = ca.field();
        let mut cols = Vec::with_capacity(h.dim() * b.dim());
        for i in 0..h.dim() {
            let terms = h.sweedler(&h.basis(i), 2);
            for k in 0..b.dim() {
                let mut acc = vec![field.zero(); a.dim()];
                for (c, x) in &terms {
                    let v = a.mul(
                        &a.mul(&datum.t.mul_vec(&h.basis(x[0])), &b.basis_image(k)),
                        &datum.u.mul_vec(&h.basis(x[1])),
                    );
                    acc = vec_add(&acc, &vec_scale(c, &v));
                }
                let r = b
                    .restrict(&acc)
                    .ok_or_else(|| Error::InternalInvariant(format!("t(h_(1))bu(h_(2)) is not coinvariant at {:?}", (i, k))))?;
                cols.push(r);
            }
        }
        ModuleAlgebraAction::new(h.clone(), b.algebra().clone(), Matrix::from_columns(field, b.dim(), &cols))
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn matrix(&self) -> &Matrix {
        &self.action
    }

    pub fn act(&self, h: &[Scalar], b: &[Scalar]) -> Vector {
        self.action.mul_vec(&kron_vec(h, b))
    }

    /// `HypothesisViolated` unless `H` is cocommutative and `B` commutative.
    pub fn require_hypotheses(&self) -> Result<()> {
        require(&self.hopf, &self.base)
    }

    /// Unit, measuring and module axioms.
    pub fn check(&self) -> Vec<Check> {
        let (h, b) = (&self.hopf, &self.base);
        let (nh, nb) = (h.dim(), b.dim());
        let mut unit = true;
        let mut one = true;
        let mut measuring = true;
        let mut module = true;
        for x in 0..nb {
            unit &= self.act(h.unit(), &b.basis(x)) == b.basis(x);
        }
        for i in 0..nh {
            one &= self.act(&h.basis(i), b.unit()) == vec_scale(&h.counit()[i], b.unit());
            let terms = h.sweedler(&h.basis(i), 2);
            for x in 0..nb {
                for y in 0..nb {
                    let lhs = self.act(&h.basis(i), &b.mul(&b.basis(x), &b.basis(y)));
                    let mut rhs = vec![self.field().zero(); nb];
                    for (c, t) in &terms {
                        let v = b.mul(&self.act(&h.basis(t[0]), &b.basis(x)), &self.act(&h.basis(t[1]), &b.basis(y)));
                        rhs = vec_add(&rhs, &vec_scale(c, &v));
                    }
                    measuring &= lhs == rhs;
                }
                for k in 0..nh {
                    let lhs = self.act(&h.basis(i), &self.act(&h.basis(k), &b.basis(x)));
                    module &= lhs == self.act(&h.mul(&h.basis(i), &h.basis(k)), &b.basis(x));
                }
            }
        }
        vec![
            Check::from_bool("1·b = b", unit, "on every basis element"),
            Check::from_bool("h·1 = ε(h)1", one, "on every basis element"),
            Check::from_bool("h·(bc) = (h_(1)·b)(h_(2)·c)", measuring, "on every basis triple"),
            Check::from_bool("h·(k·b) = (hk)·b", module, "on every basis triple"),
        ]
    }

    pub fn convolve(&self, f: &Matrix, g: &Matrix) -> Matrix {
        self.base.mul_matrix().mul(&f.kron(g)).mul(self.hopf.comul_matrix())
    }

    pub fn convolution_unit(&self) -> Matrix {
        Matrix::column_vector(self.field(), self.base.unit().clone()).mul(&self.hopf.counit_row())
    }

    pub fn convolution_inverse(&self, f: &Matrix) -> Option<Matrix> {
        let field = self.field();
        let (nb, nh) = (self.base.dim(), self.hopf.dim());
        let op = operator_matrix(field, nb, nh, |g| self.convolve(f, g));
        let unit = self.convolution_unit();
        let sol = op.solve(&unit.to_vector()).ok()?;
        let g = Matrix::from_vector(field, nb, nh, &sol.particular);
        (self.convolve(&g, f) == unit).then_some(g)
    }

    /// `v(hk) - (h_(1)·v(k))v(h_(2))` over basis pairs, and `v(1) - 1`.
    pub fn cocycle_residual(&self, v: &Matrix) -> Vector {
        let (h, b) = (&self.hopf, &self.base);
        let nh = h.dim();
        let mut out = vec_add(&v.mul_vec(h.unit()), &vec_scale(&self.field().from_i64(-1), b.unit()));
        for i in 0..nh {
            let terms = h.sweedler(&h.basis(i), 2);
            for k in 0..nh {
                let mut r = v.mul_vec(&h.mul(&h.basis(i), &h.basis(k)));
                let vk = v.col(k);
                for (c, t) in &terms {
                    let term = b.mul(&self.act(&h.basis(t[0]), &vk), &v.col(t[1]));
                    r = vec_add(&r, &vec_scale(&(-c), &term));
                }
                out.extend(r);
            }
        }
        out
    }

    /// Normalized, satisfies the cocycle law and is convolution invertible.
    pub fn is_cocycle(&self, v: &Matrix) -> bool {
        self.cocycle_residual(v).iter().all(Scalar::is_zero) && self.convolution_inverse(v).is_some()
    }

    /// `f_b(h) = (h·b)b⁻¹`, or `None` when `b` is not a unit.
    pub fn coboundary(&self, b: &[Scalar]) -> Option<Matrix> {
        let binv = self.base.inverse(b)?;
        let cols: Vec<Vector> = (0..self.hopf.dim())
            .map(|i| self.base.mul(&self.act(&self.hopf.basis(i), b), &binv))
            .collect();
        Some(Matrix::from_columns(self.field(), self.base.dim(), &cols))
    }

    /// `v ∼ v₁` iff `h·b = (v*v₁⁻¹)(h)b` has an invertible solution `b`.
    pub fn cohomologous(&self, v: &Matrix, v1: &Matrix, policy: SearchPolicy) -> bool {
        let Some(v1inv) = self.convolution_inverse(v1) else {
            return false;
        };
        let w = self.convolve(v, &v1inv);
        let (h, b) = (&self.hopf, &self.base);
        let nb = b.dim();
        let blocks: Vec<Matrix> = (0..h.dim())
            .map(|i| {
                let act_h = self.action.mul(&Matrix::column_vector(self.field(), h.basis(i)).kron(&Matrix::identity(self.field(), nb)));
                act_h.sub(&b.left_mult(&w.col(i)))
            })
            .collect();
        let sys = Matrix::vstack_all(self.field(), nb, &blocks);
        has_unit(b, &sys.kernel(), policy)
    }

    /// Every normalized 1-cocycle.
    pub fn cocycles(&self, cap: u64) -> Result<(Vec<Matrix>, Certificate)> {
        self.require_hypotheses()?;
        let field = self.field();
        let (nb, nh) = (self.base.dim(), self.hopf.dim());
        let mut m = Matrix::zeros(field, nb, nb * nh);
        for r in 0..nb {
            for c in 0..nh {
                m.set(r, r * nh + c, self.hopf.unit()[c].clone());
            }
        }
        let family = AffineFamily::solutions(&m, self.base.unit()).expect("v(1) = 1 is solvable");
        let (points, cert) = solve_quadratic_family(&family, cap, |x| {
            self.cocycle_residual(&Matrix::from_vector(field, nb, nh, x))
        })?;
        let found = points
            .into_iter()
            .map(|x| Matrix::from_vector(field, nb, nh, &x))
            .filter(|v| self.convolution_inverse(v).is_some())
            .collect();
        Ok((found, cert))
    }

    /// `Z¹` split into cohomology classes.
    pub fn first_cohomology(&self, policy: SearchPolicy) -> Result<FirstCohomology> {
        let (cocycles, certificate) = self.cocycles(policy.cap)?;
        let classes = classes(cocycles.len(), |i, j| self.cohomologous(&cocycles[i], &cocycles[j], policy));
        Ok(FirstCohomology {
            cocycles,
            classes,
            certificate,
        })
    }
}

fn require(h: &HopfAlgebra, b: &Algebra) -> Result<()> {
    if !h.is_cocommutative() {
        return Err(Error::HypothesisViolated("H is not cocommutative".into()));
    }
    if !b.is_commutative() {
        return Err(Error::HypothesisViolated("B is not commutative".into()));
    }
    Ok(())
}

/// `Z¹(H,B)` with its partition into classes of `H¹(H,B)`.
#[derive(Debug, Clone)]
pub struct FirstCohomology {
    pub cocycles: Vec<Matrix>,
    pub classes: Vec<Vec<usize>>,
    pub certificate: Certificate,
}

impl FirstCohomology {
    pub fn order(&self) -> usize {
        self.classes.len()
    }
}

/// Partition of `0..n` under an equivalence relation, by union-find over all pairs.
pub fn classes<F: FnMut(usize, usize) -> bool>(n: usize, mut related: F) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if find(&mut parent, i) != find(&mut parent, j) && related(i, j) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[b.max(a)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut root_of = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_of[r] == usize::MAX {
            root_of[r] = out.len();
            out.push(Vec::new());
        }
        out[root_of[r]].push(i);
    }
    out
}

/// Whether the span of `vectors` in `B` contains a unit.
pub fn has_unit(b: &Algebra, vectors: &[Vector], policy: SearchPolicy) -> bool {
    span_contains(b.field(), b.dim(), vectors, policy, |x| b.is_unit_element(x))
}

/// Colinear maps `H → A` with `t(1) = 1`, as an affine family in the coordinates of `Hom^H(H,A)`.
pub fn unital_colinear_family(ca: &ComoduleAlgebra) -> (HomSpace, Option<AffineFamily>) {
    let space = HomSpace::compute(ca, Class::T, Variant::Plain);
    let field = ca.field();
    let cols: Vec<Vector> = space.basis().iter().map(|t| t.mul_vec(ca.hopf().unit())).collect();
    let m = Matrix::from_columns(field, ca.dim(), &cols);
    let family = AffineFamily::solutions(&m, ca.algebra().unit());
    (space, family)
}

/// `t(hk) - t(h)t(k)` over basis pairs.
pub fn multiplicativity_residual(ca: &ComoduleAlgebra, t: &Matrix) -> Vector {
    let h = ca.hopf();
    let a = ca.algebra();
    let mut out = Vec::new();
    for i in 0..h.dim() {
        for k in 0..h.dim() {
            let lhs = t.mul_vec(&h.mul(&h.basis(i), &h.basis(k)));
            out.extend(vec_add(&lhs, &vec_scale(&ca.field().from_i64(-1), &a.mul(&t.col(i), &t.col(k)))));
        }
    }
    out
}

/// Colinear, unital and multiplicative.
pub fn is_colinear_algebra_map(ca: &ComoduleAlgebra, t: &Matrix) -> bool {
    is_member(ca, Class::T, Variant::Plain, t)
        && t.mul_vec(ca.hopf().unit()) == *ca.algebra().unit()
        && multiplicativity_residual(ca, t).iter().all(Scalar::is_zero)
}

/// Every element of `Ω_A`. Exhaustive over small F_p; over ℚ exact for families
/// of dimension at most one.
pub fn colinear_algebra_maps(ca: &ComoduleAlgebra, cap: u64) -> Result<(Vec<Matrix>, Certificate)> {
    let (space, family) = unital_colinear_family(ca);
    let Some(family) = family else {
        return Ok((Vec::new(), Certificate { exhaustive: true, visited: 0 }));
    };
    let (points, cert) = solve_quadratic_family(&family, cap, |c| multiplicativity_residual(ca, &space.element(c)))?;
    Ok((points.iter().map(|c| space.element(c)).collect(), cert))
}

/// `Ω_A` generated as `{v*t₀ : v ∈ Z¹}` from a known base point.
pub fn colinear_algebra_maps_from(ca: &ComoduleAlgebra, t0: &Matrix, cocycles: &[Matrix]) -> Vec<Matrix> {
    let incl = ca.coinvariants().inclusion();
    cocycles
        .iter()
        .map(|v| convolve(ca, Variant::Plain, &incl.mul(v), t0))
        .collect()
}

/// `Ω_A` solved directly, or when that is out of reach, generated as `Z¹*t₀` from
/// an algebra map `t₀` found among sampled clefting maps. The flag says whether
/// the generated route was taken.
pub fn colinear_algebra_maps_or_generated(
    ca: &ComoduleAlgebra,
    action: &ModuleAlgebraAction,
    policy: SearchPolicy,
) -> Result<(Vec<Matrix>, bool)> {
    match colinear_algebra_maps(ca, policy.cap) {
        Ok((maps, _)) => Ok((maps, false)),
        Err(Error::SearchInconclusive(why)) => {
            let base = normalized_clefting_data(ca, policy, policy.tries)
                .into_iter()
                .map(|d| d.t)
                .find(|t| is_colinear_algebra_map(ca, t))
                .ok_or_else(|| Error::SearchInconclusive(format!("{why}; no base point found by sampling")))?;
            let (z, _) = action.cocycles(policy.cap)?;
            Ok((colinear_algebra_maps_from(ca, &base, &z), true))
        }
        Err(e) => Err(e),
    }
}

/// `t₁ ∼ t₂` iff `bt₁(h) = t₂(h)b` for some unit `b ∈ B`.
pub fn omega_equivalent(ca: &ComoduleAlgebra, t1: &Matrix, t2: &Matrix, policy: SearchPolicy) -> bool {
    let a = ca.algebra();
    let b = ca.coinvariants();
    let field = ca.field();
    let blocks: Vec<Matrix> = (0..ca.hopf().dim())
        .map(|i| {
            let cols: Vec<Vector> = (0..b.dim())
                .map(|k| {
                    let bk = b.basis_image(k);
                    vec_add(&a.mul(&bk, &t1.col(i)), &vec_scale(&field.from_i64(-1), &a.mul(&t2.col(i), &bk)))
                })
                .collect();
            Matrix::from_columns(field, a.dim(), &cols)
        })
        .collect();
    let sys = Matrix::vstack_all(field, b.dim(), &blocks);
    has_unit(b.algebra(), &sys.kernel(), policy)
}

/// `Ω_A` with its partition into `∼`-classes.
#[derive(Debug, Clone)]
pub struct OmegaClasses {
    pub maps: Vec<Matrix>,
    pub classes: Vec<Vec<usize>>,
    pub certificate: Certificate,
}

pub fn omega_classes(ca: &ComoduleAlgebra, policy: SearchPolicy) -> Result<OmegaClasses> {
    let (maps, certificate) = colinear_algebra_maps(ca, policy.cap)?;
    let classes = classes(maps.len(), |i, j| omega_equivalent(ca, &maps[i], &maps[j], policy));
    Ok(OmegaClasses {
        maps,
        classes,
        certificate,
    })
}

/// `ω_t` is the same for every clefting datum, and makes `B` an `H`-module algebra.
pub fn action_independence_check(ca: &ComoduleAlgebra, data: &[CleftingDatum]) -> Result<Vec<Check>> {
    require(ca.hopf(), ca.coinvariants().algebra())?;
    let actions = data
        .iter()
        .map(|d| ModuleAlgebraAction::from_datum(ca, d))
        .collect::<Result<Vec<_>>>()?;
    let Some(first) = actions.first() else {
        return Ok(vec![Check::new("ω is independent of t", Status::Degenerate, "no clefting data")]);
    };
    let mut checks = vec![Check::from_bool(
        "ω is independent of t",
        actions.iter().all(|x| x.matrix() == first.matrix()),
        format!("compared {} clefting maps", actions.len()),
    )];
    checks.extend(first.check());
    Ok(checks)
}

/// Normalized clefting maps: all of them over small F_p, otherwise distinct seeded samples.
pub fn normalized_clefting_data(ca: &ComoduleAlgebra, policy: SearchPolicy, limit: usize) -> Vec<CleftingDatum> {
    let (space, family) = unital_colinear_family(ca);
    let Some(family) = family else {
        return Vec::new();
    };
    let make = |c: &[Scalar]| {
        let t = space.element(&family.point(c));
        convolution_inverse(ca, Variant::Plain, &t).ok().map(|u| CleftingDatum {
            t,
            u,
            normalized: true,
        })
    };
    let field = ca.field();
    let mut out: Vec<CleftingDatum> = Vec::new();
    if let Some(all) = all_coefficients(field, family.dim(), policy.cap) {
        out.extend(all.filter_map(|c| make(&c)).take(limit));
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    for _ in 0..policy.tries {
        if out.len() >= limit {
            break;
        }
        if let Some(d) = make(&sample_coefficients(&mut rng, field, family.dim(), policy.bound)) {
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

/// The four hom-sets of the groupoid built from `Z¹` and `Ω_A`, as maps `H → A`.
#[derive(Debug, Clone)]
pub struct Groupoid {
    pub cocycles: Vec<Matrix>,
    pub algebra_maps: Vec<Matrix>,
    pub twisted_cocycles: Vec<Matrix>,
    pub anti_maps: Vec<Matrix>,
}

struct GroupoidContext<'a> {
    ca: &'a ComoduleAlgebra,
    action: &'a ModuleAlgebraAction,
}

impl GroupoidContext<'_> {
    fn restrict(&self, f: &Matrix) -> Option<Matrix> {
        let b = self.ca.coinvariants();
        let cols = f.columns().iter().map(|c| b.restrict(c)).collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(self.ca.field(), b.dim(), &cols))
    }

    fn in_cocycles(&self, f: &Matrix) -> bool {
        self.restrict(f).is_some_and(|v| self.action.is_cocycle(&v))
    }

    fn in_algebra_maps(&self, f: &Matrix) -> bool {
        is_colinear_algebra_map(self.ca, f)
    }

    /// `w∘S ∈ Z¹`.
    fn in_twisted(&self, f: &Matrix) -> bool {
        self.in_cocycles(&f.mul(self.ca.hopf().antipode()))
    }

    /// `u = t∘S` with `t ∈ Ω_A`.
    fn in_anti(&self, f: &Matrix) -> bool {
        self.in_algebra_maps(&f.mul(self.ca.hopf().antipode_inv()))
    }

    fn conv(&self, f: &Matrix, g: &Matrix) -> Matrix {
        convolve(self.ca, Variant::Plain, f, g)
    }
}

fn closure_check<F>(name: &str, lefts: &[Matrix], rights: &[Matrix], mut ok: F) -> Check
where
    F: FnMut(&Matrix, &Matrix) -> bool,
{
    for (i, f) in lefts.iter().enumerate() {
        for (j, g) in rights.iter().enumerate() {
            if !ok(f, g) {
                return Check::fail(name, format!("fails at pair ({i}, {j})"));
            }
        }
    }
    Check::pass(name, format!("{} pairs", lefts.len() * rights.len()))
}

/// The hom-sets `Z¹`, `Ω_A`, `{w : w∘S ∈ Z¹}`, `{t∘S : t ∈ Ω_A}` are closed under
/// the six mixed convolutions, `Z¹` and the twisted cocycles are groups, and every
/// morphism is invertible.
pub fn groupoid_check(ca: &ComoduleAlgebra, action: &ModuleAlgebraAction, policy: SearchPolicy) -> Result<(Groupoid, Vec<Check>)> {
    require(ca.hopf(), ca.coinvariants().algebra())?;
    let ctx = GroupoidContext { ca, action };
    let h = ca.hopf();
    let incl = ca.coinvariants().inclusion();
    let (z, _) = action.cocycles(policy.cap)?;
    let (omega, _) = colinear_algebra_maps(ca, policy.cap)?;
    let g = Groupoid {
        cocycles: z.iter().map(|v| incl.mul(v)).collect(),
        algebra_maps: omega.clone(),
        twisted_cocycles: z.iter().map(|v| incl.mul(&v.mul(h.antipode_inv()))).collect(),
        anti_maps: omega.iter().map(|t| t.mul(h.antipode())).collect(),
    };
    let mut checks = Vec::new();

    checks.push(closure_check("cocycles form a group under convolution", &g.cocycles, &g.cocycles, |a, b| {
        ctx.in_cocycles(&ctx.conv(a, b))
    }));
    checks.push(closure_check("twisted cocycles form a group under convolution", &g.twisted_cocycles, &g.twisted_cocycles, |a, b| {
        ctx.in_twisted(&ctx.conv(a, b))
    }));
    let twisted_law = z.iter().all(|v| {
        let w = v.mul(h.antipode_inv());
        (0..h.dim()).all(|i| {
            (0..h.dim()).all(|k| {
                let lhs = w.mul_vec(&h.mul(&h.basis(i), &h.basis(k)));
                let mut rhs = vec![ca.field().zero(); w.rows()];
                for (c, t) in h.sweedler(&h.basis(k), 2) {
                    let s = h.antipode_of(&h.basis(t[0]));
                    let term = action.base().mul(&action.act(&s, &w.col(i)), &w.col(t[1]));
                    rhs = vec_add(&rhs, &vec_scale(&c, &term));
                }
                lhs == rhs
            })
        })
    });
    checks.push(Check::from_bool(
        "twisted cocycle law w(hk) = (S(k_(1))·w(h))w(k_(2))",
        twisted_law,
        format!("{} twisted cocycles", z.len()),
    ));

    if omega.is_empty() {
        checks.push(Check::pass("mixed closures", "vacuously closed: there is no colinear algebra map"));
    } else {
        checks.push(closure_check("t*u₁ is a cocycle", &g.algebra_maps, &g.anti_maps, |t, u| {
            ctx.in_cocycles(&ctx.conv(t, u))
        }));
        checks.push(closure_check("v*t is a colinear algebra map", &g.cocycles, &g.algebra_maps, |v, t| {
            ctx.in_algebra_maps(&ctx.conv(v, t))
        }));
        checks.push(closure_check("t*w is a colinear algebra map", &g.algebra_maps, &g.twisted_cocycles, |t, w| {
            ctx.in_algebra_maps(&ctx.conv(t, w))
        }));
        checks.push(closure_check("u*t₁ is a twisted cocycle", &g.anti_maps, &g.algebra_maps, |u, t| {
            ctx.in_twisted(&ctx.conv(u, t))
        }));
        checks.push(closure_check("w*u is in the image of Ω under S", &g.twisted_cocycles, &g.anti_maps, |w, u| {
            ctx.in_anti(&ctx.conv(w, u))
        }));
        checks.push(closure_check("u*v is in the image of Ω under S", &g.anti_maps, &g.cocycles, |u, v| {
            ctx.in_anti(&ctx.conv(u, v))
        }));
    }

    let inverse_in = |f: &Matrix, target: &dyn Fn(&Matrix) -> bool| {
        convolution_inverse(ca, Variant::Plain, f).is_ok_and(|x| target(&x))
    };
    let invertible = g.cocycles.iter().all(|f| inverse_in(f, &|x| ctx.in_cocycles(x)))
        && g.twisted_cocycles.iter().all(|f| inverse_in(f, &|x| ctx.in_twisted(x)))
        && g.algebra_maps.iter().all(|f| inverse_in(f, &|x| ctx.in_anti(x)))
        && g.anti_maps.iter().all(|f| inverse_in(f, &|x| ctx.in_algebra_maps(x)));
    checks.push(Check::from_bool(
        "every morphism is invertible",
        invertible,
        "convolution inverses land in the opposite hom-set",
    ));
    Ok((g, checks))
}

/// `F(v) = v*t₀` and `F⁻¹(t) = t*u₀` are inverse bijections `Z¹ ↔ Ω_A` that
/// preserve and reflect the equivalence relations.
pub fn cohomology_bijection_check(
    ca: &ComoduleAlgebra,
    action: &ModuleAlgebraAction,
    t0: &Matrix,
    policy: SearchPolicy,
) -> Result<Vec<Check>> {
    require(ca.hopf(), ca.coinvariants().algebra())?;
    let ctx = GroupoidContext { ca, action };
    let incl = ca.coinvariants().inclusion();
    let u0 = t0.mul(ca.hopf().antipode());
    let h1 = action.first_cohomology(policy)?;
    let om = omega_classes(ca, policy)?;
    let z = &h1.cocycles;
    let fwd: Vec<Matrix> = z.iter().map(|v| ctx.conv(&incl.mul(v), t0)).collect();
    let back: Vec<Option<Matrix>> = om.maps.iter().map(|t| ctx.restrict(&ctx.conv(t, &u0))).collect();

    let mut checks = vec![
        Check::from_bool(
            "F lands in Ω",
            fwd.iter().all(|t| ctx.in_algebra_maps(t)),
            format!("{} cocycles", z.len()),
        ),
        Check::from_bool(
            "F⁻¹ lands in Z¹",
            back.iter().all(|v| v.as_ref().is_some_and(|v| action.is_cocycle(v))),
            format!("{} colinear algebra maps", om.maps.len()),
        ),
    ];
    let round1 = fwd
        .iter()
        .zip(z)
        .all(|(t, v)| ctx.restrict(&ctx.conv(t, &u0)).as_ref() == Some(v));
    let round2 = back
        .iter()
        .zip(&om.maps)
        .all(|(v, t)| v.as_ref().is_some_and(|v| &ctx.conv(&incl.mul(v), t0) == t));
    checks.push(Check::from_bool("F⁻¹∘F = id", round1, "on every cocycle"));
    checks.push(Check::from_bool("F∘F⁻¹ = id", round2, "on every colinear algebra map"));
    checks.push(Check::from_bool(
        "F is onto Ω",
        om.maps.iter().all(|t| fwd.contains(t)) && fwd.len() == om.maps.len(),
        format!("|Z¹| = {}, |Ω| = {}", z.len(), om.maps.len()),
    ));
    let mut agrees = true;
    for i in 0..z.len() {
        for j in 0..z.len() {
            let a = action.cohomologous(&z[i], &z[j], policy);
            let b = omega_equivalent(ca, &fwd[i], &fwd[j], policy);
            agrees &= a == b;
        }
    }
    checks.push(Check::from_bool("F preserves and reflects equivalence", agrees, "on every pair"));
    checks.push(Check::from_bool(
        "|H¹| = |Ω/∼|",
        h1.order() == om.classes.len(),
        format!("{} vs {}", h1.order(), om.classes.len()),
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cleft::find_cleft;
    use crate::fixtures;
    use crate::hopf::cyclic_group_algebra;

    fn all_pass(checks: &[Check]) {
        for c in checks {
            assert!(c.passed(), "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn h1_of_c2_with_trivial_coefficients() {
        for field in [Field::Rationals, Field::Prime(3)] {
            let h = cyclic_group_algebra(field, 2);
            let act = ModuleAlgebraAction::trivial(&h, &Algebra::ground(field));
            let h1 = act.first_cohomology(SearchPolicy::default()).unwrap();
            assert_eq!(h1.cocycles.len(), 2, "{field}");
            assert_eq!(h1.order(), 2, "{field}");
        }
    }

    #[test]
    fn coboundary_of_a_scalar_is_trivial() {
        let f = Field::Rationals;
        let h = cyclic_group_algebra(f, 2);
        let act = ModuleAlgebraAction::trivial(&h, &Algebra::ground(f));
        assert_eq!(act.coboundary(&[f.from_i64(5)]).unwrap(), act.convolution_unit());
    }

    #[test]
    fn graded_m2_cohomology_and_omega() {
        let ca = fixtures::graded_m2(Field::Prime(3));
        let d = find_cleft(&ca, SearchPolicy::default()).datum.unwrap();
        let act = ModuleAlgebraAction::from_datum(&ca, &d).unwrap();
        all_pass(&act.check());
        let h1 = act.first_cohomology(SearchPolicy::default()).unwrap();
        assert_eq!(h1.cocycles.len(), 2);
        assert_eq!(h1.order(), 1);
        let om = omega_classes(&ca, SearchPolicy::default()).unwrap();
        assert_eq!(om.maps.len(), 2);
        assert_eq!(om.classes.len(), 1);
        let (_, checks) = groupoid_check(&ca, &act, SearchPolicy::default()).unwrap();
        all_pass(&checks);
        all_pass(&cohomology_bijection_check(&ca, &act, &om.maps[0], SearchPolicy::default()).unwrap());
        let data = normalized_clefting_data(&ca, SearchPolicy::default(), usize::MAX);
        assert!(data.len() > 1);
        all_pass(&action_independence_check(&ca, &data).unwrap());
    }

    #[test]
    fn regular_kc2_over_rationals() {
        let ca = fixtures::kc2_regular(Field::Rationals);
        let om = omega_classes(&ca, SearchPolicy::default()).unwrap();
        assert_eq!(om.maps.len(), 2);
        assert_eq!(om.classes.len(), 2);
        let act = ModuleAlgebraAction::trivial(ca.hopf(), ca.coinvariants().algebra());
        let (_, checks) = groupoid_check(&ca, &act, SearchPolicy::default()).unwrap();
        all_pass(&checks);
        all_pass(&cohomology_bijection_check(&ca, &act, &om.maps[0], SearchPolicy::default()).unwrap());
    }

    #[test]
    fn noncocommutative_input_is_rejected() {
        let ca = fixtures::h4_regular(Field::Rationals).unwrap();
        let d = CleftingDatum::new(&ca, Matrix::identity(ca.field(), 4)).unwrap();
        assert!(matches!(
            action_independence_check(&ca, &[d]),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn class_partition() {
        let c = classes(5, |i, j| i % 2 == j % 2);
        assert_eq!(c, vec![vec![0, 2, 4], vec![1, 3]]);
    }
}
