//! The subcommands of the `hopf-galois` tool as functions returning reports.

use crate::cleft::{crossed_closed_forms, find_cleft, smash_check, structure_theorem_check, CrossedData};
use crate::cohomology::{
    action_independence_check, classes, cohomology_bijection_check, colinear_algebra_maps_or_generated, groupoid_check,
    normalized_clefting_data, omega_equivalent, ModuleAlgebraAction,
};
use crate::comodule::{ComoduleAlgebra, RightModule};
use crate::error::{Error, Result};
use crate::galois::{canonical_map, GaloisExtension};
use crate::io::Bundle;
use crate::lifting::{lifting_report, Lifting};
use crate::maintheorem::{CategoryIso, PairPolicy, Tamper};
use crate::report::{Check, Report, Status};
use crate::search::SearchPolicy;

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub policy: SearchPolicy,
    pub pairs: PairPolicy,
}

impl Options {
    pub fn with_seed(seed: u64) -> Options {
        Options {
            policy: SearchPolicy::with_seed(seed),
            pairs: PairPolicy {
                seed,
                ..PairPolicy::default()
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionSource {
    /// `h·b = ε(h)b`.
    Trivial,
    /// The action induced by a clefting map.
    FromCleft,
}

fn report(command: &str, fixtures: &[String], opts: &Options) -> Report {
    Report::new(command, fixtures.to_vec(), opts.policy.seed)
}

/// Re-runs every validator and checks the crossed-data conditions.
pub fn validate(bundle: &Bundle, fixtures: &[String], opts: &Options) -> Report {
    let mut r = report("validate", fixtures, opts);
    r.value("field", bundle.field);
    for (name, h) in &bundle.hopf_algebras {
        let v = h.validate();
        r.push(Check::from_bool(format!("Hopf algebra {name}"), v.passed(), v.summary()));
    }
    for (name, c) in &bundle.comodule_algebras {
        let v = c.ca.validate();
        r.push(Check::from_bool(format!("comodule algebra {name}"), v.passed(), v.summary()));
        r.value(format!("{name}: dim A, dim H, dim B"), format!("{}, {}, {}", c.ca.dim(), c.ca.hopf().dim(), c.ca.coinvariants().dim()));
    }
    for (name, m) in &bundle.modules {
        let v = m.module.validate();
        r.push(Check::from_bool(format!("module {name}"), v.passed(), v.summary()));
    }
    for (name, c) in &bundle.crossed_data {
        r.extend(crossed_conditions(name, &c.data));
    }
    r
}

fn crossed_conditions(name: &str, data: &CrossedData) -> Vec<Check> {
    let violations = data.violations();
    if violations.is_empty() {
        return vec![Check::pass(format!("crossed data {name}"), "every condition holds")];
    }
    violations
        .into_iter()
        .map(|(c, at)| Check::fail(format!("crossed data {name}: {}", c.name()), format!("violated at basis indices {at:?}")))
        .collect()
}

pub fn galois(ca: &ComoduleAlgebra, fixtures: &[String], opts: &Options) -> Result<Report> {
    let mut r = report("galois", fixtures, opts);
    let can = canonical_map(ca)?;
    r.value("dim A", ca.dim());
    r.value("dim H", ca.hopf().dim());
    r.value("dim B", ca.coinvariants().dim());
    r.value("dim A⊗_B A", can.square.dim());
    r.value("dim A⊗H", ca.dim() * ca.hopf().dim());
    r.value("galois", can.is_galois());
    r.push(Check::from_bool(
        "can is bijective",
        can.is_galois(),
        format!("{}x{} canonical map", can.matrix.rows(), can.matrix.cols()),
    ));
    if can.is_galois() {
        r.extend(GaloisExtension::new(ca)?.verify_translation_identities());
    }
    Ok(r)
}

pub fn translation_map(ca: &ComoduleAlgebra, fixtures: &[String], opts: &Options) -> Result<Report> {
    let mut r = report("translation-map", fixtures, opts);
    let g = GaloisExtension::new(ca)?;
    let (a, h) = (ca.algebra(), ca.hopf());
    let na = a.dim();
    for i in 0..h.dim() {
        let rep = g.representatives().col(i);
        let terms: Vec<String> = rep
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c}) {}⊗{}", a.labels()[k / na], a.labels()[k % na]))
            .collect();
        r.value(format!("γ({})", h.labels()[i]), if terms.is_empty() { "0".to_string() } else { terms.join(" + ") });
    }
    r.extend(g.verify_translation_identities());
    Ok(r)
}

pub fn cat_iso_check(
    ca: &ComoduleAlgebra,
    m: &RightModule,
    tamper: Option<Tamper>,
    fixtures: &[String],
    opts: &Options,
) -> Result<Report> {
    let mut r = report("cat-iso-check", fixtures, opts);
    let mut iso = CategoryIso::new(ca, m)?;
    if let Some(t) = tamper {
        iso = iso.with_tamper(t);
        r.value("tamper", format!("{t:?}"));
    }
    r.value("dim M", m.dim());
    r.value("dim M⊗_B A", iso.x2().dim());
    r.value("dim E", iso.end_algebra().dim());
    for (class, plain, primed, d) in iso.dimensions() {
        r.value(format!("dims {}", class.name()), format!("plain {plain}, primed {primed}, relative Hopf modules {d}"));
    }
    r.extend(iso.verify(opts.pairs));
    Ok(r)
}

pub fn cleft(ca: &ComoduleAlgebra, fixtures: &[String], opts: &Options) -> Result<Report> {
    let mut r = report("cleft", fixtures, opts);
    let s = structure_theorem_check(ca, opts.policy);
    r.value("cleft", s.cleft.status() == Status::Pass);
    r.value("search", s.cleft.describe());
    if let Some(d) = &s.cleft.datum {
        r.value("t", d.t.to_string());
    }
    r.extend(s.checks);
    Ok(r)
}

/// Builds `B#_σH`. Returns the report and, when the data is valid, a bundle holding the result.
pub fn crossed_product(bundle: &Bundle, name: Option<&str>, fixtures: &[String], opts: &Options) -> Result<(Report, Option<Bundle>)> {
    let mut r = report("crossed-product", fixtures, opts);
    let (name, named) = bundle.crossed(name)?;
    let checks = crossed_conditions(name, &named.data);
    let valid = checks.iter().all(Check::passed);
    r.extend(checks);
    if !valid {
        return Ok((r, None));
    }
    let ca = named.data.build()?;
    r.value("dim", ca.dim());
    r.extend(crossed_closed_forms(&named.data)?);
    r.extend(structure_theorem_check(&ca, opts.policy).checks);
    let mut out = Bundle::new(bundle.field);
    out.add_hopf(&named.hopf, named.data.hopf().clone());
    out.add_crossed_data(name, &named.hopf, named.data.clone())?;
    out.add_comodule_algebra(name, &named.hopf, ca)?;
    Ok((r, Some(out)))
}

pub fn smash(ca: &ComoduleAlgebra, fixtures: &[String], opts: &Options) -> Result<Report> {
    let mut r = report("smash-check", fixtures, opts);
    let s = smash_check(ca, opts.policy.cap);
    r.value("smash product", s.algebra_map.is_some());
    if let Some(t) = &s.algebra_map {
        r.value("t", t.to_string());
    }
    r.extend(s.checks);
    Ok(r)
}

pub fn cohomology_h1(ca: &ComoduleAlgebra, source: ActionSource, fixtures: &[String], opts: &Options) -> Result<Report> {
    let mut r = report("cohomology h1", fixtures, opts);
    let policy = opts.policy;
    let action = match source {
        ActionSource::Trivial => ModuleAlgebraAction::trivial(ca.hopf(), ca.coinvariants().algebra()),
        ActionSource::FromCleft => {
            let s = find_cleft(ca, policy);
            let d = s.datum.as_ref().ok_or_else(|| match s.status() {
                Status::Inconclusive => Error::SearchInconclusive(s.describe()),
                _ => Error::HypothesisViolated(format!("the extension is not cleft: {}", s.describe())),
            })?;
            ModuleAlgebraAction::from_datum(ca, d)?
        }
    };
    action.require_hypotheses()?;
    r.value("action", if source == ActionSource::Trivial { "trivial" } else { "from a clefting map" });
    r.extend(action.check());
    let h1 = action.first_cohomology(policy)?;
    r.value("|Z¹|", h1.cocycles.len());
    r.value("|H¹|", h1.order());
    r.value("cocycle search", h1.certificate.describe());
    if source == ActionSource::Trivial {
        r.push(Check::from_bool(
            "cocycles form a group",
            h1.cocycles.iter().all(|v| h1.cocycles.iter().all(|w| action.is_cocycle(&action.convolve(v, w)))),
            format!("{} cocycles", h1.cocycles.len()),
        ));
        return Ok(r);
    }

    let data = normalized_clefting_data(ca, policy, 64);
    r.extend(action_independence_check(ca, &data)?);
    let (omega, generated) = colinear_algebra_maps_or_generated(ca, &action, policy)?;
    let omega_classes = classes(omega.len(), |i, j| omega_equivalent(ca, &omega[i], &omega[j], policy));
    r.value("|Ω|", omega.len());
    r.value("|Ω/∼|", omega_classes.len());
    if generated {
        r.value("Ω", "generated from Z¹ and a base point");
    }
    match groupoid_check(ca, &action, policy) {
        Ok((_, checks)) => r.extend(checks),
        Err(Error::SearchInconclusive(why)) => r.push(Check::new("groupoid closures", Status::Inconclusive, why)),
        Err(e) => return Err(e),
    }
    if let Some(t0) = omega.first() {
        match cohomology_bijection_check(ca, &action, t0, policy) {
            Ok(checks) => r.extend(checks),
            Err(Error::SearchInconclusive(why)) => r.push(Check::new("Z¹ ↔ Ω", Status::Inconclusive, why)),
            Err(e) => return Err(e),
        }
    } else {
        r.push(Check::from_bool(
            "|H¹| = |Ω/∼|",
            false,
            "no colinear algebra map, so the correspondence has no base point",
        ));
    }
    Ok(r)
}

pub fn lift(ca: &ComoduleAlgebra, m: &RightModule, fixtures: &[String], opts: &Options) -> Result<Report> {
    let mut r = report("lift", fixtures, opts);
    r.value("dim M", m.dim());
    if m.dim() > 0 {
        let l = Lifting::new(ca, m)?;
        r.value("dim Hom_B(M⊗_B A, M)", l.candidate_basis().len());
        r.value("dim E", l.iso().end_algebra().dim());
    }
    r.extend(lifting_report(ca, m, opts.policy)?);
    Ok(r)
}

pub fn classify(ca: &ComoduleAlgebra, m: &RightModule, fixtures: &[String], opts: &Options) -> Result<Report> {
    let mut r = report("classify", fixtures, opts);
    if m.dim() == 0 {
        r.push(Check::new("classification", Status::Degenerate, "M = 0"));
        return Ok(r);
    }
    let l = Lifting::new(ca, m)?;
    let c = l.classify(opts.policy)?;
    r.value("|Λ|", c.actions.len());
    r.value("|Λ/≅|", c.action_classes.len());
    r.value("|Ω_E|", c.algebra_maps.len());
    r.value("|Ω_E/∼|", c.map_classes.len());
    if let Some(n) = c.cohomology_order {
        r.value("|H¹(H, End_B(M))|", n);
    }
    r.value("search", c.certificate.describe());
    r.extend(c.checks);
    Ok(r)
}
