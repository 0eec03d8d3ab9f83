//! End-to-end acceptance run. Prints one line per criterion with its tolerance
//! and runtime, then exits nonzero if any criterion failed.
//!
//!     cargo test -p hopf-galois --test acceptance

use std::time::{Duration, Instant};

use hopf_galois::cleft::{crossed_closed_forms, structure_theorem_check};
use hopf_galois::cohomology::{
    cohomology_bijection_check, colinear_algebra_maps, groupoid_check, omega_classes, ModuleAlgebraAction,
};
use hopf_galois::commands::{self, ActionSource, Options};
use hopf_galois::comodule::ComoduleAlgebra;
use hopf_galois::fixtures::{
    broken_cocycle_data, crossed_product, crossed_product_data, graded_m2, graded_m2_simple_module, ground_module,
    h4_regular, kc2_regular,
};
use hopf_galois::galois::GaloisExtension;
use hopf_galois::lifting::{lifting_report, Lifting};
use hopf_galois::maintheorem::{CategoryIso, PairPolicy, Tamper};
use hopf_galois::report::{Check, Report};
use hopf_galois::search::SearchPolicy;
use hopf_galois::Field;

const Q: Field = Field::Rationals;
const F3: Field = Field::Prime(3);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Passes iff every check passes; otherwise names the first failure.
fn all_pass(what: &str, checks: &[Check]) -> Outcome {
    match checks.iter().find(|c| !c.passed()) {
        None => outcome(true, format!("{what}: {} checks", checks.len())),
        Some(c) => outcome(false, format!("{what}: {} ({:?}: {})", c.name, c.status, c.detail)),
    }
}

fn combine(parts: Vec<Outcome>) -> Outcome {
    let passed = parts.iter().all(|p| p.passed);
    let detail = parts.into_iter().map(|p| p.detail).collect::<Vec<_>>().join("; ");
    outcome(passed, detail)
}

fn policy() -> SearchPolicy {
    SearchPolicy::with_seed(0)
}

fn cp(c: i64) -> ComoduleAlgebra {
    crossed_product(Q, &Q.from_i64(c)).unwrap()
}

fn translation_identities() -> Outcome {
    let fixtures = [
        ("kC2", kc2_regular(Q)),
        ("H4", h4_regular(Q).unwrap()),
        ("graded M2/Q", graded_m2(Q)),
        ("graded M2/F3", graded_m2(F3)),
        ("CP(-1)", cp(-1)),
    ];
    combine(
        fixtures
            .iter()
            .map(|(name, ca)| all_pass(name, &GaloisExtension::new(ca).unwrap().verify_translation_identities()))
            .collect(),
    )
}

fn category_iso() -> Outcome {
    let m2 = graded_m2(F3);
    let h4 = h4_regular(Q).unwrap();
    let cases = [
        ("graded M2, M = B", m2.clone(), m2.regular_base_module()),
        ("graded M2, M = k", m2.clone(), graded_m2_simple_module(&m2)),
        ("H4, M = k", h4.clone(), ground_module(&h4)),
    ];
    let pairs = PairPolicy {
        exhaustive_up_to: usize::MAX,
        ..PairPolicy::default()
    };
    combine(
        cases
            .iter()
            .map(|(name, ca, m)| {
                let checks = CategoryIso::new(ca, m).unwrap().verify(pairs);
                let count = |p: &str| checks.iter().filter(|c| c.name.contains(p)).count();
                let shape = count("hom-space dimensions") == 4
                    && count("inverse formula is bijective") == 4
                    && count("α∘γ = β") == 4
                    && count("functoriality") == 8;
                let o = all_pass(name, &checks);
                outcome(o.passed && shape, o.detail)
            })
            .collect(),
    )
}

fn negative_controls() -> Outcome {
    let h4 = h4_regular(Q).unwrap();
    let checks = CategoryIso::new(&h4, &ground_module(&h4))
        .unwrap()
        .with_tamper(Tamper::OmitAntipodeInGamma12)
        .verify(PairPolicy::default());
    let pattern = checks.iter().find(|c| c.name == "functoriality (2,1) then (1,1)");
    let pattern_fails = pattern.is_some_and(|c| !c.passed());
    let witnessed = checks.iter().any(|c| !c.passed() && c.witness.is_some());
    let tamper = outcome(
        pattern_fails && witnessed,
        format!(
            "tampered transport: {}",
            pattern.map_or("pattern missing".to_string(), |c| c.detail.clone())
        ),
    );
    let rejected = match broken_cocycle_data(Q).and_then(|d| d.build()) {
        Ok(_) => outcome(false, "broken cocycle was accepted"),
        Err(e) => outcome(e.to_string().contains("cocycle"), format!("broken cocycle: {e}")),
    };
    combine(vec![tamper, rejected])
}

fn structure_theorem() -> Outcome {
    combine(
        [("graded M2/F3", graded_m2(F3)), ("CP(-1)", cp(-1))]
            .iter()
            .map(|(name, ca)| {
                let checks = structure_theorem_check(ca, policy()).checks;
                let legs = ["cleft implies crossed product", "crossed product implies Galois with normal basis", "Galois with normal basis implies cleft"]
                    .iter()
                    .all(|l| checks.iter().any(|c| c.name == *l && c.passed()));
                let o = all_pass(name, &checks);
                outcome(o.passed && legs, o.detail)
            })
            .collect(),
    )
}

fn crossed_closed_form_sections() -> Outcome {
    combine(
        [-1, 2, 3, 5]
            .iter()
            .map(|&c| {
                let data = crossed_product_data(Q, &Q.from_i64(c)).unwrap();
                all_pass(&format!("CP({c})"), &crossed_closed_forms(&data).unwrap())
            })
            .collect(),
    )
}

fn cohomology() -> Outcome {
    let mut parts = Vec::new();
    for field in [Q, F3] {
        let ca = kc2_regular(field);
        let action = ModuleAlgebraAction::trivial(ca.hopf(), ca.coinvariants().algebra());
        let h1 = action.first_cohomology(policy()).unwrap();
        parts.push(outcome(
            h1.order() == 2 && h1.certificate.exhaustive,
            format!("|H¹(kC2, k)| over {field} = {} ({})", h1.order(), h1.certificate.describe()),
        ));
    }
    let m2 = graded_m2(F3);
    let d = hopf_galois::cleft::find_cleft(&m2, policy()).datum.unwrap();
    let action = ModuleAlgebraAction::from_datum(&m2, &d).unwrap();
    let h1 = action.first_cohomology(policy()).unwrap();
    let omega = omega_classes(&m2, policy()).unwrap();
    parts.push(outcome(
        h1.order() == omega.classes.len() && h1.certificate.exhaustive && omega.certificate.exhaustive,
        format!("graded M2/F3: |H¹| = {}, |Ω/∼| = {}", h1.order(), omega.classes.len()),
    ));
    let (_, closures) = groupoid_check(&m2, &action, policy()).unwrap();
    parts.push(all_pass("closures", &closures));
    let (maps, _) = colinear_algebra_maps(&m2, policy().cap).unwrap();
    parts.push(all_pass("Z¹ ↔ Ω", &cohomology_bijection_check(&m2, &action, &maps[0], policy()).unwrap()));
    combine(parts)
}

fn lifting() -> Outcome {
    let m2 = graded_m2(F3);
    combine(
        [("M = k", graded_m2_simple_module(&m2)), ("M = B", m2.regular_base_module())]
            .iter()
            .map(|(name, m)| {
                let checks = lifting_report(&m2, m, policy()).unwrap();
                let needed = [
                    "unitality statements agree",
                    "associativity statements agree",
                    "lifting statements agree",
                    "φ ↦ t ↦ φ is the identity",
                    "t ↦ φ ↦ t is the identity",
                    "|Λ/≅| = |Ω_E/∼|",
                ];
                let present = needed.iter().all(|n| checks.iter().any(|c| c.name == *n));
                let c = Lifting::new(&m2, m).unwrap().classify(policy()).unwrap();
                let o = all_pass(name, &checks);
                outcome(
                    o.passed && present && c.certificate.exhaustive,
                    format!("{}, |Λ/≅| = {}, |Ω_E/∼| = {}", o.detail, c.action_classes.len(), c.map_classes.len()),
                )
            })
            .collect(),
    )
}

fn every_report(opts: &Options) -> Vec<Report> {
    let m2 = graded_m2(F3);
    let k = graded_m2_simple_module(&m2);
    let b = m2.regular_base_module();
    let h4 = h4_regular(Q).unwrap();
    let fx = |s: &str| vec![s.to_string()];
    vec![
        commands::galois(&m2, &fx("m2"), opts).unwrap(),
        commands::translation_map(&h4, &fx("h4"), opts).unwrap(),
        commands::cat_iso_check(&h4, &ground_module(&h4), None, &fx("h4"), opts).unwrap(),
        commands::cleft(&cp(-1), &fx("cp"), opts).unwrap(),
        commands::smash(&kc2_regular(Q), &fx("kc2"), opts).unwrap(),
        commands::cohomology_h1(&m2, ActionSource::FromCleft, &fx("m2"), opts).unwrap(),
        commands::lift(&m2, &b, &fx("m2"), opts).unwrap(),
        commands::classify(&m2, &k, &fx("m2"), opts).unwrap(),
    ]
}

fn determinism() -> Outcome {
    let mut parts = Vec::new();
    for seed in [0, 17] {
        let opts = Options::with_seed(seed);
        let first: Vec<String> = every_report(&opts).iter().map(Report::to_json).collect();
        let second: Vec<String> = every_report(&opts).iter().map(Report::to_json).collect();
        let same = first == second;
        parts.push(outcome(same, format!("seed {seed}: {} reports byte-identical: {same}", first.len())));
    }
    combine(parts)
}

fn main() {
    type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 translation identities", Some(Duration::from_secs(2)), translation_identities),
        ("2 category isomorphism", Some(Duration::from_secs(10)), category_iso),
        ("3 negative controls", None, negative_controls),
        ("4 structure theorem round trip", Some(Duration::from_secs(5)), structure_theorem),
        ("5 crossed product closed forms", None, crossed_closed_form_sections),
        ("6 cohomology", None, cohomology),
        ("7 lifting", Some(Duration::from_secs(30)), lifting),
        ("8 determinism", None, determinism),
    ];
    let mut failed = Vec::new();
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let ok = o.passed && in_time;
        let budget = limit.map_or("none".to_string(), |l| format!("{} ms", l.as_millis()));
        println!(
            "{} {name} | tolerance 0 (exact) | runtime {} ms, limit {budget} | {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_millis(),
            o.detail
        );
        if !ok {
            failed.push(name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
