//! Which B-module structures on M extend to A-module structures, and how they
//! correspond to colinear algebra maps into the rational endomorphism ring.
//!
//!     cargo run --example lifting

use hopf_galois::fixtures::{graded_m2, graded_m2_simple_module};
use hopf_galois::lifting::Lifting;
use hopf_galois::search::SearchPolicy;
use hopf_galois::Field;

fn main() -> hopf_galois::Result<()> {
    let m2 = graded_m2(Field::Prime(3));
    let policy = SearchPolicy::default();
    for (name, m) in [("B", m2.regular_base_module()), ("k", graded_m2_simple_module(&m2))] {
        let l = Lifting::new(&m2, &m)?;
        let c = l.classify(policy)?;
        println!(
            "M = {name}: {} candidates, |Λ| = {}, |Λ/≅| = {}, |Ω_E/∼| = {}",
            l.candidate_basis().len(),
            c.actions.len(),
            c.action_classes.len(),
            c.map_classes.len()
        );
        for check in l.equivalence_checks(policy)? {
            println!("  {:?} {}: {}", check.status, check.name, check.detail);
        }
    }
    Ok(())
}
