//! Build k[x]/(x² - c) as a crossed product of k by C_2, compare the solved
//! section inverse and translation map with their closed forms, and run the
//! cleft / crossed product / normal basis cycle on it.
//!
//!     cargo run --example crossed_product -- 5

use hopf_galois::cleft::{crossed_closed_forms, smash_check, structure_theorem_check};
use hopf_galois::fixtures::crossed_product_data;
use hopf_galois::search::SearchPolicy;
use hopf_galois::Field;

fn main() -> hopf_galois::Result<()> {
    let q = Field::Rationals;
    let c = q.parse_scalar(&std::env::args().nth(1).unwrap_or_else(|| "-1".into()))?;
    let data = crossed_product_data(q, &c)?;
    let cp = data.build()?;
    println!("multiplication of k#σ kC2 with σ(g, g) = {c}:\n{}", cp.algebra().mul_matrix());
    println!("section inverse u: {}", data.section_inverse());

    for check in crossed_closed_forms(&data)? {
        println!("  {:?} {}", check.status, check.name);
    }
    let s = structure_theorem_check(&cp, SearchPolicy::default());
    println!("clefting search: {}", s.cleft.describe());
    for check in s.checks.iter().take(4) {
        println!("  {:?} {}: {}", check.status, check.name, check.detail);
    }
    // Only c a square makes this a smash product.
    let smash = smash_check(&cp, SearchPolicy::default().cap);
    println!("smash product: {}", smash.algebra_map.is_some());
    Ok(())
}
