//! First Sweedler cohomology, and its match with colinear algebra maps up to
//! conjugation.
//!
//!     cargo run --example sweedler_cohomology

use hopf_galois::cleft::find_cleft;
use hopf_galois::cohomology::{omega_classes, ModuleAlgebraAction};
use hopf_galois::fixtures::{graded_m2, kc2_regular};
use hopf_galois::search::SearchPolicy;
use hopf_galois::Field;

fn main() -> hopf_galois::Result<()> {
    let policy = SearchPolicy::default();
    for field in [Field::Rationals, Field::Prime(3)] {
        let kc2 = kc2_regular(field);
        let trivial = ModuleAlgebraAction::trivial(kc2.hopf(), kc2.coinvariants().algebra());
        println!("|H¹(kC2, k)| over {field} = {}", trivial.first_cohomology(policy)?.order());
    }

    let m2 = graded_m2(Field::Prime(3));
    let datum = find_cleft(&m2, policy).datum.expect("graded M2 is cleft");
    let action = ModuleAlgebraAction::from_datum(&m2, &datum)?;
    let h1 = action.first_cohomology(policy)?;
    let omega = omega_classes(&m2, policy)?;
    println!(
        "graded M2 over F_3: |Z¹| = {}, |H¹| = {}, |Ω| = {}, |Ω/∼| = {}",
        h1.cocycles.len(),
        h1.order(),
        omega.maps.len(),
        omega.classes.len()
    );
    Ok(())
}
