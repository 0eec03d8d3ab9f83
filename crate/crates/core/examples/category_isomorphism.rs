//! Transport morphisms between the convolution categories and relative Hopf
//! modules for Sweedler's four-dimensional Hopf algebra, then break the
//! transport on purpose and watch functoriality fail.
//!
//!     cargo run --example category_isomorphism

use hopf_galois::fixtures::{ground_module, h4_regular};
use hopf_galois::maintheorem::{CategoryIso, PairPolicy, Tamper};
use hopf_galois::Field;

fn main() -> hopf_galois::Result<()> {
    let h4 = h4_regular(Field::Rationals)?;
    let k = ground_module(&h4);
    let iso = CategoryIso::new(&h4, &k)?;
    for (class, plain, primed, rel) in iso.dimensions() {
        println!("{}: dim {plain} = {primed} = {rel}", class.name());
    }
    let checks = iso.verify(PairPolicy::default());
    println!("{} of {} checks pass", checks.iter().filter(|c| c.passed()).count(), checks.len());

    let broken = CategoryIso::new(&h4, &k)?.with_tamper(Tamper::OmitAntipodeInGamma12);
    for c in broken.verify(PairPolicy::default()).iter().filter(|c| !c.passed()) {
        println!("tampered: {} ({})", c.name, c.detail);
    }
    Ok(())
}
