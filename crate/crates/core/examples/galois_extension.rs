//! Decide whether a comodule algebra is Hopf-Galois and print its translation map.
//!
//!     cargo run --example galois_extension

use hopf_galois::fixtures::{graded_m2, trivial_kxk};
use hopf_galois::galois::{canonical_map, GaloisExtension};
use hopf_galois::Field;

fn main() -> hopf_galois::Result<()> {
    let q = Field::Rationals;

    // M_2(k) graded by C_2: diagonal matrices in degree 0, off-diagonal in degree 1.
    let m2 = graded_m2(q);
    let g = GaloisExtension::new(&m2)?;
    println!("graded M2: dim A = {}, dim B = {}", m2.dim(), m2.coinvariants().dim());
    println!("translation map representatives (columns indexed by H):\n{}", g.representatives());
    for c in g.verify_translation_identities() {
        println!("  {:?} {}", c.status, c.name);
    }

    // k×k with the trivial coaction has B = A, so can cannot be injective.
    let can = canonical_map(&trivial_kxk(q))?;
    println!("k×k with trivial coaction is Galois: {}", can.is_galois());
    Ok(())
}
