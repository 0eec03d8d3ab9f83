//! Write a bundle of structure constants to JSON, read it back over another
//! field, and validate it.
//!
//!     cargo run --example bundle_io

use hopf_galois::commands::{validate, Options};
use hopf_galois::fixtures::builtin;
use hopf_galois::io::Bundle;
use hopf_galois::Field;

fn main() -> hopf_galois::Result<()> {
    let bundle = builtin("m2_graded", None)?;
    let text = bundle.to_json();
    println!("{} bytes of JSON, {} modules", text.len(), bundle.modules.len());

    let f5 = Bundle::parse(&text, Some(Field::Prime(5)))?;
    print!("{}", validate(&f5, &["m2_graded over F_5".into()], &Options::default()).to_text());

    // Corrupt one structure constant and let the loader name the broken axiom.
    let broken = text.replacen("\"0\",\n          \"1\"", "\"0\",\n          \"2\"", 1);
    if let Err(e) = Bundle::parse(&broken, None) {
        println!("rejected: {e}");
    }
    Ok(())
}
