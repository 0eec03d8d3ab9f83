//! The JSON files under `fixtures/` are the serialized builtins. Run with
//! `UPDATE_FIXTURES=1` to rewrite them after changing a builtin.

use std::path::PathBuf;

use hopf_galois::fixtures::builtin;
use hopf_galois::io::Bundle;

const FILES: &[&str] = &[
    "kc2", "kc4", "dual_kc2", "h4", "h4_f5", "m2_graded", "cp_minus1", "trivial_kxk", "dual_numbers", "broken_cocycle",
];

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

#[test]
fn fixture_files_match_builtins() {
    let update = std::env::var_os("UPDATE_FIXTURES").is_some();
    for name in FILES {
        let expected = builtin(name, None).unwrap().to_json();
        let p = path(name);
        if update {
            std::fs::write(&p, &expected).unwrap();
            continue;
        }
        let on_disk = std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(on_disk, expected, "{name}.json is stale; rerun with UPDATE_FIXTURES=1");
    }
}

#[test]
fn fixture_files_load() {
    for name in FILES {
        let b = Bundle::load(&path(name), None).unwrap();
        assert_eq!(b.to_json(), builtin(name, None).unwrap().to_json(), "{name}");
    }
}
