//! Reading fixture files and writing canonical ones.

use std::path::Path;

use leibxmod::cli::format::{encode, load, to_canonical_string, Object};
use leibxmod::fixtures;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    match load(&dir.join("n2_over_k.extension")) {
        Ok(Object::Extension { name, projection }) => {
            println!("{name}: {} -> {}", projection.source().name(), projection.target().name())
        }
        Ok(other) => println!("unexpected {}", other.kind()),
        Err(e) => println!("{e} (exit code {})", e.exit_code()),
    }
    if let Err(e) = load(&dir.join("bad_rational.algebra")) {
        println!("{e} (exit code {})", e.exit_code());
    }

    let xm = leibxmod::CrossedModule::identity(&fixtures::heisenberg());
    print!("{}", to_canonical_string(&encode(&Object::XMod(xm))));
}
