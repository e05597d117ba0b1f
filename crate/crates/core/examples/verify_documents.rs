// Verifies every bundled construction document against its expected
// block, as `isoprod verify --check-expected` would.
//
// ```text
// cargo run --example verify_documents
// ```

use std::error::Error;
use std::path::Path;

use isoprod::document::{render_text, verify, ConstructionDocument};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)?.map(|e| e.map(|e| e.path())).collect::<Result<_, _>>()?;
    paths.sort();
    for path in paths.iter().filter(|p| p.extension().is_some_and(|x| x == "json")) {
        let doc = ConstructionDocument::parse(&std::fs::read_to_string(path)?)?;
        let report = verify(&doc);
        println!("== {}", path.file_name().unwrap().to_string_lossy());
        print!("{}", render_text(&report));
        if !report.is_valid() || !report.mismatches.is_empty() {
            return Err(format!("{} failed verification", path.display()).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
