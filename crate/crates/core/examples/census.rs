// Bounded census of `q = 1` product quotients over every abelian group
// of order at most 8, with the summary by kernel type and fiber genus.
//
// ```text
// cargo run --release --example census
// ```

use std::error::Error;

use isoprod::search::{run_census, SearchParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let census = run_census(&SearchParams::default())?;
    print!("{}", census.summary_table());
    for e in census.entries.iter().filter(|e| e.kernel_order == 4) {
        println!(
            "{}: chi={} fiber genus {:?} kernel {}",
            e.group, e.record.chi, e.record.albanese_fiber_genus, e.kernel_type
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
