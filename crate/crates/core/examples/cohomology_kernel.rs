// Invariants of `(C x D)/G` and the subgroup of `G` acting trivially on
// cohomology, for the two `Z2^3` families with `q = 1`.
//
// ```text
// cargo run --example cohomology_kernel
// ```

use std::error::Error;

use isoprod::constructions::{fiber_genus_five, fiber_genus_three};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for r in 1..=2 {
        for (label, s) in [("fiber genus 5", fiber_genus_five(r)), ("fiber genus 3", fiber_genus_three(r))] {
            let rec = s.invariants()?;
            let kernel: Vec<String> = rec.trivial_kernel.elements().iter().map(ToString::to_string).collect();
            println!(
                "{label}, r={r}: g(C)={} g(D)={} q={} chi={} K^2={} p_g={} e={} h2={}",
                rec.g_c,
                rec.g_d,
                rec.q,
                rec.chi,
                rec.k2,
                rec.pg,
                rec.e,
                s.h2_dimension()?
            );
            let chars: Vec<String> = s.doubly_nonzero_characters()?.iter().map(ToString::to_string).collect();
            println!("  characters seen by H^2: {}", chars.join(", "));
            println!("  trivial kernel {{{}}} of type {}", kernel.join(", "), rec.trivial_kernel_type);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
