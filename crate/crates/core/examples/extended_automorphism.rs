// An automorphism outside the diagonal group that still acts trivially on
// cohomology, decided from its eigenvalues on the character spaces.
//
// ```text
// cargo run --example extended_automorphism
// ```

use std::error::Error;

use isoprod::constructions::{cyclic_aut0, cyclic_aut0_eigenvalues};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let table = cyclic_aut0_eigenvalues();
    for n in 1..=3 {
        let s = cyclic_aut0(n);
        let rec = s.invariants()?;
        println!("n={n}: g(C)={} g(D)={} chi={} K^2={}", rec.g_c, rec.g_d, rec.chi, rec.k2);
        for (chi, v, u) in s.eigen_dimensions()? {
            println!("  {chi}: dim H^1(C)^chi = {v}, dim H^1(D)^conj = {u}");
        }
        println!("  diagonal kernel order {}", rec.kernel_order());
        println!("  extended automorphism acts trivially: {}", s.extended_triviality(&table)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
