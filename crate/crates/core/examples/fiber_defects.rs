// Topological defects of singular fibers, the small-defect tables and
// the Euler-number ledger of a fibration.
//
// ```text
// cargo run --example fiber_defects
// ```

use std::error::Error;

use isoprod::fiber::{defect, euler_ledger};
use isoprod::{FiberModel, ReducedConfig, SingularPoint};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = 3;
    let models = vec![
        FiberModel::Smooth { h: 3 },
        FiberModel::ReducedConfig(ReducedConfig::nodal_irreducible(2, 1)),
        FiberModel::ReducedConfig(ReducedConfig::new(vec![1, 2], vec![SingularPoint { branches: vec![1, 1] }])?),
        FiberModel::MultipleOfSmooth { m: 2, h: 2 },
        FiberModel::ReducedConfig(ReducedConfig::nodal_irreducible(1, 2)),
        FiberModel::ReducedConfig(ReducedConfig::new(vec![0], vec![SingularPoint { branches: vec![3] }])?),
    ];
    for m in &models {
        let r = defect(m, g)?;
        println!(
            "{:<40} e={:>3} p_a={} delta={} {}",
            m.summary(),
            r.euler,
            r.arithmetic_genus,
            r.delta,
            r.classification.tag()
        );
    }
    let doubles = vec![FiberModel::MultipleOfSmooth { m: 2, h: 2 }; 4];
    println!("e(S) over an elliptic base with four double fibers: {}", euler_ledger(&doubles, g, 1)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
