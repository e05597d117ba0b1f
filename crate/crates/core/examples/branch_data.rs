// Branch data of abelian covers: validity, Riemann-Hurwitz genus,
// eigenspace dimensions of each character and the points with nontrivial
// stabilizer.
//
// ```text
// cargo run --example branch_data
// ```

use std::error::Error;

use isoprod::{AbelianGroup, CoverDatum};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = AbelianGroup::power(2, 2);
    let e1 = g.element(vec![1, 0])?;
    let e2 = g.element(vec![0, 1])?;

    // six branch points over P^1
    let d = CoverDatum::new(g.clone(), 0, vec![e1.clone(), e1.clone(), e1.clone(), e1.clone(), e2.clone(), e2.clone()])?;
    d.validate()?;
    println!("D: base genus 0, branch {:?}", d.branch().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("g(D) = {}", d.total_genus()?);
    for (chi, dim) in d.char_dims()? {
        println!("  dim H^1(D)^{chi} = {dim}");
    }
    let stab: Vec<String> = d.stabilizer_union().iter().map(ToString::to_string).collect();
    println!("elements with fixed points on D: {}", stab.join(", "));
    let h = g.subgroup_generated(&[g.element(vec![1, 1])?])?;
    println!("g(D/<(1,1)>) = {}", d.quotient_genus(&h)?);

    // a datum that sums to e1 cannot be a cover
    let bad = CoverDatum::new(g.clone(), 0, vec![e1.clone(), e2.clone(), e2])?;
    println!("invalid datum: {}", bad.validate().unwrap_err());

    // over an elliptic curve two handles generate whatever the branch misses
    let c = CoverDatum::new(g.clone(), 1, vec![g.element(vec![1, 1])?; 4])?;
    println!("g(C) = {} with {} branch points over an elliptic curve", c.total_genus()?, c.branch_count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
