// Finite abelian groups in invariant-factor form: normalization, element
// arithmetic, characters as exact rotation numbers, kernels and
// automorphisms.
//
// ```text
// cargo run --example abelian_groups
// ```

use std::error::Error;

use isoprod::AbelianGroup;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Z2 x Z3 x Z4 normalizes to Z2 x Z12
    let g = AbelianGroup::new(&[2, 3, 4])?;
    println!("Z2 x Z3 x Z4 = {g} (order {}, exponent {})", g.order(), g.exponent());

    let parsed: AbelianGroup = "Z2^3".parse()?;
    println!("abelian groups of order 8: {:?}", AbelianGroup::all_of_order(8).iter().map(ToString::to_string).collect::<Vec<_>>());

    let x = parsed.element(vec![1, 1, 0])?;
    let y = parsed.element(vec![0, 1, 1])?;
    println!("{x} + {y} = {}", parsed.add(&x, &y)?);

    let chi = parsed.character(vec![1, 1, 1])?;
    for e in parsed.elements() {
        println!("  {chi} at {e} = {}", parsed.char_eval(&chi, &e)?);
    }
    let ker = parsed.kernel(&chi)?;
    let elements: Vec<String> = ker.elements().iter().map(ToString::to_string).collect();
    println!("ker {chi} = {{{}}} of type {}", elements.join(", "), ker.isomorphism_type());

    let z2z4 = AbelianGroup::new(&[2, 4])?;
    let mixed = z2z4.subgroup_generated(&[z2z4.element(vec![1, 1])?])?;
    println!("<(1,1)> in {z2z4} has type {}", mixed.isomorphism_type());

    for grp in ["Z2^2", "Z2^3", "Z2xZ4", "Z8"] {
        let grp: AbelianGroup = grp.parse()?;
        println!("|Aut({grp})| = {}", grp.automorphisms()?.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
