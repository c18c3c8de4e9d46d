// Bialynicki-Birula cells: tangent weights at each fixed point and the
// Poincaré polynomial they add up to.

use std::error::Error;

use qgrass::bimodule::QuiverGrassmannian;
use qgrass::cells::{check_smooth, generic_cocharacter, poincare_polynomial, tangent_profile};
use qgrass::fixedpoints::enumerate_fixed_points;
use qgrass::quiver::{validate_quiver, PathQuiver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let pq = PathQuiver::build(&validate_quiver("vertex 1; vertex 2; arrow a 1 2")?);
    let gr = QuiverGrassmannian::of_bimodule(&pq, &[2, 2])?;

    let report = check_smooth(&gr)?;
    println!(
        "{} fixed points, expected dim {}, certified: {}",
        report.fixed_points,
        report.expected_dimension,
        report.passed()
    );

    let cochar = generic_cocharacter(gr.rep().label_count(), 0);
    for fp in enumerate_fixed_points(&gr) {
        let t = tangent_profile(&gr, &fp, &cochar);
        println!("{:<36} cell dim {}", fp.render(&gr), t.plus);
    }
    for seed in [0, 1, 2] {
        println!("seed {seed}: P = {}", poincare_polynomial(&gr, seed)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
