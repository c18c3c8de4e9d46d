// Torus fixed points: one upper ideal per basis label.

use std::error::Error;

use qgrass::bimodule::QuiverGrassmannian;
use qgrass::fixedpoints::{decompose_fixed_point, enumerate_fixed_points, euler_characteristic};
use qgrass::quiver::{validate_quiver, PathQuiver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let pq = PathQuiver::build(&validate_quiver(
        "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 2 3",
    )?);
    let gr = QuiverGrassmannian::of_bimodule(&pq, &[1, 1, 1])?;
    for fp in enumerate_fixed_points(&gr) {
        let summands = decompose_fixed_point(&gr, &fp).summands.len();
        println!("{}   ({summands} summands)", fp.render(&gr));
    }
    println!("chi = {}", euler_characteristic(&gr));

    // Parallel paths: fixed points still make sense.
    let k = PathQuiver::build(&validate_quiver(
        "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 1 2; arrow c 2 3",
    )?);
    println!(
        "chi for 1=>2->3: {}",
        euler_characteristic(&QuiverGrassmannian::of_bimodule(&k, &[1, 1, 1])?)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
