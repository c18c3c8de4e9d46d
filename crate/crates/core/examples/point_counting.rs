// Points over prime fields and the counting polynomial, here for a quiver
// with two parallel paths where no cell decomposition is available.

use std::error::Error;

use qgrass::bimodule::QuiverGrassmannian;
use qgrass::counting::{count_repvariety_points, grassmannian_polynomial, DEFAULT_CAP};
use qgrass::quiver::{validate_quiver, PathQuiver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let pq = PathQuiver::build(&validate_quiver(
        "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 1 2; arrow c 2 3",
    )?);
    let gr = QuiverGrassmannian::of_bimodule(&pq, &[1, 1, 1])?;
    let (samples, fit) = grassmannian_polynomial(&gr, Some(&[2, 3, 5, 7, 11]), DEFAULT_CAP)?;
    for s in &samples {
        println!("q = {:>2}: {}", s.q, s.count);
    }
    let fit = fit?;
    println!(
        "polynomial {} (checked at {} held-out primes)",
        fit.polynomial,
        fit.verification.len()
    );

    // Representations of the path quiver with all dimensions one.
    let g = vec![1; pq.vertex_count()];
    println!(
        "reps over F_2: {}",
        count_repvariety_points(pq.bound(), &g, 2, DEFAULT_CAP)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
