// The D4 Grassmannian next to its model on an alternating A5 quiver.
//
// With every d_i positive the variety is singular: one fixed point has a
// tangent space that is too big and the point count is not palindromic.
// Both models agree on all of it.

use std::error::Error;

use qgrass::bimodule::{d4_alternating_model, QuiverGrassmannian};
use qgrass::cells::{check_smooth, poincare_polynomial};
use qgrass::counting::{grassmannian_polynomial, DEFAULT_CAP};
use qgrass::fixedpoints::euler_characteristic;
use qgrass::quiver::{validate_quiver, PathQuiver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let pq = PathQuiver::build(&validate_quiver(
        "vertex 1; vertex 2; vertex 3; vertex 4; arrow a 1 2; arrow b 2 3; arrow c 2 4",
    )?);
    for d in [[1, 1, 1, 1], [0, 2, 1, 1]] {
        let d4 = QuiverGrassmannian::of_bimodule(&pq, &d)?;
        let a5 = d4_alternating_model(d);
        println!("d = {d:?}");
        println!(
            "  chi: {} vs {}",
            euler_characteristic(&d4),
            euler_characteristic(&a5)
        );
        let count =
            |gr| grassmannian_polynomial(gr, None, DEFAULT_CAP).map(|(_, fit)| fit.map(|f| f.polynomial));
        println!("  counted: {} vs {}", count(&d4)??, count(&a5)??);
        let bad = check_smooth(&d4)?.violations.len();
        match (poincare_polynomial(&d4, 0), poincare_polynomial(&a5, 0)) {
            (Ok(p), Ok(r)) => println!("  cells: {p} vs {r}"),
            (p, _) => println!("  cells refused ({bad} bad fixed points): {}", p.unwrap_err()),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
