// Framed-moduli motives from the stratification recursion, checked against
// point counts of the matching Grassmannians.

use std::error::Error;

use qgrass::bimodule::QuiverGrassmannian;
use qgrass::cells::poincare_polynomial;
use qgrass::counting::DEFAULT_CAP;
use qgrass::motive::{consistency_check, identity_holds, recursion_solve, repvariety_motives};
use qgrass::quiver::{validate_quiver, PathQuiver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let pq = PathQuiver::build(&validate_quiver("vertex 1; vertex 2; arrow a 1 2")?);
    let dims = [1, 1];
    let rv = repvariety_motives(&pq, &dims, DEFAULT_CAP)?;
    let table = recursion_solve(&pq, &dims, &rv)?;
    for (g, m) in table.entries() {
        println!("{g:?} : {m}");
        assert!(identity_holds(&table, &pq, &dims, &rv, g)?);
    }
    let p = poincare_polynomial(&QuiverGrassmannian::of_bimodule(&pq, &dims)?, 0)?;
    let report = consistency_check(&table, &pq, &dims, Some(&p), DEFAULT_CAP)?;
    println!(
        "top = {}, matches counts: {}",
        table.top_polynomial().render("L"),
        report.passed()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
