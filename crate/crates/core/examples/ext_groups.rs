// Hom and Ext between representations of a bound quiver, and the Euler form.

use std::error::Error;

use qgrass::bimodule::{quotient_representation, sub_representation, CanonicalBimodule, QuiverGrassmannian};
use qgrass::exactalg::Rationals;
use qgrass::fixedpoints::enumerate_fixed_points;
use qgrass::homology::{euler_form, ext_dims};
use qgrass::quiver::{validate_quiver, PathQuiver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let pq = PathQuiver::build(&validate_quiver(
        "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 2 3",
    )?);
    let dims = [1, 1, 1];
    let q = Rationals;
    let cb = CanonicalBimodule::build(&pq, &dims)?;
    let m = cb.rep().representation(&q);
    let quiver = pq.bound();

    let self_ext = ext_dims(quiver, &m, &m)?;
    println!("Ext(M, M) = {self_ext:?}");

    let gr = QuiverGrassmannian::of_bimodule(&pq, &dims)?;
    for fp in enumerate_fixed_points(&gr) {
        let point = fp.to_point(&gr, &q);
        let n = sub_representation(quiver, &m, &point)?;
        let quot = quotient_representation(quiver, &m, &point)?;
        let ext = ext_dims(quiver, &n, &quot)?;
        let chi = euler_form(quiver, n.dims(), quot.dims())?;
        println!(
            "{:<40} hom {} ext1 {} ext2 {}  <,> = {chi}",
            fp.render(&gr),
            ext.hom,
            ext.ext1,
            ext.ext2
        );
        assert_eq!(ext.euler(), chi);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
