// The canonical bimodule of a vector space family and the point that a
// representation defines in its Grassmannian.

use std::error::Error;

use qgrass::bimodule::{dim_vector_e, dim_vector_f, embed_representation, CanonicalBimodule};
use qgrass::exactalg::{Field, Matrix, Rationals};
use qgrass::quiver::{validate_quiver, PathQuiver};

pub fn run() -> Result<(), Box<dyn Error>> {
    let pq = PathQuiver::build(&validate_quiver(
        "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 2 3",
    )?);
    let dims = [1, 2, 1];
    let m = CanonicalBimodule::build(&pq, &dims)?;
    println!("dim M = {:?}", m.rep().dims());
    println!("f = {:?}", dim_vector_f(&pq, &dims));
    println!("e = {:?}", dim_vector_e(&pq, &dims));

    let q = Rationals;
    let va = Matrix::from_i64_rows(&q, &[&[1], &[2]]);
    let vb = Matrix::from_i64_rows(&q, &[&[3, -1]]);
    let point = embed_representation(&pq, &m, &q, &[va, vb])?;
    point.validate(pq.bound(), &m.rep().representation(&q), &dim_vector_e(&pq, &dims))?;
    let ab = pq.paths().iter().position(|p| p.len() == 2).unwrap();
    let basis = point.space(ab).basis();
    println!(
        "at a.b: {} vectors, first {:?}",
        basis.len(),
        basis[0].iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );
    assert!(q.is_one(&basis[0][0]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
