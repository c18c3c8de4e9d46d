// Ranks and canonical subspaces over the rationals and over F_p.

use std::error::Error;

use qgrass::exactalg::{
    enumerate_subspaces, gaussian_binomial, Field, Matrix, PrimeField, Rationals, Subspace,
};

pub fn run() -> Result<(), Box<dyn Error>> {
    let q = Rationals;
    let m = Matrix::from_i64_rows(&q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let kernel = m.kernel();
    println!("rank {} kernel dim {}", m.rank(), kernel.dim());

    // Different spanning sets, same canonical form.
    let a = Subspace::span(&q, 3, vec![vec![q.from_i64(1), q.from_i64(1), q.from_i64(0)]]);
    let b = Subspace::span(&q, 3, vec![vec![q.from_i64(-3), q.from_i64(-3), q.from_i64(0)]]);
    assert_eq!(a, b);

    let f3 = PrimeField::new(3)?;
    let planes = enumerate_subspaces(&f3, 4, 2, &Subspace::zero(&f3, 4))?.count();
    println!("planes in F_3^4: {planes} = {:?}", gaussian_binomial(4, 2, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
