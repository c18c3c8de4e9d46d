// Parse a quiver, build its quiver of paths and walk the upper ideals.

use std::error::Error;

use qgrass::quiver::{validate_quiver, PathQuiver, Resolution};
use qgrass::vertex_set::VertexSet;

pub fn run() -> Result<(), Box<dyn Error>> {
    let q = validate_quiver("vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 2 3")?;
    let pq = PathQuiver::build(&q);
    let bound = pq.bound();
    println!(
        "{} paths, {} arrows, {} squares",
        pq.vertex_count(),
        bound.arrows().len(),
        bound.squares().len()
    );
    for v in 0..pq.vertex_count() {
        println!("  {}", bound.name(v));
    }
    assert_eq!(bound.resolution(), Resolution::Length2);

    let everything = VertexSet::from_indices(0..pq.vertex_count());
    let ideals = bound.upper_ideals(&everything)?.count();
    println!("upper ideals: {ideals}");

    let kronecker = validate_quiver("vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 1 2; arrow c 2 3")?;
    println!("parallel paths in 1=>2->3: {}", kronecker.has_parallel_paths());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
