use crate::quiver::{BoundArrow, BoundQuiver};

use super::{LabeledRep, QuiverGrassmannian};

/// The Grassmannian of sub-bimodules for the quiver `1 → 2`, `2 → 3`, `2 → 4`
/// written as a quiver Grassmannian of the alternating quiver
/// `V₂⊕V₃ → V₁⊕V₂⊕V₃ ← V₁⊕V₂ → V₁⊕V₂⊕V₄ ← V₂⊕V₄`
/// with dimension vector `(d₂, d₁+d₂, d₁, d₁+d₂, d₂)`.
///
/// Vertices are named after the paths they stand for, with arrows
/// `a: 1 → 2`, `b: 2 → 3`, `c: 2 → 4`.
pub fn d4_alternating_model(d: [usize; 4]) -> QuiverGrassmannian {
    let mut names = Vec::new();
    let mut first = [0; 4];
    for (i, &di) in d.iter().enumerate() {
        first[i] = names.len();
        names.extend((1..=di).map(|k| format!("{}.{}", i + 1, k)));
    }
    let block = |vs: &[usize]| -> Vec<usize> {
        vs.iter()
            .flat_map(|&i| first[i - 1]..first[i - 1] + d[i - 1])
            .collect()
    };
    let vertices = ["b", "a.b", "a", "a.c", "c"].map(String::from).to_vec();
    let basis = vec![
        block(&[2, 3]),
        block(&[1, 2, 3]),
        block(&[1, 2]),
        block(&[1, 2, 4]),
        block(&[2, 4]),
    ];
    let arrows = [(0, 1), (2, 1), (2, 3), (4, 3)]
        .map(|(source, target)| BoundArrow { source, target })
        .to_vec();
    let quiver = BoundQuiver::free(vertices, arrows).expect("the alternating quiver is acyclic");
    let rep = LabeledRep::new(quiver, names, basis).expect("inclusions preserve labels");
    let e = vec![d[1], d[0] + d[1], d[0], d[0] + d[1], d[1]];
    QuiverGrassmannian::new(rep, e).expect("e fits inside each space")
}
