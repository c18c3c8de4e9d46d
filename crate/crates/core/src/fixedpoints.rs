//! Torus fixed points of a quiver Grassmannian of a labeled representation.
//!
//! A fixed point is a coordinate subrepresentation. It is stored per label as
//! the set `C_r` of vertices whose subspace contains the basis vector `r`,
//! which must be an upper ideal of the label's support.

use rayon::prelude::*;

use crate::bimodule::{QuiverGrassmannian, SubmodulePoint};
use crate::exactalg::Field;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPoint {
    ideals: Vec<VertexSet>,
}

impl FixedPoint {
    pub fn from_ideals(ideals: Vec<VertexSet>) -> Self {
        FixedPoint { ideals }
    }

    /// `C_r` for every label `r`.
    pub fn ideals(&self) -> &[VertexSet] {
        &self.ideals
    }

    pub fn ideal(&self, label: usize) -> &VertexSet {
        &self.ideals[label]
    }

    /// Labels spanning the subspace at each vertex, ascending.
    pub fn vertex_labels(&self, vertex_count: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); vertex_count];
        for (r, c) in self.ideals.iter().enumerate() {
            for v in c.iter() {
                out[v].push(r);
            }
        }
        out
    }

    pub fn to_point<F: Field>(&self, gr: &QuiverGrassmannian, field: &F) -> SubmodulePoint<F> {
        let rep = gr.rep();
        let spaces = self
            .vertex_labels(rep.quiver().vertex_count())
            .into_iter()
            .enumerate()
            .map(|(v, labels)| rep.coordinate_subspace(field, v, labels))
            .collect();
        SubmodulePoint::new(spaces)
    }

    /// Checks the ideal and cardinality conditions.
    pub fn is_valid(&self, gr: &QuiverGrassmannian) -> bool {
        let rep = gr.rep();
        let q = rep.quiver();
        self.ideals.len() == rep.label_count()
            && self
                .ideals
                .iter()
                .enumerate()
                .all(|(r, c)| q.is_upper_ideal(&support(gr, r), c))
            && self
                .vertex_labels(q.vertex_count())
                .iter()
                .zip(gr.e())
                .all(|(l, &e)| l.len() == e)
    }

    /// One line: `vertex: {labels}` for every vertex with nonzero `e`.
    pub fn render(&self, gr: &QuiverGrassmannian) -> String {
        let rep = gr.rep();
        let q = rep.quiver();
        self.vertex_labels(q.vertex_count())
            .iter()
            .enumerate()
            .filter(|&(v, _)| gr.e()[v] > 0)
            .map(|(v, labels)| {
                let names: Vec<&str> = labels.iter().map(|&r| rep.label_name(r)).collect();
                format!("{}: {{{}}}", q.name(v), names.join(", "))
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// The multiset of indecomposable upper ideals `C` with `N ≅ ⊕ M(C)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPointType {
    pub summands: Vec<VertexSet>,
}

/// Vertices whose basis contains `label`.
pub fn support(gr: &QuiverGrassmannian, label: usize) -> VertexSet {
    gr.rep().support(label)
}

pub fn decompose_fixed_point(gr: &QuiverGrassmannian, fp: &FixedPoint) -> FixedPointType {
    let q = gr.quiver();
    let mut summands: Vec<VertexSet> = fp.ideals().iter().flat_map(|c| q.decompose_ideal(c)).collect();
    summands.sort();
    FixedPointType { summands }
}

/// Labels by decreasing support size, ties by index.
pub fn default_label_order(gr: &QuiverGrassmannian) -> Vec<usize> {
    let mut order: Vec<usize> = (0..gr.rep().label_count()).collect();
    order.sort_by_key(|&r| std::cmp::Reverse(support(gr, r).len()));
    order
}

/// All fixed points, sorted by their ideal tuples.
pub fn enumerate_fixed_points(gr: &QuiverGrassmannian) -> Vec<FixedPoint> {
    let mut fps = enumerate_fixed_points_in_order(gr, &default_label_order(gr));
    fps.sort();
    fps
}

pub fn euler_characteristic(gr: &QuiverGrassmannian) -> usize {
    enumerate_fixed_points(gr).len()
}

struct Search<'a> {
    gr: &'a QuiverGrassmannian,
    order: &'a [usize],
    supports: Vec<VertexSet>,
    /// `remaining[k][v]`: labels at positions `≥ k` whose support holds `v`.
    remaining: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Vertices that may still join `C_r`: no vertex above them is full.
    fn allowed(&self, r: usize, counts: &[usize]) -> VertexSet {
        let q = self.gr.quiver();
        let e = self.gr.e();
        let supp = &self.supports[r];
        supp.iter()
            .filter(|&v| q.up_set(v).intersection(supp).iter().all(|w| counts[w] < e[w]))
            .collect()
    }

    fn feasible_start(&self) -> bool {
        self.remaining[0].iter().zip(self.gr.e()).all(|(&r, &e)| r >= e)
    }

    /// After filling position `k`, every vertex can still reach its target.
    fn feasible(&self, k: usize, counts: &[usize]) -> bool {
        let rem = &self.remaining[k + 1];
        counts
            .iter()
            .zip(self.gr.e())
            .zip(rem)
            .all(|((&c, &e), &r)| c <= e && c + r >= e)
    }

    fn choices(&self, k: usize, counts: &[usize]) -> Vec<VertexSet> {
        let r = self.order[k];
        let allowed = self.allowed(r, counts);
        let ideals = self
            .gr
            .quiver()
            .upper_ideals(&allowed)
            .expect("allowed sets are arrow-closed");
        ideals
            .filter(|c| {
                let mut next = counts.to_vec();
                c.iter().for_each(|v| next[v] += 1);
                self.feasible(k, &next)
            })
            .collect()
    }

    fn run(&self, k: usize, counts: &mut Vec<usize>, chosen: &mut Vec<VertexSet>, out: &mut Vec<FixedPoint>) {
        if k == self.order.len() {
            let mut ideals = vec![VertexSet::new(); self.order.len()];
            for (pos, &r) in self.order.iter().enumerate() {
                ideals[r] = chosen[pos].clone();
            }
            out.push(FixedPoint { ideals });
            return;
        }
        for c in self.choices(k, counts) {
            c.iter().for_each(|v| counts[v] += 1);
            chosen.push(c);
            self.run(k + 1, counts, chosen, out);
            let c = chosen.pop().unwrap();
            c.iter().for_each(|v| counts[v] -= 1);
        }
    }
}

/// Backtracking search processing labels in the given order. The first
/// level is explored in parallel and merged in sequential order.
pub fn enumerate_fixed_points_in_order(gr: &QuiverGrassmannian, order: &[usize]) -> Vec<FixedPoint> {
    let rep = gr.rep();
    let n = rep.quiver().vertex_count();
    assert_eq!(order.len(), rep.label_count(), "order must list every label once");
    let supports: Vec<VertexSet> = (0..rep.label_count()).map(|r| support(gr, r)).collect();
    let mut remaining = vec![vec![0; n]; order.len() + 1];
    for k in (0..order.len()).rev() {
        remaining[k] = remaining[k + 1].clone();
        supports[order[k]].iter().for_each(|v| remaining[k][v] += 1);
    }
    let search = Search {
        gr,
        order,
        supports,
        remaining,
    };
    let counts = vec![0; n];
    if order.is_empty() {
        return if gr.e().iter().all(|&e| e == 0) {
            vec![FixedPoint { ideals: Vec::new() }]
        } else {
            Vec::new()
        };
    }
    if !search.feasible_start() {
        return Vec::new();
    }
    search
        .choices(0, &counts)
        .into_par_iter()
        .map(|c| {
            let mut counts = counts.clone();
            c.iter().for_each(|v| counts[v] += 1);
            let mut chosen = vec![c];
            let mut out = Vec::new();
            search.run(1, &mut counts, &mut chosen, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::{BasisLabel, CanonicalBimodule};
    use crate::exactalg::Rationals;
    use crate::quiver::{validate_quiver, PathQuiver};

    fn grass(text: &str, d: &[usize]) -> (PathQuiver, QuiverGrassmannian) {
        let p = PathQuiver::build(&validate_quiver(text).unwrap());
        let g = QuiverGrassmannian::of_bimodule(&p, d).unwrap();
        (p, g)
    }

    const A2: &str = "vertex 1; vertex 2; arrow a 1 2";
    const A3: &str = "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 2 3";
    const K: &str = "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 1 2; arrow c 2 3";

    /// Subsets of size `k` of `items`.
    fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if items.len() < k {
            return vec![];
        }
        let mut with: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
            .into_iter()
            .map(|mut s| {
                s.insert(0, items[0]);
                s
            })
            .collect();
        with.extend(subsets(&items[1..], k));
        with
    }

    /// Exhaustive count of coordinate subrepresentations of dimension `e`.
    fn coordinate_oracle(gr: &QuiverGrassmannian) -> usize {
        let rep = gr.rep();
        let q = rep.quiver();
        let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![]];
        for v in 0..q.vertex_count() {
            let opts = subsets(rep.basis(v), gr.e()[v]);
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    opts.iter().map(move |o| {
                        let mut p = p.clone();
                        p.push(o.clone());
                        p
                    })
                })
                .filter(|p| {
                    q.arrows().iter().all(|a| {
                        a.source >= p.len()
                            || a.target >= p.len()
                            || p[a.source].iter().all(|r| p[a.target].contains(r))
                    })
                })
                .collect();
        }
        partial.len()
    }

    fn names(p: &PathQuiver, s: VertexSet) -> Vec<&str> {
        s.iter().map(|v| p.name(v)).collect()
    }

    #[test]
    fn supports() {
        let (p, g) = grass(A2, &[1, 1]);
        assert_eq!(names(&p, support(&g, 0)), ["e(1)", "a"]);
        let (p, g) = grass(K, &[1, 1, 1]);
        assert_eq!(names(&p, support(&g, 1)), ["e(2)", "a", "b", "c", "a.c", "b.c"]);
        assert_eq!(names(&p, support(&g, 2)), ["e(3)", "c", "a.c", "b.c"]);
    }

    #[test]
    fn counts() {
        assert_eq!(euler_characteristic(&grass(A2, &[1, 1]).1), 2);
        assert_eq!(euler_characteristic(&grass(A3, &[1, 1, 1]).1), 5);
        assert_eq!(euler_characteristic(&grass(K, &[1, 1, 1]).1), 13);
        assert_eq!(euler_characteristic(&grass("vertex 1", &[5]).1), 1);
        assert_eq!(
            euler_characteristic(&grass("vertex 1; vertex 2; arrow a 2 1", &[2, 2]).1),
            6
        );
        assert_eq!(euler_characteristic(&grass("vertex 1; vertex 2", &[0, 0]).1), 1);
    }

    #[test]
    fn matches_coordinate_oracle() {
        let cases: [(&str, &[usize]); 6] = [
            (A2, &[1, 2]),
            (A3, &[1, 1, 1]),
            (A3, &[2, 1, 1]),
            (K, &[1, 1, 1]),
            (
                "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 3 2",
                &[1, 2, 1],
            ),
            ("vertex 1; vertex 2; arrow a 1 2", &[2, 2]),
        ];
        for (text, d) in cases {
            let (_, g) = grass(text, d);
            let fps = enumerate_fixed_points(&g);
            assert_eq!(fps.len(), coordinate_oracle(&g), "{text} {d:?}");
            assert!(fps.iter().all(|fp| fp.is_valid(&g)));
            let mut sorted = fps.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), fps.len());
        }
    }

    #[test]
    fn label_order_does_not_change_the_set() {
        let (_, g) = grass(K, &[1, 1, 1]);
        let mut a = enumerate_fixed_points(&g);
        let mut b = enumerate_fixed_points_in_order(&g, &[2, 0, 1]);
        assert_eq!(a.len(), b.len());
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn a2_points_and_types() {
        let (p, g) = grass(A2, &[1, 1]);
        let fps = enumerate_fixed_points(&g);
        let arrow = p.vertex_by_name("a").unwrap();
        let rendered: Vec<String> = fps.iter().map(|fp| fp.render(&g)).collect();
        assert_eq!(rendered, ["a: {2.1}", "a: {1.1}"]);
        for fp in &fps {
            let ty = decompose_fixed_point(&g, fp);
            assert_eq!(ty.summands, vec![VertexSet::from_indices([arrow])]);
            let q = Rationals;
            let m = g.rep().representation(&q);
            fp.to_point(&g, &q).validate(g.quiver(), &m, g.e()).unwrap();
        }
        let (_, z) = grass("vertex 1; vertex 2", &[1, 1]);
        let fps = enumerate_fixed_points(&z);
        assert_eq!(decompose_fixed_point(&z, &fps[0]).summands, vec![]);
    }

    #[test]
    fn types_have_total_size_of_e() {
        let (p, g) = grass(K, &[1, 1, 1]);
        let cb = CanonicalBimodule::build(&p, &[1, 1, 1]).unwrap();
        assert_eq!(cb.labels()[2], BasisLabel { origin: 2, index: 1 });
        let total: usize = g.e().iter().sum();
        for fp in enumerate_fixed_points(&g) {
            let ty = decompose_fixed_point(&g, &fp);
            assert_eq!(ty.summands.iter().map(VertexSet::len).sum::<usize>(), total);
            assert!(ty
                .summands
                .iter()
                .all(|c| g.quiver().decompose_ideal(c).len() == 1));
        }
    }
}
