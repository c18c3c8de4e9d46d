//! The canonical bimodule, with the representations and Grassmannian points
//! built from it.

mod canonical;
mod labeled;
mod models;
mod representation;

pub use canonical::{
    dim_vector_e, dim_vector_f, dim_vector_m, dim_vector_n, embed_representation, BasisLabel,
    CanonicalBimodule,
};
pub use labeled::{LabeledRep, QuiverGrassmannian};
pub use models::d4_alternating_model;
pub use representation::{quotient_representation, sub_representation, BoundRepresentation, SubmodulePoint};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BimoduleError {
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix for arrow {arrow} has the wrong shape")]
    ShapeMismatch { arrow: usize },
    #[error("relation square {square} is violated")]
    RelationViolated { square: usize },
    #[error("label {label} repeated or unknown at vertex {vertex}")]
    BadLabel { vertex: usize, label: usize },
    #[error("arrow {arrow} does not carry label {label} to its target")]
    NotLabelPreserving { arrow: usize, label: usize },
    #[error("subspaces are not closed under arrow {arrow}")]
    NotASubrepresentation { arrow: usize },
    #[error("vertex {vertex}: subspace of dimension {found}, expected {expected}")]
    WrongDimension {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {vertex}: dimension {requested} exceeds the space's {available}")]
    DimensionTooLarge {
        vertex: usize,
        requested: usize,
        available: usize,
    },
    #[error("the base quiver has parallel paths")]
    ParallelPathsUnsupported,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Field, Matrix, Rationals, Subspace};
    use crate::quiver::{validate_quiver, PathQuiver};

    fn pq(text: &str) -> PathQuiver {
        PathQuiver::build(&validate_quiver(text).unwrap())
    }

    const A2: &str = "vertex 1; vertex 2; arrow a 1 2";
    const A3: &str = "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 2 3";
    const K: &str = "vertex 1; vertex 2; vertex 3; arrow a 1 2; arrow b 1 2; arrow c 2 3";

    #[test]
    fn a2_canonical_bimodule() {
        let p = pq(A2);
        let m = CanonicalBimodule::build(&p, &[1, 1]).unwrap();
        assert_eq!(m.rep().dims(), vec![1, 1, 2]);
        let q = Rationals;
        assert_eq!(
            m.rep().arrow_matrix(&q, 0),
            Matrix::from_i64_rows(&q, &[&[1], &[0]])
        );
        assert_eq!(
            m.rep().arrow_matrix(&q, 1),
            Matrix::from_i64_rows(&q, &[&[0], &[1]])
        );
    }

    #[test]
    fn a3_full_path_dimension() {
        let p = pq(A3);
        let m = CanonicalBimodule::build(&p, &[2, 1, 3]).unwrap();
        assert_eq!(m.rep().dim(5), 6);
    }

    #[test]
    fn parallel_example_dimensions() {
        let p = pq(K);
        let m = CanonicalBimodule::build(&p, &[1, 1, 1]).unwrap();
        assert_eq!(m.rep().dims(), vec![1, 1, 1, 2, 2, 2, 3, 3]);
        assert_eq!(dim_vector_e(&p, &[1, 1, 1]), vec![0, 0, 0, 1, 1, 1, 2, 2]);
        // relations hold for the inclusion matrices
        m.rep().representation(&Rationals);
    }

    #[test]
    fn f_and_e_vectors() {
        let p = pq(A2);
        assert_eq!(dim_vector_f(&p, &[1, 1]), vec![1, 1, 1]);
        assert_eq!(dim_vector_e(&p, &[1, 1]), vec![0, 0, 1]);
        let single = pq("vertex 1");
        assert_eq!(dim_vector_f(&single, &[4]), vec![4]);
        assert_eq!(dim_vector_e(&single, &[4]), vec![0]);
    }

    #[test]
    fn a3_e_table() {
        // pair (i, j) = path from j to i: (2,1) = a, (3,2) = b, (3,1) = a.b
        let p = pq(A3);
        let d = [2, 3, 5];
        let e = dim_vector_e(&p, &d);
        assert_eq!(&e[..3], &[0, 0, 0]);
        assert_eq!(e[3], 2);
        assert_eq!(e[4], 3);
        assert_eq!(e[5], 5);
    }

    #[test]
    fn n_vector() {
        let p = pq(A2);
        assert_eq!(dim_vector_n(&p, &[1, 1]).unwrap(), vec![0, 0, 1]);
        let p3 = pq(A3);
        let n = dim_vector_n(&p3, &[1, 1, 1]).unwrap();
        let m = dim_vector_m(&p3, &[1, 1, 1]);
        let f = dim_vector_f(&p3, &[1, 1, 1]);
        assert!((0..6).all(|v| m[v] - n[v] == f[v]));
        assert_eq!(
            dim_vector_n(&pq("vertex 1; vertex 2"), &[3, 2]).unwrap(),
            vec![0, 0]
        );
        assert_eq!(
            dim_vector_n(&pq(K), &[1, 1, 1]),
            Err(BimoduleError::ParallelPathsUnsupported)
        );
    }

    #[test]
    fn embedding_a2() {
        let p = pq(A2);
        let q = Rationals;
        let m = CanonicalBimodule::build(&p, &[1, 1]).unwrap();
        let lambda = q.from_i64(7);
        let v = Matrix::from_fn(&q, 1, 1, |_, _| lambda.clone());
        let pt = embed_representation(&p, &m, &q, &[v]).unwrap();
        assert_eq!(pt.space(0).dim(), 0);
        assert_eq!(pt.space(1).dim(), 0);
        assert_eq!(pt.space(2), &Subspace::span(&q, 2, vec![vec![q.one(), lambda]]));
    }

    #[test]
    fn embedding_zero_maps_is_coordinate() {
        let p = pq(K);
        let q = Rationals;
        let m = CanonicalBimodule::build(&p, &[1, 1, 1]).unwrap();
        let zeros: Vec<_> = (0..3).map(|_| Matrix::zeros(&q, 1, 1)).collect();
        let pt = embed_representation(&p, &m, &q, &zeros).unwrap();
        let e = dim_vector_e(&p, &[1, 1, 1]);
        pt.validate(p.bound(), &m.rep().representation(&q), &e).unwrap();
        for v in 0..p.vertex_count() {
            let target = p.path(v).target;
            let keep: Vec<usize> = m
                .rep()
                .basis(v)
                .iter()
                .copied()
                .filter(|&r| m.labels()[r].origin != target)
                .collect();
            assert_eq!(pt.space(v), &m.rep().coordinate_subspace(&q, v, keep));
        }
    }

    #[test]
    fn embedding_a3_identity_chain() {
        let p = pq(A3);
        let q = Rationals;
        let m = CanonicalBimodule::build(&p, &[1, 1, 1]).unwrap();
        let id = vec![Matrix::identity(&q, 1), Matrix::identity(&q, 1)];
        let pt = embed_representation(&p, &m, &q, &id).unwrap();
        let v = |x: &[i64]| x.iter().map(|&a| q.from_i64(a)).collect::<Vec<_>>();
        assert_eq!(
            pt.space(5),
            &Subspace::span(&q, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])])
        );
    }

    #[test]
    fn quotients() {
        let p = pq(A2);
        let q = Rationals;
        let m = CanonicalBimodule::build(&p, &[1, 1]).unwrap();
        let mr = m.rep().representation(&q);
        let bq = p.bound();

        let zero = SubmodulePoint::new((0..3).map(|v| Subspace::zero(&q, mr.dim(v))).collect());
        assert_eq!(quotient_representation(bq, &mr, &zero).unwrap(), mr);

        let full = SubmodulePoint::new((0..3).map(|v| Subspace::full(&q, mr.dim(v))).collect());
        let quot = quotient_representation(bq, &mr, &full).unwrap();
        assert_eq!(quot.dims(), &[0, 0, 0]);

        // I_a = {r1}
        let n = SubmodulePoint::new(vec![
            Subspace::zero(&q, 1),
            Subspace::zero(&q, 1),
            m.rep().coordinate_subspace(&q, 2, [0]),
        ]);
        let quot = quotient_representation(bq, &mr, &n).unwrap();
        assert_eq!(quot.dims(), &[1, 1, 1]);
        assert!(quot.map(0).is_zero());
        assert_eq!(quot.map(1), &Matrix::identity(&q, 1));

        let bad = SubmodulePoint::new(vec![
            Subspace::full(&q, 1),
            Subspace::zero(&q, 1),
            m.rep().coordinate_subspace(&q, 2, [1]),
        ]);
        assert!(matches!(
            quotient_representation(bq, &mr, &bad),
            Err(BimoduleError::NotASubrepresentation { .. })
        ));
    }

    #[test]
    fn sub_representation_of_fixed_point() {
        let p = pq(A2);
        let q = Rationals;
        let m = CanonicalBimodule::build(&p, &[1, 1]).unwrap();
        let mr = m.rep().representation(&q);
        let n = SubmodulePoint::new(vec![
            Subspace::full(&q, 1),
            Subspace::zero(&q, 1),
            m.rep().coordinate_subspace(&q, 2, [0]),
        ]);
        let sub = sub_representation(p.bound(), &mr, &n).unwrap();
        assert_eq!(sub.dims(), &[1, 0, 1]);
        assert_eq!(sub.map(0), &Matrix::identity(&q, 1));
    }

    #[test]
    fn tensor_bimodules_satisfy_relations() {
        let p = pq(A3);
        let q = Rationals;
        let u = vec![
            Matrix::from_i64_rows(&q, &[&[1, 2]]),
            Matrix::from_i64_rows(&q, &[&[3], &[1]]),
        ];
        let w = vec![
            Matrix::from_i64_rows(&q, &[&[1], &[-1]]),
            Matrix::from_i64_rows(&q, &[&[2]]),
        ];
        let x = BoundRepresentation::tensor(&p, &q, (&[2, 1, 2], &u), (&[2, 1, 1], &w)).unwrap();
        assert_eq!(x.dims(), &[4, 1, 2, 2, 2, 4]);
    }

    #[test]
    fn label_preservation_is_checked() {
        use crate::quiver::{BoundArrow, BoundQuiver};
        let bq = BoundQuiver::free(
            vec!["x".into(), "y".into()],
            vec![BoundArrow { source: 0, target: 1 }],
        )
        .unwrap();
        let err = LabeledRep::new(bq, vec!["r".into(), "s".into()], vec![vec![0], vec![1]]);
        assert_eq!(
            err.err(),
            Some(BimoduleError::NotLabelPreserving { arrow: 0, label: 0 })
        );
    }
}
