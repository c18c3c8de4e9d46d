use crate::exactalg::{Field, Matrix, Subspace};
use crate::quiver::{BoundQuiver, Extension, PathQuiver};

use super::BimoduleError;

/// A representation of a bound quiver: vertex dimensions and one matrix per
/// arrow (`dim target × dim source`), satisfying every square exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundRepresentation<F: Field> {
    field: F,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> BoundRepresentation<F> {
    pub fn new(
        quiver: &BoundQuiver,
        field: &F,
        dims: Vec<usize>,
        maps: Vec<Matrix<F>>,
    ) -> Result<Self, BimoduleError> {
        let rep = BoundRepresentation {
            field: field.clone(),
            dims,
            maps,
        };
        rep.validate(quiver)?;
        Ok(rep)
    }

    pub fn zero(quiver: &BoundQuiver, field: &F) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        BoundRepresentation {
            field: field.clone(),
            dims: vec![0; quiver.vertex_count()],
            maps,
        }
    }

    pub fn validate(&self, quiver: &BoundQuiver) -> Result<(), BimoduleError> {
        if self.dims.len() != quiver.vertex_count() {
            return Err(BimoduleError::DimensionMismatch {
                expected: quiver.vertex_count(),
                found: self.dims.len(),
            });
        }
        if self.maps.len() != quiver.arrows().len() {
            return Err(BimoduleError::DimensionMismatch {
                expected: quiver.arrows().len(),
                found: self.maps.len(),
            });
        }
        for (i, (a, m)) in quiver.arrows().iter().zip(&self.maps).enumerate() {
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(BimoduleError::ShapeMismatch { arrow: i });
            }
        }
        for (i, sq) in quiver.squares().iter().enumerate() {
            let left = self.maps[sq.a[1]].mul(&self.maps[sq.a[0]]);
            let right = self.maps[sq.b[1]].mul(&self.maps[sq.b[0]]);
            if left != right {
                return Err(BimoduleError::RelationViolated { square: i });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn direct_sum(&self, other: &Self, quiver: &BoundQuiver) -> Self {
        let f = &self.field;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, _)| {
                let (x, y) = (&self.maps[i], &other.maps[i]);
                Matrix::from_fn(f, x.rows() + y.rows(), x.cols() + y.cols(), |r, c| {
                    match (r < x.rows(), c < x.cols()) {
                        (true, true) => x.get(r, c).clone(),
                        (false, false) => y.get(r - x.rows(), c - x.cols()).clone(),
                        _ => f.zero(),
                    }
                })
            })
            .collect();
        BoundRepresentation {
            field: f.clone(),
            dims,
            maps,
        }
    }

    /// The bimodule `U ⊗ W` restricted to the path quiver, for a left module
    /// `U` (one `dim U_t × dim U_s` matrix per base arrow `s → t`) and a right
    /// module `W` (one `dim W_s × dim W_t` matrix per base arrow `s → t`).
    pub fn tensor(
        pq: &PathQuiver,
        field: &F,
        left: (&[usize], &[Matrix<F>]),
        right: (&[usize], &[Matrix<F>]),
    ) -> Result<Self, BimoduleError> {
        let base = pq.base();
        let (ud, um) = left;
        let (wd, wm) = right;
        for (i, a) in base.arrows().iter().enumerate() {
            let (u, w) = (&um[i], &wm[i]);
            if (u.rows(), u.cols()) != (ud[a.target], ud[a.source])
                || (w.rows(), w.cols()) != (wd[a.source], wd[a.target])
            {
                return Err(BimoduleError::ShapeMismatch { arrow: i });
            }
        }
        let dims: Vec<usize> = pq.paths().iter().map(|p| ud[p.target] * wd[p.source]).collect();
        let maps = pq
            .bound()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let p = pq.path(a.source);
                match pq.extension(i) {
                    Extension::Target(b) => um[b].kronecker(&Matrix::identity(field, wd[p.source])),
                    Extension::Source(b) => Matrix::identity(field, ud[p.target]).kronecker(&wm[b]),
                }
            })
            .collect();
        Self::new(pq.bound(), field, dims, maps)
    }
}

/// A tuple of subspaces, one per vertex of a representation.
#[derive(Debug, Clone, PartialEq)]
pub struct SubmodulePoint<F: Field> {
    spaces: Vec<Subspace<F>>,
}

impl<F: Field> SubmodulePoint<F> {
    pub fn new(spaces: Vec<Subspace<F>>) -> Self {
        SubmodulePoint { spaces }
    }

    pub fn spaces(&self) -> &[Subspace<F>] {
        &self.spaces
    }

    pub fn space(&self, v: usize) -> &Subspace<F> {
        &self.spaces[v]
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// Checks ambient dimensions and closure under every arrow.
    pub fn check_closed(
        &self,
        quiver: &BoundQuiver,
        m: &BoundRepresentation<F>,
    ) -> Result<(), BimoduleError> {
        if self.spaces.len() != quiver.vertex_count() {
            return Err(BimoduleError::DimensionMismatch {
                expected: quiver.vertex_count(),
                found: self.spaces.len(),
            });
        }
        for (v, s) in self.spaces.iter().enumerate() {
            if s.ambient() != m.dim(v) {
                return Err(BimoduleError::DimensionMismatch {
                    expected: m.dim(v),
                    found: s.ambient(),
                });
            }
        }
        for (i, a) in quiver.arrows().iter().enumerate() {
            let image = self.spaces[a.source].image(m.map(i));
            if !self.spaces[a.target].contains_subspace(&image) {
                return Err(BimoduleError::NotASubrepresentation { arrow: i });
            }
        }
        Ok(())
    }

    /// Closure plus the dimension vector `e`.
    pub fn validate(
        &self,
        quiver: &BoundQuiver,
        m: &BoundRepresentation<F>,
        e: &[usize],
    ) -> Result<(), BimoduleError> {
        self.check_closed(quiver, m)?;
        let dims = self.dim_vector();
        if dims != e {
            let v = (0..e.len()).find(|&v| dims.get(v) != e.get(v)).unwrap_or(0);
            return Err(BimoduleError::WrongDimension {
                vertex: v,
                expected: e.get(v).copied().unwrap_or(0),
                found: dims.get(v).copied().unwrap_or(0),
            });
        }
        Ok(())
    }
}

/// The subrepresentation carried by `n`, in the canonical bases of its spaces.
pub fn sub_representation<F: Field>(
    quiver: &BoundQuiver,
    m: &BoundRepresentation<F>,
    n: &SubmodulePoint<F>,
) -> Result<BoundRepresentation<F>, BimoduleError> {
    n.check_closed(quiver, m)?;
    let f = m.field();
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let (src, tgt) = (n.space(a.source), n.space(a.target));
            let mut out = Matrix::zeros(f, tgt.dim(), src.dim());
            for (j, b) in src.basis().iter().enumerate() {
                let image = m.map(i).apply(b);
                for (r, x) in tgt.coordinates(&image).into_iter().enumerate() {
                    out.set(r, j, x);
                }
            }
            out
        })
        .collect();
    BoundRepresentation::new(quiver, f, n.dim_vector(), maps)
}

/// `M/N`, with the standard basis vectors outside each pivot set as the
/// quotient basis.
pub fn quotient_representation<F: Field>(
    quiver: &BoundQuiver,
    m: &BoundRepresentation<F>,
    n: &SubmodulePoint<F>,
) -> Result<BoundRepresentation<F>, BimoduleError> {
    n.check_closed(quiver, m)?;
    let f = m.field();
    let complements: Vec<Vec<usize>> = n.spaces().iter().map(Subspace::complement_indices).collect();
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let (cs, ct) = (&complements[a.source], &complements[a.target]);
            let mut out = Matrix::zeros(f, ct.len(), cs.len());
            for (j, &c) in cs.iter().enumerate() {
                let image = n.space(a.target).reduce(&m.map(i).column(c));
                for (r, &t) in ct.iter().enumerate() {
                    out.set(r, j, image[t].clone());
                }
            }
            out
        })
        .collect();
    let dims = complements.iter().map(Vec::len).collect();
    BoundRepresentation::new(quiver, f, dims, maps)
}
