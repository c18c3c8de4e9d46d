//! Hom and Ext between bound representations, read off the complex
//! `C⁰ → C¹ → C²` of the bound quiver.
//!
//! Morphism blocks are vectorized row-major, so `φ ↦ AφB` acts as `A ⊗ Bᵀ`.

use thiserror::Error;

use crate::bimodule::BoundRepresentation;
use crate::exactalg::{Field, Matrix};
use crate::quiver::{BoundQuiver, PathQuiver, Resolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("Ext needs a length-two resolution; the base quiver has parallel paths")]
    ParallelPathsUnsupported,
    #[error("dimension vectors have {found} entries, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtDims {
    pub hom: usize,
    pub ext1: usize,
    pub ext2: usize,
}

impl ExtDims {
    pub fn euler(&self) -> i64 {
        self.hom as i64 - self.ext1 as i64 + self.ext2 as i64
    }
}

/// The complex computing `Ext^i(X, Y)` for `i ≤ 2`.
#[derive(Debug, Clone)]
pub struct HomComplex<F: Field> {
    pub c0: usize,
    pub c1: usize,
    pub c2: usize,
    /// `(d⁰φ)_a = Y_a φ_u − φ_v X_a` for `a: u → v`.
    pub d0: Matrix<F>,
    /// `(d¹ψ)_sq = Y_{a₂}ψ_{a₁} + ψ_{a₂}X_{a₁} − Y_{b₂}ψ_{b₁} − ψ_{b₂}X_{b₁}`.
    pub d1: Matrix<F>,
}

fn add_block<F: Field>(m: &mut Matrix<F>, r0: usize, c0: usize, block: &Matrix<F>, negate: bool) {
    let f = m.field().clone();
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            let x = block.get(r, c);
            if f.is_zero(x) {
                continue;
            }
            let x = if negate { f.neg(x) } else { x.clone() };
            let v = f.add(m.get(r0 + r, c0 + c), &x);
            m.set(r0 + r, c0 + c, v);
        }
    }
}

fn offsets(sizes: impl Iterator<Item = usize>) -> (Vec<usize>, usize) {
    let mut out = Vec::new();
    let mut total = 0;
    for s in sizes {
        out.push(total);
        total += s;
    }
    (out, total)
}

impl<F: Field> HomComplex<F> {
    /// Panics if `x` or `y` does not live on `quiver`.
    pub fn build(quiver: &BoundQuiver, x: &BoundRepresentation<F>, y: &BoundRepresentation<F>) -> Self {
        assert_eq!(x.dims().len(), quiver.vertex_count());
        assert_eq!(y.dims().len(), quiver.vertex_count());
        let f = x.field();
        let arrows = quiver.arrows();
        let (o0, c0) = offsets((0..quiver.vertex_count()).map(|v| y.dim(v) * x.dim(v)));
        let (o1, c1) = offsets(arrows.iter().map(|a| y.dim(a.target) * x.dim(a.source)));
        let (o2, c2) = offsets(
            quiver
                .squares()
                .iter()
                .map(|s| y.dim(arrows[s.a[1]].target) * x.dim(arrows[s.a[0]].source)),
        );
        let id = |n| Matrix::identity(f, n);

        let mut d0 = Matrix::zeros(f, c1, c0);
        for (i, a) in arrows.iter().enumerate() {
            let (u, v) = (a.source, a.target);
            add_block(&mut d0, o1[i], o0[u], &y.map(i).kronecker(&id(x.dim(u))), false);
            add_block(
                &mut d0,
                o1[i],
                o0[v],
                &id(y.dim(v)).kronecker(&x.map(i).transpose()),
                true,
            );
        }

        let mut d1 = Matrix::zeros(f, c2, c1);
        for (k, s) in quiver.squares().iter().enumerate() {
            let u = arrows[s.a[0]].source;
            let w = arrows[s.a[1]].target;
            for (leg, negate) in [(s.a, false), (s.b, true)] {
                let [l1, l2] = leg;
                add_block(
                    &mut d1,
                    o2[k],
                    o1[l1],
                    &y.map(l2).kronecker(&id(x.dim(u))),
                    negate,
                );
                add_block(
                    &mut d1,
                    o2[k],
                    o1[l2],
                    &id(y.dim(w)).kronecker(&x.map(l1).transpose()),
                    negate,
                );
            }
        }
        HomComplex { c0, c1, c2, d0, d1 }
    }

    /// Cohomology dimensions of the complex.
    pub fn cohomology(&self) -> ExtDims {
        let r0 = self.d0.rank();
        let r1 = self.d1.rank();
        ExtDims {
            hom: self.c0 - r0,
            ext1: self.c1 - r1 - r0,
            ext2: self.c2 - r1,
        }
    }
}

/// Dimension of the space of morphisms `X → Y`. Needs no resolution.
pub fn hom_dim<F: Field>(
    quiver: &BoundQuiver,
    x: &BoundRepresentation<F>,
    y: &BoundRepresentation<F>,
) -> usize {
    let c = HomComplex::build(quiver, x, y);
    c.c0 - c.d0.rank()
}

pub fn ext_dims<F: Field>(
    quiver: &BoundQuiver,
    x: &BoundRepresentation<F>,
    y: &BoundRepresentation<F>,
) -> Result<ExtDims, HomologyError> {
    if quiver.resolution() != Resolution::Length2 {
        return Err(HomologyError::ParallelPathsUnsupported);
    }
    Ok(HomComplex::build(quiver, x, y).cohomology())
}

/// `⟨x, y⟩ = Σ x_v y_v − Σ_{u→v} x_u y_v + Σ_{u⇒w} x_u y_w`, refused when
/// the complex is not a resolution.
pub fn euler_form(quiver: &BoundQuiver, x: &[usize], y: &[usize]) -> Result<i64, HomologyError> {
    if quiver.resolution() != Resolution::Length2 {
        return Err(HomologyError::ParallelPathsUnsupported);
    }
    for v in [x, y] {
        if v.len() != quiver.vertex_count() {
            return Err(HomologyError::DimensionMismatch {
                expected: quiver.vertex_count(),
                found: v.len(),
            });
        }
    }
    Ok(quiver.euler_form(x, y))
}

/// The Euler form of the path quiver of `pq`.
pub fn path_euler_form(pq: &PathQuiver, x: &[usize], y: &[usize]) -> Result<i64, HomologyError> {
    euler_form(pq.bound(), x, y)
}
