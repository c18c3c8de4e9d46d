use crate::exactalg::{Field, Matrix, Subspace};
use crate::quiver::PathQuiver;

use super::{BimoduleError, LabeledRep, QuiverGrassmannian, SubmodulePoint};

/// A basis vector of `V_origin`; `index` runs over `1..=d_origin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub origin: usize,
    pub index: usize,
}

/// The bimodule whose space at a path is the direct sum of `V_p` over the
/// vertices `p` the path visits, with the inclusions as arrow maps.
///
/// Basis at a path: labels of the visited vertices from source to target,
/// each block in index order.
#[derive(Debug, Clone)]
pub struct CanonicalBimodule {
    rep: LabeledRep,
    labels: Vec<BasisLabel>,
    dims: Vec<usize>,
}

impl CanonicalBimodule {
    pub fn build(pq: &PathQuiver, dims: &[usize]) -> Result<Self, BimoduleError> {
        let base = pq.base();
        if dims.len() != base.vertex_count() {
            return Err(BimoduleError::DimensionMismatch {
                expected: base.vertex_count(),
                found: dims.len(),
            });
        }
        let mut labels = Vec::new();
        let mut first = Vec::with_capacity(dims.len());
        for (p, &d) in dims.iter().enumerate() {
            first.push(labels.len());
            labels.extend((1..=d).map(|index| BasisLabel { origin: p, index }));
        }
        let names = labels
            .iter()
            .map(|l| format!("{}.{}", base.vertex_name(l.origin), l.index))
            .collect();
        let basis = (0..pq.vertex_count())
            .map(|v| {
                pq.path_vertices(v)
                    .into_iter()
                    .flat_map(|p| first[p]..first[p] + dims[p])
                    .collect()
            })
            .collect();
        let rep = LabeledRep::new(pq.bound().clone(), names, basis)?;
        Ok(CanonicalBimodule {
            rep,
            labels,
            dims: dims.to_vec(),
        })
    }

    pub fn rep(&self) -> &LabeledRep {
        &self.rep
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn input_dims(&self) -> &[usize] {
        &self.dims
    }

    /// Offset of the `V_p` block inside the space at path vertex `v`.
    fn block_offset(&self, pq: &PathQuiver, v: usize, p: usize) -> usize {
        pq.path_vertices(v)
            .into_iter()
            .take_while(|&x| x != p)
            .map(|x| self.dims[x])
            .sum()
    }
}

/// `f(ω) = d_{t(ω)}`.
pub fn dim_vector_f(pq: &PathQuiver, dims: &[usize]) -> Vec<usize> {
    pq.paths().iter().map(|p| dims[p.target]).collect()
}

/// `e(ω) = Σ d_p` over the vertices of `ω` other than its target.
pub fn dim_vector_e(pq: &PathQuiver, dims: &[usize]) -> Vec<usize> {
    (0..pq.vertex_count())
        .map(|v| {
            let vs = pq.path_vertices(v);
            vs[..vs.len() - 1].iter().map(|&p| dims[p]).sum()
        })
        .collect()
}

/// `dim M(V)`: the sum of `d_p` over all vertices the path visits.
pub fn dim_vector_m(pq: &PathQuiver, dims: &[usize]) -> Vec<usize> {
    (0..pq.vertex_count())
        .map(|v| pq.path_vertices(v).iter().map(|&p| dims[p]).sum())
        .collect()
}

/// Dimension vector of the projective bimodule `⊕_{α: i→j} A e_j ⊗ V_i ⊗ e_i A`,
/// counted as `Σ_α d_{s(α)} · #paths(s(ω) ⇝ s(α)) · #paths(t(α) ⇝ t(ω))`.
pub fn dim_vector_n(pq: &PathQuiver, dims: &[usize]) -> Result<Vec<usize>, BimoduleError> {
    if pq.has_parallel_paths() {
        return Err(BimoduleError::ParallelPathsUnsupported);
    }
    let counts = pq.base().path_counts();
    let n: Vec<usize> = pq
        .paths()
        .iter()
        .map(|w| {
            pq.base()
                .arrows()
                .iter()
                .map(|a| {
                    dims[a.source] * counts[w.source][a.source] as usize * counts[a.target][w.target] as usize
                })
                .sum()
        })
        .collect();
    let m = dim_vector_m(pq, dims);
    let f = dim_vector_f(pq, dims);
    debug_assert!(n.iter().zip(&m).zip(&f).all(|((n, m), f)| m - n == *f));
    Ok(n)
}

impl QuiverGrassmannian {
    /// `Gr_e(M(V))` with `e = dim M(V) − f`.
    pub fn of_bimodule(pq: &PathQuiver, dims: &[usize]) -> Result<Self, BimoduleError> {
        let m = CanonicalBimodule::build(pq, dims)?;
        Self::new(m.rep, dim_vector_e(pq, dims))
    }
}

/// The point of the Grassmannian spanned, at each path, by the graph vectors
/// `x + V_α(x)` of the arrows on the path. Lazy paths get the zero space.
///
/// `rep` holds one `d_t × d_s` matrix per base arrow `s → t`.
pub fn embed_representation<F: Field>(
    pq: &PathQuiver,
    m: &CanonicalBimodule,
    field: &F,
    rep: &[Matrix<F>],
) -> Result<SubmodulePoint<F>, BimoduleError> {
    let base = pq.base();
    let dims = m.input_dims();
    if rep.len() != base.arrows().len() {
        return Err(BimoduleError::DimensionMismatch {
            expected: base.arrows().len(),
            found: rep.len(),
        });
    }
    for (i, a) in base.arrows().iter().enumerate() {
        if rep[i].rows() != dims[a.target] || rep[i].cols() != dims[a.source] {
            return Err(BimoduleError::ShapeMismatch { arrow: i });
        }
    }
    let spaces = (0..pq.vertex_count())
        .map(|v| {
            let ambient = m.rep().dim(v);
            let mut vectors = Vec::new();
            for &ai in &pq.path(v).arrows {
                let a = &base.arrows()[ai];
                let (src_off, tgt_off) = (m.block_offset(pq, v, a.source), m.block_offset(pq, v, a.target));
                for x in 0..dims[a.source] {
                    let mut vec = vec![field.zero(); ambient];
                    vec[src_off + x] = field.one();
                    for y in 0..dims[a.target] {
                        vec[tgt_off + y] = rep[ai].get(y, x).clone();
                    }
                    vectors.push(vec);
                }
            }
            Subspace::span(field, ambient, vectors)
        })
        .collect();
    Ok(SubmodulePoint::new(spaces))
}
