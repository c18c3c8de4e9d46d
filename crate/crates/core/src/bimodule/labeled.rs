use crate::exactalg::{Field, Matrix, Subspace};
use crate::quiver::BoundQuiver;
use crate::vertex_set::VertexSet;

use super::{BimoduleError, BoundRepresentation};

/// A representation whose vertex spaces have bases drawn from one global
/// label set and whose arrows send each basis vector to the basis vector with
/// the same label.
///
/// The canonical bimodule is one of these on the path quiver; the same shape
/// describes coordinate models of it on other quivers.
#[derive(Debug, Clone)]
pub struct LabeledRep {
    quiver: BoundQuiver,
    label_names: Vec<String>,
    basis: Vec<Vec<usize>>,
    position: Vec<Vec<Option<usize>>>,
}

impl LabeledRep {
    pub fn new(
        quiver: BoundQuiver,
        label_names: Vec<String>,
        basis: Vec<Vec<usize>>,
    ) -> Result<Self, BimoduleError> {
        let n_labels = label_names.len();
        if basis.len() != quiver.vertex_count() {
            return Err(BimoduleError::DimensionMismatch {
                expected: quiver.vertex_count(),
                found: basis.len(),
            });
        }
        let mut position = vec![vec![None; n_labels]; basis.len()];
        for (v, labels) in basis.iter().enumerate() {
            for (i, &r) in labels.iter().enumerate() {
                if r >= n_labels || position[v][r].is_some() {
                    return Err(BimoduleError::BadLabel { vertex: v, label: r });
                }
                position[v][r] = Some(i);
            }
        }
        for (ai, a) in quiver.arrows().iter().enumerate() {
            if let Some(&r) = basis[a.source].iter().find(|&&r| position[a.target][r].is_none()) {
                return Err(BimoduleError::NotLabelPreserving { arrow: ai, label: r });
            }
        }
        Ok(LabeledRep {
            quiver,
            label_names,
            basis,
            position,
        })
    }

    pub fn quiver(&self) -> &BoundQuiver {
        &self.quiver
    }

    pub fn label_count(&self) -> usize {
        self.label_names.len()
    }

    pub fn label_name(&self, r: usize) -> &str {
        &self.label_names[r]
    }

    /// Ordered labels of the basis at `v`.
    pub fn basis(&self, v: usize) -> &[usize] {
        &self.basis[v]
    }

    pub fn dim(&self, v: usize) -> usize {
        self.basis[v].len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn position(&self, v: usize, label: usize) -> Option<usize> {
        self.position[v][label]
    }

    pub fn has_label(&self, v: usize, label: usize) -> bool {
        self.position[v][label].is_some()
    }

    /// Vertices whose basis contains `label`; closed under arrows.
    pub fn support(&self, label: usize) -> VertexSet {
        (0..self.quiver.vertex_count())
            .filter(|&v| self.has_label(v, label))
            .collect()
    }

    /// The 0/1 column-selection matrix of an arrow.
    pub fn arrow_matrix<F: Field>(&self, field: &F, arrow: usize) -> Matrix<F> {
        let a = self.quiver.arrows()[arrow];
        let mut m = Matrix::zeros(field, self.dim(a.target), self.dim(a.source));
        for (j, &r) in self.basis[a.source].iter().enumerate() {
            let i = self.position[a.target][r].expect("label preserved");
            m.set(i, j, field.one());
        }
        m
    }

    pub fn representation<F: Field>(&self, field: &F) -> BoundRepresentation<F> {
        let maps = (0..self.quiver.arrows().len())
            .map(|a| self.arrow_matrix(field, a))
            .collect();
        BoundRepresentation::new(&self.quiver, field, self.dims(), maps)
            .expect("label-preserving inclusions satisfy every square")
    }

    /// Span of the basis vectors at `v` carrying the given labels.
    pub fn coordinate_subspace<F: Field>(
        &self,
        field: &F,
        v: usize,
        labels: impl IntoIterator<Item = usize>,
    ) -> Subspace<F> {
        let idx = labels
            .into_iter()
            .map(|r| self.position[v][r].expect("label present at vertex"));
        Subspace::coordinate(field, self.dim(v), idx)
    }
}

/// The Grassmannian of subrepresentations of a labeled representation with a
/// fixed dimension vector.
#[derive(Debug, Clone)]
pub struct QuiverGrassmannian {
    rep: LabeledRep,
    e: Vec<usize>,
}

impl QuiverGrassmannian {
    pub fn new(rep: LabeledRep, e: Vec<usize>) -> Result<Self, BimoduleError> {
        if e.len() != rep.quiver().vertex_count() {
            return Err(BimoduleError::DimensionMismatch {
                expected: rep.quiver().vertex_count(),
                found: e.len(),
            });
        }
        if let Some(v) = (0..e.len()).find(|&v| e[v] > rep.dim(v)) {
            return Err(BimoduleError::DimensionTooLarge {
                vertex: v,
                requested: e[v],
                available: rep.dim(v),
            });
        }
        Ok(QuiverGrassmannian { rep, e })
    }

    pub fn rep(&self) -> &LabeledRep {
        &self.rep
    }

    pub fn quiver(&self) -> &BoundQuiver {
        self.rep.quiver()
    }

    pub fn e(&self) -> &[usize] {
        &self.e
    }

    /// `dim M − e`.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.rep.dims().iter().zip(&self.e).map(|(m, e)| m - e).collect()
    }

    /// `⟨e, dim M − e⟩`, the dimension of the Grassmannian when it is smooth.
    pub fn expected_dimension(&self) -> i64 {
        self.quiver().euler_form(&self.e, &self.quotient_dims())
    }

    /// `Σ_v e_v (dim M_v − e_v)`: dimension of the product of vertex Grassmannians.
    pub fn ambient_dimension(&self) -> usize {
        self.e.iter().zip(self.quotient_dims()).map(|(e, f)| e * f).sum()
    }
}
