use super::{ExactAlgError, Field, Matrix, PrimeField};

/// A linear subspace of `F^n` stored by its canonical basis: the rows of the
/// reduced row echelon form of any spanning set (equivalently the columns of
/// the reduced column echelon form of the basis matrix). Two subspaces are
/// equal iff their stored forms are equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Self::coordinate(field, ambient, 0..ambient)
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: &F, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let basis = idx
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots: idx,
        }
    }

    pub fn span(field: &F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let (r, pivots) = Matrix::from_rows(field, ambient, &vectors).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(&self.field, self.ambient, self.dim(), |r, c| {
            self.basis[c][r].clone()
        })
    }

    /// `v` minus its projection along the basis; zero at every pivot.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o = f.sub(o, &f.mul(&c, x));
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the stored basis; meaningful when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(&self.field, self.ambient, vs)
    }

    /// Image under a linear map `F^ambient → F^m`.
    pub fn image(&self, map: &Matrix<F>) -> Subspace<F> {
        let vs = self.basis.iter().map(|v| map.apply(v)).collect();
        Self::span(&self.field, map.rows(), vs)
    }

    /// Standard basis indices outside the pivot set; their span is a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect()
    }
}

/// `[n choose k]_q`, the number of `k`-dimensional subspaces of `F_q^n`.
/// `None` on overflow.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    let q = q as u128;
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for j in 1..m {
            let qj = q.checked_pow(j as u32)?;
            next[j] = row[j - 1].checked_add(qj.checked_mul(row[j])?)?;
        }
        row = next;
    }
    Some(row[k])
}

/// Every `k`-dimensional subspace of `F_q^n` containing `containing`, each
/// once, in canonical form.
///
/// Works in the quotient by `containing`: the coordinates outside its pivot
/// set identify the quotient with `F_q^{n-s}`, whose `(k-s)`-subspaces are
/// enumerated by echelon shape and free entries, then lifted back.
pub fn enumerate_subspaces(
    field: &PrimeField,
    n: usize,
    k: usize,
    containing: &Subspace<PrimeField>,
) -> Result<SubspaceIter, ExactAlgError> {
    let s = containing.dim();
    if containing.ambient() != n || s > k || k > n {
        return Err(ExactAlgError::InfeasibleDimensions {
            ambient: n,
            dim: k,
            containing: s,
        });
    }
    let quotient_cols = containing.complement_indices();
    Ok(SubspaceIter {
        field: *field,
        n,
        containing: containing.clone(),
        m: quotient_cols.len(),
        quotient_cols,
        pivots: (0..k - s).collect(),
        free: Vec::new(),
        counter: Vec::new(),
        started: false,
        done: false,
    })
}

pub struct SubspaceIter {
    field: PrimeField,
    n: usize,
    containing: Subspace<PrimeField>,
    quotient_cols: Vec<usize>,
    m: usize,
    // echelon pivot columns in the quotient
    pivots: Vec<usize>,
    // free (row, column) positions for the current pivot shape
    free: Vec<(usize, usize)>,
    counter: Vec<u64>,
    started: bool,
    done: bool,
}

impl SubspaceIter {
    fn reset_shape(&mut self) {
        self.free.clear();
        for (row, &p) in self.pivots.iter().enumerate() {
            for col in p + 1..self.m {
                if !self.pivots.contains(&col) {
                    self.free.push((row, col));
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn next_shape(&mut self) -> bool {
        let r = self.pivots.len();
        for i in (0..r).rev() {
            if self.pivots[i] < self.m - r + i {
                self.pivots[i] += 1;
                for j in i + 1..r {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn advance(&mut self) -> bool {
        let q = self.field.modulus();
        for c in self.counter.iter_mut().rev() {
            *c += 1;
            if *c < q {
                return true;
            }
            *c = 0;
        }
        if self.next_shape() {
            self.reset_shape();
            true
        } else {
            false
        }
    }

    fn current(&self) -> Subspace<PrimeField> {
        let mut vectors = self.containing.basis().to_vec();
        let mut rows = vec![vec![0u64; self.n]; self.pivots.len()];
        for (row, &p) in self.pivots.iter().enumerate() {
            rows[row][self.quotient_cols[p]] = 1;
        }
        for (&(row, col), &v) in self.free.iter().zip(&self.counter) {
            rows[row][self.quotient_cols[col]] = v;
        }
        vectors.extend(rows);
        Subspace::span(&self.field, self.n, vectors)
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace<PrimeField>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.pivots.len() > self.m {
                self.done = true;
                return None;
            }
            self.reset_shape();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2, 2), Some(35));
        assert_eq!(gaussian_binomial(2, 1, 3), Some(4));
        assert_eq!(gaussian_binomial(3, 0, 5), Some(1));
        assert_eq!(gaussian_binomial(2, 3, 5), Some(0));
        assert_eq!(gaussian_binomial(4, 2, 3), Some(130));
    }

    #[test]
    fn lines_in_plane() {
        let f2 = PrimeField::new(2).unwrap();
        let zero = Subspace::zero(&f2, 2);
        assert_eq!(enumerate_subspaces(&f2, 2, 1, &zero).unwrap().count(), 3);
    }

    #[test]
    fn planes_in_four_space() {
        let f2 = PrimeField::new(2).unwrap();
        let zero = Subspace::zero(&f2, 4);
        assert_eq!(enumerate_subspaces(&f2, 4, 2, &zero).unwrap().count(), 35);
    }

    #[test]
    fn planes_through_a_line() {
        let f3 = PrimeField::new(3).unwrap();
        let line = Subspace::span(&f3, 3, vec![vec![1, 2, 0]]);
        let planes: Vec<_> = enumerate_subspaces(&f3, 3, 2, &line).unwrap().collect();
        assert_eq!(planes.len(), 4);
        assert!(planes.iter().all(|p| p.contains_subspace(&line) && p.dim() == 2));
    }

    #[test]
    fn infeasible() {
        let f2 = PrimeField::new(2).unwrap();
        let full = Subspace::full(&f2, 3);
        assert!(matches!(
            enumerate_subspaces(&f2, 3, 1, &full),
            Err(ExactAlgError::InfeasibleDimensions { .. })
        ));
    }

    #[test]
    fn reduce_and_coordinates() {
        let q = crate::exactalg::Rationals;
        let s = Subspace::span(&q, 3, vec![vec![q.from_i64(1), q.from_i64(1), q.from_i64(0)]]);
        let v = vec![q.from_i64(2), q.from_i64(2), q.from_i64(0)];
        assert!(s.contains(&v));
        assert_eq!(s.coordinates(&v), vec![q.from_i64(2)]);
        assert_eq!(s.complement_indices(), vec![1, 2]);
    }
}
