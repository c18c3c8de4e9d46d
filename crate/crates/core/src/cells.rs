//! Bialynicki-Birula cells from torus weights on tangent spaces at fixed
//! points, and the smoothness certificate that makes them a paving.
//!
//! At a fixed point `N` the tangent space `Hom(N, M/N)` has coordinates
//! `x(ω, r, s)` with `r ∈ I_ω` and `s ∈ D_ω ∖ I_ω`. Commutation with an arrow
//! `u → v` only relates coordinates with the same `(r, s)`, so the space
//! splits into blocks of torus weight `w_s − w_r`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::bimodule::{quotient_representation, sub_representation, QuiverGrassmannian};
use crate::exactalg::{Field, Matrix, Rationals};
use crate::fixedpoints::{enumerate_fixed_points, FixedPoint};
use crate::homology::{ext_dims, ExtDims};
use crate::motive::Polynomial;
use crate::quiver::Resolution;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellsError {
    #[error("the base quiver has parallel paths; no cell decomposition is claimed")]
    ParallelPathsUnsupported,
    #[error("smoothness not certified: {violations} fixed point(s) fail, self-Ext¹ = {self_ext1}")]
    SmoothnessNotCertified { violations: usize, self_ext1: usize },
    #[error("cell data inconsistent: {0}")]
    PavingInconsistent(String),
}

/// Distinct integer weights, one per basis label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocharacter {
    weights: Vec<i64>,
}

impl Cocharacter {
    /// Panics if two weights coincide.
    pub fn new(weights: Vec<i64>) -> Self {
        let mut sorted = weights.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), weights.len(), "weights must be distinct");
        Cocharacter { weights }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, label: usize) -> i64 {
        self.weights[label]
    }
}

/// Seed 0 gives weights `1..=n` in label order; other seeds shuffle them.
pub fn generic_cocharacter(labels: usize, seed: u64) -> Cocharacter {
    let mut weights: Vec<i64> = (1..=labels as i64).collect();
    if seed != 0 {
        weights.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    Cocharacter { weights }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentBlock {
    pub r: usize,
    pub s: usize,
    pub dim: usize,
    pub weight: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentProfile {
    pub blocks: Vec<TangentBlock>,
    /// Dimension of the positive-weight part: the attracting cell.
    pub plus: usize,
    pub minus: usize,
}

impl TangentProfile {
    pub fn dim(&self) -> usize {
        self.plus + self.minus
    }
}

/// Variables and constraints of the `(r, s)` block. Constraints are
/// `(v, Some(u))` for `x_v = x_u` and `(v, None)` for `x_v = 0`.
struct BlockSystem {
    vars: Vec<usize>,
    constraints: Vec<(usize, Option<usize>)>,
}

fn block_system(
    gr: &QuiverGrassmannian,
    fp: &FixedPoint,
    supports: &[VertexSet],
    r: usize,
    s: usize,
) -> BlockSystem {
    let (cr, cs, supp_s) = (fp.ideal(r), fp.ideal(s), &supports[s]);
    let vars: Vec<usize> = cr
        .iter()
        .filter(|&v| supp_s.contains(v) && !cs.contains(v))
        .collect();
    let mut constraints = Vec::new();
    if !vars.is_empty() {
        for a in gr.quiver().arrows() {
            let (u, v) = (a.source, a.target);
            if cr.contains(u) && supp_s.contains(v) && !cs.contains(v) {
                constraints.push((v, supp_s.contains(u).then_some(u)));
            }
        }
    }
    BlockSystem { vars, constraints }
}

impl BlockSystem {
    /// Kernel dimension of the constraint matrix over the rationals.
    fn kernel_dim(&self) -> usize {
        if self.vars.is_empty() {
            return 0;
        }
        let q = Rationals;
        let col = |v: usize| {
            self.vars
                .iter()
                .position(|&x| x == v)
                .expect("constrained vertex is a variable")
        };
        let mut m = Matrix::zeros(&q, self.constraints.len(), self.vars.len());
        for (i, &(v, u)) in self.constraints.iter().enumerate() {
            m.set(i, col(v), q.one());
            if let Some(u) = u {
                m.set(i, col(u), q.from_i64(-1));
            }
        }
        self.vars.len() - m.rank()
    }

    /// Connected components of the equality graph that meet no forced zero.
    fn free_components(&self) -> usize {
        let n = self.vars.len();
        let idx = |v: usize| self.vars.iter().position(|&x| x == v).unwrap();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(v, u) in &self.constraints {
            if let Some(u) = u {
                let (a, b) = (find(&mut parent, idx(v)), find(&mut parent, idx(u)));
                parent[a] = b;
            }
        }
        let mut zero = vec![false; n];
        for &(v, u) in &self.constraints {
            if u.is_none() {
                let root = find(&mut parent, idx(v));
                zero[root] = true;
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i && !zero[i]).count()
    }
}

fn supports(gr: &QuiverGrassmannian) -> Vec<VertexSet> {
    (0..gr.rep().label_count()).map(|r| gr.rep().support(r)).collect()
}

fn profile_with(
    gr: &QuiverGrassmannian,
    fp: &FixedPoint,
    cochar: &Cocharacter,
    supports: &[VertexSet],
    block_dim: impl Fn(&BlockSystem) -> usize,
) -> TangentProfile {
    let n = gr.rep().label_count();
    let mut blocks = Vec::new();
    let (mut plus, mut minus) = (0, 0);
    for r in 0..n {
        for s in (0..n).filter(|&s| s != r) {
            let dim = block_dim(&block_system(gr, fp, supports, r, s));
            if dim == 0 {
                continue;
            }
            let weight = cochar.weight(s) - cochar.weight(r);
            if weight > 0 {
                plus += dim;
            } else {
                minus += dim;
            }
            blocks.push(TangentBlock { r, s, dim, weight });
        }
    }
    TangentProfile { blocks, plus, minus }
}

/// Weight decomposition of `Hom(N, M/N)`, each block's dimension computed as
/// a kernel over the rationals.
pub fn tangent_profile(gr: &QuiverGrassmannian, fp: &FixedPoint, cochar: &Cocharacter) -> TangentProfile {
    profile_with(gr, fp, cochar, &supports(gr), BlockSystem::kernel_dim)
}

/// The same decomposition by counting free components of each block's
/// constraint graph.
pub fn tangent_profile_combinatorial(
    gr: &QuiverGrassmannian,
    fp: &FixedPoint,
    cochar: &Cocharacter,
) -> TangentProfile {
    profile_with(gr, fp, cochar, &supports(gr), BlockSystem::free_components)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessViolation {
    pub fixed_point: usize,
    pub ext: ExtDims,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    /// `⟨e, dim M − e⟩`.
    pub expected_dimension: i64,
    pub fixed_points: usize,
    /// Vertices where `M` is nonzero.
    pub support_vertices: usize,
    pub violations: Vec<SmoothnessViolation>,
    /// `dim Ext¹(M, M)`.
    pub self_ext1: usize,
}

impl SmoothnessReport {
    /// Every fixed point has `Ext^•(N, M/N) = (⟨e, f⟩, 0, 0)`, so the tangent
    /// dimension is `⟨e, f⟩` everywhere and the variety is smooth.
    pub fn points_certified(&self) -> bool {
        self.violations.is_empty()
    }

    /// Also `Ext¹(M, M) = 0`, which adds irreducibility.
    pub fn passed(&self) -> bool {
        self.points_certified() && self.self_ext1 == 0
    }
}

fn require_resolution(gr: &QuiverGrassmannian) -> Result<(), CellsError> {
    if gr.quiver().resolution() != Resolution::Length2 {
        return Err(CellsError::ParallelPathsUnsupported);
    }
    Ok(())
}

/// Checks `Ext^•(N, M/N) = (⟨e, f⟩, 0, 0)` at every fixed point and
/// `Ext¹(M, M) = 0`. Since the singular locus is closed and torus stable,
/// fixed points suffice.
pub fn check_smooth(gr: &QuiverGrassmannian) -> Result<SmoothnessReport, CellsError> {
    require_resolution(gr)?;
    let q = Rationals;
    let quiver = gr.quiver();
    let m = gr.rep().representation(&q);
    let expected = gr.expected_dimension();
    let fps = enumerate_fixed_points(gr);
    let want = ExtDims {
        hom: expected.max(0) as usize,
        ext1: 0,
        ext2: 0,
    };
    let violations: Vec<SmoothnessViolation> = fps
        .par_iter()
        .enumerate()
        .filter_map(|(i, fp)| {
            let n = fp.to_point(gr, &q);
            let sub = sub_representation(quiver, &m, &n).expect("fixed points are subrepresentations");
            let quot = quotient_representation(quiver, &m, &n).expect("fixed points are subrepresentations");
            let ext = ext_dims(quiver, &sub, &quot).expect("resolution checked");
            (ext != want || expected < 0).then_some(SmoothnessViolation { fixed_point: i, ext })
        })
        .collect();
    let self_ext1 = ext_dims(quiver, &m, &m).expect("resolution checked").ext1;
    Ok(SmoothnessReport {
        expected_dimension: expected,
        fixed_points: fps.len(),
        support_vertices: m.dims().iter().filter(|&&d| d > 0).count(),
        violations,
        self_ext1,
    })
}

/// Cell dimensions `d⁺` of all fixed points, in enumeration order.
pub fn cell_dimensions(gr: &QuiverGrassmannian, seed: u64) -> Vec<usize> {
    let cochar = generic_cocharacter(gr.rep().label_count(), seed);
    let supp = supports(gr);
    enumerate_fixed_points(gr)
        .par_iter()
        .map(|fp| profile_with(gr, fp, &cochar, &supp, BlockSystem::kernel_dim).plus)
        .collect()
}

/// `Σ q^{d⁺}` over fixed points. Refused unless every fixed point is
/// certified smooth; the result must be palindromic of degree `⟨e, f⟩` with
/// `P(1) = χ`.
pub fn poincare_polynomial(gr: &QuiverGrassmannian, seed: u64) -> Result<Polynomial, CellsError> {
    require_resolution(gr)?;
    let report = check_smooth(gr)?;
    if !report.points_certified() {
        return Err(CellsError::SmoothnessNotCertified {
            violations: report.violations.len(),
            self_ext1: report.self_ext1,
        });
    }
    let dim = report.expected_dimension as usize;
    let cochar = generic_cocharacter(gr.rep().label_count(), seed);
    let supp = supports(gr);
    let profiles: Vec<TangentProfile> = enumerate_fixed_points(gr)
        .par_iter()
        .map(|fp| profile_with(gr, fp, &cochar, &supp, BlockSystem::kernel_dim))
        .collect();
    if let Some(p) = profiles.iter().find(|p| p.dim() != dim) {
        return Err(CellsError::PavingInconsistent(format!(
            "tangent dimension {} differs from {dim}",
            p.dim()
        )));
    }
    let mut coeffs = vec![0i64; dim + 1];
    for p in &profiles {
        coeffs[p.plus] += 1;
    }
    let poly = Polynomial::from_i64(&coeffs);
    if !poly.is_palindromic(dim) {
        return Err(CellsError::PavingInconsistent(format!(
            "{poly} is not palindromic of degree {dim}"
        )));
    }
    if poly.eval_i64(1) != profiles.len().into() {
        return Err(CellsError::PavingInconsistent(format!(
            "{poly} at 1 differs from χ = {}",
            profiles.len()
        )));
    }
    Ok(poly)
}
