use std::collections::BTreeMap;

use thiserror::Error;

use crate::bimodule::{dim_vector_f, dim_vector_m, CanonicalBimodule, QuiverGrassmannian};
use crate::counting::{grassmannian_polynomial, repvariety_polynomial, CountingError};
use crate::quiver::PathQuiver;

use super::{MotiveFraction, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotiveError {
    #[error("the recursion needs the Euler form; the base quiver has parallel paths")]
    ParallelPathsUnsupported,
    #[error("dimension vector has {found} entries, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no representation-variety motive for g = {0:?}")]
    MissingRepVarietyMotive(Vec<usize>),
    #[error("top entry is not a polynomial: {0}")]
    TopEntryNotPolynomial(String),
    #[error(transparent)]
    Counting(#[from] CountingError),
}

/// `[GL_n] = ∏_{i<n} (L^n − L^i)`.
pub fn gl_motive(n: usize) -> Polynomial {
    (0..n).fold(Polynomial::one(), |acc, i| {
        &acc * &(&Polynomial::monomial(n) - &Polynomial::monomial(i))
    })
}

/// `[G_g] = ∏_v [GL_{g_v}]`.
pub fn group_motive(g: &[usize]) -> Polynomial {
    g.iter().fold(Polynomial::one(), |acc, &n| &acc * &gl_motive(n))
}

/// Every `g ≤ top` coordinatewise, by total dimension and then
/// lexicographically.
pub fn dimension_vectors_below(top: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &t in top {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=t).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out.sort_by(|a, b| {
        let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    out
}

/// `[M_g]` for every quotient dimension vector `g ≤ f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionTable {
    top: Vec<usize>,
    entries: Vec<(Vec<usize>, MotiveFraction)>,
}

impl RecursionTable {
    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn entries(&self) -> &[(Vec<usize>, MotiveFraction)] {
        &self.entries
    }

    pub fn get(&self, g: &[usize]) -> Option<&MotiveFraction> {
        self.entries.iter().find(|(h, _)| h == g).map(|(_, m)| m)
    }

    pub fn top_entry(&self) -> &MotiveFraction {
        self.get(&self.top).expect("table contains its top")
    }

    /// The top entry, checked to be polynomial when the table was built.
    pub fn top_polynomial(&self) -> &Polynomial {
        self.top_entry().as_polynomial().expect("checked on construction")
    }

    /// Entries that are not polynomials in `L`.
    pub fn non_polynomial(&self) -> Vec<&[usize]> {
        self.entries
            .iter()
            .filter(|(_, m)| m.as_polynomial().is_none())
            .map(|(g, _)| g.as_slice())
            .collect()
    }
}

/// The recursion for framed moduli, with `f` from `pq` and `dims`.
struct Recursion<'a> {
    pq: &'a PathQuiver,
    dims: &'a [usize],
    rep: &'a BTreeMap<Vec<usize>, Polynomial>,
}

impl Recursion<'_> {
    fn framing(&self, g: &[usize]) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| (d * g[self.pq.lazy_vertex(i)]) as i64)
            .sum()
    }

    /// `[R_g] / [G_g]`.
    fn ratio(&self, g: &[usize]) -> Result<MotiveFraction, MotiveError> {
        let r = self
            .rep
            .get(g)
            .ok_or_else(|| MotiveError::MissingRepVarietyMotive(g.to_vec()))?;
        Ok(MotiveFraction::new(r.clone(), group_motive(g)))
    }

    fn lhs(&self, g: &[usize]) -> Result<MotiveFraction, MotiveError> {
        Ok(&MotiveFraction::lefschetz_power(self.framing(g)) * &self.ratio(g)?)
    }

    /// `[M_h] · [R_{g−h}]/[G_{g−h}] · L^{−⟨g−h, h⟩}`.
    fn term(&self, g: &[usize], h: &[usize], mh: &MotiveFraction) -> Result<MotiveFraction, MotiveError> {
        let diff: Vec<usize> = g.iter().zip(h).map(|(a, b)| a - b).collect();
        let euler = self.pq.bound().euler_form(&diff, h);
        Ok(&(mh * &self.ratio(&diff)?) * &MotiveFraction::lefschetz_power(-euler))
    }
}

fn check_inputs(pq: &PathQuiver, dims: &[usize]) -> Result<(), MotiveError> {
    if pq.has_parallel_paths() {
        return Err(MotiveError::ParallelPathsUnsupported);
    }
    if dims.len() != pq.base().vertex_count() {
        return Err(MotiveError::DimensionMismatch {
            expected: pq.base().vertex_count(),
            found: dims.len(),
        });
    }
    Ok(())
}

fn leq(h: &[usize], g: &[usize]) -> bool {
    h.iter().zip(g).all(|(a, b)| a <= b)
}

/// Solves `L^{Σ d_i g_i}·[R_g]/[G_g] = Σ_{h ≤ g} [M_h]·[R_{g−h}]/[G_{g−h}]·L^{−⟨g−h,h⟩}`
/// for `[M_g]`, `g ≤ f`, where `g_i` is the value at the lazy path of `i`.
pub fn recursion_solve(
    pq: &PathQuiver,
    dims: &[usize],
    repvariety_motives: &BTreeMap<Vec<usize>, Polynomial>,
) -> Result<RecursionTable, MotiveError> {
    check_inputs(pq, dims)?;
    let rec = Recursion {
        pq,
        dims,
        rep: repvariety_motives,
    };
    let top = dim_vector_f(pq, dims);
    let mut entries: Vec<(Vec<usize>, MotiveFraction)> = Vec::new();
    for g in dimension_vectors_below(&top) {
        let mut m = rec.lhs(&g)?;
        for (h, mh) in entries.iter().filter(|(h, _)| leq(h, &g)) {
            m = &m - &rec.term(&g, h, mh)?;
        }
        entries.push((g, m));
    }
    let table = RecursionTable { top, entries };
    if table.top_entry().as_polynomial().is_none() {
        return Err(MotiveError::TopEntryNotPolynomial(table.top_entry().to_string()));
    }
    Ok(table)
}

/// Re-evaluates both sides of the identity at `g` from the table.
pub fn identity_holds(
    table: &RecursionTable,
    pq: &PathQuiver,
    dims: &[usize],
    repvariety_motives: &BTreeMap<Vec<usize>, Polynomial>,
    g: &[usize],
) -> Result<bool, MotiveError> {
    check_inputs(pq, dims)?;
    let rec = Recursion {
        pq,
        dims,
        rep: repvariety_motives,
    };
    let mut rhs = MotiveFraction::zero();
    for (h, mh) in table.entries().iter().filter(|(h, _)| leq(h, g)) {
        rhs = &rhs + &rec.term(g, h, mh)?;
    }
    Ok(rec.lhs(g)? == rhs)
}

/// `[R_g]` for every `g ≤ f`, by point counting on the path quiver.
pub fn repvariety_motives(
    pq: &PathQuiver,
    dims: &[usize],
    cap: u64,
) -> Result<BTreeMap<Vec<usize>, Polynomial>, MotiveError> {
    let top = dim_vector_f(pq, dims);
    dimension_vectors_below(&top)
        .into_iter()
        .map(|g| {
            let r = repvariety_polynomial(pq.bound(), &g, cap)?;
            Ok((g, r))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryStatus {
    /// The counted polynomial equals `[M_g]`.
    Matches,
    Mismatch {
        counted: Polynomial,
    },
    /// Counting or interpolation did not finish; the reason is kept.
    Unchecked(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    /// `None` when no Poincaré polynomial was supplied.
    pub top_matches_poincare: Option<bool>,
    pub entries: Vec<(Vec<usize>, EntryStatus)>,
    /// Polynomial entries with a negative coefficient.
    pub negative_entries: Vec<Vec<usize>>,
    pub non_polynomial_entries: Vec<Vec<usize>>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.top_matches_poincare != Some(false)
            && self
                .entries
                .iter()
                .all(|(_, s)| !matches!(s, EntryStatus::Mismatch { .. }))
            && self.negative_entries.is_empty()
    }
}

/// Compares each `[M_g]` with the interpolated point count of the
/// Grassmannian of sub-bimodules of dimension `dim M − g`, and the top entry
/// with `poincare` when given.
pub fn consistency_check(
    table: &RecursionTable,
    pq: &PathQuiver,
    dims: &[usize],
    poincare: Option<&Polynomial>,
    cap: u64,
) -> Result<ConsistencyReport, MotiveError> {
    check_inputs(pq, dims)?;
    let cb = CanonicalBimodule::build(pq, dims).map_err(|_| MotiveError::DimensionMismatch {
        expected: pq.base().vertex_count(),
        found: dims.len(),
    })?;
    let m = dim_vector_m(pq, dims);
    let mut entries = Vec::new();
    let mut negative_entries = Vec::new();
    let mut non_polynomial_entries = Vec::new();
    for (g, mg) in table.entries() {
        match mg.as_polynomial() {
            Some(p) if !p.has_nonnegative_coefficients() => negative_entries.push(g.clone()),
            Some(_) => {}
            None => non_polynomial_entries.push(g.clone()),
        }
        let sub: Vec<usize> = m.iter().zip(g).map(|(a, b)| a - b).collect();
        let gr = QuiverGrassmannian::new(cb.rep().clone(), sub).expect("g ≤ f ≤ dim M");
        let status = match grassmannian_polynomial(&gr, None, cap) {
            Ok((_, Ok(fit))) => {
                if MotiveFraction::from(fit.polynomial.clone()) == *mg {
                    EntryStatus::Matches
                } else {
                    EntryStatus::Mismatch {
                        counted: fit.polynomial,
                    }
                }
            }
            Ok((_, Err(e))) | Err(e) => EntryStatus::Unchecked(e.to_string()),
        };
        entries.push((g.clone(), status));
    }
    Ok(ConsistencyReport {
        top_matches_poincare: poincare.map(|p| MotiveFraction::from(p.clone()) == *table.top_entry()),
        entries,
        negative_entries,
        non_polynomial_entries,
    })
}
