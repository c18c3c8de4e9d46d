//! Point counts over prime fields and interpolation of counts to polynomials.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::bimodule::{BoundRepresentation, QuiverGrassmannian};
use crate::exactalg::{
    enumerate_subspaces, first_primes, gaussian_binomial, Matrix, PrimeField, Rationals, Subspace,
};
use crate::motive::Polynomial;
use crate::quiver::BoundQuiver;

/// Default limit on elementary enumeration steps.
pub const DEFAULT_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("enumeration exceeds the cap of {cap} steps")]
    EnumerationTooLarge { cap: u64 },
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("point count overflowed")]
    Overflow,
    #[error("vertex order is not topological")]
    InvalidOrder,
    #[error("dimension vector has {found} entries, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("need {needed} samples at distinct primes, have {found}")]
    TooFewSamples { needed: usize, found: usize },
    /// Conclusive only when the bound is the ambient dimension.
    #[error("no polynomial of degree at most {degree_bound} fits the counts: {reason}")]
    NotPolynomialCount { degree_bound: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountTarget {
    Grassmannian,
    RepVariety(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSample {
    pub q: u64,
    pub count: u128,
    pub target: CountTarget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationResult {
    pub polynomial: Polynomial,
    pub degree_bound: usize,
    /// Samples not used for the fit, all matched by the polynomial.
    pub verification: Vec<(u64, u128)>,
}

fn field(q: u64) -> Result<PrimeField, CountingError> {
    PrimeField::new(q).map_err(|_| CountingError::NotPrime(q))
}

struct Budget {
    used: AtomicU64,
    cap: u64,
}

impl Budget {
    fn spend(&self, n: u64) -> Result<(), CountingError> {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        if before.saturating_add(n) > self.cap {
            Err(CountingError::EnumerationTooLarge { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

struct GrassCount<'a> {
    quiver: &'a BoundQuiver,
    m: BoundRepresentation<PrimeField>,
    e: &'a [usize],
    field: PrimeField,
    /// Vertices with outgoing arrows, in processing order.
    inner: Vec<usize>,
    sinks: Vec<usize>,
    budget: Budget,
}

impl GrassCount<'_> {
    /// Span of the images of already chosen subspaces at `v`.
    fn forced(&self, v: usize, chosen: &[Option<Subspace<PrimeField>>]) -> Subspace<PrimeField> {
        self.quiver
            .incoming(v)
            .iter()
            .fold(Subspace::zero(&self.field, self.m.dim(v)), |acc, &a| {
                let u = self.quiver.arrows()[a].source;
                let src = chosen[u].as_ref().expect("sources come first");
                acc.sum(&src.image(self.m.map(a)))
            })
    }

    fn options(
        &self,
        v: usize,
        chosen: &[Option<Subspace<PrimeField>>],
    ) -> Result<Vec<Subspace<PrimeField>>, CountingError> {
        let forced = self.forced(v, chosen);
        if forced.dim() > self.e[v] {
            return Ok(Vec::new());
        }
        let iter =
            enumerate_subspaces(&self.field, self.m.dim(v), self.e[v], &forced).expect("dimensions checked");
        let mut out = Vec::new();
        for s in iter {
            self.budget.spend(1)?;
            out.push(s);
        }
        Ok(out)
    }

    fn leaf(&self, chosen: &[Option<Subspace<PrimeField>>]) -> Result<u128, CountingError> {
        self.budget.spend(1)?;
        let q = self.field.modulus();
        let mut total: u128 = 1;
        for &v in &self.sinks {
            let s = self.forced(v, chosen).dim();
            if s > self.e[v] {
                return Ok(0);
            }
            let b = gaussian_binomial(self.m.dim(v) - s, self.e[v] - s, q).ok_or(CountingError::Overflow)?;
            total = total.checked_mul(b).ok_or(CountingError::Overflow)?;
        }
        Ok(total)
    }

    fn run(&self, k: usize, chosen: &mut Vec<Option<Subspace<PrimeField>>>) -> Result<u128, CountingError> {
        if k == self.inner.len() {
            return self.leaf(chosen);
        }
        let v = self.inner[k];
        let mut total: u128 = 0;
        for s in self.options(v, chosen)? {
            chosen[v] = Some(s);
            let c = self.run(k + 1, chosen)?;
            total = total.checked_add(c).ok_or(CountingError::Overflow)?;
        }
        chosen[v] = None;
        Ok(total)
    }
}

/// Number of `F_q`-points of the Grassmannian, choosing subspaces vertex by
/// vertex in topological order. Sinks are counted by Gaussian binomials.
pub fn count_grassmannian_points(gr: &QuiverGrassmannian, q: u64, cap: u64) -> Result<u128, CountingError> {
    count_grassmannian_points_in_order(gr, q, cap, gr.quiver().topological_order())
}

pub fn count_grassmannian_points_in_order(
    gr: &QuiverGrassmannian,
    q: u64,
    cap: u64,
    order: &[usize],
) -> Result<u128, CountingError> {
    let quiver = gr.quiver();
    if !quiver.is_topological(order) {
        return Err(CountingError::InvalidOrder);
    }
    let f = field(q)?;
    let (inner, sinks): (Vec<usize>, Vec<usize>) =
        order.iter().partition(|&&v| !quiver.outgoing(v).is_empty());
    let job = GrassCount {
        quiver,
        m: gr.rep().representation(&f),
        e: gr.e(),
        field: f,
        inner,
        sinks,
        budget: Budget {
            used: AtomicU64::new(0),
            cap,
        },
    };
    let chosen = vec![None; quiver.vertex_count()];
    let Some(&first) = job.inner.first() else {
        return job.leaf(&chosen);
    };
    let counts = job
        .options(first, &chosen)?
        .into_par_iter()
        .map(|s| {
            let mut chosen = chosen.clone();
            chosen[first] = Some(s);
            job.run(1, &mut chosen)
        })
        .collect::<Result<Vec<u128>, _>>()?;
    counts
        .into_iter()
        .try_fold(0u128, |a, b| a.checked_add(b))
        .ok_or(CountingError::Overflow)
}

/// Number of tuples of matrices over `F_q` with dimension vector `g` that
/// satisfy every square. Arrows outside all squares contribute `q^{g_u g_v}`
/// directly; the rest are enumerated with squares checked as soon as their
/// arrows are assigned.
pub fn count_repvariety_points(
    quiver: &BoundQuiver,
    g: &[usize],
    q: u64,
    cap: u64,
) -> Result<u128, CountingError> {
    if g.len() != quiver.vertex_count() {
        return Err(CountingError::DimensionMismatch {
            expected: quiver.vertex_count(),
            found: g.len(),
        });
    }
    let f = field(q)?;
    let arrows = quiver.arrows();
    let entries = |a: usize| (g[arrows[a].source] * g[arrows[a].target]) as u32;
    let mut in_square = vec![false; arrows.len()];
    for s in quiver.squares() {
        for a in s.a.iter().chain(&s.b) {
            in_square[*a] = true;
        }
    }
    let bound: u32 = (0..arrows.len()).filter(|&a| in_square[a]).map(entries).sum();
    match (q as u128).checked_pow(bound) {
        Some(n) if n <= cap as u128 => {}
        _ => return Err(CountingError::EnumerationTooLarge { cap }),
    }
    let free: u32 = (0..arrows.len()).filter(|&a| !in_square[a]).map(entries).sum();
    let free_factor = (q as u128).checked_pow(free).ok_or(CountingError::Overflow)?;

    let enumerated: Vec<usize> = (0..arrows.len()).filter(|&a| in_square[a]).collect();
    // squares become checkable once their last arrow is assigned
    let mut checks = vec![Vec::new(); enumerated.len()];
    for (i, s) in quiver.squares().iter().enumerate() {
        let last =
            s.a.iter()
                .chain(&s.b)
                .map(|a| enumerated.iter().position(|x| x == a).unwrap())
                .max()
                .unwrap();
        checks[last].push(i);
    }

    fn all_matrices(f: &PrimeField, rows: usize, cols: usize) -> Vec<Matrix<PrimeField>> {
        let q = f.modulus();
        let n = (rows * cols) as u32;
        (0..q.pow(n))
            .map(|mut code| {
                Matrix::from_fn(f, rows, cols, |_, _| {
                    let x = code % q;
                    code /= q;
                    x
                })
            })
            .collect()
    }

    fn go(
        k: usize,
        enumerated: &[usize],
        options: &[Vec<Matrix<PrimeField>>],
        checks: &[Vec<usize>],
        quiver: &BoundQuiver,
        maps: &mut Vec<Option<Matrix<PrimeField>>>,
    ) -> u128 {
        if k == enumerated.len() {
            return 1;
        }
        let a = enumerated[k];
        let mut total = 0;
        for m in &options[k] {
            maps[a] = Some(m.clone());
            let ok = checks[k].iter().all(|&i| {
                let s = quiver.squares()[i];
                let get = |x: usize| maps[x].as_ref().unwrap();
                get(s.a[1]).mul(get(s.a[0])) == get(s.b[1]).mul(get(s.b[0]))
            });
            if ok {
                total += go(k + 1, enumerated, options, checks, quiver, maps);
            }
        }
        maps[a] = None;
        total
    }

    let options: Vec<Vec<Matrix<PrimeField>>> = enumerated
        .iter()
        .map(|&a| all_matrices(&f, g[arrows[a].target], g[arrows[a].source]))
        .collect();
    let mut maps = vec![None; arrows.len()];
    let count = go(0, &enumerated, &options, &checks, quiver, &mut maps);
    count.checked_mul(free_factor).ok_or(CountingError::Overflow)
}

/// Fits a polynomial of degree at most `degree_bound` through the first
/// `degree_bound + 1` samples and checks it against the rest.
pub fn interpolate(
    samples: &[CountSample],
    degree_bound: usize,
) -> Result<InterpolationResult, CountingError> {
    let needed = degree_bound + 2;
    let mut qs: Vec<u64> = samples.iter().map(|s| s.q).collect();
    qs.sort_unstable();
    qs.dedup();
    if qs.len() != samples.len() || samples.len() < needed {
        return Err(CountingError::TooFewSamples {
            needed,
            found: qs.len(),
        });
    }
    let (fit, held) = samples.split_at(degree_bound + 1);
    let n = fit.len();
    let r = Rationals;
    let mut rows = Vec::with_capacity(n);
    for s in fit {
        let x = BigRational::from_integer(BigInt::from(s.q));
        let mut row = Vec::with_capacity(n + 1);
        let mut pw = BigRational::one();
        for _ in 0..n {
            row.push(pw.clone());
            pw *= &x;
        }
        row.push(BigRational::from_integer(BigInt::from(s.count)));
        rows.push(row);
    }
    let (rref, _) = Matrix::from_rows(&r, n + 1, &rows).rref();
    let mut coeffs = Vec::with_capacity(n);
    for k in 0..n {
        let c = rref.get(k, n);
        if !c.is_integer() {
            return Err(CountingError::NotPolynomialCount {
                degree_bound,
                reason: format!("coefficient of q^{k} is {c}"),
            });
        }
        coeffs.push(c.to_integer());
    }
    let polynomial = Polynomial::new(coeffs);
    for s in held {
        let v = polynomial.eval(&BigInt::from(s.q));
        if v != BigInt::from(s.count) {
            return Err(CountingError::NotPolynomialCount {
                degree_bound,
                reason: format!("fit predicts {v} at q = {}, counted {}", s.q, s.count),
            });
        }
    }
    Ok(InterpolationResult {
        polynomial,
        degree_bound,
        verification: held.iter().map(|s| (s.q, s.count)).collect(),
    })
}

/// Degree bound for interpolation: the ambient dimension, lowered to
/// `#primes − 2` when primes are given explicitly.
pub fn degree_bound(ambient: usize, primes: Option<&[u64]>) -> usize {
    match primes {
        None => ambient,
        Some(p) => ambient.min(p.len().saturating_sub(2)),
    }
}

/// Enough of the smallest primes for a fit of the given degree plus one
/// held-out sample.
pub fn default_primes(degree_bound: usize) -> Vec<u64> {
    first_primes(degree_bound + 2)
}

/// Counts at each prime, in the given order, computed in parallel.
pub fn grassmannian_samples(
    gr: &QuiverGrassmannian,
    primes: &[u64],
    cap: u64,
) -> Result<Vec<CountSample>, CountingError> {
    primes
        .par_iter()
        .map(|&q| {
            Ok(CountSample {
                q,
                count: count_grassmannian_points(gr, q, cap)?,
                target: CountTarget::Grassmannian,
            })
        })
        .collect()
}

pub fn repvariety_samples(
    quiver: &BoundQuiver,
    g: &[usize],
    primes: &[u64],
    cap: u64,
) -> Result<Vec<CountSample>, CountingError> {
    primes
        .par_iter()
        .map(|&q| {
            Ok(CountSample {
                q,
                count: count_repvariety_points(quiver, g, q, cap)?,
                target: CountTarget::RepVariety(g.to_vec()),
            })
        })
        .collect()
}

/// Counts and interpolates the Grassmannian. Without explicit primes, the
/// ambient dimension bounds the degree.
pub fn grassmannian_polynomial(
    gr: &QuiverGrassmannian,
    primes: Option<&[u64]>,
    cap: u64,
) -> Result<(Vec<CountSample>, Result<InterpolationResult, CountingError>), CountingError> {
    let bound = degree_bound(gr.ambient_dimension(), primes);
    let primes = primes.map_or_else(|| default_primes(bound), <[u64]>::to_vec);
    let samples = grassmannian_samples(gr, &primes, cap)?;
    let fit = interpolate(&samples, bound);
    Ok((samples, fit))
}

/// `[R_g]` by counting: the degree is bounded by the number of matrix entries.
pub fn repvariety_polynomial(
    quiver: &BoundQuiver,
    g: &[usize],
    cap: u64,
) -> Result<Polynomial, CountingError> {
    let bound: usize = quiver.arrows().iter().map(|a| g[a.source] * g[a.target]).sum();
    let squares_free = quiver.squares().is_empty();
    if squares_free {
        return Ok(Polynomial::monomial(bound));
    }
    let samples = repvariety_samples(quiver, g, &default_primes(bound), cap)?;
    Ok(interpolate(&samples, bound)?.polynomial)
}
