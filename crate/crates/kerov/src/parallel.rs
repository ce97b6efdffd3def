//! Parallel drivers. Every result is collected in input order, so output
//! does not depend on the thread count.

use std::collections::BTreeMap;

use kerov_core::field::{FieldElement, Poly};
use kerov_core::kerov::{
    ch_degree, substitute_moments, top_term_check, verify_degree_bounds, KerovBasis, KerovPolynomial, KerovSolver,
};
use kerov_core::partitions::{partitions_up_to, Partition};
use kerov_core::plancherel::{grow_sample, plancherel_numerators, sample_stats, EnumerationCaps, SampleStats};
use kerov_core::{Error, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Runs `f` on a pool of `threads` workers.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Seed of sample `index`; each sample owns one ChaCha stream.
pub fn sample_seed(base: u64, index: usize) -> u64 {
    base.wrapping_add(index as u64)
}

pub fn sample_rng(base: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(sample_seed(base, index))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleRow {
    pub seed: u64,
    pub stats: SampleStats,
}

pub fn run_samples(n: usize, alpha: f64, samples: usize, base_seed: u64, step: f64) -> Result<Vec<SampleRow>> {
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let g = grow_sample(n, alpha, &mut sample_rng(base_seed, i))?;
            Ok(SampleRow {
                seed: sample_seed(base_seed, i),
                stats: sample_stats(&g.last(), alpha, step)?,
            })
        })
        .collect()
}

/// Counts of the final diagram over `samples` growths of `n` boxes.
pub fn endpoint_counts(n: usize, alpha: f64, samples: usize, base_seed: u64) -> Result<BTreeMap<Partition, usize>> {
    let finals: Vec<Partition> = (0..samples)
        .into_par_iter()
        .map(|i| grow_sample(n, alpha, &mut sample_rng(base_seed, i)).map(|g| g.last()))
        .collect::<Result<_>>()?;
    let mut counts = BTreeMap::new();
    for l in finals {
        *counts.entry(l).or_insert(0) += 1;
    }
    Ok(counts)
}

/// `E_{P_n}[F]` with the terms evaluated in parallel and summed in order.
pub fn expectation<E>(n: usize, caps: &EnumerationCaps, f: E) -> Result<FieldElement>
where
    E: Fn(&Partition) -> Result<FieldElement> + Sync,
{
    if n > caps.exact {
        return Err(Error::CapExceeded {
            what: "exact enumeration",
            requested: n,
            cap: caps.exact,
        });
    }
    let common = plancherel_numerators(n);
    let terms: Vec<FieldElement> = common
        .numer
        .par_iter()
        .map(|(lambda, num)| {
            let v = f(lambda)?;
            Ok(&FieldElement::from_poly(num.square_variable()) * &v)
        })
        .collect::<Result<_>>()?;
    let total: FieldElement = terms.into_iter().sum();
    total.checked_div(&FieldElement::from_poly(Poly::square_variable(&common.denom)))
}

/// Outcome of the full check of one `μ`.
#[derive(Debug, Clone)]
pub struct MuVerdict {
    pub mu: Partition,
    pub k: KerovPolynomial,
    pub l: KerovPolynomial,
    /// Diagrams checked one size beyond the fitting set; 0 when that size
    /// exceeds the Jack cap.
    pub golden: usize,
    /// First failure, if any.
    pub failure: Option<Error>,
}

impl MuVerdict {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Non-empty `μ` with `|μ|+ℓ(μ) ≤ d`.
pub fn mus_up_to(d: usize) -> Vec<Partition> {
    partitions_up_to(d).into_iter().filter(|m| !m.is_empty() && ch_degree(m) <= d).collect()
}

/// Prepares `solver` for every `μ` in `mus` (sequential, it fills caches).
pub fn prepare_solver(solver: &mut KerovSolver, mus: &[Partition]) -> Result<()> {
    for mu in mus {
        solver.prepare_for(mu)?;
    }
    Ok(())
}

/// `K_μ` and `L_μ`, their degree bounds and parity, the top-degree term,
/// the moment-to-cumulant substitution and the out-of-sample check.
pub fn verify_mu(solver: &KerovSolver, mu: &Partition) -> Result<MuVerdict> {
    let k = solver.compute(mu, KerovBasis::R)?;
    let l = solver.compute(mu, KerovBasis::M)?;
    let mut failure = verify_degree_bounds(&k).err();
    failure = failure.or(verify_degree_bounds(&l).err());
    failure = failure.or(top_term_check(&k).err());
    if failure.is_none() && substitute_moments(&l) != k {
        failure = Some(Error::TheoremViolation {
            mu: mu.clone(),
            rho: Partition::empty(),
            detail: "moment-to-cumulant substitution of L differs from K".into(),
        });
    }
    let size = ch_degree(mu) + 1;
    let mut golden = 0;
    if failure.is_none() && size <= solver.book().cap() {
        match solver.golden_check(&k, size) {
            Ok(c) => golden = c,
            Err(e) => failure = Some(e),
        }
    }
    Ok(MuVerdict {
        mu: mu.clone(),
        k,
        l,
        golden,
        failure,
    })
}

pub fn verify_all(solver: &KerovSolver, mus: &[Partition]) -> Result<Vec<MuVerdict>> {
    mus.par_iter().map(|mu| verify_mu(solver, mu)).collect()
}
