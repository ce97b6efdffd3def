//! Jack–Plancherel measure `P_n(λ) = αⁿ n! / j_λ`, exact expectations,
//! the corner-growth sampler and limit-shape statistics.
//!
//! Symbolic computations inside this module run in ℚ(α), where every
//! quantity involved is rational; results are handed out in ℚ(t) through
//! `α = t²`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand_core::RngCore;

use crate::cumulants::{anisotropic_mr, free_cumulants, moments};
use crate::diagrams::{corners, sup_distance, LimitShape};
use crate::error::{Error, Result};
use crate::field::{factorial, int, Field, FieldElement, Poly, Rational};
use crate::partitions::{enumerate_partitions, Partition};

pub const DEFAULT_EXACT_CAP: usize = 30;
pub const DEFAULT_FLOAT_CAP: usize = 60;

/// Largest `n` enumerated in exact and in floating mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub exact: usize,
    pub float: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            exact: DEFAULT_EXACT_CAP,
            float: DEFAULT_FLOAT_CAP,
        }
    }
}

impl EnumerationCaps {
    fn check_exact(&self, n: usize) -> Result<()> {
        if n > self.exact {
            return Err(Error::CapExceeded {
                what: "exact enumeration",
                requested: n,
                cap: self.exact,
            });
        }
        Ok(())
    }

    fn check_float(&self, n: usize) -> Result<()> {
        if n > self.float {
            return Err(Error::CapExceeded {
                what: "floating enumeration",
                requested: n,
                cap: self.float,
            });
        }
        Ok(())
    }
}

/// The two linear factors `(α a + ℓ + 1)` and `(α (a+1) + ℓ)` of a box,
/// as `(α-coefficient, constant)`.
fn hook_forms(lambda: &Partition) -> impl Iterator<Item = (usize, usize)> + '_ {
    lambda.boxes().flat_map(move |(r, c)| {
        let (a, l) = lambda.arm_leg(r, c).expect("box of lambda");
        [(a, l + 1), (a + 1, l)]
    })
}

/// `j_λ = Π_□ (α a(□) + ℓ(□) + 1)(α a(□) + ℓ(□) + α)` in ℤ[α].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JackHook {
    pub lambda: Partition,
    pub value: Poly,
}

impl JackHook {
    pub fn eval<F: Field>(&self, alpha: &F) -> F {
        hook_value(&self.lambda, alpha)
    }
}

pub fn jack_hook(lambda: &Partition) -> JackHook {
    let mut value = Poly::one();
    for (a, b) in hook_forms(lambda) {
        value = &value * &Poly::from_i64s(&[b as i64, a as i64]);
    }
    JackHook {
        lambda: lambda.clone(),
        value,
    }
}

fn hook_value<F: Field>(lambda: &Partition, alpha: &F) -> F {
    hook_forms(lambda).fold(F::one(), |acc, (a, b)| acc * (alpha.clone() * F::from_i64(a as i64) + F::from_i64(b as i64)))
}

/// `P_n(λ)` in any field, as `Π_k (α k)/(h₁ h₂)` over the boxes so that
/// floating values stay in range.
pub fn plancherel_prob<F: Field>(lambda: &Partition, alpha: &F) -> F {
    let mut forms = hook_forms(lambda);
    let mut p = F::one();
    for k in 1..=lambda.size() {
        let mut den = F::one();
        for _ in 0..2 {
            let (a, b) = forms.next().expect("two forms per box");
            den = den * (alpha.clone() * F::from_i64(a as i64) + F::from_i64(b as i64));
        }
        p = p * (alpha.clone() * F::from_i64(k as i64)) / den;
    }
    p
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlancherelDist<F> {
    pub n: usize,
    /// Partitions of `n` in reverse lexicographic order.
    pub probs: Vec<(Partition, F)>,
}

impl<F: Field> PlancherelDist<F> {
    pub fn total(&self) -> F {
        self.probs.iter().fold(F::zero(), |acc, (_, p)| acc + p.clone())
    }

    pub fn get(&self, lambda: &Partition) -> Option<&F> {
        self.probs.iter().find(|(l, _)| l == lambda).map(|(_, p)| p)
    }
}

/// `P_n` over ℚ(t) with `α = t²`; the total is certified equal to 1 by
/// [`plancherel_sum_is_one`].
pub fn plancherel_dist_symbolic(n: usize, caps: &EnumerationCaps) -> Result<PlancherelDist<FieldElement>> {
    caps.check_exact(n)?;
    if !plancherel_sum_is_one(n) {
        return Err(Error::Internal(alloc::format!("symbolic Plancherel weights of size {n} do not sum to 1")));
    }
    let common = plancherel_numerators(n);
    let den = common.denom.square_variable();
    let probs = common
        .numer
        .into_iter()
        .map(|(lambda, num)| Ok((lambda, FieldElement::new(num.square_variable(), den.clone())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PlancherelDist { n, probs })
}

pub fn plancherel_dist_rational(n: usize, alpha: &Rational, caps: &EnumerationCaps) -> Result<PlancherelDist<Rational>> {
    caps.check_exact(n)?;
    if alpha <= &Rational::zero() {
        return Err(Error::NonPositiveStretch);
    }
    let probs: Vec<_> = enumerate_partitions(n).into_iter().map(|l| {
        let p = plancherel_prob(&l, alpha);
        (l, p)
    }).collect();
    let dist = PlancherelDist { n, probs };
    if !dist.total().is_one() {
        return Err(Error::Internal(alloc::format!("Plancherel weights at alpha = {alpha} sum to {}", dist.total())));
    }
    Ok(dist)
}

pub fn plancherel_dist_f64(n: usize, alpha: f64, caps: &EnumerationCaps) -> Result<PlancherelDist<f64>> {
    caps.check_float(n)?;
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::NonPositiveStretch);
    }
    let probs: Vec<_> = enumerate_partitions(n).into_iter().map(|l| {
        let p = plancherel_prob(&l, &alpha);
        (l, p)
    }).collect();
    let dist = PlancherelDist { n, probs };
    let total = dist.total();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::Internal(alloc::format!("Plancherel weights at alpha = {alpha} sum to {total}")));
    }
    Ok(dist)
}

/// `j_λ` as `content · Π (aα + b)^m` over primitive forms `(a, b)`.
fn factored_hook(lambda: &Partition) -> (BigInt, BTreeMap<(usize, usize), u32>) {
    let mut content = BigInt::one();
    let mut forms = BTreeMap::new();
    for (a, b) in hook_forms(lambda) {
        let g = a.gcd(&b);
        content *= g;
        let f = (a / g, b / g);
        if f.0 != 0 {
            *forms.entry(f).or_insert(0) += 1;
        }
    }
    (content, forms)
}

/// `P_n(λ) = numer_λ(α) / denom(α)` over one common denominator in ℚ[α].
#[derive(Debug, Clone)]
pub struct PlancherelNumerators {
    pub n: usize,
    pub denom: Poly,
    pub numer: Vec<(Partition, Poly)>,
}

impl PlancherelNumerators {
    pub fn sums_to_one(&self) -> bool {
        let total = self.numer.iter().fold(Poly::zero(), |acc, (_, p)| &acc + p);
        total == self.denom
    }
}

fn form_poly(f: (usize, usize)) -> Poly {
    Poly::from_i64s(&[f.1 as i64, f.0 as i64])
}

/// Least common multiple of the `j_λ` as a product of linear forms, and
/// each numerator as the complementary product.
pub fn plancherel_numerators(n: usize) -> PlancherelNumerators {
    let parts = enumerate_partitions(n);
    let factored: Vec<_> = parts.iter().map(factored_hook).collect();
    let mut lcm: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (_, forms) in &factored {
        for (&f, &m) in forms {
            let e = lcm.entry(f).or_insert(0);
            *e = (*e).max(m);
        }
    }
    let denom = lcm.iter().fold(Poly::one(), |acc, (&f, &m)| &acc * &form_poly(f).pow(m));
    let nf = factorial(n as u64);
    let numer = parts
        .into_iter()
        .zip(factored)
        .map(|(lambda, (content, forms))| {
            let mut p = Poly::monomial(Rational::new(nf.clone(), content), n);
            for (&f, &m) in &lcm {
                let missing = m - forms.get(&f).copied().unwrap_or(0);
                if missing > 0 {
                    p = &p * &form_poly(f).pow(missing);
                }
            }
            (lambda, p)
        })
        .collect();
    PlancherelNumerators { n, denom, numer }
}

/// `Σ_λ⊢n P_n(λ) = 1` as an identity in ℚ(α), hence in ℚ(t).
///
/// Both sides times the common denominator are polynomials of degree at
/// most `D`, so agreement at the integer points `1, …, D+1` proves the
/// identity. Each factor is evaluated without expanding any product.
pub fn plancherel_sum_is_one(n: usize) -> bool {
    let factored: Vec<_> = enumerate_partitions(n).iter().map(factored_hook).collect();
    let mut lcm: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (_, forms) in &factored {
        for (&f, &m) in forms {
            let e = lcm.entry(f).or_insert(0);
            *e = (*e).max(m);
        }
    }
    let denom_degree: usize = lcm.values().map(|&m| m as usize).sum();
    let nf = factorial(n as u64);
    let terms: Vec<(Rational, Vec<((usize, usize), u32)>)> = factored
        .into_iter()
        .map(|(content, forms)| {
            let missing = lcm
                .iter()
                .map(|(&f, &m)| (f, m - forms.get(&f).copied().unwrap_or(0)))
                .filter(|&(_, e)| e > 0)
                .collect();
            (Rational::new(nf.clone(), content), missing)
        })
        .collect();
    let degree = terms
        .iter()
        .map(|(_, missing)| n + missing.iter().map(|&(_, e)| e as usize).sum::<usize>())
        .max()
        .unwrap_or(0)
        .max(denom_degree);
    let form_at = |f: (usize, usize), x: &BigInt| -> BigInt { x * BigInt::from(f.0) + BigInt::from(f.1) };
    (1..=degree as i64 + 1).all(|x| {
        let x = BigInt::from(x);
        let denom = lcm.iter().fold(BigInt::one(), |acc, (&f, &m)| acc * num_traits::pow(form_at(f, &x), m as usize));
        let xn = num_traits::pow(x.clone(), n);
        let total = terms.iter().fold(Rational::zero(), |acc, (c, missing)| {
            let prod = missing
                .iter()
                .fold(xn.clone(), |p, &(f, e)| p * num_traits::pow(form_at(f, &x), e as usize));
            acc + c * Rational::from_integer(prod)
        });
        total == Rational::from_integer(denom)
    })
}

/// `E_{P_n}[F] = Σ_λ P_n(λ) F(λ)` in ℚ(t).
pub fn exact_expectation<E>(n: usize, caps: &EnumerationCaps, mut f: E) -> Result<FieldElement>
where
    E: FnMut(&Partition) -> Result<FieldElement>,
{
    caps.check_exact(n)?;
    let common = plancherel_numerators(n);
    let mut acc = FieldElement::zero();
    for (lambda, num) in &common.numer {
        let v = f(lambda)?;
        if !v.is_zero() {
            acc = &acc + &(&FieldElement::from_poly(num.square_variable()) * &v);
        }
    }
    acc.checked_div(&FieldElement::from_poly(common.denom.square_variable()))
}

/// Newton interpolation through `(x_i, y_i)`, `i < k`, then the residual
/// `y − p(x)` at every later node.
fn newton_residuals<F: Field>(xs: &[i64], ys: &[F], k: usize) -> Vec<F> {
    let mut dd: Vec<F> = ys[..k].to_vec();
    for level in 1..k {
        for i in (level..k).rev() {
            let h = F::from_i64(xs[i] - xs[i - level]);
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / h;
        }
    }
    (k..xs.len())
        .map(|j| {
            let x = xs[j];
            let mut p = dd[k - 1].clone();
            for i in (0..k - 1).rev() {
                p = p * F::from_i64(x - xs[i]) + dd[i].clone();
            }
            ys[j].clone() - p
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct ExpectationDegreeReport {
    pub rho: Partition,
    /// `(n, E_{P_n}[Π M_{ρ_i}])`.
    pub values: Vec<(usize, FieldElement)>,
    /// Number of leading points the polynomial in `n` is fitted through.
    pub fitted: usize,
}

/// `E_{P_n}[Π M_{ρ_i}]` for `n ∈ ns`; the values are checked to lie on the
/// polynomial in `n` of degree `⌊|ρ|/2⌋` through the first points.
pub fn expectation_degree_check(
    rho: &Partition,
    ns: RangeInclusive<usize>,
    caps: &EnumerationCaps,
) -> Result<ExpectationDegreeReport> {
    let order = rho.parts().first().copied().unwrap_or(0);
    let mut values = Vec::new();
    for n in ns {
        let e = exact_expectation(n, caps, |lambda| {
            let (m, _) = anisotropic_mr(lambda, order.max(1));
            Ok(rho.parts().iter().fold(FieldElement::one(), |acc, &k| &acc * m.get(k)))
        })?;
        values.push((n, e));
    }
    let fitted = rho.size() / 2 + 1;
    if values.len() <= fitted {
        return Err(Error::Underdetermined {
            rows: values.len(),
            cols: fitted,
        });
    }
    let xs: Vec<i64> = values.iter().map(|(n, _)| *n as i64).collect();
    let ys: Vec<FieldElement> = values.iter().map(|(_, v)| v.clone()).collect();
    for (j, r) in newton_residuals(&xs, &ys, fitted).into_iter().enumerate() {
        if !r.is_zero() {
            return Err(Error::TheoremViolation {
                mu: rho.clone(),
                rho: rho.clone(),
                detail: alloc::format!(
                    "expectation at n = {} leaves the degree-{} polynomial in n",
                    xs[fitted + j],
                    fitted - 1
                ),
            });
        }
    }
    Ok(ExpectationDegreeReport {
        rho: rho.clone(),
        values,
        fitted,
    })
}

/// One-step growth probabilities `(row, p)` from `λ`: the transition-measure
/// mass of `T_{√α,1/√α}(λ)` at each outer corner, in increasing content.
///
/// Contents are scaled by `√α`, which leaves the masses unchanged, so every
/// quantity is rational in `α`.
pub fn transition_kernel<F: Field>(lambda: &Partition, alpha: &F) -> Vec<(usize, F)> {
    let scaled = |x: usize, y: usize| alpha.clone() * F::from_i64(x as i64) - F::from_i64(y as i64);
    let rows: Vec<usize> = lambda.addable_rows().into_iter().rev().collect();
    let outer: Vec<F> = rows.iter().map(|&j| scaled(lambda.part(j), j)).collect();
    let inner: Vec<F> = lambda
        .removable_rows()
        .into_iter()
        .rev()
        .map(|j| scaled(lambda.part(j), j + 1))
        .collect();
    rows.iter()
        .enumerate()
        .map(|(k, &row)| {
            let o = &outer[k];
            let mut mass = F::one();
            let mut others = outer.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, x)| x);
            for i in &inner {
                let d = others.next().expect("one fewer inner corner than outer");
                mass = mass * ((o.clone() - i.clone()) / (o.clone() - d.clone()));
            }
            (row, mass)
        })
        .collect()
}

/// `P_m(λ)` in ℚ(α), the variable standing for `α`.
fn prob_in_alpha(lambda: &Partition) -> Result<FieldElement> {
    let m = lambda.size();
    let num = Poly::monomial(Rational::from_integer(factorial(m as u64)), m);
    FieldElement::new(num, jack_hook(lambda).value)
}

/// Checks `Σ_{λ ⊂ Λ} P_m(λ) p(λ → Λ) = P_{m+1}(Λ)` in ℚ(α) for every
/// `Λ ⊢ m+1`; returns the number of diagrams checked.
pub fn kernel_consistency(m: usize) -> Result<usize> {
    let alpha = FieldElement::from_poly(Poly::x());
    let mut reached: BTreeMap<Partition, FieldElement> = BTreeMap::new();
    for lambda in enumerate_partitions(m) {
        let p = prob_in_alpha(&lambda)?;
        for (row, q) in transition_kernel(&lambda, &alpha) {
            let next = lambda.add_box(row).expect("addable row");
            let e = reached.entry(next).or_insert_with(FieldElement::zero);
            *e = &*e + &(&p * &q);
        }
    }
    for (big, got) in &reached {
        let want = prob_in_alpha(big)?;
        if *got != want {
            return Err(Error::TheoremViolation {
                mu: big.clone(),
                rho: Partition::empty(),
                detail: alloc::format!("one-step mass {got} differs from P_{}(Λ) = {want}", m + 1),
            });
        }
    }
    Ok(reached.len())
}

/// A growth trajectory `∅ = λ⁰ ⊂ … ⊂ λⁿ`, stored as the 0-based row that
/// receives each box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSample {
    pub rows: Vec<usize>,
}

impl GrowthSample {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `λ^m`.
    pub fn partition_at(&self, m: usize) -> Partition {
        let mut parts: Vec<usize> = Vec::new();
        for &r in &self.rows[..m] {
            if r == parts.len() {
                parts.push(1);
            } else {
                parts[r] += 1;
            }
        }
        Partition::new(parts)
    }

    pub fn last(&self) -> Partition {
        self.partition_at(self.rows.len())
    }

    pub fn trajectory(&self) -> Vec<Partition> {
        (0..=self.rows.len()).map(|m| self.partition_at(m)).collect()
    }
}

/// Uniform in `[0, 1)` from the top 53 bits.
fn unit_f64<R: RngCore + ?Sized>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Grows `n` boxes from `∅`, choosing each corner with its
/// transition-kernel probability.
pub fn grow_sample<R: RngCore + ?Sized>(n: usize, alpha: f64, rng: &mut R) -> Result<GrowthSample> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::NonPositiveStretch);
    }
    let mut lambda = Partition::empty();
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let kernel = transition_kernel(&lambda, &alpha);
        let total: f64 = kernel.iter().map(|(_, p)| p).sum();
        let u = unit_f64(rng) * total;
        let mut acc = 0.0;
        let mut pick = kernel.last().expect("at least one corner").0;
        for &(row, p) in &kernel {
            acc += p;
            if u < acc {
                pick = row;
                break;
            }
        }
        lambda = lambda.add_box(pick).expect("addable row");
        rows.push(pick);
    }
    Ok(GrowthSample { rows })
}

/// Statistics of one sample `λ ⊢ n` against the limit shape.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleStats {
    pub n: usize,
    pub alpha: f64,
    /// Sup distance of the profile of `T_{√(α/n),1/√(nα)}(λ)` to `Ω`.
    pub sup_dist: f64,
    /// `R_2, …, R_6` of the same diagram.
    pub cumulants: [f64; 5],
    pub rows_scaled: f64,
    pub cols_scaled: f64,
}

pub fn sample_stats(lambda: &Partition, alpha: f64, step: f64) -> Result<SampleStats> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::DimensionMismatch("empty diagram has no rescaling".into()));
    }
    let nf = n as f64;
    let diagram = corners::<f64>(lambda).stretch(&libm::sqrt(alpha / nf), &libm::sqrt(1.0 / (nf * alpha)))?;
    let sup_dist = sup_distance(&diagram.profile(), &LimitShape, step);
    let r = free_cumulants(&moments(&diagram, 6));
    let root = libm::sqrt(nf);
    Ok(SampleStats {
        n,
        alpha,
        sup_dist,
        cumulants: [*r.get(2), *r.get(3), *r.get(4), *r.get(5), *r.get(6)],
        rows_scaled: lambda.part(0) as f64 / root,
        cols_scaled: lambda.len() as f64 / root,
    })
}

/// Mean and order statistics; quantiles interpolate linearly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub count: usize,
    pub mean: f64,
    pub min: f64,
    pub q05: f64,
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
    pub q95: f64,
    pub max: f64,
}

impl Summary {
    /// `None` for an empty slice or one containing NaN.
    pub fn of(xs: &[f64]) -> Option<Self> {
        if xs.is_empty() || xs.iter().any(|x| x.is_nan()) {
            return None;
        }
        let mut v = xs.to_vec();
        v.sort_by(|a, b| a.partial_cmp(b).expect("no NaN"));
        let q = |p: f64| {
            let pos = p * (v.len() - 1) as f64;
            let lo = libm::floor(pos) as usize;
            let hi = (lo + 1).min(v.len() - 1);
            v[lo] + (v[hi] - v[lo]) * (pos - lo as f64)
        };
        Some(Summary {
            count: v.len(),
            mean: v.iter().sum::<f64>() / v.len() as f64,
            min: v[0],
            q05: q(0.05),
            q25: q(0.25),
            median: q(0.5),
            q75: q(0.75),
            q95: q(0.95),
            max: v[v.len() - 1],
        })
    }
}

/// `n(n−1)⋯(n−k+1)`.
pub fn falling_factorial(n: usize, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * int(n as i64 - i as i64))
}

/// Probability as `f64` for reporting.
pub fn to_f64_lossy(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
