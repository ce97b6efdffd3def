//! Kerov polynomials for Jack characters: `Ch_μ` as a polynomial in the
//! anisotropic moments (`L_μ`) or free cumulants (`K_μ`), with coefficients
//! in ℚ[γ].
//!
//! The coefficients are found by evaluation: `Ch_μ(λ) = Σ_ρ a_ρ Π X_{ρ_i}(λ)`
//! over all `λ` with `|λ| ≤ |μ|+ℓ(μ)`. The system is solved over ℚ at
//! `t = 2, 3, …`, each `a_ρ` is rebuilt as a rational function of `t`, and
//! the candidate is verified exactly in ℚ(t) against every row. Full column
//! rank at one rational point implies full rank over ℚ(t), so the solution
//! is the unique one. Membership in ℚ[γ] is then decided by `to_gamma`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cumulants::anisotropic_mr;
use crate::error::{Error, Result};
use crate::field::interp::reconstruct_vector;
use crate::field::{factorial, int, rank, solve_exact, to_gamma, FieldElement, GammaPolynomial, Rational};
use crate::jack::{JackBook, DEFAULT_JACK_CAP};
use crate::partitions::{enumerate_partitions, partitions_bounded, partitions_up_to, z_mu, Partition};

pub const DEFAULT_KEROV_CAP: usize = 8;

/// Which family the index partitions refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KerovBasis {
    /// Anisotropic moments `M_k`.
    M,
    /// Anisotropic free cumulants `R_k`.
    R,
}

impl KerovBasis {
    pub fn letter(self) -> char {
        match self {
            KerovBasis::M => 'M',
            KerovBasis::R => 'R',
        }
    }
}

/// `Σ_ρ c_ρ(γ) X_ρ` with `X_ρ = Π X_{ρ_i}`; every index has parts `≥ 2`
/// and every stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct KerovPolynomial {
    basis: KerovBasis,
    mu: Partition,
    terms: BTreeMap<Partition, GammaPolynomial>,
}

impl KerovPolynomial {
    pub fn new<I>(basis: KerovBasis, mu: Partition, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, GammaPolynomial)>,
    {
        let mut map: BTreeMap<Partition, GammaPolynomial> = BTreeMap::new();
        for (rho, c) in terms {
            let sum = match map.remove(&rho) {
                Some(old) => &old + &c,
                None => c,
            };
            if !sum.is_zero() {
                map.insert(rho, sum);
            }
        }
        KerovPolynomial { basis, mu, terms: map }
    }

    pub fn basis(&self) -> KerovBasis {
        self.basis
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn coeff(&self, rho: &Partition) -> GammaPolynomial {
        self.terms.get(rho).cloned().unwrap_or_else(GammaPolynomial::zero)
    }

    /// Terms by decreasing `|ρ|`, ties in reverse lexicographic order.
    pub fn terms(&self) -> Vec<(&Partition, &GammaPolynomial)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| b.0.cmp(a.0)));
        v
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|ρ|` over nonzero terms; `γ` has degree zero.
    pub fn gradation_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Value at `X_k = xs[k]`, with `γ = (1 − t²)/t`.
    pub fn eval(&self, xs: &[FieldElement]) -> FieldElement {
        let mut acc = FieldElement::zero();
        for (rho, c) in &self.terms {
            let mut term = c.to_field_element();
            for &k in rho.parts() {
                term = &term * &xs[k];
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Monomial text such as `R3^2*R2`, empty for the constant monomial.
    pub fn render_monomial(&self, rho: &Partition) -> String {
        let mut out = String::new();
        for (k, m) in rho.multiplicities() {
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&alloc::format!("{}{k}", self.basis.letter()));
            if m > 1 {
                out.push_str(&alloc::format!("^{m}"));
            }
        }
        out
    }

    /// `R3 + g*R2`, `R3^2 + 2*g*R3*R2 - 4*R4 + (-2 + g^2)*R2^2 - …`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (rho, c) in self.terms() {
            let negative = c.coeffs().iter().all(|a| !num_traits::Signed::is_positive(a));
            let c = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = self.render_monomial(rho);
            let coeff = c.render();
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&mono);
            } else if c.term_count() > 1 {
                out.push_str(&alloc::format!("({coeff})*{mono}"));
            } else {
                out.push_str(&alloc::format!("{coeff}*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for KerovPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for KerovPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] = {}", if self.basis == KerovBasis::R { 'K' } else { 'L' }, self.mu, self.render())
    }
}

/// `|μ| + ℓ(μ)`, the gradation degree of `Ch_μ`.
pub fn ch_degree(mu: &Partition) -> usize {
    mu.size() + mu.len()
}

/// Index partitions with all parts `≥ 2` and `|ρ| ≤ d`, the empty one first.
pub fn kerov_index_set(d: usize) -> Vec<Partition> {
    (0..=d).flat_map(|s| partitions_bounded(s, s, 2)).collect()
}

/// Symbolic `M_k(λ)`, `R_k(λ)` for `k ≤ order`; index 0 holds `M₀ = 1` and
/// an unused `R₀ = 0`.
#[derive(Debug, Clone)]
struct Evaluations {
    m: Vec<FieldElement>,
    r: Vec<FieldElement>,
}

impl Evaluations {
    fn of(lambda: &Partition, order: usize) -> Self {
        let (m, r) = anisotropic_mr(lambda, order);
        let mut rv = Vec::with_capacity(order + 1);
        rv.push(FieldElement::zero());
        rv.extend(r.values);
        Evaluations { m: m.values, r: rv }
    }

    fn get(&self, basis: KerovBasis) -> &[FieldElement] {
        match basis {
            KerovBasis::M => &self.m,
            KerovBasis::R => &self.r,
        }
    }
}

/// Solver for `L_μ` and `K_μ`. Jack tables and the symbolic moments of
/// every diagram involved are prepared once; solving then only reads them.
#[derive(Debug, Clone)]
pub struct KerovSolver {
    cap: usize,
    book: JackBook,
    order: usize,
    evals: BTreeMap<Partition, Evaluations>,
}

impl Default for KerovSolver {
    fn default() -> Self {
        Self::new(DEFAULT_KEROV_CAP, JackBook::new(DEFAULT_JACK_CAP))
    }
}

impl KerovSolver {
    pub fn new(cap: usize, book: JackBook) -> Self {
        KerovSolver {
            cap,
            book,
            order: 0,
            evals: BTreeMap::new(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn book(&self) -> &JackBook {
        &self.book
    }

    pub fn book_mut(&mut self) -> &mut JackBook {
        &mut self.book
    }

    fn check_cap(&self, mu: &Partition) -> Result<usize> {
        let d = ch_degree(mu);
        if d > self.cap {
            return Err(Error::CapExceeded {
                what: "kerov |mu|+l(mu)",
                requested: d,
                cap: self.cap,
            });
        }
        Ok(d)
    }

    /// Makes Jack tables and moments available for diagrams up to size
    /// `size`, with moments up to order `order`.
    pub fn prepare(&mut self, size: usize, order: usize) -> Result<()> {
        self.book.ensure_up_to(size)?;
        if order > self.order {
            self.evals.clear();
            self.order = order;
        }
        for lambda in partitions_up_to(size) {
            if !self.evals.contains_key(&lambda) {
                let e = Evaluations::of(&lambda, self.order);
                self.evals.insert(lambda, e);
            }
        }
        Ok(())
    }

    /// Prepares everything needed to compute and golden-check `μ`.
    pub fn prepare_for(&mut self, mu: &Partition) -> Result<()> {
        let d = self.check_cap(mu)?;
        let size = (d + 1).min(self.book.cap());
        self.prepare(size, d.max(self.order))
    }

    fn evaluations(&self, lambda: &Partition) -> Result<&Evaluations> {
        self.evals
            .get(lambda)
            .ok_or_else(|| Error::Internal(alloc::format!("moments of {lambda} not prepared")))
    }

    pub fn compute_l(&mut self, mu: &Partition) -> Result<KerovPolynomial> {
        self.prepare_for(mu)?;
        self.compute(mu, KerovBasis::M)
    }

    pub fn compute_k(&mut self, mu: &Partition) -> Result<KerovPolynomial> {
        self.prepare_for(mu)?;
        self.compute(mu, KerovBasis::R)
    }

    /// Solves for `μ` using prepared data only.
    pub fn compute(&self, mu: &Partition, basis: KerovBasis) -> Result<KerovPolynomial> {
        let d = self.check_cap(mu)?;
        let unknowns = kerov_index_set(d);
        let mut last_err = None;
        for extra in 0..=3 {
            let size = d + extra;
            if size > self.book.cap() {
                return Err(last_err.unwrap_or(Error::CapExceeded {
                    what: "jack degree",
                    requested: size,
                    cap: self.book.cap(),
                }));
            }
            let rows = partitions_up_to(size);
            match self.solve_on(mu, basis, &unknowns, &rows) {
                Err(e @ Error::RankDeficient { .. }) => last_err = Some(e),
                other => return other,
            }
        }
        Err(last_err.expect("loop ran"))
    }

    fn row_entries(&self, lambda: &Partition, basis: KerovBasis, unknowns: &[Partition]) -> Result<Vec<FieldElement>> {
        let xs = self.evaluations(lambda)?.get(basis);
        Ok(unknowns
            .iter()
            .map(|rho| {
                let mut v = FieldElement::one();
                for &k in rho.parts() {
                    v = &v * &xs[k];
                }
                v
            })
            .collect())
    }

    fn solve_on(
        &self,
        mu: &Partition,
        basis: KerovBasis,
        unknowns: &[Partition],
        rows: &[Partition],
    ) -> Result<KerovPolynomial> {
        let mut matrix = Vec::with_capacity(rows.len());
        let mut rhs = Vec::with_capacity(rows.len());
        for lambda in rows {
            matrix.push(self.row_entries(lambda, basis, unknowns)?);
            rhs.push(self.book.ch_built(mu, lambda)?);
        }
        let cols = unknowns.len();
        let at = |x: &Rational| -> Option<(Vec<Vec<Rational>>, Vec<Rational>)> {
            let a = matrix
                .iter()
                .map(|r| r.iter().map(|c| c.eval(x)).collect::<Option<Vec<_>>>())
                .collect::<Option<Vec<_>>>()?;
            let b = rhs.iter().map(|c| c.eval(x)).collect::<Option<Vec<_>>>()?;
            Some((a, b))
        };

        // full rank at one point certifies full rank over ℚ(t)
        let probe = [int(2), int(3), Rational::new(BigInt::from(7), BigInt::from(5))];
        let full = probe
            .iter()
            .filter_map(|x| at(x))
            .any(|(a, _)| rank(&a) == cols);
        if !full {
            let best = probe.iter().filter_map(|x| at(x)).map(|(a, _)| rank(&a)).max().unwrap_or(0);
            return Err(Error::RankDeficient { rank: best, cols });
        }

        let max_points = 8 * ch_degree(mu) + 24;
        let solution = reconstruct_vector(cols, max_points, |x| {
            let Some((a, b)) = at(x) else { return Ok(None) };
            match solve_exact(&a, &b) {
                Ok(s) => Ok(Some(s.x)),
                Err(Error::RankDeficient { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        })?;

        for (i, lambda) in rows.iter().enumerate() {
            let mut lhs = FieldElement::zero();
            for (a, v) in solution.iter().zip(&matrix[i]) {
                if !a.is_zero() && !v.is_zero() {
                    lhs = &lhs + &(a * v);
                }
            }
            if lhs != rhs[i] {
                return Err(Error::Internal(alloc::format!(
                    "reconstructed coefficients for {mu} fail at {lambda}"
                )));
            }
        }

        let mut terms = Vec::new();
        for (rho, a) in unknowns.iter().zip(solution) {
            if a.is_zero() {
                continue;
            }
            if rho.is_empty() && !mu.is_empty() {
                return Err(Error::TheoremViolation {
                    mu: mu.clone(),
                    rho: rho.clone(),
                    detail: alloc::format!("nonzero constant term {a}"),
                });
            }
            let g = to_gamma(&a).ok_or_else(|| Error::PolynomialityViolation {
                mu: mu.clone(),
                rho: rho.clone(),
            })?;
            terms.push((rho.clone(), g));
        }
        Ok(KerovPolynomial::new(basis, mu.clone(), terms))
    }

    /// Evaluates `p` at `X(λ)` for every `λ` of size `size` and compares with
    /// `Ch_μ(λ)`. Returns the number of diagrams checked.
    pub fn golden_check(&self, p: &KerovPolynomial, size: usize) -> Result<usize> {
        let lambdas = enumerate_partitions(size);
        for lambda in &lambdas {
            let xs = self.evaluations(lambda)?.get(p.basis());
            let got = p.eval(xs);
            let want = self.book.ch_built(p.mu(), lambda)?;
            if got != want {
                return Err(Error::TheoremViolation {
                    mu: p.mu().clone(),
                    rho: lambda.clone(),
                    detail: alloc::format!("polynomial gives {got}, character is {want}"),
                });
            }
        }
        Ok(lambdas.len())
    }

    /// `z_μ θ_μ(λ)` for `|λ| = |μ|`, assembled term by term from `L_μ` as
    /// `Σ_ρ t^{e_ρ} a_ρ(γ) Π t^{ρ_i−2} M_{ρ_i}(λ)` with
    /// `e_ρ = |μ|−ℓ(μ)−(|ρ|−2ℓ(ρ))`. Fails unless every term and the total
    /// are polynomials in `α`.
    pub fn lapointe_vinet_assembly(&self, l: &KerovPolynomial, lambda: &Partition) -> Result<FieldElement> {
        let mu = l.mu();
        if l.basis() != KerovBasis::M {
            return Err(Error::Internal("assembly expects the moment basis".into()));
        }
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch(mu.size(), lambda.size()));
        }
        let ms = &self.evaluations(lambda)?.m;
        let base = (mu.size() - mu.len()) as i64;
        let mut total = FieldElement::zero();
        for (rho, a) in l.terms() {
            let e = base - (rho.size() as i64 - 2 * rho.len() as i64);
            let mut term = &a.to_field_element() * &FieldElement::t_pow(e);
            if !is_alpha_polynomial(&term) {
                return Err(Error::TheoremViolation {
                    mu: mu.clone(),
                    rho: rho.clone(),
                    detail: alloc::format!("t^{e} times the coefficient is not a polynomial in alpha"),
                });
            }
            for &k in rho.parts() {
                let scaled = &ms[k] * &FieldElement::t_pow(k as i64 - 2);
                term = &term * &scaled;
            }
            total = &total + &term;
        }
        if !is_alpha_polynomial(&total) {
            return Err(Error::TheoremViolation {
                mu: mu.clone(),
                rho: Partition::empty(),
                detail: alloc::format!("assembled value {total} is not a polynomial in alpha"),
            });
        }
        Ok(total)
    }
}

/// In ℚ[t²].
pub fn is_alpha_polynomial(c: &FieldElement) -> bool {
    c.as_polynomial().is_some_and(|p| p.unsquare_variable().is_some())
}

/// `M_k = Σ_{σ ⊢ k, parts ≥ 2} #NC(σ) R_σ`, where the number of noncrossing
/// partitions of `[k]` with block sizes `σ` is `k! / ((k−ℓ+1)! Π m_i!)`.
pub fn moment_in_cumulants(k: usize) -> Vec<(Partition, Rational)> {
    partitions_bounded(k, k, 2)
        .into_iter()
        .map(|sigma| {
            let l = sigma.len();
            let mut den = factorial((k + 1 - l) as u64);
            for (_, m) in sigma.multiplicities() {
                den *= factorial(m as u64);
            }
            let c = Rational::new(factorial(k as u64), den);
            (sigma, c)
        })
        .collect()
}

/// Rewrites a moment-basis polynomial in free cumulants.
pub fn substitute_moments(l: &KerovPolynomial) -> KerovPolynomial {
    assert_eq!(l.basis(), KerovBasis::M);
    let mut out: Vec<(Partition, GammaPolynomial)> = Vec::new();
    for (rho, a) in l.terms() {
        let mut expansion: BTreeMap<Partition, Rational> = BTreeMap::new();
        expansion.insert(Partition::empty(), Rational::one());
        for &k in rho.parts() {
            let mk = moment_in_cumulants(k);
            let mut next: BTreeMap<Partition, Rational> = BTreeMap::new();
            for (s, cs) in &expansion {
                for (t, ct) in &mk {
                    *next.entry(s.union(t)).or_insert_with(Rational::zero) += cs * ct;
                }
            }
            expansion = next;
        }
        for (sigma, c) in expansion {
            out.push((sigma, a.scale(&c)));
        }
    }
    KerovPolynomial::new(KerovBasis::R, l.mu().clone(), out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRecord {
    pub rho: Partition,
    /// Degree in `γ`.
    pub degree: usize,
    /// `min(|μ|+ℓ(μ)−|ρ|, |μ|−ℓ(μ)−(|ρ|−2ℓ(ρ)))`.
    pub bound: i64,
    pub within_bound: bool,
    /// Every nonzero exponent of `γ` is `≡ |μ|+ℓ(μ)−|ρ| (mod 2)`.
    pub parity_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub mu: Partition,
    pub basis: KerovBasis,
    pub records: Vec<DegreeRecord>,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.within_bound && r.parity_ok)
    }

    pub fn violations(&self) -> impl Iterator<Item = &DegreeRecord> {
        self.records.iter().filter(|r| !(r.within_bound && r.parity_ok))
    }
}

pub fn degree_report(p: &KerovPolynomial) -> DegreeReport {
    let mu = p.mu();
    let d = ch_degree(mu) as i64;
    let records = p
        .terms()
        .into_iter()
        .map(|(rho, c)| {
            let size = rho.size() as i64;
            let bound = (d - size).min(mu.size() as i64 - mu.len() as i64 - (size - 2 * rho.len() as i64));
            let degree = c.degree().unwrap_or(0);
            let parity = (d - size).rem_euclid(2) as usize;
            DegreeRecord {
                rho: rho.clone(),
                degree,
                bound,
                within_bound: (degree as i64) <= bound,
                parity_ok: c.exponents().all(|j| j % 2 == parity),
            }
        })
        .collect();
    DegreeReport {
        mu: mu.clone(),
        basis: p.basis(),
        records,
    }
}

/// The report, or a violation naming the first offending index.
pub fn verify_degree_bounds(p: &KerovPolynomial) -> Result<DegreeReport> {
    let report = degree_report(p);
    if let Some(r) = report.violations().next() {
        return Err(Error::TheoremViolation {
            mu: p.mu().clone(),
            rho: r.rho.clone(),
            detail: alloc::format!(
                "gamma-degree {} against bound {}, parity {}",
                r.degree,
                r.bound,
                if r.parity_ok { "ok" } else { "wrong" }
            ),
        });
    }
    Ok(report)
}

/// `max (|μ|+ℓ(μ))` over the nonzero terms of `Σ c_μ Ch_μ`.
pub fn ch_combination_degree(terms: &[(Partition, FieldElement)]) -> Option<usize> {
    terms.iter().filter(|(_, c)| !c.is_zero()).map(|(mu, _)| ch_degree(mu)).max()
}

/// `K_μ = Π R_{μ_i+1} + (terms of gradation < |μ|+ℓ(μ))`.
pub fn top_term_check(k: &KerovPolynomial) -> Result<()> {
    let mu = k.mu();
    let top = mu.shift_parts(1);
    let d = ch_degree(mu);
    let fail = |rho: &Partition, detail: String| Error::TheoremViolation {
        mu: mu.clone(),
        rho: rho.clone(),
        detail,
    };
    if k.coeff(&top) != GammaPolynomial::one() {
        return Err(fail(&top, alloc::format!("top coefficient is {}", k.coeff(&top))));
    }
    for (rho, _) in k.terms() {
        if *rho != top && rho.size() >= d {
            return Err(fail(rho, "term of top gradation besides the leading one".into()));
        }
    }
    Ok(())
}

/// All coefficients in ℤ≥0[γ].
pub fn positivity_check(k: &KerovPolynomial) -> bool {
    k.terms().into_iter().all(|(_, c)| c.is_nonnegative_integral())
}

/// Rank of the evaluation vectors of `{Ch_μ : |μ|+ℓ(μ) ≤ d}` on all `|λ| ≤ d`,
/// at `t = 2`, and the number of characters. Rank at a point bounds the
/// rank over ℚ(t) from below.
pub fn ch_independence(book: &JackBook, d: usize) -> Result<(usize, usize)> {
    let mus: Vec<Partition> = partitions_up_to(d).into_iter().filter(|m| ch_degree(m) <= d).collect();
    let lambdas = partitions_up_to(d);
    let x = int(2);
    let mut rows = Vec::with_capacity(mus.len());
    for mu in &mus {
        let mut row = Vec::with_capacity(lambdas.len());
        for lambda in &lambdas {
            let v = book.ch_built(mu, lambda)?;
            row.push(v.eval(&x).ok_or(Error::DivisionByZero)?);
        }
        rows.push(row);
    }
    // rows ≤ columns; rank of the transpose is the same
    let cols: Vec<Vec<Rational>> = (0..lambdas.len()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    Ok((rank(&cols), mus.len()))
}

/// `z_μ` as a field element.
pub fn z_field(mu: &Partition) -> FieldElement {
    FieldElement::from_rational(Rational::from_integer(BigInt::from(z_mu(mu))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p<const N: usize>(v: [usize; N]) -> Partition {
        Partition::from(v)
    }

    fn g(cs: &[i64]) -> GammaPolynomial {
        GammaPolynomial::from_i64s(cs)
    }

    fn solver() -> KerovSolver {
        KerovSolver::default()
    }

    #[test]
    fn index_set_size() {
        assert_eq!(kerov_index_set(8).len(), 22);
        assert_eq!(kerov_index_set(2), vec![Partition::empty(), p([2])]);
    }

    #[test]
    fn moment_basis_examples() {
        let mut s = solver();
        let l1 = s.compute_l(&p([1])).unwrap();
        assert_eq!(l1, KerovPolynomial::new(KerovBasis::M, p([1]), [(p([2]), g(&[1]))]));
        let l2 = s.compute_l(&p([2])).unwrap();
        assert_eq!(l2.render(), "M3 + g*M2");
        let l3 = s.compute_l(&p([3])).unwrap();
        let want = KerovPolynomial::new(
            KerovBasis::M,
            p([3]),
            [(p([4]), g(&[1])), (p([2, 2]), g(&[-2])), (p([3]), g(&[0, 3])), (p([2]), g(&[1, 0, 2]))],
        );
        assert_eq!(l3, want);
    }

    #[test]
    fn cumulant_basis_examples() {
        let mut s = solver();
        assert_eq!(s.compute_k(&p([1])).unwrap().render(), "R2");
        assert_eq!(s.compute_k(&p([2])).unwrap().render(), "R3 + g*R2");
        let k3 = s.compute_k(&p([3])).unwrap();
        assert_eq!(k3.render(), "R4 + 3*g*R3 + (1 + 2*g^2)*R2");
    }

    #[test]
    fn substitution_matches_direct_solve() {
        let mut s = solver();
        for mu in [p([1]), p([2]), p([1, 1]), p([3]), p([2, 1]), p([4])] {
            let l = s.compute_l(&mu).unwrap();
            let k = s.compute_k(&mu).unwrap();
            assert_eq!(substitute_moments(&l), k, "mu = {mu}");
        }
    }

    #[test]
    fn kreweras_counts_sum_to_catalan() {
        let catalan_without_singletons = [1u64, 0, 1, 1, 3, 6, 15, 36];
        for (k, &want) in catalan_without_singletons.iter().enumerate().skip(1) {
            let total: Rational = moment_in_cumulants(k).into_iter().map(|(_, c)| c).sum();
            assert_eq!(total, Rational::from_integer(want.into()), "k = {k}");
        }
    }

    #[test]
    fn degree_report_examples() {
        let mut s = solver();
        let k2 = s.compute_k(&p([2])).unwrap();
        let r = verify_degree_bounds(&k2).unwrap();
        let rec = r.records.iter().find(|x| x.rho == p([2])).unwrap();
        assert_eq!((rec.degree, rec.bound), (1, 1));
        let k3 = s.compute_k(&p([3])).unwrap();
        let r = verify_degree_bounds(&k3).unwrap();
        let rec = r.records.iter().find(|x| x.rho == p([2])).unwrap();
        assert_eq!((rec.degree, rec.bound), (2, 2));
        let bad = KerovPolynomial::new(KerovBasis::R, p([2]), [(p([3]), g(&[1])), (p([2]), g(&[0, 0, 1]))]);
        assert!(matches!(verify_degree_bounds(&bad), Err(Error::TheoremViolation { .. })));
    }

    #[test]
    fn gradation_and_top_term() {
        let mut s = solver();
        let k2 = s.compute_k(&p([2])).unwrap();
        assert_eq!(k2.gradation_degree(), Some(3));
        let mono = KerovPolynomial::new(KerovBasis::M, p([2]), [(p([3, 2]), g(&[1]))]);
        assert_eq!(mono.gradation_degree(), Some(5));
        let combo = [(p([1]), FieldElement::one()), (p([2, 1]), FieldElement::one())];
        assert_eq!(ch_combination_degree(&combo), Some(5));
        // the same degree read off the expanded sum
        let k1 = s.compute_k(&p([1])).unwrap();
        let k21 = s.compute_k(&p([2, 1])).unwrap();
        let sum = KerovPolynomial::new(
            KerovBasis::R,
            Partition::empty(),
            k1.terms().into_iter().chain(k21.terms()).map(|(r, c)| (r.clone(), c.clone())),
        );
        assert_eq!(sum.gradation_degree(), Some(5));
        for mu in [p([1]), p([3]), p([2, 2])] {
            top_term_check(&s.compute_k(&mu).unwrap()).unwrap();
        }
    }

    #[test]
    fn golden_small() {
        let mut s = solver();
        for mu in [p([1]), p([2]), p([1, 1]), p([2, 1])] {
            let k = s.compute_k(&mu).unwrap();
            assert!(s.golden_check(&k, ch_degree(&mu) + 1).unwrap() > 0);
        }
    }

    #[test]
    fn characters_are_independent() {
        let mut book = JackBook::default();
        book.ensure_up_to(6).unwrap();
        let (r, n) = ch_independence(&book, 6).unwrap();
        assert_eq!(r, n);
    }
}
