//! Jack polynomials `J_λ` in the J-normalization, their power-sum
//! coefficients `θ_ρ(λ)`, and Jack characters `Ch_μ(λ)`.
//!
//! A degree is built in one batch. Gram–Schmidt along increasing
//! lexicographic order (a linear extension of dominance) runs over ℚ at
//! `α = 2, 3, …`; each power-sum coefficient is rebuilt as a rational
//! function of `α` and the result is then certified symbolically: unit
//! normalization, dominance-triangularity and pairwise orthogonality pin
//! down the Jack family uniquely. Finally `α ↦ t²`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::interp::reconstruct_vector;
use crate::field::{binomial, factorial, Field, FieldElement, Rational};
use crate::partitions::{dominance_leq, z_mu, Partition};
use crate::symfunc::{Basis, SymFun, TransitionTables};

pub const DEFAULT_JACK_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct JackExpansion {
    pub lambda: Partition,
    pub in_p: SymFun,
    pub in_m: SymFun,
}

/// All `J_λ` with `|λ| = degree`, coefficients in ℚ(t). Rows follow the
/// reverse lexicographic order of [`TransitionTables::partitions`].
#[derive(Debug, Clone, PartialEq)]
pub struct JackTable {
    degree: usize,
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    in_p: Vec<Vec<FieldElement>>,
    in_m: Vec<Vec<FieldElement>>,
}

/// Weights `z_ρ α^{ℓ(ρ)}` of the diagonal Gram matrix on power sums.
fn p_weights<F: Field>(tables: &TransitionTables, alpha: &F) -> Vec<F> {
    tables
        .partitions()
        .iter()
        .map(|rho| {
            let z = Rational::from_integer(BigInt::from(z_mu(rho)));
            F::from_rational(&z) * alpha.pow_u(rho.len() as u32)
        })
        .collect()
}

fn inner<F: Field>(a: &[F], b: &[F], w: &[F]) -> F {
    let mut acc = F::zero();
    for ((x, y), wi) in a.iter().zip(b).zip(w) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + x.clone() * y.clone() * wi.clone();
        }
    }
    acc
}

/// Gram–Schmidt on the monomial basis at a given `α`, in increasing
/// lexicographic order, rescaled so that `[m_{1^n}] = n!`. Returns power-sum
/// coordinates indexed like `tables.partitions()`, or `None` if some pivot
/// vanishes at this `α`.
pub fn gram_schmidt<F: Field>(tables: &TransitionTables, alpha: &F) -> Option<Vec<Vec<F>>> {
    let n = tables.degree();
    let count = tables.partitions().len();
    let w = p_weights(tables, alpha);
    let last = count - 1;
    let ones: Vec<F> = tables
        .from_p(Basis::M)
        .iter()
        .map(|row| F::from_rational(&row[last]))
        .collect();
    let nfact = F::from_rational(&Rational::from_integer(factorial(n as u64)));
    let m_in_p = tables.to_p(Basis::M);
    let mut out: Vec<Option<(Vec<F>, F)>> = vec![None; count];
    let mut done: Vec<usize> = Vec::with_capacity(count);
    for i in (0..count).rev() {
        let m: Vec<F> = m_in_p[i].iter().map(F::from_rational).collect();
        let mut v = m.clone();
        for &j in &done {
            let (jv, norm) = out[j].as_ref().expect("built earlier");
            let c = inner(&m, jv, &w) / norm.clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(jv) {
                if !y.is_zero() {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        let s = inner(&v, &ones, &vec![F::one(); count]);
        if s.is_zero() {
            return None;
        }
        let scale = nfact.clone() / s;
        let jv: Vec<F> = v.into_iter().map(|x| x * scale.clone()).collect();
        let norm = inner(&jv, &jv, &w);
        if norm.is_zero() {
            return None;
        }
        out[i] = Some((jv, norm));
        done.push(i);
    }
    Some(out.into_iter().map(|o| o.expect("all rows built").0).collect())
}

fn p_rows_to_m(tables: &TransitionTables, rows: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let p_in_m = tables.from_p(Basis::M);
    rows.iter()
        .map(|row| {
            let mut m = vec![FieldElement::zero(); row.len()];
            for (r, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, a) in p_in_m[r].iter().enumerate() {
                    if !a.is_zero() {
                        m[k] = &m[k] + &c.scale(a);
                    }
                }
            }
            m
        })
        .collect()
}

/// Checks the three defining properties over ℚ(x) for rows in the
/// variable `x` standing for `alpha`.
fn certify(
    tables: &TransitionTables,
    alpha: &FieldElement,
    in_p: &[Vec<FieldElement>],
    in_m: &[Vec<FieldElement>],
) -> Result<()> {
    let parts = tables.partitions();
    let n = tables.degree();
    let nfact = FieldElement::from_rational(Rational::from_integer(factorial(n as u64)));
    let ones_idx = parts.len() - 1;
    for (i, lambda) in parts.iter().enumerate() {
        if in_m[i][ones_idx] != nfact {
            return Err(Error::Internal(alloc::format!("J_{lambda} is not J-normalized")));
        }
        if in_m[i][i].is_zero() {
            return Err(Error::Internal(alloc::format!("J_{lambda} lacks its leading monomial")));
        }
        for (k, mu) in parts.iter().enumerate() {
            if !in_m[i][k].is_zero() && !dominance_leq(mu, lambda)? {
                return Err(Error::Internal(alloc::format!(
                    "J_{lambda} has m_{mu} outside the dominance order"
                )));
            }
        }
    }
    let w = p_weights(tables, alpha);
    for i in 0..parts.len() {
        for j in 0..i {
            if !inner(&in_p[i], &in_p[j], &w).is_zero() {
                return Err(Error::Internal(alloc::format!(
                    "J_{} and J_{} are not orthogonal",
                    parts[i],
                    parts[j]
                )));
            }
        }
    }
    Ok(())
}

impl JackTable {
    /// Builds and certifies every `J_λ` of the table's degree.
    pub fn build(tables: &TransitionTables) -> Result<Self> {
        let count = tables.partitions().len();
        let n = tables.degree();
        let max_points = 4 * n + 24;
        let flat = reconstruct_vector(count * count, max_points, |a| {
            Ok(gram_schmidt(tables, a).map(|rows| rows.into_iter().flatten().collect()))
        })?;
        // the reconstruction variable is α
        let in_p_alpha: Vec<Vec<FieldElement>> = flat.chunks(count).map(<[_]>::to_vec).collect();
        let in_m_alpha = p_rows_to_m(tables, &in_p_alpha);
        certify(tables, &FieldElement::t(), &in_p_alpha, &in_m_alpha)?;
        let sq = |rows: Vec<Vec<FieldElement>>| -> Vec<Vec<FieldElement>> {
            rows.into_iter()
                .map(|r| r.iter().map(FieldElement::square_variable).collect())
                .collect()
        };
        Ok(Self::from_rows(tables, sq(in_p_alpha), sq(in_m_alpha)))
    }

    /// Direct Gram–Schmidt over ℚ(t) with `α = t²`; slow, used as an
    /// independent route at small degree.
    pub fn build_symbolic(tables: &TransitionTables) -> Result<Self> {
        let alpha = FieldElement::t_pow(2);
        let in_p = gram_schmidt(tables, &alpha)
            .ok_or_else(|| Error::Internal("vanishing pivot over Q(t)".into()))?;
        let in_m = p_rows_to_m(tables, &in_p);
        certify(tables, &alpha, &in_p, &in_m)?;
        Ok(Self::from_rows(tables, in_p, in_m))
    }

    /// Table from precomputed power-sum rows in `t`, e.g. read from a cache.
    /// The rows are certified before being accepted.
    pub fn from_p_rows(tables: &TransitionTables, in_p: Vec<Vec<FieldElement>>) -> Result<Self> {
        let count = tables.partitions().len();
        if in_p.len() != count || in_p.iter().any(|r| r.len() != count) {
            return Err(Error::DimensionMismatch("cached Jack table has the wrong shape".into()));
        }
        let in_m = p_rows_to_m(tables, &in_p);
        certify(tables, &FieldElement::t_pow(2), &in_p, &in_m)?;
        Ok(Self::from_rows(tables, in_p, in_m))
    }

    fn from_rows(tables: &TransitionTables, in_p: Vec<Vec<FieldElement>>, in_m: Vec<Vec<FieldElement>>) -> Self {
        let parts = tables.partitions().to_vec();
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        JackTable {
            degree: tables.degree(),
            parts,
            index,
            in_p,
            in_m,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn p_rows(&self) -> &[Vec<FieldElement>] {
        &self.in_p
    }

    pub fn m_rows(&self) -> &[Vec<FieldElement>] {
        &self.in_m
    }

    /// `θ_ρ(λ) = [p_ρ] J_λ`.
    pub fn theta(&self, lambda: &Partition, rho: &Partition) -> Option<&FieldElement> {
        Some(&self.in_p[*self.index.get(lambda)?][*self.index.get(rho)?])
    }

    pub fn expansion(&self, lambda: &Partition) -> Option<JackExpansion> {
        let i = *self.index.get(lambda)?;
        let sym = |basis, row: &[FieldElement]| {
            SymFun::from_terms(basis, self.degree, self.parts.iter().cloned().zip(row.iter().cloned()))
                .expect("indices have the table's degree")
        };
        Some(JackExpansion {
            lambda: lambda.clone(),
            in_p: sym(Basis::P, &self.in_p[i]),
            in_m: sym(Basis::M, &self.in_m[i]),
        })
    }
}

/// Jack tables per degree up to a cap, built on demand.
#[derive(Debug, Clone)]
pub struct JackBook {
    cap: usize,
    tables: Vec<Option<JackTable>>,
}

impl Default for JackBook {
    fn default() -> Self {
        Self::new(DEFAULT_JACK_CAP)
    }
}

impl JackBook {
    pub fn new(cap: usize) -> Self {
        JackBook {
            cap,
            tables: Vec::new(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::CapExceeded {
                what: "jack degree",
                requested: n,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Builds the table for degree `n` if missing.
    pub fn ensure(&mut self, n: usize) -> Result<&JackTable> {
        self.check_cap(n)?;
        if self.tables.len() <= n {
            self.tables.resize(n + 1, None);
        }
        if self.tables[n].is_none() {
            let table = JackTable::build(&TransitionTables::new(n))?;
            self.tables[n] = Some(table);
        }
        Ok(self.tables[n].as_ref().expect("just built"))
    }

    pub fn ensure_up_to(&mut self, n: usize) -> Result<()> {
        for k in 0..=n {
            self.ensure(k)?;
        }
        Ok(())
    }

    pub fn insert(&mut self, table: JackTable) -> Result<()> {
        let n = table.degree();
        self.check_cap(n)?;
        if self.tables.len() <= n {
            self.tables.resize(n + 1, None);
        }
        self.tables[n] = Some(table);
        Ok(())
    }

    /// Table for degree `n` if already built.
    pub fn get(&self, n: usize) -> Option<&JackTable> {
        self.tables.get(n).and_then(Option::as_ref)
    }

    fn built(&self, n: usize) -> Result<&JackTable> {
        self.check_cap(n)?;
        self.get(n)
            .ok_or_else(|| Error::Internal(alloc::format!("Jack table of degree {n} not built")))
    }

    pub fn jack(&mut self, lambda: &Partition) -> Result<JackExpansion> {
        let table = self.ensure(lambda.size())?;
        Ok(table.expansion(lambda).expect("λ has the table's degree"))
    }

    pub fn theta(&mut self, lambda: &Partition, rho: &Partition) -> Result<FieldElement> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(lambda.size(), rho.size()));
        }
        self.ensure(lambda.size())?;
        self.theta_built(lambda, rho)
    }

    /// As [`JackBook::theta`], reading only tables already built.
    pub fn theta_built(&self, lambda: &Partition, rho: &Partition) -> Result<FieldElement> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(lambda.size(), rho.size()));
        }
        Ok(self
            .built(lambda.size())?
            .theta(lambda, rho)
            .expect("both indices have the table's degree")
            .clone())
    }

    pub fn ch(&mut self, mu: &Partition, lambda: &Partition) -> Result<FieldElement> {
        if lambda.size() >= mu.size() {
            self.ensure(lambda.size())?;
        }
        self.ch_built(mu, lambda)
    }

    /// `Ch_μ(λ) = t^{−(|μ|−ℓ(μ))} binom(|λ|−|μ|+m₁, m₁) z_μ θ_{μ∪1^{|λ|−|μ|}}(λ)`,
    /// zero when `|λ| < |μ|`.
    pub fn ch_built(&self, mu: &Partition, lambda: &Partition) -> Result<FieldElement> {
        let (n, k) = (lambda.size(), mu.size());
        if n < k {
            return Ok(FieldElement::zero());
        }
        let m1 = mu.multiplicity(1) as u64;
        let b = BigInt::from(binomial((n - k) as u64 + m1, m1)) * BigInt::from(z_mu(mu));
        let theta = self.theta_built(lambda, &mu.with_ones(n - k))?;
        let shift = FieldElement::t_pow(-((k - mu.len()) as i64));
        Ok(theta.scale(&Rational::from_integer(b)) * shift)
    }
}

/// `J_λ` at a fixed rational `α`, power-sum coordinates; a fast numeric path
/// and an independent oracle for the symbolic tables.
pub fn jack_at(tables: &TransitionTables, alpha: &Rational) -> Option<Vec<Vec<Rational>>> {
    gram_schmidt(tables, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::field::Poly;
    use crate::partitions::{enumerate_partitions, partitions_up_to};
    use num_traits::Signed;

    fn p<const N: usize>(v: [usize; N]) -> Partition {
        Partition::from(v)
    }

    fn book() -> JackBook {
        let mut b = JackBook::default();
        b.ensure_up_to(8).unwrap();
        b
    }

    #[test]
    fn small_examples() {
        let mut b = JackBook::default();
        assert_eq!(b.jack(&p([1])).unwrap().in_p.render(), "p[1]");
        assert_eq!(b.jack(&p([1])).unwrap().in_m.render(), "m[1]");
        assert_eq!(b.jack(&p([2])).unwrap().in_p.render(), "p[1,1] + t^2*p[2]");
        assert_eq!(b.jack(&p([1, 1])).unwrap().in_p.render(), "p[1,1] - p[2]");
        assert_eq!(b.theta(&p([2]), &p([2])).unwrap(), FieldElement::t_pow(2));
        assert_eq!(b.theta(&p([2]), &p([1, 1])).unwrap(), FieldElement::one());
        assert_eq!(b.theta(&p([1, 1]), &p([2])).unwrap(), FieldElement::from_int(-1));
        assert!(b.theta(&p([2]), &p([1])).is_err());
    }

    #[test]
    fn character_examples() {
        let mut b = JackBook::default();
        assert_eq!(b.ch(&p([1]), &p([1])).unwrap(), FieldElement::one());
        assert_eq!(b.ch(&p([2]), &p([2])).unwrap(), FieldElement::t() * FieldElement::from_int(2));
        assert!(b.ch(&p([2]), &p([1])).unwrap().is_zero());
    }

    #[test]
    fn cap_is_enforced() {
        let mut b = JackBook::new(3);
        assert!(matches!(b.jack(&p([4])), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn reconstruction_agrees_with_direct_symbolic_gram_schmidt() {
        for n in 0..=6 {
            let tables = TransitionTables::new(n);
            let fast = JackTable::build(&tables).unwrap();
            let slow = JackTable::build_symbolic(&tables).unwrap();
            assert_eq!(fast, slow, "degree {n}");
        }
    }

    #[test]
    fn numeric_path_matches_specialisation() {
        let tables = TransitionTables::new(5);
        let sym = JackTable::build(&tables).unwrap();
        for a in [crate::field::rat(1, 3), crate::field::int(7)] {
            // t² = a has no rational t in general, so compare in α
            let num = jack_at(&tables, &a).unwrap();
            for (i, row) in sym.p_rows().iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    let in_alpha = c.unsquare_variable().unwrap();
                    assert_eq!(in_alpha.eval(&a).unwrap(), num[i][j]);
                }
            }
        }
    }

    #[test]
    fn theta_of_ones_is_one() {
        let b = book();
        for n in 0..=8 {
            for lambda in enumerate_partitions(n) {
                assert_eq!(b.theta_built(&lambda, &Partition::column(n)).unwrap(), FieldElement::one());
            }
        }
    }

    #[test]
    fn monomial_coefficients_are_nonnegative_integral_in_alpha() {
        let b = book();
        for n in 0..=7 {
            for row in b.get(n).unwrap().m_rows() {
                for c in row {
                    let poly: &Poly = c.as_polynomial().expect("no denominator");
                    let in_alpha = poly.unsquare_variable().expect("even in t");
                    assert!(in_alpha.is_integral());
                    assert!(in_alpha.coeffs().iter().all(|x| !x.is_negative()));
                }
            }
        }
    }

    #[test]
    fn ch_one_is_the_size() {
        let b = book();
        for lambda in partitions_up_to(8) {
            assert_eq!(b.ch_built(&p([1]), &lambda).unwrap(), FieldElement::from_int(lambda.size() as i64));
        }
    }

    #[test]
    fn characters_at_alpha_one_are_integers() {
        let b = book();
        for lambda in partitions_up_to(7) {
            for mu in partitions_up_to(lambda.size()) {
                let v = b.ch_built(&mu, &lambda).unwrap().eval(&Rational::one()).unwrap();
                assert!(v.is_integer(), "Ch_{mu}({lambda}) = {v}");
            }
        }
    }
}
