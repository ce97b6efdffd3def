//! Homogeneous symmetric functions with coefficients in ℚ(t) over the
//! monomial, power-sum, complete and elementary bases.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{invert, FieldElement, Rational};
use crate::partitions::{enumerate_partitions, z_mu, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    M,
    P,
    H,
    E,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::M, Basis::P, Basis::H, Basis::E];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::P => 'p',
            Basis::H => 'h',
            Basis::E => 'e',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_lowercase() {
            'm' => Some(Basis::M),
            'p' => Some(Basis::P),
            'h' => Some(Basis::H),
            'e' => Some(Basis::E),
            _ => None,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// Homogeneous symmetric function of degree `degree`. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFun {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, FieldElement>,
}

impl SymFun {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFun {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element indexed by `lambda`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, FieldElement::one());
        SymFun {
            basis,
            degree,
            coeffs,
        }
    }

    /// Collects terms, summing repeats; all indices must have size `degree`.
    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, FieldElement)>,
    {
        let mut f = SymFun::zero(basis, degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SizeMismatch(lambda.size(), degree));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Partition, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&lambda) {
            None => {
                self.coeffs.insert(lambda, c);
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.coeffs.insert(lambda, s);
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> FieldElement {
        self.coeffs.get(lambda).cloned().unwrap_or_else(FieldElement::zero)
    }

    /// Nonzero terms in increasing lexicographic order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &FieldElement)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn compatible(&self, other: &SymFun) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch(self.degree, other.degree));
        }
        if self.basis != other.basis {
            return Err(Error::DimensionMismatch(alloc::format!(
                "bases {} and {} differ",
                self.basis.letter(),
                other.basis.letter()
            )));
        }
        Ok(())
    }

    pub fn plus(&self, other: &SymFun) -> Result<SymFun> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn minus(&self, other: &SymFun) -> Result<SymFun> {
        self.plus(&other.scale(&-FieldElement::one()))
    }

    pub fn scale(&self, c: &FieldElement) -> SymFun {
        let mut out = SymFun::zero(self.basis, self.degree);
        for (l, a) in self.terms() {
            out.add_term(l.clone(), a * c);
        }
        out
    }

    /// Each coefficient mapped through `f`, zeros dropped.
    pub fn map_coeffs(&self, f: impl Fn(&FieldElement) -> FieldElement) -> SymFun {
        let mut out = SymFun::zero(self.basis, self.degree);
        for (l, a) in self.terms() {
            out.add_term(l.clone(), f(a));
        }
        out
    }

    /// `"p[1,1] + t^2*p[2]"`: increasing index order, unit coefficients
    /// omitted, compound coefficients parenthesised.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (lambda, c) in self.terms() {
            let mut s = c.render("t");
            let negative = s.starts_with('-') && !s[1..].contains(' ');
            if negative {
                s.remove(0);
            }
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if s != "1" {
                if s.contains(' ') {
                    out.push('(');
                    out.push_str(&s);
                    out.push(')');
                } else {
                    out.push_str(&s);
                }
                out.push('*');
            }
            out.push(self.basis.letter());
            out.push('[');
            out.push_str(&alloc::format!("{lambda}"));
            out.push(']');
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFun[{}]({})", self.degree, self.render())
    }
}

type Matrix = Vec<Vec<Rational>>;
type Expansion = BTreeMap<Partition, Rational>;

/// Change-of-basis matrices for one degree. Rows and columns follow
/// [`TransitionTables::partitions`]; `to_p[b][i]` expands the `i`-th element
/// of basis `b` over power sums and `from_p[b][i]` expands `p_i` over `b`.
#[derive(Debug, Clone)]
pub struct TransitionTables {
    degree: usize,
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    to_p: [Matrix; 4],
    from_p: [Matrix; 4],
}

impl TransitionTables {
    pub fn new(degree: usize) -> Self {
        let parts = enumerate_partitions(degree);
        let index: BTreeMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = parts.len();
        let identity: Matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();

        // p_ρ over m: [m_λ] p_ρ counts maps sending parts of ρ to rows of λ
        // with row sums λ.
        let p_in_m: Matrix = parts
            .iter()
            .map(|rho| parts.iter().map(|lam| Rational::from_integer(monomial_count(rho, lam))).collect())
            .collect();
        let m_in_p = invert(&p_in_m).expect("p-to-m matrix is unitriangular up to order");

        let dense = |e: &Expansion| -> Vec<Rational> {
            let mut row = vec![Rational::zero(); n];
            for (rho, c) in e {
                row[index[rho]] = c.clone();
            }
            row
        };
        let h_in_p: Matrix = parts
            .iter()
            .map(|lam| dense(&product_expansion(lam, |k| one_part_in_p(k, false))))
            .collect();
        let e_in_p: Matrix = parts
            .iter()
            .map(|lam| dense(&product_expansion(lam, |k| one_part_in_p(k, true))))
            .collect();
        let p_in_h = invert(&h_in_p).expect("h basis is a basis");
        let p_in_e = invert(&e_in_p).expect("e basis is a basis");

        TransitionTables {
            degree,
            parts,
            index,
            to_p: [m_in_p, identity.clone(), h_in_p, e_in_p],
            from_p: [p_in_m, identity, p_in_h, p_in_e],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of the degree, reverse lexicographic.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// Row `i`: the `i`-th element of `basis` over power sums.
    pub fn to_p(&self, basis: Basis) -> &[Vec<Rational>] {
        &self.to_p[basis.slot()]
    }

    /// Row `i`: `p_i` over `basis`.
    pub fn from_p(&self, basis: Basis) -> &[Vec<Rational>] {
        &self.from_p[basis.slot()]
    }
}

/// `[x^λ] p_ρ`, by dynamic programming over row fillings.
fn monomial_count(rho: &Partition, lambda: &Partition) -> BigInt {
    let target = lambda.parts();
    let mut states: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    states.insert(vec![0; target.len()], BigInt::one());
    for &r in rho.parts() {
        let mut next: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (fill, count) in &states {
            for j in 0..target.len() {
                if fill[j] + r <= target[j] {
                    let mut f = fill.clone();
                    f[j] += r;
                    *next.entry(f).or_insert_with(BigInt::zero) += count;
                }
            }
        }
        states = next;
    }
    states.get(target).cloned().unwrap_or_else(BigInt::zero)
}

/// `h_k` or `e_k` over power sums: `Σ_{ρ⊢k} ε p_ρ / z_ρ`.
fn one_part_in_p(k: usize, signed: bool) -> Expansion {
    enumerate_partitions(k)
        .into_iter()
        .map(|rho| {
            let z = Rational::from_integer(BigInt::from(z_mu(&rho)));
            let mut c = Rational::one() / z;
            if signed && (k - rho.len()) % 2 == 1 {
                c = -c;
            }
            (rho, c)
        })
        .collect()
}

fn product_expansion(lambda: &Partition, factor: impl Fn(usize) -> Expansion) -> Expansion {
    let mut acc: Expansion = BTreeMap::new();
    acc.insert(Partition::empty(), Rational::one());
    for &k in lambda.parts() {
        let f = factor(k);
        let mut next: Expansion = BTreeMap::new();
        for (a, ca) in &acc {
            for (b, cb) in &f {
                *next.entry(a.union(b)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc = next;
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// Per-degree table cache, filled on demand.
#[derive(Debug, Default, Clone)]
pub struct SymBook {
    tables: Vec<Option<TransitionTables>>,
}

impl SymBook {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tables(&mut self, degree: usize) -> &TransitionTables {
        if self.tables.len() <= degree {
            self.tables.resize(degree + 1, None);
        }
        self.tables[degree].get_or_insert_with(|| TransitionTables::new(degree))
    }

    pub fn get(&self, degree: usize) -> Option<&TransitionTables> {
        self.tables.get(degree).and_then(Option::as_ref)
    }

    pub fn convert(&mut self, f: &SymFun, target: Basis) -> SymFun {
        convert(f, target, self.tables(f.degree()))
    }
}

/// Re-expand `f` in `target`, passing through power sums.
pub fn convert(f: &SymFun, target: Basis, tables: &TransitionTables) -> SymFun {
    assert_eq!(f.degree(), tables.degree(), "table degree mismatch");
    if f.basis() == target {
        return f.clone();
    }
    let n = tables.partitions().len();
    let mut in_p = vec![FieldElement::zero(); n];
    let to_p = tables.to_p(f.basis());
    for (lambda, c) in f.terms() {
        let row = &to_p[tables.index_of(lambda).expect("index partition of the right size")];
        for (j, a) in row.iter().enumerate() {
            if !a.is_zero() {
                in_p[j] = &in_p[j] + &c.scale(a);
            }
        }
    }
    let from_p = tables.from_p(target);
    let mut out = vec![FieldElement::zero(); n];
    for (j, c) in in_p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, a) in from_p[j].iter().enumerate() {
            if !a.is_zero() {
                out[k] = &out[k] + &c.scale(a);
            }
        }
    }
    SymFun::from_terms(target, f.degree(), tables.partitions().iter().cloned().zip(out))
        .expect("sizes match the table")
}

/// `⟨p_ρ, p_ρ⟩ = z_ρ t^{2ℓ(ρ)}`.
pub fn p_norm(rho: &Partition) -> FieldElement {
    FieldElement::from_rational(Rational::from_integer(BigInt::from(z_mu(rho))))
        * FieldElement::t_pow(2 * rho.len() as i64)
}

/// The α-deformed Hall product with `α = t²`.
pub fn hall_inner(f: &SymFun, g: &SymFun, tables: &TransitionTables) -> Result<FieldElement> {
    if f.degree() != g.degree() {
        return Err(Error::SizeMismatch(f.degree(), g.degree()));
    }
    let fp = convert(f, Basis::P, tables);
    let gp = convert(g, Basis::P, tables);
    let mut acc = FieldElement::zero();
    for (rho, a) in fp.terms() {
        let b = gp.coeff(rho);
        if !b.is_zero() {
            acc = &acc + &(&(a * &b) * &p_norm(rho));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn p<const N: usize>(v: [usize; N]) -> Partition {
        Partition::from(v)
    }

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::from_rational(rat(n, d))
    }

    #[test]
    fn spec_conversions() {
        let mut book = SymBook::new();
        let f = SymFun::basis_element(Basis::P, p([2]));
        assert_eq!(book.convert(&f, Basis::M), SymFun::basis_element(Basis::M, p([2])));

        let m11 = SymFun::basis_element(Basis::M, p([1, 1]));
        let want = SymFun::from_terms(Basis::P, 2, [(p([1, 1]), q(1, 2)), (p([2]), q(-1, 2))]).unwrap();
        assert_eq!(book.convert(&m11, Basis::P), want);

        let h2 = SymFun::basis_element(Basis::H, p([2]));
        let want = SymFun::from_terms(Basis::P, 2, [(p([1, 1]), q(1, 2)), (p([2]), q(1, 2))]).unwrap();
        assert_eq!(book.convert(&h2, Basis::P), want);
    }

    /// Brute-force `[x^λ] p_ρ` by expanding in `ℓ(λ)` variables.
    fn brute_monomial(rho: &Partition, lambda: &Partition) -> i64 {
        let l = lambda.len();
        let mut count = 0;
        let k = rho.len();
        let mut choice = vec![0usize; k];
        loop {
            let mut sums = vec![0usize; l];
            for (i, &c) in choice.iter().enumerate() {
                sums[c] += rho.parts()[i];
            }
            if sums == lambda.parts() {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == k {
                    return count;
                }
                choice[i] += 1;
                if choice[i] < l {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn monomial_counts_match_brute_force() {
        for n in 1..=6 {
            for rho in enumerate_partitions(n) {
                for lam in enumerate_partitions(n) {
                    assert_eq!(monomial_count(&rho, &lam), BigInt::from(brute_monomial(&rho, &lam)));
                }
            }
        }
    }

    #[test]
    fn hall_examples() {
        let tables = TransitionTables::new(2);
        let p2 = SymFun::basis_element(Basis::P, p([2]));
        let p11 = SymFun::basis_element(Basis::P, p([1, 1]));
        assert_eq!(hall_inner(&p2, &p2, &tables).unwrap(), FieldElement::t_pow(2) * FieldElement::from_int(2));
        assert!(hall_inner(&p11, &p2, &tables).unwrap().is_zero());
        let t2 = FieldElement::t_pow(2);
        let j2 = SymFun::from_terms(Basis::P, 2, [(p([1, 1]), FieldElement::one()), (p([2]), t2)]).unwrap();
        let j11 = p11.minus(&p2).unwrap();
        assert!(hall_inner(&j2, &j11, &tables).unwrap().is_zero());
        let one = SymFun::basis_element(Basis::P, p([1]));
        assert!(hall_inner(&one, &p2, &tables).is_err());
    }

    #[test]
    fn omega_swaps_e_and_h() {
        let tables = TransitionTables::new(4);
        for i in 0..tables.partitions().len() {
            for j in 0..tables.partitions().len() {
                let sigma = &tables.partitions()[j];
                let s2 = if (sigma.size() - sigma.len()) % 2 == 0 { 1 } else { -1 };
                let h = &tables.to_p(Basis::H)[i][j];
                let e = &tables.to_p(Basis::E)[i][j];
                assert_eq!(e * Rational::from_integer(s2.into()), h.clone());
            }
        }
    }

    #[test]
    fn rendering() {
        let t2 = FieldElement::t_pow(2);
        let j2 = SymFun::from_terms(Basis::P, 2, [(p([1, 1]), FieldElement::one()), (p([2]), t2)]).unwrap();
        assert_eq!(j2.render(), "p[1,1] + t^2*p[2]");
        let j11 = SymFun::from_terms(Basis::P, 2, [(p([1, 1]), FieldElement::one()), (p([2]), FieldElement::from_int(-1))]).unwrap();
        assert_eq!(j11.render(), "p[1,1] - p[2]");
        let g = SymFun::basis_element(Basis::M, p([1])).scale(&(FieldElement::one() + FieldElement::t()));
        assert_eq!(g.render(), "(1 + t)*m[1]");
        assert_eq!(SymFun::zero(Basis::E, 3).render(), "0");
    }
}
