//! Transition measures, moments and free cumulants of generalized diagrams.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagrams::{anisotropic_symbolic, GeneralizedDiagram};
use crate::field::{binomial, Field, FieldElement, Rational};
use crate::partitions::Partition;

/// Atoms `(location, mass)` at the outer corners, locations increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMeasure<F> {
    pub atoms: Vec<(F, F)>,
}

/// `values[k] = M_k` for `k = 0..=K`; `M₀ = 1`, `M₁ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence<F> {
    pub values: Vec<F>,
}

/// `values[k − 1] = R_k` for `k = 1..=K`.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulantSequence<F> {
    pub values: Vec<F>,
}

impl<F: Field> MomentSequence<F> {
    pub fn get(&self, k: usize) -> &F {
        &self.values[k]
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }
}

impl<F: Field> CumulantSequence<F> {
    /// `R_k`, `k ≥ 1`.
    pub fn get(&self, k: usize) -> &F {
        &self.values[k - 1]
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }
}

/// Residues of `G(z) = Π(z − i)/Π(z − o)` at the outer corners.
pub fn transition_measure<F: Field>(l: &GeneralizedDiagram<F>) -> TransitionMeasure<F> {
    let outer = l.outer();
    let inner = l.inner();
    let atoms = outer
        .iter()
        .enumerate()
        .map(|(k, o)| {
            // pair numerator and denominator factors to keep magnitudes level
            let mut mass = F::one();
            let mut others = outer.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, x)| x);
            for i in inner {
                let d = others.next().expect("one fewer inner corner than outer");
                mass = mass * ((o.clone() - i.clone()) / (o.clone() - d.clone()));
            }
            (o.clone(), mass)
        })
        .collect();
    TransitionMeasure { atoms }
}

/// `M_k = h_k(𝕆 − 𝕀)` for `k ≤ K`, read off `Π(1 − z·i)/Π(1 − z·o)`.
pub fn moments<F: Field>(l: &GeneralizedDiagram<F>, order: usize) -> MomentSequence<F> {
    let mut series = vec![F::zero(); order + 1];
    series[0] = F::one();
    for o in l.outer() {
        // multiply by 1/(1 − z·o)
        for k in 1..=order {
            series[k] = series[k].clone() + o.clone() * series[k - 1].clone();
        }
    }
    for i in l.inner() {
        // multiply by (1 − z·i)
        for k in (1..=order).rev() {
            series[k] = series[k].clone() - i.clone() * series[k - 1].clone();
        }
    }
    MomentSequence { values: series }
}

/// `Σ mass · location^k`.
pub fn moments_from_measure<F: Field>(m: &TransitionMeasure<F>, order: usize) -> MomentSequence<F> {
    let mut values = vec![F::zero(); order + 1];
    for (x, w) in &m.atoms {
        let mut pow = w.clone();
        for v in values.iter_mut() {
            *v = v.clone() + pow.clone();
            pow = pow * x.clone();
        }
    }
    MomentSequence { values }
}

/// `[z^j] M(z)^k` for `0 ≤ j ≤ n`, `1 ≤ k ≤ n`, with `M(z) = Σ M_i z^i`.
fn moment_powers<F: Field>(m: &[F], n: usize) -> Vec<Vec<F>> {
    let mut pows: Vec<Vec<F>> = vec![vec![F::zero(); n + 1]];
    pows[0][0] = F::one();
    for k in 1..=n {
        let prev = &pows[k - 1];
        let mut cur = vec![F::zero(); n + 1];
        for (a, pa) in prev.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, mb) in m.iter().enumerate().take(n + 1 - a) {
                if !mb.is_zero() {
                    cur[a + b] = cur[a + b].clone() + pa.clone() * mb.clone();
                }
            }
        }
        pows.push(cur);
    }
    pows
}

/// Free cumulants from `M_n = Σ_{k=1}^{n} R_k [z^{n−k}] M(z)^k`, solved
/// for `R_n` in increasing `n`.
pub fn free_cumulants<F: Field>(m: &MomentSequence<F>) -> CumulantSequence<F> {
    let n = m.order();
    let pows = moment_powers(&m.values, n);
    let mut r: Vec<F> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut v = m.values[k].clone();
        for (j, rj) in r.iter().enumerate() {
            let c = &pows[j + 1][k - j - 1];
            if !c.is_zero() && !rj.is_zero() {
                v = v - rj.clone() * c.clone();
            }
        }
        r.push(v);
    }
    CumulantSequence { values: r }
}

/// Inverse of [`free_cumulants`].
pub fn moments_from_cumulants<F: Field>(r: &CumulantSequence<F>) -> MomentSequence<F> {
    let n = r.order();
    let mut m = vec![F::zero(); n + 1];
    m[0] = F::one();
    for k in 1..=n {
        // only M_0..M_{k−1} enter [z^{k−j}] M^j for j ≥ 1 below j = k
        let pows = moment_powers(&m[..k], k);
        let mut v = r.values[k - 1].clone();
        for j in 1..k {
            let c = &pows[j][k - j];
            if !c.is_zero() {
                v = v + r.values[j - 1].clone() * c.clone();
            }
        }
        m[k] = v;
    }
    MomentSequence { values: m }
}

/// `M_k^{(α)}(λ)` and `R_k^{(α)}(λ)` for `k ≤ K`, exact in ℚ(t).
pub fn anisotropic_mr(
    lambda: &Partition,
    order: usize,
) -> (MomentSequence<FieldElement>, CumulantSequence<FieldElement>) {
    let m = moments(&anisotropic_symbolic(lambda), order);
    let r = free_cumulants(&m);
    (m, r)
}

/// Moments after adding a box at the outer corner of content `z_o`:
/// `M_k ↦ M_k + Σ z_o^{k−2r−s−t} binom(k−t−1, 2r+s−1) binom(r+s−1, s) (−γ)^s M_t`
/// over `r ≥ 1`, `s, t ≥ 0`, `2r+s+t ≤ k`.
pub fn add_box_update<F: Field>(m: &MomentSequence<F>, z_o: &F, gamma: &F, order: usize) -> MomentSequence<F> {
    assert!(m.order() >= order, "moment sequence too short");
    let zp: Vec<F> = (0..=order as u32).map(|e| z_o.pow_u(e)).collect();
    let gp: Vec<F> = (0..=order as u32).map(|e| (-gamma.clone()).pow_u(e)).collect();
    let int = |v: u128| F::from_rational(&Rational::from_integer(v.into()));
    let mut out = m.values[..=order].to_vec();
    for k in 2..=order {
        let mut delta = F::zero();
        for r in 1..=k / 2 {
            for s in 0..=k - 2 * r {
                for t in 0..=k - 2 * r - s {
                    let mt = &m.values[t];
                    if mt.is_zero() {
                        continue;
                    }
                    let c = binomial((k - t - 1) as u64, (2 * r + s - 1) as u64)
                        * binomial((r + s - 1) as u64, s as u64);
                    if c == 0 {
                        continue;
                    }
                    delta = delta + int(c) * zp[k - 2 * r - s - t].clone() * gp[s].clone() * mt.clone();
                }
            }
        }
        out[k] = out[k].clone() + delta;
    }
    MomentSequence { values: out }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    pub lambda: Partition,
    /// `(k, t^{k−2} M_k ∈ ℤ[t²])` for `1 ≤ k ≤ K`.
    pub checks: Vec<(usize, bool)>,
}

impl IntegralityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }
}

/// Whether `t^{k−2} M_k^{(α)}(λ)` is a polynomial in `α = t²` with integer
/// coefficients, for `1 ≤ k ≤ K`. `k = 0` is excluded since `M₀ = 1`.
pub fn integrality_check(lambda: &Partition, order: usize) -> IntegralityReport {
    let (m, _) = anisotropic_mr(lambda, order);
    let checks = (1..=order)
        .map(|k| {
            let v = &m.values[k] * &FieldElement::t_pow(k as i64 - 2);
            let ok = v
                .as_polynomial()
                .and_then(|p| p.unsquare_variable())
                .is_some_and(|p| p.is_integral());
            (k, ok)
        })
        .collect();
    IntegralityReport {
        lambda: lambda.clone(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::corners;
    use crate::field::{int, rat};
    use num_traits::{One, Zero};

    fn p<const N: usize>(v: [usize; N]) -> Partition {
        Partition::from(v)
    }

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn measure_examples() {
        let m = transition_measure(&corners::<Rational>(&p([1])));
        assert_eq!(m.atoms, vec![(int(-1), rat(1, 2)), (int(1), rat(1, 2))]);
        let e = transition_measure(&corners::<Rational>(&Partition::empty()));
        assert_eq!(e.atoms, vec![(int(0), int(1))]);
        let a = transition_measure(&anisotropic_symbolic(&p([1])));
        let alpha = FieldElement::t_pow(2);
        let t = FieldElement::t();
        assert_eq!(a.atoms[0], (-t.inverse().unwrap(), &alpha / &(&alpha + &fe(1))));
        assert_eq!(a.atoms[1], (t, fe(1) / (&alpha + &fe(1))));
    }

    #[test]
    fn moment_examples() {
        let m = moments(&corners::<Rational>(&p([1])), 3);
        assert_eq!(m.values, vec![int(1), int(0), int(1), int(0)]);
        let (ma, _) = anisotropic_mr(&p([1]), 3);
        assert_eq!(ma.values[2], fe(1));
        assert_eq!(ma.values[3], -FieldElement::gamma());
        let e = moments(&corners::<Rational>(&Partition::empty()), 5);
        assert!(e.values[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn cumulant_examples() {
        let r = free_cumulants(&MomentSequence { values: vec![int(1), int(0), int(1), int(0)] });
        assert_eq!(r.values, vec![int(0), int(1), int(0)]);
        let r = free_cumulants(&MomentSequence { values: vec![int(1), int(0), int(0), int(0)] });
        assert!(r.values.iter().all(Zero::is_zero));
        let (m2, r2) = anisotropic_mr(&p([2]), 3);
        let t = FieldElement::t();
        let want = &(&t * &fe(4)) - &(fe(2) / t);
        assert_eq!(m2.values[2], fe(2));
        assert_eq!(m2.values[3], want);
        assert_eq!(*r2.get(2), fe(2));
        assert_eq!(*r2.get(3), want);
        let (_, re) = anisotropic_mr(&Partition::empty(), 4);
        assert!(re.values.iter().all(Zero::is_zero));
    }

    #[test]
    fn semicircle_cumulants() {
        // Catalan moments have R₂ = 1 and all other cumulants zero
        let m = MomentSequence {
            values: [1, 0, 1, 0, 2, 0, 5, 0, 14].iter().map(|&x| int(x)).collect(),
        };
        let r = free_cumulants(&m);
        for k in 1..=8 {
            assert_eq!(*r.get(k), if k == 2 { int(1) } else { int(0) });
        }
        assert_eq!(moments_from_cumulants(&r), m);
    }

    #[test]
    fn box_update_examples() {
        let empty = MomentSequence { values: vec![fe(1), fe(0), fe(0), fe(0)] };
        let g = FieldElement::gamma();
        let up = add_box_update(&empty, &FieldElement::zero(), &g, 3);
        assert_eq!(up.values[2], fe(1));
        assert_eq!(up.values[3], -g.clone());
        let lambda = p([2, 1]);
        let m = anisotropic_mr(&lambda, 6).0;
        let diag = anisotropic_symbolic(&lambda);
        let rows = lambda.addable_rows();
        assert_eq!(rows.len(), 3);
        for (j, o) in rows.into_iter().rev().zip(diag.outer()) {
            let grown = lambda.add_box(j).unwrap();
            assert_eq!(add_box_update(&m, o, &g, 6), anisotropic_mr(&grown, 6).0, "row {j}");
        }
    }

    #[test]
    fn integrality_examples() {
        let r = integrality_check(&p([1]), 3);
        assert!(r.passed());
        assert!(integrality_check(&Partition::empty(), 6).passed());
        assert!(integrality_check(&p([2, 1]), 6).passed());
        assert!(FieldElement::one().is_one());
    }
}
