//! Generalized Young diagrams as interlacing corner contents.
//!
//! A diagram is a zigzag from the y-axis to the x-axis. Its outer corners
//! `o₁ < … < o_m` and inner corners `i₁ < … < i_{m−1}` are recorded by their
//! contents `x − y`; the heights `x + y` are recovered by walking the profile,
//! which starts at `|o₁|` and has slope `±1` between corners.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{rat, Field, FieldElement, RealField};
use crate::partitions::Partition;
use crate::symfunc::{convert, Basis, SymFun, TransitionTables};

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedDiagram<F> {
    outer: Vec<F>,
    inner: Vec<F>,
}

impl<F: Field> GeneralizedDiagram<F> {
    /// Requires `|𝕆| = |𝕀| + 1` and `Σ𝕆 = Σ𝕀`. Ordering is checked by
    /// [`GeneralizedDiagram::is_interlacing`] where the scalar is ordered.
    pub fn new(outer: Vec<F>, inner: Vec<F>) -> Result<Self> {
        if outer.len() != inner.len() + 1 {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} outer and {} inner corners",
                outer.len(),
                inner.len()
            )));
        }
        let d = GeneralizedDiagram { outer, inner };
        if !d.power_sum(1).is_zero() {
            return Err(Error::DimensionMismatch("outer and inner contents have different sums".into()));
        }
        Ok(d)
    }

    pub fn outer(&self) -> &[F] {
        &self.outer
    }

    pub fn inner(&self) -> &[F] {
        &self.inner
    }

    /// `p_k(𝕆 − 𝕀) = Σ o^k − Σ i^k`.
    pub fn power_sum(&self, k: u32) -> F {
        let mut acc = F::zero();
        for o in &self.outer {
            acc = acc + o.pow_u(k);
        }
        for i in &self.inner {
            acc = acc - i.pow_u(k);
        }
        acc
    }

    /// Profile heights `x + y` at `o₁, i₁, o₂, …, o_m`.
    pub fn heights(&self) -> Vec<F> {
        let mut h = Vec::with_capacity(2 * self.outer.len() - 1);
        let mut v = -self.outer[0].clone();
        h.push(v.clone());
        for (k, i) in self.inner.iter().enumerate() {
            v = v + i.clone() - self.outer[k].clone();
            h.push(v.clone());
            v = v - (self.outer[k + 1].clone() - i.clone());
            h.push(v.clone());
        }
        h
    }

    /// Corner coordinates `(x, y)`: outer corners then inner corners, each in
    /// increasing content.
    pub fn corner_points(&self) -> (Vec<(F, F)>, Vec<(F, F)>) {
        let half = F::from_rational(&rat(1, 2));
        let h = self.heights();
        let point = |c: &F, v: &F| {
            (
                (v.clone() + c.clone()) * half.clone(),
                (v.clone() - c.clone()) * half.clone(),
            )
        };
        let outer = self.outer.iter().enumerate().map(|(k, c)| point(c, &h[2 * k])).collect();
        let inner = self.inner.iter().enumerate().map(|(k, c)| point(c, &h[2 * k + 1])).collect();
        (outer, inner)
    }

    /// `T_{s,t}`: every corner `(x, y)` goes to `(s·x, t·y)`.
    pub fn stretch(&self, s: &F, t: &F) -> Result<Self> {
        if s.is_positive() == Some(false) || t.is_positive() == Some(false) {
            return Err(Error::NonPositiveStretch);
        }
        let (outer, inner) = self.corner_points();
        let content = |(x, y): &(F, F)| s.clone() * x.clone() - t.clone() * y.clone();
        Ok(GeneralizedDiagram {
            outer: outer.iter().map(content).collect(),
            inner: inner.iter().map(content).collect(),
        })
    }

    /// `D_s = T_{s,s}`.
    pub fn dilate(&self, s: &F) -> Result<Self> {
        self.stretch(s, s)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> GeneralizedDiagram<G> {
        GeneralizedDiagram {
            outer: self.outer.iter().map(&f).collect(),
            inner: self.inner.iter().map(&f).collect(),
        }
    }
}

impl<F: RealField> GeneralizedDiagram<F> {
    /// `o₁ < i₁ < o₂ < … < i_{m−1} < o_m`.
    pub fn is_interlacing(&self) -> bool {
        let mut seq = Vec::with_capacity(2 * self.outer.len());
        for (k, o) in self.outer.iter().enumerate() {
            seq.push(o);
            if let Some(i) = self.inner.get(k) {
                seq.push(i);
            }
        }
        seq.windows(2).all(|w| w[0] < w[1])
    }

    pub fn to_f64(&self) -> GeneralizedDiagram<f64> {
        self.map(RealField::to_f64)
    }

    pub fn profile(&self) -> Profile<F> {
        profile(self)
    }
}

/// Corner contents of `λ` in French convention. Row `j` (0-based) carries
/// an outer corner at `(λ_j, j)` when a box can be added there, and an inner
/// corner at `(λ_j, j+1)` when `λ_j > λ_{j+1}`.
pub fn corners<F: Field>(lambda: &Partition) -> GeneralizedDiagram<F> {
    let content = |x: usize, y: usize| F::from_i64(x as i64 - y as i64);
    let outer = lambda
        .addable_rows()
        .into_iter()
        .rev()
        .map(|j| content(lambda.part(j), j))
        .collect();
    let inner = lambda
        .removable_rows()
        .into_iter()
        .rev()
        .map(|j| content(lambda.part(j), j + 1))
        .collect();
    GeneralizedDiagram { outer, inner }
}

/// `T_{s,1/s}(λ)`; with `s = t = √α` this is the α-anisotropic diagram.
pub fn anisotropic<F: Field>(lambda: &Partition, s: &F) -> Result<GeneralizedDiagram<F>> {
    let inv = s.inverse().ok_or(Error::NonPositiveStretch)?;
    corners(lambda).stretch(s, &inv)
}

/// The α-anisotropic diagram of `λ` with symbolic `t = √α`.
pub fn anisotropic_symbolic(lambda: &Partition) -> GeneralizedDiagram<FieldElement> {
    anisotropic(lambda, &FieldElement::t()).expect("t is invertible")
}

/// Piecewise-linear profile `ω` through `(content, height)` breakpoints,
/// equal to `|x|` outside the first and last breakpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile<F> {
    points: Vec<(F, F)>,
}

pub fn profile<F: RealField>(l: &GeneralizedDiagram<F>) -> Profile<F> {
    let mut xs = Vec::with_capacity(2 * l.outer.len() - 1);
    for (k, o) in l.outer.iter().enumerate() {
        xs.push(o.clone());
        if let Some(i) = l.inner.get(k) {
            xs.push(i.clone());
        }
    }
    Profile {
        points: xs.into_iter().zip(l.heights()).collect(),
    }
}

impl<F: RealField> Profile<F> {
    pub fn breakpoints(&self) -> &[(F, F)] {
        &self.points
    }

    pub fn eval(&self, x: &F) -> F {
        let first = &self.points[0];
        let last = &self.points[self.points.len() - 1];
        if *x <= first.0 || *x >= last.0 {
            return x.abs();
        }
        // first breakpoint with content ≥ x
        let k = self.points.partition_point(|(c, _)| c < x);
        let (c0, h0) = &self.points[k - 1];
        let (c1, h1) = &self.points[k];
        let slope = (h1.clone() - h0.clone()) / (c1.clone() - c0.clone());
        h0.clone() + slope * (x.clone() - c0.clone())
    }

    pub fn to_f64(&self) -> Profile<f64> {
        Profile {
            points: self.points.iter().map(|(c, h)| (c.to_f64(), h.to_f64())).collect(),
        }
    }
}

/// 1-Lipschitz functions on ℝ equal to `|x|` outside a compact support.
pub trait ContinuousDiagram {
    fn value(&self, x: f64) -> f64;
    /// Points where the function may fail to be smooth.
    fn kinks(&self) -> Vec<f64>;
    fn support(&self) -> (f64, f64);
}

impl<F: RealField> ContinuousDiagram for Profile<F> {
    fn value(&self, x: f64) -> f64 {
        let first = self.points[0].0.to_f64();
        let last = self.points[self.points.len() - 1].0.to_f64();
        if x <= first || x >= last {
            return libm::fabs(x);
        }
        let k = self.points.partition_point(|(c, _)| c.to_f64() < x);
        let (c0, h0) = (self.points[k - 1].0.to_f64(), self.points[k - 1].1.to_f64());
        let (c1, h1) = (self.points[k].0.to_f64(), self.points[k].1.to_f64());
        h0 + (h1 - h0) / (c1 - c0) * (x - c0)
    }

    fn kinks(&self) -> Vec<f64> {
        self.points.iter().map(|(c, _)| c.to_f64()).collect()
    }

    fn support(&self) -> (f64, f64) {
        (self.points[0].0.to_f64(), self.points[self.points.len() - 1].0.to_f64())
    }
}

/// `Ω(x) = (2/π)(x·arcsin(x/2) + √(4 − x²))` on `[−2, 2]`, `|x|` outside.
pub fn omega_curve(x: f64) -> f64 {
    if libm::fabs(x) >= 2.0 {
        return libm::fabs(x);
    }
    (2.0 / core::f64::consts::PI) * (x * libm::asin(x / 2.0) + libm::sqrt(4.0 - x * x))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LimitShape;

impl ContinuousDiagram for LimitShape {
    fn value(&self, x: f64) -> f64 {
        omega_curve(x)
    }

    fn kinks(&self) -> Vec<f64> {
        alloc::vec![-2.0, 2.0]
    }

    fn support(&self) -> (f64, f64) {
        (-2.0, 2.0)
    }
}

/// `sup |f − g|` over the union of supports, sampled at every kink of either
/// function and on a uniform grid of width `step`.
///
/// `f − g` is 2-Lipschitz, so the sampled maximum is within `step` of the
/// true supremum.
pub fn sup_distance(f: &dyn ContinuousDiagram, g: &dyn ContinuousDiagram, step: f64) -> f64 {
    assert!(step > 0.0, "grid step must be positive");
    let (a0, b0) = f.support();
    let (a1, b1) = g.support();
    let (a, b) = (a0.min(a1), b0.max(b1));
    let diff = |x: f64| libm::fabs(f.value(x) - g.value(x));
    let mut best = f.kinks().into_iter().chain(g.kinks()).map(diff).fold(0.0, f64::max);
    let steps = libm::ceil((b - a) / step) as usize;
    for k in 0..=steps {
        best = best.max(diff((a + k as f64 * step).min(b)));
    }
    best
}

/// `f(𝕆_L − 𝕀_L)`: expand `f` over power sums and substitute
/// `p_k(𝕆 − 𝕀)`. Coefficients are mapped into `F` by `coeff`.
pub fn eval_difference_alphabet_with<F: Field>(
    f: &SymFun,
    l: &GeneralizedDiagram<F>,
    tables: &TransitionTables,
    coeff: impl Fn(&FieldElement) -> F,
) -> F {
    let fp = convert(f, Basis::P, tables);
    let mut cache: Vec<Option<F>> = alloc::vec![None; f.degree() + 1];
    let mut acc = F::zero();
    for (rho, c) in fp.terms() {
        let mut term = coeff(c);
        for &k in rho.parts() {
            let pk = cache[k].get_or_insert_with(|| l.power_sum(k as u32)).clone();
            term = term * pk;
        }
        acc = acc + term;
    }
    acc
}

pub fn eval_difference_alphabet(
    f: &SymFun,
    l: &GeneralizedDiagram<FieldElement>,
    tables: &TransitionTables,
) -> FieldElement {
    eval_difference_alphabet_with(f, l, tables, Clone::clone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};
    use num_traits::{One, Zero};
    use crate::partitions::partitions_up_to;

    fn p<const N: usize>(v: [usize; N]) -> Partition {
        Partition::from(v)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn corner_examples() {
        let e: GeneralizedDiagram<Rational> = corners(&Partition::empty());
        assert_eq!((e.outer(), e.inner()), (&ints(&[0])[..], &[][..]));
        let one: GeneralizedDiagram<Rational> = corners(&p([1]));
        assert_eq!((one.outer(), one.inner()), (&ints(&[-1, 1])[..], &ints(&[0])[..]));
        let l: GeneralizedDiagram<Rational> = corners(&p([3, 1]));
        assert_eq!((l.outer(), l.inner()), (&ints(&[-2, 0, 3])[..], &ints(&[-1, 2])[..]));
    }

    #[test]
    fn stretch_examples() {
        let one: GeneralizedDiagram<Rational> = corners(&p([1]));
        let s = one.stretch(&int(2), &rat(1, 2)).unwrap();
        assert_eq!(s.outer(), &[rat(-1, 2), int(2)][..]);
        assert_eq!(s.inner(), &[rat(3, 2)][..]);
        assert_eq!(one.stretch(&int(1), &int(1)).unwrap(), one);
        assert_eq!(one.stretch(&int(0), &int(1)), Err(Error::NonPositiveStretch));

        let t = FieldElement::t();
        let a = anisotropic_symbolic(&p([1]));
        assert_eq!(a.outer(), &[-t.inverse().unwrap(), t.clone()][..]);
        assert_eq!(a.inner(), &[t.clone() - t.inverse().unwrap()][..]);
    }

    #[test]
    fn profile_examples() {
        let e = profile(&corners::<Rational>(&Partition::empty()));
        assert_eq!(e.eval(&int(0)), int(0));
        assert_eq!(e.eval(&int(-3)), int(3));
        let one = profile(&corners::<Rational>(&p([1])));
        assert_eq!(one.eval(&int(0)), int(2));
        assert_eq!(one.eval(&int(1)), int(1));
        assert_eq!(one.eval(&int(-1)), int(1));
        assert_eq!(one.eval(&rat(1, 2)), rat(3, 2));
        let sq = profile(&corners::<Rational>(&p([2, 2])));
        assert_eq!(sq.eval(&int(0)), int(4));
    }

    #[test]
    fn profile_height_is_x_plus_y_at_corners() {
        for lambda in partitions_up_to(10) {
            let l = corners::<Rational>(&lambda);
            let prof = profile(&l);
            let (outer, inner) = l.corner_points();
            for (c, (x, y)) in l.outer().iter().zip(&outer).chain(l.inner().iter().zip(&inner)) {
                assert_eq!(prof.eval(c), x + y);
                assert_eq!(c.clone(), x - y);
                assert!(x.is_integer() && y.is_integer());
            }
        }
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega_curve(2.0), 2.0);
        assert_eq!(omega_curve(-3.0), 3.0);
        assert!((omega_curve(0.0) - 4.0 / core::f64::consts::PI).abs() < 1e-15);
        assert!((omega_curve(2.0 - 1e-9) - 2.0).abs() < 1e-6);
    }

    #[test]
    fn sup_distance_examples() {
        let e = profile(&corners::<Rational>(&Partition::empty()));
        let one = profile(&corners::<Rational>(&p([1])));
        assert_eq!(sup_distance(&e, &e, 1e-3), 0.0);
        assert!((sup_distance(&e, &LimitShape, 1e-3) - 4.0 / core::f64::consts::PI).abs() < 1e-3);
        assert_eq!(sup_distance(&one, &e, 1e-3), 2.0);
    }

    #[test]
    fn difference_alphabet_examples() {
        let mut book = crate::symfunc::SymBook::new();
        let l1 = corners::<FieldElement>(&p([1]));
        let h2 = SymFun::basis_element(Basis::H, p([2]));
        assert_eq!(eval_difference_alphabet(&h2, &l1, book.tables(2)), FieldElement::one());
        let p1 = SymFun::basis_element(Basis::P, p([1]));
        for lambda in [p([1]), p([3, 1]), p([2, 2, 1])] {
            let l = anisotropic_symbolic(&lambda);
            assert!(eval_difference_alphabet(&p1, &l, book.tables(1)).is_zero());
        }
        let p2 = SymFun::basis_element(Basis::P, p([2]));
        let l2 = corners::<FieldElement>(&p([2]));
        assert_eq!(eval_difference_alphabet(&p2, &l2, book.tables(2)), FieldElement::from_int(4));
    }
}
