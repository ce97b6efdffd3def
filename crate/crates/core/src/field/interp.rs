//! Interpolation and rational-function reconstruction from specialisations.
//!
//! Used to lift a linear solve over ℚ at many values of `t` back to ℚ(t).
//! Every reconstructed value is a candidate only; callers verify exactly.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{int, FieldElement, Poly, Rational};
use crate::error::{Error, Result};

/// Newton-form interpolating polynomial through `(xs[i], ys[i])`, expanded.
/// The `xs` must be pairwise distinct.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        // acc = acc * (x - xs[i]) + dd[i]
        let lin = Poly::from_coeffs(alloc::vec![-xs[i].clone(), Rational::one()]);
        acc = &(&acc * &lin) + &Poly::constant(dd[i].clone());
    }
    acc
}

/// Rational function `p/q` agreeing with the data, chosen by maximal-quotient
/// selection in the extended Euclidean sequence of `(Π(x − xᵢ), u)` where `u`
/// interpolates the data. Returns `None` when no quotient stands out.
pub fn rational_reconstruct(xs: &[Rational], ys: &[Rational]) -> Option<FieldElement> {
    let n = xs.len();
    if n == 0 {
        return None;
    }
    if ys.iter().all(Zero::is_zero) {
        return Some(FieldElement::zero());
    }
    let u = interpolate(xs, ys);
    let mut m = Poly::one();
    for x in xs {
        m = &m * &Poly::from_coeffs(alloc::vec![-x.clone(), Rational::one()]);
    }
    let (mut r0, mut t0) = (m, Poly::zero());
    let (mut r1, mut t1) = (u, Poly::one());
    let mut best: Option<(usize, Poly, Poly)> = None;
    while !r1.is_zero() {
        let (q, rem) = r0.div_rem(&r1);
        let dq = q.degree().unwrap_or(0);
        if best.as_ref().map_or(true, |b| dq > b.0) {
            best = Some((dq, r1.clone(), t1.clone()));
        }
        let t2 = &t0 - &(&q * &t1);
        r0 = core::mem::replace(&mut r1, rem);
        t0 = core::mem::replace(&mut t1, t2);
    }
    let (dq, num, den) = best?;
    if dq < 1 || den.is_zero() {
        return None;
    }
    FieldElement::new(num, den).ok()
}

/// Sample points `2, 3, 4, …` used by [`reconstruct_vector`].
pub fn sample_point(i: usize) -> Rational {
    int(i as i64 + 2)
}

/// Reconstruct a vector of rational functions of `t` from an oracle that
/// evaluates it at a rational `t`. The oracle may return `Ok(None)` at an
/// unlucky point, which is skipped. Each round fits on all but the two most
/// recent points and checks those two; `max_points` bounds the sampling.
pub fn reconstruct_vector<F>(len: usize, max_points: usize, mut oracle: F) -> Result<Vec<FieldElement>>
where
    F: FnMut(&Rational) -> Result<Option<Vec<Rational>>>,
{
    let mut xs: Vec<Rational> = Vec::new();
    let mut cols: Vec<Vec<Rational>> = alloc::vec![Vec::new(); len];
    let mut next = 0usize;
    let mut target = 6usize;
    while xs.len() < max_points {
        while xs.len() < target && next < 4 * max_points {
            let x = sample_point(next);
            next += 1;
            if let Some(v) = oracle(&x)? {
                if v.len() != len {
                    return Err(Error::Internal(alloc::format!(
                        "oracle returned {} values, expected {len}",
                        v.len()
                    )));
                }
                for (c, y) in cols.iter_mut().zip(v) {
                    c.push(y);
                }
                xs.push(x);
            }
        }
        if xs.len() < target {
            break;
        }
        let fit = xs.len() - 2;
        let attempt: Option<Vec<FieldElement>> = cols
            .iter()
            .map(|ys| {
                let f = rational_reconstruct(&xs[..fit], &ys[..fit])?;
                xs[fit..]
                    .iter()
                    .zip(&ys[fit..])
                    .all(|(x, y)| f.eval(x).as_ref() == Some(y))
                    .then_some(f)
            })
            .collect();
        if let Some(v) = attempt {
            return Ok(v);
        }
        target += 4;
    }
    Err(Error::ReconstructionFailed { points: xs.len() })
}
