//! Integer partitions in French convention.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts. Ordering is lexicographic
/// on the parts, so `(2,1,1) < (2,2) < (3,1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts and strips zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::new(alloc::vec![n])
    }

    /// `1^n`.
    pub fn column(n: usize) -> Self {
        Partition(alloc::vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part at 0-based row `j`, zero beyond the length.
    pub fn part(&self, j: usize) -> usize {
        self.0.get(j).copied().unwrap_or(0)
    }

    /// `m_i(λ)`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs, parts decreasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let w = self.part(0);
        Partition((1..=w).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `λ ∪ 1^k`.
    pub fn with_ones(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(core::iter::repeat(1).take(k));
        Partition(v)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::new(v)
    }

    /// Each part shifted by `k`: `(λ₁+k, …, λ_ℓ+k)`.
    pub fn shift_parts(&self, k: usize) -> Self {
        Partition(self.0.iter().map(|p| p + k).collect())
    }

    /// 0-based rows where a box can be added: `j = 0`, or `λ_j < λ_{j−1}`,
    /// for `j ≤ ℓ`. Increasing in `j`.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&j| j == 0 || self.part(j) < self.part(j - 1))
            .collect()
    }

    /// 0-based rows whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| self.part(j) > self.part(j + 1))
            .collect()
    }

    /// Adds a box in 0-based row `j`; `None` if not addable.
    pub fn add_box(&self, j: usize) -> Option<Self> {
        if j > self.len() || (j > 0 && self.part(j) >= self.part(j - 1)) {
            return None;
        }
        let mut v = self.0.clone();
        if j == v.len() {
            v.push(1);
        } else {
            v[j] += 1;
        }
        Some(Partition(v))
    }

    /// Removes the last box of 0-based row `j`; `None` if not removable.
    pub fn remove_box(&self, j: usize) -> Option<Self> {
        if j >= self.len() || self.part(j) <= self.part(j + 1) {
            return None;
        }
        let mut v = self.0.clone();
        v[j] -= 1;
        if v[j] == 0 {
            v.pop();
        }
        Some(Partition(v))
    }

    /// All boxes as 1-based `(row, col)`.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
    }

    /// Arm and leg of a 1-based box; the leg counts boxes above in the same
    /// column (French convention).
    pub fn arm_leg(&self, row: usize, col: usize) -> Result<(usize, usize)> {
        if row == 0 || col == 0 || row > self.len() || col > self.part(row - 1) {
            return Err(Error::BoxOutside {
                lambda: self.clone(),
                row,
                col,
            });
        }
        let arm = self.part(row - 1) - col;
        let leg = self.0[row..].iter().filter(|&&p| p >= col).count();
        Ok((arm, leg))
    }

    /// All parts at least `k`.
    pub fn min_part_at_least(&self, k: usize) -> bool {
        self.0.iter().all(|&p| p >= k)
    }
}

/// `z_μ = Π i^{m_i} m_i!`.
pub fn z_mu(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (p, m) in mu.multiplicities() {
        for k in 1..=m {
            z *= BigUint::from(p) * BigUint::from(k);
        }
    }
    z
}

/// Partial sums of `μ` bounded by those of `λ` at every index.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size(), lambda.size()));
    }
    let (mut a, mut b) = (0usize, 0usize);
    for j in 0..mu.len().max(lambda.len()) {
        a += mu.part(j);
        b += lambda.part(j);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, 1)
}

/// Partitions of `n` with every part in `[min_part, max_part]`, reverse
/// lexicographic.
pub fn partitions_bounded(n: usize, max_part: usize, min_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, max_part.min(n), min_part.max(1), &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (min..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, min, cur, out);
        cur.pop();
    }
}

/// Partitions of every size `0..=n`, in increasing size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, `-` or blank for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p<const N: usize>(v: [usize; N]) -> Partition {
        Partition::from(v)
    }

    /// Euler's pentagonal recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut c = vec![0i64; n + 1];
        c[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                c[m] += sign * c[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    c[m] += sign * c[m - g2];
                }
                k += 1;
            }
        }
        c[n] as u64
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p([4]), p([3, 1]), p([2, 2]), p([2, 1, 1]), p([1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(9).len(), 30);
        for n in 0..=40 {
            assert_eq!(enumerate_partitions(n).len() as u64, partition_count(n), "n = {n}");
        }
    }

    #[test]
    fn reverse_lex_is_strictly_decreasing() {
        let ps = enumerate_partitions(8);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn z_values() {
        assert_eq!(z_mu(&p([1])), BigUint::from(1u32));
        assert_eq!(z_mu(&p([2, 1])), BigUint::from(2u32));
        assert_eq!(z_mu(&p([3, 1, 1])), BigUint::from(6u32));
        assert_eq!(z_mu(&Partition::new(vec![1, 3, 1])), BigUint::from(6u32));
        assert_eq!(z_mu(&Partition::empty()), BigUint::from(1u32));
    }

    #[test]
    fn arms_and_legs() {
        assert_eq!(p([3, 1]).arm_leg(1, 1).unwrap(), (2, 1));
        assert_eq!(p([3, 1]).arm_leg(1, 3).unwrap(), (0, 0));
        assert_eq!(p([2, 2]).arm_leg(1, 1).unwrap(), (1, 1));
        assert!(matches!(p([3, 1]).arm_leg(2, 2), Err(Error::BoxOutside { .. })));
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&p([1, 1]), &p([2])).unwrap());
        assert!(!dominance_leq(&p([3, 3]), &p([4, 1, 1])).unwrap());
        assert!(!dominance_leq(&p([4, 1, 1]), &p([3, 3])).unwrap());
        assert!(dominance_leq(&p([2, 1]), &p([2, 1])).unwrap());
        assert!(dominance_leq(&p([2]), &p([1])).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=8 {
            let ps = enumerate_partitions(n);
            let leq = |a: &Partition, b: &Partition| dominance_leq(a, b).unwrap();
            for a in &ps {
                assert!(leq(a, a));
                for b in &ps {
                    if a != b && leq(a, b) {
                        assert!(!leq(b, a));
                    }
                    for c in &ps {
                        if leq(a, b) && leq(b, c) {
                            assert!(leq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn boxes_and_conjugate() {
        let l = p([3, 1]);
        assert_eq!(l.conjugate(), p([2, 1, 1]));
        assert_eq!(l.addable_rows(), vec![0, 1, 2]);
        assert_eq!(l.removable_rows(), vec![0, 1]);
        assert_eq!(p([2, 2]).addable_rows(), vec![0, 2]);
        assert_eq!(l.add_box(1), Some(p([3, 2])));
        assert_eq!(p([2, 2]).add_box(1), None);
        assert_eq!(l.remove_box(1), Some(p([3])));
        assert_eq!(l.boxes().count(), 4);
        assert_eq!(p([2]).with_ones(2), p([2, 1, 1]));
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(p([3, 1]).to_string(), "3,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!("1,3".parse::<Partition>().unwrap(), p([3, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
    }
}
