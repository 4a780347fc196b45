//! Integer partitions and the combinatorics built on them: monomial types,
//! subpartitions with their index sets `T(λ, γ)`, the `p↑i` and `diff_α`
//! operators, and monomial symmetric dual elements.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::DualElement;

/// A weakly decreasing sequence of positive integers; `()` is allowed.
///
/// The derived order compares part sequences lexicographically, which on
/// partitions of a fixed integer is the lex order used to index the
/// linear-relation matrices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Argument(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts positive entries decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Reads a possibly zero-padded tuple; `None` when it is not a partition
    /// (negative entry, or an increase anywhere, e.g. `(0,1,1)`).
    pub fn from_tuple(entries: &[i64]) -> Option<Self> {
        if entries.iter().any(|&e| e < 0) || entries.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(entries.iter().filter(|&&e| e > 0).map(|&e| e as usize).collect()))
    }

    /// The empty partition `()`.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(d)`.
    pub fn row(d: usize) -> Self {
        if d == 0 {
            Partition::empty()
        } else {
            Partition(vec![d])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `#λ`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of distinct part values.
    pub fn distinct_parts(&self) -> usize {
        let mut v = self.0.clone();
        v.dedup();
        v.len()
    }

    /// Multiplicity of each part value.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn ends_with_one(&self) -> bool {
        self.0.last() == Some(&1)
    }

    /// Removes one trailing part equal to 1.
    pub fn drop_last_one(&self) -> Option<Partition> {
        if self.ends_with_one() {
            Some(Partition(self.0[..self.0.len() - 1].to_vec()))
        } else {
            None
        }
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `ν(n) = (n − |ν|, ν_1, …, ν_s)` when it is a partition of `n`.
    pub fn padded(&self, n: usize) -> Option<Partition> {
        let top = n.checked_sub(self.size())?;
        if top < self.part(1) {
            return None;
        }
        let mut v = vec![top];
        v.extend_from_slice(&self.0);
        Partition::new(v).ok()
    }

    /// Dimension of the Specht module `Sp_λ`, by the hook length formula.
    pub fn specht_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = 1;
        let mut hooks: Vec<u128> = Vec::new();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j + conj.0[j] - i - 1) as u128);
            }
        }
        // Interleave multiplication and division to stay within range.
        let n = self.size();
        let mut hooks_left = hooks;
        for k in 1..=n as u128 {
            num *= k;
            hooks_left.retain(|&h| {
                if num % h == 0 {
                    num /= h;
                    false
                } else {
                    true
                }
            });
        }
        for h in hooks_left {
            num /= h;
        }
        num
    }

    /// `p↑i` for `1 ≤ i ≤ #p + 1`: add one to part `i` and re-sort, or append a part 1.
    pub fn up(&self, i: usize) -> Result<Partition> {
        let s = self.0.len();
        if i == 0 || i > s + 1 {
            return Err(Error::Argument(format!("p↑{i} undefined for p = {self}")));
        }
        if i == s + 1 {
            let mut v = self.0.clone();
            v.push(1);
            return Ok(Partition(v));
        }
        let mut v = self.0.clone();
        v[i - 1] += 1;
        Ok(Partition::from_unsorted(v))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,2,1)`, `[3,2,1]`, `3,2,1` or `3 2 1`; `()` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts: std::result::Result<Vec<usize>, _> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect();
        let parts = parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
        Partition::new(parts)
    }
}

/// All partitions of `d`, in increasing lex order.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            prefix.push(p);
            rec(rem - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `P(d)`, the number of partitions of `d`.
pub fn partition_count(d: usize) -> usize {
    // Euler's pentagonal recurrence, independent of the enumeration above.
    let mut p = vec![0i64; d + 1];
    p[0] = 1;
    for m in 1..=d {
        let mut acc = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = acc;
    }
    p[d] as usize
}

/// `type(m)`: the nonzero exponents sorted decreasingly (`part(α)` for exponent vectors).
pub fn type_of(m: &Monomial) -> Partition {
    Partition::from_unsorted(m.exps().iter().map(|&e| e as usize).collect())
}

/// A subpartition `γ ⊆ λ` together with `T(λ, γ)` (1-based indices into λ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subpartition {
    pub gamma: Partition,
    pub t: Vec<usize>,
    /// `false` only for `γ = λ`.
    pub proper: bool,
}

/// Every sub-multiset `γ` of the parts of `λ`, with `T(λ, γ)` chosen by the
/// smallest-available-index rule. Ordered by decreasing size, then decreasing lex.
pub fn subpartitions_with_t(lambda: &Partition) -> Vec<Subpartition> {
    let mults: Vec<(usize, usize)> = lambda.multiplicities().into_iter().rev().collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; mults.len()];
    loop {
        let mut parts = Vec::new();
        for (k, &(v, _)) in mults.iter().enumerate() {
            parts.extend(std::iter::repeat(v).take(choice[k]));
        }
        let gamma = Partition(parts);
        let t = index_set(lambda, &gamma);
        let proper = gamma != *lambda;
        out.push(Subpartition { gamma, t, proper });
        // Odometer over the multiplicity choices.
        let mut k = 0;
        while k < mults.len() && choice[k] == mults[k].1 {
            choice[k] = 0;
            k += 1;
        }
        if k == mults.len() {
            break;
        }
        choice[k] += 1;
    }
    out.sort_by(|a, b| b.gamma.size().cmp(&a.gamma.size()).then(b.gamma.cmp(&a.gamma)));
    out
}

/// `T(λ, γ)`: for `γ_1, γ_2, …` in turn, the smallest unused index `k` with `λ_k = γ_i`.
pub fn index_set(lambda: &Partition, gamma: &Partition) -> Vec<usize> {
    let mut used = vec![false; lambda.len()];
    let mut t = Vec::with_capacity(gamma.len());
    for &g in gamma.parts() {
        let k = (0..lambda.len())
            .find(|&k| !used[k] && lambda.0[k] == g)
            .expect("γ must be a subpartition of λ");
        used[k] = true;
        t.push(k + 1);
    }
    t.sort_unstable();
    t
}

/// `diff_α`: for each `i ∈ Supp(α)` (0-based), the 1-based position at which
/// `part(α)` and `part(α + e_i)` differ.
pub fn diff_alpha(alpha: &[u32]) -> BTreeMap<usize, usize> {
    let p = Partition::from_unsorted(alpha.iter().map(|&e| e as usize).collect());
    let mut out = BTreeMap::new();
    for (i, &a) in alpha.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let mut bumped: Vec<usize> = alpha.iter().map(|&e| e as usize).collect();
        bumped[i] += 1;
        let q = Partition::from_unsorted(bumped);
        let pos = (1..=p.len()).find(|&k| p.part(k) != q.part(k)).expect("some part changes");
        out.insert(i, pos);
    }
    out
}

/// Number of monomials of type `λ` in `n` variables: `n! / ((n − #λ)! · Π m_v!)`.
pub fn count_of_type(lambda: &Partition, n: usize) -> u128 {
    if lambda.len() > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for k in 0..lambda.len() {
        acc *= (n - k) as u128;
    }
    for (_, m) in lambda.multiplicities() {
        for k in 1..=m {
            acc /= k as u128;
        }
    }
    acc
}

/// All exponent vectors of length `n` whose type is `λ`.
pub fn monomials_of_type(lambda: &Partition, n: usize) -> Result<Vec<Monomial>> {
    if lambda.len() > n {
        return Err(Error::Argument(format!("#{lambda} = {} exceeds n = {n}", lambda.len())));
    }
    let mut counts: Vec<(u32, usize)> = lambda.multiplicities().into_iter().map(|(v, m)| (v as u32, m)).collect();
    counts.push((0, n - lambda.len()));
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(counts: &mut [(u32, usize)], n: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for k in 0..counts.len() {
            if counts[k].1 == 0 {
                continue;
            }
            counts[k].1 -= 1;
            cur.push(counts[k].0);
            rec(counts, n, cur, out);
            cur.pop();
            counts[k].1 += 1;
        }
    }
    rec(&mut counts, n, &mut cur, &mut out);
    Ok(out)
}

/// `m_λ`: the sum of all dual monomials of type `λ`, each with coefficient 1.
pub fn monomial_symmetric<F: Field>(field: &F, lambda: &Partition, n: usize) -> Result<DualElement<F>> {
    let monos = monomials_of_type(lambda, n)?;
    Ok(DualElement::from_terms(field.clone(), n, monos.into_iter().map(|m| (m, field.one()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_in_lex_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3), vec![p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]);
        let five = enumerate_partitions(5);
        assert_eq!(five[1], p(&[2, 1, 1, 1]));
        assert_eq!(five[4], p(&[3, 2]));
        for d in 0..15 {
            assert_eq!(enumerate_partitions(d).len(), partition_count(d));
        }
    }

    #[test]
    fn up_operator() {
        let d = 7;
        let q = p(&[d - 3, 1, 1]);
        assert_eq!(q.up(1).unwrap(), p(&[d - 2, 1, 1]));
        assert_eq!(q.up(2).unwrap(), p(&[d - 3, 2, 1]));
        assert_eq!(q.up(3).unwrap(), p(&[d - 3, 2, 1]));
        assert_eq!(q.up(4).unwrap(), p(&[d - 3, 1, 1, 1]));
        assert!(q.up(5).is_err());
        assert_eq!(Partition::empty().up(1).unwrap(), p(&[1]));
    }

    #[test]
    fn diff_example() {
        let d = 6u32;
        let diff = diff_alpha(&[1, d - 2, 1, 0, 0]);
        assert_eq!(diff.get(&0), Some(&2));
        assert_eq!(diff.get(&1), Some(&1));
        assert_eq!(diff.get(&2), Some(&2));
        assert_eq!(diff.len(), 3);
    }

    #[test]
    fn subpartition_example() {
        let lam = p(&[5, 5, 2, 2, 1]);
        let subs = subpartitions_with_t(&lam);
        assert_eq!(subs.iter().filter(|s| s.proper).count(), 17);
        let g = subs.iter().find(|s| s.gamma == p(&[5, 5, 2])).unwrap();
        assert_eq!(g.t, vec![1, 2, 3]);
        let e = subs.iter().find(|s| s.gamma.is_empty()).unwrap();
        assert!(e.t.is_empty());
        assert_eq!(index_set(&p(&[5, 5, 5, 2, 1]), &p(&[5, 5, 2])), vec![1, 2, 4]);
    }

    #[test]
    fn types_and_dimensions() {
        assert_eq!(type_of(&Monomial::new(vec![2, 2, 1, 3])), p(&[3, 2, 2, 1]));
        assert_eq!(type_of(&Monomial::new(vec![0, 0])), Partition::empty());
        assert_eq!(count_of_type(&p(&[2, 1]), 3), 6);
        assert_eq!(monomials_of_type(&p(&[2, 1]), 3).unwrap().len(), 6);
        assert_eq!(p(&[3, 1]).specht_dimension(), 3);
        assert_eq!(p(&[2, 2]).specht_dimension(), 2);
        assert_eq!(p(&[4, 2, 1]).specht_dimension(), 35);
        assert_eq!(p(&[2]).padded(5), Some(p(&[3, 2])));
        assert_eq!(p(&[3]).padded(5), None);
        assert_eq!(Partition::from_tuple(&[0, 1, 1]), None);
        assert_eq!(Partition::from_tuple(&[2, 1, 0]), Some(p(&[2, 1])));
    }
}
