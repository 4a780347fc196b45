//! Permutations of `{1, …, n}` (stored 0-based).

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A permutation `σ`, stored as the image list `σ(0), …, σ(n−1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates an image list.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Argument(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The adjacent transposition swapping positions `k` and `k+1` (0-based).
    pub fn adjacent(n: usize, k: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(k, k + 1);
        Permutation(v)
    }

    /// Builds a permutation from 1-based cycles such as `[[1, 2, 3], [4, 5]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut v: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x == 0 || x > n || used[x - 1] {
                    return Err(Error::Argument(format!("bad cycle {c:?} for n={n}")));
                }
                used[x - 1] = true;
                v[x - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        Ok(Permutation(v))
    }

    /// The canonical representative of cycle type `mu`: cycles filled left to right,
    /// e.g. `(3,2) ↦ (1 2 3)(4 5)`.
    pub fn of_cycle_type(mu: &Partition) -> Self {
        let n = mu.size();
        let mut v: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in mu.parts() {
            for k in 0..len {
                v[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Permutation(v)
    }

    /// Cycle lengths (including fixed points), sorted decreasingly.
    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// `±1`: the sign of the permutation.
    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        if (self.0.len() - ct.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Number of fixed points of `σ^k`.
    pub fn fixed_points_of_power(&self, k: usize) -> usize {
        (0..self.0.len())
            .filter(|&i| {
                let mut x = i;
                for _ in 0..k {
                    x = self.0[x];
                }
                x == i
            })
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for s in 0..n {
            if seen[s] || self.0[s] == s {
                continue;
            }
            any = true;
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push((x + 1).to_string());
                x = self.0[x];
            }
            write!(f, "({})", cyc.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Sign of the permutation sorting `seq` (distinct entries) increasingly.
pub fn sorting_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_representatives() {
        let mu = Partition::new(vec![3, 2]).unwrap();
        let s = Permutation::of_cycle_type(&mu);
        assert_eq!(s.to_string(), "(1 2 3)(4 5)");
        assert_eq!(s.cycle_type(), mu);
        assert_eq!(s.sign(), -1);
        assert_eq!(s.fixed_points_of_power(3), 3);
    }

    #[test]
    fn composition_is_function_composition() {
        let s = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let t = Permutation::from_cycles(3, &[vec![2, 3]]).unwrap();
        let st = s.compose(&t);
        assert_eq!(st.apply(1), s.apply(t.apply(1)));
        assert_eq!(st.compose(&st.inverse()), Permutation::identity(3));
    }

    #[test]
    fn sorting_signs() {
        assert_eq!(sorting_sign(&[0, 1, 2]), 1);
        assert_eq!(sorting_sign(&[1, 0, 2]), -1);
        assert_eq!(sorting_sign(&[2, 0, 1]), 1);
    }
}
