//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Every container carries its field value, so the field is a runtime choice.
//! Algorithms are generic over [`Field`] and monomorphised per field.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`PrimeField`]; products of residues then fit in a `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// Default large prime (2^31 − 1) for prime-field runs.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Echelon form produced by [`Field::echelon`].
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    /// Nonzero rows; reduced (pivot 1, zeros above and below) when requested.
    pub rows: Vec<Vec<E>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

/// An exact field with runtime parameters.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    /// Field elements.
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of a rational; fails when the denominator vanishes in the field.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    /// Canonical rational lift (symmetric residue for prime fields).
    fn to_rational(&self, a: &Self::Elem) -> BigRational;
    /// 0 for the rationals, p for `F_p`.
    fn characteristic(&self) -> u64;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// `dst[c] -= f * src[c]` for every column `c` listed in `support`.
    fn sub_scaled(&self, dst: &mut [Self::Elem], f: &Self::Elem, src: &[Self::Elem], support: &[usize]) {
        for &c in support {
            let t = self.mul(f, &src[c]);
            dst[c] = self.sub(&dst[c], &t);
        }
    }

    /// Row echelon form of `rows` (each of length `ncols`), dropping zero rows.
    fn echelon(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize, reduced: bool) -> Echelon<Self::Elem> {
        gauss_jordan(self, rows, ncols, reduced)
    }

    fn display(&self, a: &Self::Elem) -> String {
        self.to_rational(a).to_string()
    }
}

/// Plain Gauss–Jordan elimination; the default for every field.
pub fn gauss_jordan<F: Field>(
    field: &F,
    mut rows: Vec<Vec<F::Elem>>,
    ncols: usize,
    reduced: bool,
) -> Echelon<F::Elem> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]);
        for x in rows[r][c..].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let support: Vec<usize> = (c..ncols).filter(|&k| !field.is_zero(&rows[r][k])).collect();
        let pivot_row = std::mem::take(&mut rows[r]);
        let start = if reduced { 0 } else { r + 1 };
        for (i, row) in rows.iter_mut().enumerate().skip(start) {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            field.sub_scaled(row, &f, &pivot_row, &support);
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

/// The field of rational numbers, with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn to_rational(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn characteristic(&self) -> u64 {
        0
    }

    /// Fraction-free elimination on primitive integer rows; rationals only appear
    /// when the reduced form is normalised at the end.
    fn echelon(&self, rows: Vec<Vec<BigRational>>, ncols: usize, reduced: bool) -> Echelon<BigRational> {
        let mut rows: Vec<Vec<BigInt>> = rows.into_iter().filter_map(|r| primitive_integer_row(&r)).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == rows.len() {
                break;
            }
            // Prefer the pivot with the smallest absolute value to limit growth.
            let Some(p) = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].abs())
            else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = std::mem::take(&mut rows[r]);
            let support: Vec<usize> = (c..ncols).filter(|&k| !pivot_row[k].is_zero()).collect();
            let pv = pivot_row[c].clone();
            let start = if reduced { 0 } else { r + 1 };
            for (i, row) in rows.iter_mut().enumerate().skip(start) {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let g = row[c].gcd(&pv);
                let a = &row[c] / &g;
                let b = &pv / &g;
                if !b.is_one() {
                    for x in row.iter_mut() {
                        if !x.is_zero() {
                            *x *= &b;
                        }
                    }
                }
                for &k in &support {
                    row[k] -= &a * &pivot_row[k];
                }
                make_primitive(row);
            }
            rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        let rows = rows
            .into_iter()
            .zip(&pivots)
            .map(|(row, &c)| {
                if reduced {
                    let pv = row[c].clone();
                    row.into_iter().map(|x| BigRational::new(x, pv.clone())).collect()
                } else {
                    row.into_iter().map(BigRational::from_integer).collect()
                }
            })
            .collect();
        Echelon { rows, pivots }
    }
}

/// Scales a rational row to a primitive integer row; `None` for the zero row.
fn primitive_integer_row(row: &[BigRational]) -> Option<Vec<BigInt>> {
    let mut lcm = BigInt::one();
    let mut any = false;
    for x in row {
        if !x.is_zero() {
            any = true;
            lcm = lcm.lcm(x.denom());
        }
    }
    if !any {
        return None;
    }
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(&mut out);
    Some(out)
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

/// The prime field `F_p` with `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Builds `F_p`, checking that `p` is a prime below [`MAX_PRIME`].
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::Argument(format!("modulus {p} exceeds {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(Error::Argument(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().expect("residue fits");
        let den = q.denom().mod_floor(&p).to_u64().expect("residue fits");
        if den == 0 {
            return Err(Error::Config(format!("denominator of {q} vanishes mod {}", self.p)));
        }
        Ok(self.div(&num, &den))
    }
    fn to_rational(&self, a: &u64) -> BigRational {
        let v = if *a > self.p / 2 { *a as i64 - self.p as i64 } else { *a as i64 };
        BigRational::from_integer(BigInt::from(v))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }

    fn sub_scaled(&self, dst: &mut [u64], f: &u64, src: &[u64], support: &[usize]) {
        let p = self.p;
        let nf = p - f;
        for &c in support {
            dst[c] = (dst[c] + nf * src[c]) % p;
        }
    }
}

/// Deterministic primality test for `u64` values below 2^32 (trial division).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut k = 3;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

/// Runtime field selection: `q` for the rationals, `fp:<p>` for a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FieldChoice {
    /// Validates the prime-field hypothesis `p > n·d` (and `p` prime).
    pub fn validate(&self, n: usize, d: usize) -> Result<()> {
        if let FieldChoice::Prime(p) = *self {
            PrimeField::new(p)?;
            if p <= (n * d) as u64 {
                return Err(Error::Config(format!("prime {p} must exceed n*d = {}", n * d)));
            }
        }
        Ok(())
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "q"),
            FieldChoice::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(FieldChoice::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
            PrimeField::new(p)?;
            return Ok(FieldChoice::Prime(p));
        }
        Err(Error::Parse(format!("field must be `q` or `fp:<p>`, got {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), 5);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.from_rational(&q(1, 2)).unwrap(), 4);
        assert!(f.from_rational(&q(1, 7)).is_err());
        assert_eq!(f.to_rational(&6), q(-1, 1));
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(DEFAULT_PRIME).is_ok());
        assert!(FieldChoice::Prime(97).validate(10, 10).is_err());
        assert!(FieldChoice::Prime(103).validate(10, 10).is_ok());
    }

    #[test]
    fn parses_field_choice() {
        assert_eq!("q".parse::<FieldChoice>().unwrap(), FieldChoice::Rational);
        assert_eq!("fp:1009".parse::<FieldChoice>().unwrap(), FieldChoice::Prime(1009));
        assert!("fp:1000".parse::<FieldChoice>().is_err());
    }

    #[test]
    fn fraction_free_matches_plain_elimination() {
        let rows = vec![
            vec![q(2, 3), q(1, 1), q(0, 1)],
            vec![q(4, 3), q(2, 1), q(1, 5)],
            vec![q(1, 1), q(-1, 2), q(3, 1)],
        ];
        let a = Rationals.echelon(rows.clone(), 3, true);
        let b = gauss_jordan(&Rationals, rows, 3, true);
        assert_eq!(a.pivots, b.pivots);
        assert_eq!(a.rows, b.rows);
    }
}
