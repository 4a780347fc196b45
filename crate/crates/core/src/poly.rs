//! Sparse polynomials, sparse dual elements in the divided-power basis, the
//! contraction action, and the relabelling action of the symmetric group.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialBasis};
use crate::perm::Permutation;

/// Shared sparse storage: a map from exponent vectors to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Terms<F: Field> {
    field: F,
    n: usize,
    map: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Terms<F> {
    fn new(field: F, n: usize) -> Self {
        Terms { field, n, map: BTreeMap::new() }
    }

    fn add_term(&mut self, m: Monomial, c: F::Elem) {
        assert_eq!(m.nvars(), self.n, "monomial has the wrong number of variables");
        if self.field.is_zero(&c) {
            return;
        }
        match self.map.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.field.add(o.get(), &c);
                if self.field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Terms<F>) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Config(format!("variable counts differ: {} vs {}", self.n, other.n)));
        }
        if self.field != other.field {
            return Err(Error::Config("coefficient fields differ".into()));
        }
        Ok(())
    }

    fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.map.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn permuted(&self, sigma: &Permutation) -> Result<Terms<F>> {
        if sigma.len() != self.n {
            return Err(Error::Argument(format!("permutation of length {} acting on n = {}", sigma.len(), self.n)));
        }
        let map = self.map.iter().map(|(m, c)| (m.permuted(sigma.images()), c.clone())).collect();
        Ok(Terms { field: self.field.clone(), n: self.n, map })
    }

    fn coords(&self, basis: &MonomialBasis) -> Result<Vec<F::Elem>> {
        let mut v = vec![self.field.zero(); basis.len()];
        for (m, c) in &self.map {
            let i = basis.index_of(m).ok_or_else(|| Error::MixedDegrees {
                expected: basis.degree() as i64,
                found: m.degree() as i64,
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    fn from_coords(field: F, basis: &MonomialBasis, v: &[F::Elem]) -> Terms<F> {
        let mut t = Terms::new(field, basis.nvars());
        for (i, c) in v.iter().enumerate() {
            if !t.field.is_zero(c) {
                t.map.insert(basis.get(i).clone(), c.clone());
            }
        }
        t
    }

    fn format(&self, dual: bool) -> String {
        if self.map.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.map.iter().rev().enumerate() {
            let q = self.field.to_rational(c);
            let neg = q.is_negative();
            let a = q.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.format(dual);
            if mono == "1" {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

macro_rules! sparse_common {
    ($ty:ident, $dual:expr) => {
        impl<F: Field> $ty<F> {
            /// The zero element.
            pub fn zero(field: F, n: usize) -> Self {
                $ty(Terms::new(field, n))
            }

            /// Sums the given terms (repeated monomials accumulate, zeros vanish).
            pub fn from_terms(field: F, n: usize, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
                let mut t = Terms::new(field, n);
                for (m, c) in terms {
                    t.add_term(m, c);
                }
                $ty(t)
            }

            /// A single term `c·m`.
            pub fn term(field: F, m: Monomial, c: F::Elem) -> Self {
                let n = m.nvars();
                $ty::from_terms(field, n, [(m, c)])
            }

            pub fn field(&self) -> &F {
                &self.0.field
            }

            pub fn nvars(&self) -> usize {
                self.0.n
            }

            pub fn is_zero(&self) -> bool {
                self.0.map.is_empty()
            }

            /// Number of stored (nonzero) terms.
            pub fn len(&self) -> usize {
                self.0.map.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.map.is_empty()
            }

            /// Terms in increasing lex order of exponent vectors.
            pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
                self.0.map.iter()
            }

            pub fn coeff(&self, m: &Monomial) -> F::Elem {
                self.0.map.get(m).cloned().unwrap_or_else(|| self.0.field.zero())
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                self.0.check_compatible(&other.0)?;
                let mut t = self.0.clone();
                for (m, c) in &other.0.map {
                    t.add_term(m.clone(), c.clone());
                }
                Ok($ty(t))
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                self.add(&other.scale(&self.0.field.from_i64(-1)))
            }

            pub fn scale(&self, c: &F::Elem) -> Self {
                let f = &self.0.field;
                $ty::from_terms(f.clone(), self.0.n, self.0.map.iter().map(|(m, x)| (m.clone(), f.mul(x, c))))
            }

            /// Applies `σ`, relabelling variable `i` as `σ(i)`.
            pub fn permute(&self, sigma: &Permutation) -> Result<Self> {
                Ok($ty(self.0.permuted(sigma)?))
            }

            /// Coordinates in the ordered basis of one graded piece.
            pub fn coords(&self, basis: &MonomialBasis) -> Result<Vec<F::Elem>> {
                if basis.nvars() != self.0.n {
                    return Err(Error::Config("basis has a different number of variables".into()));
                }
                self.0.coords(basis)
            }

            /// Rebuilds an element from coordinates in `basis`.
            pub fn from_coords(field: F, basis: &MonomialBasis, v: &[F::Elem]) -> Self {
                $ty(Terms::from_coords(field, basis, v))
            }

            /// Maps the coefficients into another field.
            pub fn change_field<G: Field>(&self, target: &G) -> Result<$ty<G>> {
                let mut t = Terms::new(target.clone(), self.0.n);
                for (m, c) in &self.0.map {
                    t.add_term(m.clone(), target.from_rational(&self.0.field.to_rational(c))?);
                }
                Ok($ty(t))
            }

            /// JSON-friendly term list `[{"coeff":"3","exps":[2,0,1,0]}, …]`.
            pub fn to_json_terms(&self) -> Vec<JsonTerm> {
                self.0
                    .map
                    .iter()
                    .rev()
                    .map(|(m, c)| JsonTerm { coeff: self.0.field.display(c), exps: m.exps().to_vec() })
                    .collect()
            }

            /// Inverse of [`Self::to_json_terms`]; `n` is taken from the exponent vectors.
            pub fn from_json_terms(field: F, n: usize, terms: &[JsonTerm]) -> Result<Self> {
                let mut t = Terms::new(field.clone(), n);
                for term in terms {
                    if term.exps.len() != n {
                        return Err(Error::Parse(format!("exponent vector {:?} has length ≠ {n}", term.exps)));
                    }
                    let q = parse_rational(&term.coeff)?;
                    t.add_term(Monomial::new(term.exps.clone()), field.from_rational(&q)?);
                }
                Ok($ty(t))
            }

            /// Parses the text syntax (`3*x1^2*x3 - 1/2*x2*x4` or `y1^(2)*y3`).
            /// `n = None` infers the variable count from the largest index.
            pub fn parse(field: F, text: &str, n: Option<usize>) -> Result<Self> {
                let raw = parse_terms(text, $dual)?;
                let max_index = raw.iter().flat_map(|(_, v)| v.iter().map(|(i, _)| *i)).max().unwrap_or(0);
                let n = n.unwrap_or(max_index.max(1));
                if max_index > n {
                    return Err(Error::Parse(format!("variable index {max_index} exceeds n = {n}")));
                }
                let mut t = Terms::new(field.clone(), n);
                for (c, vars) in raw {
                    let mut e = vec![0u32; n];
                    for (i, k) in vars {
                        e[i - 1] += k;
                    }
                    t.add_term(Monomial::new(e), field.from_rational(&c)?);
                }
                Ok($ty(t))
            }
        }

        impl<F: Field> fmt::Display for $ty<F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format($dual))
            }
        }
    };
}

/// A polynomial in `k[x_1, …, x_n]` with nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F: Field>(Terms<F>);

/// An element of the graded dual `S`, written in the divided-power basis `y^(e)`;
/// a dual monomial with exponent sum `k` has degree `−k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualElement<F: Field>(Terms<F>);

sparse_common!(Polynomial, false);
sparse_common!(DualElement, true);

impl<F: Field> Polynomial<F> {
    /// The homogeneous degree, or `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        self.0.homogeneous_degree()
    }

    pub fn mul(&self, other: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.0.check_compatible(&other.0)?;
        let f = &self.0.field;
        let mut t = Terms::new(f.clone(), self.0.n);
        for (a, x) in &self.0.map {
            for (b, y) in &other.0.map {
                t.add_term(a.mul(b), f.mul(x, y));
            }
        }
        Ok(Polynomial(t))
    }

    /// `x_i · self` (0-based variable index).
    pub fn times_var(&self, i: usize) -> Polynomial<F> {
        let map = self.0.map.iter().map(|(m, c)| (m.times_var(i), c.clone())).collect();
        Polynomial(Terms { field: self.0.field.clone(), n: self.0.n, map })
    }

    /// The contraction `self ∘ g`: bilinear extension of
    /// `x^a ∘ y^(e) = y^(e−a)` when `e ≥ a` componentwise, and 0 otherwise.
    pub fn contract(&self, g: &DualElement<F>) -> Result<DualElement<F>> {
        self.0.check_compatible(&g.0)?;
        let f = &self.0.field;
        let mut t = Terms::new(f.clone(), self.0.n);
        for (a, x) in &self.0.map {
            for (e, y) in &g.0.map {
                if let Some(q) = e.checked_div(a) {
                    t.add_term(q, f.mul(x, y));
                }
            }
        }
        Ok(DualElement(t))
    }
}

impl<F: Field> DualElement<F> {
    /// The (negative) graded degree `−|e|`, or `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<i64> {
        self.0.homogeneous_degree().map(|d| -(d as i64))
    }
}

/// Free-function form of [`Polynomial::contract`].
pub fn contract<F: Field>(f: &Polynomial<F>, g: &DualElement<F>) -> Result<DualElement<F>> {
    f.contract(g)
}

/// One term of the exponent-vector JSON encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(a, b))
    } else {
        let a: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(a))
    }
}

/// Splits text into signed terms, each a coefficient and `(variable, exponent)` factors.
fn parse_terms(text: &str, dual: bool) -> Result<Vec<(BigRational, Vec<(usize, u32)>)>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    if s == "0" {
        return Ok(Vec::new());
    }
    let var = if dual { 'y' } else { 'x' };
    let bytes: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = BigRational::one();
        while pos < bytes.len() && (bytes[pos] == '+' || bytes[pos] == '-') {
            if bytes[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        }
        let start = pos;
        // A term ends at the next top-level sign, ignoring signs inside `^(...)`.
        let mut depth = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 => break,
                _ => {}
            }
            pos += 1;
        }
        let body: String = bytes[start..pos].iter().collect();
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {text:?}")));
        }
        let mut coeff = sign;
        let mut vars = Vec::new();
        for factor in body.split('*') {
            if let Some(rest) = factor.strip_prefix(var) {
                let (idx, exp) = match rest.split_once('^') {
                    None => (rest, 1u32),
                    Some((i, e)) => {
                        let e = if dual {
                            e.strip_prefix('(').and_then(|e| e.strip_suffix(')')).unwrap_or(e)
                        } else {
                            e
                        };
                        (i, e.parse().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?)
                    }
                };
                let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                if idx == 0 {
                    return Err(Error::Parse("variables are numbered from 1".into()));
                }
                vars.push((idx, exp));
            } else {
                coeff *= parse_rational(factor)?;
            }
        }
        out.push((coeff, vars));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn poly(s: &str, n: usize) -> Polynomial<Rationals> {
        Polynomial::parse(Rationals, s, Some(n)).unwrap()
    }

    fn dual(s: &str, n: usize) -> DualElement<Rationals> {
        DualElement::parse(Rationals, s, Some(n)).unwrap()
    }

    #[test]
    fn contraction_rule() {
        assert_eq!(poly("x1^2", 2).contract(&dual("y1^(3)", 2)).unwrap(), dual("y1", 2));
        assert!(poly("x1*x2", 2).contract(&dual("y1^(2)", 2)).unwrap().is_zero());
        let liana = poly("x1^2 - x2^2 + x1*x2", 4);
        let sum = dual("y1^(2) + y2^(2) + y3^(2) + y4^(2)", 4);
        assert!(liana.contract(&sum).unwrap().is_zero());
        assert_eq!(dual("y1^(2)*y3", 3).degree(), Some(-3));
    }

    #[test]
    fn permutation_relabels() {
        let s = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert_eq!(poly("x1^2*x3", 3).permute(&s).unwrap(), poly("x2^2*x3", 3));
        let c = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(dual("y1^(2)*y2", 3).permute(&c).unwrap(), dual("y2^(2)*y3", 3));
    }

    #[test]
    fn text_round_trip() {
        let f = poly("3*x1^2*x3 - 1/2*x2*x4", 4);
        assert_eq!(f.to_string(), "3*x1^2*x3 - 1/2*x2*x4");
        assert_eq!(poly(&f.to_string(), 4), f);
        let g = dual("-y1^(2)*y3 + 2", 3);
        assert_eq!(g.to_string(), "-y1^(2)*y3 + 2");
        assert_eq!(poly("x1 + x1 - 2*x1", 1).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let f = poly("3*x1^2*x3 - 1/2*x2*x4", 4);
        let j = f.to_json_terms();
        assert_eq!(j[0], JsonTerm { coeff: "3".into(), exps: vec![2, 0, 1, 0] });
        assert_eq!(Polynomial::from_json_terms(Rationals, 4, &j).unwrap(), f);
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let f = poly("x1", 2);
        let g = DualElement::parse(PrimeField::new(7).unwrap(), "y1", Some(2)).unwrap();
        let g = g.change_field(&Rationals).unwrap();
        assert!(f.contract(&g).is_ok());
        assert!(poly("x1", 2).contract(&dual("y1", 3)).is_err());
    }
}
