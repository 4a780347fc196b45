//! Principal symmetric ideals: orbit spans, the random sampler, the explicit
//! construction with variable-disjoint admissible binomials, and the
//! type-sum parameters `t_λ`.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::RowSpace;
use crate::monomial::{Monomial, MonomialBasis};
use crate::partitions::{enumerate_partitions, index_set, type_of, Partition};
use crate::perm::Permutation;
use crate::poly::Polynomial;

/// The degree-`d` component `I_d` of a principal symmetric ideal `(f)_{S_n}`.
#[derive(Clone, Debug)]
pub struct PsiIdeal<F: Field> {
    pub f: Polynomial<F>,
    pub n: usize,
    pub d: usize,
    /// Ordered monomial basis of `R_d`.
    pub basis: Arc<MonomialBasis>,
    /// Reduced row-echelon basis of `I_d` in the coordinates of `basis`.
    pub span: RowSpace<F>,
}

impl<F: Field> PsiIdeal<F> {
    pub fn field(&self) -> &F {
        self.f.field()
    }

    /// `μ(I) = dim I_d`.
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Membership of a degree-`d` polynomial in `I_d`.
    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        Ok(self.span.contains(&p.coords(&self.basis)?))
    }

    /// Checks that every basis vector is mapped into the span by every
    /// adjacent transposition (hence by all of `S_n`).
    pub fn is_stable(&self) -> bool {
        let f = self.field();
        for row in self.span.rows() {
            let p = Polynomial::from_coords(f.clone(), &self.basis, row);
            for k in 0..self.n.saturating_sub(1) {
                let q = p.permute(&Permutation::adjacent(self.n, k)).expect("length matches");
                if !self.span.contains(&q.coords(&self.basis).expect("same degree")) {
                    return false;
                }
            }
        }
        true
    }
}

type OrbitKey<E> = Vec<(Monomial, E)>;

fn key<F: Field>(p: &Polynomial<F>) -> OrbitKey<F::Elem> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// The span of the `S_n`-orbit of `f` inside `R_d`.
///
/// Breadth-first closure under the adjacent transpositions: each accepted
/// translate `σf` contributes its images `s_k σf`, which are inserted into an
/// incremental echelon basis; only independent images are expanded further.
/// Since the `s_k` are linear and generate `S_n`, the final span is stable.
pub fn orbit_span<F: Field>(f: &Polynomial<F>) -> Result<PsiIdeal<F>> {
    if f.is_zero() {
        return Err(Error::Argument("the zero polynomial generates the zero ideal".into()));
    }
    let d = f.homogeneous_degree().ok_or_else(|| Error::Argument("generator must be homogeneous".into()))?;
    if d == 0 {
        return Err(Error::Argument("generator must have positive degree".into()));
    }
    let n = f.nvars();
    let field = f.field().clone();
    let basis = Arc::new(MonomialBasis::new(n, d));
    let mut span = RowSpace::new(&field, basis.len());
    let mut seen: HashSet<OrbitKey<F::Elem>> = HashSet::new();
    let mut queue = VecDeque::new();

    seen.insert(key(f));
    span.insert(f.coords(&basis)?);
    queue.push_back(f.clone());
    let transpositions: Vec<Permutation> = (0..n.saturating_sub(1)).map(|k| Permutation::adjacent(n, k)).collect();
    while let Some(g) = queue.pop_front() {
        if span.dim() == basis.len() {
            break;
        }
        for s in &transpositions {
            let h = g.permute(s)?;
            if !seen.insert(key(&h)) {
                continue;
            }
            if span.insert(h.coords(&basis)?) {
                queue.push_back(h);
            }
        }
    }
    Ok(PsiIdeal { f: f.clone(), n, d, basis, span })
}

/// A seeded "general" polynomial: every one of the `C(n+d−1, d)` coefficients is a
/// uniformly random nonzero integer in `[−bound, bound]`, resampled until the
/// pure-power coefficient sum `α_(d)` is nonzero in the field.
pub fn sample_general_f<F: Field>(field: &F, n: usize, d: usize, seed: u64, bound: u64) -> Result<Polynomial<F>> {
    if n == 0 || d == 0 {
        return Err(Error::Argument("sampling needs n ≥ 1 and d ≥ 1".into()));
    }
    if bound == 0 || bound > i64::MAX as u64 {
        return Err(Error::Argument(format!("coefficient bound {bound} must lie in 1..=2^63−1")));
    }
    let basis = MonomialBasis::new(n, d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let terms: Vec<(Monomial, F::Elem)> = basis
            .monomials()
            .iter()
            .map(|m| {
                let mag = rng.gen_range(1..=bound) as i64;
                let c = if rng.gen::<bool>() { mag } else { -mag };
                (m.clone(), field.from_i64(c))
            })
            .collect();
        let f = Polynomial::from_terms(field.clone(), n, terms);
        if extract_params(&f).is_ok() {
            return Ok(f);
        }
    }
}

/// One summand `b(λ, γ)` of the construction.
#[derive(Clone, Debug)]
pub struct ConstructionSummand<F: Field> {
    pub lambda: Partition,
    pub gamma: Partition,
    pub binomial: Polynomial<F>,
}

/// The explicit polynomial `f = x_1^d + Σ b(λ, γ)` together with its pieces.
#[derive(Clone, Debug)]
pub struct Construction<F: Field> {
    pub d: usize,
    pub n: usize,
    /// Smallest variable count for which the summands can be made disjoint.
    pub min_n: usize,
    pub f: Polynomial<F>,
    pub summands: Vec<ConstructionSummand<F>>,
}

/// The `(λ, γ)` pairs of the construction: `λ ⊢ d` with `λ ≠ (d)` in decreasing
/// lex order, and for each the proper subpartitions `γ ⊊ λ` by size, larger
/// parts first.
pub fn construction_pairs(d: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(d).into_iter().rev() {
        if lambda == Partition::row(d) {
            continue;
        }
        let mut gammas: Vec<Partition> = crate::partitions::subpartitions_with_t(&lambda)
            .into_iter()
            .filter(|s| s.proper)
            .map(|s| s.gamma)
            .collect();
        gammas.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
        gammas.dedup();
        for g in gammas {
            out.push((lambda.clone(), g));
        }
    }
    out
}

/// `1 + Σ (2·#λ − #γ)`: one variable for `x_1^d`, and for each binomial the
/// shared indices in `T(λ, γ)` plus two disjoint sets for the remaining parts.
pub fn construction_min_n(d: usize) -> usize {
    1 + construction_pairs(d).iter().map(|(l, g)| 2 * l.len() - g.len()).sum::<usize>()
}

/// Builds the explicit polynomial with variable-disjoint admissible binomials.
/// `n = None` uses the minimal variable count.
pub fn build_construction_f<F: Field>(field: &F, d: usize, n: Option<usize>) -> Result<Construction<F>> {
    if d < 2 {
        return Err(Error::Argument("the construction needs d ≥ 2".into()));
    }
    let min_n = construction_min_n(d);
    let n = n.unwrap_or(min_n);
    if n < min_n {
        return Err(Error::Argument(format!("degree {d} needs at least {min_n} variables, got {n}")));
    }
    let one = field.one();
    let minus_one = field.from_i64(-1);
    let mut lead = vec![0u32; n];
    lead[0] = d as u32;
    let mut terms = vec![(Monomial::new(lead), one.clone())];
    let mut summands = Vec::new();
    let mut next = 1usize;
    for (lambda, gamma) in construction_pairs(d) {
        let t = index_set(&lambda, &gamma);
        let s = lambda.len();
        let i_idx: Vec<usize> = (0..s).map(|k| next + k).collect();
        next += s;
        let mut j_idx = Vec::with_capacity(s);
        for l in 1..=s {
            if t.contains(&l) {
                j_idx.push(i_idx[l - 1]);
            } else {
                j_idx.push(next);
                next += 1;
            }
        }
        let mut m = vec![0u32; n];
        let mut m2 = vec![0u32; n];
        for (l, &part) in lambda.parts().iter().enumerate() {
            m[i_idx[l]] += part as u32;
            m2[j_idx[l]] += part as u32;
        }
        let b = Polynomial::from_terms(
            field.clone(),
            n,
            [(Monomial::new(m.clone()), one.clone()), (Monomial::new(m2.clone()), minus_one.clone())],
        );
        terms.push((Monomial::new(m), one.clone()));
        terms.push((Monomial::new(m2), minus_one.clone()));
        summands.push(ConstructionSummand { lambda, gamma, binomial: b });
    }
    debug_assert_eq!(next, min_n);
    let f = Polynomial::from_terms(field.clone(), n, terms);
    Ok(Construction { d, n, min_n, f, summands })
}

/// Structure of a binomial `m − m'` with monomials of one type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialInfo {
    pub lambda: Partition,
    /// Type of `gcd(m, m')`.
    pub gcd_type: Partition,
    pub admissible: bool,
}

/// Recognizes a `λ`-binomial (`m − m'`, distinct monomials of one type) and decides
/// admissibility: `g = gcd(m, m')` is coprime to both `m/g` and `m'/g`.
pub fn binomial_info<F: Field>(b: &Polynomial<F>) -> Option<BinomialInfo> {
    let field = b.field();
    let terms: Vec<(&Monomial, &F::Elem)> = b.terms().collect();
    if terms.len() != 2 {
        return None;
    }
    let (m, c) = terms[0];
    let (m2, c2) = terms[1];
    let unit_pair = field.is_zero(&field.add(c, c2)) && (field.is_one(c) || field.is_one(c2));
    let lambda = type_of(m);
    if !unit_pair || lambda != type_of(m2) {
        return None;
    }
    let g: Vec<u32> = m.exps().iter().zip(m2.exps()).map(|(a, b)| *a.min(b)).collect();
    let coprime = |x: &Monomial| x.exps().iter().zip(&g).all(|(&e, &ge)| ge == 0 || e == ge);
    let admissible = coprime(m) && coprime(m2);
    Some(BinomialInfo { lambda, gcd_type: type_of(&Monomial::new(g)), admissible })
}

/// Type-sums `α_λ` and ratios `t_λ = α_λ / α_(d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TParams<F: Field> {
    pub field: F,
    pub d: usize,
    /// `α_λ` for every `λ ⊢ d` (including `(d)`).
    pub alpha: BTreeMap<Partition, F::Elem>,
    /// `t_λ` for every `λ ⊢ d`, `λ ≠ (d)`.
    pub t: BTreeMap<Partition, F::Elem>,
}

impl<F: Field> TParams<F> {
    /// `t_λ`, with `t_(d) = 1`.
    pub fn get(&self, lambda: &Partition) -> F::Elem {
        if *lambda == Partition::row(self.d) {
            return self.field.one();
        }
        self.t.get(lambda).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The all-zero parameter point (`t_λ = 0` for `λ ≠ (d)`).
    pub fn zero(field: &F, d: usize) -> Self {
        let mut alpha = BTreeMap::new();
        let mut t = BTreeMap::new();
        for l in enumerate_partitions(d) {
            if l == Partition::row(d) {
                alpha.insert(l, field.one());
            } else {
                alpha.insert(l.clone(), field.zero());
                t.insert(l, field.zero());
            }
        }
        TParams { field: field.clone(), d, alpha, t }
    }

    pub fn is_zero(&self) -> bool {
        self.t.values().all(|v| self.field.is_zero(v))
    }

    /// Parameters given directly; unlisted `t_λ` are zero and `α_(d) = 1`.
    pub fn from_t(field: &F, d: usize, values: BTreeMap<Partition, F::Elem>) -> Result<Self> {
        let mut params = Self::zero(field, d);
        for (l, v) in values {
            if l.size() != d || l == Partition::row(d) {
                return Err(Error::Argument(format!("t_λ needs λ ⊢ {d}, λ ≠ ({d}); got {l}")));
            }
            params.alpha.insert(l.clone(), v.clone());
            params.t.insert(l, v);
        }
        Ok(params)
    }

    /// Seeded integer parameters, each `t_λ` uniform in `[lo, hi]`.
    pub fn random(field: &F, d: usize, seed: u64, lo: i64, hi: i64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = enumerate_partitions(d)
            .into_iter()
            .filter(|l| *l != Partition::row(d))
            .map(|l| (l, field.from_i64(rng.gen_range(lo..=hi))))
            .collect();
        Self::from_t(field, d, values).expect("partitions of d")
    }
}

/// Computes `α_λ` (sum of coefficients of monomials of type `λ`) and `t_λ`.
pub fn extract_params<F: Field>(f: &Polynomial<F>) -> Result<TParams<F>> {
    let d = f.homogeneous_degree().ok_or_else(|| Error::Argument("polynomial must be nonzero and homogeneous".into()))?;
    let field = f.field().clone();
    let mut alpha: BTreeMap<Partition, F::Elem> = enumerate_partitions(d).into_iter().map(|l| (l, field.zero())).collect();
    for (m, c) in f.terms() {
        let a = alpha.get_mut(&type_of(m)).expect("type is a partition of d");
        *a = field.add(a, c);
    }
    let top = alpha[&Partition::row(d)].clone();
    if field.is_zero(&top) {
        return Err(Error::TUndefined { d });
    }
    let inv = field.inv(&top);
    let t = alpha
        .iter()
        .filter(|(l, _)| **l != Partition::row(d))
        .map(|(l, a)| (l.clone(), field.mul(a, &inv)))
        .collect();
    Ok(TParams { field, d, alpha, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monomial::binomial;

    fn poly(s: &str, n: usize) -> Polynomial<Rationals> {
        Polynomial::parse(Rationals, s, Some(n)).unwrap()
    }

    #[test]
    fn orbit_of_a_power() {
        for n in 1..6 {
            let mut e = vec![0; n];
            e[0] = 3;
            let f = Polynomial::term(Rationals, Monomial::new(e), Rationals.one());
            let i = orbit_span(&f).unwrap();
            assert_eq!(i.dim(), n);
            assert!(i.is_stable());
        }
    }

    #[test]
    fn orbit_of_example_quadric() {
        for n in 2..7 {
            let i = orbit_span(&poly("x1^2 - x2^2 + x1*x2", n)).unwrap();
            assert_eq!(i.dim() as u128, binomial(n + 1, 2) - 1);
        }
    }

    #[test]
    fn zero_generator_is_rejected() {
        assert!(orbit_span(&Polynomial::zero(Rationals, 3)).is_err());
    }

    #[test]
    fn sampler_is_deterministic_and_full_support() {
        let a = sample_general_f(&Rationals, 4, 3, 7, 1000).unwrap();
        let b = sample_general_f(&Rationals, 4, 3, 7, 1000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        assert!(extract_params(&a).is_ok());
        let p = PrimeField::new(1_000_003).unwrap();
        assert_eq!(sample_general_f(&p, 4, 3, 7, 1000).unwrap().len(), 20);
    }

    #[test]
    fn construction_d3_matches_displayed_polynomial() {
        let c = build_construction_f(&Rationals, 3, None).unwrap();
        assert_eq!(c.min_n, 26);
        assert_eq!(c.summands.len(), 6);
        let expected = poly(
            "x1^3 + x2^2*x3 - x4^2*x5 + x6^2*x7 - x6^2*x8 + x9^2*x10 - x11^2*x10 \
             + x12*x13*x14 - x15*x16*x17 + x18*x19*x20 - x18*x21*x22 + x23*x24*x25 - x23*x24*x26",
            26,
        );
        assert_eq!(c.f, expected);
        for s in &c.summands {
            let info = binomial_info(&s.binomial).unwrap();
            assert!(info.admissible);
            assert_eq!(info.lambda, s.lambda);
            assert_eq!(info.gcd_type, s.gamma);
        }
        assert!(build_construction_f(&Rationals, 3, Some(25)).is_err());
    }

    #[test]
    fn construction_d2() {
        let c = build_construction_f(&Rationals, 2, None).unwrap();
        assert_eq!(c.min_n, 8);
        assert_eq!(c.f, poly("x1^2 + x2*x3 - x4*x5 + x6*x7 - x6*x8", 8));
    }

    #[test]
    fn admissibility_examples() {
        let b = poly("x1^5*x2^5*x3^5*x4^2*x5 - x1^5*x2^5*x6^5*x4^2*x7", 7);
        let info = binomial_info(&b).unwrap();
        assert!(info.admissible);
        assert_eq!(info.gcd_type, Partition::new(vec![5, 5, 2]).unwrap());
        let good = poly("x4^3*x1^2*x2^2*x3 - x5^3*x1^2*x2^2*x6", 6);
        let bad = poly("x1^3*x2^2*x3^2*x4 - x2^3*x1^2*x5^2*x6", 6);
        assert!(binomial_info(&good).unwrap().admissible);
        assert!(!binomial_info(&bad).unwrap().admissible);
    }

    #[test]
    fn parameters() {
        let f = poly("x1^3 + x1^2*x3", 3);
        let t = extract_params(&f).unwrap();
        assert_eq!(t.get(&Partition::new(vec![2, 1]).unwrap()), Rationals.one());
        assert_eq!(t.get(&Partition::new(vec![1, 1, 1]).unwrap()), Rationals.zero());
        let cubic = poly("x1^3 - x2^3 + x1^2*x3 + x2*x3*x4 - x2*x3*x5", 5);
        assert!(matches!(extract_params(&cubic), Err(Error::TUndefined { d: 3 })));
        for d in 2..5 {
            let c = build_construction_f(&Rationals, d, None).unwrap();
            assert!(extract_params(&c.f).unwrap().is_zero());
        }
    }
}
