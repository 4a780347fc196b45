//! Symmetric-group characters: Murnaghan–Nakayama irreducible characters,
//! class functions and Specht decompositions, characters of Koszul homology,
//! restriction multiplicities of Schur modules, and the predicted equivariant
//! structure of Tor for general principal symmetric ideals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::KoszulComplex;
use crate::linalg::Matrix;
use crate::module::GradedModule;
use crate::monomial::MonomialBasis;
use crate::partitions::{enumerate_partitions, partition_count, Partition};
use crate::perm::Permutation;

/// `z_μ = Π_k k^{m_k} m_k!`, the order of the centralizer of a permutation of type `μ`.
pub fn centralizer_order(mu: &Partition) -> BigInt {
    mu.multiplicities().iter().fold(BigInt::one(), |acc, (&k, &m)| {
        let fact: BigInt = (1..=m).map(BigInt::from).product();
        acc * BigInt::from(k).pow(m as u32) * fact
    })
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::Argument(format!("character χ^{lambda} evaluated at cycle type {mu} of a different size")));
    }
    let mut memo = HashMap::new();
    Ok(mn(&beta_set(lambda), mu.parts(), &mut memo))
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    (0..l).map(|k| lambda.part(k + 1) + (l - 1 - k)).collect()
}

fn mn(beta: &[usize], parts: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&r, rest)) = parts.split_first() else {
        return 1;
    };
    let key = (beta.to_vec(), parts.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = b - r;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The full character table of `S_n`, rows and columns in increasing lex order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `values[λ][μ] = χ^λ(μ)`.
    pub values: Vec<Vec<i64>>,
    pub centralizers: Vec<BigInt>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let mut memo = HashMap::new();
        let values = partitions.iter().map(|l| partitions.iter().map(|m| mn(&beta_set(l), m.parts(), &mut memo)).collect()).collect();
        let centralizers = partitions.iter().map(centralizer_order).collect();
        CharacterTable { n, partitions, values, centralizers }
    }

    pub fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.binary_search(p).ok()
    }

    /// The irreducible character `χ^λ` as a class function.
    pub fn character(&self, lambda: &Partition) -> Result<ClassFunction> {
        let i = self.index(lambda).ok_or_else(|| Error::Argument(format!("{lambda} is not a partition of {}", self.n)))?;
        let values = self.partitions.iter().zip(&self.values[i]).map(|(m, &v)| (m.clone(), BigRational::from_integer(v.into()))).collect();
        Ok(ClassFunction { n: self.n, values })
    }
}

/// A class function on `S_n`: one exact value per cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        let values = enumerate_partitions(n).into_iter().map(|m| (m, BigRational::zero())).collect();
        ClassFunction { n, values }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> BigRational) -> Self {
        let values = enumerate_partitions(n).into_iter().map(|m| {
            let v = f(&m);
            (m, v)
        });
        ClassFunction { n, values: values.collect() }
    }

    pub fn value(&self, mu: &Partition) -> BigRational {
        self.values.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Value at the identity, the dimension when this is a character.
    pub fn degree(&self) -> BigRational {
        self.value(&Partition::column(self.n))
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction::from_fn(self.n, |m| self.value(m) + other.value(m))
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        ClassFunction::from_fn(self.n, |m| self.value(m) * c)
    }

    pub fn mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction::from_fn(self.n, |m| self.value(m) * other.value(m))
    }

    /// `⟨χ, ψ⟩ = Σ_μ χ(μ) ψ(μ) / z_μ` (characters of `S_n` are real).
    pub fn inner(&self, other: &ClassFunction) -> BigRational {
        self.values.iter().fold(BigRational::zero(), |acc, (m, v)| acc + v * other.value(m) / BigRational::from_integer(centralizer_order(m)))
    }

    /// `χ(μ) ↦ sign(μ)·χ(μ)`.
    pub fn sign_twist(&self) -> ClassFunction {
        ClassFunction::from_fn(self.n, |m| {
            let v = self.value(m);
            if (self.n - m.len()) % 2 == 1 {
                -v
            } else {
                v
            }
        })
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (m, v) in &self.values {
            map.serialize_entry(&m.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

/// Multiplicities of Specht modules (zero multiplicities omitted).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpechtDecomposition {
    pub n: usize,
    pub multiplicities: BTreeMap<Partition, u64>,
}

impl SpechtDecomposition {
    pub fn new(n: usize) -> Self {
        SpechtDecomposition { n, multiplicities: BTreeMap::new() }
    }

    pub fn get(&self, lambda: &Partition) -> u64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    /// `Σ mult(λ) · dim Sp_λ`.
    pub fn dimension(&self) -> u128 {
        self.multiplicities.iter().map(|(l, &m)| l.specht_dimension() * m as u128).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// As signed multiplicities, for comparison with predictions.
    pub fn signed(&self) -> BTreeMap<Partition, i64> {
        self.multiplicities.iter().map(|(l, &m)| (l.clone(), m as i64)).collect()
    }
}

impl fmt::Display for SpechtDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_signed(&self.signed()))
    }
}

impl Serialize for SpechtDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.multiplicities.len()))?;
        for (l, m) in &self.multiplicities {
            seq.serialize_element(&(l.parts(), m))?;
        }
        seq.end()
    }
}

/// `Sp_λ^m ⊕ …` rendering of signed multiplicities (`0` when empty).
pub fn format_signed(m: &BTreeMap<Partition, i64>) -> String {
    let parts: Vec<String> = m
        .iter()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(l, &c)| if c == 1 { format!("Sp{l}") } else { format!("Sp{l}^{c}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Decomposes a class function into irreducibles; fails with `NotACharacter`
/// when a multiplicity is negative or not an integer.
pub fn specht_decompose(chi: &ClassFunction, table: &CharacterTable) -> Result<SpechtDecomposition> {
    if table.n != chi.n {
        return Err(Error::Argument("character table size differs from the class function".into()));
    }
    let mut out = SpechtDecomposition::new(chi.n);
    for (i, l) in table.partitions.iter().enumerate() {
        let mult = table.partitions.iter().enumerate().fold(BigRational::zero(), |acc, (j, m)| {
            acc + chi.value(m) * BigRational::from_integer(table.values[i][j].into()) / BigRational::from_integer(table.centralizers[j].clone())
        });
        if !mult.is_integer() || mult.is_negative() {
            return Err(Error::NotACharacter(format!("multiplicity of Sp{l} is {mult}")));
        }
        let m = mult.to_integer().to_u64().ok_or_else(|| Error::NotACharacter(format!("multiplicity of Sp{l} is too large")))?;
        if m > 0 {
            out.multiplicities.insert(l.clone(), m);
        }
    }
    Ok(out)
}

/// Character of `Tor_i(M, k)_j` from the group action stored on `M`; requires a
/// representative for every cycle type.
pub fn tor_character<F: Field>(module: &GradedModule<F>, i: usize, j: i32) -> Result<ClassFunction> {
    if !module.has_full_action() {
        return Err(Error::Validation("module does not carry an action for every cycle type".into()));
    }
    let n = module.nvars();
    let kc = KoszulComplex::new(module)?;
    let f = module.field();
    let values: Vec<(Partition, BigRational)> = enumerate_partitions(n)
        .into_par_iter()
        .map(|mu| kc.homology_trace(&mu, i, j).map(|t| (mu, f.to_rational(&t))))
        .collect::<Result<_>>()?;
    Ok(ClassFunction { n, values: values.into_iter().collect() })
}

/// Characters and decompositions of every nonzero `Tor_i(M)_j`.
pub fn equivariant_tors<F: Field>(module: &GradedModule<F>) -> Result<BTreeMap<(usize, i32), (ClassFunction, SpechtDecomposition)>> {
    let table = CharacterTable::new(module.nvars());
    let betti = KoszulComplex::new(module)?.betti();
    let mut out = BTreeMap::new();
    for (i, j, _) in betti.entries() {
        let chi = tor_character(module, i, j)?;
        let dec = specht_decompose(&chi, &table)?;
        out.insert((i, j), (chi, dec));
    }
    Ok(out)
}

/// `p_k(σ) = #fix(σ^k)` for `σ` of cycle type `μ`.
fn power_sum_at(mu: &Partition, k: usize) -> i64 {
    mu.parts().iter().filter(|&&m| k % m == 0).map(|&m| m as i64).sum()
}

/// Character of `Res S_λ` (Schur module of `GL_n` restricted to permutation
/// matrices): `s_λ(σ) = Σ_{ρ ⊢ |λ|} χ^λ(ρ)/z_ρ · Π_r p_{ρ_r}(σ)`.
pub fn schur_character(lambda: &Partition, n: usize) -> ClassFunction {
    if lambda.len() > n {
        return ClassFunction::zero(n);
    }
    let size = lambda.size();
    let rhos = enumerate_partitions(size);
    let mut memo = HashMap::new();
    let coeffs: Vec<BigRational> = rhos
        .iter()
        .map(|rho| BigRational::new(mn(&beta_set(lambda), rho.parts(), &mut memo).into(), centralizer_order(rho)))
        .collect();
    ClassFunction::from_fn(n, |mu| {
        rhos.iter().zip(&coeffs).fold(BigRational::zero(), |acc, (rho, c)| {
            let p: BigInt = rho.parts().iter().map(|&r| BigInt::from(power_sum_at(mu, r))).product();
            acc + c * BigRational::from_integer(p)
        })
    })
}

/// `ν(n) = (n − |ν|, ν_1, …)` when that is a partition of `n`.
pub fn nu_of_n(nu: &Partition, n: usize) -> Option<Partition> {
    let first = n.checked_sub(nu.size())?;
    if nu.len() > 0 && first < nu.part(1) {
        return None;
    }
    let mut parts = vec![first];
    parts.extend_from_slice(nu.parts());
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect()).ok()
}

/// Decomposition of `Res S_λ` into Specht modules.
pub fn restriction_decomposition(lambda: &Partition, n: usize, table: &CharacterTable) -> Result<SpechtDecomposition> {
    specht_decompose(&schur_character(lambda, n), table)
}

/// `a_λ^{ν(n)}`: multiplicity of `Sp_{ν(n)}` in `Res S_λ`, for `ν(n) ⊢ n`.
pub fn restriction_multiplicity(lambda: &Partition, nu_n: &Partition) -> Result<u64> {
    let n = nu_n.size();
    if n == 0 {
        return Err(Error::Argument("ν(n) must be a partition of n ≥ 1".into()));
    }
    let table = CharacterTable::new(n);
    Ok(restriction_decomposition(lambda, n, &table)?.get(nu_n))
}

/// `I(λ)`: partitions obtained by removing one box and adding one box.
pub fn move_one_box(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = std::collections::BTreeSet::new();
    for r in 0..parts.len() {
        if r + 1 < parts.len() && parts[r] == parts[r + 1] {
            continue;
        }
        let mut removed = parts.to_vec();
        removed[r] -= 1;
        let removed: Vec<usize> = removed.into_iter().filter(|&p| p > 0).collect();
        for a in 0..=removed.len() {
            let mut added = removed.clone();
            if a == removed.len() {
                added.push(1);
            } else {
                if a > 0 && added[a - 1] == added[a] {
                    continue;
                }
                added[a] += 1;
            }
            out.insert(Partition::new(added).expect("still a partition"));
        }
    }
    out.into_iter().collect()
}

/// Checks `χ^λ · χ^{(n−1,1)} = Σ_{μ ∈ I(λ), μ ≠ λ} χ^μ + (#distinct parts − 1) χ^λ`.
pub fn tensor_rule_holds(lambda: &Partition, table: &CharacterTable) -> Result<bool> {
    let n = table.n;
    if n < 2 {
        return Ok(true);
    }
    let std = table.character(&Partition::new(vec![n - 1, 1])?)?;
    let lhs = table.character(lambda)?.mul(&std);
    let mut rhs = table.character(lambda)?.scale(&BigRational::from_integer((lambda.distinct_parts() as i64 - 1).into()));
    for mu in move_one_box(lambda) {
        if mu != *lambda {
            rhs = rhs.add(&table.character(&mu)?);
        }
    }
    Ok(lhs == rhs)
}

/// `Sp_α` for an integer sequence `α`, reduced to `±Sp_λ` or `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NonPartitionRule {
    /// A sequence that is not a partition indexes the zero module.
    Zero,
    /// Jacobi–Trudi straightening: `s_α = ±s_λ` after sorting `α + δ`.
    Straighten,
}

/// Reduces a composition-like sequence to a signed partition, or `None` for 0.
pub fn normalize_sequence(alpha: &[i64], rule: NonPartitionRule) -> Option<(i64, Partition)> {
    let trimmed: Vec<i64> = {
        let mut v = alpha.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    match rule {
        NonPartitionRule::Zero => Partition::from_tuple(&trimmed).map(|p| (1, p)),
        NonPartitionRule::Straighten => {
            let l = trimmed.len() as i64;
            let mut shifted: Vec<i64> = trimmed.iter().enumerate().map(|(k, &a)| a + (l - 1 - k as i64)).collect();
            // Sort decreasingly, tracking the sign of the permutation.
            let mut sign = 1;
            for a in 0..shifted.len() {
                for b in 0..shifted.len() - 1 - a {
                    if shifted[b] < shifted[b + 1] {
                        shifted.swap(b, b + 1);
                        sign = -sign;
                    } else if shifted[b] == shifted[b + 1] {
                        return None;
                    }
                }
            }
            if shifted.windows(2).any(|w| w[0] == w[1]) {
                return None;
            }
            let parts: Vec<i64> = shifted.iter().enumerate().map(|(k, &s)| s - (l - 1 - k as i64)).collect();
            if parts.iter().any(|&p| p < 0) {
                return None;
            }
            let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).map(|p| p as usize).collect();
            Some((sign, Partition::new(parts).ok()?))
        }
    }
}

/// Adds `c · Sp_α` to a signed decomposition.
fn add_sequence(out: &mut BTreeMap<Partition, i64>, alpha: &[i64], c: i64, rule: NonPartitionRule) {
    if let Some((s, p)) = normalize_sequence(alpha, rule) {
        *out.entry(p).or_insert(0) += s * c;
    }
}

fn clean(mut m: BTreeMap<Partition, i64>) -> BTreeMap<Partition, i64> {
    m.retain(|_, c| *c != 0);
    m
}

/// The hook `(n − k, 1^k)`, or `None` when `k ∉ [0, n−1]`.
pub fn hook(n: usize, k: i64) -> Option<Partition> {
    if k < 0 || k as usize >= n {
        return None;
    }
    let k = k as usize;
    let mut parts = vec![n - k];
    parts.extend(std::iter::repeat(1).take(k));
    Partition::new(parts).ok()
}

fn schur_hook(d: usize, i: usize) -> Partition {
    let mut parts = vec![d];
    parts.extend(std::iter::repeat(1).take(i));
    Partition::new(parts).expect("d ≥ 1")
}

/// A predicted decomposition of one bigraded piece of `Tor(A, k)`.
#[derive(Clone, Debug, Serialize)]
pub struct PredictedTor {
    pub i: usize,
    pub j: i32,
    #[serde(serialize_with = "ser_signed")]
    pub multiplicities: BTreeMap<Partition, i64>,
    /// A negative multiplicity means the formula is outside its range of validity.
    pub valid: bool,
}

fn ser_signed<S: serde::Serializer>(m: &BTreeMap<Partition, i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for (l, c) in m {
        seq.serialize_element(&(l.parts(), c))?;
    }
    seq.end()
}

impl PredictedTor {
    fn new(i: usize, j: i32, m: BTreeMap<Partition, i64>) -> Self {
        let m = clean(m);
        let valid = m.values().all(|&c| c >= 0);
        PredictedTor { i, j, multiplicities: m, valid }
    }

    pub fn dimension(&self) -> i128 {
        self.multiplicities.iter().map(|(l, &c)| l.specht_dimension() as i128 * c as i128).sum()
    }

    /// Whether this prediction equals a computed decomposition.
    pub fn matches(&self, actual: &SpechtDecomposition) -> bool {
        self.multiplicities == actual.signed()
    }
}

/// Which reading of the equivariant formulas to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TorReading {
    /// From the short exact sequences `0 → Tor_{i−1}(I) → Tor_{i−1}(m^d) → Tor_{i−1}(k^a)`
    /// with `Tor_i(A) = Tor_{i−1}(I)`.
    ExactSequence,
    /// The displayed formulas as printed, with the unbound index read as `n − 1`.
    Literal,
}

/// Predicted decompositions of every nonzero `Tor_i(A, k)_j` for a general
/// principal symmetric ideal of degree `d` in `n` variables.
pub fn predicted_equivariant_tors(n: usize, d: usize, reading: TorReading) -> Result<Vec<PredictedTor>> {
    if n < 2 || d < 2 {
        return Err(Error::Argument("predictions need n ≥ 2 and d ≥ 2".into()));
    }
    let table = CharacterTable::new(n);
    let a = partition_count(d) as i64 - 1;
    let l = partition_count(d) as i64 - partition_count(d - 1) as i64 - 1;
    let sign = Partition::column(n);
    let res = |i: usize| -> Result<BTreeMap<Partition, i64>> { Ok(restriction_decomposition(&schur_hook(d, i), n, &table)?.signed()) };
    let sub_hook = |m: &mut BTreeMap<Partition, i64>, k: i64, c: i64| {
        if let Some(h) = hook(n, k) {
            *m.entry(h).or_insert(0) -= c;
        }
    };
    let mut out = vec![PredictedTor::new(0, 0, BTreeMap::from([(Partition::row(n), 1)]))];
    let d_i = d as i32;
    for i in 1..n {
        let mut m;
        match reading {
            TorReading::ExactSequence => {
                m = res(i - 1)?;
                sub_hook(&mut m, i as i64 - 1, a);
                sub_hook(&mut m, i as i64 - 2, a);
            }
            TorReading::Literal => {
                m = res(i)?;
                sub_hook(&mut m, i as i64 - 1, a);
                sub_hook(&mut m, i as i64, a);
            }
        }
        out.push(PredictedTor::new(i, i as i32 + d_i - 1, m));
    }
    out.push(PredictedTor::new(n - 1, n as i32 - 1 + d_i, BTreeMap::from([(sign.clone(), l)])));
    let mut last = res(n - 1)?;
    match reading {
        TorReading::ExactSequence => {
            sub_hook(&mut last, n as i64 - 1, a);
            sub_hook(&mut last, n as i64 - 2, a);
            *last.entry(sign.clone()).or_insert(0) += l;
        }
        TorReading::Literal => {
            *last.entry(sign.clone()).or_insert(0) += partition_count(d - 1) as i64 + 1;
            sub_hook(&mut last, n as i64 - 2, a);
        }
    }
    out.push(PredictedTor::new(n, n as i32 - 1 + d_i, last));
    out.push(PredictedTor::new(n, n as i32 + d_i, BTreeMap::from([(sign, a)])));
    out.retain(|p| !p.multiplicities.is_empty() || p.i == 0);
    Ok(out)
}

/// The displayed decomposition for a general quadric, line `i` (`0 ≤ i < n`):
/// `Sp_(n−i,2,1^{i−2}) ⊕ Sp_(n−i,1^i)^2 ⊕ Sp_(n−i−1,2,1^{i−1})^2 ⊕ Sp_(n−i−1,1^{i+1})^2
/// ⊕ Sp_(n−i−2,2,1^i)`, and `Sp_(1^n) ⊕ Sp_(2,1^{n−2})` for `i = n`.
pub fn quadratic_display(n: usize, i: usize, rule: NonPartitionRule) -> BTreeMap<Partition, i64> {
    let (n_i, i_i) = (n as i64, i as i64);
    let seq = |first: i64, two: bool, ones: i64| -> Option<Vec<i64>> {
        if ones < 0 {
            return None;
        }
        let mut v = vec![first];
        if two {
            v.push(2);
        }
        v.extend(std::iter::repeat(1).take(ones as usize));
        Some(v)
    };
    let mut out = BTreeMap::new();
    if i == n {
        add_sequence(&mut out, &vec![1; n], 1, rule);
        let mut v = vec![2];
        v.extend(std::iter::repeat(1).take(n.saturating_sub(2)));
        add_sequence(&mut out, &v, 1, rule);
        return clean(out);
    }
    let terms = [
        (seq(n_i - i_i, true, i_i - 2), 1),
        (seq(n_i - i_i, false, i_i), 2),
        (seq(n_i - i_i - 1, true, i_i - 1), 2),
        (seq(n_i - i_i - 1, false, i_i + 1), 2),
        (seq(n_i - i_i - 2, true, i_i), 1),
    ];
    for (alpha, c) in terms {
        if let Some(alpha) = alpha {
            add_sequence(&mut out, &alpha, c, rule);
        }
    }
    clean(out)
}

/// `R_{≥d} / R_{>top}` as a finite-length module with the permutation action.
pub fn truncated_power_module<F: Field>(field: &F, n: usize, d: usize, top: usize) -> Result<GradedModule<F>> {
    if top < d {
        return Err(Error::Argument("top degree must be at least d".into()));
    }
    let bases: Vec<MonomialBasis> = (d..=top).map(|j| MonomialBasis::new(n, j)).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let mut mult = Vec::with_capacity(n);
    for k in 0..n {
        let mut family = Vec::with_capacity(bases.len());
        for (idx, b) in bases.iter().enumerate() {
            let rows = if idx + 1 < bases.len() { dims[idx + 1] } else { 0 };
            let mut m = Matrix::zeros(field, rows, dims[idx]);
            if rows > 0 {
                for (c, mono) in b.monomials().iter().enumerate() {
                    let r = bases[idx + 1].index_of(&mono.times_var(k)).expect("same degree");
                    m.set(r, c, field.one());
                }
            }
            family.push(m);
        }
        mult.push(family);
    }
    let mut module = GradedModule::new(field, n, d as i32, dims.clone(), mult)?;
    for mu in enumerate_partitions(n) {
        let sigma = Permutation::of_cycle_type(&mu);
        let mats = bases
            .iter()
            .zip(&dims)
            .map(|(b, &dim)| {
                let mut m = Matrix::zeros(field, dim, dim);
                for (c, mono) in b.monomials().iter().enumerate() {
                    m.set(b.index_of(&mono.permuted(sigma.images())).expect("same degree"), c, field.one());
                }
                m
            })
            .collect();
        module.add_action(sigma, mats)?;
    }
    Ok(module)
}

/// Character identity `χ_{Tor_i(A)_j}(μ) = sign(μ) · χ_{Tor_{n−i}(I^⊥)_{n−j}}(μ)`
/// for every bidegree where either side is nonzero.
pub fn equivariant_duality_check<F: Field>(a: &GradedModule<F>, iperp: &GradedModule<F>) -> Result<bool> {
    let n = a.nvars();
    let ta = KoszulComplex::new(a)?.betti();
    let td = KoszulComplex::new(iperp)?.betti();
    let mut keys: Vec<(usize, i32)> = ta.entries().map(|(i, j, _)| (i, j)).collect();
    keys.extend(td.entries().filter(|&(i, _, _)| i <= n).map(|(i, j, _)| (n - i, n as i32 - j)));
    keys.sort_unstable();
    keys.dedup();
    for (i, j) in keys {
        let left = tor_character(a, i, j)?;
        let right = tor_character(iperp, n - i, n as i32 - j)?.sign_twist();
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn characters_of_small_groups() {
        for n in 1..=7 {
            let t = CharacterTable::new(n);
            for (j, mu) in t.partitions.iter().enumerate() {
                assert_eq!(irreducible_character(&Partition::row(n), mu).unwrap(), 1);
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(irreducible_character(&Partition::column(n), mu).unwrap(), sign);
                if n >= 2 {
                    let fixed = mu.parts().iter().filter(|&&x| x == 1).count() as i64;
                    assert_eq!(irreducible_character(&p(&[n - 1, 1]), mu).unwrap(), fixed - 1);
                }
                // Column orthogonality at the identity: Σ χ(1)χ(μ) = 0 unless μ = 1^n.
                let s: i64 = t.values.iter().map(|row| row[0] * row[j]).sum();
                let expected = if j == 0 { (1..=n as i64).product::<i64>() } else { 0 };
                assert_eq!(s, expected, "n = {n}, μ = {mu}");
            }
            for (i, l) in t.partitions.iter().enumerate() {
                assert_eq!(t.values[i][0] as u128, l.specht_dimension());
                let chi = t.character(l).unwrap();
                assert_eq!(chi.inner(&chi), BigRational::one());
            }
        }
    }

    #[test]
    fn decompositions() {
        let n = 5;
        let t = CharacterTable::new(n);
        let perm = ClassFunction::from_fn(n, |mu| BigRational::from_integer((mu.parts().iter().filter(|&&x| x == 1).count() as i64).into()));
        let d = specht_decompose(&perm, &t).unwrap();
        assert_eq!(d.signed(), BTreeMap::from([(p(&[5]), 1), (p(&[4, 1]), 1)]));
        let half = perm.scale(&BigRational::new(1.into(), 2.into()));
        assert!(matches!(specht_decompose(&half, &t), Err(Error::NotACharacter(_))));
        for i in 0..n {
            let schur = schur_character(&Partition::column(i), n);
            let dec = specht_decompose(&schur, &t).unwrap();
            let mut expected = BTreeMap::from([(hook(n, i as i64).unwrap(), 1)]);
            if i > 0 {
                expected.insert(hook(n, i as i64 - 1).unwrap(), 1);
            }
            assert_eq!(dec.signed(), expected);
        }
    }

    #[test]
    fn stable_restriction_is_diagonal() {
        assert_eq!(restriction_multiplicity(&p(&[2]), &p(&[4, 2])).unwrap(), 1);
        assert_eq!(restriction_multiplicity(&p(&[1, 1]), &p(&[4, 2])).unwrap(), 0);
        assert_eq!(nu_of_n(&p(&[2]), 6), Some(p(&[4, 2])));
        assert_eq!(nu_of_n(&p(&[4]), 6), None);
    }

    #[test]
    fn tensor_rule_small() {
        for n in 2..=6 {
            let t = CharacterTable::new(n);
            for l in &t.partitions {
                assert!(tensor_rule_holds(l, &t).unwrap(), "λ = {l}");
            }
        }
    }

    #[test]
    fn straightening() {
        use NonPartitionRule::*;
        assert_eq!(normalize_sequence(&[0, 2, 1], Straighten), Some((-1, p(&[1, 1, 1]))));
        assert_eq!(normalize_sequence(&[1, 2], Straighten), None);
        assert_eq!(normalize_sequence(&[0, 2, 1], Zero), None);
        assert_eq!(normalize_sequence(&[3, 1, 0], Zero), Some((1, p(&[3, 1]))));
    }

    #[test]
    fn residue_field_tor_characters() {
        for n in 1..=5 {
            let k = GradedModule::residue_field(&Rationals, n);
            // The Koszul complex of k itself: H_0 = k only.
            let chi = tor_character(&k, 0, 0).unwrap();
            assert_eq!(chi, ClassFunction::from_fn(n, |_| BigRational::one()));
        }
    }

    #[test]
    fn truncated_power_matches_schur_modules() {
        let (n, d) = (4, 2);
        let f = Rationals;
        let m = truncated_power_module(&f, n, d, d + n + 1).unwrap();
        let t = CharacterTable::new(n);
        for i in 0..n {
            let chi = tor_character(&m, i, (i + d) as i32).unwrap();
            let expected = schur_character(&schur_hook(d, i), n);
            assert_eq!(chi, expected, "i = {i}");
            specht_decompose(&chi, &t).unwrap();
        }
    }
}
