//! Graded Betti numbers: Koszul homology of finite-length modules, the closed-form
//! table for general principal symmetric ideals, duality checks, and minimal
//! resolutions of the residue field over an artinian quotient.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::inverse::QuotientAlgebra;
use crate::linalg::{Matrix, RowSpace};
use crate::module::GradedModule;
use crate::monomial::{binomial, count_monomials, Monomial};
use crate::partitions::{partition_count, Partition};
use crate::perm::sorting_sign;

/// Graded Betti numbers `β_{i,j}`, stored sparsely (zeros omitted).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

/// One JSON entry `{"i":1,"j":3,"beta":33}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub beta: usize,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, i32, usize)>) -> Self {
        let mut t = Self::new();
        for (i, j, b) in entries {
            t.set(i, j, b);
        }
        t
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: i32, beta: usize) {
        if beta == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), beta);
        }
    }

    /// Nonzero entries `(i, j, β_{i,j})` in increasing order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i32, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, i32::MIN)..=(i, i32::MAX)).map(|(_, &b)| b).sum()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn max_i(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Total Betti numbers `β_0, …, β_max`.
    pub fn totals(&self) -> Vec<usize> {
        match self.max_i() {
            None => Vec::new(),
            Some(m) => (0..=m).map(|i| self.total(i)).collect(),
        }
    }

    pub fn to_json_entries(&self) -> Vec<BettiEntry> {
        self.entries().map(|(i, j, beta)| BettiEntry { i, j, beta }).collect()
    }

    /// Entries that differ, as `(i, j, self, other)`.
    pub fn diff(&self, other: &BettiTable) -> Vec<(usize, i32, usize, usize)> {
        let keys: std::collections::BTreeSet<(usize, i32)> =
            self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.into_iter()
            .filter_map(|(i, j)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some((i, j, a, b))
            })
            .collect()
    }
}

impl fmt::Display for BettiTable {
    /// Columns are homological degrees, rows are `j − i`, zeros shown as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(max_i) = self.max_i() else {
            return writeln!(f, "(zero table)");
        };
        let rows: Vec<i32> = {
            let mut r: Vec<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
            r.sort_unstable();
            r.dedup();
            (r[0]..=*r.last().expect("nonempty")).collect()
        };
        let totals = self.totals();
        let width = self.entries.values().chain(totals.iter()).map(|b| b.to_string().len()).max().unwrap_or(1).max(max_i.to_string().len());
        let label_w = rows.iter().map(|r| format!("{r}:").len()).max().unwrap_or(2).max(6);
        write!(f, "{:>label_w$}", "")?;
        for i in 0..=max_i {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label_w$}", "total:")?;
        for b in &totals {
            write!(f, " {b:>width$}")?;
        }
        writeln!(f)?;
        for r in rows {
            write!(f, "{:>label_w$}", format!("{r}:"))?;
            for i in 0..=max_i {
                let b = self.get(i, r + i as i32);
                if b == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {b:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The Koszul complex `Λ^•(k^n) ⊗ M` of a finite-length graded module, with
/// chain groups `K_{i,j} = Λ^i ⊗ M_{j−i}` and differential
/// `∂(e_S ⊗ m) = Σ_r (−1)^r e_{S∖s_r} ⊗ x_{s_r} m`.
pub struct KoszulComplex<'a, F: Field> {
    module: &'a GradedModule<F>,
    /// Subsets of each size as bit masks, in increasing order.
    subsets: Vec<Vec<u64>>,
    index: Vec<HashMap<u64, usize>>,
}

impl<'a, F: Field> KoszulComplex<'a, F> {
    pub fn new(module: &'a GradedModule<F>) -> Result<Self> {
        let n = module.nvars();
        if n > 40 {
            return Err(Error::Resource(format!("Koszul complex on {n} variables is too large")));
        }
        let mut subsets = vec![Vec::new(); n + 1];
        for mask in 0u64..(1u64 << n) {
            subsets[mask.count_ones() as usize].push(mask);
        }
        let index = subsets.iter().map(|s| s.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
        Ok(KoszulComplex { module, subsets, index })
    }

    fn n(&self) -> usize {
        self.module.nvars()
    }

    /// `dim K_{i,j}`.
    pub fn chain_dim(&self, i: usize, j: i32) -> usize {
        if i > self.n() {
            return 0;
        }
        self.subsets[i].len() * self.module.dim(j - i as i32)
    }

    /// Images of the basis of `K_{i,j}` in `K_{i−1,j}`, one row per source vector.
    fn boundary_rows(&self, i: usize, j: i32) -> Vec<Vec<F::Elem>> {
        let f = self.module.field();
        let src_deg = j - i as i32;
        let dm = self.module.dim(src_deg);
        let dt = self.module.dim(src_deg + 1);
        let target_len = self.subsets[i - 1].len() * dt;
        let mut rows = Vec::with_capacity(self.subsets[i].len() * dm);
        for &mask in &self.subsets[i] {
            let elems: Vec<usize> = (0..self.n()).filter(|&k| mask >> k & 1 == 1).collect();
            for b in 0..dm {
                let mut v = vec![f.zero(); target_len];
                if dt > 0 {
                    for (r, &s) in elems.iter().enumerate() {
                        let x = self.module.mult_matrix(s, src_deg).expect("target piece is nonzero");
                        let t = self.index[i - 1][&(mask & !(1u64 << s))];
                        let neg = r % 2 == 1;
                        for row in 0..dt {
                            let c = x.get(row, b);
                            if !f.is_zero(c) {
                                let c = if neg { f.neg(c) } else { c.clone() };
                                let slot = &mut v[t * dt + row];
                                *slot = f.add(slot, &c);
                            }
                        }
                    }
                }
                rows.push(v);
            }
        }
        rows
    }

    /// `rank ∂_{i,j} : K_{i,j} → K_{i−1,j}`.
    pub fn boundary_rank(&self, i: usize, j: i32) -> usize {
        if i == 0 || i > self.n() || self.chain_dim(i, j) == 0 || self.chain_dim(i - 1, j) == 0 {
            return 0;
        }
        let cols = self.chain_dim(i - 1, j);
        Matrix::from_rows(self.module.field(), cols, self.boundary_rows(i, j)).rank()
    }

    /// `β_{i,j} = dim K_{i,j} − rank ∂_{i,j} − rank ∂_{i+1,j}` over all bidegrees.
    pub fn betti(&self) -> BettiTable {
        let n = self.n();
        let mut table = BettiTable::new();
        let (lo, hi) = (self.module.min_degree(), self.module.end_degree());
        for j in lo..hi + n as i32 {
            let ranks: Vec<usize> = (0..=n + 1).map(|i| self.boundary_rank(i, j)).collect();
            for i in 0..=n {
                let dim = self.chain_dim(i, j);
                if dim > 0 {
                    table.set(i, j, dim - ranks[i] - ranks[i + 1]);
                }
            }
        }
        table
    }

    /// `σ(e_S ⊗ m) = ± e_{σ(S)} ⊗ σm`, the sign sorting `σ(s_1), …, σ(s_i)`.
    fn apply_sigma(&self, mu: &Partition, i: usize, j: i32, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let f = self.module.field();
        let act = self.module.action(mu).ok_or_else(|| Error::Validation(format!("no group action stored for cycle type {mu}")))?;
        let sigma = &act.sigma;
        let deg = j - i as i32;
        let dm = self.module.dim(deg);
        let m = self.module.action_matrix(mu, deg).expect("nonzero piece has an action matrix");
        let mut out = vec![f.zero(); v.len()];
        for (s_idx, &mask) in self.subsets[i].iter().enumerate() {
            let block = &v[s_idx * dm..(s_idx + 1) * dm];
            if block.iter().all(|x| f.is_zero(x)) {
                continue;
            }
            let images: Vec<usize> = (0..self.n()).filter(|&k| mask >> k & 1 == 1).map(|k| sigma.apply(k)).collect();
            let sign = sorting_sign(&images);
            let tmask = images.iter().fold(0u64, |acc, &k| acc | 1 << k);
            let t = self.index[i][&tmask];
            let w = m.mul_vec(block);
            for (o, x) in out[t * dm..(t + 1) * dm].iter_mut().zip(w) {
                *o = if sign < 0 { f.sub(o, &x) } else { f.add(o, &x) };
            }
        }
        Ok(out)
    }

    /// Trace of `σ` (the stored representative of cycle type `mu`) on
    /// `H_i(K)_j = Z/B`, computed as `tr(σ|Z) − tr(σ|B)` on echelon bases.
    pub fn homology_trace(&self, mu: &Partition, i: usize, j: i32) -> Result<F::Elem> {
        let f = self.module.field();
        let dim = self.chain_dim(i, j);
        if dim == 0 {
            return Ok(f.zero());
        }
        let z = if i == 0 || self.chain_dim(i - 1, j) == 0 {
            RowSpace::full(f, dim)
        } else {
            let cols = self.chain_dim(i - 1, j);
            let t = Matrix::from_rows(f, cols, self.boundary_rows(i, j)).transpose();
            RowSpace::from_rows(f, dim, t.kernel())
        };
        let b = if i + 1 > self.n() || self.chain_dim(i + 1, j) == 0 {
            RowSpace::new(f, dim)
        } else {
            RowSpace::from_rows(f, dim, self.boundary_rows(i + 1, j))
        };
        let trace = |space: &RowSpace<F>| -> Result<F::Elem> {
            let mut acc = f.zero();
            for (row, &p) in space.rows().iter().zip(space.pivots()) {
                let image = self.apply_sigma(mu, i, j, row)?;
                if !space.contains(&image) {
                    return Err(Error::Validation("group action does not preserve the Koszul cycles/boundaries".into()));
                }
                acc = f.add(&acc, &image[p]);
            }
            Ok(acc)
        };
        Ok(f.sub(&trace(&z)?, &trace(&b)?))
    }
}

/// Betti numbers of a finite-length module by Koszul homology.
pub fn koszul_betti<F: Field>(module: &GradedModule<F>) -> Result<BettiTable> {
    Ok(KoszulComplex::new(module)?.betti())
}

/// `β^R_i(m^d) = C(n+d−1, d+i)·C(d+i−1, i)`, concentrated in degree `d+i`.
pub fn betti_power_of_maximal_ideal(n: usize, d: usize, i: usize) -> u128 {
    if d == 0 {
        return u128::from(i == 0);
    }
    binomial(n + d - 1, d + i) * binomial(d + i - 1, i)
}

/// The closed-form invariants and table for a general principal symmetric ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub n: usize,
    pub d: usize,
    /// `a = P(d) − 1`.
    pub a: i128,
    /// `ℓ = P(d) − P(d−1) − 1`.
    pub l: i128,
    /// `b = C(n+d−2, d−1) − a(n−1) − P(d−1)`.
    pub b: i128,
    /// The same expression with `+P(d−1)`, reported for comparison.
    pub b_plus_variant: i128,
    /// `u_1, …, u_{n−1}` with `u_{i+1} = C(n+d−1, d+i)·C(d+i−1, i) − a·C(n, i)`.
    pub u: Vec<i128>,
}

impl ClosedForm {
    /// The two-row table (plus `β_{0,0} = 1`); fails when an entry is negative,
    /// which happens outside the range of validity.
    pub fn table(&self) -> Result<BettiTable> {
        let (n, d) = (self.n, self.d as i32);
        let mut entries = vec![(0usize, 0i32, 1i128)];
        for (k, &u) in self.u.iter().enumerate() {
            let i = k + 1;
            entries.push((i, i as i32 + d - 1, u));
        }
        if n >= 1 {
            entries.push((n - 1, n as i32 - 1 + d, self.l));
            entries.push((n, n as i32 + d - 1, self.b));
            entries.push((n, n as i32 + d, self.a));
        }
        let mut t = BettiTable::new();
        for (i, j, v) in entries {
            if v < 0 {
                return Err(Error::Validation(format!("closed form gives a negative entry β_{{{i},{j}}} = {v} for n = {n}")));
            }
            t.set(i, j, t.get(i, j) + v as usize);
        }
        Ok(t)
    }

    /// Socle polynomial coefficients `(b, a)` of `b z^{d−1} + a z^d`.
    pub fn socle(&self) -> (i128, i128) {
        (self.b, self.a)
    }
}

/// Evaluates the closed-form Betti numbers for `n ≥ 1`, `d ≥ 2`.
pub fn closed_form_betti(n: usize, d: usize) -> Result<ClosedForm> {
    if n == 0 || d < 2 {
        return Err(Error::Argument("closed form needs n ≥ 1 and d ≥ 2".into()));
    }
    let p = |k: usize| partition_count(k) as i128;
    let a = p(d) - 1;
    let l = p(d) - p(d - 1) - 1;
    let r = count_monomials(n, d - 1) as i128;
    let b = r - a * (n as i128 - 1) - p(d - 1);
    let b_plus_variant = r - a * (n as i128 - 1) + p(d - 1);
    let u = (0..n.saturating_sub(1))
        .map(|i| betti_power_of_maximal_ideal(n, d, i) as i128 - a * binomial(n, i) as i128)
        .collect();
    Ok(ClosedForm { n, d, a, l, b, b_plus_variant, u })
}

/// `β_{i,j}(A) = β_{n−i, n−j}(I^⊥)` for all bidegrees, with both tables computed.
pub fn boij_duality_check<F: Field>(a: &GradedModule<F>, iperp: &GradedModule<F>) -> Result<bool> {
    let n = a.nvars();
    let ta = koszul_betti(a)?;
    let td = koszul_betti(iperp)?;
    Ok(tables_are_dual(&ta, &td, n))
}

/// Pure table comparison behind [`boij_duality_check`].
pub fn tables_are_dual(ta: &BettiTable, td: &BettiTable, n: usize) -> bool {
    let dualized = BettiTable::from_entries(td.entries().filter(|&(i, _, _)| i <= n).map(|(i, j, b)| (n - i, n as i32 - j, b)));
    td.entries().all(|(i, _, _)| i <= n) && *ta == dualized
}

/// Vanishing bounds for an artinian quotient with invariants `t = t(I)`, `s = s(A)`:
/// `β_{i,j} = 0` for `i > 0` and `j < i − 1 + t` or `j > i + s`, `β_{1,t} ≠ 0`,
/// and `β_{n, n+s} ≠ 0`.
pub fn satisfies_socle_bounds(table: &BettiTable, n: usize, t: usize, s: usize) -> bool {
    let vanish = table.entries().all(|(i, j, _)| i == 0 || (j >= i as i32 - 1 + t as i32 && j <= (i + s) as i32));
    vanish && table.get(1, t as i32) > 0 && table.get(n, (n + s) as i32) > 0
}

/// Outcome of a minimal resolution of `k` over `A`.
#[derive(Clone, Debug, Serialize)]
pub struct ResidueResolution {
    /// `β^A_{i,j}(k)` for the computed homological degrees.
    pub betti: BettiTable,
    /// Highest homological degree whose Betti numbers are complete.
    pub computed_through: usize,
    /// `None` when the requested range finished; otherwise why it stopped.
    pub stopped: Option<String>,
}

impl ResidueResolution {
    pub fn totals(&self) -> Vec<usize> {
        (0..=self.computed_through).map(|i| self.betti.total(i)).collect()
    }

    /// Whether `β^A_{i,j}(k) = 0` for `i ≠ j` in the computed range.
    pub fn is_linear(&self) -> bool {
        self.betti.entries().all(|(i, j, _)| j == i as i32)
    }
}

/// Kernel of a differential in one internal degree: basis vectors in reduced
/// form, and for each basis vector the coordinate (free column) where it is 1
/// while all other basis vectors vanish there.
struct KernelPiece<E> {
    basis: Vec<Vec<E>>,
    free: Vec<usize>,
}

/// Layout of a graded free `A`-module in one internal degree: blocks
/// `(generator, A-degree, offset)`.
struct FreeLayout {
    blocks: Vec<(usize, usize, usize)>,
    offset_of: HashMap<usize, usize>,
    dim: usize,
}

fn free_layout(gens: &[usize], t: usize, a_dims: &[usize]) -> FreeLayout {
    let mut blocks = Vec::new();
    let mut offset_of = HashMap::new();
    let mut off = 0;
    for (g, &deg) in gens.iter().enumerate() {
        if deg <= t && t - deg < a_dims.len() {
            let r = t - deg;
            blocks.push((g, r, off));
            offset_of.insert(g, off);
            off += a_dims[r];
        }
    }
    FreeLayout { blocks, offset_of, dim: off }
}

/// Minimal graded free resolution of `k` over an artinian `A`, through
/// homological degree `max_i`. The resolution stops early (with partial output)
/// when a single matrix would exceed `max_entries` field elements.
pub fn resolve_k_over_a<F: Field>(a: &QuotientAlgebra<F>, max_i: usize, max_entries: usize) -> Result<ResidueResolution> {
    if !a.is_artinian() {
        return Err(Error::NonArtinian { cap: a.cap() });
    }
    let f = a.field().clone();
    let n = a.nvars();
    let top = a.top_degree();
    let a_dims = a.hilbert();
    let mult: Vec<Vec<Matrix<F>>> = (0..n).map(|k| (0..=top).map(|r| a.mult_matrix(k, r)).collect()).collect();
    // Each standard monomial b of degree r ≥ 1 is x_k · b′ with b′ standard.
    let mut factor: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let mut prev: HashMap<Monomial, usize> = a.standard_monomials(0).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    for r in 1..=top {
        let monos = a.standard_monomials(r);
        let mut fr = Vec::with_capacity(monos.len());
        for m in &monos {
            let k = m.exps().iter().position(|&e| e > 0).expect("positive degree");
            let mut e = m.exps().to_vec();
            e[k] -= 1;
            let idx = *prev.get(&Monomial::new(e)).ok_or_else(|| Error::Validation("standard monomials are not closed under division".into()))?;
            fr.push((k, idx));
        }
        factor.push(fr);
        prev = monos.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    }

    // x_k · v for v ∈ (F)_t, as a vector in (F)_{t+1}.
    let mul_var = |gens: &[usize], k: usize, t: usize, v: &[F::Elem]| -> Vec<F::Elem> {
        let src = free_layout(gens, t, &a_dims);
        let dst = free_layout(gens, t + 1, &a_dims);
        let mut out = vec![f.zero(); dst.dim];
        for &(g, r, off) in &src.blocks {
            if r + 1 > top {
                continue;
            }
            let block = &v[off..off + a_dims[r]];
            if block.iter().all(|x| f.is_zero(x)) {
                continue;
            }
            let w = mult[k][r].mul_vec(block);
            let o = dst.offset_of[&g];
            out[o..o + a_dims[r + 1]].clone_from_slice(&w);
        }
        out
    };

    let mut betti = BettiTable::new();
    betti.set(0, 0, 1);
    // F_0 = A; the kernel of the augmentation is m_A.
    let mut gens: Vec<usize> = vec![0];
    let mut kernel: BTreeMap<usize, KernelPiece<F::Elem>> = BTreeMap::new();
    for t in 1..=top {
        let dim = a_dims[t];
        let basis = (0..dim).map(|c| (0..dim).map(|x| if x == c { f.one() } else { f.zero() }).collect()).collect();
        kernel.insert(t, KernelPiece { basis, free: (0..dim).collect() });
    }

    for i in 0..max_i {
        // Minimal generators of K_i: complements of m·K_i degree by degree.
        let mut new_gens: Vec<usize> = Vec::new();
        let mut images: Vec<Vec<F::Elem>> = Vec::new();
        for (&t, piece) in &kernel {
            let dim_k = piece.basis.len();
            if dim_k == 0 {
                continue;
            }
            let mut rows = Vec::new();
            if let Some(lower) = kernel.get(&(t - 1)) {
                if lower.basis.len() * n * dim_k > max_entries {
                    return Ok(ResidueResolution {
                        betti,
                        computed_through: i,
                        stopped: Some(format!(
                            "memory guard: {}x{} matrix in homological degree {} exceeds {max_entries} entries",
                            lower.basis.len() * n,
                            dim_k,
                            i + 1
                        )),
                    });
                }
                for w in &lower.basis {
                    for k in 0..n {
                        let v = mul_var(&gens, k, t - 1, w);
                        rows.push(piece.free.iter().map(|&c| v[c].clone()).collect());
                    }
                }
            }
            let ech = f.echelon(rows, dim_k, false);
            let mut is_pivot = vec![false; dim_k];
            for &p in &ech.pivots {
                is_pivot[p] = true;
            }
            let mut count = 0;
            for r in 0..dim_k {
                if !is_pivot[r] {
                    new_gens.push(t);
                    images.push(piece.basis[r].clone());
                    count += 1;
                }
            }
            betti.set(i + 1, t as i32, count);
        }
        if i + 1 == max_i || new_gens.is_empty() {
            return Ok(ResidueResolution { betti, computed_through: i + 1, stopped: None });
        }

        // Products b · image(g) for standard monomials b, by increasing degree.
        let mut products: Vec<Vec<Vec<Vec<F::Elem>>>> = Vec::with_capacity(new_gens.len());
        for (g, &tg) in new_gens.iter().enumerate() {
            let mut by_degree = vec![vec![images[g].clone()]];
            for r in 1..=top {
                let level: Vec<Vec<F::Elem>> =
                    factor[r].iter().map(|&(k, b)| mul_var(&gens, k, tg + r - 1, &by_degree[r - 1][b])).collect();
                by_degree.push(level);
            }
            products.push(by_degree);
        }

        // Kernel of d_{i+1} in every internal degree.
        let lo = *new_gens.iter().min().expect("nonempty");
        let hi = *new_gens.iter().max().expect("nonempty") + top;
        let mut next_kernel = BTreeMap::new();
        for t in lo..=hi {
            let src = free_layout(&new_gens, t, &a_dims);
            let dst = free_layout(&gens, t, &a_dims);
            if src.dim == 0 {
                continue;
            }
            if src.dim * dst.dim.max(1) > max_entries {
                return Ok(ResidueResolution {
                    betti,
                    computed_through: i + 1,
                    stopped: Some(format!(
                        "memory guard: {}x{} differential in homological degree {} exceeds {max_entries} entries",
                        dst.dim,
                        src.dim,
                        i + 1
                    )),
                });
            }
            // Columns of the differential are the products; rows index (F_i)_t.
            let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(src.dim);
            for &(g, r, _) in &src.blocks {
                for v in &products[g][r] {
                    cols.push(v.clone());
                }
            }
            let d_rows = if dst.dim == 0 { Vec::new() } else { Matrix::from_rows(&f, dst.dim, cols).transpose().into_rows() };
            let ech = f.echelon(d_rows, src.dim, true);
            let mut is_pivot = vec![false; src.dim];
            for &p in &ech.pivots {
                is_pivot[p] = true;
            }
            let free: Vec<usize> = (0..src.dim).filter(|&c| !is_pivot[c]).collect();
            let basis = free
                .iter()
                .map(|&c| {
                    let mut v = vec![f.zero(); src.dim];
                    v[c] = f.one();
                    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                        v[p] = f.neg(&row[c]);
                    }
                    v
                })
                .collect();
            next_kernel.insert(t, KernelPiece { basis, free });
        }
        gens = new_gens;
        kernel = next_kernel;
    }
    Ok(ResidueResolution { betti, computed_through: max_i, stopped: None })
}

/// Power-series coefficients `c_0..c_len` of `num / den` (integer series, `den_0 = 1`).
pub fn series_quotient(num: &[i128], den: &[i128], len: usize) -> Vec<i128> {
    assert_eq!(den.first(), Some(&1), "denominator must start with 1");
    let mut out = Vec::with_capacity(len + 1);
    for k in 0..=len {
        let mut c = num.get(k).copied().unwrap_or(0);
        for j in 1..=k {
            c -= den.get(j).copied().unwrap_or(0) * out[k - j];
        }
        out.push(c);
    }
    out
}

/// `(1+t)^n` as coefficients.
pub fn one_plus_t_pow(n: usize) -> Vec<i128> {
    (0..=n).map(|k| binomial(n, k) as i128).collect()
}

/// Coefficients of the Golod bound `(1+t)^n / (1 − t·Σ_{i≥1} β^R_i(A) t^i)`.
pub fn golod_series(n: usize, betti_totals_of_a: &[usize], len: usize) -> Vec<i128> {
    let mut den = vec![1i128];
    for (i, &b) in betti_totals_of_a.iter().enumerate().skip(1) {
        if den.len() <= i + 1 {
            den.resize(i + 2, 0);
        }
        den[i + 1] -= b as i128;
    }
    series_quotient(&one_plus_t_pow(n), &den, len)
}

/// Coefficients of `(1+t)^n / (1 − t((1+t)^n − 1))`.
pub fn koszul_substituted_series(n: usize, len: usize) -> Vec<i128> {
    let p = one_plus_t_pow(n);
    let mut den = vec![0i128; p.len() + 1];
    den[0] = 1;
    for (k, &c) in p.iter().enumerate().skip(1) {
        den[k + 1] -= c;
    }
    series_quotient(&p, &den, len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn residue_field_betti_numbers() {
        for n in 1..6 {
            let k = GradedModule::residue_field(&Rationals, n);
            let t = koszul_betti(&k).unwrap();
            for i in 0..=n {
                assert_eq!(t.get(i, i as i32) as u128, binomial(n, i));
            }
            assert_eq!(t.entries().count(), n + 1);
            // k is self-dual: β_{i,i} = β_{n−i, n−i}.
            assert!(tables_are_dual(&t, &t, n));
        }
    }

    #[test]
    fn closed_form_cubic_five_variables() {
        let c = closed_form_betti(5, 3).unwrap();
        assert_eq!((c.a, c.l, c.b), (2, 0, 5));
        assert_eq!(c.u, vec![33, 95, 106, 50]);
        let t = c.table().unwrap();
        assert_eq!(t.get(5, 7), 5);
        assert_eq!(t.get(5, 8), 2);
        for n in 2..8 {
            let q = closed_form_betti(n, 2).unwrap();
            assert_eq!((q.a, q.b, q.l), (1, 0, 0));
        }
    }

    #[test]
    fn series_helpers() {
        // 1/(1 − 3t + t²) = 1, 3, 8, 21, 55, …
        assert_eq!(series_quotient(&[1], &[1, -3, 1], 4), vec![1, 3, 8, 21, 55]);
        assert_eq!(one_plus_t_pow(3), vec![1, 3, 3, 1]);
        // (1+t)/(1 − t²)
        assert_eq!(koszul_substituted_series(1, 3), vec![1, 1, 1, 1]);
    }

    #[test]
    fn table_rendering() {
        let t = BettiTable::from_entries([(0, 0, 1), (1, 3, 33), (2, 4, 95)]);
        let s = t.to_string();
        assert!(s.contains("total:"));
        assert!(s.contains("2:"));
    }
}
