//! Linear relations among `W(t) = ⟨m_λ − t_λ m_(d) : λ ⊢ d, λ ≠ (d)⟩`: the full
//! coefficient system in the unknowns `c_{i,λ}`, its reduction under the
//! symmetry assumption `c_{i,λ} = c_λ`, and the square minor `A′`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::inverse::{linear_relations, LSpace};
use crate::linalg::{Matrix, RowSpace};
use crate::monomial::MonomialBasis;
use crate::partitions::{diff_alpha, enumerate_partitions, monomial_symmetric, partition_count, Partition};
use crate::poly::DualElement;
use crate::psi::TParams;

/// Partitions `λ ⊢ d` with `λ ≠ (d)`, increasing lex.
pub fn non_row_partitions(d: usize) -> Vec<Partition> {
    enumerate_partitions(d).into_iter().filter(|l| *l != Partition::row(d)).collect()
}

/// The coefficient system of `Σ_{i,λ} c_{i,λ} x_i ∘ (m_λ − t_λ m_(d)) = 0`, one
/// row per exponent vector `α` with `|α| = d−1`, one column per pair `(i, λ)`.
#[derive(Clone, Debug)]
pub struct FullSystem<F: Field> {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<Vec<u32>>,
    /// `(i, λ)` with `i` 0-based; index `i·(P(d)−1) + position of λ`.
    pub cols: Vec<(usize, Partition)>,
    pub matrix: Matrix<F>,
}

impl<F: Field> FullSystem<F> {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        self.matrix.kernel()
    }

    pub fn solution_dim(&self) -> usize {
        self.cols.len() - self.rank()
    }

    /// Whether every solution has `c_{i,λ}` independent of `i`.
    pub fn solutions_are_component_symmetric(&self) -> bool {
        let f = self.matrix.field();
        let lambdas = self.cols.len() / self.n.max(1);
        self.kernel().iter().all(|v| (0..lambdas).all(|l| (1..self.n).all(|i| f.sub(&v[i * lambdas + l], &v[l]) == f.zero())))
    }

    /// The solution space as tuples of linear forms, matching [`LSpace`]:
    /// `[r][λ-index][k]`.
    pub fn as_tuples(&self) -> Vec<Vec<Vec<F::Elem>>> {
        let lambdas = self.cols.len() / self.n.max(1);
        self.kernel().into_iter().map(|v| (0..lambdas).map(|l| (0..self.n).map(|i| v[i * lambdas + l].clone()).collect()).collect()).collect()
    }
}

/// Builds the full system for parameters `t` in `n` variables.
pub fn build_full_system<F: Field>(t: &TParams<F>, n: usize) -> Result<FullSystem<F>> {
    let d = t.d;
    if n == 0 || d < 2 {
        return Err(Error::Argument("the linear system needs n ≥ 1 and d ≥ 2".into()));
    }
    let f = &t.field;
    let lambdas = non_row_partitions(d);
    let pos: BTreeMap<&Partition, usize> = lambdas.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let width = lambdas.len();
    let cols: Vec<(usize, Partition)> = (0..n).flat_map(|i| lambdas.iter().map(move |l| (i, l.clone()))).collect();
    let basis = MonomialBasis::new(n, d - 1);
    let hook = Partition::new(vec![d - 1, 1])?;
    let mut matrix = Matrix::zeros(f, basis.len(), cols.len());
    let mut rows = Vec::with_capacity(basis.len());
    for (r, m) in basis.monomials().iter().enumerate() {
        let alpha = m.exps().to_vec();
        let q = Partition::from_unsorted(alpha.iter().map(|&e| e as usize).collect());
        if q == Partition::row(d - 1) {
            let k = alpha.iter().position(|&e| e > 0).expect("degree d−1 ≥ 1");
            for i in (0..n).filter(|&i| i != k) {
                matrix.add_at(r, i * width + pos[&hook], &f.one());
            }
            for l in &lambdas {
                matrix.add_at(r, k * width + pos[l], &f.neg(&t.get(l)));
            }
        } else {
            let diffs = diff_alpha(&alpha);
            for i in 0..n {
                let lambda = match diffs.get(&i) {
                    Some(&j) => q.up(j)?,
                    None => q.up(q.len() + 1)?,
                };
                matrix.add_at(r, i * width + pos[&lambda], &f.one());
            }
        }
        rows.push(alpha);
    }
    Ok(FullSystem { n, d, rows, cols, matrix })
}

/// The same space computed directly from the inverse-system definition,
/// `L_{W(t)}` for the family `m_λ − t_λ m_(d)`.
pub fn linear_relations_of_w<F: Field>(t: &TParams<F>, n: usize) -> Result<LSpace<F>> {
    let f = &t.field;
    let top = monomial_symmetric(f, &Partition::row(t.d), n)?;
    let family: Vec<DualElement<F>> = non_row_partitions(t.d)
        .iter()
        .map(|l| monomial_symmetric(f, l, n)?.sub(&top.scale(&t.get(l))))
        .collect::<Result<_>>()?;
    linear_relations(f, n, &family)
}

/// An entry `constant + Σ coeff_λ t_λ` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AffineEntry {
    pub constant: i64,
    pub t: BTreeMap<Partition, i64>,
}

impl AffineEntry {
    fn add_constant(&mut self, c: i64) {
        self.constant += c;
    }

    fn add_t(&mut self, l: &Partition, c: i64) {
        let e = self.t.entry(l.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.t.remove(l);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.t.is_empty()
    }

    pub fn evaluate<F: Field>(&self, t: &TParams<F>) -> F::Elem {
        let f = &t.field;
        self.t.iter().fold(f.from_i64(self.constant), |acc, (l, &c)| f.add(&acc, &f.mul(&f.from_i64(c), &t.get(l))))
    }
}

impl fmt::Display for AffineEntry {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<String> = Vec::new();
        if self.constant != 0 || self.t.is_empty() {
            pieces.push(self.constant.to_string());
        }
        for (l, &c) in &self.t {
            let name = format!("t{l}");
            let s = match c {
                1 => format!("+{name}"),
                -1 => format!("-{name}"),
                c if c > 0 => format!("+{c}{name}"),
                c => format!("{c}{name}"),
            };
            pieces.push(s);
        }
        let joined = pieces.concat();
        write!(out, "{}", joined.strip_prefix('+').unwrap_or(&joined))
    }
}

/// The symmetric reduction: rows `q ⊢ d−1` (increasing lex, so `(d−1)` is last),
/// columns `λ ⊢ d`, `λ ≠ (d)` (increasing lex).
#[derive(Clone, Debug, Serialize)]
pub struct SymmetricSystem {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<AffineEntry>>,
}

impl SymmetricSystem {
    /// The field matrix at parameter point `t`.
    pub fn specialize<F: Field>(&self, t: &TParams<F>) -> Matrix<F> {
        let data = self.entries.iter().map(|row| row.iter().map(|e| e.evaluate(t)).collect()).collect();
        Matrix::from_rows(&t.field, self.cols.len(), data)
    }

    /// Columns of `A′`: the `λ` ending in 1, in order (bijective with the rows
    /// through `q ↦ q↑(#q+1)`).
    pub fn aprime_columns(&self) -> Vec<usize> {
        (0..self.cols.len()).filter(|&c| self.cols[c].ends_with_one()).collect()
    }

    /// The square minor `A′` at parameter point `t`.
    pub fn aprime<F: Field>(&self, t: &TParams<F>) -> Matrix<F> {
        let keep = self.aprime_columns();
        let data = self.entries.iter().map(|row| keep.iter().map(|&c| row[c].evaluate(t)).collect()).collect();
        Matrix::from_rows(&t.field, keep.len(), data)
    }

    /// Text rendering with row and column labels.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
        let col_labels: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        let widths: Vec<usize> = (0..self.cols.len())
            .map(|c| cells.iter().map(|r| r[c].len()).chain(std::iter::once(col_labels[c].len())).max().unwrap_or(1))
            .collect();
        let label_w = self.rows.iter().map(|q| q.to_string().len()).max().unwrap_or(1);
        let mut s = format!("{:label_w$} |", "q \\ λ");
        for (c, l) in col_labels.iter().enumerate() {
            s += &format!(" {:>w$}", l, w = widths[c]);
        }
        s.push('\n');
        for (q, row) in self.rows.iter().zip(&cells) {
            s += &format!("{:label_w$} |", q.to_string());
            for (c, e) in row.iter().enumerate() {
                s += &format!(" {:>w$}", e, w = widths[c]);
            }
            s.push('\n');
        }
        s
    }
}

/// Builds `A`: row `q ≠ (d−1)` reads `(n − #q) c_{q↑(#q+1)} + Σ_{j ≤ #q} c_{q↑j}`,
/// and row `(d−1)` reads `(n − 1 − t_{(d−1,1)}) c_{(d−1,1)} − Σ_{other λ} t_λ c_λ`.
pub fn build_symmetric_matrix(n: usize, d: usize) -> Result<SymmetricSystem> {
    if d < 2 {
        return Err(Error::Argument("the symmetric system needs d ≥ 2".into()));
    }
    let rows = enumerate_partitions(d - 1);
    let cols = non_row_partitions(d);
    let pos: BTreeMap<&Partition, usize> = cols.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let hook = Partition::new(vec![d - 1, 1])?;
    let mut entries = vec![vec![AffineEntry::default(); cols.len()]; rows.len()];
    for (r, q) in rows.iter().enumerate() {
        if *q == Partition::row(d - 1) {
            for l in &cols {
                entries[r][pos[l]].add_t(l, -1);
            }
            entries[r][pos[&hook]].add_constant(n as i64 - 1);
        } else {
            let s = q.len();
            entries[r][pos[&q.up(s + 1)?]].add_constant(n as i64 - s as i64);
            for j in 1..=s {
                entries[r][pos[&q.up(j)?]].add_constant(1);
            }
        }
    }
    Ok(SymmetricSystem { n, d, rows, cols, entries })
}

/// Outcome of the `A′` analysis.
#[derive(Clone, Debug, Serialize)]
pub struct AprimeAnalysis {
    pub n: usize,
    pub d: usize,
    /// `det A′` at `t = 0`, computed over the rationals.
    pub det_at_zero: String,
    /// `(n − 1) · Π_{q ⊢ d−1, q ≠ (d−1)} (n − #q)`.
    pub predicted_det_at_zero: i128,
    pub factorization_holds: bool,
    /// `det A′` is affine-linear in `t` (second and mixed differences vanish).
    pub det_affine_in_t: bool,
    /// Rank of `A` at the supplied `t`.
    pub rank: usize,
    pub full_rank: bool,
    pub solution_dim: usize,
    /// `P(d) − P(d−1) − 1`.
    pub expected_solution_dim: usize,
}

/// `(n − 1) · Π_{q ⊢ d−1, q ≠ (d−1)} (n − #q)`.
pub fn predicted_aprime_det_at_zero(n: usize, d: usize) -> i128 {
    enumerate_partitions(d - 1)
        .iter()
        .filter(|q| **q != Partition::row(d - 1))
        .map(|q| n as i128 - q.len() as i128)
        .product::<i128>()
        * (n as i128 - 1)
}

/// Analyzes `A` and `A′` at parameter point `t` (and always at `t = 0`).
pub fn analyze_aprime<F: Field>(t: &TParams<F>, n: usize) -> Result<AprimeAnalysis> {
    let d = t.d;
    if n < d || d < 2 {
        return Err(Error::Argument(format!("the A′ analysis needs n ≥ d ≥ 2 (n = {n}, d = {d})")));
    }
    let p = t.field.characteristic();
    if p != 0 && (p as usize) <= n {
        return Err(Error::Argument(format!("prime {p} must exceed n = {n} for this analysis")));
    }
    let sys = build_symmetric_matrix(n, d)?;
    let zero_q = TParams::zero(&Rationals, d);
    let det0 = sys.aprime(&zero_q).determinant()?;
    let predicted = predicted_aprime_det_at_zero(n, d);
    let factorization_holds = det0 == Rationals.from_i64(predicted as i64);
    let det_affine_in_t = aprime_det_is_affine(&sys, t)?;
    let rank = sys.specialize(t).rank();
    Ok(AprimeAnalysis {
        n,
        d,
        det_at_zero: Rationals.display(&det0),
        predicted_det_at_zero: predicted,
        factorization_holds,
        det_affine_in_t,
        rank,
        full_rank: rank == sys.rows.len(),
        solution_dim: sys.cols.len() - rank,
        expected_solution_dim: partition_count(d) - partition_count(d - 1) - 1,
    })
}

/// Exact finite differences of `det A′` around `t`: for every parameter the
/// second difference vanishes, and for every pair the mixed difference does.
fn aprime_det_is_affine<F: Field>(sys: &SymmetricSystem, t: &TParams<F>) -> Result<bool> {
    let f = &t.field;
    let det_at = |shifts: &[(&Partition, i64)]| -> Result<F::Elem> {
        let mut values = t.t.clone();
        for (l, s) in shifts {
            let v = values.get_mut(*l).expect("parameter exists");
            *v = f.add(v, &f.from_i64(*s));
        }
        sys.aprime(&TParams::from_t(f, t.d, values)?).determinant()
    };
    let base = det_at(&[])?;
    let keys: Vec<&Partition> = t.t.keys().collect();
    for (a, la) in keys.iter().enumerate() {
        let one = det_at(&[(la, 1)])?;
        let two = det_at(&[(la, 2)])?;
        if f.add(&f.sub(&two, &f.add(&one, &one)), &base) != f.zero() {
            return Ok(false);
        }
        for lb in &keys[a + 1..] {
            let both = det_at(&[(la, 1), (lb, 1)])?;
            let only_b = det_at(&[(lb, 1)])?;
            if f.add(&f.sub(&f.sub(&both, &one), &only_b), &base) != f.zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Summary of one `(n, d, t)` evaluation of the relation space.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub d: usize,
    pub full_solution_dim: usize,
    pub oracle_dim: usize,
    pub symmetric_solution_dim: usize,
    pub expected_dim: usize,
    pub component_symmetric: bool,
    /// Full-system solutions and the inverse-system relations span the same space.
    pub spaces_agree: bool,
}

/// Full system, symmetric system and inverse-system oracle at one parameter point.
pub fn relation_report<F: Field>(t: &TParams<F>, n: usize) -> Result<RelationReport> {
    let full = build_full_system(t, n)?;
    let oracle = linear_relations_of_w(t, n)?;
    let f = &t.field;
    let flatten = |tuples: Vec<Vec<Vec<F::Elem>>>| -> Vec<Vec<F::Elem>> { tuples.into_iter().map(|t| t.into_iter().flatten().collect()).collect() };
    let width = full.cols.len();
    let a = RowSpace::from_rows(f, width, flatten(full.as_tuples()));
    let b = RowSpace::from_rows(f, width, flatten(oracle.basis.clone()));
    let sym = build_symmetric_matrix(n, t.d)?;
    let sym_rank = sym.specialize(t).rank();
    Ok(RelationReport {
        n,
        d: t.d,
        full_solution_dim: full.solution_dim(),
        oracle_dim: oracle.dim(),
        symmetric_solution_dim: sym.cols.len() - sym_rank,
        expected_dim: partition_count(t.d) - partition_count(t.d - 1) - 1,
        component_symmetric: full.solutions_are_component_symmetric(),
        spaces_agree: a.same_space(&b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, DEFAULT_PRIME};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn quintic_rows() {
        let s = build_symmetric_matrix(7, 5).unwrap();
        assert_eq!(s.rows, vec![p(&[1, 1, 1, 1]), p(&[2, 1, 1]), p(&[2, 2]), p(&[3, 1]), p(&[4])]);
        assert_eq!(s.cols.len(), 6);
        let row0: Vec<i64> = s.entries[0].iter().map(|e| e.constant).collect();
        assert_eq!(row0, vec![3, 4, 0, 0, 0, 0]);
        let row1: Vec<i64> = s.entries[1].iter().map(|e| e.constant).collect();
        assert_eq!(row1, vec![0, 4, 2, 1, 0, 0]);
        let row2: Vec<i64> = s.entries[2].iter().map(|e| e.constant).collect();
        assert_eq!(row2, vec![0, 0, 5, 0, 2, 0]);
        let row3: Vec<i64> = s.entries[3].iter().map(|e| e.constant).collect();
        assert_eq!(row3, vec![0, 0, 0, 5, 1, 1]);
        let last = &s.entries[4];
        assert_eq!(last[5].constant, 6);
        assert_eq!(last[5].t.get(&p(&[4, 1])), Some(&-1));
        for (c, l) in s.cols.iter().enumerate().take(5) {
            assert_eq!(last[c].constant, 0);
            assert_eq!(last[c].t.get(l), Some(&-1));
        }
        assert_eq!(s.aprime_columns(), vec![0, 1, 2, 3, 5]);
    }

    #[test]
    fn aprime_determinant_at_zero() {
        for n in [5usize, 6, 7, 10] {
            let n_i = n as i128;
            assert_eq!(predicted_aprime_det_at_zero(n, 5), (n_i - 4) * (n_i - 3) * (n_i - 2).pow(2) * (n_i - 1));
            let a = analyze_aprime(&TParams::zero(&Rationals, 5), n).unwrap();
            assert!(a.factorization_holds);
            assert!(a.det_affine_in_t);
            assert_eq!((a.solution_dim, a.expected_solution_dim), (1, 1));
        }
        // d = 3: A′ is 2×2 with determinant (n − 2)(n − 1).
        let s = build_symmetric_matrix(6, 3).unwrap();
        let det = s.aprime(&TParams::zero(&Rationals, 3)).determinant().unwrap();
        assert_eq!(det, Rationals.from_i64(20));
    }

    #[test]
    fn full_system_matches_inverse_system() {
        let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
        for d in 2..=4 {
            for n in [d, d + 2] {
                for seed in 0..3 {
                    let t = TParams::random(&fp, d, seed, 1, 1000);
                    let r = relation_report(&t, n).unwrap();
                    assert_eq!(r.full_solution_dim, r.oracle_dim);
                    assert!(r.spaces_agree);
                    assert_eq!(r.full_solution_dim, r.expected_dim);
                    assert!(r.component_symmetric);
                }
                let r = relation_report(&TParams::zero(&Rationals, d), n).unwrap();
                assert_eq!(r.full_solution_dim, r.expected_dim);
                assert!(r.spaces_agree && r.component_symmetric);
            }
        }
    }

    #[test]
    fn affine_entry_display() {
        let s = build_symmetric_matrix(5, 3).unwrap();
        assert_eq!(s.entries[1][1].to_string(), "4-t(2,1)");
        assert_eq!(s.entries[1][0].to_string(), "-t(1,1,1)");
    }
}
