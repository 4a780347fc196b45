//! Quotient algebras `A = R/I` for ideals generated in one degree: graded pieces,
//! normal forms, Macaulay inverse systems, Hilbert functions, socles, the
//! linear-relation spaces `L_{F_1,…,F_a}`, and the narrow/compressed classification.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{HomogeneousSpan, Matrix, RowSpace, Side};
use crate::module::GradedModule;
use crate::monomial::{count_monomials, Monomial, MonomialBasis};
use crate::partitions::enumerate_partitions;
use crate::perm::Permutation;
use crate::poly::{DualElement, Polynomial};
use crate::psi::PsiIdeal;

/// One graded piece `R_j ⊇ I_j`, with `A_j` spanned by the standard monomials.
#[derive(Clone, Debug)]
struct Piece<F: Field> {
    basis: Arc<MonomialBasis>,
    ideal: RowSpace<F>,
    /// Position in `A_j` of each free (standard) column of `R_j`.
    std_pos: HashMap<usize, usize>,
}

impl<F: Field> Piece<F> {
    fn new(basis: Arc<MonomialBasis>, ideal: RowSpace<F>) -> Self {
        let std_pos = ideal.free_columns().iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Piece { basis, ideal, std_pos }
    }

    fn dim_a(&self) -> usize {
        self.ideal.free_columns().len()
    }

    /// Normal form of the monomial in column `c`, as coordinates in `A_j`.
    fn normal_form(&self, field: &F, c: usize) -> Vec<F::Elem> {
        let mut v = vec![field.zero(); self.dim_a()];
        if let Some(&p) = self.std_pos.get(&c) {
            v[p] = field.one();
        } else {
            let r = self.ideal.pivot_row(c).expect("non-standard column is a pivot");
            let row = &self.ideal.rows()[r];
            for (p, &fc) in self.ideal.free_columns().iter().enumerate() {
                v[p] = field.neg(&row[fc]);
            }
        }
        v
    }
}

/// `A = R/I` for an ideal generated by a subspace of `R_d`, computed degree by
/// degree up to a cap (`I_j = R_1 · I_{j−1}` for `j > d`).
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<F: Field> {
    field: F,
    n: usize,
    gen_degree: usize,
    cap: usize,
    pieces: Vec<Piece<F>>,
    artinian: bool,
}

impl<F: Field> QuotientAlgebra<F> {
    /// The quotient by the ideal generated by `generators ⊆ R_d` (coordinates in the
    /// decreasing-lex basis of `R_d`), computed up to degree `cap`.
    pub fn from_generators(field: &F, n: usize, d: usize, generators: RowSpace<F>, cap: usize) -> Result<Self> {
        let basis_d = Arc::new(MonomialBasis::new(n, d));
        if generators.ambient_dim() != basis_d.len() {
            return Err(Error::Config("generator space has the wrong ambient dimension".into()));
        }
        if generators.dim() == 0 {
            return Err(Error::Argument("the zero ideal has no initial degree".into()));
        }
        if cap < d {
            return Err(Error::Argument(format!("degree cap {cap} is below the generator degree {d}")));
        }
        let mut pieces = Vec::new();
        for j in 0..d {
            let b = Arc::new(MonomialBasis::new(n, j));
            let len = b.len();
            pieces.push(Piece::new(b, RowSpace::new(field, len)));
        }
        pieces.push(Piece::new(basis_d, generators));
        let mut artinian = pieces[d].dim_a() == 0;
        let mut j = d;
        while !artinian && j < cap {
            let prev = &pieces[j];
            let next_basis = Arc::new(MonomialBasis::new(n, j + 1));
            let mut space = RowSpace::new(field, next_basis.len());
            'fill: for row in prev.ideal.rows() {
                let p = Polynomial::from_coords(field.clone(), &prev.basis, row);
                for k in 0..n {
                    space.insert(p.times_var(k).coords(&next_basis)?);
                    if space.dim() == next_basis.len() {
                        break 'fill;
                    }
                }
            }
            pieces.push(Piece::new(next_basis, space));
            j += 1;
            artinian = pieces[j].dim_a() == 0;
        }
        if artinian {
            pieces.pop();
        }
        Ok(QuotientAlgebra { field: field.clone(), n, gen_degree: d, cap, pieces, artinian })
    }

    /// `R/(f)_{S_n}` with the default cap `d + n`.
    pub fn from_psi(ideal: &PsiIdeal<F>) -> Result<Self> {
        Self::from_psi_with_cap(ideal, ideal.d + ideal.n)
    }

    pub fn from_psi_with_cap(ideal: &PsiIdeal<F>, cap: usize) -> Result<Self> {
        Self::from_generators(ideal.field(), ideal.n, ideal.d, ideal.span.clone(), cap)
    }

    /// `R/m^d` (the generators are all of `R_d`).
    pub fn power_of_maximal_ideal(field: &F, n: usize, d: usize) -> Result<Self> {
        let len = count_monomials(n, d);
        Self::from_generators(field, n, d, RowSpace::full(field, len), d)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// The degree of the generators, i.e. the initial degree `t(I)`.
    pub fn initial_degree(&self) -> usize {
        self.gen_degree
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_artinian(&self) -> bool {
        self.artinian
    }

    /// Largest computed degree (the top degree of `A` when artinian).
    pub fn top_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    /// `HF_A(j)` for the computed degrees `0..=top`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.pieces.iter().map(Piece::dim_a).collect()
    }

    /// `HF_A(j)`; zero above the top degree of an artinian algebra.
    pub fn hf(&self, j: usize) -> usize {
        self.pieces.get(j).map_or(0, Piece::dim_a)
    }

    /// Standard monomials spanning `A_j`.
    pub fn standard_monomials(&self, j: usize) -> Vec<Monomial> {
        match self.pieces.get(j) {
            Some(p) => p.ideal.free_columns().iter().map(|&c| p.basis.get(c).clone()).collect(),
            None => Vec::new(),
        }
    }

    /// `I_j` as a subspace of `R_j` (all of `R_j` above the top degree).
    pub fn ideal_component(&self, j: usize) -> HomogeneousSpan<F> {
        match self.pieces.get(j) {
            Some(p) => HomogeneousSpan { basis: p.basis.clone(), side: Side::Ring, space: p.ideal.clone() },
            None => {
                let basis = Arc::new(MonomialBasis::new(self.n, j));
                let len = basis.len();
                HomogeneousSpan { basis, side: Side::Ring, space: RowSpace::full(&self.field, len) }
            }
        }
    }

    /// Coordinates in `A_j` of the class of a degree-`j` polynomial.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Vec<F::Elem>> {
        let j = match p.homogeneous_degree() {
            Some(j) => j,
            None if p.is_zero() => return Ok(Vec::new()),
            None => return Err(Error::Argument("normal form of an inhomogeneous polynomial".into())),
        };
        let Some(piece) = self.pieces.get(j) else {
            return Ok(Vec::new());
        };
        let f = &self.field;
        let mut out = vec![f.zero(); piece.dim_a()];
        for (m, c) in p.terms() {
            let col = piece.basis.index_of(m).expect("monomial of degree j");
            for (o, x) in out.iter_mut().zip(piece.normal_form(f, col)) {
                if !f.is_zero(&x) {
                    *o = f.add(o, &f.mul(c, &x));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `x_k : A_j → A_{j+1}` (column convention).
    pub fn mult_matrix(&self, k: usize, j: usize) -> Matrix<F> {
        let f = &self.field;
        let src = &self.pieces[j];
        let Some(dst) = self.pieces.get(j + 1) else {
            return Matrix::zeros(f, 0, src.dim_a());
        };
        let mut m = Matrix::zeros(f, dst.dim_a(), src.dim_a());
        for (col, &c) in src.ideal.free_columns().iter().enumerate() {
            let target = src.basis.get(c).times_var(k);
            let nf = dst.normal_form(f, dst.basis.index_of(&target).expect("degree j+1"));
            for (row, x) in nf.into_iter().enumerate() {
                m.set(row, col, x);
            }
        }
        m
    }

    /// Matrix of `σ : A_j → A_j`.
    pub fn action_matrix(&self, sigma: &Permutation, j: usize) -> Matrix<F> {
        let f = &self.field;
        let piece = &self.pieces[j];
        let mut m = Matrix::zeros(f, piece.dim_a(), piece.dim_a());
        for (col, &c) in piece.ideal.free_columns().iter().enumerate() {
            let target = piece.basis.get(c).permuted(sigma.images());
            let nf = piece.normal_form(f, piece.basis.index_of(&target).expect("same degree"));
            for (row, x) in nf.into_iter().enumerate() {
                m.set(row, col, x);
            }
        }
        m
    }

    fn require_artinian(&self) -> Result<()> {
        if self.artinian {
            Ok(())
        } else {
            Err(Error::NonArtinian { cap: self.cap })
        }
    }

    /// `A` as a finite-length graded module; with `equivariant`, the action of one
    /// representative per cycle type is attached (valid when `I` is `S_n`-stable).
    pub fn to_module(&self, equivariant: bool) -> Result<GradedModule<F>> {
        self.require_artinian()?;
        let top = self.top_degree();
        let mult = (0..self.n).map(|k| (0..=top).map(|j| self.mult_matrix(k, j)).collect()).collect();
        let mut m = GradedModule::new(&self.field, self.n, 0, self.hilbert(), mult)?;
        if equivariant {
            for mu in enumerate_partitions(self.n) {
                let sigma = Permutation::of_cycle_type(&mu);
                let mats = (0..=top).map(|j| self.action_matrix(&sigma, j)).collect();
                m.add_action(sigma, mats)?;
            }
        }
        Ok(m)
    }

    /// `Soc(A)_i = ∩_k ker(x_k : A_i → A_{i+1})`.
    pub fn socle_dim(&self, i: usize) -> usize {
        let Some(piece) = self.pieces.get(i) else {
            return 0;
        };
        let dim = piece.dim_a();
        if i + 1 >= self.pieces.len() {
            return if self.artinian { dim } else { 0 };
        }
        let rows: Vec<Vec<F::Elem>> =
            (0..self.n).flat_map(|k| self.mult_matrix(k, i).into_rows()).collect();
        let stacked = Matrix::from_rows(&self.field, dim, rows);
        dim - stacked.rank()
    }

    /// `(I^⊥)_{−j}`: dual elements of degree `−j` killed by `I_j` under contraction.
    pub fn inverse_system_component(&self, j: usize) -> HomogeneousSpan<F> {
        let ideal = self.ideal_component(j);
        let ann = ideal.space.annihilator();
        let space = RowSpace::from_rows(&self.field, ideal.basis.len(), ann);
        HomogeneousSpan { basis: ideal.basis, side: Side::Dual, space }
    }

    /// The inverse system `I^⊥ ⊆ S` as a graded module (degrees `−top..=0`), acted
    /// on by contraction and, with `equivariant`, by relabelling.
    pub fn inverse_system_module(&self, equivariant: bool) -> Result<GradedModule<F>> {
        self.require_artinian()?;
        let f = &self.field;
        let top = self.top_degree();
        let comps: Vec<HomogeneousSpan<F>> = (0..=top).map(|j| self.inverse_system_component(j)).collect();
        // Module index idx ↔ degree −top + idx ↔ component j = top − idx.
        let dims: Vec<usize> = (0..=top).rev().map(|j| comps[j].dim()).collect();
        let mut mult = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let mut family = Vec::with_capacity(top + 1);
            for idx in 0..=top {
                let j = top - idx;
                let src = &comps[j];
                if j == 0 {
                    family.push(Matrix::zeros(f, 0, src.dim()));
                    continue;
                }
                let dst = &comps[j - 1];
                let mut m = Matrix::zeros(f, dst.dim(), src.dim());
                for (col, g) in src.duals().iter().enumerate() {
                    let h = Polynomial::term(f.clone(), Monomial::var(self.n, k), f.one()).contract(g)?;
                    let coords = dst.space.coordinates(&h.coords(&dst.basis)?).ok_or_else(|| {
                        Error::Validation("inverse system is not closed under contraction".into())
                    })?;
                    for (row, x) in coords.into_iter().enumerate() {
                        m.set(row, col, x);
                    }
                }
                family.push(m);
            }
            mult.push(family);
        }
        let mut module = GradedModule::new(f, self.n, -(top as i32), dims, mult)?;
        if equivariant {
            for mu in enumerate_partitions(self.n) {
                let sigma = Permutation::of_cycle_type(&mu);
                let mut mats = Vec::with_capacity(top + 1);
                for j in (0..=top).rev() {
                    let c = &comps[j];
                    let mut m = Matrix::zeros(f, c.dim(), c.dim());
                    for (col, g) in c.duals().iter().enumerate() {
                        let h = g.permute(&sigma)?;
                        let coords = c.space.coordinates(&h.coords(&c.basis)?).ok_or_else(|| {
                            Error::Validation("inverse system is not stable under the group".into())
                        })?;
                        for (row, x) in coords.into_iter().enumerate() {
                            m.set(row, col, x);
                        }
                    }
                    mats.push(m);
                }
                module.add_action(sigma, mats)?;
            }
        }
        Ok(module)
    }
}

/// Hilbert function, socle type and the invariants `t(I)`, `s(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSocle {
    pub hilbert: Vec<usize>,
    /// `socle[i] = dim Soc(A)_i`.
    pub socle: Vec<usize>,
    pub t: usize,
    pub s: usize,
}

impl HilbertSocle {
    /// Socle polynomial as text, e.g. `5z^2 + 2z^3`.
    pub fn socle_polynomial(&self) -> String {
        let terms: Vec<String> = self
            .socle
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match i {
                0 => format!("{e}"),
                1 => format!("{e}z"),
                _ => format!("{e}z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Computes the Hilbert function and socle of an artinian quotient and asserts
/// the bound `t(I) ≤ s(A) + 1`.
pub fn hilbert_and_socle<F: Field>(a: &QuotientAlgebra<F>) -> Result<HilbertSocle> {
    a.require_artinian()?;
    let hilbert = a.hilbert();
    let socle: Vec<usize> = (0..hilbert.len()).map(|i| a.socle_dim(i)).collect();
    let s = socle.iter().rposition(|&e| e > 0).expect("artinian algebras have a nonzero socle");
    let t = a.initial_degree();
    if t > s + 1 {
        return Err(Error::Validation(format!("initial degree {t} exceeds top socle degree {s} + 1")));
    }
    Ok(HilbertSocle { hilbert, socle, t, s })
}

/// The space `L_{F_1,…,F_a}` of tuples of linear forms with `Σ ℓ_i ∘ F_i = 0`.
#[derive(Clone, Debug)]
pub struct LSpace<F: Field> {
    pub field: F,
    pub n: usize,
    pub a: usize,
    /// Basis tuples: `basis[r][i][k]` is the coefficient of `x_{k+1}` in `ℓ_{i+1}`.
    pub basis: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> LSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The span in `R_1` of all components of all basis tuples.
    pub fn component_span(&self) -> RowSpace<F> {
        let rows = self.basis.iter().flat_map(|t| t.iter().cloned()).collect();
        RowSpace::from_rows(&self.field, self.n, rows)
    }

    /// `Some(x)` when every component is a multiple of one linear form `x`
    /// (`L ⊆ x·R_0^a`); `Some(None)` when `L = 0`; `None` otherwise.
    pub fn common_linear_form(&self) -> Option<Option<Polynomial<F>>> {
        let span = self.component_span();
        match span.dim() {
            0 => Some(None),
            1 => {
                let basis = MonomialBasis::new(self.n, 1);
                Some(Some(Polynomial::from_coords(self.field.clone(), &basis, &span.rows()[0])))
            }
            _ => None,
        }
    }

    /// Whether every component of every basis tuple is a multiple of `x`.
    pub fn components_multiple_of(&self, x: &[F::Elem]) -> bool {
        let line = RowSpace::from_rows(&self.field, self.n, vec![x.to_vec()]);
        self.basis.iter().flatten().all(|c| line.contains(c))
    }
}

/// `L_{F_1,…,F_a}` for linearly independent dual elements of one degree `−d`.
pub fn linear_relations<F: Field>(field: &F, n: usize, family: &[DualElement<F>]) -> Result<LSpace<F>> {
    let a = family.len();
    let d = match family.first() {
        None => return Ok(LSpace { field: field.clone(), n, a: 0, basis: Vec::new() }),
        Some(g) => g.degree().ok_or_else(|| Error::Argument("dual elements must be nonzero and homogeneous".into()))?,
    };
    let deg = (-d) as usize;
    let basis = MonomialBasis::new(n, deg);
    let mut coords = Vec::with_capacity(a);
    for g in family {
        if g.nvars() != n {
            return Err(Error::Config("dual element has the wrong number of variables".into()));
        }
        if g.degree() != Some(d) {
            return Err(Error::MixedDegrees { expected: d, found: g.degree().unwrap_or(0) });
        }
        coords.push(g.coords(&basis)?);
    }
    let rank = Matrix::from_rows(field, basis.len(), coords).rank();
    if rank < a {
        return Err(Error::Dependent { rank, len: a });
    }
    if deg == 0 {
        // Linear forms kill constants: every tuple is a relation.
        let basis = (0..a)
            .flat_map(|i| (0..n).map(move |k| (i, k)))
            .map(|(i, k)| {
                let mut t = vec![vec![field.zero(); n]; a];
                t[i][k] = field.one();
                t
            })
            .collect();
        return Ok(LSpace { field: field.clone(), n, a, basis });
    }
    let lower = MonomialBasis::new(n, deg - 1);
    // Column (i, k) holds the coordinates of x_k ∘ F_i in S_{−(d−1)}.
    let mut cols = Vec::with_capacity(a * n);
    for g in family {
        for k in 0..n {
            let x = Polynomial::term(field.clone(), Monomial::var(n, k), field.one());
            cols.push(x.contract(g)?.coords(&lower)?);
        }
    }
    let m = Matrix::from_rows(field, lower.len(), cols).transpose();
    let basis = m
        .kernel()
        .into_iter()
        .map(|v| (0..a).map(|i| v[i * n..(i + 1) * n].to_vec()).collect())
        .collect();
    Ok(LSpace { field: field.clone(), n, a, basis })
}

/// Structural classification of an artinian quotient.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub hilbert: Vec<usize>,
    pub socle: Vec<usize>,
    pub socle_polynomial: String,
    pub t: usize,
    pub s: usize,
    pub narrow: bool,
    pub extremely_narrow: bool,
    /// Common linear form `x` with `L ⊆ x R_0^a` (absent when `L = 0` or not applicable).
    pub witness: Option<String>,
    pub l_dim: Option<usize>,
    pub compressed: bool,
    pub permissible_socle: bool,
    pub gorenstein: bool,
}

/// Narrow / extremely narrow / compressed / permissible / Gorenstein.
pub fn classify<F: Field>(a: &QuotientAlgebra<F>) -> Result<Classification> {
    let hs = hilbert_and_socle(a)?;
    let n = a.nvars();
    let (t, s) = (hs.t, hs.s);
    let narrow = t >= s;
    let mut extremely_narrow = false;
    let mut witness = None;
    let mut l_dim = None;
    if s == t {
        let family = a.inverse_system_component(t).duals();
        let l = linear_relations(a.field(), n, &family)?;
        l_dim = Some(l.dim());
        if let Some(form) = l.common_linear_form() {
            extremely_narrow = true;
            witness = form.map(|p| p.to_string());
        }
    }
    let e = &hs.socle;
    let r = |i: i64| if i < 0 { 0 } else { count_monomials(n, i as usize) };
    let compressed = (0..=s).all(|i| {
        let bound: usize = (i..=s).map(|j| e[j] * r((j - i) as i64)).sum();
        hs.hilbert[i] == r(i as i64).min(bound)
    });
    let permissible_socle = {
        let t = t as i64;
        let low_ok = e.iter().enumerate().all(|(i, &x)| (i as i64) >= t - 1 || x == 0);
        let tail = |shift: i64| -> usize {
            e.iter().enumerate().filter(|(i, _)| (*i as i64) >= t).map(|(i, &x)| x * r(i as i64 - shift)).sum()
        };
        let cond2 = tail(t) < r(t);
        let e_tm1 = if t >= 1 { e.get((t - 1) as usize).copied().unwrap_or(0) } else { 0 };
        let cond3 = e_tm1 as i64 == (r(t - 1) as i64 - tail(t - 1) as i64).max(0);
        low_ok && e[s] > 0 && cond2 && cond3
    };
    let gorenstein = e.iter().sum::<usize>() == 1;
    Ok(Classification {
        socle_polynomial: hs.socle_polynomial(),
        hilbert: hs.hilbert,
        socle: hs.socle,
        t,
        s,
        narrow,
        extremely_narrow,
        witness,
        l_dim,
        compressed,
        permissible_socle,
        gorenstein,
    })
}

/// Sufficient test for `d`-extreme narrowness from an independent family
/// `F ⊆ (I^⊥)_{−d}` of size `a`: if `dim A_d ≤ a` and all components of `L_F` lie
/// on one line, returns the predicted socle coefficients `(b, a)` of
/// `b z^{d−1} + a z^d` with `b = dim R_{d−1} − a·n + dim L_F`.
pub fn extreme_narrowness_certificate<F: Field>(
    a: &QuotientAlgebra<F>,
    family: &[DualElement<F>],
) -> Result<Option<(usize, usize)>> {
    let d = a.initial_degree();
    let n = a.nvars();
    let size = family.len();
    if a.hf(d) > size {
        return Ok(None);
    }
    let l = linear_relations(a.field(), n, family)?;
    if l.common_linear_form().is_none() {
        return Ok(None);
    }
    let b = (count_monomials(n, d - 1) + l.dim()) as i64 - (size * n) as i64;
    Ok(Some((b.max(0) as usize, size)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::partitions::{monomial_symmetric, Partition};
    use crate::psi::orbit_span;

    fn psi(s: &str, n: usize) -> QuotientAlgebra<Rationals> {
        let f = Polynomial::parse(Rationals, s, Some(n)).unwrap();
        QuotientAlgebra::from_psi(&orbit_span(&f).unwrap()).unwrap()
    }

    #[test]
    fn example_quadric_inverse_system() {
        for n in 2..6 {
            let a = psi("x1^2 - x2^2 + x1*x2", n);
            assert_eq!(a.hilbert(), vec![1, n, 1]);
            let comp = a.inverse_system_component(2);
            assert_eq!(comp.dim(), 1);
            let sum = monomial_symmetric(&Rationals, &Partition::row(2), n).unwrap();
            assert!(comp.contains_dual(&sum).unwrap());
            assert_eq!(a.inverse_system_component(1).dim(), n);
            let c = classify(&a).unwrap();
            assert!(c.narrow && c.extremely_narrow && c.gorenstein);
            assert_eq!(c.l_dim, Some(0));
        }
    }

    #[test]
    fn cube_of_maximal_ideal() {
        let a = QuotientAlgebra::power_of_maximal_ideal(&Rationals, 3, 3).unwrap();
        let hs = hilbert_and_socle(&a).unwrap();
        assert_eq!(hs.hilbert, vec![1, 3, 6]);
        assert_eq!(hs.socle, vec![0, 0, 6]);
        assert_eq!((hs.t, hs.s), (3, 2));
        let c = classify(&a).unwrap();
        assert!(c.narrow && !c.extremely_narrow);
    }

    #[test]
    fn module_structures_validate() {
        let a = psi("x1^2 - x2^2 + x1*x2", 3);
        let m = a.to_module(true).unwrap();
        assert_eq!(m.dims(), &[1, 3, 1]);
        let d = a.inverse_system_module(true).unwrap();
        assert_eq!(d.dims(), &[1, 3, 1]);
        assert_eq!(d.min_degree(), -2);
    }

    #[test]
    fn relations_of_a_single_power() {
        let n = 4;
        let g = DualElement::parse(Rationals, "y1^(3)", Some(n)).unwrap();
        let l = linear_relations(&Rationals, n, &[g.clone()]).unwrap();
        assert_eq!(l.dim(), n - 1);
        assert!(linear_relations(&Rationals, n, &[g.clone(), g.scale(&Rationals.from_i64(2))]).is_err());
    }

    #[test]
    fn non_artinian_is_flagged() {
        // The ideal (x1^2) in two variables never becomes zero.
        let f = Polynomial::parse(Rationals, "x1^2", Some(2)).unwrap();
        let basis = MonomialBasis::new(2, 2);
        let span = RowSpace::from_rows(&Rationals, 3, vec![f.coords(&basis).unwrap()]);
        let a = QuotientAlgebra::from_generators(&Rationals, 2, 2, span, 6).unwrap();
        assert!(!a.is_artinian());
        assert!(matches!(hilbert_and_socle(&a), Err(Error::NonArtinian { cap: 6 })));
    }
}
