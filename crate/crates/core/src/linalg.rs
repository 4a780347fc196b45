//! Dense matrices over a [`Field`] and reduced row-echelon subspaces.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::MonomialBasis;
use crate::poly::{DualElement, Polynomial};

/// A dense `rows × cols` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<Vec<F::Elem>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![vec![field.zero(); cols]; rows] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    /// Builds a matrix from row vectors of length `cols`.
    pub fn from_rows(field: &F, cols: usize, data: Vec<Vec<F::Elem>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { field: field.clone(), rows: data.len(), cols, data }
    }

    pub fn from_i64(field: &F, data: &[Vec<i64>]) -> Self {
        let cols = data.first().map_or(0, Vec::len);
        let rows = data.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i][j] = v;
    }

    /// `self[i][j] += v`.
    pub fn add_at(&mut self, i: usize, j: usize, v: &F::Elem) {
        self.data[i][j] = self.field.add(&self.data[i][j], v);
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i]
    }

    pub fn into_rows(self) -> Vec<Vec<F::Elem>> {
        self.data
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols).map(|j| self.column(j)).collect();
        Matrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|x| self.field.is_zero(x)))
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !f.is_zero(b) {
                        out.data[i][j] = f.add(&out.data[i][j], &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let f = &self.field;
        self.data
            .iter()
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in r.iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, &self.data[i][i]))
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            let t = self.transpose();
            return self.field.echelon(t.data, t.cols, false).pivots.len();
        }
        self.field.echelon(self.data.clone(), self.cols, false).pivots.len()
    }

    /// A basis of `{x : self·x = 0}`, one vector per non-pivot column.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let ech = f.echelon(self.data.clone(), self.cols, true);
        kernel_from_rref(f, &ech.rows, &ech.pivots, self.cols)
    }

    /// The row space as a [`RowSpace`].
    pub fn row_space(&self) -> RowSpace<F> {
        RowSpace::from_rows(&self.field, self.cols, self.data.clone())
    }

    /// The column space as a [`RowSpace`] of column vectors.
    pub fn column_space(&self) -> RowSpace<F> {
        self.transpose().row_space()
    }

    pub fn determinant(&self) -> Result<F::Elem> {
        if self.rows != self.cols {
            return Err(Error::Argument("determinant of a non-square matrix".into()));
        }
        let f = &self.field;
        let mut a = self.data.clone();
        let n = self.rows;
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(&a[i][c])) else {
                return Ok(f.zero());
            };
            if p != c {
                a.swap(p, c);
                det = f.neg(&det);
            }
            det = f.mul(&det, &a[c][c]);
            let inv = f.inv(&a[c][c]);
            let support: Vec<usize> = (c..n).collect();
            let pivot = a[c].clone();
            for row in a.iter_mut().skip(c + 1) {
                if f.is_zero(&row[c]) {
                    continue;
                }
                let factor = f.mul(&row[c], &inv);
                f.sub_scaled(row, &factor, &pivot, &support);
            }
        }
        Ok(det)
    }
}

/// Kernel basis read off a reduced row-echelon form.
fn kernel_from_rref<F: Field>(f: &F, rows: &[Vec<F::Elem>], pivots: &[usize], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); ncols];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(&rows[r][free]);
            }
            v
        })
        .collect()
}

/// A subspace of `F^ncols` stored as a reduced row-echelon basis with
/// strictly increasing pivot columns. Supports incremental insertion.
#[derive(Clone, Debug)]
pub struct RowSpace<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    /// `row_of[c]` is the row whose pivot is column `c`.
    row_of: Vec<Option<usize>>,
    /// Sorted non-pivot columns; rows vanish outside their pivot and these columns.
    free: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    /// The zero subspace.
    pub fn new(field: &F, ncols: usize) -> Self {
        RowSpace {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of: vec![None; ncols],
            free: (0..ncols).collect(),
        }
    }

    /// The span of `rows` (batch elimination).
    pub fn from_rows(field: &F, ncols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let ech = field.echelon(rows, ncols, true);
        let mut row_of = vec![None; ncols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            row_of[p] = Some(r);
        }
        let free = (0..ncols).filter(|&c| row_of[c].is_none()).collect();
        RowSpace { field: field.clone(), ncols, rows: ech.rows, pivots: ech.pivots, row_of, free }
    }

    /// The whole space `F^ncols`.
    pub fn full(field: &F, ncols: usize) -> Self {
        RowSpace::from_rows(field, ncols, Matrix::identity(field, ncols).into_rows())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Row index whose pivot sits in column `c`.
    pub fn pivot_row(&self, c: usize) -> Option<usize> {
        self.row_of[c]
    }

    /// `v` minus its projection onto the span along pivot columns;
    /// the result vanishes at every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        v
    }

    fn reduce_in_place(&self, v: &mut [F::Elem]) {
        assert_eq!(v.len(), self.ncols, "vector has the wrong length");
        let f = &self.field;
        for (r, &c) in self.pivots.iter().enumerate() {
            if f.is_zero(&v[c]) {
                continue;
            }
            let factor = v[c].clone();
            f.sub_scaled(v, &factor, &self.rows[r], &self.free);
            v[c] = f.zero();
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Coefficients of `v` in the row basis, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    /// Inserts `v`; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let mut v = v;
        self.reduce_in_place(&mut v);
        let f = self.field.clone();
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]);
        let support: Vec<usize> = (p..self.ncols).filter(|&c| !f.is_zero(&v[c])).collect();
        for &c in &support {
            v[c] = f.mul(&v[c], &inv);
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let factor = row[p].clone();
            f.sub_scaled(row, &factor, &v, &support);
        }
        let pos = self.pivots.partition_point(|&c| c < p);
        self.rows.insert(pos, v);
        self.pivots.insert(pos, p);
        for (r, &c) in self.pivots.iter().enumerate().skip(pos) {
            self.row_of[c] = Some(r);
        }
        let fpos = self.free.binary_search(&p).expect("new pivot was a free column");
        self.free.remove(fpos);
        true
    }

    /// Basis of the orthogonal complement `{x : r·x = 0 for every row r}`.
    pub fn annihilator(&self) -> Vec<Vec<F::Elem>> {
        kernel_from_rref(&self.field, &self.rows, &self.pivots, self.ncols)
    }

    /// Equality of subspaces (reduced echelon forms are canonical).
    pub fn same_space(&self, other: &RowSpace<F>) -> bool {
        self.ncols == other.ncols && self.pivots == other.pivots && self.rows == other.rows
    }

    pub fn is_subspace_of(&self, other: &RowSpace<F>) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Which graded ring an ambient monomial basis belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Polynomials in `R_j`.
    Ring,
    /// Dual elements in `S_{−j}`.
    Dual,
}

/// A subspace of one graded piece, with its ambient monomial basis.
#[derive(Clone, Debug)]
pub struct HomogeneousSpan<F: Field> {
    pub basis: Arc<MonomialBasis>,
    pub side: Side,
    pub space: RowSpace<F>,
}

impl<F: Field> HomogeneousSpan<F> {
    pub fn new(field: &F, basis: Arc<MonomialBasis>, side: Side) -> Self {
        let space = RowSpace::new(field, basis.len());
        HomogeneousSpan { basis, side, space }
    }

    /// Signed degree: `j` for `R_j`, `−j` for `S_{−j}`.
    pub fn degree(&self) -> i64 {
        match self.side {
            Side::Ring => self.basis.degree() as i64,
            Side::Dual => -(self.basis.degree() as i64),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis elements as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial<F>> {
        let f = self.space.field();
        self.space.rows().iter().map(|r| Polynomial::from_coords(f.clone(), &self.basis, r)).collect()
    }

    /// Basis elements as dual elements.
    pub fn duals(&self) -> Vec<DualElement<F>> {
        let f = self.space.field();
        self.space.rows().iter().map(|r| DualElement::from_coords(f.clone(), &self.basis, r)).collect()
    }

    pub fn contains_polynomial(&self, p: &Polynomial<F>) -> Result<bool> {
        Ok(self.space.contains(&p.coords(&self.basis)?))
    }

    pub fn contains_dual(&self, g: &DualElement<F>) -> Result<bool> {
        Ok(self.space.contains(&g.coords(&self.basis)?))
    }
}

fn check_degree(expected: i64, found: Option<i64>, zero: bool) -> Result<()> {
    if zero {
        return Ok(());
    }
    match found {
        Some(d) if d == expected => Ok(()),
        Some(d) => Err(Error::MixedDegrees { expected, found: d }),
        None => Err(Error::Argument("inhomogeneous input".into())),
    }
}

/// Reduced row-echelon span of homogeneous polynomials of one degree.
pub fn reduce_to_basis<F: Field>(field: &F, n: usize, degree: usize, vectors: &[Polynomial<F>]) -> Result<HomogeneousSpan<F>> {
    let basis = Arc::new(MonomialBasis::new(n, degree));
    let mut rows = Vec::with_capacity(vectors.len());
    for v in vectors {
        check_degree(degree as i64, v.homogeneous_degree().map(|d| d as i64), v.is_zero())?;
        rows.push(v.coords(&basis)?);
    }
    let space = RowSpace::from_rows(field, basis.len(), rows);
    Ok(HomogeneousSpan { basis, side: Side::Ring, space })
}

/// Reduced row-echelon span of homogeneous dual elements of degree `−degree`.
pub fn reduce_duals_to_basis<F: Field>(field: &F, n: usize, degree: usize, vectors: &[DualElement<F>]) -> Result<HomogeneousSpan<F>> {
    let basis = Arc::new(MonomialBasis::new(n, degree));
    let mut rows = Vec::with_capacity(vectors.len());
    for v in vectors {
        check_degree(-(degree as i64), v.degree(), v.is_zero())?;
        rows.push(v.coords(&basis)?);
    }
    let space = RowSpace::from_rows(field, basis.len(), rows);
    Ok(HomogeneousSpan { basis, side: Side::Dual, space })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_kernel_determinant() {
        let f = Rationals;
        let m = Matrix::from_i64(&f, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| f.is_zero(x)));
        assert!(f.is_zero(&m.determinant().unwrap()));
        let m = Matrix::from_i64(&f, &[vec![2, 1], vec![1, 3]]);
        assert_eq!(m.determinant().unwrap(), f.from_i64(5));
    }

    #[test]
    fn incremental_matches_batch() {
        let p = PrimeField::new(101).unwrap();
        let rows: Vec<Vec<u64>> = vec![vec![0, 3, 1, 4], vec![2, 0, 5, 1], vec![2, 3, 6, 5], vec![0, 0, 1, 7]];
        let mut inc = RowSpace::new(&p, 4);
        let grew: Vec<bool> = rows.iter().map(|r| inc.insert(r.clone())).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        let batch = RowSpace::from_rows(&p, 4, rows);
        assert!(inc.same_space(&batch));
        assert_eq!(inc.free_columns(), &[3]);
    }

    #[test]
    fn spans_of_polynomials() {
        let f = Rationals;
        let ps: Vec<Polynomial<Rationals>> = ["x1^2", "x2^2", "x1^2 + x2^2"]
            .iter()
            .map(|s| Polynomial::parse(f, s, Some(2)).unwrap())
            .collect();
        assert_eq!(reduce_to_basis(&f, 2, 2, &ps).unwrap().dim(), 2);
        assert_eq!(reduce_to_basis(&f, 2, 2, &[]).unwrap().dim(), 0);
        let bad = vec![Polynomial::parse(f, "x1", Some(2)).unwrap()];
        assert!(matches!(reduce_to_basis(&f, 2, 2, &bad), Err(Error::MixedDegrees { .. })));
    }
}
