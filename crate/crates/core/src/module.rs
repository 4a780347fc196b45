//! Finite-length graded modules over `k[x_1, …, x_n]`, given by per-degree
//! dimensions and variable-multiplication matrices, optionally carrying a
//! compatible action of the symmetric group.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::partitions::{enumerate_partitions, Partition};
use crate::perm::Permutation;

/// Action of one permutation: a square matrix on every graded piece.
#[derive(Clone, Debug)]
pub struct GroupElementAction<F: Field> {
    pub sigma: Permutation,
    /// `matrices[idx]` acts on the piece of degree `min_degree + idx`.
    pub matrices: Vec<Matrix<F>>,
}

/// A finite-length graded module `M = ⊕_{j} M_j`, `j ∈ [min_degree, min_degree + len)`.
///
/// Matrices use the column convention: `mult[k][idx]` has `dims[idx+1]` rows and
/// `dims[idx]` columns, sending `M_j → M_{j+1}`; the last piece maps to zero.
#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    field: F,
    n: usize,
    min_degree: i32,
    dims: Vec<usize>,
    mult: Vec<Vec<Matrix<F>>>,
    /// One representative per cycle type.
    actions: BTreeMap<Partition, GroupElementAction<F>>,
}

impl<F: Field> GradedModule<F> {
    /// Builds and validates shapes and commutativity of the variable actions.
    pub fn new(field: &F, n: usize, min_degree: i32, dims: Vec<usize>, mult: Vec<Vec<Matrix<F>>>) -> Result<Self> {
        let m = GradedModule { field: field.clone(), n, min_degree, dims, mult, actions: BTreeMap::new() };
        m.validate_structure()?;
        Ok(m)
    }

    /// The residue field `k` in degree 0, with the trivial group action.
    pub fn residue_field(field: &F, n: usize) -> Self {
        let mult = (0..n).map(|_| vec![Matrix::zeros(field, 0, 1)]).collect();
        let mut m = GradedModule { field: field.clone(), n, min_degree: 0, dims: vec![1], mult, actions: BTreeMap::new() };
        for mu in enumerate_partitions(n) {
            let sigma = Permutation::of_cycle_type(&mu);
            m.actions.insert(mu, GroupElementAction { sigma, matrices: vec![Matrix::identity(field, 1)] });
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn min_degree(&self) -> i32 {
        self.min_degree
    }

    /// One past the top degree.
    pub fn end_degree(&self) -> i32 {
        self.min_degree + self.dims.len() as i32
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dim M_j` (zero outside the stored range).
    pub fn dim(&self, j: i32) -> usize {
        self.index(j).map_or(0, |i| self.dims[i])
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn index(&self, j: i32) -> Option<usize> {
        let i = j - self.min_degree;
        (i >= 0 && (i as usize) < self.dims.len()).then_some(i as usize)
    }

    /// `x_k : M_j → M_{j+1}` (0-based `k`), or `None` when either side is zero.
    pub fn mult_matrix(&self, k: usize, j: i32) -> Option<&Matrix<F>> {
        let i = self.index(j)?;
        self.index(j + 1)?;
        Some(&self.mult[k][i])
    }

    /// `x_k · v` for `v ∈ M_j`, as a vector of `M_{j+1}`.
    pub fn apply_var(&self, k: usize, j: i32, v: &[F::Elem]) -> Vec<F::Elem> {
        match self.mult_matrix(k, j) {
            Some(m) => m.mul_vec(v),
            None => vec![self.field.zero(); self.dim(j + 1)],
        }
    }

    fn validate_structure(&self) -> Result<()> {
        if self.mult.len() != self.n {
            return Err(Error::Validation(format!("expected {} multiplication families, got {}", self.n, self.mult.len())));
        }
        let len = self.dims.len();
        for (k, family) in self.mult.iter().enumerate() {
            if family.len() != len {
                return Err(Error::Validation(format!("x_{} has {} matrices for {len} degrees", k + 1, family.len())));
            }
            for (i, m) in family.iter().enumerate() {
                let rows = if i + 1 < len { self.dims[i + 1] } else { 0 };
                if m.nrows() != rows || m.ncols() != self.dims[i] {
                    return Err(Error::Validation(format!(
                        "x_{} in degree {} has shape {}x{}, expected {rows}x{}",
                        k + 1,
                        self.min_degree + i as i32,
                        m.nrows(),
                        m.ncols(),
                        self.dims[i]
                    )));
                }
            }
        }
        for i in 0..len.saturating_sub(2) {
            for k in 0..self.n {
                for l in k + 1..self.n {
                    let a = self.mult[l][i + 1].mul(&self.mult[k][i]);
                    let b = self.mult[k][i + 1].mul(&self.mult[l][i]);
                    if a != b {
                        return Err(Error::Validation(format!(
                            "x_{} and x_{} do not commute in degree {}",
                            k + 1,
                            l + 1,
                            self.min_degree + i as i32
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Attaches the action of a permutation, checking shapes and the twisted
    /// commutation `σ x_k = x_{σ(k)} σ`.
    pub fn add_action(&mut self, sigma: Permutation, matrices: Vec<Matrix<F>>) -> Result<()> {
        if sigma.len() != self.n {
            return Err(Error::Validation("permutation length differs from n".into()));
        }
        if matrices.len() != self.dims.len() {
            return Err(Error::Validation("one action matrix per degree is required".into()));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.nrows() != self.dims[i] || m.ncols() != self.dims[i] {
                return Err(Error::Validation("action matrices must be square of the piece dimension".into()));
            }
        }
        for i in 0..self.dims.len().saturating_sub(1) {
            for k in 0..self.n {
                let left = matrices[i + 1].mul(&self.mult[k][i]);
                let right = self.mult[sigma.apply(k)][i].mul(&matrices[i]);
                if left != right {
                    return Err(Error::Validation(format!(
                        "action of {sigma} is not compatible with x_{} in degree {}",
                        k + 1,
                        self.min_degree + i as i32
                    )));
                }
            }
        }
        self.actions.insert(sigma.cycle_type(), GroupElementAction { sigma, matrices });
        Ok(())
    }

    /// The stored action for cycle type `mu`.
    pub fn action(&self, mu: &Partition) -> Option<&GroupElementAction<F>> {
        self.actions.get(mu)
    }

    /// Whether an action is stored for every cycle type of `S_n`.
    pub fn has_full_action(&self) -> bool {
        enumerate_partitions(self.n).iter().all(|mu| self.actions.contains_key(mu))
    }

    /// `σ` on `M_j` for the stored representative of `mu`.
    pub fn action_matrix(&self, mu: &Partition, j: i32) -> Option<&Matrix<F>> {
        let i = self.index(j)?;
        Some(&self.actions.get(mu)?.matrices[i])
    }

    /// The graded dual `Hom_k(M, k)` with `(M^∨)_{−j} = (M_j)^∨`, variables acting
    /// by transposes and permutations by inverse transposes.
    pub fn dual(&self) -> Result<GradedModule<F>> {
        let len = self.dims.len();
        let dims: Vec<usize> = self.dims.iter().rev().copied().collect();
        let min_degree = -(self.end_degree() - 1);
        let mut mult = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let mut family = Vec::with_capacity(len);
            for idx in 0..len {
                // Dual piece idx has degree min_degree + idx = −(original degree).
                let orig = len - 1 - idx;
                if orig == 0 {
                    family.push(Matrix::zeros(&self.field, 0, dims[idx]));
                } else {
                    family.push(self.mult[k][orig - 1].transpose());
                }
            }
            mult.push(family);
        }
        let mut out = GradedModule::new(&self.field, self.n, min_degree, dims, mult)?;
        for act in self.actions.values() {
            let mats = act.matrices.iter().rev().map(|m| inverse_matrix(m).map(|x| x.transpose())).collect::<Result<Vec<_>>>()?;
            out.add_action(act.sigma.clone(), mats)?;
        }
        Ok(out)
    }
}

/// Inverse of a square matrix by Gauss–Jordan on `[M | I]`.
pub fn inverse_matrix<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::Argument("inverse of a non-square matrix".into()));
    }
    let f = m.field();
    let rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    let ech = f.echelon(rows, 2 * n, true);
    if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
        return Err(Error::Argument("matrix is singular".into()));
    }
    let data = ech.rows.into_iter().take(n).map(|r| r[n..].to_vec()).collect();
    Ok(Matrix::from_rows(f, n, data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn residue_field_shape() {
        let k = GradedModule::residue_field(&Rationals, 3);
        assert_eq!(k.total_dim(), 1);
        assert!(k.has_full_action());
        assert!(k.mult_matrix(0, 0).is_none());
    }

    #[test]
    fn commutativity_is_enforced() {
        let f = Rationals;
        // k[x1,x2]/(x1,x2)^2 with a broken x2 action in degree 0 → 1.
        let x1 = vec![Matrix::from_i64(&f, &[vec![1], vec![0]]), Matrix::zeros(&f, 0, 2)];
        let x2 = vec![Matrix::from_i64(&f, &[vec![0], vec![1]]), Matrix::zeros(&f, 0, 2)];
        assert!(GradedModule::new(&f, 2, 0, vec![1, 2], vec![x1.clone(), x2]).is_ok());
        // A module with three degrees where x1 x2 ≠ x2 x1.
        let a1 = vec![Matrix::from_i64(&f, &[vec![1]]), Matrix::from_i64(&f, &[vec![1]]), Matrix::zeros(&f, 0, 1)];
        let a2 = vec![Matrix::from_i64(&f, &[vec![1]]), Matrix::from_i64(&f, &[vec![2]]), Matrix::zeros(&f, 0, 1)];
        assert!(GradedModule::new(&f, 2, 0, vec![1, 1, 1], vec![a1, a2]).is_err());
    }

    #[test]
    fn inverse_of_small_matrix() {
        let f = Rationals;
        let m = Matrix::from_i64(&f, &[vec![2, 1], vec![1, 1]]);
        let inv = inverse_matrix(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&f, 2));
        assert!(inverse_matrix(&Matrix::from_i64(&f, &[vec![1, 1], vec![1, 1]])).is_err());
    }
}
