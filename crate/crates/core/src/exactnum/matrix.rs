use std::fmt;

use super::{Scalar, SparseVec};
use crate::error::{Error, Result};

/// Dense vector of exact scalars.
pub type Vector = Vec<Scalar>;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .expect("ragged literal")
    }

    /// Matrix whose j-th column is `cols[j]` (length `rows`).
    pub fn from_sparse_columns(rows: usize, cols: &[SparseVec]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `u^T M v`.
    pub fn bilinear(&self, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
        let mv = self.mul_vec(v)?;
        if u.len() != self.rows {
            return Err(Error::Shape("bilinear form shape".into()));
        }
        Ok(u.iter().zip(&mv).map(|(a, b)| a * b).sum())
    }

    /// Kronecker product `self ⊗ other`, row index `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &f * &m[(r, j)];
                    m[(i, j)] -= &v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(); self.cols];
                x[f] = Scalar::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = -&r[(row, f)];
                }
                x
            })
            .collect()
    }

    pub fn invert(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "cannot invert {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&p| p < n).count();
        if rank < n {
            return Err(Error::Singular {
                rows: n,
                cols: n,
                rank,
            });
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Solves `M x = b` for square nonsingular `M`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vector> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(Error::Shape(
                "solve requires square matrix and matching rhs".into(),
            ));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&p| p < n).count();
        if rank < n {
            return Err(Error::Singular {
                rows: n,
                cols: n,
                rank,
            });
        }
        Ok((0..n).map(|i| r[(i, n)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Free-function form of [`Matrix::solve`].
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Vector> {
    m.solve(b)
}

pub fn invert(m: &Matrix) -> Result<Matrix> {
    m.invert()
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Adjoint of `m: V_src -> V_dst` with respect to nondegenerate symmetric
/// forms: returns `m̌: V_dst -> V_src` with
/// `η_src(m̌ y, x) = η_dst(y, m x)`, i.e. `η_src⁻¹ · mᵀ · η_dst`.
pub fn metric_adjoint(m: &Matrix, eta_src: &Matrix, eta_dst: &Matrix) -> Result<Matrix> {
    if eta_src.rows() != m.cols() || eta_dst.rows() != m.rows() {
        return Err(Error::Shape(format!(
            "map is {}x{}, metrics are {}x{} and {}x{}",
            m.rows(),
            m.cols(),
            eta_src.rows(),
            eta_src.cols(),
            eta_dst.rows(),
            eta_dst.cols()
        )));
    }
    let inv = eta_src
        .invert()
        .map_err(|e| Error::DegenerateMetric(format!("source metric: {e}")))?;
    if eta_dst.rank() < eta_dst.rows() {
        return Err(Error::DegenerateMetric("target metric".into()));
    }
    inv.mul(&m.transpose())?.mul(eta_dst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_identity() {
        assert_eq!(Matrix::identity(3).invert().unwrap(), Matrix::identity(3));
    }

    #[test]
    fn solve_swap() {
        let m = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let x = m.solve(&[Scalar::one(), Scalar::zero()]).unwrap();
        assert_eq!(x, vec![Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn dual_numbers_metric_has_rank_two() {
        // η(1,x) = η(x,1) = 1 on Q[x]/(x²); determinant −1.
        let eta = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(eta.rank(), 2);
    }

    #[test]
    fn singular_reports_rank() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            m.invert(),
            Err(Error::Singular {
                rows: 2,
                cols: 2,
                rank: 1
            })
        );
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = Matrix::from_i64(&[&[1, 2, 3]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn adjoint_of_identity() {
        let eta = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let adj = metric_adjoint(&Matrix::identity(2), &eta, &eta).unwrap();
        assert_eq!(adj, Matrix::identity(2));
    }

    #[test]
    fn degenerate_metric_rejected() {
        let eta = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        assert!(matches!(
            metric_adjoint(&Matrix::identity(2), &eta, &Matrix::identity(2)),
            Err(Error::DegenerateMetric(_))
        ));
    }
}
