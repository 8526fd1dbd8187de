use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Scalar, SparseAccumulator, SparseTensor3, SparseVec, Vector};
use crate::report::{Check, Report, Witness};

/// One basis vector: its label, cohomological degree and `Z/2` parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisElement {
    pub label: String,
    pub degree: i64,
    pub parity: u8,
}

impl BasisElement {
    pub fn new(label: &str, degree: i64) -> Self {
        BasisElement {
            label: label.to_string(),
            degree,
            parity: 0,
        }
    }
}

/// A finite-dimensional graded Frobenius algebra `(A, η, 1)` given by
/// structure constants `e_i e_j = Σ_k c_{ij}^k e_k` and a metric matrix.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    name: String,
    basis: Vec<BasisElement>,
    unit: Vector,
    structure: SparseTensor3,
    metric: Matrix,
    products: Vec<SparseVec>,
    metric_inv: Option<Matrix>,
}

impl PartialEq for FrobeniusAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.unit == other.unit
            && self.structure == other.structure
            && self.metric == other.metric
    }
}

impl FrobeniusAlgebra {
    /// Shape-checked construction without verifying any law.
    pub fn from_parts(
        name: &str,
        basis: Vec<BasisElement>,
        unit: Vector,
        metric: Matrix,
        structure: SparseTensor3,
    ) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if unit.len() != dim {
            return Err(Error::Shape(format!(
                "unit has length {}, dim is {dim}",
                unit.len()
            )));
        }
        if metric.rows() != dim || metric.cols() != dim {
            return Err(Error::Shape(format!(
                "metric is {}x{}, dim is {dim}",
                metric.rows(),
                metric.cols()
            )));
        }
        if let Some(b) = basis.iter().find(|b| b.parity > 1) {
            return Err(Error::InvalidAlgebra(format!(
                "parity of {} must be 0 or 1",
                b.label
            )));
        }
        if structure
            .entries()
            .iter()
            .any(|&(i, j, k, _)| i >= dim || j >= dim || k >= dim)
        {
            return Err(Error::Shape("structure constant index out of range".into()));
        }
        let products = structure.to_product_table(dim);
        let metric_inv = metric.invert().ok();
        Ok(FrobeniusAlgebra {
            name: name.to_string(),
            basis,
            unit,
            structure,
            metric,
            products,
            metric_inv,
        })
    }

    /// Construction that also runs [`verify`](Self::verify) and rejects any
    /// failed law.
    pub fn new(
        name: &str,
        basis: Vec<BasisElement>,
        unit: Vector,
        metric: Matrix,
        structure: SparseTensor3,
    ) -> Result<Self> {
        let a = Self::from_parts(name, basis, unit, metric, structure)?;
        let report = a.verify();
        if !report.passed() {
            let failed = report.failed_codes().join(", ");
            return Err(Error::InvalidAlgebra(format!(
                "{name}: failed laws {failed}"
            )));
        }
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.basis[i].parity
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure(&self) -> &SparseTensor3 {
        &self.structure
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn metric_inverse(&self) -> Result<&Matrix> {
        self.metric_inv.as_ref().ok_or_else(|| {
            Error::DegenerateMetric(format!("{} has a degenerate metric", self.name))
        })
    }

    /// `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    pub fn multiply_sparse(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = SparseAccumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(self.basis_product(i, j), &(x * y));
            }
        }
        acc.finish()
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vector> {
        if a.len() != self.dim() || b.len() != self.dim() {
            return Err(Error::Shape(
                "operand length differs from algebra dimension".into(),
            ));
        }
        Ok(self
            .multiply_sparse(&SparseVec::from_dense(a), &SparseVec::from_dense(b))
            .to_dense(self.dim()))
    }

    /// `η(a, b)`.
    pub fn pair(&self, a: &SparseVec, b: &SparseVec) -> Scalar {
        let mut s = Scalar::zero();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let m = &self.metric[(i, j)];
                if !m.is_zero() {
                    s += &(x * y) * m;
                }
            }
        }
        s
    }

    pub fn unit_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.unit)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim())
            .all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|b| b.parity == 0)
    }

    /// The common value of `deg e_i + deg e_j` over nonzero metric entries.
    pub fn top_degree(&self) -> Option<i64> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.metric[(i, j)].is_zero())
            .map(|(i, j)| self.degree(i) + self.degree(j))
    }

    /// Degree of a homogeneous nonzero element; `None` for zero or
    /// inhomogeneous input.
    pub fn homogeneous_degree(&self, v: &SparseVec) -> Option<i64> {
        let mut degs = v.iter().map(|(i, _)| self.degree(i));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// The η-dual basis: `η(e_i, e^j) = δ_ij`.
    pub fn dual_basis(&self) -> Result<Vec<SparseVec>> {
        let inv = self.metric_inverse()?;
        let n = self.dim();
        // η symmetric: e^i = Σ_j (η⁻¹)_{ji} e_j.
        Ok((0..n)
            .map(|i| SparseVec::from_dense(&inv.column(i)))
            .collect())
    }

    /// `Δ(1) = Σ_i e_i ⊗ e^i` as a sparse vector over `A ⊗ A`
    /// (index `i * dim + j`).
    pub fn copairing(&self) -> Result<SparseVec> {
        let dual = self.dual_basis()?;
        let n = self.dim();
        Ok(SparseVec::from_pairs(dual.iter().enumerate().flat_map(
            |(i, d)| d.iter().map(move |(j, v)| (i * n + j, v.clone())),
        )))
    }

    /// Euler class `e = μ(Δ(1)) = Σ_i e_i e^i`.
    pub fn euler_class(&self) -> Result<SparseVec> {
        let dual = self.dual_basis()?;
        let mut acc = SparseAccumulator::new();
        for (i, d) in dual.iter().enumerate() {
            acc.add_scaled(
                &self.multiply_sparse(&SparseVec::unit(i), d),
                &Scalar::one(),
            );
        }
        Ok(acc.finish())
    }

    pub fn format_element(&self, v: &SparseVec) -> String {
        format_linear(v, |i| self.label(i).to_string())
    }

    /// Exhaustive check of every law over basis tuples.
    pub fn verify(&self) -> Report {
        let n = self.dim();
        let mut report = Report::new(format!("Frobenius algebra {} (dim {n})", self.name));
        let fmt = |v: &SparseVec| self.format_element(v);

        let mut w = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let lhs = self.multiply_sparse(ij, &SparseVec::unit(k));
                    let rhs = self.multiply_sparse(&SparseVec::unit(i), self.basis_product(j, k));
                    if lhs != rhs {
                        w = Some(Witness::new(
                            format!("({}·{})·{}", self.label(i), self.label(j), self.label(k)),
                            fmt(&lhs),
                            fmt(&rhs),
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        report.push(Check::new("assoc", "associativity", (n * n * n) as u64, w));

        let one = self.unit_sparse();
        let mut w = None;
        for i in 0..n {
            let e = SparseVec::unit(i);
            let left = self.multiply_sparse(&one, &e);
            let right = self.multiply_sparse(&e, &one);
            if left != e || right != e {
                let bad = if left != e { left } else { right };
                w = Some(Witness::new(
                    format!("1·{}", self.label(i)),
                    fmt(&bad),
                    self.label(i),
                ));
                break;
            }
        }
        report.push(Check::new("unit", "unit law", n as u64, w));

        let mut w = None;
        'inv: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.pair(self.basis_product(i, j), &SparseVec::unit(k));
                    let rhs = self.pair(&SparseVec::unit(i), self.basis_product(j, k));
                    if lhs != rhs {
                        w = Some(Witness::new(
                            format!(
                                "η({}·{}, {}) vs η({}, {}·{})",
                                self.label(i),
                                self.label(j),
                                self.label(k),
                                self.label(i),
                                self.label(j),
                                self.label(k)
                            ),
                            lhs,
                            rhs,
                        ));
                        break 'inv;
                    }
                }
            }
        }
        report.push(Check::new(
            "invariance",
            "invariance of the metric",
            (n * n * n) as u64,
            w,
        ));

        let rank = self.metric.rank();
        let w = (rank < n).then(|| Witness::new("rank η", rank, n));
        report.push(Check::new("nondegenerate", "nondegenerate metric", 1, w));

        let mut w = None;
        let top = self.top_degree();
        'grade: for i in 0..n {
            for j in 0..n {
                let expected = self.degree(i) + self.degree(j);
                if let Some((k, _)) = self
                    .basis_product(i, j)
                    .iter()
                    .find(|(k, _)| self.degree(*k) != expected)
                {
                    w = Some(Witness::new(
                        format!(
                            "deg({}·{}) at {}",
                            self.label(i),
                            self.label(j),
                            self.label(k)
                        ),
                        self.degree(k),
                        expected,
                    ));
                    break 'grade;
                }
                if !self.metric[(i, j)].is_zero() && Some(expected) != top {
                    w = Some(Witness::new(
                        format!("η({}, {}) off top degree", self.label(i), self.label(j)),
                        expected,
                        top.unwrap_or_default(),
                    ));
                    break 'grade;
                }
            }
        }
        report.push(Check::new(
            "grading",
            "grading of product and metric",
            (n * n) as u64,
            w,
        ));

        let mut w = None;
        if let Some((k, _)) = one.iter().find(|(k, _)| self.parity(*k) != 0) {
            w = Some(Witness::new(
                format!("unit component {}", self.label(k)),
                1,
                0,
            ));
        }
        'par: for i in 0..n {
            for j in 0..n {
                let expected = (self.parity(i) + self.parity(j)) % 2;
                if w.is_some() {
                    break 'par;
                }
                if let Some((k, _)) = self
                    .basis_product(i, j)
                    .iter()
                    .find(|(k, _)| self.parity(*k) != expected)
                {
                    w = Some(Witness::new(
                        format!(
                            "parity({}·{}) at {}",
                            self.label(i),
                            self.label(j),
                            self.label(k)
                        ),
                        self.parity(k),
                        expected,
                    ));
                }
            }
        }
        report.push(Check::new(
            "parity",
            "parity of unit and product",
            (n * n) as u64,
            w,
        ));
        report
    }
}

/// Formats `Σ c_i b_i` using `label(i)` for basis vectors, e.g. `"1 + 2x"`.
pub(crate) fn format_linear(v: &SparseVec, label: impl Fn(usize) -> String) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, (i, c)) in v.iter().enumerate() {
        let lab = label(i);
        let (neg, mag) = if c.is_negative() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&lab);
        } else if lab == "1" {
            out.push_str(&mag.to_string());
        } else if mag.is_integer()
            && lab.chars().next().is_some_and(char::is_alphabetic)
            && !lab.contains('⊗')
        {
            out.push_str(&format!("{mag}{lab}"));
        } else {
            out.push_str(&format!("{mag}·{lab}"));
        }
    }
    out
}
