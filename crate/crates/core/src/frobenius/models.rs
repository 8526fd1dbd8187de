//! Base algebras used throughout: the ground field, dual numbers, a
//! four-dimensional surface model and the K3 lattice model.

use super::{BasisElement, FrobeniusAlgebra};
use crate::exactnum::{Matrix, Scalar, SparseTensor3};

fn built(
    name: &str,
    basis: Vec<BasisElement>,
    unit: usize,
    metric: Matrix,
    c: Vec<(usize, usize, usize, i64)>,
) -> FrobeniusAlgebra {
    let dim = basis.len();
    let mut u = vec![Scalar::zero(); dim];
    u[unit] = Scalar::one();
    let structure = SparseTensor3::new(
        c.into_iter()
            .map(|(i, j, k, v)| (i, j, k, Scalar::from_int(v)))
            .collect(),
    )
    .expect("distinct keys");
    FrobeniusAlgebra::new(name, basis, u, metric, structure)
        .expect("model algebra satisfies its laws")
}

/// The ground field `k` with `η(1, 1) = 1`.
pub fn point() -> FrobeniusAlgebra {
    built(
        "k",
        vec![BasisElement::new("1", 0)],
        0,
        Matrix::from_i64(&[&[1]]),
        vec![(0, 0, 0, 1)],
    )
}

/// `Q[x]/(x²)`, `deg x = 2`, `η(1, x) = 1`.
pub fn dual_numbers() -> FrobeniusAlgebra {
    built(
        "Q[x]/(x^2)",
        vec![BasisElement::new("1", 0), BasisElement::new("x", 2)],
        0,
        Matrix::from_i64(&[&[0, 1], &[1, 0]]),
        vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
    )
}

/// Basis `{1, a, b, t}` with `ab = ba = t`, `a² = b² = 0`,
/// `η(1, t) = η(a, b) = 1`; degrees 0, 2, 2, 4.
pub fn surface4() -> FrobeniusAlgebra {
    let mut c = Vec::new();
    for i in 0..4 {
        c.push((0, i, i, 1));
        if i != 0 {
            c.push((i, 0, i, 1));
        }
    }
    c.push((1, 2, 3, 1));
    c.push((2, 1, 3, 1));
    built(
        "surface4",
        vec![
            BasisElement::new("1", 0),
            BasisElement::new("a", 2),
            BasisElement::new("b", 2),
            BasisElement::new("t", 4),
        ],
        0,
        Matrix::from_i64(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]),
        c,
    )
}

const E8: [[i64; 8]; 8] = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
];

/// Intersection form `3U ⊕ 2(−E8)` on `H²` of a K3 surface.
pub fn k3_lattice() -> Vec<Vec<i64>> {
    let mut q = vec![vec![0i64; 22]; 22];
    for u in 0..3 {
        q[2 * u][2 * u + 1] = 1;
        q[2 * u + 1][2 * u] = 1;
    }
    for block in 0..2 {
        let off = 6 + 8 * block;
        for i in 0..8 {
            for j in 0..8 {
                q[off + i][off + j] = -E8[i][j];
            }
        }
    }
    q
}

/// Cohomology ring of a K3 surface: `1`, `h1…h22`, `pt` with
/// `h_i h_j = Q_{ij} pt`.
pub fn k3() -> FrobeniusAlgebra {
    let q = k3_lattice();
    let dim = 24;
    let top = dim - 1;
    let mut basis = vec![BasisElement::new("1", 0)];
    basis.extend((1..=22).map(|i| BasisElement::new(&format!("h{i}"), 2)));
    basis.push(BasisElement::new("pt", 4));
    let mut metric = Matrix::zeros(dim, dim);
    metric[(0, top)] = Scalar::one();
    metric[(top, 0)] = Scalar::one();
    let mut c = Vec::new();
    for i in 0..dim {
        c.push((0, i, i, 1));
        if i != 0 {
            c.push((i, 0, i, 1));
        }
    }
    for i in 0..22 {
        for j in 0..22 {
            metric[(i + 1, j + 1)] = Scalar::from_int(q[i][j]);
            if q[i][j] != 0 {
                c.push((i + 1, j + 1, top, q[i][j]));
            }
        }
    }
    built("K3", basis, 0, metric, c)
}

pub fn by_name(name: &str) -> Option<FrobeniusAlgebra> {
    match name {
        "k" | "point" => Some(point()),
        "dual" | "dual_numbers" => Some(dual_numbers()),
        "surface4" => Some(surface4()),
        "k3" | "K3" => Some(k3()),
        _ => None,
    }
}
