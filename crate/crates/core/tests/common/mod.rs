//! Dense numerical oracles built directly from the path matrices, sharing
//! nothing with the closed forms under test.
#![allow(dead_code)]

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use pgst_core::{CornerPair, Hamiltonian, ProductGraph};

pub const CLUSTER_TOL: f64 = 1e-9;
pub const ENTRY_TOL: f64 = 1e-8;

/// Adjacency or Laplacian matrix of `P_n`.
pub fn path_matrix(n: usize, h: Hamiltonian) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n - 1 {
        m[(i, i + 1)] = 1.0;
        m[(i + 1, i)] = 1.0;
    }
    if h == Hamiltonian::Laplacian {
        let deg: Vec<f64> = (0..n).map(|i| m.row(i).sum()).collect();
        m = -m;
        for (i, d) in deg.into_iter().enumerate() {
            m[(i, i)] = d;
        }
    }
    m
}

/// `H_1 ⊗ I + I ⊗ H_2 + …`, first factor slowest.
pub fn product_matrix(g: &ProductGraph) -> DMatrix<f64> {
    let h = g.hamiltonian();
    let mut acc = path_matrix(g.factors()[0].n(), h);
    for f in &g.factors()[1..] {
        let b = path_matrix(f.n(), h);
        let ia = DMatrix::<f64>::identity(acc.nrows(), acc.nrows());
        let ib = DMatrix::<f64>::identity(b.nrows(), b.nrows());
        acc = acc.kronecker(&ib) + ia.kronecker(&b);
    }
    acc
}

/// Row index of a 1-indexed vertex tuple.
pub fn vertex_index(g: &ProductGraph, v: &[usize]) -> usize {
    v.iter()
        .zip(g.factors())
        .fold(0, |acc, (&x, f)| acc * f.n() + (x - 1))
}

/// Eigenvalue clusters `(mean value, projector)` of a symmetric matrix.
pub fn eigen_clusters(m: &DMatrix<f64>) -> Vec<(f64, DMatrix<f64>)> {
    let eig = SymmetricEigen::new(m.clone());
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mut out: Vec<(Vec<usize>, f64)> = Vec::new();
    for &i in &order {
        let v = eig.eigenvalues[i];
        match out.last_mut() {
            Some((members, last)) if v - *last <= CLUSTER_TOL => {
                members.push(i);
                *last = v;
            }
            _ => out.push((vec![i], v)),
        }
    }
    out.into_iter()
        .map(|(members, _)| {
            let n = m.nrows();
            let mut p = DMatrix::zeros(n, n);
            let mut mean = 0.0;
            for &i in &members {
                let c = eig.eigenvectors.column(i);
                p += &c * c.transpose();
                mean += eig.eigenvalues[i];
            }
            (mean / members.len() as f64, p)
        })
        .collect()
}

/// Sorted eigenvalue clusters as `(value, multiplicity)`.
pub fn numeric_spectrum(g: &ProductGraph) -> Vec<(f64, usize)> {
    eigen_clusters(&product_matrix(g))
        .into_iter()
        .map(|(v, p)| (v, p.trace().round() as usize))
        .collect()
}

/// Strong cospectrality from dense eigenprojectors: `E e_a = ±E e_b` entrywise.
pub fn numeric_strongly_cospectral(g: &ProductGraph, pair: &CornerPair) -> bool {
    let m = product_matrix(g);
    let (a, b) = pair.coords(g);
    let (ia, ib) = (vertex_index(g, &a), vertex_index(g, &b));
    eigen_clusters(&m).iter().all(|(_, p)| {
        let (ca, cb) = (p.column(ia), p.column(ib));
        let plus = ca.iter().zip(cb.iter()).all(|(x, y)| (x - y).abs() < ENTRY_TOL);
        let minus = ca.iter().zip(cb.iter()).all(|(x, y)| (x + y).abs() < ENTRY_TOL);
        plus || minus
    })
}

/// `exp(−itH)` by nalgebra's scaling-and-squaring Padé exponential.
pub fn dense_propagator(m: &DMatrix<f64>, t: f64) -> DMatrix<Complex<f64>> {
    let z = m.map(|x| Complex::new(0.0, -t * x));
    z.exp()
}

/// Unit eigenvector of a simple eigenvalue, sign fixed positive at vertex 1.
pub fn dense_path_eigenvectors(n: usize, h: Hamiltonian) -> Vec<(f64, Vec<f64>)> {
    let eig = SymmetricEigen::new(path_matrix(n, h));
    let mut out: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|i| {
            let mut v: Vec<f64> = eig.eigenvectors.column(i).iter().copied().collect();
            if v[0] < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            (eig.eigenvalues[i], v)
        })
        .collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Exact rational solution `c` of `∑ c_i basis_i = v`, if integral.
pub fn integer_coordinates(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let r = basis.len();
    let n = v.len();
    // rows = coordinates, columns = basis vectors + rhs
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis
                .iter()
                .map(|b| BigRational::from_integer(b[i].clone()))
                .collect();
            row.push(BigRational::from_integer(v[i].clone()));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..r {
        let Some(p) = (pivot_row..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != pivot_row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..=r {
                    let d = &f * &a[pivot_row][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[r].is_zero()) {
        return None;
    }
    let mut c = vec![BigInt::zero(); r];
    for (row, &col) in pivots.iter().enumerate() {
        let x = &a[row][r];
        if !x.denom().is_one() {
            return None;
        }
        c[col] = x.numer().clone();
    }
    Some(c)
}

/// All corner pairs of a product, as `(a, b)` masks with `a ≠ b`.
pub fn corner_pairs(k: usize) -> Vec<CornerPair> {
    let mut out = Vec::new();
    for a in 0..1u32 << k {
        for b in 0..1u32 << k {
            if a != b {
                let bits = |m: u32| (0..k).map(|i| m >> (k - 1 - i) & 1 == 1).collect();
                out.push(CornerPair::new(bits(a), bits(b)).unwrap());
            }
        }
    }
    out
}
