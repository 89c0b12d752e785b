//! Exact integer linear algebra: saturated kernels and row-space bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// One column under elimination: its image under `M` and its sparse
/// coordinates in the unimodular transform.
#[derive(Clone)]
struct Column {
    image: Vec<BigInt>,
    transform: Vec<(usize, BigInt)>,
}

impl Column {
    /// `self -= q * other`
    fn sub_mul(&mut self, q: &BigInt, other: &Column) {
        for (x, y) in self.image.iter_mut().zip(&other.image) {
            if !y.is_zero() {
                *x -= q * y;
            }
        }
        let mut out = Vec::with_capacity(self.transform.len() + other.transform.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.transform, &other.transform);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, -(q * &b[j].1)));
                j += 1;
            } else {
                let v = &a[i].1 - q * &b[j].1;
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.transform = out;
    }

    fn negate(&mut self) {
        for x in &mut self.image {
            *x = -&*x;
        }
        for (_, v) in &mut self.transform {
            *v = -&*v;
        }
    }

    fn dense_transform(&self, n: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n];
        for (i, x) in &self.transform {
            v[*i] = x.clone();
        }
        v
    }
}

/// Saturated basis of `{v ∈ Z^ncols : M v = 0}`, one vector per entry.
///
/// Column-style Hermite reduction: each row is cleared by integer column
/// operations with the smallest nonzero entry as pivot (lowest column on
/// ties), pivots are made positive and earlier pivot columns reduced modulo
/// them. Since the accumulated transform is unimodular, the transforms of
/// the columns whose image vanishes generate the whole integer kernel.
pub fn integer_kernel(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
    let m = rows.len();
    let mut cols: Vec<Column> = (0..ncols)
        .map(|j| Column {
            image: rows.iter().map(|r| r[j].clone()).collect(),
            transform: vec![(j, BigInt::one())],
        })
        .collect();
    let mut active: Vec<usize> = (0..ncols).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for i in 0..m {
        loop {
            let nonzero: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&j| !cols[j].image[i].is_zero())
                .collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero
                .iter()
                .min_by(|&&x, &&y| {
                    cols[x].image[i]
                        .abs()
                        .cmp(&cols[y].image[i].abs())
                        .then(x.cmp(&y))
                })
                .unwrap();
            let pivot = cols[p].clone();
            for &j in &nonzero {
                if j != p {
                    let q = cols[j].image[i].div_floor(&pivot.image[i]);
                    cols[j].sub_mul(&q, &pivot);
                }
            }
        }
        let Some(pos) = active.iter().position(|&j| !cols[j].image[i].is_zero()) else {
            continue;
        };
        let p = active.remove(pos);
        if cols[p].image[i].is_negative() {
            cols[p].negate();
        }
        let pivot = cols[p].clone();
        for &(_, q_col) in &pivots {
            let q = cols[q_col].image[i].div_floor(&pivot.image[i]);
            if !q.is_zero() {
                cols[q_col].sub_mul(&q, &pivot);
            }
        }
        pivots.push((i, p));
    }

    active.sort_unstable();
    active
        .into_iter()
        .map(|j| cols[j].dense_transform(ncols))
        .collect()
}

/// Convenience wrapper over [`integer_kernel`] for small matrices.
pub fn integer_kernel_i64(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    integer_kernel(&big, ncols)
}

/// Integer rows spanning the same rational row space as `rows`.
///
/// The kernel of the result equals the kernel of the input, so a tall
/// coordinate matrix can be replaced by at most `ncols` rows.
pub fn integer_row_basis(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigInt>> {
    // echelon rows normalised to leading coefficient 1
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for row in rows {
        assert_eq!(row.len(), ncols, "ragged matrix");
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        let mut v = row.clone();
        for (lead, b) in &basis {
            if !v[*lead].is_zero() {
                let f = v[*lead].clone();
                for (x, y) in v.iter_mut().zip(b).skip(*lead) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = v[lead].recip();
        for x in v.iter_mut().skip(lead) {
            *x *= &inv;
        }
        for (_, b) in basis.iter_mut() {
            if !b[lead].is_zero() {
                let f = b[lead].clone();
                for (x, y) in b.iter_mut().zip(&v).skip(lead) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let at = basis.partition_point(|(l, _)| *l < lead);
        basis.insert(at, (lead, v));
        if basis.len() == ncols {
            break;
        }
    }
    basis
        .into_iter()
        .map(|(_, v)| {
            let den = v
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            v.iter()
                .map(|x| x.numer() * (&den / x.denom()))
                .collect()
        })
        .collect()
}
