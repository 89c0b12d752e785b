//! Corner transfer under the Laplacian Hamiltonian.
//!
//! A single path `P_n` has transfer between its ends iff `n` is a power of
//! two. No product of two or more paths has transfer between corners: every
//! factor would have to be `P_{2^e}`, and for `P_{2^e}□P_{2^f}` with
//! `e ≤ f` the eigenvalue `2 + 2cos(π/2^e)` arises both as `(1, 0)` and as
//! `(0, 2^{f−e})` with opposite corner signs along the first coordinate.

use serde::Serialize;

use crate::arith::is_power_of_two;
use crate::cospectral::{strong_cospectrality, CornerPair};
use crate::error::{domain, Result};
use crate::spectra::{EigenIndex, Hamiltonian, ProductGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LaplacianVerdict {
    SinglePath { pgst: bool },
    No { reason: LaplacianReason },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum LaplacianReason {
    /// Factor `factor` (0-based) is not a power of two.
    FactorNecessity { factor: usize, n: usize },
    /// The corners differing in `transfer` are not strongly cospectral. The
    /// witness indices are given in the full product, with label 0 on every
    /// factor outside `factors`.
    NotStronglyCospectral {
        factors: [usize; 2],
        transfer: usize,
        witness: (EigenIndex, EigenIndex),
    },
}

pub fn laplacian_corner_verdict(g: &ProductGraph) -> Result<LaplacianVerdict> {
    if g.hamiltonian() != Hamiltonian::Laplacian {
        return domain("laplacian_corner_verdict needs the Laplacian Hamiltonian");
    }
    let f = g.factors();
    if f.len() == 1 {
        return Ok(LaplacianVerdict::SinglePath {
            pgst: is_power_of_two(f[0].n() as u64),
        });
    }
    if let Some(i) = f.iter().position(|x| !is_power_of_two(x.n() as u64)) {
        return Ok(LaplacianVerdict::No {
            reason: LaplacianReason::FactorNecessity {
                factor: i,
                n: f[i].n(),
            },
        });
    }
    let (n0, n1) = (f[0].n(), f[1].n());
    let local = if n0 <= n1 { 0 } else { 1 };
    let sub = ProductGraph::laplacian(&[n0, n1])?;
    let report = strong_cospectrality(&sub, &CornerPair::adjacent(2, local)?)?;
    let (x, y) = report
        .witness
        .expect("two power-of-two Laplacian paths are never strongly cospectral at corners");
    let widen = |e: EigenIndex| {
        let mut v = vec![0; f.len()];
        v[0] = e.0[0];
        v[1] = e.0[1];
        EigenIndex(v)
    };
    Ok(LaplacianVerdict::No {
        reason: LaplacianReason::NotStronglyCospectral {
            factors: [0, 1],
            transfer: local,
            witness: (widen(x), widen(y)),
        },
    })
}
