//! Explicit no-transfer certificates for two-factor products of prime-type
//! paths, assembled from the 2×2 blocks
//!
//! ```text
//! A = [ 1 0]   B = [ 1 -1]   C = [-1  2]
//!     [-2 1]       [-2  2]       [ 1 -2]
//! ```
//!
//! laid out as `[[A, B, …, B], [C, 0, …, 0], …, [C, 0, …, 0]]`. Rows of such
//! a layout sum to `(−1)^{j+1}` and columns to `(−1)^k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::certificate::Certificate;
use crate::cospectral::CornerPair;
use crate::error::{domain, Error, Result};
use crate::spectra::{EigenIndex, ProductGraph};

const A: [[i64; 2]; 2] = [[1, 0], [-2, 1]];
const B: [[i64; 2]; 2] = [[1, -1], [-2, 2]];
const C: [[i64; 2]; 2] = [[-1, 2], [1, -2]];

/// The six witness families. `p1` always belongs to the first factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WitnessCase {
    /// `P_{p1−1}□P_{p2−1}`, `p1 ≡ 3 (mod 4)`, transfer along the first factor.
    #[serde(rename = "prime-3mod4")]
    PrimeThreeMod4,
    /// `P_{p1−1}□P_{p2−1}`, `p1 ≡ 5 (mod 8)`, `p2 ≡ 1 (mod 4)`.
    #[serde(rename = "prime-5mod8")]
    PrimeFiveMod8,
    /// `P_{2p1−1}□P_{2p2−1}`, `p1 ≡ 3 (mod 4)`.
    #[serde(rename = "twice-prime-3mod4")]
    TwicePrimeThreeMod4,
    /// `P_{2p1−1}□P_{p2−1}`, `p1 ≡ 3 (mod 4)`, `p2 ≡ 1 (mod 4)`.
    #[serde(rename = "twice-prime-3mod4-with-prime")]
    TwicePrimeWithPrime,
    /// `P_{2p1−1}□P_{p2−1}`, `p2 ≡ 3 (mod 4)`, transfer along the second factor.
    #[serde(rename = "prime-3mod4-with-twice-prime")]
    PrimeThreeMod4WithTwicePrime,
    /// `P_{2p1−1}□P_{p2−1}`, `p1 ≡ 1 (mod 4)`, `p2 ≡ 5 (mod 8)`, transfer
    /// along the second factor.
    #[serde(rename = "prime-5mod8-with-twice-prime")]
    PrimeFiveMod8WithTwicePrime,
}

impl WitnessCase {
    pub const ALL: [WitnessCase; 6] = [
        WitnessCase::PrimeThreeMod4,
        WitnessCase::PrimeFiveMod8,
        WitnessCase::TwicePrimeThreeMod4,
        WitnessCase::TwicePrimeWithPrime,
        WitnessCase::PrimeThreeMod4WithTwicePrime,
        WitnessCase::PrimeFiveMod8WithTwicePrime,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            WitnessCase::PrimeThreeMod4 => "prime-3mod4",
            WitnessCase::PrimeFiveMod8 => "prime-5mod8",
            WitnessCase::TwicePrimeThreeMod4 => "twice-prime-3mod4",
            WitnessCase::TwicePrimeWithPrime => "twice-prime-3mod4-with-prime",
            WitnessCase::PrimeThreeMod4WithTwicePrime => "prime-3mod4-with-twice-prime",
            WitnessCase::PrimeFiveMod8WithTwicePrime => "prime-5mod8-with-twice-prime",
        }
    }

    /// Path sizes of the two factors.
    pub fn sizes(&self, p1: u64, p2: u64) -> [usize; 2] {
        let (p1, p2) = (p1 as usize, p2 as usize);
        match self {
            WitnessCase::PrimeThreeMod4 | WitnessCase::PrimeFiveMod8 => [p1 - 1, p2 - 1],
            WitnessCase::TwicePrimeThreeMod4 => [2 * p1 - 1, 2 * p2 - 1],
            _ => [2 * p1 - 1, p2 - 1],
        }
    }

    /// Coordinate along which the refuted transfer runs.
    pub fn transfer_coord(&self) -> usize {
        match self {
            WitnessCase::PrimeThreeMod4WithTwicePrime | WitnessCase::PrimeFiveMod8WithTwicePrime => 1,
            _ => 0,
        }
    }

    /// Checks the congruence hypotheses.
    pub fn check(&self, p1: u64, p2: u64) -> Result<()> {
        for (name, p) in [("p1", p1), ("p2", p2)] {
            if p < 3 || !is_prime(p) {
                return domain(format!("{name} = {p} is not an odd prime"));
            }
        }
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                domain(format!("{} requires {what}", self.name()))
            }
        };
        match self {
            WitnessCase::PrimeThreeMod4 | WitnessCase::TwicePrimeThreeMod4 => {
                need(p1 % 4 == 3, "p1 ≡ 3 (mod 4)")
            }
            WitnessCase::PrimeFiveMod8 => {
                need(p1 % 8 == 5, "p1 ≡ 5 (mod 8)")?;
                need(p2 % 4 == 1, "p2 ≡ 1 (mod 4)")
            }
            WitnessCase::TwicePrimeWithPrime => {
                need(p1 % 4 == 3, "p1 ≡ 3 (mod 4)")?;
                need(p2 % 4 == 1, "p2 ≡ 1 (mod 4)")
            }
            WitnessCase::PrimeThreeMod4WithTwicePrime => need(p2 % 4 == 3, "p2 ≡ 3 (mod 4)"),
            WitnessCase::PrimeFiveMod8WithTwicePrime => {
                need(p1 % 4 == 1, "p1 ≡ 1 (mod 4)")?;
                need(p2 % 8 == 5, "p2 ≡ 5 (mod 8)")
            }
        }
    }

    /// Closed form of the coefficient sum over Φ⁻.
    pub fn expected_phi_minus_sum(&self, p1: u64, p2: u64) -> i64 {
        let (p1, p2) = (p1 as i64, p2 as i64);
        match self {
            WitnessCase::PrimeThreeMod4 => -(p1 - 1) / 2,
            WitnessCase::PrimeFiveMod8 => -(p1 - 1) / 4,
            WitnessCase::TwicePrimeThreeMod4 | WitnessCase::TwicePrimeWithPrime => 1,
            WitnessCase::PrimeThreeMod4WithTwicePrime => (p2 - 1) / 2,
            WitnessCase::PrimeFiveMod8WithTwicePrime => (p2 - 1) / 4,
        }
    }

    /// Shape of the block layout in 2×2 blocks.
    fn blocks(&self, p1: u64, p2: u64) -> (usize, usize) {
        let (p1, p2) = (p1 as usize, p2 as usize);
        match self {
            WitnessCase::PrimeThreeMod4 | WitnessCase::PrimeThreeMod4WithTwicePrime => {
                ((p1 - 1) / 2, (p2 - 1) / 2)
            }
            WitnessCase::PrimeFiveMod8 | WitnessCase::PrimeFiveMod8WithTwicePrime => {
                ((p1 - 1) / 4, (p2 - 1) / 4)
            }
            WitnessCase::TwicePrimeThreeMod4 if p2 % 4 == 3 => ((p1 + 1) / 4, (p2 + 1) / 4),
            WitnessCase::TwicePrimeThreeMod4 | WitnessCase::TwicePrimeWithPrime => {
                ((p1 + 1) / 4, (p2 - 1) / 4)
            }
        }
    }

    /// Eigen label of layout row `j` (1-based) in the first factor.
    fn row_label(&self, j: usize, rows: usize, p1: u64) -> usize {
        match self {
            WitnessCase::PrimeThreeMod4 | WitnessCase::PrimeFiveMod8 => j,
            WitnessCase::TwicePrimeThreeMod4 | WitnessCase::TwicePrimeWithPrime => {
                if j == rows {
                    p1 as usize
                } else {
                    2 * j
                }
            }
            WitnessCase::PrimeThreeMod4WithTwicePrime | WitnessCase::PrimeFiveMod8WithTwicePrime => {
                2 * j
            }
        }
    }

    /// Eigen label of layout column `k` (1-based) in the second factor.
    fn col_label(&self, k: usize, cols: usize, p2: u64) -> usize {
        match self {
            WitnessCase::TwicePrimeThreeMod4 if p2 % 4 == 3 && k == cols => p2 as usize,
            WitnessCase::TwicePrimeThreeMod4 => 2 * k,
            _ => k,
        }
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WitnessCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WitnessCase::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown witness case {s:?}")))
    }
}

/// `2·row_blocks × 2·col_blocks` layout `[[A, B…], [C, 0…], …]`.
pub fn block_layout(row_blocks: usize, col_blocks: usize) -> Vec<Vec<i64>> {
    let mut l = vec![vec![0i64; 2 * col_blocks]; 2 * row_blocks];
    for bi in 0..row_blocks {
        for bj in 0..col_blocks {
            let block = match (bi, bj) {
                (0, 0) => &A,
                (0, _) => &B,
                (_, 0) => &C,
                _ => continue,
            };
            for (di, row) in block.iter().enumerate() {
                for (dj, &v) in row.iter().enumerate() {
                    l[2 * bi + di][2 * bj + dj] = v;
                }
            }
        }
    }
    l
}

/// Builds the certificate for `case` with primes `p1` and `p2`.
pub fn build_witness(case: WitnessCase, p1: u64, p2: u64) -> Result<Certificate> {
    case.check(p1, p2)?;
    let graph = ProductGraph::adjacency(&case.sizes(p1, p2))?;
    let pair = CornerPair::adjacent(2, case.transfer_coord())?;
    let (rb, cb) = case.blocks(p1, p2);
    let layout = block_layout(rb, cb);
    let (rows, cols) = (2 * rb, 2 * cb);
    let entries = layout.iter().enumerate().flat_map(|(j, row)| {
        row.iter().enumerate().map(move |(k, &v)| {
            let r = case.row_label(j + 1, rows, p1);
            let s = case.col_label(k + 1, cols, p2);
            (EigenIndex(vec![r, s]), BigInt::from(v))
        })
    });
    Ok(Certificate::new(graph, pair, entries))
}
