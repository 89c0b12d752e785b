//! Which path products have pretty good state transfer among all corners
//! (adjacency Hamiltonian).
//!
//! Yes exactly for, up to reordering of factors:
//! 1. `P_{2^e−1}□P_{p−1}` with `e ≥ 2`, `p ≥ 3` prime;
//! 2. `P_{2^e−1}□P_{2p−1}` likewise;
//! 3. products of `P_{p−1}` and `P_{2q−1}` over distinct primes with every
//!    `p ≡ 1 (mod 8)` and every `q ≡ 1 (mod 4)`;
//! 4. a product as in 3 together with one `P_{2^e−1}`, `e ≥ 2`.
//!
//! A single path has transfer between its ends iff `n + 1` is `p`, `2p` or
//! a power of two.

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{domain, Result};
use crate::spectra::{Hamiltonian, PathClass, ProductGraph};
use crate::witness::WitnessCase;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Classification {
    /// All corners lie in one transfer class; `case` numbers the list above.
    Pgst { case: u8 },
    /// One factor only. `overlaps_case` is set when the path also fits the
    /// degenerate one-factor reading of case 3.
    SinglePath {
        pgst: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        overlaps_case: Option<u8>,
    },
    No { reason: Reason },
}

impl Classification {
    /// Whether all corners are in one transfer class.
    pub fn all_corners(&self) -> bool {
        match self {
            Classification::Pgst { .. } => true,
            Classification::SinglePath { pgst, .. } => *pgst,
            Classification::No { .. } => false,
        }
    }
}

/// Why a product fails. Factor positions are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Reason {
    /// The factor has no transfer between its own ends, so no product
    /// containing it can have transfer along that coordinate.
    FactorNecessity { factor: usize, n: usize },
    /// `gcd(n_i + 1, n_j + 1) ≥ 3`: the two corners differing in `transfer`
    /// are not strongly cospectral.
    SharedDivisor {
        factors: [usize; 2],
        gcd: u64,
        transfer: usize,
    },
    /// A congruence obstruction with an explicit certificate on the
    /// two-factor sub-product `factors` (ordered as the witness expects).
    Congruence {
        witness: WitnessCase,
        factors: [usize; 2],
        primes: [u64; 2],
        transfer: usize,
    },
}

/// Classifies an adjacency product.
pub fn classify_corners(g: &ProductGraph) -> Result<Classification> {
    if g.hamiltonian() != Hamiltonian::Adjacency {
        return domain("corner classification is stated for the adjacency Hamiltonian");
    }
    let f = g.factors();
    if f.len() == 1 {
        let class = f[0].class();
        let pgst = class != PathClass::Other;
        let overlaps_case = match class {
            PathClass::PrimeMinusOne(p) if p % 8 == 1 => Some(3),
            PathClass::TwicePrimeMinusOne(q) if q % 4 == 1 => Some(3),
            _ => None,
        };
        return Ok(Classification::SinglePath {
            pgst,
            overlaps_case,
        });
    }

    if let Some(i) = f.iter().position(|x| x.class() == PathClass::Other) {
        return Ok(no(Reason::FactorNecessity {
            factor: i,
            n: f[i].n(),
        }));
    }

    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let (mi, mj) = (f[i].n() as u64 + 1, f[j].n() as u64 + 1);
            let d = gcd(mi, mj);
            if d >= 3 {
                let transfer = if (mi / d) % 2 == 1 { i } else { j };
                return Ok(no(Reason::SharedDivisor {
                    factors: [i, j],
                    gcd: d,
                    transfer,
                }));
            }
        }
    }

    let has_pow2 = f
        .iter()
        .any(|x| matches!(x.class(), PathClass::PowerOfTwoMinusOne(_)));
    let others: Vec<usize> = (0..f.len())
        .filter(|&i| !matches!(f[i].class(), PathClass::PowerOfTwoMinusOne(_)))
        .collect();

    if has_pow2 && others.len() == 1 {
        let case = match f[others[0]].class() {
            PathClass::PrimeMinusOne(_) => 1,
            _ => 2,
        };
        return Ok(Classification::Pgst { case });
    }

    let violating = |c: PathClass| match c {
        PathClass::PrimeMinusOne(p) => p % 8 != 1,
        PathClass::TwicePrimeMinusOne(q) => q % 4 != 1,
        _ => false,
    };
    let Some(&i) = others.iter().find(|&&i| violating(f[i].class())) else {
        return Ok(Classification::Pgst {
            case: if has_pow2 { 4 } else { 3 },
        });
    };
    let j = *others.iter().find(|&&j| j != i).expect("at least two prime-type factors");
    Ok(no(congruence_reason(g, i, j)))
}

fn no(reason: Reason) -> Classification {
    Classification::No { reason }
}

/// Picks the witness family for violating factor `i` against factor `j`.
fn congruence_reason(g: &ProductGraph, i: usize, j: usize) -> Reason {
    use PathClass::{PrimeMinusOne as P, TwicePrimeMinusOne as T};
    use WitnessCase::*;
    let f = g.factors();
    // (case, first factor, second factor)
    let (witness, first, second) = match (f[i].class(), f[j].class()) {
        (P(p), P(_)) if p % 4 == 3 => (PrimeThreeMod4, i, j),
        (P(p), T(_)) if p % 4 == 3 => (PrimeThreeMod4WithTwicePrime, j, i),
        (P(_), P(q)) if q % 4 == 1 => (PrimeFiveMod8, i, j),
        (P(_), P(_)) => (PrimeThreeMod4, j, i),
        (P(_), T(q)) if q % 4 == 1 => (PrimeFiveMod8WithTwicePrime, j, i),
        (P(_), T(_)) => (TwicePrimeWithPrime, j, i),
        (T(_), T(_)) => (TwicePrimeThreeMod4, i, j),
        (T(_), P(q)) if q % 4 == 1 => (TwicePrimeWithPrime, i, j),
        (T(_), P(_)) => (PrimeThreeMod4WithTwicePrime, i, j),
        other => unreachable!("no witness family for {other:?}"),
    };
    let prime = |x: usize| f[x].class().prime().expect("prime-type factor");
    let factors = [first, second];
    Reason::Congruence {
        witness,
        factors,
        primes: [prime(first), prime(second)],
        transfer: factors[witness.transfer_coord()],
    }
}
