//! Lattice decision procedure for pretty good state transfer between corners.
//!
//! For a strongly cospectral pair, transfer fails iff some integer family
//! `ℓ` over the distinct eigenvalues satisfies `∑ ℓθ = 0`, `∑ ℓ = 0` and has
//! odd sum over Φ⁻. The solutions of the two linear conditions form a
//! lattice; the parity functional is odd somewhere on it iff it is odd on
//! some basis vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::certificate::Certificate;
use crate::cospectral::{strong_cospectrality_in, CornerPair};
use crate::error::Result;
use crate::lattice::{integer_kernel, integer_row_basis};
use crate::spectra::{spectrum_table, EigenIndex, LiftedValues, ProductGraph, SpectrumTable};

/// Saturated lattice of integer relations among the distinct eigenvalues.
#[derive(Debug, Clone)]
pub struct RelationLattice {
    /// Coordinate `i` is the eigenvalue of the `i`-th group, named by its
    /// representative index.
    pub coordinates: Vec<EigenIndex>,
    /// Basis vectors, each of length `coordinates.len()`.
    pub basis: Vec<Vec<BigInt>>,
}

impl RelationLattice {
    pub fn build(table: &SpectrumTable) -> Self {
        let g = table.graph();
        let mut lifts = LiftedValues::new(g);
        let dim = {
            let z = crate::cyclotomic::CycloReal::zero(lifts.conductor());
            z.coeffs().len()
        };

        // One column per factor eigenvalue, in the common power basis.
        let mut offsets = Vec::with_capacity(g.k());
        let mut columns: Vec<Vec<BigRational>> = Vec::new();
        for (fi, f) in g.factors().iter().enumerate() {
            offsets.push(columns.len());
            for r in f.index_range(g.hamiltonian()) {
                columns.push(lifts.get(fi, r).coeffs().to_vec());
            }
        }
        let width = columns.len();
        let rows: Vec<Vec<BigRational>> = (0..dim)
            .map(|t| columns.iter().map(|c| c[t].clone()).collect())
            .collect();
        let reduced = integer_row_basis(&rows, width);

        let coordinates: Vec<EigenIndex> = table
            .groups()
            .iter()
            .map(|grp| grp.representative().clone())
            .collect();
        let selected: Vec<Vec<usize>> = coordinates
            .iter()
            .map(|idx| {
                g.factors()
                    .iter()
                    .enumerate()
                    .map(|(fi, f)| {
                        offsets[fi] + idx.0[fi] - *f.index_range(g.hamiltonian()).start()
                    })
                    .collect()
            })
            .collect();

        let mut relation: Vec<Vec<BigInt>> = reduced
            .iter()
            .map(|row| {
                selected
                    .iter()
                    .map(|cols| cols.iter().map(|&c| &row[c]).sum())
                    .collect()
            })
            .collect();
        relation.push(vec![BigInt::one(); coordinates.len()]);

        let basis = integer_kernel(&relation, coordinates.len());
        Self { coordinates, basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Lattice,
    Witness,
    Classifier,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pgst,
    NoPgst {
        #[serde(serialize_with = "serialize_certificate")]
        certificate: Certificate,
    },
    NotStronglyCospectral {
        witness: (EigenIndex, EigenIndex),
    },
}

fn serialize_certificate<S: serde::Serializer>(
    c: &Certificate,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    crate::certificate::CertificateDoc::from(c).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decision {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub method: Method,
}

impl Decision {
    pub fn is_pgst(&self) -> bool {
        matches!(self.verdict, Verdict::Pgst)
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.verdict {
            Verdict::NoPgst { certificate } => Some(certificate),
            _ => None,
        }
    }
}

/// Decides pretty good state transfer between two corners.
pub fn decide_pgst(g: &ProductGraph, pair: &CornerPair) -> Result<Decision> {
    pair.check(g)?;
    let table = spectrum_table(g)?;
    Ok(decide_pgst_in(&table, pair))
}

/// As [`decide_pgst`], reusing a prebuilt spectrum table.
pub fn decide_pgst_in(table: &SpectrumTable, pair: &CornerPair) -> Decision {
    let report = strong_cospectrality_in(table, pair);
    if let Some(witness) = report.witness {
        return Decision {
            verdict: Verdict::NotStronglyCospectral { witness },
            method: Method::Lattice,
        };
    }
    let lattice = RelationLattice::build(table);
    let minus: Vec<bool> = report.sign_map.iter().map(|(_, s)| *s < 0).collect();
    let odd = lattice.basis.iter().find(|v| {
        v.iter()
            .zip(&minus)
            .filter(|(_, &m)| m)
            .map(|(x, _)| x)
            .sum::<BigInt>()
            .is_odd()
    });
    let verdict = match odd {
        None => Verdict::Pgst,
        Some(v) => Verdict::NoPgst {
            certificate: Certificate::new(
                table.graph().clone(),
                pair.clone(),
                lattice
                    .coordinates
                    .iter()
                    .cloned()
                    .zip(v.iter().cloned())
                    .filter(|(_, x)| !x.is_zero()),
            ),
        },
    };
    Decision {
        verdict,
        method: Method::Lattice,
    }
}
