//! Integer certificates refuting pretty good state transfer, their JSON form,
//! and a verifier that shares no code with the lattice computation.
//!
//! A certificate is a finitely supported family `ℓ` over eigen indices with
//! `∑ ℓ θ = 0`, `∑ ℓ = 0` and an odd sum over the indices whose corner
//! amplitudes have opposite signs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cospectral::{relative_sign, strong_cospectrality, CornerPair};
use crate::cyclotomic::CycloReal;
use crate::error::{Error, Result};
use crate::spectra::{path_eigenvalue, EigenIndex, Hamiltonian, ProductGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub graph: ProductGraph,
    pub pair: CornerPair,
    /// Nonzero coefficients only.
    pub coeffs: BTreeMap<EigenIndex, BigInt>,
}

impl Certificate {
    /// Drops zero entries while collecting.
    pub fn new(
        graph: ProductGraph,
        pair: CornerPair,
        entries: impl IntoIterator<Item = (EigenIndex, BigInt)>,
    ) -> Self {
        let mut coeffs = BTreeMap::new();
        for (idx, v) in entries {
            let slot: &mut BigInt = coeffs.entry(idx).or_default();
            *slot += v;
        }
        coeffs.retain(|_, v: &mut BigInt| !v.is_zero());
        Self {
            graph,
            pair,
            coeffs,
        }
    }

    pub fn get(&self, idx: &EigenIndex) -> BigInt {
        self.coeffs.get(idx).cloned().unwrap_or_default()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `∑ ℓ` over indices whose relative sign is −1.
    pub fn phi_minus_sum(&self) -> BigInt {
        self.coeffs
            .iter()
            .filter(|(idx, _)| relative_sign(&self.graph, &self.pair, idx) < 0)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CertificateDoc::from(self)).expect("certificate serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&CertificateDoc::from(self)).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: CertificateDoc =
            serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
        doc.try_into()
    }
}

/// Integer that stays a JSON number when it fits in 64 bits and falls back
/// to a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            I(i64),
            U(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::I(v) => Ok(JsonInt(v.into())),
            Raw::U(v) => Ok(JsonInt(v.into())),
            Raw::S(s) => s
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub factors: Vec<usize>,
    pub hamiltonian: Hamiltonian,
    pub pair: PairDoc,
    pub entries: Vec<(EigenIndex, JsonInt)>,
}

impl From<&Certificate> for CertificateDoc {
    fn from(c: &Certificate) -> Self {
        let (a, b) = c.pair.coords(&c.graph);
        Self {
            factors: c.graph.sizes(),
            hamiltonian: c.graph.hamiltonian(),
            pair: PairDoc { a, b },
            entries: c
                .coeffs
                .iter()
                .map(|(i, v)| (i.clone(), JsonInt(v.clone())))
                .collect(),
        }
    }
}

impl TryFrom<CertificateDoc> for Certificate {
    type Error = Error;

    fn try_from(doc: CertificateDoc) -> Result<Self> {
        let graph = ProductGraph::new(&doc.factors, doc.hamiltonian)?;
        let pair = CornerPair::from_coords(&graph, &doc.pair.a, &doc.pair.b)?;
        for (idx, _) in &doc.entries {
            graph.check_index(idx)?;
        }
        Ok(Certificate::new(
            graph,
            pair,
            doc.entries.into_iter().map(|(i, v)| (i, v.0)),
        ))
    }
}

/// Outcome of each certificate condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    /// `∑ ℓ θ = 0` exactly.
    pub relation: bool,
    /// `∑ ℓ = 0`.
    pub balanced: bool,
    /// Odd sum over Φ⁻.
    pub odd_parity: bool,
    /// Strong cospectrality of the pair, when the spectrum fits under the cap.
    pub strongly_cospectral: Option<bool>,
}

impl CertificateCheck {
    pub fn valid(&self) -> bool {
        self.relation && self.balanced && self.odd_parity
    }
}

/// True iff the three integer conditions hold. Strong cospectrality of the
/// pair is a precondition and is not re-checked here.
pub fn verify_certificate(c: &Certificate) -> bool {
    conditions(c).map_or(false, |(r, b, o)| r && b && o)
}

/// Checks every condition separately, including strong cospectrality.
pub fn check_certificate(c: &Certificate) -> CertificateCheck {
    let (relation, balanced, odd_parity) = conditions(c).unwrap_or((false, false, false));
    let strongly_cospectral = strong_cospectrality(&c.graph, &c.pair)
        .ok()
        .map(|r| r.strongly_cospectral);
    CertificateCheck {
        relation,
        balanced,
        odd_parity,
        strongly_cospectral,
    }
}

fn conditions(c: &Certificate) -> Result<(bool, bool, bool)> {
    c.pair.check(&c.graph)?;
    for idx in c.coeffs.keys() {
        c.graph.check_index(idx)?;
    }
    let balanced = c.coefficient_sum().is_zero();
    let odd_parity = c.phi_minus_sum().is_odd();

    // ∑ ℓ θ = ∑_f ∑_r a_{f,r} λ_{f,r} with a_{f,r} the marginal of ℓ
    let h = c.graph.hamiltonian();
    let mut total: Option<CycloReal> = None;
    for (f_pos, f) in c.graph.factors().iter().enumerate() {
        let mut marginal: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (idx, v) in &c.coeffs {
            *marginal.entry(idx.0[f_pos]).or_default() += v;
        }
        let mut part = CycloReal::zero(f.conductor(h));
        for (r, a) in marginal {
            if !a.is_zero() {
                part.add_scaled_assign(&path_eigenvalue(f, r, h)?, &a);
            }
        }
        total = Some(match total {
            None => part,
            Some(t) => &t + &part,
        });
    }
    let relation = total.map_or(true, |t| t.is_zero());
    Ok((relation, balanced, odd_parity))
}
