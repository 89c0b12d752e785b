//! Strong cospectrality of corner pairs and the Φ⁺/Φ⁻ sign split.
//!
//! Every product eigenvector is a tensor of path eigenvectors whose end
//! components never vanish, so two corners are strongly cospectral exactly
//! when the relative sign of the corner amplitudes is constant on each
//! eigenvalue group.

use std::fmt;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::spectra::{end_sign, spectrum_table, EigenIndex, ProductGraph, SpectrumTable};

/// Two corners of a path product. `true` marks the last vertex of a factor,
/// `false` the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CornerPair {
    a: Vec<bool>,
    b: Vec<bool>,
}

impl CornerPair {
    pub fn new(a: Vec<bool>, b: Vec<bool>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return domain(format!(
                "corner masks must be nonempty and equally long, got {} and {}",
                a.len(),
                b.len()
            ));
        }
        Ok(Self { a, b })
    }

    /// From the `10/00` syntax: one digit per factor, `1` for the last vertex.
    /// The first mask is the source corner.
    pub fn parse(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| Error::Domain(format!("corner pair {s:?} lacks '/'")))?;
        let bits = |m: &str| -> Result<Vec<bool>> {
            m.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => domain(format!("bad corner digit {c:?} in {s:?}")),
                })
                .collect()
        };
        Self::new(bits(a)?, bits(b)?)
    }

    /// From vertex coordinates, each of which must be `1` or `n_i`.
    pub fn from_coords(g: &ProductGraph, a: &[usize], b: &[usize]) -> Result<Self> {
        let conv = |c: &[usize]| -> Result<Vec<bool>> {
            if c.len() != g.k() {
                return domain(format!("corner {c:?} has wrong length for {g}"));
            }
            c.iter()
                .zip(g.factors())
                .map(|(&x, f)| {
                    if x == 1 {
                        Ok(false)
                    } else if x == f.n() {
                        Ok(true)
                    } else {
                        domain(format!("{x} is not an end of P_{}", f.n()))
                    }
                })
                .collect()
        };
        Self::new(conv(a)?, conv(b)?)
    }

    /// `(1,…,1)` and the corner moved to the far end along `coord`.
    pub fn adjacent(k: usize, coord: usize) -> Result<Self> {
        if coord >= k {
            return domain(format!("coordinate {coord} out of range for {k} factors"));
        }
        let a = vec![false; k];
        let mut b = a.clone();
        b[coord] = true;
        Self::new(a, b)
    }

    pub fn a(&self) -> &[bool] {
        &self.a
    }

    pub fn b(&self) -> &[bool] {
        &self.b
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn reversed(&self) -> Self {
        Self {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Coordinates where the two corners differ.
    pub fn differ_mask(&self) -> Vec<usize> {
        (0..self.a.len()).filter(|&i| self.a[i] != self.b[i]).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.a == self.b
    }

    pub fn check(&self, g: &ProductGraph) -> Result<()> {
        if self.k() != g.k() {
            return domain(format!(
                "corner pair has {} coordinates but {g} has {} factors",
                self.k(),
                g.k()
            ));
        }
        Ok(())
    }

    /// 1-indexed vertex coordinates of both corners.
    pub fn coords(&self, g: &ProductGraph) -> (Vec<usize>, Vec<usize>) {
        let conv = |m: &[bool]| {
            m.iter()
                .zip(g.factors())
                .map(|(&far, f)| if far { f.n() } else { 1 })
                .collect()
        };
        (conv(&self.a), conv(&self.b))
    }

    pub fn mask_string(&self) -> String {
        let s = |m: &[bool]| m.iter().map(|&x| if x { '1' } else { '0' }).collect::<String>();
        format!("{}/{}", s(&self.a), s(&self.b))
    }
}

impl fmt::Display for CornerPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.mask_string())
    }
}

/// Relative sign of the amplitudes at `b` and `a` for the eigenvector `idx`.
pub fn relative_sign(g: &ProductGraph, pair: &CornerPair, idx: &EigenIndex) -> i8 {
    let h = g.hamiltonian();
    pair.differ_mask()
        .into_iter()
        .map(|i| end_sign(&g.factors()[i], idx.0[i], h))
        .product()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CospectralReport {
    pub strongly_cospectral: bool,
    /// Lexicographically smallest pair of indices sharing an eigenvalue but
    /// carrying opposite signs.
    pub witness: Option<(EigenIndex, EigenIndex)>,
    /// Common sign per eigenvalue group, keyed by the group representative.
    /// Empty unless strongly cospectral.
    pub sign_map: Vec<(EigenIndex, i8)>,
}

impl CospectralReport {
    /// Representatives of the groups with sign −1.
    pub fn phi_minus(&self) -> Result<Vec<EigenIndex>> {
        if !self.strongly_cospectral {
            return Err(Error::State(
                "Φ⁻ is only defined for strongly cospectral pairs".into(),
            ));
        }
        Ok(self
            .sign_map
            .iter()
            .filter(|(_, s)| *s < 0)
            .map(|(i, _)| i.clone())
            .collect())
    }
}

pub fn strong_cospectrality(g: &ProductGraph, pair: &CornerPair) -> Result<CospectralReport> {
    pair.check(g)?;
    Ok(strong_cospectrality_in(&spectrum_table(g)?, pair))
}

/// Grouped-sign test against a prebuilt table.
pub fn strong_cospectrality_in(table: &SpectrumTable, pair: &CornerPair) -> CospectralReport {
    let g = table.graph();
    let mut witness: Option<(EigenIndex, EigenIndex)> = None;
    let mut sign_map = Vec::with_capacity(table.distinct_count());
    for group in table.groups() {
        let rep = group.representative();
        let s0 = relative_sign(g, pair, rep);
        match group.members[1..]
            .iter()
            .find(|m| relative_sign(g, pair, m) != s0)
        {
            Some(other) => {
                let cand = (rep.clone(), other.clone());
                if witness.as_ref().map_or(true, |w| cand < *w) {
                    witness = Some(cand);
                }
            }
            None => sign_map.push((rep.clone(), s0)),
        }
    }
    if witness.is_some() {
        sign_map.clear();
    }
    CospectralReport {
        strongly_cospectral: witness.is_none(),
        witness,
        sign_map,
    }
}

/// Representatives of the eigenvalue groups in Φ⁻ for a strongly cospectral pair.
pub fn phi_minus(g: &ProductGraph, pair: &CornerPair) -> Result<Vec<EigenIndex>> {
    strong_cospectrality(g, pair)?.phi_minus()
}
