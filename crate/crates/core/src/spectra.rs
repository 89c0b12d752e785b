//! Closed-form spectra of paths and of their cartesian products.
//!
//! Vertices are 1-indexed along every path. Adjacency eigenvalues of `P_n`
//! are `2cos(rπ/(n+1))` for `1 ≤ r ≤ n`; Laplacian eigenvalues are `0` for
//! `r = 0` and `2 + 2cos(rπ/n)` for `1 ≤ r ≤ n − 1`. A product eigenvalue is
//! labelled by an [`EigenIndex`] holding one such `r` per factor.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclotomic::{make_cos, CycloReal};
use crate::error::{domain, Error, Result};
use crate::scalar::Real;

/// Default cap on the number of product eigenvalue indices in a table.
pub const DEFAULT_INDEX_CAP: u128 = 20_000;

/// Float clusters wider than this are never merged.
const CLUSTER_GAP: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Hamiltonian {
    Adjacency,
    Laplacian,
}

impl fmt::Display for Hamiltonian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hamiltonian::Adjacency => write!(f, "adjacency"),
            Hamiltonian::Laplacian => write!(f, "laplacian"),
        }
    }
}

impl std::str::FromStr for Hamiltonian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "adjacency" | "xx" => Ok(Hamiltonian::Adjacency),
            "laplacian" | "heisenberg" => Ok(Hamiltonian::Laplacian),
            _ => domain(format!("unknown hamiltonian {s:?}")),
        }
    }
}

/// Arithmetic class of a path `P_n`, read off from `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathClass {
    /// `n + 1 = p` for an odd prime `p`.
    PrimeMinusOne(u64),
    /// `n + 1 = 2p` for an odd prime `p`.
    TwicePrimeMinusOne(u64),
    /// `n + 1 = 2^e`.
    PowerOfTwoMinusOne(u32),
    Other,
}

impl PathClass {
    pub fn of(n: usize) -> Self {
        let m = n as u64 + 1;
        if let Some(e) = arith::log2_exact(m) {
            PathClass::PowerOfTwoMinusOne(e)
        } else if arith::is_prime(m) {
            PathClass::PrimeMinusOne(m)
        } else if m % 2 == 0 && arith::is_prime(m / 2) {
            PathClass::TwicePrimeMinusOne(m / 2)
        } else {
            PathClass::Other
        }
    }

    /// Path size `n` the class stands for; `None` for [`PathClass::Other`].
    pub fn path_size(&self) -> Option<usize> {
        match *self {
            PathClass::PrimeMinusOne(p) => Some(p as usize - 1),
            PathClass::TwicePrimeMinusOne(p) => Some(2 * p as usize - 1),
            PathClass::PowerOfTwoMinusOne(e) => Some((1usize << e) - 1),
            PathClass::Other => None,
        }
    }

    /// The odd prime behind a prime-type class.
    pub fn prime(&self) -> Option<u64> {
        match *self {
            PathClass::PrimeMinusOne(p) | PathClass::TwicePrimeMinusOne(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathFactor {
    n: usize,
    class: PathClass,
}

impl PathFactor {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return domain(format!("path needs at least 2 vertices, got {n}"));
        }
        Ok(Self {
            n,
            class: PathClass::of(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> PathClass {
        self.class
    }

    /// Valid eigenvalue labels `r` for the given Hamiltonian.
    pub fn index_range(&self, h: Hamiltonian) -> RangeInclusive<usize> {
        match h {
            Hamiltonian::Adjacency => 1..=self.n,
            Hamiltonian::Laplacian => 0..=self.n - 1,
        }
    }

    /// Conductor in which the factor's eigenvalues are natively expressed.
    pub fn conductor(&self, h: Hamiltonian) -> u64 {
        match h {
            Hamiltonian::Adjacency => self.n as u64 + 1,
            Hamiltonian::Laplacian => self.n as u64,
        }
    }

    fn check_index(&self, r: usize, h: Hamiltonian) -> Result<()> {
        if self.index_range(h).contains(&r) {
            Ok(())
        } else {
            domain(format!(
                "eigenvalue label {r} outside {:?} for P_{} ({h})",
                self.index_range(h),
                self.n
            ))
        }
    }
}

/// Label of one product eigenvalue: one per-factor label per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EigenIndex(pub Vec<usize>);

impl EigenIndex {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for EigenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<usize>> for EigenIndex {
    fn from(v: Vec<usize>) -> Self {
        EigenIndex(v)
    }
}

/// Cartesian product of paths together with the walk Hamiltonian.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductGraph {
    factors: Vec<PathFactor>,
    hamiltonian: Hamiltonian,
}

impl ProductGraph {
    pub fn new(sizes: &[usize], hamiltonian: Hamiltonian) -> Result<Self> {
        if sizes.is_empty() {
            return domain("a product needs at least one factor");
        }
        let factors = sizes
            .iter()
            .map(|&n| PathFactor::new(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            factors,
            hamiltonian,
        })
    }

    pub fn adjacency(sizes: &[usize]) -> Result<Self> {
        Self::new(sizes, Hamiltonian::Adjacency)
    }

    pub fn laplacian(sizes: &[usize]) -> Result<Self> {
        Self::new(sizes, Hamiltonian::Laplacian)
    }

    pub fn factors(&self) -> &[PathFactor] {
        &self.factors
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.n).collect()
    }

    pub fn hamiltonian(&self) -> Hamiltonian {
        self.hamiltonian
    }

    /// Number of cartesian factors.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn vertex_count(&self) -> u128 {
        self.factors.iter().map(|f| f.n as u128).product()
    }

    pub fn corner_count(&self) -> u128 {
        1u128 << self.factors.len()
    }

    /// Common conductor for product eigenvalues: `lcm(n_i + 1)` for the
    /// adjacency matrix, `lcm(2 n_i)` for the Laplacian.
    pub fn conductor(&self) -> u64 {
        self.factors.iter().fold(1, |acc, f| {
            let c = match self.hamiltonian {
                Hamiltonian::Adjacency => f.n as u64 + 1,
                Hamiltonian::Laplacian => 2 * f.n as u64,
            };
            arith::lcm(acc, c)
        })
    }

    pub fn check_index(&self, idx: &EigenIndex) -> Result<()> {
        if idx.0.len() != self.k() {
            return domain(format!(
                "eigen index {idx} has {} entries for {} factors",
                idx.0.len(),
                self.k()
            ));
        }
        for (f, &r) in self.factors.iter().zip(&idx.0) {
            f.check_index(r, self.hamiltonian)?;
        }
        Ok(())
    }

    /// Lexicographic position of an index among all indices.
    pub fn position(&self, idx: &EigenIndex) -> Result<usize> {
        self.check_index(idx)?;
        let mut pos = 0usize;
        for (f, &r) in self.factors.iter().zip(&idx.0) {
            let base = *f.index_range(self.hamiltonian).start();
            pos = pos * f.n + (r - base);
        }
        Ok(pos)
    }

    /// Inverse of [`ProductGraph::position`].
    pub fn index_at(&self, mut pos: usize) -> EigenIndex {
        let mut out = vec![0; self.k()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            let base = *f.index_range(self.hamiltonian).start();
            *slot = base + pos % f.n;
            pos /= f.n;
        }
        EigenIndex(out)
    }

    /// All eigen indices in lexicographic order.
    pub fn indices(&self) -> impl Iterator<Item = EigenIndex> + '_ {
        (0..self.vertex_count() as usize).map(|p| self.index_at(p))
    }
}

impl fmt::Display for ProductGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "□")?;
            }
            write!(f, "P_{}", fac.n)?;
        }
        write!(f, " [{}]", self.hamiltonian)
    }
}

/// Exact eigenvalue number `r` of a single path.
pub fn path_eigenvalue(f: &PathFactor, r: usize, h: Hamiltonian) -> Result<CycloReal> {
    f.check_index(r, h)?;
    match h {
        Hamiltonian::Adjacency => make_cos(r as u64, f.n as u64 + 1),
        Hamiltonian::Laplacian if r == 0 => Ok(CycloReal::zero(f.n as u64)),
        Hamiltonian::Laplacian => {
            let c = make_cos(r as u64, f.n as u64)?;
            Ok(&c + &CycloReal::from_integer(2, f.n as u64))
        }
    }
}

/// Floating-point eigenvalue number `r` of a single path.
pub fn path_eigenvalue_real<T: Real>(f: &PathFactor, r: usize, h: Hamiltonian) -> T {
    let two = T::of(2.0);
    match h {
        Hamiltonian::Adjacency => {
            two * (T::of(r as f64) * T::PI() / T::of(f.n as f64 + 1.0)).cos()
        }
        Hamiltonian::Laplacian if r == 0 => T::zero(),
        Hamiltonian::Laplacian => two + two * (T::of(r as f64) * T::PI() / T::of(f.n as f64)).cos(),
    }
}

/// Component at `vertex` (1-indexed) of the unit eigenvector for label `r`.
///
/// Signs are fixed so that the component at vertex 1 is positive.
pub fn path_eigenvector_component<T: Real>(
    f: &PathFactor,
    r: usize,
    vertex: usize,
    h: Hamiltonian,
) -> T {
    let n = T::of(f.n as f64);
    let j = T::of(vertex as f64);
    match h {
        Hamiltonian::Adjacency => {
            let np1 = n + T::one();
            (T::of(2.0) / np1).sqrt() * (T::of(r as f64) * j * T::PI() / np1).sin()
        }
        Hamiltonian::Laplacian if r == 0 => T::one() / n.sqrt(),
        Hamiltonian::Laplacian => {
            // 2 + 2cos(rπ/n) = 2 − 2cos(kπ/n) with k = n − r
            let k = T::of((f.n - r) as f64);
            (T::of(2.0) / n).sqrt() * (k * T::PI() * (j - T::of(0.5)) / n).cos()
        }
    }
}

/// Unit-eigenvector components at the first and last vertex of the path.
pub fn path_eigenvector_end_values<T: Real>(
    f: &PathFactor,
    r: usize,
    h: Hamiltonian,
) -> Result<(T, T)> {
    f.check_index(r, h)?;
    Ok((
        path_eigenvector_component(f, r, 1, h),
        path_eigenvector_component(f, r, f.n, h),
    ))
}

/// Sign of (last-vertex component) / (first-vertex component).
///
/// Adjacency: `(−1)^{r+1}`. Laplacian: `+1` for `r = 0`, otherwise
/// `(−1)^{n−r}`, which is `(−1)^r` whenever `n` is even.
pub fn end_sign(f: &PathFactor, r: usize, h: Hamiltonian) -> i8 {
    let odd = match h {
        Hamiltonian::Adjacency => r % 2 == 0,
        Hamiltonian::Laplacian if r == 0 => false,
        Hamiltonian::Laplacian => (f.n - r) % 2 == 1,
    };
    if odd {
        -1
    } else {
        1
    }
}

/// Exact product eigenvalue for `idx`, in the graph's common conductor.
pub fn product_eigenvalue(g: &ProductGraph, idx: &EigenIndex) -> Result<CycloReal> {
    g.check_index(idx)?;
    let conductor = g.conductor();
    let mut total = CycloReal::zero(conductor);
    for (f, &r) in g.factors.iter().zip(&idx.0) {
        let v = path_eigenvalue(f, r, g.hamiltonian)?.lift(conductor)?;
        total = &total + &v;
    }
    Ok(total)
}

/// Per-factor eigenvalues lifted to a common conductor, computed on demand.
pub(crate) struct LiftedValues {
    conductor: u64,
    hamiltonian: Hamiltonian,
    factors: Vec<PathFactor>,
    cache: Vec<Vec<Option<CycloReal>>>,
}

impl LiftedValues {
    pub(crate) fn new(g: &ProductGraph) -> Self {
        Self {
            conductor: g.conductor(),
            hamiltonian: g.hamiltonian,
            factors: g.factors.clone(),
            cache: g.factors.iter().map(|f| vec![None; f.n]).collect(),
        }
    }

    pub(crate) fn conductor(&self) -> u64 {
        self.conductor
    }

    pub(crate) fn get(&mut self, factor: usize, r: usize) -> &CycloReal {
        let f = self.factors[factor];
        let base = *f.index_range(self.hamiltonian).start();
        let slot = &mut self.cache[factor][r - base];
        if slot.is_none() {
            let v = path_eigenvalue(&f, r, self.hamiltonian)
                .and_then(|v| v.lift(self.conductor))
                .expect("label validated by caller");
            *slot = Some(v);
        }
        slot.as_ref().unwrap()
    }

    pub(crate) fn sum(&mut self, idx: &[usize]) -> CycloReal {
        let mut total = CycloReal::zero(self.conductor);
        for (i, &r) in idx.iter().enumerate() {
            total.add_scaled_assign(self.get(i, r), &1.into());
        }
        total
    }
}

/// One distinct eigenvalue and every index that produces it.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenGroup {
    /// Indices in lexicographic order; the first one is the representative.
    pub members: Vec<EigenIndex>,
    /// Floating-point value of the eigenvalue.
    pub approx: f64,
}

impl EigenGroup {
    pub fn representative(&self) -> &EigenIndex {
        &self.members[0]
    }

    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// All product eigenvalue indices, partitioned by exact equality of the
/// eigenvalue. Groups are ordered by their representative.
#[derive(Debug, Clone)]
pub struct SpectrumTable {
    graph: ProductGraph,
    groups: Vec<EigenGroup>,
    group_of: Vec<u32>,
}

impl SpectrumTable {
    pub fn graph(&self) -> &ProductGraph {
        &self.graph
    }

    pub fn groups(&self) -> &[EigenGroup] {
        &self.groups
    }

    /// Number of indices (eigenvalues counted with multiplicity).
    pub fn index_count(&self) -> usize {
        self.group_of.len()
    }

    pub fn distinct_count(&self) -> usize {
        self.groups.len()
    }

    pub fn is_simple(&self) -> bool {
        self.groups.len() == self.group_of.len()
    }

    pub fn group_of(&self, idx: &EigenIndex) -> Result<usize> {
        Ok(self.group_of[self.graph.position(idx)?] as usize)
    }

    /// Exact value of a group's eigenvalue.
    pub fn exact_value(&self, group: usize) -> CycloReal {
        product_eigenvalue(&self.graph, self.groups[group].representative())
            .expect("table indices are valid")
    }

    /// `(index, group)` pairs in lexicographic index order.
    pub fn entries(&self) -> impl Iterator<Item = (EigenIndex, usize)> + '_ {
        self.group_of
            .iter()
            .enumerate()
            .map(|(p, &g)| (self.graph.index_at(p), g as usize))
    }
}

pub fn spectrum_table(g: &ProductGraph) -> Result<SpectrumTable> {
    spectrum_table_capped(g, DEFAULT_INDEX_CAP)
}

/// Builds the grouped spectrum, refusing graphs with more than `cap` indices.
///
/// Indices are first sorted by floating-point value and split wherever
/// consecutive values differ by more than `1e-9`; inside each remaining
/// cluster the exact coefficient vectors decide the grouping.
pub fn spectrum_table_capped(g: &ProductGraph, cap: u128) -> Result<SpectrumTable> {
    let total = g.vertex_count();
    if total > cap {
        return Err(Error::ResourceCap {
            what: "spectrum table indices",
            size: total,
            cap,
        });
    }
    let total = total as usize;
    let h = g.hamiltonian;
    let factor_values: Vec<Vec<f64>> = g
        .factors
        .iter()
        .map(|f| {
            f.index_range(h)
                .map(|r| path_eigenvalue_real::<f64>(f, r, h))
                .collect()
        })
        .collect();

    let mut values = vec![0.0f64; total];
    for (pos, v) in values.iter_mut().enumerate() {
        let mut rem = pos;
        for (fv, f) in factor_values.iter().zip(&g.factors).rev() {
            *v += fv[rem % f.n];
            rem /= f.n;
        }
    }

    let mut order: Vec<usize> = (0..total).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));

    let mut lifts = LiftedValues::new(g);
    let mut groups_pos: Vec<Vec<usize>> = Vec::new();
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] - values[order[end - 1]] <= CLUSTER_GAP {
            end += 1;
        }
        let cluster = &order[start..end];
        if cluster.len() == 1 {
            groups_pos.push(vec![cluster[0]]);
        } else {
            let mut by_value: HashMap<Vec<BigRational>, Vec<usize>> = HashMap::new();
            for &pos in cluster {
                let idx = g.index_at(pos);
                let exact = lifts.sum(&idx.0);
                by_value.entry(exact.coeffs().to_vec()).or_default().push(pos);
            }
            for mut members in by_value.into_values() {
                members.sort_unstable();
                groups_pos.push(members);
            }
        }
        start = end;
    }
    groups_pos.sort_by_key(|m| m[0]);

    let mut group_of = vec![0u32; total];
    let groups = groups_pos
        .into_iter()
        .enumerate()
        .map(|(gi, members)| {
            for &p in &members {
                group_of[p] = gi as u32;
            }
            EigenGroup {
                approx: values[members[0]],
                members: members.into_iter().map(|p| g.index_at(p)).collect(),
            }
        })
        .collect();

    Ok(SpectrumTable {
        graph: g.clone(),
        groups,
        group_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn factor(n: usize) -> PathFactor {
        PathFactor::new(n).unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(PathClass::of(3), PathClass::PowerOfTwoMinusOne(2));
        assert_eq!(PathClass::of(1), PathClass::PowerOfTwoMinusOne(1));
        assert_eq!(PathClass::of(2), PathClass::PrimeMinusOne(3));
        assert_eq!(PathClass::of(5), PathClass::TwicePrimeMinusOne(3));
        assert_eq!(PathClass::of(16), PathClass::PrimeMinusOne(17));
        assert_eq!(PathClass::of(8), PathClass::Other);
        assert_eq!(PathClass::of(7), PathClass::PowerOfTwoMinusOne(3));
        for n in 1..300 {
            if let Some(m) = PathClass::of(n).path_size() {
                assert_eq!(m, n);
            }
        }
        assert!(PathFactor::new(1).is_err());
    }

    #[test]
    fn path_eigenvalue_examples() {
        let one = CycloReal::from_integer(1, 3);
        assert_eq!(path_eigenvalue(&factor(2), 1, Hamiltonian::Adjacency).unwrap(), one);
        assert!(path_eigenvalue(&factor(4), 0, Hamiltonian::Laplacian)
            .unwrap()
            .is_zero());
        let two = path_eigenvalue(&factor(4), 2, Hamiltonian::Laplacian).unwrap();
        assert_eq!(two.is_rational(), Some(BigRational::from_integer(2.into())));
        assert!(path_eigenvalue(&factor(4), 4, Hamiltonian::Laplacian).is_err());
        assert!(path_eigenvalue(&factor(4), 0, Hamiltonian::Adjacency).is_err());
    }

    #[test]
    fn end_values_two_vertices() {
        let f = factor(2);
        let (a, b) = path_eigenvector_end_values::<f64>(&f, 1, Hamiltonian::Adjacency).unwrap();
        assert!((a - 0.5f64.sqrt()).abs() < 1e-12 && (b - 0.5f64.sqrt()).abs() < 1e-12);
        let (a, b) = path_eigenvector_end_values::<f64>(&f, 2, Hamiltonian::Adjacency).unwrap();
        assert!((a - 0.5f64.sqrt()).abs() < 1e-12 && (b + 0.5f64.sqrt()).abs() < 1e-12);
        assert_eq!(end_sign(&factor(4), 1, Hamiltonian::Laplacian), -1);
    }

    #[test]
    fn odd_laplacian_sign_follows_n_minus_r() {
        // P_3 Laplacian, 2 + 2cos(π/3) = 3 has eigenvector (1, −2, 1)
        let f = factor(3);
        assert_eq!(end_sign(&f, 1, Hamiltonian::Laplacian), 1);
        let (a, b) = path_eigenvector_end_values::<f64>(&f, 1, Hamiltonian::Laplacian).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn product_eigenvalue_examples() {
        let g = ProductGraph::adjacency(&[2, 3]).unwrap();
        let v = product_eigenvalue(&g, &EigenIndex(vec![1, 1])).unwrap();
        assert!((v.to_f64() - (1.0 + 2f64.sqrt())).abs() < 1e-12);
        let sqrt2 = make_cos(1, 4).unwrap();
        assert_eq!(v, &sqrt2 + &CycloReal::from_integer(1, 1));

        let g = ProductGraph::adjacency(&[4, 4]).unwrap();
        assert_eq!(
            product_eigenvalue(&g, &EigenIndex(vec![1, 2])).unwrap(),
            product_eigenvalue(&g, &EigenIndex(vec![2, 1])).unwrap()
        );

        let g = ProductGraph::adjacency(&[2]).unwrap();
        let v = product_eigenvalue(&g, &EigenIndex(vec![2])).unwrap();
        assert_eq!(v.is_rational(), Some(-BigRational::one()));
    }

    #[test]
    fn positions_round_trip() {
        let g = ProductGraph::laplacian(&[3, 4, 2]).unwrap();
        for p in 0..g.vertex_count() as usize {
            assert_eq!(g.position(&g.index_at(p)).unwrap(), p);
        }
        let idx: Vec<_> = g.indices().collect();
        let mut sorted = idx.clone();
        sorted.sort();
        assert_eq!(idx, sorted);
    }

    #[test]
    fn table_examples() {
        let t = spectrum_table(&ProductGraph::adjacency(&[4, 6]).unwrap()).unwrap();
        assert_eq!(t.distinct_count(), 24);
        assert!(t.is_simple());
        let t = spectrum_table(&ProductGraph::adjacency(&[4, 4]).unwrap()).unwrap();
        assert!(t.distinct_count() < 16);
        let g12 = t.group_of(&EigenIndex(vec![1, 2])).unwrap();
        assert_eq!(g12, t.group_of(&EigenIndex(vec![2, 1])).unwrap());
        let t = spectrum_table(&ProductGraph::adjacency(&[3, 2]).unwrap()).unwrap();
        assert_eq!(t.distinct_count(), 6);
    }

    #[test]
    fn table_cap() {
        let g = ProductGraph::adjacency(&[100, 100, 3]).unwrap();
        assert!(matches!(
            spectrum_table(&g),
            Err(Error::ResourceCap { size: 30000, .. })
        ));
    }

    #[test]
    fn laplacian_zero_group() {
        let t = spectrum_table(&ProductGraph::laplacian(&[2, 2]).unwrap()).unwrap();
        // eigenvalues 0, 2, 2, 4
        assert_eq!(t.distinct_count(), 3);
        assert_eq!(t.groups()[0].members, vec![EigenIndex(vec![0, 0])]);
        assert_eq!(t.groups()[1].multiplicity(), 2);
    }
}
