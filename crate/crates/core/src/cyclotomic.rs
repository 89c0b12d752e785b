//! Exact arithmetic on real cyclotomic numbers.
//!
//! A [`CycloReal`] with conductor `m` lives in the cyclotomic field of order
//! `2m`, generated by `ζ = exp(iπ/m)`. It is stored as its coordinate vector in
//! the power basis `1, ζ, …, ζ^{φ(2m)-1}`, reduced modulo the cyclotomic
//! polynomial `Φ_{2m}`. The reduced vector is canonical, so equality of two
//! numbers in the same conductor is equality of coefficient vectors.
//!
//! The basic constructor is [`make_cos`], the exact value of `2cos(rπ/m)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{domain, Result};
use crate::scalar::Real;

/// Cyclotomic polynomial of a fixed order, kept in the shape reduction needs.
#[derive(Debug)]
struct Modulus {
    degree: usize,
    /// Non-leading nonzero terms as (exponent, coefficient).
    tail: Vec<(usize, BigInt)>,
    dense: Vec<BigInt>,
}

fn modulus_cache() -> &'static Mutex<HashMap<u64, Arc<Modulus>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Modulus>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn modulus(order: u64) -> Arc<Modulus> {
    if let Some(m) = modulus_cache().lock().unwrap().get(&order) {
        return Arc::clone(m);
    }
    let dense = build_cyclotomic(order);
    let degree = dense.len() - 1;
    let tail = dense[..degree]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect();
    let m = Arc::new(Modulus {
        degree,
        tail,
        dense,
    });
    modulus_cache()
        .lock()
        .unwrap()
        .entry(order)
        .or_insert(m)
        .clone()
}

/// Φ_n = ∏_{d | n} (x^d − 1)^{μ(n/d)}: multiply in the numerator binomials,
/// then divide out the denominator ones. Every division is exact.
fn build_cyclotomic(n: u64) -> Vec<BigInt> {
    let divs = arith::divisors(n);
    let mut poly = vec![BigInt::one()];
    for &d in &divs {
        if arith::mobius(n / d) == 1 {
            poly = mul_binomial(&poly, d as usize);
        }
    }
    for &d in &divs {
        if arith::mobius(n / d) == -1 {
            poly = div_binomial(&poly, d as usize);
        }
    }
    poly
}

/// `p · (x^d − 1)`
fn mul_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

/// `p / (x^d − 1)`, which must divide exactly.
fn div_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let deg = p.len() - 1;
    assert!(deg >= d, "dividend degree below divisor degree");
    let mut rem = p.to_vec();
    let mut q = vec![BigInt::zero(); deg - d + 1];
    for i in (d..=deg).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        rem[i - d] += &c;
        q[i - d] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact binomial division");
    q
}

/// The integer coefficients of the `n`-th cyclotomic polynomial, constant
/// term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    modulus(n).dense.clone()
}

/// Reduces an integer polynomial in ζ (ζ of order `2·half`) to the canonical
/// coordinate vector of length `φ(2·half)`.
fn reduce_integer(mut poly: Vec<BigInt>, half: usize, m: &Modulus) -> Vec<BigInt> {
    let order = 2 * half;
    // x^{2M} = 1
    if poly.len() > order {
        for i in order..poly.len() {
            let c = std::mem::take(&mut poly[i]);
            if !c.is_zero() {
                poly[i % order] += c;
            }
        }
        poly.truncate(order);
    }
    // x^M = −1
    if poly.len() > half {
        for i in half..poly.len() {
            let c = std::mem::take(&mut poly[i]);
            if !c.is_zero() {
                poly[i - half] -= c;
            }
        }
        poly.truncate(half);
    }
    let deg = m.degree;
    for top in (deg..poly.len()).rev() {
        let c = std::mem::take(&mut poly[top]);
        if c.is_zero() {
            continue;
        }
        let shift = top - deg;
        for (j, a) in &m.tail {
            let slot = &mut poly[shift + j];
            if a.is_one() {
                *slot -= &c;
            } else if (-a).is_one() {
                *slot += &c;
            } else {
                *slot -= &c * a;
            }
        }
    }
    poly.resize(deg, BigInt::zero());
    poly
}

fn reduce_rational(poly: Vec<BigRational>, conductor: u64) -> Vec<BigRational> {
    let m = modulus(2 * conductor);
    let denom = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = poly
        .into_iter()
        .map(|c| {
            if denom.is_one() {
                c.to_integer()
            } else {
                (c * BigRational::from_integer(denom.clone())).to_integer()
            }
        })
        .collect();
    reduce_integer(ints, conductor as usize, &m)
        .into_iter()
        .map(|c| BigRational::new(c, denom.clone()))
        .collect()
}

/// An exact element of the real subfield of the cyclotomic field of order
/// `2 · conductor`.
#[derive(Clone)]
pub struct CycloReal {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CycloReal {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let len = arith::totient(2 * conductor) as usize;
        Self {
            conductor,
            coeffs: vec![BigRational::zero(); len],
        }
    }

    pub fn from_rational(q: BigRational, conductor: u64) -> Self {
        let mut out = Self::zero(conductor);
        out.coeffs[0] = q;
        out
    }

    pub fn from_integer(n: i64, conductor: u64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()), conductor)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates, constant term first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Builds a value from raw power-basis coefficients of any length,
    /// reducing them to canonical form.
    pub fn from_power_coeffs(coeffs: Vec<BigRational>, conductor: u64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Self {
            conductor,
            coeffs: reduce_rational(coeffs, conductor),
        }
    }

    /// Re-expresses the number with conductor `target`, a multiple of the
    /// current conductor.
    pub fn lift(&self, target: u64) -> Result<Self> {
        if target == 0 || target % self.conductor != 0 {
            return domain(format!(
                "conductor {target} is not a multiple of {}",
                self.conductor
            ));
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = (target / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[j * step] = c.clone();
            }
        }
        Ok(Self::from_power_coeffs(poly, target))
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let target = arith::lcm(self.conductor, other.conductor);
        (
            self.lift(target).expect("lcm is a multiple"),
            other.lift(target).expect("lcm is a multiple"),
        )
    }

    /// Multiplies by a rational constant.
    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(k.clone()))
    }

    /// In-place `self += k · other`; both must share a conductor.
    pub(crate) fn add_scaled_assign(&mut self, other: &Self, k: &BigInt) {
        debug_assert_eq!(self.conductor, other.conductor);
        if k.is_zero() {
            return;
        }
        let k = BigRational::from_integer(k.clone());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b * &k;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when the number is rational.
    pub fn is_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Image under the automorphism ζ ↦ ζ⁻¹ (complex conjugation).
    pub fn conjugate(&self) -> Self {
        let order = 2 * self.conductor as usize;
        let mut poly = vec![BigRational::zero(); order];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[(order - j) % order] += c;
        }
        Self::from_power_coeffs(poly, self.conductor)
    }

    /// True when the represented number equals its complex conjugate.
    pub fn is_real(&self) -> bool {
        self.conjugate().coeffs == self.coeffs
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let angle = std::f64::consts::PI * j as f64 / m;
                c.to_f64().unwrap_or(f64::NAN) * angle.cos()
            })
            .sum()
    }

    pub fn to_real<T: Real>(&self) -> T {
        T::of(self.to_f64())
    }
}

/// Exact `2cos(rπ/m)` for `1 ≤ r ≤ m − 1`.
pub fn make_cos(r: u64, m: u64) -> Result<CycloReal> {
    if m == 0 || r == 0 || r >= m {
        return domain(format!("2cos(rπ/m) needs 1 ≤ r ≤ m−1, got r={r}, m={m}"));
    }
    // ζ^r + ζ^{2m−r} with ζ^m = −1 gives x^r − x^{m−r}.
    let len = r.max(m - r) as usize + 1;
    let mut poly = vec![BigRational::zero(); len];
    poly[r as usize] += BigRational::one();
    poly[(m - r) as usize] -= BigRational::one();
    Ok(CycloReal::from_power_coeffs(poly, m))
}

impl PartialEq for CycloReal {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lifted_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloReal {}

impl fmt::Debug for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloReal(m={}, ", self.conductor)?;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})ζ^{j}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " ≈ {})", self.to_f64())
    }
}

impl fmt::Display for CycloReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.is_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{}", self.to_f64()),
        }
    }
}

impl Add<&CycloReal> for &CycloReal {
    type Output = CycloReal;

    fn add(self, rhs: &CycloReal) -> CycloReal {
        let (mut a, b) = self.lifted_pair(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Add for CycloReal {
    type Output = CycloReal;

    fn add(self, rhs: CycloReal) -> CycloReal {
        &self + &rhs
    }
}

impl Neg for &CycloReal {
    type Output = CycloReal;

    fn neg(self) -> CycloReal {
        CycloReal {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloReal {
    type Output = CycloReal;

    fn neg(self) -> CycloReal {
        -&self
    }
}

impl Sub<&CycloReal> for &CycloReal {
    type Output = CycloReal;

    fn sub(self, rhs: &CycloReal) -> CycloReal {
        self + &(-rhs)
    }
}

impl Sub for CycloReal {
    type Output = CycloReal;

    fn sub(self, rhs: CycloReal) -> CycloReal {
        &self - &rhs
    }
}

/// Which alternating-sum identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlternatingKind {
    /// `1 + Σ_{j=1}^{(p−1)/2} (−1)^j 2cos(jπ/p) = 0`
    Prime,
    /// `1 + Σ_{j=1}^{(p−1)/2} (−1)^j 2cos(2jπ/2p) = 0`
    TwicePrime,
}

/// Evaluates the alternating-sum identity for the odd prime `p` exactly and
/// reports whether it vanishes.
pub fn verify_alternating_identity(kind: AlternatingKind, p: u64) -> Result<bool> {
    if p < 3 || !arith::is_prime(p) {
        return domain(format!("{p} is not an odd prime"));
    }
    let conductor = match kind {
        AlternatingKind::Prime => p,
        AlternatingKind::TwicePrime => 2 * p,
    };
    let mut total = CycloReal::from_integer(1, conductor);
    for j in 1..=(p - 1) / 2 {
        let r = match kind {
            AlternatingKind::Prime => j,
            AlternatingKind::TwicePrime => 2 * j,
        };
        let term = make_cos(r, conductor)?;
        total = if j % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    Ok(total.is_zero())
}

/// Absolute value of the largest coefficient numerator, useful for
/// diagnostics on coefficient growth.
pub fn max_coefficient_height(x: &CycloReal) -> BigInt {
    x.coeffs
        .iter()
        .map(|c| c.numer().abs())
        .max()
        .unwrap_or_default()
}
