//! Exact arithmetic over `Z_p` for small primes.
//!
//! Residues are always stored as canonical representatives in `[0, p)`, so the
//! inclusion `Z_p -> Z` is just reading the stored value.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported modulus.
pub const MAX_PRIME: u32 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..p).any(|q| q * q <= p && p.is_multiple_of(q)) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeOutOfRange(p));
        }
        Ok(Prime(p))
    }

    /// Like [`Prime::new`] but additionally rejects `p = 2`.
    pub fn odd(p: u32) -> Result<Self> {
        let prime = Self::new(p)?;
        if p == 2 {
            return Err(Error::EvenPrime);
        }
        Ok(prime)
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_modulus(p: Prime, q: Prime) -> Result<()> {
    if p == q {
        Ok(())
    } else {
        Err(Error::ModulusMismatch(p.get(), q.get()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZpScalar {
    value: u32,
    p: Prime,
}

impl ZpScalar {
    /// Reduces any integer into `[0, p)`.
    pub fn new(value: i64, p: Prime) -> Self {
        let m = i64::from(p.get());
        ZpScalar {
            value: value.rem_euclid(m) as u32,
            p,
        }
    }

    pub fn zero(p: Prime) -> Self {
        ZpScalar { value: 0, p }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn prime(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let p = self.p.get();
        let mut acc = 1u32;
        for _ in 0..p - 2 {
            acc = acc * self.value % p;
        }
        Some(ZpScalar {
            value: acc,
            p: self.p,
        })
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        check_modulus(self.p, rhs.p)?;
        Ok(self + rhs)
    }
}

impl fmt::Display for ZpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

// The operator impls panic on mismatched moduli; use the checked variants or
// `dot`/`phi` when operands come from untrusted input.
impl Add for ZpScalar {
    type Output = ZpScalar;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        ZpScalar {
            value: (self.value + rhs.value) % self.p.get(),
            p: self.p,
        }
    }
}

impl Sub for ZpScalar {
    type Output = ZpScalar;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ZpScalar {
    type Output = ZpScalar;
    fn neg(self) -> Self {
        ZpScalar {
            value: (self.p.get() - self.value) % self.p.get(),
            p: self.p,
        }
    }
}

impl Mul for ZpScalar {
    type Output = ZpScalar;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        ZpScalar {
            value: self.value * rhs.value % self.p.get(),
            p: self.p,
        }
    }
}

/// The carry function: 1 when the representatives of `a` and `b` sum to at
/// least `p`, else 0.
pub fn phi(a: ZpScalar, b: ZpScalar) -> Result<ZpScalar> {
    check_modulus(a.p, b.p)?;
    Ok(ZpScalar {
        value: u32::from(a.value + b.value >= a.p.get()),
        p: a.p,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZpVector {
    coords: Vec<u32>,
    p: Prime,
}

impl ZpVector {
    pub fn zeros(dim: usize, p: Prime) -> Self {
        ZpVector {
            coords: vec![0; dim],
            p,
        }
    }

    /// Standard basis vector `e_{index}` (0-based).
    pub fn basis(dim: usize, index: usize, p: Prime) -> Self {
        let mut v = Self::zeros(dim, p);
        v.coords[index] = 1;
        v
    }

    pub fn from_ints(values: &[i64], p: Prime) -> Self {
        ZpVector {
            coords: values.iter().map(|&x| ZpScalar::new(x, p).value).collect(),
            p,
        }
    }

    pub fn from_scalars(values: &[ZpScalar], p: Prime) -> Result<Self> {
        let mut coords = Vec::with_capacity(values.len());
        for s in values {
            check_modulus(p, s.p)?;
            coords.push(s.value);
        }
        Ok(ZpVector { coords, p })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn get(&self, i: usize) -> ZpScalar {
        ZpScalar {
            value: self.coords[i],
            p: self.p,
        }
    }

    /// Canonical representatives of the coordinates.
    pub fn values(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        check_modulus(self.p, other.p)?;
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let p = self.p.get();
        ZpVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(x, y)| (x + y) % p)
                .collect(),
            p: self.p,
        }
    }

    pub fn scale(&self, k: ZpScalar) -> Self {
        assert_eq!(self.p, k.p, "modulus mismatch");
        let p = self.p.get();
        ZpVector {
            coords: self.coords.iter().map(|x| x * k.value % p).collect(),
            p: self.p,
        }
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "modulus mismatch");
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        ZpVector { coords, p: self.p }
    }

    pub fn split_at(&self, mid: usize) -> (Self, Self) {
        let (a, b) = self.coords.split_at(mid);
        (
            ZpVector {
                coords: a.to_vec(),
                p: self.p,
            },
            ZpVector {
                coords: b.to_vec(),
                p: self.p,
            },
        )
    }

    pub fn dot(&self, other: &Self) -> Result<ZpScalar> {
        dot(self, other)
    }

    /// All `p^dim` vectors in big-endian counting order.
    pub fn all(dim: usize, p: Prime) -> impl Iterator<Item = ZpVector> {
        let total = (p.get() as usize).pow(dim as u32);
        (0..total).map(move |mut idx| {
            let mut coords = vec![0u32; dim];
            for c in coords.iter_mut().rev() {
                *c = (idx % p.get() as usize) as u32;
                idx /= p.get() as usize;
            }
            ZpVector { coords, p }
        })
    }
}

impl Add for &ZpVector {
    type Output = ZpVector;
    fn add(self, rhs: Self) -> ZpVector {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        self.add_unchecked(rhs)
    }
}

impl Sub for &ZpVector {
    type Output = ZpVector;
    fn sub(self, rhs: Self) -> ZpVector {
        self + &(-rhs)
    }
}

impl Neg for &ZpVector {
    type Output = ZpVector;
    fn neg(self) -> ZpVector {
        let p = self.p.get();
        ZpVector {
            coords: self.coords.iter().map(|x| (p - x) % p).collect(),
            p: self.p,
        }
    }
}

impl fmt::Display for ZpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn dot(u: &ZpVector, v: &ZpVector) -> Result<ZpScalar> {
    u.check_compatible(v)?;
    let p = u.p.get();
    let s = u
        .coords
        .iter()
        .zip(&v.coords)
        .fold(0u32, |acc, (x, y)| (acc + x * y) % p);
    Ok(ZpScalar { value: s, p: u.p })
}

/// Rank over `Z_p` of the matrix whose rows are `rows`, by Gaussian elimination.
pub fn rank(rows: &[ZpVector]) -> Result<usize> {
    let Some(first) = rows.first() else {
        return Ok(0);
    };
    let p = first.p;
    let cols = first.len();
    for r in rows {
        first.check_compatible(r)?;
    }
    let m = p.get();
    let mut mat: Vec<Vec<u32>> = rows.iter().map(|r| r.coords.clone()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = ZpScalar {
            value: mat[rank][col],
            p,
        }
        .inverse()
        .expect("nonzero pivot")
        .value;
        for x in mat[rank].iter_mut() {
            *x = *x * inv % m;
        }
        let pivot_row = mat[rank].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + m * m - factor * y) % m;
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}
