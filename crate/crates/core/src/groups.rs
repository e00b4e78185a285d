//! The extraspecial groups `p_±^{1+2d}` on `Z_p^d × Z_p^d × Z_p`, the
//! Heisenberg extension `H_d` of `Z_2^d`, and elementary abelian `Z_p^m`.
//!
//! All three implement [`FiniteGroup`], which fixes an enumeration of the
//! carrier compatible with [`VertexCodec`]: element ids are the big-endian
//! digit encodings of `(a_1..a_d, b_1..b_d, z)`, `(x_1..x_d, t)` and
//! `(x_1..x_m)` respectively.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexCodec;
use crate::modular::{dot, phi, Prime, ZpScalar, ZpVector};

/// A finite group with a fixed enumeration of its elements.
pub trait FiniteGroup {
    type Element: Clone + PartialEq + fmt::Debug;

    fn order(&self) -> usize;
    fn element(&self, id: usize) -> Self::Element;
    fn id_of(&self, g: &Self::Element) -> usize;
    fn identity(&self) -> Self::Element;
    fn mul(&self, g: &Self::Element, h: &Self::Element) -> Self::Element;
    fn inv(&self, g: &Self::Element) -> Self::Element;

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Element> + '_> {
        Box::new((0..self.order()).map(move |i| self.element(i)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupSign {
    Plus,
    Minus,
}

impl GroupSign {
    pub const BOTH: [GroupSign; 2] = [GroupSign::Plus, GroupSign::Minus];

    pub fn name(self) -> &'static str {
        match self {
            GroupSign::Plus => "plus",
            GroupSign::Minus => "minus",
        }
    }
}

impl fmt::Display for GroupSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(GroupSign::Plus),
            "minus" | "-" => Ok(GroupSign::Minus),
            other => Err(Error::InvalidParameter(format!("unknown sign {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtraspecialElement {
    pub a: ZpVector,
    pub b: ZpVector,
    pub z: ZpScalar,
}

impl ExtraspecialElement {
    pub fn new(a: ZpVector, b: ZpVector, z: ZpScalar) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch(a.len(), b.len()));
        }
        for q in [b.prime(), z.prime()] {
            if q != a.prime() {
                return Err(Error::ModulusMismatch(a.prime().get(), q.get()));
            }
        }
        Ok(ExtraspecialElement { a, b, z })
    }

    pub fn from_ints(a: &[i64], b: &[i64], z: i64, p: Prime) -> Result<Self> {
        Self::new(
            ZpVector::from_ints(a, p),
            ZpVector::from_ints(b, p),
            ZpScalar::new(z, p),
        )
    }

    pub fn identity(d: usize, p: Prime) -> Self {
        ExtraspecialElement {
            a: ZpVector::zeros(d, p),
            b: ZpVector::zeros(d, p),
            z: ZpScalar::zero(p),
        }
    }

    /// The central element `(0, 0, z)`.
    pub fn central(d: usize, z: i64, p: Prime) -> Self {
        ExtraspecialElement {
            z: ZpScalar::new(z, p),
            ..Self::identity(d, p)
        }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn prime(&self) -> Prime {
        self.a.prime()
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.z.is_zero()
    }

    pub fn is_central(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The image in the quotient `Z_p^{2d}`, as the concatenation `(a, b)`.
    pub fn quotient(&self) -> ZpVector {
        self.a.concat(&self.b)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.prime() != other.prime() {
            return Err(Error::ModulusMismatch(
                self.prime().get(),
                other.prime().get(),
            ));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }
}

impl fmt::Display for ExtraspecialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.z)
    }
}

/// The cocycle `κ_±((a, b), (c, d))`: `b·c`, plus the carry `φ(a_1, c_1)` for
/// the minus sign.
pub fn kappa(
    sign: GroupSign,
    g1: (&ZpVector, &ZpVector),
    g2: (&ZpVector, &ZpVector),
) -> Result<ZpScalar> {
    let (a, b) = g1;
    let (c, d) = g2;
    for v in [b, c, d] {
        if v.len() != a.len() {
            return Err(Error::DimensionMismatch(a.len(), v.len()));
        }
    }
    if a.is_empty() {
        return Err(Error::ZeroDimension);
    }
    let base = dot(b, c)?;
    match sign {
        GroupSign::Plus => Ok(base),
        GroupSign::Minus => Ok(base + phi(a.get(0), c.get(0))?),
    }
}

/// `κ_±` viewed as a function on `Z_p^{2d} × Z_p^{2d}`, splitting each
/// argument into its `a` and `b` halves.
pub fn kappa_concat(sign: GroupSign, g: &ZpVector, h: &ZpVector) -> Result<ZpScalar> {
    if !g.len().is_multiple_of(2) || g.len() != h.len() {
        return Err(Error::DimensionMismatch(g.len(), h.len()));
    }
    let d = g.len() / 2;
    let (a, b) = g.split_at(d);
    let (c, e) = h.split_at(d);
    kappa(sign, (&a, &b), (&c, &e))
}

pub fn mul(
    sign: GroupSign,
    g: &ExtraspecialElement,
    h: &ExtraspecialElement,
) -> Result<ExtraspecialElement> {
    g.check_compatible(h)?;
    let k = kappa(sign, (&g.a, &g.b), (&h.a, &h.b))?;
    Ok(ExtraspecialElement {
        a: &g.a + &h.a,
        b: &g.b + &h.b,
        z: g.z + h.z + k,
    })
}

pub fn inv(sign: GroupSign, g: &ExtraspecialElement) -> ExtraspecialElement {
    let ab = dot(&g.a, &g.b).expect("element halves agree");
    let mut z = -g.z + ab;
    if sign == GroupSign::Minus {
        let a1 = g.a.get(0);
        z = z - phi(a1, -a1).expect("same modulus");
    }
    ExtraspecialElement {
        a: -&g.a,
        b: -&g.b,
        z,
    }
}

/// `[g, h] = g^{-1} h^{-1} g h`, computed by composing group operations.
pub fn commutator(
    sign: GroupSign,
    g: &ExtraspecialElement,
    h: &ExtraspecialElement,
) -> Result<ExtraspecialElement> {
    let gi = inv(sign, g);
    let hi = inv(sign, h);
    let x = mul(sign, &gi, &hi)?;
    let x = mul(sign, &x, g)?;
    mul(sign, &x, h)
}

pub fn pow(sign: GroupSign, g: &ExtraspecialElement, k: u64) -> ExtraspecialElement {
    let mut acc = ExtraspecialElement::identity(g.dim(), g.prime());
    for _ in 0..k {
        acc = mul(sign, &acc, g).expect("compatible with itself");
    }
    acc
}

/// Order of `g`, found by iterated multiplication.
pub fn element_order(sign: GroupSign, g: &ExtraspecialElement) -> u64 {
    let mut acc = g.clone();
    let mut k = 1;
    while !acc.is_identity() {
        acc = mul(sign, &acc, g).expect("compatible with itself");
        k += 1;
    }
    k
}

/// `p_±^{1+2d}` with the big-endian enumeration `(a_1..a_d, b_1..b_d, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtraspecialGroup {
    pub p: Prime,
    pub d: usize,
    pub sign: GroupSign,
}

impl ExtraspecialGroup {
    pub fn new(p: Prime, d: usize, sign: GroupSign) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(ExtraspecialGroup { p, d, sign })
    }

    pub fn codec(&self) -> VertexCodec {
        VertexCodec::uniform(self.p.get(), 2 * self.d + 1)
    }
}

impl FiniteGroup for ExtraspecialGroup {
    type Element = ExtraspecialElement;

    fn order(&self) -> usize {
        (self.p.get() as usize).pow(2 * self.d as u32 + 1)
    }

    fn element(&self, id: usize) -> ExtraspecialElement {
        let digits = self.codec().decode(id);
        let p = self.p;
        let ints: Vec<i64> = digits.iter().map(|&x| i64::from(x)).collect();
        ExtraspecialElement {
            a: ZpVector::from_ints(&ints[..self.d], p),
            b: ZpVector::from_ints(&ints[self.d..2 * self.d], p),
            z: ZpScalar::new(ints[2 * self.d], p),
        }
    }

    fn id_of(&self, g: &ExtraspecialElement) -> usize {
        let mut digits = Vec::with_capacity(2 * self.d + 1);
        digits.extend_from_slice(g.a.values());
        digits.extend_from_slice(g.b.values());
        digits.push(g.z.value());
        self.codec().encode(&digits)
    }

    fn identity(&self) -> ExtraspecialElement {
        ExtraspecialElement::identity(self.d, self.p)
    }

    fn mul(&self, g: &ExtraspecialElement, h: &ExtraspecialElement) -> ExtraspecialElement {
        mul(self.sign, g, h).expect("elements of the same group")
    }

    fn inv(&self, g: &ExtraspecialElement) -> ExtraspecialElement {
        inv(self.sign, g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeisenbergElement {
    pub x: ZpVector,
    pub t: ZpScalar,
}

fn two() -> Prime {
    Prime::new(2).expect("2 is prime")
}

impl HeisenbergElement {
    pub fn new(x: ZpVector, t: ZpScalar) -> Result<Self> {
        if x.prime().get() != 2 {
            return Err(Error::ModulusMismatch(2, x.prime().get()));
        }
        if t.prime().get() != 2 {
            return Err(Error::ModulusMismatch(2, t.prime().get()));
        }
        Ok(HeisenbergElement { x, t })
    }

    pub fn from_bits(x: &[i64], t: i64) -> Self {
        HeisenbergElement {
            x: ZpVector::from_ints(x, two()),
            t: ZpScalar::new(t, two()),
        }
    }

    /// `(e_i, 0)` for 0-based `i`.
    pub fn generator(d: usize, i: usize) -> Self {
        HeisenbergElement {
            x: ZpVector::basis(d, i, two()),
            t: ZpScalar::zero(two()),
        }
    }

    pub fn identity(d: usize) -> Self {
        HeisenbergElement {
            x: ZpVector::zeros(d, two()),
            t: ZpScalar::zero(two()),
        }
    }
}

/// `β(x, y) = Σ_{i<j} x_i y_j` over `Z_2`.
pub fn beta(x: &ZpVector, y: &ZpVector) -> Result<ZpScalar> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(x.len(), y.len()));
    }
    let (xv, yv) = (x.values(), y.values());
    // running prefix sum of x_i over i < j
    let mut prefix = 0u32;
    let mut acc = 0u32;
    for j in 0..xv.len() {
        acc ^= prefix & yv[j];
        prefix ^= xv[j];
    }
    Ok(ZpScalar::new(i64::from(acc), two()))
}

pub fn heisenberg_mul(g: &HeisenbergElement, h: &HeisenbergElement) -> Result<HeisenbergElement> {
    let b = beta(&g.x, &h.x)?;
    Ok(HeisenbergElement {
        x: &g.x + &h.x,
        t: g.t + h.t + b,
    })
}

pub fn heisenberg_inv(g: &HeisenbergElement) -> HeisenbergElement {
    let b = beta(&g.x, &g.x).expect("same length");
    HeisenbergElement {
        x: g.x.clone(),
        t: g.t + b,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeisenbergGroup {
    pub d: usize,
}

impl HeisenbergGroup {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(HeisenbergGroup { d })
    }

    pub fn codec(&self) -> VertexCodec {
        VertexCodec::uniform(2, self.d + 1)
    }

    /// `S_d = {(e_1, 0), …, (e_d, 0)}`.
    pub fn standard_generators(&self) -> Vec<HeisenbergElement> {
        (0..self.d)
            .map(|i| HeisenbergElement::generator(self.d, i))
            .collect()
    }
}

impl FiniteGroup for HeisenbergGroup {
    type Element = HeisenbergElement;

    fn order(&self) -> usize {
        1 << (self.d + 1)
    }

    fn element(&self, id: usize) -> HeisenbergElement {
        let digits: Vec<i64> = self.codec().decode(id).into_iter().map(i64::from).collect();
        HeisenbergElement::from_bits(&digits[..self.d], digits[self.d])
    }

    fn id_of(&self, g: &HeisenbergElement) -> usize {
        let mut digits = g.x.values().to_vec();
        digits.push(g.t.value());
        self.codec().encode(&digits)
    }

    fn identity(&self) -> HeisenbergElement {
        HeisenbergElement::identity(self.d)
    }

    fn mul(&self, g: &HeisenbergElement, h: &HeisenbergElement) -> HeisenbergElement {
        heisenberg_mul(g, h).expect("elements of the same group")
    }

    fn inv(&self, g: &HeisenbergElement) -> HeisenbergElement {
        heisenberg_inv(g)
    }
}

/// The additive group `Z_p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VectorGroup {
    pub p: Prime,
    pub dim: usize,
}

impl VectorGroup {
    pub fn new(p: Prime, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(VectorGroup { p, dim })
    }

    pub fn codec(&self) -> VertexCodec {
        VertexCodec::uniform(self.p.get(), self.dim)
    }

    /// `{±e_1, …, ±e_m}` (a set: `e_i = -e_i` when `p = 2`).
    pub fn standard_connection(&self) -> Vec<ZpVector> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            let e = ZpVector::basis(self.dim, i, self.p);
            let neg = -&e;
            out.push(e.clone());
            if neg != e {
                out.push(neg);
            }
        }
        out
    }
}

impl FiniteGroup for VectorGroup {
    type Element = ZpVector;

    fn order(&self) -> usize {
        (self.p.get() as usize).pow(self.dim as u32)
    }

    fn element(&self, id: usize) -> ZpVector {
        let digits: Vec<i64> = self.codec().decode(id).into_iter().map(i64::from).collect();
        ZpVector::from_ints(&digits, self.p)
    }

    fn id_of(&self, g: &ZpVector) -> usize {
        self.codec().encode(g.values())
    }

    fn identity(&self) -> ZpVector {
        ZpVector::zeros(self.dim, self.p)
    }

    fn mul(&self, g: &ZpVector, h: &ZpVector) -> ZpVector {
        g + h
    }

    fn inv(&self, g: &ZpVector) -> ZpVector {
        -g
    }
}

/// Outcome of checking `κ(a+b, c) + κ(a, b) = κ(a, b+c) + κ(b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleCheck {
    Pass {
        triples: u64,
        exhaustive: bool,
    },
    Fail {
        witness: (ZpVector, ZpVector, ZpVector),
    },
}

impl CocycleCheck {
    pub fn passed(&self) -> bool {
        matches!(self, CocycleCheck::Pass { .. })
    }
}

/// Triple budget below which [`cocycle_check`] is exhaustive.
pub const EXHAUSTIVE_TRIPLE_LIMIT: u128 = 10_000_000;
/// Number of sampled triples otherwise.
pub const SAMPLED_TRIPLES: u64 = 100_000;
/// Seed of the deterministic ChaCha8 sampler.
pub const SAMPLE_SEED: u64 = 0x5eed_c0c1;

pub fn cocycle_check<F>(kappa_fn: F, p: Prime, dim: usize) -> CocycleCheck
where
    F: Fn(&ZpVector, &ZpVector) -> ZpScalar,
{
    let check = |a: &ZpVector, b: &ZpVector, c: &ZpVector| {
        let lhs = kappa_fn(&(a + b), c) + kappa_fn(a, b);
        let rhs = kappa_fn(a, &(b + c)) + kappa_fn(b, c);
        lhs == rhs
    };
    let per_slot = (p.get() as u128).pow(dim as u32);
    if per_slot.pow(3) <= EXHAUSTIVE_TRIPLE_LIMIT {
        let all: Vec<ZpVector> = ZpVector::all(dim, p).collect();
        let mut triples = 0u64;
        for a in &all {
            for b in &all {
                for c in &all {
                    if !check(a, b, c) {
                        return CocycleCheck::Fail {
                            witness: (a.clone(), b.clone(), c.clone()),
                        };
                    }
                    triples += 1;
                }
            }
        }
        return CocycleCheck::Pass {
            triples,
            exhaustive: true,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let draw = |rng: &mut ChaCha8Rng| {
        let v: Vec<i64> = (0..dim)
            .map(|_| i64::from(rng.gen_range(0..p.get())))
            .collect();
        ZpVector::from_ints(&v, p)
    };
    for _ in 0..SAMPLED_TRIPLES {
        let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        if !check(&a, &b, &c) {
            return CocycleCheck::Fail { witness: (a, b, c) };
        }
    }
    CocycleCheck::Pass {
        triples: SAMPLED_TRIPLES,
        exhaustive: false,
    }
}
