//! Convolution in group algebras, the `β`-twisted convolution on `Z_2^d`,
//! and the lift `L` from `Z_2^d` to the Heisenberg group `H_d`.
//!
//! Functions are stored densely in the group's element enumeration. Values
//! are generic so integer-valued checks stay exact.

use std::ops::{Add, Mul, Neg};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::groups::{beta, FiniteGroup, HeisenbergGroup, VectorGroup};
use crate::modular::Prime;

pub trait Scalar:
    Copy + PartialEq + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
}

/// A function on a group, indexed by element id.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupFunction<T> {
    values: Vec<T>,
}

impl<T: Scalar> GroupFunction<T> {
    pub fn new(values: Vec<T>) -> Self {
        GroupFunction { values }
    }

    pub fn zeros(size: usize) -> Self {
        GroupFunction {
            values: vec![T::zero(); size],
        }
    }

    /// Indicator of the element with id `at`.
    pub fn delta(size: usize, at: usize) -> Self {
        let mut f = Self::zeros(size);
        f.values[at] = T::one();
        f
    }

    pub fn indicator(size: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut f = Self::zeros(size);
        for i in support {
            f.values[i] = T::one();
        }
        f
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, id: usize) -> T {
        self.values[id]
    }

    pub fn scale(&self, c: T) -> Self {
        GroupFunction {
            values: self.values.iter().map(|&v| c * v).collect(),
        }
    }
}

impl<T: Scalar> Add for &GroupFunction<T> {
    type Output = GroupFunction<T>;
    fn add(self, rhs: Self) -> GroupFunction<T> {
        assert_eq!(self.len(), rhs.len(), "domain mismatch");
        GroupFunction {
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

fn check_domain<T>(expected: usize, f: &GroupFunction<T>) -> Result<()> {
    if f.values.len() == expected {
        Ok(())
    } else {
        Err(Error::DomainMismatch(expected, f.values.len()))
    }
}

/// `(f ⋆ g)(x) = Σ_y f(y) g(y^{-1} x)`.
pub fn convolve<G: FiniteGroup, T: Scalar>(
    group: &G,
    f: &GroupFunction<T>,
    g: &GroupFunction<T>,
) -> Result<GroupFunction<T>> {
    let n = group.order();
    check_domain(n, f)?;
    check_domain(n, g)?;
    let elems: Vec<G::Element> = group.elements().collect();
    let mut out = vec![T::zero(); n];
    for (y, ey) in elems.iter().enumerate() {
        let fy = f.values[y];
        if fy == T::zero() {
            continue;
        }
        let yinv = group.inv(ey);
        for (x, ex) in elems.iter().enumerate() {
            let w = group.id_of(&group.mul(&yinv, ex));
            out[x] = out[x] + fy * g.values[w];
        }
    }
    Ok(GroupFunction { values: out })
}

fn sign<T: Scalar>(bit: u32) -> T {
    if bit == 0 {
        T::one()
    } else {
        -T::one()
    }
}

fn binary_cube(d: usize) -> Result<VectorGroup> {
    VectorGroup::new(Prime::new(2)?, d)
}

/// `(f ⋆_β g)(x) = Σ_y (-1)^{β(y, y^{-1}x)} f(y) g(y^{-1} x)` on `Z_2^d`.
pub fn twisted_convolve<T: Scalar>(
    d: usize,
    f: &GroupFunction<T>,
    g: &GroupFunction<T>,
) -> Result<GroupFunction<T>> {
    let cube = binary_cube(d)?;
    let n = cube.order();
    check_domain(n, f)?;
    check_domain(n, g)?;
    let elems: Vec<_> = cube.elements().collect();
    let mut out = vec![T::zero(); n];
    for (y, ey) in elems.iter().enumerate() {
        let fy = f.values[y];
        if fy == T::zero() {
            continue;
        }
        for (x, ex) in elems.iter().enumerate() {
            let rest = ex + ey;
            let w = cube.id_of(&rest);
            let b = beta(ey, &rest).expect("same dimension").value();
            out[x] = out[x] + sign::<T>(b) * fy * g.values[w];
        }
    }
    Ok(GroupFunction { values: out })
}

/// `L(f)(x, t) = (-1)^t f(x)`, a function on `H_d`.
///
/// With the unnormalised convolution above, `L(f) ⋆ L(g) = 2 L(f ⋆_β g)`:
/// the sum over the central coordinate of `y` contributes each term twice.
pub fn lift<T: Scalar>(d: usize, f: &GroupFunction<T>) -> Result<GroupFunction<T>> {
    let cube = binary_cube(d)?;
    check_domain(cube.order(), f)?;
    let h = HeisenbergGroup::new(d)?;
    let values = (0..h.order())
        .map(|id| {
            let el = h.element(id);
            sign::<T>(el.t.value()) * f.values[cube.id_of(&el.x)]
        })
        .collect();
    Ok(GroupFunction { values })
}

/// `μ`, the indicator of `{e_1, …, e_d}` on `Z_2^d`.
pub fn standard_basis_indicator<T: Scalar>(d: usize) -> Result<GroupFunction<T>> {
    let cube = binary_cube(d)?;
    let ids: Vec<usize> = cube
        .standard_connection()
        .iter()
        .map(|e| cube.id_of(e))
        .collect();
    Ok(GroupFunction::indicator(cube.order(), ids))
}

/// Row-major matrix of the linear map `f ↦ op(f)` on functions of `size`
/// points, assembled column by column from deltas.
pub fn operator_matrix<F>(size: usize, op: F) -> Result<Vec<f64>>
where
    F: Fn(&GroupFunction<f64>) -> Result<GroupFunction<f64>>,
{
    let mut m = vec![0.0; size * size];
    for col in 0..size {
        let image = op(&GroupFunction::delta(size, col))?;
        check_domain(size, &image)?;
        for row in 0..size {
            m[row * size + col] = image.values[row];
        }
    }
    Ok(m)
}

/// Matrix of `A_β f = f ⋆_β μ` on `Z_2^d`.
pub fn twisted_hypercube_operator(d: usize) -> Result<Vec<f64>> {
    let mu = standard_basis_indicator::<f64>(d)?;
    operator_matrix(1 << d, |f| twisted_convolve(d, f, &mu))
}

/// Matrix of `f ↦ f ⋆ μ` on `Z_2^d`, the adjacency operator of `Q_d`.
pub fn hypercube_operator(d: usize) -> Result<Vec<f64>> {
    let cube = binary_cube(d)?;
    let mu = standard_basis_indicator::<f64>(d)?;
    operator_matrix(cube.order(), |f| convolve(&cube, f, &mu))
}
