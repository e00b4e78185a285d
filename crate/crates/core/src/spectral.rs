//! Eigenvalues of real symmetric and complex Hermitian matrices, and the
//! interlacing degree bound for induced subgraphs.
//!
//! Hermitian matrices are handled through the real symmetric embedding
//! `[[Re, -Im], [Im, Re]]`, whose spectrum is that of the original matrix
//! with every multiplicity doubled. A single cyclic Jacobi kernel serves both
//! cases.

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
/// Maximum conjugate-symmetry deviation accepted by [`HermitianMatrix::new`].
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;
/// Eigenvalues closer than this are reported as one cluster.
pub const CLUSTER_TOLERANCE: f64 = 1e-6;
/// A bound within this distance of an integer is taken to be that integer.
pub const INTEGER_SNAP: f64 = 1e-9;
/// Largest accepted matrix order.
pub const MAX_ORDER: usize = 2000;

const MAX_SWEEPS: usize = 100;

/// Rounds to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn ser_f64<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig12(*x))
}

fn ser_f64_vec<S: Serializer>(xs: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|&x| round_sig12(x)))
}

/// Eigenvalues of a dense real symmetric matrix (row-major), unsorted.
///
/// Cyclic Jacobi: sweep over all off-diagonal pairs, annihilating each with a
/// plane rotation, until the off-diagonal norm is below
/// [`OFF_DIAGONAL_TOLERANCE`] (or stops decreasing at rounding level).
pub fn symmetric_eigenvalues(n: usize, data: &[f64]) -> Result<Vec<f64>> {
    if data.len() != n * n {
        return Err(Error::BadMatrixShape);
    }
    let mut a = data.to_vec();
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };
    let mut previous = f64::INFINITY;
    for _ in 0..MAX_SWEEPS {
        let off = off_norm(&a);
        if off < OFF_DIAGONAL_TOLERANCE || off >= previous {
            break;
        }
        previous = off;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn new(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::BadMatrixShape);
        }
        for i in 0..n {
            for j in i..n {
                let dev = (data[i * n + j] - data[j * n + i].conj()).norm();
                if dev > HERMITIAN_TOLERANCE {
                    return Err(Error::NotHermitian(dev, i, j));
                }
            }
        }
        Ok(HermitianMatrix { n, data })
    }

    pub fn from_real(n: usize, data: &[f64]) -> Result<Self> {
        Self::new(n, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        HermitianMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).re).sum()
    }

    /// Largest row sum of entry moduli.
    pub fn max_row_modulus_sum(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn principal_submatrix(&self, rows: &[usize]) -> HermitianMatrix {
        let m = rows.len();
        let mut data = Vec::with_capacity(m * m);
        for &i in rows {
            for &j in rows {
                data.push(self.get(i, j));
            }
        }
        HermitianMatrix { n: m, data }
    }

    /// `[[Re, -Im], [Im, Re]]`, row-major of order `2n`.
    pub fn real_embedding(&self) -> Vec<f64> {
        let n = self.n;
        let m = 2 * n;
        let mut out = vec![0.0; m * m];
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                out[i * m + j] = z.re;
                out[i * m + n + j] = -z.im;
                out[(n + i) * m + j] = z.im;
                out[(n + i) * m + n + j] = z.re;
            }
        }
        out
    }

    fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cluster {
    #[serde(serialize_with = "ser_f64")]
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    /// Descending.
    #[serde(serialize_with = "ser_f64_vec")]
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<Cluster>,
    pub source: String,
}

impl SpectrumReport {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, source: impl Into<String>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let clusters = cluster(&eigenvalues, CLUSTER_TOLERANCE);
        SpectrumReport {
            eigenvalues,
            clusters,
            source: source.into(),
        }
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `λ_i` in descending order, 1-based.
    pub fn lambda(&self, i: usize) -> f64 {
        self.eigenvalues[i - 1]
    }
}

/// Groups a descending list into clusters whose consecutive gaps are at most `tol`.
pub fn cluster(descending: &[f64], tol: f64) -> Vec<Cluster> {
    let mut out: Vec<Cluster> = Vec::new();
    let mut sum = 0.0;
    let mut last = f64::NAN;
    for &x in descending {
        match out.last_mut() {
            Some(c) if (last - x).abs() <= tol => {
                c.multiplicity += 1;
                sum += x;
                c.value = sum / c.multiplicity as f64;
            }
            _ => {
                out.push(Cluster {
                    value: x,
                    multiplicity: 1,
                });
                sum = x;
            }
        }
        last = x;
    }
    out
}

pub fn hermitian_eigenvalues(m: &HermitianMatrix) -> Result<SpectrumReport> {
    let n = m.n();
    if n > MAX_ORDER {
        return Err(Error::SizeLimit {
            size: n as u128,
            limit: MAX_ORDER as u128,
        });
    }
    if m.is_real() {
        let real: Vec<f64> = m.data.iter().map(|z| z.re).collect();
        return Ok(SpectrumReport::from_eigenvalues(
            symmetric_eigenvalues(n, &real)?,
            "real symmetric",
        ));
    }
    let mut doubled = symmetric_eigenvalues(2 * n, &m.real_embedding())?;
    doubled.sort_by(|a, b| b.total_cmp(a));
    // each eigenvalue appears twice; average the pairs
    let halved = doubled.chunks(2).map(|c| 0.5 * (c[0] + c[1])).collect();
    Ok(SpectrumReport::from_eigenvalues(
        halved,
        "hermitian via real embedding",
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    /// Size of the induced subgraph.
    pub s: usize,
    /// `λ_{n-s+1}` of the full matrix.
    #[serde(serialize_with = "ser_f64")]
    pub bound: f64,
    pub integer_bound: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Threshold {
    pub degree: i64,
    pub min_s: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeBoundTable {
    pub n: usize,
    /// Ascending in `s`.
    pub rows: Vec<BoundRow>,
}

impl DegreeBoundTable {
    /// Smallest `s` whose integer bound is at least `degree`.
    pub fn min_size_for_degree(&self, degree: i64) -> Option<usize> {
        self.rows
            .iter()
            .find(|r| r.integer_bound >= degree)
            .map(|r| r.s)
    }

    /// For every positive degree reached by the table, the smallest `s`
    /// that forces it.
    pub fn thresholds(&self) -> Vec<Threshold> {
        let top = self.rows.last().map_or(0, |r| r.integer_bound);
        (1..=top)
            .filter_map(|degree| {
                self.min_size_for_degree(degree)
                    .map(|min_s| Threshold { degree, min_s })
            })
            .collect()
    }
}

/// Smallest integer at least `x`, after snapping `x` to a nearby integer.
pub fn integer_bound(x: f64) -> i64 {
    let r = x.round();
    if (x - r).abs() <= INTEGER_SNAP {
        r as i64
    } else {
        x.ceil() as i64
    }
}

/// Interlacing degree bound.
///
/// For a Hermitian `M` supported on a graph with unit-modulus entries on
/// edges, every `s`-vertex principal submatrix `B` has
/// `λ_1(B) >= λ_{n-s+1}(M)`, and the induced subgraph's maximum degree is at
/// least `λ_1(B)` because the largest row sum of moduli bounds the spectral
/// radius.
pub fn huang_degree_bound(report: &SpectrumReport) -> DegreeBoundTable {
    let n = report.n();
    let rows = (1..=n)
        .map(|s| {
            let bound = report.lambda(n - s + 1);
            BoundRow {
                s,
                bound,
                integer_bound: integer_bound(bound),
            }
        })
        .collect();
    DegreeBoundTable { n, rows }
}
