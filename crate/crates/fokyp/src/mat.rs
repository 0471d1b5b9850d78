//! Dense complex matrices and the spectral routines the analysis needs.
//!
//! Sizes here are desk-scale (n below ~50); everything is row-major
//! `Vec<Complex64>` with O(n^3) classical algorithms. The Hermitian
//! eigensolver is Householder tridiagonalization followed by implicit-shift
//! QL; the general eigenvalue routine (stability reports only) is Hessenberg
//! reduction followed by single-shift QR.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::Error;

pub(crate) const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C_ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C_ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Real entries given row by row; panics if the rows are ragged.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| {
            assert_eq!(rows[i].len(), c, "ragged rows");
            Complex64::new(rows[i][j], 0.0)
        })
    }

    pub fn from_complex_rows(rows: &[&[Complex64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| {
            assert_eq!(rows[i].len(), c, "ragged rows");
            rows[i][j]
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Largest entry modulus; 0 for empty matrices.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, z| {
            let a = z.norm();
            if a > m {
                a
            } else {
                m
            }
        })
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Max elementwise modulus of `self - other`; panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| {
                let d = (a - b).norm();
                if d > m {
                    d
                } else {
                    m
                }
            })
    }

    /// Hermitian within `max|H - H*| <= 1e-12 * (1 + max|H|)`.
    pub fn is_hermitian(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let tol = 1e-12 * (1.0 + self.max_abs());
        for i in 0..self.rows {
            if self[(i, i)].im.abs() > tol {
                return false;
            }
            for j in (i + 1)..self.cols {
                if (self[(i, j)] - self[(j, i)].conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// `(H + H*) / 2`, scrubbing roundoff off a nominally Hermitian matrix.
    pub fn hermitian_part(&self) -> Self {
        assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        Self::from_fn(self.rows * p, self.cols * q, |i, j| {
            self[(i / p, j / q)] * other[(i % p, j % q)]
        })
    }

    /// Assemble from a grid of conformable blocks.
    pub fn block(grid: &[&[&CMat]]) -> Self {
        let rows: usize = grid.iter().map(|r| r[0].rows).sum();
        let cols: usize = grid
            .first()
            .map_or(0, |r| r.iter().map(|b| b.cols).sum());
        let mut m = Self::zeros(rows, cols);
        let mut roff = 0;
        for row in grid {
            let rh = row[0].rows;
            let mut coff = 0;
            for b in *row {
                assert_eq!(b.rows, rh, "block row heights differ");
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        m[(roff + i, coff + j)] = b[(i, j)];
                    }
                }
                coff += b.cols;
            }
            assert_eq!(coff, cols, "block row widths differ");
            roff += rh;
        }
        m
    }

    pub fn sub_matrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    /// Real part as a complex-typed matrix.
    pub fn re(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            Complex64::new(self[(i, j)].re, 0.0)
        })
    }

    /// Imaginary part as a complex-typed matrix.
    pub fn im(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            Complex64::new(self[(i, j)].im, 0.0)
        })
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }
}

impl core::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &CMat {
    type Output = CMat;
    fn add(self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &CMat {
    type Output = CMat;
    fn sub(self, rhs: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl Neg for &CMat {
    type Output = CMat;
    fn neg(self) -> CMat {
        CMat::from_fn(self.rows, self.cols, |i, j| -self[(i, j)])
    }
}

impl Mul for &CMat {
    type Output = CMat;
    fn mul(self, rhs: &CMat) -> CMat {
        assert_eq!(
            self.cols, rhs.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = CMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C_ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

const EIG_SWEEPS_PER_VALUE: usize = 60;

/// Eigendecomposition of a Hermitian matrix: `H = Q diag(lambda) Q*`,
/// eigenvalues ascending, `Q` unitary.
pub fn herm_eig(h: &CMat) -> Result<(Vec<f64>, CMat), Error> {
    if !h.is_square() {
        return Err(Error::Dimension {
            expected: (h.rows, h.rows),
            got: (h.rows, h.cols),
        });
    }
    if !h.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = h.rows;
    if n == 0 {
        return Ok((Vec::new(), CMat::zeros(0, 0)));
    }

    let mut m = h.clone();
    let mut q = CMat::identity(n);

    // Householder tridiagonalization: H <- P H P with P = I - 2 v v*.
    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let mut v: Vec<Complex64> = (0..len).map(|i| m[(k + 1 + i, k)]).collect();
        let xnorm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if xnorm <= 1e-300 {
            continue;
        }
        let alpha = v[0];
        let phase = if alpha.norm() > 0.0 {
            alpha / alpha.norm()
        } else {
            C_ONE
        };
        let beta = -phase * xnorm;
        v[0] -= beta;
        let vnorm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if vnorm <= 1e-300 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // Full-size reflector vector (zeros above k+1).
        let mut vf = vec![C_ZERO; n];
        vf[(k + 1)..].copy_from_slice(&v);

        // p = M v; K = v* p (real since M Hermitian).
        let mut p = vec![C_ZERO; n];
        for i in 0..n {
            let mut acc = C_ZERO;
            for j in 0..n {
                acc += m[(i, j)] * vf[j];
            }
            p[i] = acc;
        }
        let kappa: Complex64 = vf.iter().zip(&p).map(|(vi, pi)| vi.conj() * pi).sum();
        // M <- M - 2 p v* - 2 v p* + 4 (v* M v) v v*
        for i in 0..n {
            for j in 0..n {
                let upd = p[i] * vf[j].conj() * 2.0 + vf[i] * p[j].conj() * 2.0
                    - vf[i] * kappa * vf[j].conj() * 4.0;
                m[(i, j)] -= upd;
            }
        }
        // Q <- Q (I - 2 v v*)
        for i in 0..n {
            let qv: Complex64 = (0..n).map(|j| q[(i, j)] * vf[j]).sum();
            for j in 0..n {
                q[(i, j)] -= qv * vf[j].conj() * 2.0;
            }
        }
    }

    // Phase-normalize subdiagonals to real nonnegative, folding phases into Q.
    let mut d: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    let mut e: Vec<f64> = vec![0.0; n];
    let mut ph = C_ONE;
    for i in 0..n - 1 {
        let t = m[(i + 1, i)] * ph;
        let r = t.norm();
        e[i] = r;
        let next = if r > 0.0 { t / r } else { ph };
        // Column i+1 of Q absorbs the phase.
        for row in 0..n {
            q[(row, i + 1)] *= next;
        }
        ph = next;
    }

    tql_implicit(&mut d, &mut e, &mut q)?;

    // Ascending sort with column moves.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap_or(core::cmp::Ordering::Equal));
    let sorted_d: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
    let qs = CMat::from_fn(n, n, |i, j| q[(i, idx[j])]);
    Ok((sorted_d, qs))
}

/// Implicit-shift QL on a real symmetric tridiagonal, rotations applied to
/// the complex column basis `q`. `e[i]` couples `i` and `i+1`.
fn tql_implicit(d: &mut [f64], e: &mut [f64], q: &mut CMat) -> Result<(), Error> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m_idx = l;
            while m_idx < n - 1 {
                let dd = libm::fabs(d[m_idx]) + libm::fabs(d[m_idx + 1]);
                if libm::fabs(e[m_idx]) <= f64::EPSILON * dd {
                    break;
                }
                m_idx += 1;
            }
            if m_idx == l {
                break;
            }
            iter += 1;
            if iter > EIG_SWEEPS_PER_VALUE {
                return Err(Error::NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = libm::hypot(g, 1.0);
            let sign_r = if g >= 0.0 { r } else { -r };
            g = d[m_idx] - d[l] + e[l] / (g + sign_r);
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0f64;
            let mut underflow = false;
            for i in (l..m_idx).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = libm::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m_idx] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // Rotate eigenvector columns i and i+1.
                for row in 0..q.rows() {
                    f = q[(row, i + 1)].re;
                    let fi = q[(row, i + 1)].im;
                    let gr = q[(row, i)];
                    q[(row, i + 1)] =
                        Complex64::new(s * gr.re + c * f, s * gr.im + c * fi);
                    q[(row, i)] = Complex64::new(c * gr.re - s * f, c * gr.im - s * fi);
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m_idx] = 0.0;
        }
    }
    Ok(())
}

/// Largest singular value: sqrt of the top eigenvalue of the Gram matrix
/// on the smaller side.
pub fn sigma_max(m: &CMat) -> f64 {
    if m.rows == 0 || m.cols == 0 {
        return 0.0;
    }
    let gram = if m.rows >= m.cols {
        &m.adjoint() * m
    } else {
        m * &m.adjoint()
    };
    let (vals, _) = herm_eig(&gram.hermitian_part()).expect("gram matrix is Hermitian");
    let top = vals.last().copied().unwrap_or(0.0).max(0.0);
    libm::sqrt(top)
}

/// Solve `A X = B` by partially pivoted elimination.
///
/// Reports [`Error::Singular`] when a pivot falls below
/// `1e-13 * max|A|`.
pub fn lin_solve(a: &CMat, b: &CMat) -> Result<CMat, Error> {
    if !a.is_square() {
        return Err(Error::Dimension {
            expected: (a.rows, a.rows),
            got: (a.rows, a.cols),
        });
    }
    if a.rows != b.rows {
        return Err(Error::Dimension {
            expected: (a.rows, b.cols),
            got: (b.rows, b.cols),
        });
    }
    let n = a.rows;
    if n == 0 {
        return Ok(b.clone());
    }
    let piv_tol = 1e-13 * a.max_abs();
    let mut lu = a.clone();
    let mut x = b.clone();
    for k in 0..n {
        // Partial pivot.
        let mut p = k;
        let mut best = lu[(k, k)].norm();
        for i in (k + 1)..n {
            let v = lu[(i, k)].norm();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best <= piv_tol {
            return Err(Error::Singular);
        }
        if p != k {
            for j in 0..n {
                let t = lu[(k, j)];
                lu[(k, j)] = lu[(p, j)];
                lu[(p, j)] = t;
            }
            for j in 0..x.cols() {
                let t = x[(k, j)];
                x[(k, j)] = x[(p, j)];
                x[(p, j)] = t;
            }
        }
        let inv_piv = C_ONE / lu[(k, k)];
        for i in (k + 1)..n {
            let factor = lu[(i, k)] * inv_piv;
            if factor == C_ZERO {
                continue;
            }
            for j in k..n {
                let t = lu[(k, j)];
                lu[(i, j)] -= factor * t;
            }
            for j in 0..x.cols() {
                let t = x[(k, j)];
                x[(i, j)] -= factor * t;
            }
        }
    }
    // Back substitution.
    for k in (0..n).rev() {
        let inv_piv = C_ONE / lu[(k, k)];
        for j in 0..x.cols() {
            let mut acc = x[(k, j)];
            for i in (k + 1)..n {
                acc -= lu[(k, i)] * x[(i, j)];
            }
            x[(k, j)] = acc * inv_piv;
        }
    }
    Ok(x)
}

/// Eigenvalues of a general square complex matrix (no eigenvectors).
pub fn eigvals(a: &CMat) -> Result<Vec<Complex64>, Error> {
    if !a.is_square() {
        return Err(Error::Dimension {
            expected: (a.rows, a.rows),
            got: (a.rows, a.cols),
        });
    }
    let n = a.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![a[(0, 0)]]);
    }
    let mut h = a.clone();

    // Hessenberg reduction by Householder similarity.
    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let mut v: Vec<Complex64> = (0..len).map(|i| h[(k + 1 + i, k)]).collect();
        let xnorm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if xnorm <= 1e-300 {
            continue;
        }
        let alpha = v[0];
        let phase = if alpha.norm() > 0.0 {
            alpha / alpha.norm()
        } else {
            C_ONE
        };
        v[0] -= -phase * xnorm;
        let vnorm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if vnorm <= 1e-300 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        let mut vf = vec![C_ZERO; n];
        vf[(k + 1)..].copy_from_slice(&v);
        // H <- (I - 2vv*) H: rows update.
        for j in 0..n {
            let w: Complex64 = (0..n).map(|i| vf[i].conj() * h[(i, j)]).sum();
            for i in 0..n {
                h[(i, j)] -= vf[i] * w * 2.0;
            }
        }
        // H <- H (I - 2vv*): columns update.
        for i in 0..n {
            let w: Complex64 = (0..n).map(|j| h[(i, j)] * vf[j]).sum();
            for j in 0..n {
                h[(i, j)] -= w * vf[j].conj() * 2.0;
            }
        }
    }

    // Single-shift QR with deflation on the Hessenberg form.
    let scale = h.max_abs().max(1e-300);
    let mut hi = n;
    let mut vals = vec![C_ZERO; n];
    let mut iters_left = 40 * n;
    while hi > 0 {
        // Deflation scan.
        let mut l = hi - 1;
        while l > 0 {
            let s = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
            let s = if s == 0.0 { scale } else { s };
            if h[(l, l - 1)].norm() <= f64::EPSILON * s {
                h[(l, l - 1)] = C_ZERO;
                break;
            }
            l -= 1;
        }
        if l == hi - 1 {
            vals[hi - 1] = h[(hi - 1, hi - 1)];
            hi -= 1;
            continue;
        }
        if l == hi - 2 {
            let (a11, a12) = (h[(l, l)], h[(l, l + 1)]);
            let (a21, a22) = (h[(l + 1, l)], h[(l + 1, l + 1)]);
            let tr = a11 + a22;
            let det = a11 * a22 - a12 * a21;
            let disc = (tr * tr - det * 4.0).sqrt();
            vals[l] = (tr + disc) * 0.5;
            vals[l + 1] = (tr - disc) * 0.5;
            hi -= 2;
            continue;
        }
        if iters_left == 0 {
            return Err(Error::NoConvergence);
        }
        iters_left -= 1;

        // Wilkinson shift from the trailing 2x2 of the active block.
        let (a11, a12) = (h[(hi - 2, hi - 2)], h[(hi - 2, hi - 1)]);
        let (a21, a22) = (h[(hi - 1, hi - 2)], h[(hi - 1, hi - 1)]);
        let tr = a11 + a22;
        let det = a11 * a22 - a12 * a21;
        let disc = (tr * tr - det * 4.0).sqrt();
        let e1 = (tr + disc) * 0.5;
        let e2 = (tr - disc) * 0.5;
        let sigma = if (e1 - a22).norm() < (e2 - a22).norm() {
            e1
        } else {
            e2
        };

        // Explicit single-shift QR sweep on rows l..hi.
        let mut x = h[(l, l)] - sigma;
        let mut z = h[(l + 1, l)];
        for k in l..(hi - 1) {
            let (c, s, _) = givens(x, z);
            // Rows k, k+1.
            for j in l..hi {
                let t1 = h[(k, j)];
                let t2 = h[(k + 1, j)];
                h[(k, j)] = t1 * c + t2 * s;
                h[(k + 1, j)] = -t1 * s.conj() + t2 * c;
            }
            // Columns k, k+1.
            let top = core::cmp::min(k + 2, hi - 1);
            for i in l..=top {
                let t1 = h[(i, k)];
                let t2 = h[(i, k + 1)];
                h[(i, k)] = t1 * c + t2 * s.conj();
                h[(i, k + 1)] = -t1 * s + t2 * c;
            }
            if k + 2 < hi {
                x = h[(k + 1, k)];
                z = h[(k + 2, k)];
            }
        }
    }
    Ok(vals)
}

/// Complex Givens rotation: returns `(c, s, r)` with `c` real,
/// `c^2 + |s|^2 = 1` and `[c s; -conj(s) c] [a; b] = [r; 0]`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64, Complex64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, C_ZERO, a);
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, b.conj() / bn, Complex64::new(bn, 0.0));
    }
    let norm = libm::hypot(an, bn);
    let alpha = a / an;
    (an / norm, alpha * b.conj() / norm, alpha * norm)
}
