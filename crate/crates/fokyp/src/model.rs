//! Fractional-order state-space models, their frequency response on the
//! principal branch, and stability classification.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::mat::{eigvals, lin_solve, CMat};
use crate::Error;

/// `D^nu x = A x + B u`, `y = C x + D u` with `0 < nu < 2` and real matrices.
#[derive(Debug, Clone)]
pub struct FosModel {
    a: CMat,
    b: CMat,
    c: CMat,
    d: CMat,
    nu: f64,
}

/// Eigenvalues of `A` together with the stability verdict
/// `|arg(lambda)| > nu*pi/2` for every eigenvalue.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub stable: bool,
    pub eigenvalues: Vec<Complex64>,
    /// Smallest `|arg(lambda)| - nu*pi/2` over the spectrum.
    pub min_margin: f64,
}

impl FosModel {
    pub fn new(a: CMat, b: CMat, c: CMat, d: CMat, nu: f64) -> Result<Self, Error> {
        if !(nu > 0.0 && nu < 2.0) {
            return Err(Error::InvalidOrder(nu));
        }
        if !a.is_square() {
            return Err(Error::Dimension {
                expected: (a.rows(), a.rows()),
                got: (a.rows(), a.cols()),
            });
        }
        let n = a.rows();
        if b.rows() != n {
            return Err(Error::Dimension {
                expected: (n, b.cols()),
                got: (b.rows(), b.cols()),
            });
        }
        if c.cols() != n {
            return Err(Error::Dimension {
                expected: (c.rows(), n),
                got: (c.rows(), c.cols()),
            });
        }
        if d.rows() != c.rows() || d.cols() != b.cols() {
            return Err(Error::Dimension {
                expected: (c.rows(), b.cols()),
                got: (d.rows(), d.cols()),
            });
        }
        Ok(Self { a, b, c, d, nu })
    }

    pub fn a(&self) -> &CMat {
        &self.a
    }
    pub fn b(&self) -> &CMat {
        &self.b
    }
    pub fn c(&self) -> &CMat {
        &self.c
    }
    pub fn d(&self) -> &CMat {
        &self.d
    }
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// State, input, and output dimensions.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a.rows(), self.b.cols(), self.c.rows())
    }

    /// `phi = (pi/2)(nu - 1)`, always recomputed from `nu`.
    pub fn phi(&self) -> f64 {
        core::f64::consts::FRAC_PI_2 * (self.nu - 1.0)
    }

    /// `G(j omega) = C (theta I - A)^{-1} B + D` with
    /// `theta = (j omega)^nu` on the principal branch.
    pub fn eval_transfer(&self, omega: f64) -> Result<CMat, Error> {
        let theta = principal_power(omega, self.nu)?;
        let n = self.a.rows();
        let mut pencil = -&self.a;
        for i in 0..n {
            pencil[(i, i)] += theta;
        }
        let inner = lin_solve(&pencil, &self.b).map_err(|e| match e {
            Error::Singular => Error::Resonance(omega),
            other => other,
        })?;
        Ok(&(&self.c * &inner) + &self.d)
    }

    /// Stability on the principal Riemann sheet:
    /// every eigenvalue of `A` satisfies `|arg(lambda)| > nu*pi/2`,
    /// with a strict margin of 1e-9.
    pub fn stability(&self) -> Result<StabilityReport, Error> {
        let eigs = eigvals(&self.a)?;
        let threshold = self.nu * core::f64::consts::FRAC_PI_2;
        let mut min_margin = f64::INFINITY;
        for lam in &eigs {
            let arg = libm::atan2(lam.im, lam.re).abs();
            let margin = arg - threshold;
            if margin < min_margin {
                min_margin = margin;
            }
        }
        Ok(StabilityReport {
            stable: min_margin > 1e-9,
            eigenvalues: eigs,
            min_margin,
        })
    }

    pub fn is_stable(&self) -> Result<bool, Error> {
        Ok(self.stability()?.stable)
    }
}

/// `(j omega)^nu` on the principal branch: `omega^nu * e^{j nu pi / 2}`.
pub fn principal_power(omega: f64, nu: f64) -> Result<Complex64, Error> {
    if omega < 0.0 {
        return Err(Error::NegativeFrequency(omega));
    }
    if !(nu > 0.0 && nu < 2.0) {
        return Err(Error::InvalidOrder(nu));
    }
    let mag = libm::pow(omega, nu);
    let ang = nu * core::f64::consts::FRAC_PI_2;
    Ok(Complex64::new(
        mag * libm::cos(ang),
        mag * libm::sin(ang),
    ))
}
