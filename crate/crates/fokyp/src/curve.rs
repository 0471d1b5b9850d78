//! Frequency ranges as curves on the complex plane.
//!
//! A pair of 2x2 Hermitian matrices `(Delta, Sigma)` carves the set
//! `Theta = { theta : rho(theta, Delta) = 0, rho(theta, Sigma) >= 0 }`
//! out of the complex plane. With `Delta` fixed to the canonical
//! `[[0, e^{j phi}], [e^{-j phi}, 0]]` (phi = (pi/2)(nu-1)) the solutions
//! of the equality are exactly `theta = (j omega)^nu`, and the choice of
//! `Sigma` selects a low, middle, high, or entire frequency range.

use num_complex::Complex64;

use crate::mat::{herm_eig, CMat, C_ONE, C_ZERO};
#[cfg(test)]
use crate::model::principal_power;
use crate::Error;

/// Which slice of the frequency axis a curve pair encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeKind {
    Low,
    Middle,
    High,
    Entire,
}

/// Frequency-range parameters in rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FreqRange {
    /// `0 <= omega <= omega_l`
    Low { omega_l: f64 },
    /// `omega_1 <= omega <= omega_2`
    Middle { omega_1: f64, omega_2: f64 },
    /// `omega >= omega_h`
    High { omega_h: f64 },
    /// All `omega >= 0`, including the point at infinity.
    Entire,
}

impl FreqRange {
    pub fn kind(&self) -> RangeKind {
        match self {
            FreqRange::Low { .. } => RangeKind::Low,
            FreqRange::Middle { .. } => RangeKind::Middle,
            FreqRange::High { .. } => RangeKind::High,
            FreqRange::Entire => RangeKind::Entire,
        }
    }

    /// Interval `[lo, hi]` on the omega axis (`hi = +inf` when unbounded).
    pub fn bounds(&self) -> (f64, f64) {
        match *self {
            FreqRange::Low { omega_l } => (0.0, omega_l),
            FreqRange::Middle { omega_1, omega_2 } => (omega_1, omega_2),
            FreqRange::High { omega_h } => (omega_h, f64::INFINITY),
            FreqRange::Entire => (0.0, f64::INFINITY),
        }
    }

    pub fn contains_omega(&self, omega: f64) -> bool {
        let (lo, hi) = self.bounds();
        omega >= lo && omega <= hi
    }

    fn validate(&self) -> Result<(), Error> {
        match *self {
            FreqRange::Low { omega_l } if omega_l >= 0.0 => Ok(()),
            FreqRange::Middle { omega_1, omega_2 } if omega_1 >= 0.0 && omega_1 <= omega_2 => {
                Ok(())
            }
            FreqRange::High { omega_h } if omega_h >= 0.0 => Ok(()),
            FreqRange::Entire => Ok(()),
            _ => Err(Error::InvalidRange),
        }
    }
}

/// A `(Delta, Sigma)` pair of 2x2 Hermitian matrices plus the range it
/// was built from.
#[derive(Debug, Clone)]
pub struct CurvePair {
    pub delta: CMat,
    pub sigma: CMat,
    pub range: FreqRange,
    pub nu: f64,
}

/// Result of `Delta = T* Delta0 T`, `Sigma = T* Sigma0 T` with the
/// canonical forms parameterized by `(alpha, beta, gamma)`.
#[derive(Debug, Clone)]
pub struct CongruenceFactorization {
    pub t: CMat,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Curve classification: does the pair represent curve(s), and are they
/// bounded?
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveClass {
    pub is_curve: bool,
    pub bounded: bool,
}

/// `rho(A, B) = [A; I]* B [A; I]` for `A` n-by-m and Hermitian `B`
/// of size (n+m).
pub fn rho(a: &CMat, b: &CMat) -> Result<CMat, Error> {
    let (n, m) = (a.rows(), a.cols());
    if b.rows() != n + m || b.cols() != n + m {
        return Err(Error::Dimension {
            expected: (n + m, n + m),
            got: (b.rows(), b.cols()),
        });
    }
    let stacked = CMat::block(&[&[a], &[&CMat::identity(m)]]);
    Ok((&(&stacked.adjoint() * b) * &stacked).hermitian_part())
}

/// Scalar form of [`rho`] for `theta` stacked as `[theta; 1]` against a
/// 2x2 Hermitian matrix; returns the (real) quadratic form value.
pub fn rho_scalar(theta: Complex64, b: &CMat) -> f64 {
    debug_assert_eq!((b.rows(), b.cols()), (2, 2));
    let v = [theta, C_ONE];
    let mut acc = C_ZERO;
    for i in 0..2 {
        for k in 0..2 {
            acc += v[i].conj() * b[(i, k)] * v[k];
        }
    }
    acc.re
}

/// Canonical `Delta0 = [[0, e^{j phi}], [e^{-j phi}, 0]]`.
pub fn delta0(phi: f64) -> CMat {
    let e = Complex64::from_polar(1.0, phi);
    CMat::from_complex_rows(&[&[C_ZERO, e], &[e.conj(), C_ZERO]])
}

/// Canonical `Sigma0 = [[alpha, beta e^{j phi}], [beta e^{-j phi}, gamma]]`.
pub fn sigma0(phi: f64, alpha: f64, beta: f64, gamma: f64) -> CMat {
    let e = Complex64::from_polar(beta, phi);
    CMat::from_complex_rows(&[
        &[Complex64::new(alpha, 0.0), e],
        &[e.conj(), Complex64::new(gamma, 0.0)],
    ])
}

fn phi_of(nu: f64) -> f64 {
    core::f64::consts::FRAC_PI_2 * (nu - 1.0)
}

/// Build the `(Delta, Sigma)` pair for a frequency range at order `nu`.
pub fn make_curve(range: FreqRange, nu: f64) -> Result<CurvePair, Error> {
    if !(nu > 0.0 && nu < 2.0) {
        return Err(Error::InvalidOrder(nu));
    }
    range.validate()?;
    let phi = phi_of(nu);
    let delta = delta0(phi);
    let sigma = match range {
        FreqRange::Low { omega_l } => {
            let w2 = libm::pow(omega_l, 2.0 * nu);
            CMat::from_real_rows(&[&[-1.0, 0.0], &[0.0, w2]])
        }
        FreqRange::Middle { omega_1, omega_2 } => {
            let w1 = libm::pow(omega_1, nu);
            let w2 = libm::pow(omega_2, nu);
            // omega_c = j^nu (w1 + w2) / 2 on the principal branch.
            let jnu = Complex64::from_polar(1.0, nu * core::f64::consts::FRAC_PI_2);
            let wc = jnu * ((w1 + w2) * 0.5);
            CMat::from_complex_rows(&[
                &[Complex64::new(-1.0, 0.0), wc],
                &[wc.conj(), Complex64::new(-w1 * w2, 0.0)],
            ])
        }
        FreqRange::High { omega_h } => {
            let w2 = libm::pow(omega_h, 2.0 * nu);
            CMat::from_real_rows(&[&[1.0, 0.0], &[0.0, -w2]])
        }
        FreqRange::Entire => CMat::zeros(2, 2),
    };
    Ok(CurvePair {
        delta,
        sigma,
        range,
        nu,
    })
}

/// Membership of a point `theta` on the curve, with a tolerance scaled by
/// `1 + |theta|^2` (the forms are quadratic in `theta`).
pub fn curve_contains(pair: &CurvePair, theta: Complex64, tol: f64) -> bool {
    let scale = 1.0 + theta.norm_sqr();
    let eq = rho_scalar(theta, &pair.delta);
    let ineq = rho_scalar(theta, &pair.sigma);
    eq.abs() <= tol * scale && ineq >= -tol * scale
}

fn det2(m: &CMat) -> Complex64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Does the pair represent curve(s), and are they bounded?
pub fn classify_curve(pair: &CurvePair) -> CurveClass {
    let det = det2(&pair.delta).re;
    let is_curve = if det < 0.0 {
        match congruence_factorize(pair) {
            Ok(f) => (0.0 <= f.alpha && f.alpha <= f.gamma) || (f.alpha < 0.0 && f.gamma > 0.0),
            Err(_) => false,
        }
    } else {
        false
    };
    let scale = 1.0 + pair.delta.max_abs();
    let unbounded = pair.delta[(0, 0)].norm() <= 1e-12 * scale && pair.sigma[(0, 0)].re >= 0.0;
    CurveClass {
        is_curve,
        bounded: !unbounded,
    }
}

/// Common congruence factorization `Delta = T* Delta0 T`,
/// `Sigma = T* Sigma0 T` with `alpha <= gamma`.
///
/// Construction: first a congruence `K` taking `Delta0` to `Delta`
/// (through the eigendecomposition of `Delta`, which has signature (+,-)
/// because `det(Delta) < 0`), then the spectral factorization of the real
/// symmetric `Y0` extracted from `Y = K^{-*} Sigma K^{-1}` with
/// `Q = diag(1, j e^{j phi})`.
pub fn congruence_factorize(pair: &CurvePair) -> Result<CongruenceFactorization, Error> {
    if det2(&pair.delta).re >= 0.0 {
        return Err(Error::NotACurve);
    }
    let phi = phi_of(pair.nu);
    let e = Complex64::from_polar(1.0, phi);

    // Eigendecomposition of Delta: d1 < 0 < d2.
    let (vals, vecs) = herm_eig(&pair.delta)?;
    let (d1, d2) = (vals[0], vals[1]);
    if !(d1 < 0.0 && d2 > 0.0) {
        return Err(Error::NotACurve);
    }
    // Deterministic eigenvector phases: largest-modulus component made real
    // positive. Near-ties go to the lower index so that rounding noise in
    // the eigensolver cannot flip the pick.
    let mut w = vecs;
    for j in 0..2 {
        let pick = if w[(1, j)].norm() > w[(0, j)].norm() * (1.0 + 1e-8) {
            1
        } else {
            0
        };
        let z = w[(pick, j)];
        if z.norm() > 0.0 {
            let ph = z.conj() / z.norm();
            for i in 0..2 {
                w[(i, j)] *= ph;
            }
        }
    }
    // S* Delta S = diag(1, -1): positive eigenvector first, scaled.
    let s = CMat::from_fn(2, 2, |i, j| {
        if j == 0 {
            w[(i, 1)] / libm::sqrt(d2)
        } else {
            w[(i, 0)] / libm::sqrt(-d1)
        }
    });
    // Unitary M with M* Delta0 M = diag(1, -1):
    // columns (1, +-e^{-j phi}) / sqrt(2).
    let inv_sqrt2 = 1.0 / libm::sqrt(2.0);
    let m = CMat::from_complex_rows(&[
        &[
            Complex64::new(inv_sqrt2, 0.0),
            Complex64::new(inv_sqrt2, 0.0),
        ],
        &[e.conj() * inv_sqrt2, -e.conj() * inv_sqrt2],
    ]);
    // K = M S^{-1} gives Delta = K* Delta0 K.
    let s_inv = inv2(&s)?;
    let k = &m * &s_inv;

    // Y = K^{-*} Sigma K^{-1}.
    let k_inv = inv2(&k)?;
    let y = (&(&k_inv.adjoint() * &pair.sigma) * &k_inv).hermitian_part();

    // Split Y12 = (beta + j y) e^{j phi}; Y0 = [[x, y], [y, z]].
    let split = y[(0, 1)] * e.conj();
    let beta = split.re;
    let y_off = split.im;
    let y0 = CMat::from_real_rows(&[&[y[(0, 0)].re, y_off], &[y_off, y[(1, 1)].re]]);
    let (y0_vals, y0_vecs) = herm_eig(&y0)?;
    let (alpha, gamma) = (y0_vals[0], y0_vals[1]);

    // Z real with det(Z) = 1; rows of Z are eigenvectors (Y0 = Z^T D Z).
    let mut z = [
        [y0_vecs[(0, 0)].re, y0_vecs[(1, 0)].re],
        [y0_vecs[(0, 1)].re, y0_vecs[(1, 1)].re],
    ];
    let det_z = z[0][0] * z[1][1] - z[0][1] * z[1][0];
    if det_z < 0.0 {
        z[1][0] = -z[1][0];
        z[1][1] = -z[1][1];
    }
    // Sign convention: Z11 >= 0 when nonzero, else Z21 > 0. Flipping the
    // whole 2x2 keeps det = +1.
    let flip = if z[0][0] != 0.0 {
        z[0][0] < 0.0
    } else {
        z[1][0] <= 0.0
    };
    if flip {
        for row in z.iter_mut() {
            row[0] = -row[0];
            row[1] = -row[1];
        }
    }
    let zc = CMat::from_real_rows(&[&z[0], &z[1]]);

    // L = Q* Z Q with Q = diag(1, j e^{j phi}); T = L K.
    let q_phase = Complex64::new(0.0, 1.0) * e;
    let q = CMat::from_complex_rows(&[&[C_ONE, C_ZERO], &[C_ZERO, q_phase]]);
    let l = &(&q.adjoint() * &zc) * &q;
    let t = &l * &k;

    Ok(CongruenceFactorization {
        t,
        alpha,
        beta,
        gamma,
    })
}

fn inv2(m: &CMat) -> Result<CMat, Error> {
    let det = det2(m);
    if det.norm() <= 1e-13 * (1.0 + m.max_abs() * m.max_abs()) {
        return Err(Error::Singular);
    }
    Ok(CMat::from_complex_rows(&[
        &[m[(1, 1)] / det, -m[(0, 1)] / det],
        &[-m[(1, 0)] / det, m[(0, 0)] / det],
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use alloc::vec::Vec;

    const MEMBER_TOL: f64 = 1e-9;

    #[test]
    fn rho_zero_scalar_picks_bottom_right() {
        let sigma = CMat::from_real_rows(&[&[-1.0, 0.0], &[0.0, 7.0]]);
        let a = CMat::zeros(1, 1);
        let r = rho(&a, &sigma).unwrap();
        assert!((r[(0, 0)] - Complex64::new(7.0, 0.0)).norm() < 1e-15);
        assert!((rho_scalar(C_ZERO, &sigma) - 7.0).abs() < 1e-15);
    }

    #[test]
    fn rho_on_delta0_vanishes_on_principal_branch() {
        for nu in [0.3, 0.6, 1.0, 1.4, 1.9] {
            let d0 = delta0(phi_of(nu));
            for w in [0.0, 0.5, 3.0, 200.0] {
                let th = principal_power(w, nu).unwrap();
                assert!(
                    rho_scalar(th, &d0).abs() <= 1e-10 * (1.0 + th.norm_sqr()),
                    "nu={nu} w={w}"
                );
            }
        }
    }

    #[test]
    fn rho_matches_block_product_oracle() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..20 {
            let a = CMat::from_fn(2, 3, |_, _| {
                Complex64::new(rng.symmetric(1.0), rng.symmetric(1.0))
            });
            let b = CMat::from_fn(5, 5, |_, _| {
                Complex64::new(rng.symmetric(1.0), rng.symmetric(1.0))
            })
            .hermitian_part();
            let got = rho(&a, &b).unwrap();
            // Brute-force block multiplication: [A;I]* B [A;I] expanded as
            // A* B11 A + A* B12 + B21 A + B22.
            let b11 = b.sub_matrix(0, 0, 2, 2);
            let b12 = b.sub_matrix(0, 2, 2, 3);
            let b21 = b.sub_matrix(2, 0, 3, 2);
            let b22 = b.sub_matrix(2, 2, 3, 3);
            let expect = &(&(&(&a.adjoint() * &b11) * &a) + &(&a.adjoint() * &b12))
                + &(&(&b21 * &a) + &b22);
            assert!(got.max_abs_diff(&expect) <= 1e-12);
        }
    }

    #[test]
    fn table_sigmas() {
        let lf = make_curve(FreqRange::Low { omega_l: 100.0 }, 0.6).unwrap();
        let expect = CMat::from_real_rows(&[&[-1.0, 0.0], &[0.0, libm::pow(100.0, 1.2)]]);
        assert!(lf.sigma.max_abs_diff(&expect) < 1e-9);

        let hf = make_curve(FreqRange::High { omega_h: 2.0 }, 0.6).unwrap();
        let expect = CMat::from_real_rows(&[&[1.0, 0.0], &[0.0, -libm::pow(2.0, 1.2)]]);
        assert!(hf.sigma.max_abs_diff(&expect) < 1e-13);

        // Degenerate middle band: off-diagonal magnitude w^nu.
        let w = 3.0;
        let mf = make_curve(
            FreqRange::Middle {
                omega_1: w,
                omega_2: w,
            },
            0.8,
        )
        .unwrap();
        assert!((mf.sigma[(0, 1)].norm() - libm::pow(w, 0.8)).abs() < 1e-12);
    }

    #[test]
    fn reversed_middle_band_rejected() {
        assert!(matches!(
            make_curve(
                FreqRange::Middle {
                    omega_1: 2.0,
                    omega_2: 1.0
                },
                0.5
            ),
            Err(Error::InvalidRange)
        ));
    }

    #[test]
    fn lf_membership_closed_form() {
        let nu = 0.6;
        let pair = make_curve(FreqRange::Low { omega_l: 10.0 }, nu).unwrap();
        for w in [0.0, 1.0, 9.99, 10.0] {
            let th = principal_power(w, nu).unwrap();
            assert!(curve_contains(&pair, th, MEMBER_TOL), "w={w} should be in");
            // Closed form: rho(theta, Sigma) = wl^{2nu} - w^{2nu}.
            let expect = libm::pow(10.0, 2.0 * nu) - libm::pow(w, 2.0 * nu);
            assert!((rho_scalar(th, &pair.sigma) - expect).abs() <= 1e-9 * (1.0 + expect.abs()));
        }
        for w in [10.5, 100.0] {
            let th = principal_power(w, nu).unwrap();
            assert!(!curve_contains(&pair, th, MEMBER_TOL), "w={w} should be out");
        }
    }

    #[test]
    fn mf_membership_product_form() {
        let nu = 1.3;
        let (w1, w2) = (2.0, 8.0);
        let pair = make_curve(
            FreqRange::Middle {
                omega_1: w1,
                omega_2: w2,
            },
            nu,
        )
        .unwrap();
        let mut rng = SplitMix64::new(2);
        for _ in 0..200 {
            let w = rng.uniform(0.0, 16.0);
            let th = principal_power(w, nu).unwrap();
            let inside = w >= w1 && w <= w2;
            // Oracle: rho(theta, Sigma) = -(w^nu - w1^nu)(w^nu - w2^nu).
            let wn = libm::pow(w, nu);
            let closed = -(wn - libm::pow(w1, nu)) * (wn - libm::pow(w2, nu));
            assert!(
                (rho_scalar(th, &pair.sigma) - closed).abs() <= 1e-9 * (1.0 + closed.abs())
            );
            assert_eq!(curve_contains(&pair, th, MEMBER_TOL), inside, "w={w}");
        }
    }

    #[test]
    fn membership_interval_equivalence_all_ranges() {
        let mut rng = SplitMix64::new(77);
        for _ in 0..10 {
            let nu = rng.uniform(0.05, 1.95);
            let ranges = [
                FreqRange::Low { omega_l: rng.uniform(0.1, 50.0) },
                {
                    let a = rng.uniform(0.0, 20.0);
                    FreqRange::Middle {
                        omega_1: a,
                        omega_2: a + rng.uniform(0.0, 20.0),
                    }
                },
                FreqRange::High { omega_h: rng.uniform(0.1, 50.0) },
                FreqRange::Entire,
            ];
            for range in ranges {
                let pair = make_curve(range, nu).unwrap();
                for _ in 0..100 {
                    let w = rng.uniform(0.0, 80.0);
                    let th = principal_power(w, nu).unwrap();
                    assert_eq!(
                        curve_contains(&pair, th, MEMBER_TOL),
                        range.contains_omega(w),
                        "nu={nu} range={range:?} w={w}"
                    );
                }
            }
        }
    }

    #[test]
    fn classification_of_table_ranges() {
        let lf = make_curve(FreqRange::Low { omega_l: 5.0 }, 0.7).unwrap();
        let c = classify_curve(&lf);
        assert!(c.is_curve && c.bounded);

        let hf = make_curve(FreqRange::High { omega_h: 5.0 }, 0.7).unwrap();
        let c = classify_curve(&hf);
        assert!(c.is_curve && !c.bounded);

        let mf = make_curve(
            FreqRange::Middle {
                omega_1: 1.0,
                omega_2: 2.0,
            },
            0.7,
        )
        .unwrap();
        assert!(classify_curve(&mf).is_curve);

        let ent = make_curve(FreqRange::Entire, 0.7).unwrap();
        let c = classify_curve(&ent);
        assert!(c.is_curve && !c.bounded);

        // Delta = I has positive determinant: not a curve.
        let not_curve = CurvePair {
            delta: CMat::identity(2),
            sigma: CMat::zeros(2, 2),
            range: FreqRange::Entire,
            nu: 0.7,
        };
        assert!(!classify_curve(&not_curve).is_curve);
    }

    #[test]
    fn factorize_already_canonical() {
        let nu = 0.6;
        let phi = phi_of(nu);
        let pair = CurvePair {
            delta: delta0(phi),
            sigma: sigma0(phi, -1.0, 0.0, 4.0),
            range: FreqRange::Entire,
            nu,
        };
        let f = congruence_factorize(&pair).unwrap();
        assert!(f.t.max_abs_diff(&CMat::identity(2)) <= 1e-10);
        assert!((f.alpha + 1.0).abs() < 1e-12);
        assert!(f.beta.abs() < 1e-12);
        assert!((f.gamma - 4.0).abs() < 1e-12);
    }

    #[test]
    fn factorize_lf_pair() {
        let nu = 0.9;
        let wl = 7.0;
        let pair = make_curve(FreqRange::Low { omega_l: wl }, nu).unwrap();
        let f = congruence_factorize(&pair).unwrap();
        assert!(f.t.max_abs_diff(&CMat::identity(2)) <= 1e-10);
        assert!((f.alpha + 1.0).abs() < 1e-10);
        assert!(f.beta.abs() < 1e-10);
        assert!((f.gamma - libm::pow(wl, 2.0 * nu)).abs() < 1e-8);
    }

    fn rebuild_residual(pair: &CurvePair, f: &CongruenceFactorization) -> f64 {
        let phi = phi_of(pair.nu);
        let d = &(&f.t.adjoint() * &delta0(phi)) * &f.t;
        let s = &(&f.t.adjoint() * &sigma0(phi, f.alpha, f.beta, f.gamma)) * &f.t;
        d.max_abs_diff(&pair.delta).max(s.max_abs_diff(&pair.sigma))
    }

    #[test]
    fn factorize_reconstruction_random_pairs() {
        let mut rng = SplitMix64::new(31);
        let mut done = 0;
        while done < 500 {
            let nu = rng.uniform(0.05, 1.95);
            let delta = CMat::from_fn(2, 2, |_, _| {
                Complex64::new(rng.symmetric(2.0), rng.symmetric(2.0))
            })
            .hermitian_part();
            if det2(&delta).re >= -1e-3 {
                continue;
            }
            let sigma = CMat::from_fn(2, 2, |_, _| {
                Complex64::new(rng.symmetric(2.0), rng.symmetric(2.0))
            })
            .hermitian_part();
            let pair = CurvePair {
                delta,
                sigma,
                range: FreqRange::Entire,
                nu,
            };
            let f = congruence_factorize(&pair).unwrap();
            assert!(f.alpha <= f.gamma + 1e-12);
            assert!(
                rebuild_residual(&pair, &f) <= 1e-10 * (1.0 + pair.sigma.max_abs()),
                "residual too large"
            );
            done += 1;
        }
    }

    #[test]
    fn factorize_rejects_positive_det() {
        let pair = CurvePair {
            delta: CMat::identity(2),
            sigma: CMat::zeros(2, 2),
            range: FreqRange::Entire,
            nu: 0.5,
        };
        assert!(matches!(congruence_factorize(&pair), Err(Error::NotACurve)));
    }

    #[test]
    fn table_ranges_factor_with_expected_signs() {
        // alpha/gamma signs drive boundedness per range kind.
        let samples: Vec<(FreqRange, bool)> = alloc::vec![
            (FreqRange::Low { omega_l: 3.0 }, true),
            (FreqRange::High { omega_h: 3.0 }, false),
            (
                FreqRange::Middle {
                    omega_1: 1.0,
                    omega_2: 2.0
                },
                true
            ),
        ];
        for (range, bounded) in samples {
            let pair = make_curve(range, 1.2).unwrap();
            let c = classify_curve(&pair);
            assert!(c.is_curve);
            assert_eq!(c.bounded, bounded, "{range:?}");
        }
    }
}
