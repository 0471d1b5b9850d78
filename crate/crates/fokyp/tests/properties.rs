use fokyp::curve::{congruence_factorize, curve_contains, delta0, make_curve, rho_scalar, sigma0, CurvePair};
use fokyp::lmi::{assemble_generic, build_linf_lmi, build_pi};
use fokyp::mat::{herm_eig, sigma_max};
use fokyp::model::principal_power;
use fokyp::{CMat, Complex64, FosModel, FreqRange};
use proptest::prelude::*;

fn cmat(rows: usize, cols: usize, vals: &[f64]) -> CMat {
    CMat::from_fn(rows, cols, |i, j| {
        Complex64::new(vals[2 * (i * cols + j)], vals[2 * (i * cols + j) + 1])
    })
}

fn herm(n: usize, vals: &[f64]) -> CMat {
    cmat(n, n, vals).hermitian_part()
}

fn phi_of(nu: f64) -> f64 {
    std::f64::consts::FRAC_PI_2 * (nu - 1.0)
}

fn range_strategy() -> impl Strategy<Value = FreqRange> {
    prop_oneof![
        (1e-3..1e3f64).prop_map(|w| FreqRange::Low { omega_l: w }),
        (1e-3..1e2f64, 1.1..1e2f64).prop_map(|(w1, k)| FreqRange::Middle {
            omega_1: w1,
            omega_2: w1 * k,
        }),
        (1e-3..1e3f64).prop_map(|w| FreqRange::High { omega_h: w }),
        Just(FreqRange::Entire),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// theta(omega) lies on the curve of a range exactly when omega lies
    /// in the range's interval.
    #[test]
    fn membership_matches_interval(
        range in range_strategy(),
        nu in 0.05..1.95f64,
        omega in 0.0..1e4f64,
    ) {
        let pair = make_curve(range, nu).unwrap();
        let theta = principal_power(omega, nu).unwrap();
        let on_curve = curve_contains(&pair, theta, 1e-9);
        prop_assert_eq!(on_curve, range.contains_omega(omega));
    }

    /// Factorization rebuilds both matrices of a valid pair.
    #[test]
    fn factorization_reconstructs(
        nu in 0.05..1.95f64,
        dv in prop::collection::vec(-2.0..2.0f64, 8),
        sv in prop::collection::vec(-2.0..2.0f64, 8),
    ) {
        let delta = herm(2, &dv);
        let det = (delta[(0, 0)] * delta[(1, 1)] - delta[(0, 1)] * delta[(1, 0)]).re;
        prop_assume!(det < -1e-3);
        let sigma = herm(2, &sv);
        let pair = CurvePair { delta: delta.clone(), sigma: sigma.clone(), range: FreqRange::Entire, nu };
        let f = congruence_factorize(&pair).unwrap();
        let phi = phi_of(nu);
        let d_back = &(&f.t.adjoint() * &delta0(phi)) * &f.t;
        let s_back = &(&f.t.adjoint() * &sigma0(phi, f.alpha, f.beta, f.gamma)) * &f.t;
        prop_assert!(f.alpha <= f.gamma + 1e-12);
        prop_assert!(d_back.max_abs_diff(&delta) <= 1e-9);
        prop_assert!(s_back.max_abs_diff(&sigma) <= 1e-9);
    }

    /// rho against Delta0 vanishes identically on the principal branch.
    #[test]
    fn branch_annihilates_delta0(nu in 0.05..1.95f64, omega in 0.0..1e4f64) {
        let theta = principal_power(omega, nu).unwrap();
        let d0 = delta0(phi_of(nu));
        prop_assert!(rho_scalar(theta, &d0).abs() <= 1e-9 * (1.0 + theta.norm_sqr()));
    }

    /// sigma_max is adjoint-invariant and subadditive.
    #[test]
    fn sigma_max_properties(vals in prop::collection::vec(-3.0..3.0f64, 24)) {
        let m = cmat(3, 4, &vals[..]);
        let s = sigma_max(&m);
        prop_assert!((s - sigma_max(&m.adjoint())).abs() <= 1e-10 * (1.0 + s));
        let doubled = &m + &m;
        prop_assert!(sigma_max(&doubled) <= 2.0 * s + 1e-10);
    }

    /// Eigendecomposition reconstructs random Hermitian matrices.
    #[test]
    fn herm_eig_reconstructs(vals in prop::collection::vec(-5.0..5.0f64, 32)) {
        let h = herm(4, &vals);
        let (lam, q) = herm_eig(&h).unwrap();
        let d = CMat::from_fn(4, 4, |i, j| {
            if i == j { Complex64::new(lam[i], 0.0) } else { Complex64::new(0.0, 0.0) }
        });
        let back = &(&q * &d) * &q.adjoint();
        prop_assert!(back.max_abs_diff(&h) <= 1e-9 * (1.0 + h.max_abs()));
        for i in 1..4 {
            prop_assert!(lam[i - 1] <= lam[i]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Pre-Schur Pi is monotone in delta: raising the bound can only
    /// lower eigenvalues.
    #[test]
    fn pi_monotone_in_delta(d1 in 0.1..5.0f64, bump in 0.01..2.0f64) {
        let c = CMat::from_real_rows(&[&[1.5, 1.9]]);
        let d = CMat::from_real_rows(&[&[0.8]]);
        let p1 = build_pi(&c, &d, d1).unwrap();
        let p2 = build_pi(&c, &d, d1 + bump).unwrap();
        let diff = &p2 - &p1;
        let (vals, _) = herm_eig(&diff.hermitian_part()).unwrap();
        prop_assert!(*vals.last().unwrap() <= 1e-12);
    }

    /// Specialized L-infinity LMI vs generic Kronecker assembly under the
    /// delta-rescale bridge: identical definiteness verdicts.
    #[test]
    fn schur_bridge_definiteness(
        range in range_strategy(),
        nu in prop::sample::select(vec![0.4f64, 1.0, 1.6]),
        delta in 0.2..3.0f64,
        uv in prop::collection::vec(-1.0..1.0f64, 16),
    ) {
        let sys = FosModel::new(
            CMat::from_real_rows(&[&[-12.1, 2.3], &[2.37, -16.2]]),
            CMat::from_real_rows(&[&[-2.0], &[1.2]]),
            CMat::from_real_rows(&[&[1.5, 1.9]]),
            CMat::from_real_rows(&[&[0.8]]),
            nu,
        )
        .unwrap();
        let spec = build_linf_lmi(&sys, range, delta).unwrap();
        let pair = make_curve(range, nu).unwrap();
        let pi = build_pi(sys.c(), sys.d(), delta).unwrap();
        let gen = assemble_generic(&sys, &pair, &pi).unwrap();
        let u = herm(2, &uv[..8]);
        let v = herm(2, &uv[8..]);
        let (xs, xg) = if matches!(range, FreqRange::Entire) {
            (spec.pack(&[&u]), gen.pack(&[&u.scale_re(delta)]))
        } else {
            (spec.pack(&[&u, &v]), gen.pack(&[&u.scale_re(delta), &v.scale_re(delta)]))
        };
        let (ls, _) = herm_eig(&spec.eval(&xs)).unwrap();
        let (lg, _) = herm_eig(&gen.eval(&xg)).unwrap();
        prop_assert_eq!(*ls.last().unwrap() < 0.0, *lg.last().unwrap() < 0.0);
    }
}
