//! Builders that turn a model, a frequency range, and a bound `delta`
//! into Hermitian linear matrix inequalities.
//!
//! Two routes exist on purpose. `assemble_generic` forms the Kronecker
//! assembly `N*(Delta (x) U + Sigma (x) V)N + Pi` (quadratic in `delta`
//! through `Pi`); the `build_*` functions emit the specialized 3x3 block
//! forms, linear in `delta` after the Schur step. The two are
//! definiteness-equivalent under the variable rescale `U -> delta U`,
//! `V -> delta V`, which the tests exercise.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::curve::{make_curve, CurvePair, FreqRange};
use crate::mat::{CMat, C_ZERO};
use crate::model::FosModel;
use crate::sdp::{hermitian_basis, HermitianAffineMap};
use crate::Error;

/// Which theorem family an [`LmiProblem`] instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LmiKind {
    LinfSpecialized,
    LinfGeneric,
    HinfLowOrder,
    HinfHighOrder,
    HinfGeneric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarRole {
    U,
    V,
}

/// One Hermitian decision block inside the flattened parameter vector.
#[derive(Debug, Clone, Copy)]
pub struct VarBlock {
    pub role: VarRole,
    pub dim: usize,
    pub offset: usize,
    /// Side constraint: the block must be positive definite.
    pub positive: bool,
}

impl VarBlock {
    pub fn len(&self) -> usize {
        self.dim * self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.dim == 0
    }

    /// Reconstruct the Hermitian block from its slice of parameters.
    pub fn materialize(&self, x: &[f64]) -> CMat {
        let basis = hermitian_basis(self.dim).expect("dim >= 1");
        let mut m = CMat::zeros(self.dim, self.dim);
        for (k, e) in basis.iter().enumerate() {
            let c = x[self.offset + k];
            if c != 0.0 {
                m = &m + &e.scale_re(c);
            }
        }
        m
    }
}

/// An affine Hermitian map together with its decision-block layout and
/// provenance metadata.
#[derive(Debug, Clone)]
pub struct LmiProblem {
    pub map: HermitianAffineMap,
    pub blocks: Vec<VarBlock>,
    pub kind: LmiKind,
    pub delta: f64,
    pub range: Option<FreqRange>,
}

impl LmiProblem {
    pub fn num_params(&self) -> usize {
        self.map.basis.len()
    }

    pub fn eval(&self, x: &[f64]) -> CMat {
        self.map.eval(x)
    }

    /// Parameter vector for given block values (in block order).
    pub fn pack(&self, values: &[&CMat]) -> Vec<f64> {
        assert_eq!(values.len(), self.blocks.len());
        let mut x = alloc::vec![0.0; self.num_params()];
        for (block, m) in self.blocks.iter().zip(values) {
            assert_eq!((m.rows(), m.cols()), (block.dim, block.dim));
            let n = block.dim;
            let mut k = block.offset;
            for i in 0..n {
                x[k] = m[(i, i)].re;
                k += 1;
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    x[k] = m[(i, j)].re;
                    k += 1;
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    x[k] = m[(i, j)].im;
                    k += 1;
                }
            }
        }
        x
    }
}

/// The pencil `N = [A B; I 0]`, the common frame of every assembly.
#[derive(Debug, Clone)]
pub struct SystemPencil {
    n_mat: CMat,
}

impl SystemPencil {
    pub fn new(sys: &FosModel) -> Self {
        let (n, m, _) = sys.dims();
        let id = CMat::identity(n);
        let zero = CMat::zeros(n, m);
        Self {
            n_mat: CMat::block(&[&[sys.a(), sys.b()], &[&id, &zero]]),
        }
    }

    pub fn matrix(&self) -> &CMat {
        &self.n_mat
    }
}

/// `Pi = [[C^T C, C^T D], [D^T C, D^T D - delta^2 I]]` (pre-Schur form,
/// quadratic in `delta`).
pub fn build_pi(c: &CMat, d: &CMat, delta: f64) -> Result<CMat, Error> {
    if delta <= 0.0 {
        return Err(Error::NonpositiveDelta(delta));
    }
    if c.rows() != d.rows() {
        return Err(Error::Dimension {
            expected: (c.rows(), d.cols()),
            got: (d.rows(), d.cols()),
        });
    }
    let ct = c.adjoint();
    let dt = d.adjoint();
    let tl = &ct * c;
    let tr = &ct * d;
    let bl = &dt * c;
    let mut br = &dt * d;
    for i in 0..br.rows() {
        br[(i, i)] -= Complex64::new(delta * delta, 0.0);
    }
    Ok(CMat::block(&[&[&tl, &tr], &[&bl, &br]]).hermitian_part())
}

fn affine_in_blocks(
    dims: &[(VarRole, usize, bool)],
    f: &dyn Fn(&[&CMat]) -> CMat,
) -> (HermitianAffineMap, Vec<VarBlock>) {
    let zeros: Vec<CMat> = dims.iter().map(|&(_, d, _)| CMat::zeros(d, d)).collect();
    let zero_refs: Vec<&CMat> = zeros.iter().collect();
    let f0 = f(&zero_refs).hermitian_part();
    let mut basis = Vec::new();
    let mut blocks = Vec::new();
    let mut offset = 0;
    for (bi, &(role, dim, positive)) in dims.iter().enumerate() {
        let elems = hermitian_basis(dim).expect("dim >= 1");
        for e in &elems {
            let mut args: Vec<&CMat> = zero_refs.clone();
            args[bi] = e;
            let term = (&f(&args) - &f0).hermitian_part();
            basis.push(term);
        }
        blocks.push(VarBlock {
            role,
            dim,
            offset,
            positive,
        });
        offset += dim * dim;
    }
    (HermitianAffineMap { f0, basis }, blocks)
}

/// Kronecker assembly `N*(Delta (x) U + Sigma (x) V)N + Pi` as an affine
/// map in the real parameters of `U` (free) and `V` (positive).
///
/// When `Sigma = 0` the `V` dependence vanishes identically and no `V`
/// block is emitted.
pub fn assemble_generic(
    sys: &FosModel,
    pair: &CurvePair,
    pi: &CMat,
) -> Result<LmiProblem, Error> {
    let (n, m, _) = sys.dims();
    if pi.rows() != n + m || pi.cols() != n + m {
        return Err(Error::Dimension {
            expected: (n + m, n + m),
            got: (pi.rows(), pi.cols()),
        });
    }
    let pencil = SystemPencil::new(sys);
    let nn = pencil.matrix().clone();
    let nn_adj = nn.adjoint();
    let delta = pair.delta.clone();
    let sigma = pair.sigma.clone();
    let sigma_zero = sigma.max_abs() == 0.0;
    let pi = pi.clone();

    let dims: Vec<(VarRole, usize, bool)> = if sigma_zero {
        alloc::vec![(VarRole::U, n, false)]
    } else {
        alloc::vec![(VarRole::U, n, false), (VarRole::V, n, true)]
    };
    let eval = move |args: &[&CMat]| -> CMat {
        let u = args[0];
        let mut inner = delta.kron(u);
        if args.len() > 1 {
            inner = &inner + &sigma.kron(args[1]);
        }
        &(&(&nn_adj * &inner) * &nn) + &pi
    };
    let (map, blocks) = affine_in_blocks(&dims, &eval);
    Ok(LmiProblem {
        map,
        blocks,
        kind: LmiKind::LinfGeneric,
        delta: 0.0,
        range: Some(pair.range),
    })
}

fn sym(x: &CMat) -> CMat {
    &x.adjoint() + x
}

/// The specialized 3x3 block LMI for an L-infinity bound over the given
/// range (post-Schur, linear in `delta`). Variables: `U` free, `V > 0`
/// (no `V` for the entire range, where it does not enter).
pub fn build_linf_lmi(
    sys: &FosModel,
    range: FreqRange,
    delta: f64,
) -> Result<LmiProblem, Error> {
    if delta <= 0.0 {
        return Err(Error::NonpositiveDelta(delta));
    }
    // Validates range parameters and nu; also pins omega_c.
    let pair = make_curve(range, sys.nu())?;
    let (n, m, p) = sys.dims();
    let phi = sys.phi();
    let e_phi = Complex64::from_polar(1.0, phi);
    let a = sys.a().clone();
    let b = sys.b().clone();
    let at = a.transpose();
    let bt = b.transpose();
    let ct = sys.c().transpose();
    let dt = sys.d().transpose();
    let c = sys.c().clone();
    let d = sys.d().clone();
    let nu = sys.nu();
    let neg_delta_m = CMat::identity(m).scale_re(-delta);
    let neg_delta_p = CMat::identity(p).scale_re(-delta);
    let omega_c = pair.sigma[(0, 1)];

    let dims: Vec<(VarRole, usize, bool)> = if matches!(range, FreqRange::Entire) {
        alloc::vec![(VarRole::U, n, false)]
    } else {
        alloc::vec![(VarRole::U, n, false), (VarRole::V, n, true)]
    };

    let eval = move |args: &[&CMat]| -> CMat {
        let u = args[0];
        let zero_v = CMat::zeros(n, n);
        let v = if args.len() > 1 { args[1] } else { &zero_v };
        let (top, y): (CMat, CMat) = match range {
            FreqRange::Low { omega_l } => {
                let w = libm::pow(omega_l, 2.0 * nu);
                let x = (&at * u).scale(e_phi);
                let top = &(&sym(&x) - &(&(&at * v) * &a)) + &v.scale_re(w);
                let y = &(&bt * u).scale(e_phi) - &(&(&bt * v) * &a);
                (top, y)
            }
            FreqRange::High { omega_h } => {
                let w = libm::pow(omega_h, 2.0 * nu);
                let x = (&at * u).scale(e_phi);
                let top = &(&sym(&x) + &(&(&at * v) * &a)) - &v.scale_re(w);
                let y = &(&bt * u).scale(e_phi) + &(&(&bt * v) * &a);
                (top, y)
            }
            FreqRange::Middle { omega_1, omega_2 } => {
                let w12 = libm::pow(omega_1, nu) * libm::pow(omega_2, nu);
                let mix = &u.scale(e_phi) + &v.scale(omega_c);
                let x = &at * &mix;
                let top = &(&sym(&x) - &(&(&at * v) * &a)) - &v.scale_re(w12);
                let y = &(&bt * &mix) - &(&(&bt * v) * &a);
                (top, y)
            }
            FreqRange::Entire => {
                let x = (&at * u).scale(e_phi);
                (sym(&x), (&bt * u).scale(e_phi))
            }
        };
        let mid = match range {
            FreqRange::Low { .. } | FreqRange::Middle { .. } => {
                &neg_delta_m - &(&(&bt * v) * &b)
            }
            FreqRange::High { .. } => &neg_delta_m + &(&(&bt * v) * &b),
            FreqRange::Entire => neg_delta_m.clone(),
        };
        CMat::block(&[
            &[&top, &y.adjoint(), &ct],
            &[&y, &mid, &dt],
            &[&c, &d, &neg_delta_p],
        ])
        .hermitian_part()
    };
    let (map, blocks) = affine_in_blocks(&dims, &eval);
    Ok(LmiProblem {
        map,
        blocks,
        kind: LmiKind::LinfSpecialized,
        delta,
        range: Some(range),
    })
}

/// The specialized 3x3 block LMI for an H-infinity bound (post-Schur,
/// linear in `delta`). One positive Hermitian variable `U`; the block
/// layout switches at `nu = 1`.
pub fn build_hinf_lmi(sys: &FosModel, delta: f64) -> Result<LmiProblem, Error> {
    if delta <= 0.0 {
        return Err(Error::NonpositiveDelta(delta));
    }
    let (n, m, p) = sys.dims();
    let nu = sys.nu();
    let s = libm::sin(core::f64::consts::FRAC_PI_2 * nu);
    let high_order = nu > 1.0;
    let a = sys.a().clone();
    let b = sys.b().clone();
    let at = a.transpose();
    let bt = b.transpose();
    let ct = sys.c().transpose();
    let dt = sys.d().transpose();
    let c = sys.c().clone();
    let d = sys.d().clone();
    let neg_delta_m = CMat::identity(m).scale_re(-delta);
    let neg_delta_p = CMat::identity(p).scale_re(-delta);
    let j = Complex64::new(0.0, 1.0);

    let dims = alloc::vec![(VarRole::U, n, true)];
    let eval = move |args: &[&CMat]| -> CMat {
        let u = args[0];
        let (top, tr, bl) = if high_order {
            // Sym(jUA) s, jUB s, -jB^T U s
            let jua = (&(u * &a)).scale(j).scale_re(s);
            let top = &jua + &jua.adjoint();
            let tr = (&(u * &b)).scale(j).scale_re(s);
            let bl = (&(&bt * u)).scale(-j).scale_re(s);
            (top, tr, bl)
        } else {
            // Sym(A^T U) s, UB s, B^T U s
            let atu = (&at * u).scale_re(s);
            let top = &atu + &atu.adjoint();
            let tr = (u * &b).scale_re(s);
            let bl = (&bt * u).scale_re(s);
            (top, tr, bl)
        };
        CMat::block(&[
            &[&top, &tr, &ct],
            &[&bl, &neg_delta_m, &dt],
            &[&c, &d, &neg_delta_p],
        ])
        .hermitian_part()
    };
    let (map, blocks) = affine_in_blocks(&dims, &eval);
    Ok(LmiProblem {
        map,
        blocks,
        kind: if high_order {
            LmiKind::HinfHighOrder
        } else {
            LmiKind::HinfLowOrder
        },
        delta,
        range: Some(FreqRange::Entire),
    })
}

/// Generic pre-Schur H-infinity assembly, for cross-checking the
/// specialized builder: `N*(R (x) U)N + Pi` where `R` is the constant
/// 2x2 region matrix (so the off-diagonal weight is `2 sin(pi nu / 2)`,
/// absorbed by a rescale of `U` in the specialized form).
pub fn assemble_hinf_generic(sys: &FosModel, delta: f64) -> Result<LmiProblem, Error> {
    if delta <= 0.0 {
        return Err(Error::NonpositiveDelta(delta));
    }
    let (n, _, _) = sys.dims();
    let nu = sys.nu();
    let s = libm::sin(core::f64::consts::FRAC_PI_2 * nu);
    let two_s = Complex64::new(2.0 * s, 0.0);
    let r = if nu > 1.0 {
        // T0*(Delta + Sigma^T)T0 with T0 = diag(e^{j pi/4}, e^{-j pi/4}).
        let m_j = Complex64::new(0.0, -1.0);
        CMat::from_complex_rows(&[&[C_ZERO, two_s * m_j], &[two_s * (-m_j), C_ZERO]])
    } else {
        CMat::from_complex_rows(&[&[C_ZERO, two_s], &[two_s, C_ZERO]])
    };
    let pi = build_pi(sys.c(), sys.d(), delta)?;
    let pencil = SystemPencil::new(sys);
    let nn = pencil.matrix().clone();
    let nn_adj = nn.adjoint();

    let dims = alloc::vec![(VarRole::U, n, true)];
    let eval = move |args: &[&CMat]| -> CMat {
        let inner = r.kron(args[0]);
        &(&(&nn_adj * &inner) * &nn) + &pi
    };
    let (map, blocks) = affine_in_blocks(&dims, &eval);
    Ok(LmiProblem {
        map,
        blocks,
        kind: LmiKind::HinfGeneric,
        delta,
        range: Some(FreqRange::Entire),
    })
}

/// Doubled real-symmetric embedding `[[Re H, Im H], [Im(H)^T, Re H]]`.
///
/// Eigenvalues of the output are those of `H` with doubled multiplicity,
/// so definiteness verdicts carry over exactly.
pub fn realify(h: &CMat) -> Result<CMat, Error> {
    if !h.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let re = h.re();
    let im = h.im();
    let im_t = im.transpose();
    Ok(CMat::block(&[&[&re, &im], &[&im_t, &re]]))
}
