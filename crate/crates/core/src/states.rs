//! Spin coherent states `|η⟩`, their two-component superpositions `|η, θ⟩`,
//! and the one-axis-twisting route from the first to the second.

use num_complex::Complex64;

use crate::error::{Result, SpinError};
use crate::numeric::{exact_cos_sin, ln_binomials, Xi};
use crate::spinspace::{inner, number_state, SpinSpace, SpinState};

/// Superpositions whose normalization `2 + 2 cos θ ξ^{2j}` falls to this
/// value or below are rejected.
pub const DEGENERACY_THRESHOLD: f64 = 1e-14;

/// `(j, η, θ)` labelling the superposed state `|η⟩ + e^{iθ}|−η⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SscsParams {
    pub twice_j: u32,
    pub eta: Complex64,
    pub theta: f64,
}

impl SscsParams {
    pub fn new(twice_j: u32, eta: Complex64, theta: f64) -> Self {
        Self {
            twice_j,
            eta,
            theta,
        }
    }

    /// Real `η`, the convention of every figure sweep.
    pub fn real(twice_j: u32, eta: f64, theta: f64) -> Self {
        Self::new(twice_j, Complex64::new(eta, 0.0), theta)
    }

    pub fn space(&self) -> Result<SpinSpace> {
        SpinSpace::new(self.twice_j)
    }

    pub fn j(&self) -> f64 {
        f64::from(self.twice_j) / 2.0
    }

    pub fn eta_abs2(&self) -> f64 {
        self.eta.norm_sqr()
    }

    pub(crate) fn xi(&self) -> Xi {
        Xi::from_abs2(self.eta_abs2())
    }

    pub(crate) fn cos_sin(&self) -> (f64, f64) {
        exact_cos_sin(self.theta)
    }

    /// The partner state `|η, θ + π⟩`.
    pub fn shifted_by_pi(&self) -> Self {
        Self {
            theta: self.theta + std::f64::consts::PI,
            ..*self
        }
    }

    /// `2 + 2 cos θ ξ^{2j}`, the squared norm of `|η⟩ + e^{iθ}|−η⟩`.
    pub fn normalization(&self) -> f64 {
        let (c, _) = self.cos_sin();
        2.0 * self.xi().one_plus(c, self.twice_j)
    }

    /// Fails with [`SpinError::DegenerateSuperposition`] when the state does
    /// not exist.
    pub fn validate(&self) -> Result<()> {
        self.space()?;
        let denominator = self.normalization();
        if denominator <= DEGENERACY_THRESHOLD {
            Err(SpinError::DegenerateSuperposition { denominator })
        } else {
            Ok(())
        }
    }
}

/// `ξ = (1 − |η|²) / (1 + |η|²)`.
pub fn xi_param(eta: Complex64) -> f64 {
    Xi::from_abs2(eta.norm_sqr()).value()
}

/// Builds `Σ_n exp(ln|a_n|) e^{iφ_n} w_n |n⟩` with the log-magnitudes shifted
/// by their maximum so nothing overflows, then normalizes.
fn assemble(
    space: SpinSpace,
    eta: Complex64,
    weight: impl Fn(usize) -> Complex64,
) -> Result<SpinState> {
    let ln_binom = ln_binomials(space.twice_j());
    let ln_eta = eta.norm().ln();
    let arg = eta.arg();
    let weights: Vec<Complex64> = (0..space.dimension()).map(weight).collect();
    let ln_mag: Vec<f64> = ln_binom
        .iter()
        .enumerate()
        .map(|(n, lb)| 0.5 * lb + n as f64 * ln_eta)
        .collect();
    let shift = ln_mag
        .iter()
        .zip(&weights)
        .filter(|(_, w)| w.norm() > 0.0)
        .map(|(l, _)| *l)
        .fold(f64::NEG_INFINITY, f64::max);
    let amplitudes = ln_mag
        .iter()
        .zip(&weights)
        .enumerate()
        .map(|(n, (l, w))| {
            if w.norm() == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::from_polar((l - shift).exp(), n as f64 * arg) * w
            }
        })
        .collect();
    SpinState::from_amplitudes(space, amplitudes)
}

/// Spin coherent state `|η⟩ ∝ Σ_n C(2j, n)^{1/2} ηⁿ |n⟩`.
pub fn scs(space: SpinSpace, eta: Complex64) -> SpinState {
    if eta.norm() == 0.0 {
        return number_state(space, 0).expect("|0> always exists");
    }
    assemble(space, eta, |_| Complex64::new(1.0, 0.0)).expect("coherent state has nonzero norm")
}

/// `(|η⟩ + e^{iθ}|−η⟩) / √(2 + 2 cos θ ξ^{2j})`.
pub fn sscs(space: SpinSpace, params: &SscsParams) -> Result<SpinState> {
    if space.twice_j() != params.twice_j {
        return Err(SpinError::SpaceMismatch {
            left: space.twice_j(),
            right: params.twice_j,
        });
    }
    params.validate()?;
    let (c, s) = params.cos_sin();
    let parity_weight = |n: usize| {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        Complex64::new(1.0 + c * sign, s * sign)
    };
    if params.eta.norm() == 0.0 {
        // Only |0⟩ survives, carrying the phase of 1 + e^{iθ}.
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); space.dimension()];
        amplitudes[0] = parity_weight(0);
        return SpinState::from_amplitudes(space, amplitudes);
    }
    assemble(space, params.eta, parity_weight)
}

/// `⟨η|−η⟩ = ξ^{2j}`.
pub fn scs_overlap_minus(space: SpinSpace, eta: Complex64) -> f64 {
    Xi::from_abs2(eta.norm_sqr()).pow(space.twice_j())
}

/// `⟨η, θ|η, θ + π⟩ = −i sin θ ξ^{2j} / √(1 − cos²θ ξ^{4j})`.
pub fn sscs_cross_overlap(params: &SscsParams) -> Result<Complex64> {
    params.validate()?;
    params.shifted_by_pi().validate()?;
    let (c, s) = params.cos_sin();
    let xi = params.xi();
    let root = (xi.one_plus(c, params.twice_j) * xi.one_plus(-c, params.twice_j)).sqrt();
    Ok(Complex64::new(0.0, -s * xi.pow(params.twice_j) / root))
}

/// Evolution under `H = χN²` for time `t`: `c_n → c_n exp(−i χt n²)`.
pub fn one_axis_twist(state: &SpinState, chi_t: f64) -> SpinState {
    let amplitudes = state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(n, a)| {
            let n2 = (n * n) as f64;
            a * Complex64::from_polar(1.0, -chi_t * n2)
        })
        .collect();
    SpinState::from_normalized(state.space(), amplitudes)
}

/// `|⟨s1|s2⟩|`, insensitive to a global phase on either state.
pub fn global_phase_fidelity(s1: &SpinState, s2: &SpinState) -> Result<f64> {
    Ok(inner(s1, s2)?.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinspace::{apply, op_jminus, op_number, SpinOperator};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn space(twice_j: u32) -> SpinSpace {
        SpinSpace::new(twice_j).unwrap()
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn xi_param_examples() {
        assert_eq!(xi_param(re(0.0)), 1.0);
        assert!(xi_param(Complex64::from_polar(1.0, 0.7)).abs() < 1e-15);
        assert!((xi_param(re((1.0f64 / 3.0).sqrt())) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn scs_vacuum_and_spin_half() {
        for tj in 0..6 {
            assert_eq!(scs(space(tj), re(0.0)), number_state(space(tj), 0).unwrap());
        }
        let s = scs(space(1), re(1.0));
        let h = 0.5f64.sqrt();
        assert!((s.amplitude(0) - re(h)).norm() < 1e-15);
        assert!((s.amplitude(1) - re(h)).norm() < 1e-15);
    }

    #[test]
    fn scs_ladder_relation() {
        for tj in 1..=12 {
            let sp = space(tj);
            let two_j_minus_n =
                &SpinOperator::identity(sp).scale(re(f64::from(tj))) - &op_number(sp);
            for eta in [
                re(0.3),
                re(1.0),
                Complex64::from_polar(2.2, 0.9),
                Complex64::new(-0.4, 0.1),
            ] {
                let state = scs(sp, eta);
                let lhs = apply(&op_jminus(sp), &state).unwrap();
                let rhs = apply(&two_j_minus_n, &state).unwrap() * eta;
                assert!((lhs - rhs).norm() < 1e-12, "tj={tj} eta={eta}");
            }
        }
    }

    #[test]
    fn scs_real_eta_amplitudes_nonnegative() {
        let s = scs(space(9), re(1.7));
        assert!(s.amplitudes().iter().all(|a| a.im == 0.0 && a.re >= 0.0));
    }

    #[test]
    fn scs_survives_large_spin() {
        let s = scs(space(200), re(50.0));
        assert!(s
            .amplitudes()
            .iter()
            .all(|a| a.re.is_finite() && a.im.is_finite()));
        let norm: f64 = s.probabilities().iter().sum();
        assert!((norm - 1.0).abs() < 1e-10);
    }

    #[test]
    fn even_cat_spin_one() {
        let eta = 0.7;
        let s = sscs(space(2), &SscsParams::real(2, eta, 0.0)).unwrap();
        let norm = (1.0 + eta.powi(4)).sqrt();
        assert!((s.amplitude(0) - re(1.0 / norm)).norm() < 1e-15);
        assert_eq!(s.amplitude(1), re(0.0));
        assert!((s.amplitude(2) - re(eta * eta / norm)).norm() < 1e-15);
    }

    #[test]
    fn odd_cat_small_eta_is_number_state_one() {
        let sp = space(2);
        let s = sscs(sp, &SscsParams::real(2, 0.01, PI)).unwrap();
        let one = number_state(sp, 1).unwrap();
        assert!(global_phase_fidelity(&one, &s).unwrap().powi(2) > 0.999);
    }

    #[test]
    fn odd_cat_at_vacuum_is_degenerate() {
        let err = sscs(space(2), &SscsParams::real(2, 0.0, PI)).unwrap_err();
        assert!(matches!(err, SpinError::DegenerateSuperposition { .. }));
        assert!(err.to_string().contains("number_state(space, 1)"));
    }

    #[test]
    fn parity_support_is_exact() {
        for tj in 1..=15 {
            for eta in [re(0.2), re(1.0), Complex64::from_polar(3.0, 1.1)] {
                let even = sscs(space(tj), &SscsParams::new(tj, eta, 0.0)).unwrap();
                let odd = sscs(space(tj), &SscsParams::new(tj, eta, PI)).unwrap();
                for n in 0..=tj as usize {
                    if n % 2 == 1 {
                        assert_eq!(even.amplitude(n).norm(), 0.0);
                    } else {
                        assert_eq!(odd.amplitude(n).norm(), 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn overlap_minus_examples() {
        assert_eq!(scs_overlap_minus(space(4), re(0.0)), 1.0);
        assert_eq!(
            scs_overlap_minus(space(6), Complex64::from_polar(1.0, 0.4)),
            0.0
        );
        assert!((scs_overlap_minus(space(2), re((1.0f64 / 3.0).sqrt())) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn overlap_minus_matches_inner_product() {
        for tj in 0..=14 {
            let sp = space(tj);
            for eta in [
                re(0.1),
                re(0.9),
                re(1.0),
                Complex64::from_polar(1.3, 2.0),
                re(3.0),
            ] {
                let brute = inner(&scs(sp, eta), &scs(sp, -eta)).unwrap();
                assert!((brute - re(scs_overlap_minus(sp, eta))).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn cross_overlap_examples() {
        let zero = sscs_cross_overlap(&SscsParams::real(4, 0.6, 0.0)).unwrap();
        assert_eq!(zero.norm(), 0.0);
        let unit = sscs_cross_overlap(&SscsParams::new(
            6,
            Complex64::from_polar(1.0, 0.3),
            FRAC_PI_2,
        ))
        .unwrap();
        assert!(unit.norm() < 1e-15);
        let quarter =
            sscs_cross_overlap(&SscsParams::real(2, (1.0f64 / 3.0).sqrt(), FRAC_PI_2)).unwrap();
        assert!((quarter - Complex64::new(0.0, -0.25)).norm() < 1e-15);
    }

    #[test]
    fn cross_overlap_matches_inner_product() {
        for tj in 1..=10 {
            let sp = space(tj);
            for theta in [0.3, FRAC_PI_2, 2.0, PI * 0.75] {
                for eta in [re(0.4), Complex64::from_polar(1.5, 0.8)] {
                    let p = SscsParams::new(tj, eta, theta);
                    let a = sscs(sp, &p).unwrap();
                    let b = sscs(sp, &p.shifted_by_pi()).unwrap();
                    let brute = inner(&a, &b).unwrap();
                    assert!((brute - sscs_cross_overlap(&p).unwrap()).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn vacuum_cat_keeps_its_phase() {
        let sp = space(3);
        let p = SscsParams::real(3, 0.0, 1.0);
        let a = sscs(sp, &p).unwrap();
        let b = sscs(sp, &p.shifted_by_pi()).unwrap();
        let brute = inner(&a, &b).unwrap();
        assert!((brute - sscs_cross_overlap(&p).unwrap()).norm() < 1e-12);
        assert!((brute - Complex64::new(0.0, -1.0)).norm() < 1e-12);
    }

    #[test]
    fn cross_overlap_needs_both_states() {
        let p = SscsParams::real(3, 0.0, 0.0);
        assert!(matches!(
            sscs_cross_overlap(&p),
            Err(SpinError::DegenerateSuperposition { .. })
        ));
    }

    #[test]
    fn twist_identity_and_period() {
        let sp = space(8);
        let s = scs(sp, Complex64::from_polar(1.4, 0.5));
        assert_eq!(one_axis_twist(&s, 0.0).amplitudes(), s.amplitudes());
        let full = one_axis_twist(&s, 2.0 * PI);
        assert!((global_phase_fidelity(&s, &full).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn twist_generates_the_pi_half_cat() {
        for tj in 1..=10 {
            let sp = space(tj);
            let eta = re(0.8);
            let twisted = one_axis_twist(&scs(sp, eta), FRAC_PI_2);
            let cat = sscs(sp, &SscsParams::new(tj, eta, FRAC_PI_2)).unwrap();
            assert!((global_phase_fidelity(&twisted, &cat).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn fidelity_examples() {
        let sp = space(3);
        let s = scs(sp, re(0.5));
        assert!((global_phase_fidelity(&s, &s).unwrap() - 1.0).abs() < 1e-15);
        let a = number_state(sp, 0).unwrap();
        let b = number_state(sp, 2).unwrap();
        assert_eq!(global_phase_fidelity(&a, &b).unwrap(), 0.0);
        let rotated = SpinState::from_amplitudes(
            sp,
            s.amplitudes()
                .iter()
                .map(|z| z * Complex64::from_polar(1.0, 1.234))
                .collect(),
        )
        .unwrap();
        assert!((global_phase_fidelity(&s, &rotated).unwrap() - 1.0).abs() < 1e-12);
    }
}
