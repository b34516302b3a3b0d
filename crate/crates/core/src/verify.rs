//! Closed form versus matrix oracle over a parameter grid.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

use nalgebra::DVector;
use num_complex::Complex64;
use serde::Serialize;

use crate::closedform;
use crate::error::{Result, SpinError};
use crate::oracle;
use crate::spinspace::{apply, op_jminus, op_number, SpinOperator, SpinSpace, SpinState};
use crate::squeezing::{xi_from_moments, xi_squared_oracle, UnitVector, XiValue};
use crate::states::{scs, sscs, SscsParams};

/// `λ` values at which the generating function is compared.
pub const LAMBDAS: [f64; 5] = [0.0, 0.5, 1.0, 1.5, 2.0];

/// Relative tolerance of the default preset.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Relative tolerance of the `large` preset, whose grid hugs `|η| = 1`.
pub const LARGE_TOLERANCE: f64 = 1e-6;

/// The absolute floor is the relative tolerance divided by this.
pub const ABSOLUTE_DIVISOR: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridPreset {
    Small,
    Default,
    Large,
}

impl GridPreset {
    pub fn grid(&self) -> VerificationGrid {
        let thetas = vec![0.0, FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4, PI];
        match self {
            GridPreset::Small => VerificationGrid {
                twice_j: (1..=4).collect(),
                eta_abs: vec![0.5, 1.0, 2.0],
                theta: vec![0.0, FRAC_PI_2, PI],
                eta_arg: vec![0.0],
            },
            GridPreset::Default => VerificationGrid {
                twice_j: (1..=12).collect(),
                eta_abs: vec![0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 3.0],
                theta: thetas,
                eta_arg: vec![0.0, FRAC_PI_3],
            },
            GridPreset::Large => VerificationGrid {
                twice_j: (1..=12).chain([16, 20, 25, 30, 40, 50, 60]).collect(),
                eta_abs: vec![0.1, 0.5, 0.9, 0.99, 1.0, 1.01, 1.1, 2.0, 3.0],
                theta: thetas,
                eta_arg: vec![0.0, FRAC_PI_3],
            },
        }
    }

    pub fn default_tolerance(&self) -> f64 {
        match self {
            GridPreset::Large => LARGE_TOLERANCE,
            _ => DEFAULT_TOLERANCE,
        }
    }
}

/// Cartesian product of parameter lists.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationGrid {
    pub twice_j: Vec<u32>,
    pub eta_abs: Vec<f64>,
    pub theta: Vec<f64>,
    pub eta_arg: Vec<f64>,
}

impl VerificationGrid {
    pub fn points(&self) -> Vec<SscsParams> {
        let mut out = Vec::new();
        for &tj in &self.twice_j {
            for &r in &self.eta_abs {
                for &theta in &self.theta {
                    for &arg in &self.eta_arg {
                        out.push(SscsParams::new(tj, Complex64::from_polar(r, arg), theta));
                    }
                }
            }
        }
        out
    }
}

/// Worst-case disagreement for one quantity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Deviation {
    pub quantity: String,
    pub samples: usize,
    pub max_abs: f64,
    pub max_rel: f64,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub tolerance: f64,
    pub abs_tolerance: f64,
    pub points: usize,
    pub skipped: usize,
    pub quantities: Vec<Deviation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.quantities.iter().all(|q| q.failures == 0)
    }

    pub fn get(&self, quantity: &str) -> Option<&Deviation> {
        self.quantities.iter().find(|q| q.quantity == quantity)
    }
}

struct Tally {
    tolerance: f64,
    abs_tolerance: f64,
    quantities: Vec<Deviation>,
}

impl Tally {
    fn new(tolerance: f64) -> Self {
        Self {
            tolerance,
            abs_tolerance: tolerance / ABSOLUTE_DIVISOR,
            quantities: Vec::new(),
        }
    }

    fn slot(&mut self, quantity: &str) -> &mut Deviation {
        let index = match self.quantities.iter().position(|q| q.quantity == quantity) {
            Some(i) => i,
            None => {
                self.quantities.push(Deviation {
                    quantity: quantity.to_string(),
                    samples: 0,
                    max_abs: 0.0,
                    max_rel: 0.0,
                    failures: 0,
                });
                self.quantities.len() - 1
            }
        };
        &mut self.quantities[index]
    }

    fn compare(&mut self, quantity: &str, closed: Complex64, exact: Complex64) {
        let (tol, abs_tol) = (self.tolerance, self.abs_tolerance);
        let abs = (closed - exact).norm();
        let scale = exact.norm();
        let rel = if scale > abs_tol { abs / scale } else { 0.0 };
        let slot = self.slot(quantity);
        slot.samples += 1;
        slot.max_abs = slot.max_abs.max(abs);
        slot.max_rel = slot.max_rel.max(rel);
        let ok = abs.is_finite() && (abs <= abs_tol || abs <= tol * scale);
        if !ok {
            slot.failures += 1;
        }
    }

    fn compare_real(&mut self, quantity: &str, closed: f64, exact: f64) {
        self.compare(
            quantity,
            Complex64::new(closed, 0.0),
            Complex64::new(exact, 0.0),
        );
    }

    fn mismatch(&mut self, quantity: &str) {
        let slot = self.slot(quantity);
        slot.samples += 1;
        slot.failures += 1;
    }

    fn compare_xi(&mut self, quantity: &str, closed: XiValue, exact: XiValue) {
        match (closed, exact) {
            (XiValue::Finite(a), XiValue::Finite(b)) => self.compare_real(quantity, a, b),
            (XiValue::Finite(_), _) | (_, XiValue::Finite(_)) => self.mismatch(quantity),
            _ => {
                self.slot(quantity);
            }
        }
    }
}

/// Compares every closed form against the oracle at one grid point. Returns
/// `false` when the point is a degenerate superposition and was skipped.
fn check_point(tally: &mut Tally, params: &SscsParams) -> Result<bool> {
    let space = params.space()?;
    let state = match sscs(space, params) {
        Ok(s) => s,
        Err(SpinError::DegenerateSuperposition { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };

    for lambda in LAMBDAS {
        tally.compare_real(
            &format!("G(lambda={lambda})"),
            closedform::generating_function(params, lambda)?,
            oracle::generating_function(&state, lambda),
        );
    }
    let factorial = closedform::factorial_moments(params)?;
    for (k, value) in factorial.iter().enumerate() {
        tally.compare_real(
            &format!("F({})", k + 1),
            *value,
            oracle::factorial_moment(&state, k as u32 + 1),
        );
    }
    let closed_moments = closedform::cartesian_moments(params)?;
    let exact_moments = oracle::moment_set(&state)?;
    let closed_n = [
        closed_moments.n1,
        closed_moments.n2,
        closed_moments.n3,
        closed_moments.n4,
    ];
    let exact_n = [
        exact_moments.n1,
        exact_moments.n2,
        exact_moments.n3,
        exact_moments.n4,
    ];
    for k in 0..4 {
        tally.compare_real(&format!("<N^{}>", k + 1), closed_n[k], exact_n[k]);
    }

    match (closedform::g2(params), oracle::g2(&state)) {
        (Ok(a), Ok(b)) => tally.compare_real("g2", a, b),
        (
            Err(SpinError::UndefinedCorrelation { .. }),
            Err(SpinError::UndefinedCorrelation { .. }),
        ) => {
            tally.slot("g2");
        }
        (Ok(_), Err(SpinError::UndefinedCorrelation { .. }))
        | (Err(SpinError::UndefinedCorrelation { .. }), Ok(_)) => tally.mismatch("g2"),
        (Err(e), _) | (_, Err(e)) => return Err(e),
    }

    tally.compare("<J->", closed_moments.jminus, exact_moments.jminus);
    tally.compare("<J-^2>", closed_moments.jminus2, exact_moments.jminus2);
    for (name, a, b) in [
        ("<Jx>", closed_moments.jx, exact_moments.jx),
        ("<Jy>", closed_moments.jy, exact_moments.jy),
        ("<Jz>", closed_moments.jz, exact_moments.jz),
        ("<Jx^2>", closed_moments.jx2, exact_moments.jx2),
        ("<Jy^2>", closed_moments.jy2, exact_moments.jy2),
        ("<Jz^2>", closed_moments.jz2, exact_moments.jz2),
    ] {
        tally.compare_real(name, a, b);
    }

    let closed_xi = xi_from_moments(params.twice_j, &closed_moments);
    let exact_x = xi_squared_oracle(&state, &UnitVector::X)?.xi2;
    let exact_y = xi_squared_oracle(&state, &UnitVector::Y)?.xi2;
    tally.compare_xi("xi_x^2", closed_xi[0], exact_x);
    tally.compare_xi("xi_y^2", closed_xi[1], exact_y);

    let partner = params.shifted_by_pi();
    if let Ok(other) = sscs(space, &partner) {
        tally.compare(
            "cross_overlap",
            closedform::gtilde(params, 1.0)?,
            crate::spinspace::inner(&state, &other)?,
        );
        tally.compare(
            "cross_N",
            closedform::gtilde_derivative(params)?,
            oracle::cross_number(&state, &other)?,
        );
    }
    Ok(true)
}

/// Runs every comparison on the grid with relative tolerance `tolerance` and
/// absolute floor `tolerance / ABSOLUTE_DIVISOR`.
pub fn run_verification(grid: &VerificationGrid, tolerance: f64) -> Result<VerificationReport> {
    let mut tally = Tally::new(tolerance);
    let points = grid.points();
    let mut skipped = 0;
    for params in &points {
        if !check_point(&mut tally, params)? {
            skipped += 1;
        }
    }
    Ok(VerificationReport {
        tolerance,
        abs_tolerance: tally.abs_tolerance,
        points: points.len(),
        skipped,
        quantities: tally.quantities,
    })
}

/// Vector residuals of the three ladder relations at one point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LadderResiduals {
    /// `‖J₋|η⟩ − η(2j − N)|η⟩‖`
    pub coherent: f64,
    /// `‖J₋|η,θ⟩ − η√((1 − cξ^{2j})/(1 + cξ^{2j}))(2j − N)|η,θ+π⟩‖`, absent
    /// when the partner state does not exist.
    pub cross: Option<f64>,
    /// `‖J₋²|η,θ⟩ − η²(2j − N)(2j − N − 1)|η,θ⟩‖`
    pub squared: f64,
}

impl LadderResiduals {
    pub fn max(&self) -> f64 {
        self.coherent
            .max(self.cross.unwrap_or(0.0))
            .max(self.squared)
    }
}

fn holes(space: SpinSpace, shift: f64) -> SpinOperator {
    let id = SpinOperator::identity(space)
        .scale(Complex64::new(f64::from(space.twice_j()) - shift, 0.0));
    &id - &op_number(space)
}

fn residual(a: DVector<Complex64>, b: DVector<Complex64>) -> f64 {
    (a - b).norm()
}

pub fn ladder_residuals(params: &SscsParams) -> Result<LadderResiduals> {
    let space = params.space()?;
    let lower = op_jminus(space);
    let eta = params.eta;
    let h0 = holes(space, 0.0);
    let h1 = holes(space, 1.0);

    let coherent_state = scs(space, eta);
    let coherent = residual(
        apply(&lower, &coherent_state)?,
        apply(&h0, &coherent_state)? * eta,
    );

    let state: SpinState = sscs(space, params)?;
    let cross = match sscs(space, &params.shifted_by_pi()) {
        Ok(partner) => {
            let (c, _) = params.cos_sin();
            let xi = params.xi();
            let factor = (xi.one_plus(-c, params.twice_j) / xi.one_plus(c, params.twice_j)).sqrt();
            Some(residual(
                apply(&lower, &state)?,
                apply(&h0, &partner)? * (eta * factor),
            ))
        }
        Err(SpinError::DegenerateSuperposition { .. }) => None,
        Err(e) => return Err(e),
    };

    let lowered_twice = apply(&(&lower * &lower), &state)?;
    let squared = residual(lowered_twice, apply(&(&h0 * &h1), &state)? * (eta * eta));

    Ok(LadderResiduals {
        coherent,
        cross,
        squared,
    })
}
