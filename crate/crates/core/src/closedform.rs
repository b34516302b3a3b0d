//! Closed-form moments of the superposed spin coherent state `|η, θ⟩`.
//!
//! Every ratio of the form `(1 ± |η|²)^a / (1 + |η|²)^b` is rewritten in terms
//! of `ξ^m` and `|η|² / (1 + |η|²)`, both bounded by one, so nothing overflows
//! at large `2j` and the apparent pole at `|η| = 1` never appears. With
//! `x = |η|²` and `c = cos θ`, the factorial moments read
//!
//! ```text
//! F(k) = (2j)!/(2j−k)! · (x/(1+x))^k · (1 + (−1)^k c ξ^{2j−k}) / (1 + c ξ^{2j})
//! ```

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, SpinError};
use crate::numeric::falling_factorial;
use crate::states::SscsParams;

/// Below this, `⟨N(2j − N + 1)⟩` is treated as zero and `g²` is undefined.
pub const CORRELATION_THRESHOLD: f64 = 1e-14;

/// Lower triangle mapping `(F(1), …, F(4))` to `(⟨N⟩, …, ⟨N⁴⟩)`.
pub const MOMENT_CONVERSION: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0],
    [1.0, 3.0, 1.0, 0.0],
    [1.0, 7.0, 6.0, 1.0],
];

/// First- through fourth-order moments of `N`, the ladder expectations, and
/// the Cartesian first and second moments.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MomentSet {
    pub n1: f64,
    pub n2: f64,
    pub n3: f64,
    pub n4: f64,
    pub jminus: Complex64,
    pub jminus2: Complex64,
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
    pub jx2: f64,
    pub jy2: f64,
    pub jz2: f64,
}

impl MomentSet {
    /// Assembles the Cartesian moments from `⟨N⟩`, `⟨N²⟩`, `⟨J₋⟩`, `⟨J₋²⟩`;
    /// `⟨J₊⟩` and `⟨J₊²⟩` are the conjugates.
    pub fn from_ladder(twice_j: u32, n: [f64; 4], jminus: Complex64, jminus2: Complex64) -> Self {
        let j = f64::from(twice_j) / 2.0;
        let two_j = f64::from(twice_j);
        let [n1, n2, n3, n4] = n;
        let diagonal = two_j * (2.0 * n1 + 1.0) - 2.0 * n2;
        let ladder2 = 2.0 * jminus2.re;
        Self {
            n1,
            n2,
            n3,
            n4,
            jminus,
            jminus2,
            jx: jminus.re,
            jy: -jminus.im,
            jz: n1 - j,
            jx2: 0.25 * (diagonal + ladder2),
            jy2: 0.25 * (diagonal - ladder2),
            jz2: n2 - two_j * n1 + j * j,
        }
    }

    pub fn mean_spin(&self) -> [f64; 3] {
        [self.jx, self.jy, self.jz]
    }

    pub fn second_moments(&self) -> [f64; 3] {
        [self.jx2, self.jy2, self.jz2]
    }
}

fn abs2_ratio(params: &SscsParams) -> f64 {
    let x = params.eta_abs2();
    x / (1.0 + x)
}

/// `1 + cos θ ξ^{2j}`, i.e. half the squared norm of the unnormalized superposition.
fn norm_factor(params: &SscsParams) -> Result<f64> {
    params.validate()?;
    let (c, _) = params.cos_sin();
    Ok(params.xi().one_plus(c, params.twice_j))
}

/// `G(λ) = ⟨η,θ|λ^N|η,θ⟩`.
pub fn generating_function(params: &SscsParams, lambda: f64) -> Result<f64> {
    let denominator = norm_factor(params)?;
    let (c, _) = params.cos_sin();
    let x = params.eta_abs2();
    let power = params.twice_j as i32;
    let plus = ((1.0 + lambda * x) / (1.0 + x)).powi(power);
    let minus = ((1.0 - lambda * x) / (1.0 + x)).powi(power);
    Ok((plus + c * minus) / denominator)
}

/// `F(k) = ⟨N(N−1)⋯(N−k+1)⟩` for `k` in `1..=4`; zero when `k > 2j`.
pub fn factorial_moment(params: &SscsParams, k: u32) -> Result<f64> {
    if !(1..=4).contains(&k) {
        return Err(SpinError::Precondition(format!(
            "factorial moment order {k} outside 1..=4"
        )));
    }
    let denominator = norm_factor(params)?;
    if k > params.twice_j {
        return Ok(0.0);
    }
    let (c, _) = params.cos_sin();
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let numerator = params.xi().one_plus(sign * c, params.twice_j - k);
    Ok(
        falling_factorial(params.twice_j, k) * abs2_ratio(params).powi(k as i32) * numerator
            / denominator,
    )
}

pub fn factorial_moments(params: &SscsParams) -> Result<[f64; 4]> {
    Ok([
        factorial_moment(params, 1)?,
        factorial_moment(params, 2)?,
        factorial_moment(params, 3)?,
        factorial_moment(params, 4)?,
    ])
}

/// Applies [`MOMENT_CONVERSION`].
pub fn power_moments_from_factorial(f: [f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (row, coeffs) in MOMENT_CONVERSION.iter().enumerate() {
        out[row] = coeffs.iter().zip(&f).map(|(a, b)| a * b).sum();
    }
    out
}

/// `(⟨N⟩, ⟨N²⟩, ⟨N³⟩, ⟨N⁴⟩)`.
pub fn n_moments(params: &SscsParams) -> Result<[f64; 4]> {
    Ok(power_moments_from_factorial(factorial_moments(params)?))
}

/// `g²` from power moments of `N`:
///
/// ```text
/// N(N−1)(2j−N+1)(2j−N+2) = N⁴ − (4j+4)N³ + (4j²+10j+5)N² − (2j+1)(2j+2)N
/// N(2j−N+1)              = (2j+1)N − N²
/// ```
pub fn g2_from_power_moments(twice_j: u32, n: [f64; 4]) -> Result<f64> {
    let j = f64::from(twice_j) / 2.0;
    let [n1, n2, n3, n4] = n;
    let numerator = n4 - (4.0 * j + 4.0) * n3 + (4.0 * j * j + 10.0 * j + 5.0) * n2
        - (2.0 * j + 1.0) * (2.0 * j + 2.0) * n1;
    let denominator = (2.0 * j + 1.0) * n1 - n2;
    ratio_g2(numerator, denominator)
}

/// `g²` from factorial moments:
/// numerator `F(4) − 2(2j−1)F(3) + 2j(2j−1)F(2)`, denominator `2jF(1) − F(2)`.
pub fn g2_from_factorial_moments(twice_j: u32, f: [f64; 4]) -> Result<f64> {
    let two_j = f64::from(twice_j);
    let [f1, f2, f3, f4] = f;
    let numerator = f4 - 2.0 * (two_j - 1.0) * f3 + two_j * (two_j - 1.0) * f2;
    let denominator = two_j * f1 - f2;
    ratio_g2(numerator, denominator)
}

fn ratio_g2(numerator: f64, denominator: f64) -> Result<f64> {
    if denominator.abs() < CORRELATION_THRESHOLD {
        return Err(SpinError::UndefinedCorrelation { denominator });
    }
    Ok(numerator / (denominator * denominator))
}

/// Normalized second-order correlation `⟨J₊²J₋²⟩ / ⟨J₊J₋⟩²`.
pub fn g2(params: &SscsParams) -> Result<f64> {
    g2_from_power_moments(params.twice_j, n_moments(params)?)
}

/// `g²` of the number state `|n⟩`: `(n−1)(2j−n+2) / (n(2j−n+1))`.
pub fn g2_number_state(twice_j: u32, n: u32) -> Result<f64> {
    if n > twice_j {
        return Err(SpinError::IndexOutOfRange {
            n: i64::from(n),
            twice_j,
        });
    }
    if n == 0 {
        return Err(SpinError::UndefinedCorrelation { denominator: 0.0 });
    }
    let (two_j, nf) = (f64::from(twice_j), f64::from(n));
    Ok((nf - 1.0) * (two_j - nf + 2.0) / (nf * (two_j - nf + 1.0)))
}

/// `√(1 − cos²θ ξ^{4j})`, the product of the norms of `|η,θ⟩` and `|η,θ+π⟩`
/// up to a factor 2.
fn cross_root(params: &SscsParams) -> Result<f64> {
    let (c, _) = params.cos_sin();
    let xi = params.xi();
    let product = xi.one_plus(c, params.twice_j) * xi.one_plus(-c, params.twice_j);
    if product <= 1e-28 {
        return Err(SpinError::DegenerateSuperposition {
            denominator: 2.0 * product.sqrt(),
        });
    }
    Ok(product.sqrt())
}

/// `G̃(λ) = ⟨η,θ|λ^N|η,θ+π⟩`.
pub fn gtilde(params: &SscsParams, lambda: f64) -> Result<Complex64> {
    let root = cross_root(params)?;
    let (_, s) = params.cos_sin();
    let x = params.eta_abs2();
    let base = ((1.0 - lambda * x) / (1.0 + x)).powi(params.twice_j as i32);
    Ok(Complex64::new(0.0, -s * base / root))
}

/// `dG̃/dλ` at `λ = 1`, i.e. `⟨η,θ|N|η,θ+π⟩`.
pub fn gtilde_derivative(params: &SscsParams) -> Result<Complex64> {
    let root = cross_root(params)?;
    if params.twice_j == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let (_, s) = params.cos_sin();
    let x = params.eta_abs2();
    let two_j = f64::from(params.twice_j);
    let value = s * two_j * x * params.xi().pow(params.twice_j - 1) / (1.0 + x) / root;
    Ok(Complex64::new(0.0, value))
}

/// `⟨J₋⟩ = −2iηj sin θ ξ^{2j−1} / ((1 + cos θ ξ^{2j})(1 + |η|²))`.
///
/// This is the textbook `ξ^{2j} / (1 − |η|²)` form with the common factor
/// cancelled, finite at `|η| = 1`.
pub fn jminus_expect(params: &SscsParams) -> Result<Complex64> {
    let denominator = norm_factor(params)?;
    if params.twice_j == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let (_, s) = params.cos_sin();
    let x = params.eta_abs2();
    let scale = f64::from(params.twice_j) * s * params.xi().pow(params.twice_j - 1)
        / (1.0 + x)
        / denominator;
    Ok(params.eta * Complex64::new(0.0, -scale))
}

/// `⟨J₋²⟩ = η² ⟨(2j−N)(2j−N−1)⟩`, evaluated as
/// `η² · 2j(2j−1)/(1+|η|²)² · (1 + cos θ ξ^{2j−2}) / (1 + cos θ ξ^{2j})`.
pub fn jminus2_expect(params: &SscsParams) -> Result<Complex64> {
    let denominator = norm_factor(params)?;
    if params.twice_j < 2 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let (c, _) = params.cos_sin();
    let x = params.eta_abs2();
    let two_j = f64::from(params.twice_j);
    let holes = two_j * (two_j - 1.0) / ((1.0 + x) * (1.0 + x))
        * params.xi().one_plus(c, params.twice_j - 2)
        / denominator;
    Ok(params.eta * params.eta * holes)
}

/// `⟨J₋²⟩ = η² {F(2) − 2(2j−1)[F(1) − j]}`, the factorial-moment form. Loses
/// relative accuracy for large `|η|`, where the bracket cancels.
pub fn jminus2_from_factorial_moments(params: &SscsParams) -> Result<Complex64> {
    let f1 = factorial_moment(params, 1)?;
    let f2 = factorial_moment(params, 2)?;
    let two_j = f64::from(params.twice_j);
    let bracket = f2 - 2.0 * (two_j - 1.0) * (f1 - params.j());
    Ok(params.eta * params.eta * bracket)
}

/// All nine entries of [`MomentSet`] from the closed forms.
pub fn cartesian_moments(params: &SscsParams) -> Result<MomentSet> {
    Ok(MomentSet::from_ladder(
        params.twice_j,
        n_moments(params)?,
        jminus_expect(params)?,
        jminus2_expect(params)?,
    ))
}

/// Squeezing parameters of the `j = 1` even cat state:
/// `ξx² = (1+|η|⁴)/(1−|η|²)²` (pole at `|η| = 1`) and `ξy² = (1+|η|⁴)/(1+|η|²)²`.
pub fn j1_even_xi(eta: f64) -> (Result<f64>, f64) {
    let x = eta * eta;
    let top = 1.0 + x * x;
    let xi_y2 = top / ((1.0 + x) * (1.0 + x));
    let xi_x2 = if x == 1.0 {
        Err(SpinError::Pole)
    } else {
        Ok(top / ((1.0 - x) * (1.0 - x)))
    };
    (xi_x2, xi_y2)
}
