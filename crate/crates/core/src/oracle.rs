//! Brute-force counterparts of the closed forms, computed from amplitudes and
//! operator matrices only.

use num_complex::Complex64;

use crate::closedform::MomentSet;
use crate::error::{Result, SpinError};
use crate::numeric::falling_factorial;
use crate::spinspace::{
    expectation, op_jminus, op_jplus, op_jx, op_jy, op_jz, op_number, SpinOperator, SpinState,
};

/// `Σ_n λⁿ |c_n|²`.
pub fn generating_function(state: &SpinState, lambda: f64) -> f64 {
    state
        .probabilities()
        .iter()
        .enumerate()
        .map(|(n, p)| lambda.powi(n as i32) * p)
        .sum()
}

/// `Σ_n n!/(n−k)! |c_n|²`.
pub fn factorial_moment(state: &SpinState, k: u32) -> f64 {
    state
        .probabilities()
        .iter()
        .enumerate()
        .map(|(n, p)| falling_factorial(n as u32, k) * p)
        .sum()
}

/// `⟨N^k⟩` for `k = 1..=4` from powers of the number-operator matrix.
pub fn n_moments(state: &SpinState) -> Result<[f64; 4]> {
    let number = op_number(state.space());
    let mut out = [0.0; 4];
    let mut power = number.clone();
    for slot in out.iter_mut() {
        *slot = expectation(state, &power)?.re;
        power = &power * &number;
    }
    Ok(out)
}

/// `⟨J₊²J₋²⟩ / ⟨J₊J₋⟩²` from operator products.
pub fn g2(state: &SpinState) -> Result<f64> {
    let space = state.space();
    let minus = op_jminus(space);
    let plus = op_jplus(space);
    let pair = &plus * &minus;
    let quad = &(&plus * &plus) * &(&minus * &minus);
    let denominator = expectation(state, &pair)?.re;
    if denominator.abs() < crate::closedform::CORRELATION_THRESHOLD {
        return Err(SpinError::UndefinedCorrelation { denominator });
    }
    Ok(expectation(state, &quad)?.re / (denominator * denominator))
}

/// `⟨a|N|b⟩`.
pub fn cross_number(a: &SpinState, b: &SpinState) -> Result<Complex64> {
    let image = crate::spinspace::apply(&op_number(a.space()), b)?;
    Ok(a.amplitudes()
        .iter()
        .zip(image.iter())
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Every entry of [`MomentSet`] straight from matrix expectations, including
/// the Cartesian ones (no use of the ladder relations between them).
pub fn moment_set(state: &SpinState) -> Result<MomentSet> {
    let space = state.space();
    let minus = op_jminus(space);
    let (jx, jy, jz) = (op_jx(space), op_jy(space), op_jz(space));
    let [n1, n2, n3, n4] = n_moments(state)?;
    let re = |op: &SpinOperator| -> Result<f64> { Ok(expectation(state, op)?.re) };
    Ok(MomentSet {
        n1,
        n2,
        n3,
        n4,
        jminus: expectation(state, &minus)?,
        jminus2: expectation(state, &(&minus * &minus))?,
        jx: re(&jx)?,
        jy: re(&jy)?,
        jz: re(&jz)?,
        jx2: re(&(&jx * &jx))?,
        jy2: re(&(&jy * &jy))?,
        jz2: re(&(&jz * &jz))?,
    })
}
