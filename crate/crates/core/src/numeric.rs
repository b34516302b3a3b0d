//! Scalar helpers shared by the state constructors and the closed forms.

use std::f64::consts::{FRAC_PI_2, TAU};

/// Angles closer than this to a multiple of π/2 are treated as exact.
const ANGLE_SNAP: f64 = 1e-12;

/// `(cos θ, sin θ)` with exact `0` and `±1` at multiples of π/2, so that
/// `θ = π` cancels the even amplitudes of a cat state bit-for-bit.
pub fn exact_cos_sin(theta: f64) -> (f64, f64) {
    let reduced = theta.rem_euclid(TAU);
    let quarter = (reduced / FRAC_PI_2).round();
    if (reduced - quarter * FRAC_PI_2).abs() < ANGLE_SNAP {
        match quarter as i64 % 4 {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        }
    } else {
        (theta.cos(), theta.sin())
    }
}

/// `ξ = (1 − x) / (1 + x)` for `x = |η|²`, kept as sign and log-magnitude so
/// that `ξ^m` and `1 − ξ^m` stay accurate for large `m` and small `x`.
#[derive(Clone, Copy, Debug)]
pub struct Xi {
    value: f64,
    negative: bool,
    ln_abs: f64,
}

impl Xi {
    pub fn from_abs2(abs2: f64) -> Self {
        let value = (1.0 - abs2) / (1.0 + abs2);
        let ln_abs = if abs2 < 1.0 {
            (-abs2).ln_1p() - abs2.ln_1p()
        } else if abs2 > 1.0 {
            let inv = abs2.recip();
            (-inv).ln_1p() - inv.ln_1p()
        } else {
            f64::NEG_INFINITY
        };
        Self {
            value,
            negative: abs2 > 1.0,
            ln_abs,
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    fn sign_pow(&self, m: u32) -> f64 {
        if self.negative && m % 2 == 1 {
            -1.0
        } else {
            1.0
        }
    }

    /// `ξ^m`, with `ξ^0 = 1` even at `ξ = 0`.
    pub fn pow(&self, m: u32) -> f64 {
        if m == 0 {
            return 1.0;
        }
        self.sign_pow(m) * (f64::from(m) * self.ln_abs).exp()
    }

    /// `1 + c ξ^m` without the cancellation of the naive sum when `c ξ^m ≈ −1`.
    pub fn one_plus(&self, c: f64, m: u32) -> f64 {
        if m == 0 {
            return 1.0 + c;
        }
        let cs = c * self.sign_pow(m);
        (1.0 + cs) + cs * (f64::from(m) * self.ln_abs).exp_m1()
    }
}

/// `ln C(n, k)` for `k = 0..=n`, accumulated from the multiplicative recurrence.
pub fn ln_binomials(n: u32) -> Vec<f64> {
    let nf = f64::from(n);
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = 0.0;
    out.push(acc);
    for k in 1..=n {
        let kf = f64::from(k);
        acc += (nf - kf + 1.0).ln() - kf.ln();
        out.push(acc);
    }
    out
}

/// `n! / (n − k)!` as a float, zero when `k > n`.
pub fn falling_factorial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).map(|i| f64::from(n - i)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn snapped_angles() {
        assert_eq!(exact_cos_sin(0.0), (1.0, 0.0));
        assert_eq!(exact_cos_sin(PI), (-1.0, 0.0));
        assert_eq!(exact_cos_sin(PI / 2.0), (0.0, 1.0));
        assert_eq!(exact_cos_sin(-PI / 2.0), (0.0, -1.0));
        assert_eq!(exact_cos_sin(2.0 * PI), (1.0, 0.0));
        assert_eq!(exact_cos_sin(3.0 * PI), (-1.0, 0.0));
        let (c, s) = exact_cos_sin(PI / 4.0);
        assert!((c - 0.5f64.sqrt()).abs() < 1e-15 && (s - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn xi_powers_match_naive() {
        for &x in &[
            0.0,
            1e-6,
            0.01,
            0.25,
            1.0 / 3.0,
            0.81,
            1.0,
            1.21,
            4.0,
            9.0,
            1e6,
        ] {
            let xi = Xi::from_abs2(x);
            let naive = (1.0 - x) / (1.0 + x);
            assert!((xi.value() - naive).abs() < 1e-15);
            for m in 0..12u32 {
                let expected = naive.powi(m as i32);
                assert!((xi.pow(m) - expected).abs() < 1e-13, "x={x} m={m}");
                for &c in &[1.0, -1.0, 0.3] {
                    assert!((xi.one_plus(c, m) - (1.0 + c * expected)).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn one_minus_xi_pow_is_accurate_for_small_eta() {
        // 1 − ξ^2 = 4x/(1+x)², so the relative error must stay tiny at x = 1e-12.
        let x = 1e-12;
        let exact = 4.0 * x / ((1.0 + x) * (1.0 + x));
        let got = Xi::from_abs2(x).one_plus(-1.0, 2);
        assert!(((got - exact) / exact).abs() < 1e-9);
    }

    #[test]
    fn binomials() {
        let ln = ln_binomials(10);
        assert!((ln[5].exp() - 252.0).abs() < 1e-10);
        assert_eq!(ln[0], 0.0);
        assert!((ln[10].exp() - 1.0).abs() < 1e-13);
        assert_eq!(falling_factorial(5, 2), 20.0);
        assert_eq!(falling_factorial(1, 2), 0.0);
        assert_eq!(falling_factorial(4, 0), 1.0);
    }
}
