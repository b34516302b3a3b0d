use std::f64::consts::PI;
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use crate::closedform;
use crate::error::{Result, SpinError};
use crate::numeric::exact_cos_sin;
use crate::squeezing::{xi_xyz_closedform, XiValue};
use crate::states::SscsParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EtaScale {
    Linear,
    Log,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Parameters shared by the figure sweeps.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub twice_j: u32,
    pub theta_list: Vec<f64>,
    pub eta_min: f64,
    pub eta_max: f64,
    pub steps: usize,
    pub eta_scale: EtaScale,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

impl SweepConfig {
    /// Figure defaults: `|η| ∈ [0.05, 3]`, 120 linear points, CSV.
    pub fn figure(twice_j: u32, theta_list: Vec<f64>) -> Self {
        Self {
            twice_j,
            theta_list,
            eta_min: 0.05,
            eta_max: 3.0,
            steps: 120,
            eta_scale: EtaScale::Linear,
            output_format: OutputFormat::Csv,
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(SpinError::Precondition(msg));
        crate::spinspace::SpinSpace::new(self.twice_j)?;
        if self.theta_list.is_empty() {
            return fail("at least one theta is required".into());
        }
        if let Some(t) = self.theta_list.iter().find(|t| !t.is_finite()) {
            return fail(format!("theta must be finite, got {t}"));
        }
        if self.steps < 2 {
            return fail(format!("steps must be at least 2, got {}", self.steps));
        }
        if !(self.eta_min.is_finite() && self.eta_max.is_finite()) {
            return fail("eta bounds must be finite".into());
        }
        if self.eta_min < 0.0 {
            return fail(format!(
                "eta-min must be non-negative, got {}",
                self.eta_min
            ));
        }
        if self.eta_min >= self.eta_max {
            return fail(format!(
                "eta-min ({}) must be below eta-max ({})",
                self.eta_min, self.eta_max
            ));
        }
        if self.eta_scale == EtaScale::Log && self.eta_min <= 0.0 {
            return fail("a log scale needs eta-min > 0".into());
        }
        let odd_cat = self.theta_list.iter().any(|&t| exact_cos_sin(t).0 == -1.0);
        if odd_cat && self.eta_min <= 0.0 {
            return fail(
                "eta-min must be positive when theta = pi (the state vanishes at eta = 0)".into(),
            );
        }
        Ok(())
    }

    /// Validation plus the squeezing-sweep restriction `θ ∈ {0, π}`.
    pub fn validate_real_cat(&self) -> Result<()> {
        self.validate()?;
        if let Some(t) = self.theta_list.iter().find(|&&t| exact_cos_sin(t).1 != 0.0) {
            return Err(SpinError::Precondition(format!(
                "squeezing sweeps accept theta in {{0, pi}} only, got {t}"
            )));
        }
        Ok(())
    }

    /// Sample points in `|η|`, with both ends hit exactly.
    pub fn eta_grid(&self) -> Vec<f64> {
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == 0 {
                    return self.eta_min;
                }
                if i == last {
                    return self.eta_max;
                }
                let t = i as f64 / last as f64;
                match self.eta_scale {
                    EtaScale::Linear => self.eta_min + t * (self.eta_max - self.eta_min),
                    EtaScale::Log => {
                        (self.eta_min.ln() + t * (self.eta_max / self.eta_min).ln()).exp()
                    }
                }
            })
            .collect()
    }

    fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let etas = self.eta_grid();
        self.theta_list
            .iter()
            .flat_map(move |&theta| etas.clone().into_iter().map(move |eta| (eta, theta)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct G2Row {
    pub eta_abs: f64,
    pub theta: f64,
    pub twice_j: u32,
    /// `None` where the state or its correlation is undefined.
    pub g2: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SqueezingRow {
    pub eta_abs: f64,
    pub theta: f64,
    pub twice_j: u32,
    pub xi_x2: XiValue,
    pub xi_y2: XiValue,
}

/// One row per `(θ, |η|)`, θ outermost.
pub fn g2_rows(config: &SweepConfig) -> Result<Vec<G2Row>> {
    config.validate()?;
    config
        .points()
        .map(|(eta_abs, theta)| {
            let g2 = match closedform::g2(&SscsParams::real(config.twice_j, eta_abs, theta)) {
                Ok(v) => Some(v),
                Err(
                    SpinError::UndefinedCorrelation { .. }
                    | SpinError::DegenerateSuperposition { .. },
                ) => None,
                Err(e) => return Err(e),
            };
            Ok(G2Row {
                eta_abs,
                theta,
                twice_j: config.twice_j,
                g2,
            })
        })
        .collect()
}

pub fn squeezing_rows(config: &SweepConfig) -> Result<Vec<SqueezingRow>> {
    config.validate_real_cat()?;
    config
        .points()
        .map(|(eta_abs, theta)| {
            let [xi_x2, xi_y2, _] =
                match xi_xyz_closedform(&SscsParams::real(config.twice_j, eta_abs, theta)) {
                    Ok(v) => v,
                    Err(SpinError::DegenerateSuperposition { .. }) => [XiValue::Degenerate; 3],
                    Err(e) => return Err(e),
                };
            Ok(SqueezingRow {
                eta_abs,
                theta,
                twice_j: config.twice_j,
                xi_x2,
                xi_y2,
            })
        })
        .collect()
}

/// Parses an angle: raw radians, or a multiple of π such as `pi`, `pi/2`,
/// `3pi/4`, `-pi/3`, `0.5pi`.
pub fn parse_angle(text: &str) -> std::result::Result<f64, String> {
    let s = text.trim();
    let Some(pos) = s.find("pi") else {
        return s
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("not an angle: {text:?}"));
    };
    let bad = || format!("not an angle: {text:?}");
    let (head, tail) = (&s[..pos], &s[pos + 2..]);
    let factor = match head.trim_end_matches('*') {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| bad())?,
    };
    let divisor = match tail {
        "" => 1.0,
        t => {
            let d = t
                .strip_prefix('/')
                .ok_or_else(bad)?
                .parse::<f64>()
                .map_err(|_| bad())?;
            if d == 0.0 {
                return Err(bad());
            }
            d
        }
    };
    let value = factor * PI / divisor;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// Parses `η` as `r` or `r@phi`, `phi` in [`parse_angle`] syntax.
pub fn parse_eta(text: &str) -> std::result::Result<num_complex::Complex64, String> {
    let (r, phi) = match text.split_once('@') {
        Some((r, phi)) => (r, parse_angle(phi)?),
        None => (text, 0.0),
    };
    let r: f64 = r
        .trim()
        .parse()
        .map_err(|_| format!("not a modulus: {r:?}"))?;
    if !r.is_finite() || r < 0.0 {
        return Err(format!("modulus must be finite and non-negative, got {r}"));
    }
    Ok(if phi == 0.0 {
        num_complex::Complex64::new(r, 0.0)
    } else {
        num_complex::Complex64::from_polar(r, phi)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn angles() {
        assert_eq!(parse_angle("0"), Ok(0.0));
        assert_eq!(parse_angle("pi"), Ok(PI));
        assert_eq!(parse_angle("pi/2"), Ok(FRAC_PI_2));
        assert_eq!(parse_angle("3pi/4"), Ok(3.0 * PI / 4.0));
        assert_eq!(parse_angle("-pi/2"), Ok(-FRAC_PI_2));
        assert_eq!(parse_angle("1.25"), Ok(1.25));
        assert!(parse_angle("pi/0").is_err());
        assert!(parse_angle("tau").is_err());
        assert!(parse_angle("pix").is_err());
    }

    #[test]
    fn etas() {
        assert_eq!(
            parse_eta("2").unwrap(),
            num_complex::Complex64::new(2.0, 0.0)
        );
        let z = parse_eta("1@pi/3").unwrap();
        assert!((z.arg() - PI / 3.0).abs() < 1e-15);
        assert!(parse_eta("-1").is_err());
        assert!(parse_eta("1@x").is_err());
    }

    #[test]
    fn grid_ends_are_exact() {
        let mut c = SweepConfig::figure(4, vec![0.0]);
        assert_eq!(c.eta_grid().len(), 120);
        assert_eq!(*c.eta_grid().last().unwrap(), 3.0);
        c.eta_scale = EtaScale::Log;
        let g = c.eta_grid();
        assert_eq!((g[0], g[119]), (0.05, 3.0));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn config_rules() {
        let mut c = SweepConfig::figure(4, vec![PI]);
        assert!(c.validate().is_ok());
        c.eta_min = 0.0;
        assert!(c.validate().is_err());
        c = SweepConfig::figure(4, vec![0.0]);
        c.steps = 1;
        assert!(c.validate().is_err());
        c = SweepConfig::figure(4, vec![FRAC_PI_2]);
        assert!(c.validate().is_ok());
        assert!(c.validate_real_cat().is_err());
    }
}
