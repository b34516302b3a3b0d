// Inverse squeezing parameters of even and odd cat states. Values above
// one mean squeezing; `0` marks a pole of ξ².

use std::f64::consts::PI;

use spincat::cli::{squeezing_rows, SweepConfig};
use spincat::closedform::j1_even_xi;
use spincat::squeezing::XiValue;

fn show(v: XiValue) -> String {
    match v.inverse() {
        Some(x) => format!("{x:.4}"),
        None => "degenerate".into(),
    }
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "j = 1 even cat at |eta| = 1: xi_y^2 = {}",
        j1_even_xi(1.0).1
    );
    for (theta, label) in [(0.0, "even"), (PI, "odd")] {
        for twice_j in [5, 10] {
            let mut config = SweepConfig::figure(twice_j, vec![theta]);
            config.eta_min = 0.2;
            config.eta_max = 3.0;
            config.steps = 8;
            println!("{label} cat, j = {}", f64::from(twice_j) / 2.0);
            for r in squeezing_rows(&config)? {
                println!(
                    "  |eta| {:.2}  1/xi_x^2 {:>10}  1/xi_y^2 {:>10}",
                    r.eta_abs,
                    show(r.xi_x2),
                    show(r.xi_y2)
                );
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
