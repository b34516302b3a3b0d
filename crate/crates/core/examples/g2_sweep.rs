// g² of cat states against |η| for θ = 0, π/2, π, at j = 3 and j = 5/2.
// At |η| = 1 the three curves meet.

use std::f64::consts::{FRAC_PI_2, PI};

use spincat::cli::{g2_rows, SweepConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for twice_j in [6, 5] {
        let mut config = SweepConfig::figure(twice_j, vec![0.0, FRAC_PI_2, PI]);
        config.eta_min = 0.25;
        config.eta_max = 2.5;
        config.steps = 10;
        let rows = g2_rows(&config)?;
        println!("j = {}", f64::from(twice_j) / 2.0);
        println!(
            "{:>6} {:>10} {:>10} {:>10}",
            "|eta|", "theta=0", "pi/2", "pi"
        );
        for (i, eta) in config.eta_grid().iter().enumerate() {
            let g = |curve: usize| rows[curve * config.steps + i].g2.unwrap_or(f64::NAN);
            println!("{eta:>6.3} {:>10.6} {:>10.6} {:>10.6}", g(0), g(1), g(2));
        }
        let mut at_one = config.clone();
        at_one.eta_min = 1.0;
        at_one.eta_max = 2.0;
        at_one.steps = 2;
        let cross: Vec<f64> = g2_rows(&at_one)?
            .iter()
            .step_by(2)
            .filter_map(|r| r.g2)
            .collect();
        println!("at |eta| = 1: {cross:?}\n");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
