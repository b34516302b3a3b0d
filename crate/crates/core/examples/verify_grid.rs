// Closed forms against the exact matrices over the small grid, plus the
// ladder relations at one point.

use num_complex::Complex64;
use spincat::states::SscsParams;
use spincat::verify::{ladder_residuals, run_verification, GridPreset, DEFAULT_TOLERANCE};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = run_verification(&GridPreset::Small.grid(), DEFAULT_TOLERANCE)?;
    println!("{} points, {} skipped", report.points, report.skipped);
    for q in &report.quantities {
        println!(
            "{:<16} max abs {:.2e}  max rel {:.2e}  failures {}",
            q.quantity, q.max_abs, q.max_rel, q.failures
        );
    }
    println!("passed: {}", report.passed());

    let residuals = ladder_residuals(&SscsParams::new(7, Complex64::from_polar(0.8, 1.1), 0.4))?;
    println!("ladder residuals: {residuals:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
