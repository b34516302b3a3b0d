// Odd cat states with half-integer j become squeezed beyond a critical
// |η|, which grows with j.

use std::f64::consts::PI;

use spincat::squeezing::{find_critical_eta, xi_xyz_closedform};
use spincat::states::SscsParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for twice_j in [3, 5, 9, 19, 49] {
        let eta_c = find_critical_eta(twice_j)?;
        let after = xi_xyz_closedform(&SscsParams::real(twice_j, eta_c * 1.01, PI))?[1];
        println!(
            "j = {:>4}: |eta_c| = {eta_c:.9}, xi_y^2 just past it = {after}",
            f64::from(twice_j) / 2.0
        );
    }
    match find_critical_eta(10) {
        Err(e) => println!("integer j: {e}"),
        Ok(v) => println!("integer j unexpectedly crossed at {v}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
