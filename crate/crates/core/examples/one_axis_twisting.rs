// Evolving a coherent state under χN² for χt = π/2 gives the θ = π/2 cat
// state up to a global phase.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use spincat::closedform;
use spincat::spinspace::SpinSpace;
use spincat::states::{global_phase_fidelity, one_axis_twist, scs, sscs, SscsParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let twice_j = 8;
    let space = SpinSpace::new(twice_j)?;
    let eta = Complex64::from_polar(1.3, PI / 5.0);
    let start = scs(space, eta);
    let target = sscs(space, &SscsParams::new(twice_j, eta, FRAC_PI_2))?;
    for k in 0..=4 {
        let chi_t = FRAC_PI_2 * f64::from(k) / 4.0;
        let fidelity = global_phase_fidelity(&one_axis_twist(&start, chi_t), &target)?;
        println!("chi t = {chi_t:.4}: fidelity with the cat {fidelity:.12}");
    }
    println!(
        "g2 of the cat: {:.6}",
        closedform::g2(&SscsParams::new(twice_j, eta, FRAC_PI_2))?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
