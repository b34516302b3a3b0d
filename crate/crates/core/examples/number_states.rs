// Second-order coherence of number states: antibunched below the equator,
// coherent at `n = j + 1`, bunched above.

use spincat::closedform::g2_number_state;
use spincat::oracle;
use spincat::spinspace::{number_state, SpinSpace};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let twice_j = 6;
    let space = SpinSpace::new(twice_j)?;
    println!("{:>3} {:>12} {:>12}", "n", "formula", "matrices");
    for n in 1..=twice_j {
        let formula = g2_number_state(twice_j, n)?;
        let exact = oracle::g2(&number_state(space, i64::from(n))?)?;
        let label = match formula.partial_cmp(&1.0) {
            Some(std::cmp::Ordering::Less) => "antibunched",
            Some(std::cmp::Ordering::Greater) => "bunched",
            _ => "coherent",
        };
        println!("{n:>3} {formula:>12.8} {exact:>12.8}  {label}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
