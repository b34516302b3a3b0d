// Angular momentum matrices in the number basis and a few identities they
// satisfy.

use num_complex::Complex64;
use spincat::spinspace::{
    expectation, op_jminus, op_jplus, op_jx, op_jy, op_jz, variance, SpinOperator, SpinSpace,
};
use spincat::states::scs;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let space = SpinSpace::new(5)?;
    println!("j = {}, dimension {}", space.j(), space.dimension());

    let (jx, jy, jz) = (op_jx(space), op_jy(space), op_jz(space));
    let commutator = &(&jx * &jy) - &(&jy * &jx);
    let i_jz = jz.scale(Complex64::new(0.0, 1.0));
    println!(
        "max |[Jx, Jy] - i Jz| = {:.1e}",
        commutator.max_abs_diff(&i_jz)?
    );

    let casimir = &(&(&jx * &jx) + &(&jy * &jy)) + &(&jz * &jz);
    let j = space.j();
    let target = SpinOperator::identity(space).scale(Complex64::new(j * (j + 1.0), 0.0));
    println!(
        "max |J^2 - j(j+1)| = {:.1e}",
        casimir.max_abs_diff(&target)?
    );
    println!(
        "J+ is the adjoint of J-: {}",
        op_jplus(space).max_abs_diff(&op_jminus(space).adjoint())? == 0.0
    );

    let state = scs(space, Complex64::new(0.6, 0.2));
    println!("coherent state: <Jz> = {:.6}", expectation(&state, &jz)?.re);
    println!(
        "                var Jx = {:.6}, var Jy = {:.6}",
        variance(&state, &jx)?,
        variance(&state, &jy)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
