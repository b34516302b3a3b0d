// Drives the command-line front end in process, the same way the
// `spincat` binary does.

use spincat::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let commands: [&[&str]; 3] = [
        &[
            "spincat",
            "g2-sweep",
            "--twice-j",
            "6",
            "--theta",
            "0,pi",
            "--steps",
            "3",
        ],
        &["spincat", "critical-eta", "--twice-j", "5,19"],
        &[
            "spincat",
            "state-info",
            "--twice-j",
            "2",
            "--eta",
            "0",
            "--theta",
            "pi",
        ],
    ];
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(args.iter().copied(), &mut out, &mut err);
        println!("$ {} -> exit {code}", args.join(" "));
        print!("{}", String::from_utf8(out)?);
        print!("{}", String::from_utf8(err)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
