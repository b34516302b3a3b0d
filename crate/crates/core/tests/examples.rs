macro_rules! example {
    ($module:ident, $test:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(operators, operators_runs, "operators.rs");
example!(number_states, number_states_runs, "number_states.rs");
example!(g2_sweep, g2_sweep_runs, "g2_sweep.rs");
example!(squeezing, squeezing_runs, "squeezing.rs");
example!(critical_eta, critical_eta_runs, "critical_eta.rs");
example!(
    one_axis_twisting,
    one_axis_twisting_runs,
    "one_axis_twisting.rs"
);
example!(verify_grid, verify_grid_runs, "verify_grid.rs");
example!(command_line, command_line_runs, "command_line.rs");
