use num_complex::Complex64;
use proptest::prelude::*;
use spincat::closedform;
use spincat::oracle;
use spincat::spinspace::SpinSpace;
use spincat::squeezing::{
    complete_triad, xi_squared_oracle, xi_squared_with_frame, UnitVector, XiValue,
};
use spincat::states::{sscs, SscsParams};
use std::f64::consts::PI;

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

prop_compose! {
    fn cat()(twice_j in 1u32..=16, r in 0.05f64..3.0, arg in -PI..PI, theta in 0.0f64..(2.0 * PI)) -> SscsParams {
        SscsParams::new(twice_j, Complex64::from_polar(r, arg), theta)
    }
}

prop_compose! {
    fn direction()(x in -1.0f64..1.0, y in -1.0f64..1.0, z in -1.0f64..1.0) -> Option<UnitVector> {
        UnitVector::new(x, y, z).filter(|_| x * x + y * y + z * z > 1e-3)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn squeezing_ignores_the_transverse_frame(
        params in cat(),
        n1 in direction(),
        angles in prop::collection::vec(0.0f64..(2.0 * PI), 20),
    ) {
        let Some(n1) = n1 else { return Ok(()) };
        let Ok(state) = sscs(params.space().unwrap(), &params) else { return Ok(()) };
        let reference = xi_squared_oracle(&state, &n1).unwrap();
        let (n2, n3) = complete_triad(&n1);
        for phi in angles {
            let (c, s) = (phi.cos(), phi.sin());
            let m2 = UnitVector::new(c * n2.x + s * n3.x, c * n2.y + s * n3.y, c * n2.z + s * n3.z).unwrap();
            let m3 = UnitVector::new(-s * n2.x + c * n3.x, -s * n2.y + c * n3.y, -s * n2.z + c * n3.z).unwrap();
            let rotated = xi_squared_with_frame(&state, &n1, &m2, &m3).unwrap();
            match (reference.xi2, rotated.xi2) {
                (XiValue::Finite(a), XiValue::Finite(b)) => prop_assert!(close(a, b, 1e-8), "{a} vs {b}"),
                (a, b) if a.is_finite() || b.is_finite() => {
                    prop_assert!(reference.degenerate || rotated.degenerate || a.finite().or(b.finite()).unwrap() > 1e10);
                }
                _ => {}
            }
        }
    }

    #[test]
    fn casimir_holds_for_closed_moments(params in cat()) {
        if let Ok(m) = closedform::cartesian_moments(&params) {
            let j = params.j();
            prop_assert!(close(m.jx2 + m.jy2 + m.jz2, j * (j + 1.0), 1e-10));
        }
    }

    #[test]
    fn g2_is_blind_to_the_phase_of_eta(params in cat(), phase in -PI..PI) {
        let rotated = SscsParams::new(params.twice_j, params.eta * Complex64::from_polar(1.0, phase), params.theta);
        match (closedform::g2(&params), closedform::g2(&rotated)) {
            (Ok(a), Ok(b)) => prop_assert!(close(a, b, 1e-10), "{a} vs {b}"),
            (a, b) => prop_assert_eq!(a.is_ok(), b.is_ok()),
        }
    }

    #[test]
    fn even_and_odd_cats_have_definite_parity(twice_j in 1u32..=30, r in 0.05f64..4.0, arg in -PI..PI) {
        let space = SpinSpace::new(twice_j).unwrap();
        let eta = Complex64::from_polar(r, arg);
        for (theta, dead) in [(0.0, 1usize), (PI, 0usize)] {
            let state = sscs(space, &SscsParams::new(twice_j, eta, theta)).unwrap();
            for n in (dead..state.amplitudes().len()).step_by(2) {
                prop_assert_eq!(state.amplitude(n), Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn closed_forms_agree_with_the_oracle(params in cat()) {
        let Ok(state) = sscs(params.space().unwrap(), &params) else { return Ok(()) };
        let closed = closedform::cartesian_moments(&params).unwrap();
        let exact = oracle::moment_set(&state).unwrap();
        let scale = f64::from(params.twice_j).powi(4);
        for (a, b) in [
            (closed.n1, exact.n1), (closed.n2, exact.n2), (closed.n3, exact.n3), (closed.n4, exact.n4),
            (closed.jx, exact.jx), (closed.jy, exact.jy), (closed.jz, exact.jz),
            (closed.jx2, exact.jx2), (closed.jy2, exact.jy2), (closed.jz2, exact.jz2),
        ] {
            prop_assert!((a - b).abs() <= 1e-12 * scale, "{a} vs {b}");
        }
        prop_assert!((closed.jminus2 - exact.jminus2).norm() <= 1e-12 * scale);
        if let (Ok(a), Ok(b)) = (closedform::g2(&params), oracle::g2(&state)) {
            prop_assert!(close(a, b, 1e-9), "{a} vs {b}");
        }
    }

    #[test]
    fn generating_function_is_normalized(params in cat()) {
        if let Ok(g) = closedform::generating_function(&params, 1.0) {
            prop_assert!((g - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn angle_syntax_matches_radians(k in -8i32..=8, m in 1u32..=12) {
        let text = format!("{k}pi/{m}");
        let value = spincat::cli::parse_angle(&text).unwrap();
        prop_assert!((value - f64::from(k) * PI / f64::from(m)).abs() <= 1e-15 * value.abs().max(1.0));
    }
}
