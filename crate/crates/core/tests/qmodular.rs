use hms_core::exact::Q;
use hms_core::qmodular::*;

#[test]
fn extracted_jm_matches_closed_form() {
    let log = log_dilog(30, 120, RootSign::Minus).unwrap();
    for m in 1..=30 {
        assert_eq!(log.x_coeff(m).unwrap(), &jm_closed(m, 120), "m={m}");
    }
    assert_eq!(jm(3, 40, JmMode::Extracted).unwrap(), jm(3, 40, JmMode::Closed).unwrap());
    assert!(jm(0, 10, JmMode::Closed).is_err());
}

#[test]
fn plus_root_flips_odd_signs() {
    let log = log_dilog(8, 40, RootSign::Plus).unwrap();
    for m in 1..=8 {
        let closed = jm_closed(m, 40);
        let expected = if m % 2 == 1 { -&closed } else { closed };
        assert_eq!(log.x_coeff(m).unwrap(), &expected, "m={m}");
    }
    assert_ne!(log.x_coeff(1).unwrap(), &jm_closed(1, 40));
}

#[test]
fn dilog_exp_log_roundtrip() {
    let f = quantum_dilog(6, 30, RootSign::Minus).unwrap();
    assert_eq!(f.log().unwrap().exp().unwrap(), f);
}

#[test]
fn generating_function_identity() {
    for k in [-3, -1, 1, 3, 5] {
        let lhs = gen_function(k, 200).unwrap();
        let rhs = double_sum(k, 200).unwrap();
        assert!((&lhs - &rhs).is_zero(), "k={k}");
    }
}

#[test]
fn quasimodular_identity() {
    let r = quasimodular_check(200).unwrap();
    assert!(r.holds());
    assert_eq!(r.control_breaks_at(), Some(2));
    assert_eq!(r.control.coeff(2), Some(Q::from_integer((-24).into())));
    assert!(quasimodular_check(3).is_err());
}

#[test]
fn twenty_four_sum_starts_at_plus_24() {
    let s = gen_function(-1, 10).unwrap().scale(&Q::from_integer(24.into()));
    assert_eq!(s.coeff(1), Some(Q::from_integer(24.into())));
    assert_eq!(eisenstein_e2(10).coeff(1), Some(Q::from_integer((-24).into())));
}
