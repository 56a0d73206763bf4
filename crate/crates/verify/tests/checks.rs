use chevalley::{Root, SimpleType};
use chevalley_verify::{
    cmd_property_suite, cmd_setup_report, cmd_sl2_table, cmd_verify_g2, cmd_verify_minimal_orbits,
    Report, Status, VerifyError,
};
use serde_json::Value;

fn find<'a>(checks: &'a [chevalley_verify::CheckResult], id: &str) -> &'a Value {
    &checks.iter().find(|c| c.check_id == id).unwrap().details
}

#[test]
fn g2_dims() {
    let r = cmd_verify_g2();
    assert_eq!(r.status, Status::Pass);
    let d = &r.details["dims"];
    for (k, v) in [
        ("line_stab", 7),
        ("tangent", 8),
        ("tangent_stab", 7),
        ("orbit", 7),
        ("fiber", 0),
    ] {
        assert_eq!(d[k], v, "{k}");
    }
}

#[test]
fn minimal_orbits_small_types() {
    let checks = cmd_verify_minimal_orbits(2).unwrap();
    assert!(checks.iter().all(|c| c.status == Status::Pass));
    let a2 = find(&checks, "minimal-orbit.A2");
    assert_eq!(a2["dims"]["line_stab"], 5);
    assert_eq!(a2["dims"]["tangent_stab"], 5);
    assert_eq!(a2["dims"]["fiber"], 0);
    assert_eq!(find(&checks, "minimal-orbit.A1")["dims"]["fiber"], 0);
}

#[test]
fn rank_bounds_are_usage_errors() {
    assert!(matches!(
        cmd_verify_minimal_orbits(9),
        Err(VerifyError::MaxRank(9))
    ));
    assert!(matches!(cmd_sl2_table(0), Err(VerifyError::MaxRank(0))));
}

#[test]
fn sl2_table_witnesses() {
    let checks = cmd_sl2_table(3).unwrap();
    assert!(checks.iter().all(|c| c.status == Status::Pass));
    let g2 = find(&checks, "sl2.G2.[1,0]");
    assert_eq!(g2["classification"], "ConfirmedSL2");
    assert_eq!(g2["witness"]["beta"], "[0,1]");
    assert_eq!(g2["witness"]["pairing"], -3);
    let a2 = find(&checks, "sl2.A2.[1,0]");
    assert_eq!(a2["witness"]["pairing"], -1);
    assert_eq!(
        find(&checks, "sl2.B3.[0,0,1]")["classification"],
        "NoEvenModule"
    );
}

#[test]
fn property_suite_is_deterministic() {
    let a = Report::new(cmd_property_suite(0, 100));
    assert!(!a.any_failed());
    let b = Report::new(cmd_property_suite(0, 100));
    assert_eq!(a.to_json(), b.to_json());
    for c in &a.checks {
        assert_eq!(c.details["checked"], 12 * 100, "{}", c.check_id);
    }
}

#[test]
fn setup_report_rejects_non_simple_roots() {
    let a2: SimpleType = "A2".parse().unwrap();
    let r = cmd_setup_report(a2, &"[1,1]".parse::<Root>().unwrap());
    assert!(matches!(r, Err(VerifyError::NotSimple { .. })));
    let r = cmd_setup_report(a2, &"[1,0,0]".parse::<Root>().unwrap());
    assert!(r.is_err());
}

#[test]
fn setup_report_b2_short_root_witness() {
    let b2: SimpleType = "B2".parse().unwrap();
    let r = cmd_setup_report(b2, &"[0,1]".parse::<Root>().unwrap()).unwrap();
    assert_eq!(r.status, Status::ReportOnly);
    let gap = &r.details["centralizer_gap"][0];
    assert_eq!(gap["root"], "[1,1]");
    assert_eq!(gap["partner"], "[0,-1]");
    assert_eq!(gap["result"], "[1,0]");
    assert_ne!(gap["coefficient"], 0);
}

#[test]
fn roots_round_trip_through_json() {
    let r: Root = "[3,2]".parse().unwrap();
    let s = serde_json::to_string(&r).unwrap();
    assert_eq!(s, "\"[3,2]\"");
    assert_eq!(serde_json::from_str::<Root>(&s).unwrap(), r);
}
