use svcurves::curvecat::{count_points, enumerate_points, PlaneCurveModel};
use svcurves::veritas::{claim_table, render_table, run_suite, Report, Suite, SuiteOptions, DESK_SUITES};
use svcurves::ExecMode;

fn report(suite: Suite, mode: ExecMode) -> Report {
    let results = run_suite(suite, &SuiteOptions { unsafe_cap: false, mode }).unwrap();
    Report::new(&suite.to_string(), results)
}

#[test]
fn every_desk_suite_passes() {
    for &suite in DESK_SUITES {
        let r = report(suite, ExecMode::Parallel);
        assert!(r.total > 0, "{suite} ran no claims");
        assert!(r.all_pass(), "{}", render_table(&r));
    }
}

#[test]
fn reports_independent_of_mode_and_run() {
    for suite in [Suite::Suzuki { s: 1 }, Suite::Hermitian { l: 3 }, Suite::Ovoid { s: 1 }] {
        let a = serde_json::to_string(&report(suite, ExecMode::Parallel)).unwrap();
        let b = serde_json::to_string(&report(suite, ExecMode::Sequential)).unwrap();
        let c = serde_json::to_string(&report(suite, ExecMode::Parallel)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}

#[test]
fn suzuki_suite_contents() {
    let r = report(Suite::Suzuki { s: 1 }, ExecMode::Parallel);
    let get = |id: &str| r.claims.iter().find(|c| c.id == id).unwrap_or_else(|| panic!("missing {id}"));
    assert_eq!(get("suzuki.count.n1").computed, 65);
    assert_eq!(get("suzuki.orders.eps").computed, serde_json::json!([0, 1, 2, 4, 8]));
    assert_eq!(get("suzuki.divisor.deg_r").computed["deg_r"], 455);
    assert_eq!(get("suzuki.divisor.deg_s").computed["deg_s"], 520);
    assert_eq!(get("suzuki.semigroup.genus").computed, 14);
    assert!(r.summary.ends_with(&format!("/{}", r.total)));
}

#[test]
fn registry_rows_apply_somewhere() {
    let mut ran = std::collections::BTreeSet::new();
    for &suite in DESK_SUITES {
        for c in run_suite(suite, &SuiteOptions::default()).unwrap() {
            ran.insert(c.id);
        }
    }
    for row in claim_table() {
        assert!(ran.contains(row.id), "{} never runs on the desk suites", row.id);
    }
}

#[test]
fn enumeration_is_deterministic() {
    for curve in [PlaneCurveModel::suzuki(1).unwrap(), PlaneCurveModel::hermitian(4).unwrap()] {
        for m in 1..=2 {
            let a = enumerate_points(&curve, m, ExecMode::Parallel).unwrap();
            let b = enumerate_points(&curve, m, ExecMode::Sequential).unwrap();
            assert_eq!(a.points, b.points);
            assert_eq!(a.count, count_points(&curve, m, ExecMode::Sequential).unwrap());
        }
    }
}
