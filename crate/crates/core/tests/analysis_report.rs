mod common;

use common::backends;
use lihull::analysis::{analyze, hull_output, ideals_output, run_check, Format, Outcome};
use lihull::config::Bounds;
use lihull::semigroup::Semigroup;

#[test]
fn check_suite_passes_everywhere() {
    let bounds = Bounds::default();
    for sg in backends() {
        let report = run_check(&sg, &bounds);
        assert!(report.passed(), "{}", report.render(Format::Text));
        let skipped: Vec<_> = report.results.iter().filter(|(_, o)| matches!(o, Outcome::Skip(_))).map(|(n, _)| *n).collect();
        let expected: &[&str] = match sg.name().as_str() {
            "FreeMonoid(2)" | "AxPlusBOverZ" => &["group", "folner"],
            "<2,3>" | "<4,6,9>" => &["hull.normal_form"],
            "FiniteTable(6)" => &["folner"],
            _ => &[],
        };
        assert_eq!(skipped, expected, "{}", sg.name());
    }
}

#[test]
fn every_verdict_has_proof_or_witness() {
    let bounds = Bounds::default();
    for sg in backends() {
        let r = analyze(&sg, &bounds).unwrap();
        for key in ["left_reversible", "clifford", "independence"] {
            let tagged = r.entries().iter().any(|(k, _)| k.starts_with(&format!("{key}.")));
            assert!(tagged, "{}: {key} has no proof or witness", sg.name());
        }
    }
}

#[test]
fn machine_format_is_key_value() {
    let sg = Semigroup::numerical(&[2, 3]).unwrap();
    let r = analyze(&sg, &Bounds::default()).unwrap();
    let text = r.render(Format::Machine);
    assert!(text.lines().all(|l| l.split_once('=').is_some_and(|(k, _)| !k.contains(' '))));
    assert_eq!(r.get("clifford"), Some("fails"));
    assert_eq!(r.get("group"), Some("Z"));
}

#[test]
fn outputs_are_sorted_and_oracle_checked() {
    let sg = Semigroup::positive_cone(2);
    let bounds = Bounds::default();
    let family = sg.constructible_closure(bounds.depth);
    let lines: Vec<String> = family.iter().map(|x| x.to_string()).collect();
    assert_eq!(ideals_output(&sg, &bounds, Format::Text), lines.join("\n") + "\n");
    let hull = hull_output(&sg, &bounds, Format::Text, true).unwrap();
    assert!(hull.ends_with("points agree\n"), "{hull}");
}
