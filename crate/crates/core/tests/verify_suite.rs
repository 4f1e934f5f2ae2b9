use qcoh::rings::{grassmannian2, projective_space, Provenance, RingTable};
use qcoh::verify::{
    bqh_obstruction_suite, coadjoint_radical_check, corest_suite, radical_structure_check,
    registry, run_suite, semisimple_targets_check, Status, Suite, Tables,
};

fn bundled() -> Tables {
    Tables::bundled().expect("bundled tables")
}

#[test]
fn paper_suite_passes_with_bundled_tables() {
    let report = run_suite(Suite::Paper, &bundled());
    for r in &report.results {
        assert_eq!(
            r.status,
            Status::Pass,
            "{}: {} {:?}",
            r.id,
            r.detail,
            r.witness
        );
        assert!(!r.anchor.is_empty(), "{} has no anchor", r.id);
    }
    assert!(report.ok());
    assert!(report.results.len() > 50);
}

#[test]
fn report_is_deterministic() {
    let t = bundled();
    let a = run_suite(Suite::Paper, &t).to_text();
    let b = run_suite(Suite::Paper, &t).to_text();
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().take(5).collect();
    assert_eq!(lines[0], "report paper");
    assert!(lines[1].starts_with("checks "));
    assert_eq!(lines[3], "fail 0");
    assert_eq!(lines[4], "skipped 0");
    let ids: Vec<&str> = a.lines().filter_map(|l| l.strip_prefix("check ")).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn missing_tables_skip_only_table_checks() {
    let report = run_suite(Suite::Paper, &Tables::default());
    assert!(report.ok());
    let skipped: Vec<&str> = report
        .results
        .iter()
        .filter(|r| matches!(r.status, Status::Skipped(_)))
        .map(|r| r.id.as_str())
        .collect();
    assert_eq!(
        skipped,
        [
            "bqh.f4p4",
            "bqh.ig26",
            "bqh.ig28",
            "coadjoint.radical.f4p4",
            "coadjoint.radical.ig26",
            "coadjoint.radical.ig28",
            "semisimple.f4p4",
            "semisimple.ig26",
            "semisimple.ig28",
        ]
    );
    for r in &report.results {
        if let Status::Skipped(why) = &r.status {
            assert!(why.contains("external"), "{why}");
        }
    }
}

#[test]
fn registry_ids_are_unique() {
    let mut ids: Vec<&str> = registry().iter().map(|r| r.id).collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n);
}

#[test]
fn semisimple_ring_in_place_of_ig26_fails() {
    let fake = RingTable::new(
        projective_space(11).unwrap().with_name("IG(2,6)"),
        Provenance::External,
    );
    let tables = Tables {
        ig26: Some(fake),
        ..bundled()
    };
    let failed = |rs: Vec<qcoh::CheckResult>, id: &str| {
        let r = rs.into_iter().find(|r| r.id == id).unwrap();
        assert_eq!(r.status, Status::Fail, "{id}: {}", r.detail);
        assert!(r.witness.is_some());
    };
    failed(coadjoint_radical_check(&tables), "coadjoint.radical.ig26");
    failed(semisimple_targets_check(&tables), "semisimple.ig26");
    failed(bqh_obstruction_suite(&tables), "bqh.ig26");
}

#[test]
fn swapped_tables_fail() {
    let t = bundled();
    let tables = Tables {
        ig26: t.f4p4.clone(),
        f4p4: t.ig26.clone(),
        ig28: t.ig28.clone(),
    };
    let rs = coadjoint_radical_check(&tables);
    assert!(rs.iter().any(|r| r.status == Status::Fail));
}

#[test]
fn corestriction_squares_and_control() {
    let rs = corest_suite();
    assert!(rs.iter().all(|r| r.passed()), "{rs:?}");
    assert!(rs.iter().any(|r| r.id == "corest.negative-control"));
    assert!(rs.iter().any(|r| r.id == "corest.Gr(2,8).IG(2,8)"));
}

#[test]
fn radical_matches_kernel_outside_degree_zero() {
    for name in ["ig26", "ig28", "f4p4"] {
        let a = RingTable::bundled(name)
            .unwrap()
            .unwrap()
            .ring
            .specialize()
            .unwrap();
        assert!(radical_structure_check(&a).passed(), "{name}");
    }
    // Gr(2,6) is semisimple while E_h has a kernel outside degree 0.
    let gr = grassmannian2(6).unwrap().specialize().unwrap();
    assert!(gr.radical().unwrap().is_semisimple);
    assert!(radical_structure_check(&gr).failed());
}

#[test]
fn suite_names_parse() {
    assert_eq!("paper".parse::<Suite>().unwrap(), Suite::Paper);
    assert_eq!("props".parse::<Suite>().unwrap(), Suite::Props);
    assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
    assert!("fast".parse::<Suite>().is_err());
}
