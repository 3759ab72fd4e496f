//! Runs every named verification suite over the standing corpus and
//! requires a clean pass from each.

use minext_core::classify::{run_suite, SUITES};
use minext_core::Caps;

fn check(suite_id: &str) {
    let report = run_suite(suite_id, &Caps::default()).expect("suite should run");
    println!("{}", report.summary_line());
    for f in &report.failures {
        println!("  FAIL [{}] {}: {}", f.instance, f.assertion, f.witness);
    }
    assert!(report.passed(), "suite {suite_id} failed");
    assert_eq!(report.passes, report.instances);
}

#[test]
fn suite_ids_are_exhaustive() {
    assert_eq!(SUITES.len(), 25);
    assert!(matches!(
        run_suite("no-such-suite", &Caps::default()),
        Err(minext_core::Error::UnknownSuite(_))
    ));
}

macro_rules! suite_test {
    ($name:ident, $id:expr) => {
        #[test]
        fn $name() {
            check($id);
        }
    };
}

suite_test!(minimalann, "minimalann");
suite_test!(produce, "produce");
suite_test!(posers, "posers");
suite_test!(suffiso, "suffiso");
suite_test!(idealcancel, "idealcancel");
suite_test!(idealdescription, "idealdescription");
suite_test!(semiprimeoversemiprime, "semiprimeoversemiprime");
suite_test!(primeidealext, "primeidealext");
suite_test!(annideals, "annideals");
suite_test!(thethreetypes, "thethreetypes");
suite_test!(subdirectprime, "subdirectprime");
suite_test!(centralstuff, "centralstuff");
suite_test!(brauer, "brauer");
suite_test!(primecenter, "primecenter");
suite_test!(maincentral, "maincentral");
suite_test!(centralchar, "centralchar");
suite_test!(semiprimeovercentral, "semiprimeovercentral");
suite_test!(partialreduction, "partialreduction");
suite_test!(primeext, "primeext");
suite_test!(simplechar, "simplechar");
suite_test!(succinctcentral, "succinctcentral");
suite_test!(no_finite_t2, "no-finite-T2");
suite_test!(order4_census, "order4-census");
suite_test!(finiteindex_witness, "finiteindex-witness");
suite_test!(bergman_levels, "bergman-levels");
