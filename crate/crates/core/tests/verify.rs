use blockedit::code::enumerate_codewords;
use blockedit::decode::decode;
use blockedit::verify::{
    audit_necessary_conditions, bounds, bounds_report, check_block_decodable,
    check_code_validity, check_decoder_exhaustive, max_code_search, ReportKind,
    VerificationReport,
};
use blockedit::{BitString, CodeParams, CountVector};

fn code(v: &[&str]) -> Vec<BitString> {
    v.iter().map(|s| s.parse().unwrap()).collect()
}

fn codebook(p: &CodeParams) -> Vec<BitString> {
    enumerate_codewords(p).unwrap().collect()
}

#[test]
fn exhaustive_passes() {
    let p = CodeParams::deletion(1, 3, 6).unwrap();
    let r = check_decoder_exhaustive(&p, |y| decode(&p, y)).unwrap();
    assert!(r.passed);
    assert_eq!(r.get_int("codewords"), Some(8));
    assert_eq!(r.get_int("patterns_per_codeword"), Some(16));
    assert_eq!(r.get_int("pairs_checked"), Some(128));
    let p = CodeParams::deletion(2, 5, 10).unwrap();
    assert!(check_decoder_exhaustive(&p, |y| decode(&p, y)).unwrap().passed);
}

#[test]
fn broken_decoder_yields_witness() {
    let p = CodeParams::deletion(1, 3, 6).unwrap();
    // always claims no deletions in block 1
    let broken = |y: &BitString| -> blockedit::Result<CountVector> {
        let d2 = 6 - y.len();
        Ok(CountVector::from_deletions(&[0, d2]))
    };
    let r = check_decoder_exhaustive(&p, broken).unwrap();
    assert!(!r.passed);
    let w = r.counterexample.as_ref().unwrap();
    assert_eq!(w.expected, CountVector::from_deletions(&[1, 0]));
    assert_eq!(w.got, Some(CountVector::from_deletions(&[0, 1])));
    assert_eq!(w.pattern, "1=del@1");
    assert!(r.get_int("failures").unwrap() > 0);
}

#[test]
fn validity_checks() {
    let d136 = codebook(&CodeParams::deletion(1, 3, 6).unwrap());
    assert!(check_code_validity(&d136, 3, 1).unwrap().passed);
    assert!(check_code_validity(&d136[3..4], 3, 1).unwrap().passed);

    // block 1 ends in 1 and block 2 starts with 1
    let r = check_code_validity(&code(&["101101"]), 3, 1).unwrap();
    assert!(!r.passed);
    let w = r.counterexample.unwrap();
    assert_eq!(w.other_x.as_ref(), Some(&w.x));
    assert_ne!(Some(w.expected), w.got);
    let audit = audit_necessary_conditions(&code(&["101101"]), 3, 1, false).unwrap();
    assert_eq!(audit.get_int("violations_a"), Some(1));
    assert!(audit.findings[0].contains("block 1 bit 3"));
}

#[test]
fn block_decodability() {
    let d136 = codebook(&CodeParams::deletion(1, 3, 6).unwrap());
    assert!(check_block_decodable(&d136, 3, 1).unwrap().passed);
    assert!(check_block_decodable(&code(&["011000"]), 3, 1).unwrap().passed);

    // valid, but bit 2 of block 2 repeats the boundary run
    let c = code(&["001011"]);
    assert!(check_code_validity(&c, 3, 1).unwrap().passed);
    let r = check_block_decodable(&c, 3, 1).unwrap();
    assert!(!r.passed);
    assert!(r.findings[0].starts_with("block 1"));
}

#[test]
fn bound_values() {
    let b = bounds(1, 3, 9).unwrap();
    assert!((b.bound_thm2 - (6.0 - 3f64.log2())).abs() < 1e-12);
    assert_eq!(b.general_cap(), 24);
    let b = bounds(1, 3, 6).unwrap();
    assert_eq!((b.bound1, b.bound_thm3, b.construction_redundancy), (2.0, 3.0, 3));
    let b = bounds(2, 5, 20).unwrap();
    assert_eq!(b.bound_thm3, 15.0);
    assert_eq!(b.construction_redundancy, 15);
    let r = bounds_report(1, 3, 9).unwrap();
    assert_eq!(r.kind, ReportKind::BoundsTable);
    assert_eq!(r.get_int("cap_thm2"), Some(24));
}

#[test]
fn small_maximum_codes() {
    let r = max_code_search(3, 6, 1, true).unwrap();
    assert_eq!(r.get_int("code_size"), Some(8));
    let r = max_code_search(3, 6, 1, false).unwrap();
    let size = r.get_int("code_size").unwrap();
    assert!((8..=16).contains(&size));
    let witness = r.witness.unwrap();
    assert!(check_code_validity(&witness, 3, 1).unwrap().passed);
    assert!(audit_necessary_conditions(&witness, 3, 1, false).unwrap().passed);
}

#[test]
fn construction_satisfies_audit() {
    let d139 = codebook(&CodeParams::deletion(1, 3, 9).unwrap());
    let r = audit_necessary_conditions(&d139, 3, 1, true).unwrap();
    assert!(r.passed, "{:?}", r.findings);
    assert!(r.get_int("checks_d").unwrap() > 0);
}

#[test]
fn report_json_shape() {
    let p = CodeParams::deletion(1, 3, 6).unwrap();
    let r = check_decoder_exhaustive(&p, |y| decode(&p, y)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["kind"], "decoder_exhaustive");
    assert_eq!(v["passed"], true);
    assert_eq!(v["params"]["family"], "deletion_detect");
    assert_eq!(v["metrics"]["pairs_checked"], 128);
    let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back.kind, r.kind);
}
