//! Replays the checked-in fuzz corpus through the same properties the fuzz
//! targets assert, so the seeds stay meaningful on stable toolchains.

use std::path::PathBuf;

use xsquare::report::to_json;
use xsquare::{CompareReport, ConstructionData, HomotopyReport, Skeleton2, VerifyReport};
use xsquare_algebra::{format_poly, parse_poly, Field, MonomialOrder, PolyRing};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds in {}", dir.display());
    paths.iter().map(|p| std::fs::read_to_string(p).unwrap()).collect()
}

#[test]
fn parse_poly_seeds() {
    let ring = PolyRing::new(&["x", "y", "S1", "s0_S2"], Field::Prime(101)).unwrap();
    let mut parsed = 0;
    for s in seeds("parse_poly") {
        if let Ok(p) = parse_poly(&s, &ring) {
            assert_eq!(parse_poly(&format_poly(&p), &ring).unwrap(), p);
            parsed += 1;
        }
    }
    assert!(parsed > 0);
}

#[test]
fn construction_data_seeds() {
    let mut built = 0;
    for s in seeds("construction_data") {
        let d = ConstructionData::from_json(&s).unwrap();
        assert_eq!(ConstructionData::from_json(&d.to_json()).unwrap(), d);
        if Skeleton2::build(&d, MonomialOrder::DegRevLex, 2_000).is_ok() {
            built += 1;
        }
    }
    assert!(built > 0);
}

#[test]
fn report_json_seeds() {
    for s in seeds("report_json") {
        let ok = [
            serde_json::from_str::<VerifyReport>(&s).map(|v| to_json(&v)).ok(),
            serde_json::from_str::<HomotopyReport>(&s).map(|v| to_json(&v)).ok(),
            serde_json::from_str::<CompareReport>(&s).map(|v| to_json(&v)).ok(),
        ];
        assert!(ok.iter().flatten().any(|t| *t == s), "seed does not round-trip");
    }
}
