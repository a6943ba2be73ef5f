use super::*;
use crate::cli::syntax::{parse, pretty};

/// Published values the engine disagrees with.
const DISAGREEMENTS: &[(&str, &str)] = &[
    ("gl2-over-t", "translation a"),
    ("gl2-over-t", "translation b"),
    ("gl2-over-t", "translation c"),
    ("gl2-over-t", "translation d"),
    ("glq2-over-t", "translation a"),
    ("glq2-over-t", "translation b"),
    ("glq2-over-t", "translation c"),
    ("glq2-over-t", "translation d"),
    ("laurent", "exact"),
    ("oxg", "exact"),
    ("taft-subgroup", "coinvariant dimension"),
    ("taft-subgroup", "translation g"),
];

#[test]
fn every_entry_loads_and_is_confluent() {
    for e in entries() {
        let env = e.load().unwrap_or_else(|err| panic!("{err}"));
        for (n, p) in &env.algebras {
            assert!(p.check_local_confluence(4).is_empty(), "{} {n}", e.name);
        }
        let strongest = env.structures.values().map(|h| h.level()).max();
        assert_eq!(strongest, Some(e.level), "{}", e.name);
    }
}

#[test]
fn pretty_printing_round_trips() {
    for e in entries() {
        let once = pretty(&parse(e.source).unwrap());
        let twice = pretty(&parse(&once).unwrap_or_else(|err| panic!("{}: {err}", e.name)));
        assert_eq!(once, twice, "{}", e.name);
        load_str(&once, None).unwrap_or_else(|err| panic!("{}: {err}", e.name));
    }
}

#[test]
fn oracle_agrees_on_finite_entries() {
    let mut compared = 0;
    for e in entries() {
        let Ok(set) = oracle_for(e.name) else { continue };
        let env = e.load().unwrap();
        for v in set.compare(&env).unwrap() {
            assert!(v.pass, "{} {}: {:?} {:?}", e.name, v.name, v.witness, v.detail);
            compared += 1;
        }
    }
    assert!(compared > 40);
}

#[test]
fn every_entry_has_expectations() {
    for e in entries() {
        assert!(!expectations(e.name).is_empty(), "{}", e.name);
    }
    assert!(expectations("nope").len() <= 1);
    assert_eq!(run_expected("nope"), Err(CorpusError::Unknown("nope".into())));
}

#[test]
fn expectations_match_except_known_disagreements() {
    for e in entries() {
        for o in run_expected(e.name).unwrap() {
            let known = DISAGREEMENTS.contains(&(o.entry.as_str(), o.check.as_str()));
            assert!(!o.observed.starts_with("error"), "{} {}: {}", o.entry, o.check, o.observed);
            assert_eq!(o.matched, !known, "{} {}: want {} got {}", o.entry, o.check, o.expected, o.observed);
            if known {
                assert!(matches!(o.provenance, Provenance::Published(_)));
            }
        }
    }
}

#[test]
fn export_writes_every_entry() {
    let dir = tempfile::tempdir().unwrap();
    let files = export(dir.path()).unwrap();
    assert_eq!(files.len(), entries().len());
    let back = std::fs::read_to_string(dir.path().join("laurent.hgx")).unwrap();
    assert_eq!(back, entry("laurent").unwrap().source);
}

