#[allow(dead_code)]
mod scalars {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scalars.rs"));
}

#[allow(dead_code)]
mod normal_forms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normal_forms.rs"));
}

#[allow(dead_code)]
mod hopf_axioms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hopf_axioms.rs"));
}

#[allow(dead_code)]
mod antipode_synthesis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/antipode_synthesis.rs"));
}

#[allow(dead_code)]
mod coinvariants {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/coinvariants.rs"));
}

#[allow(dead_code)]
mod galois_certificate {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/galois_certificate.rs"));
}

#[allow(dead_code)]
mod duality {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/duality.rs"));
}

#[allow(dead_code)]
mod koppinen {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/koppinen.rs"));
}

#[allow(dead_code)]
mod corpus_run {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/corpus_run.rs"));
}

#[allow(dead_code)]
mod oracle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/oracle.rs"));
}

#[allow(dead_code)]
mod cli_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_report.rs"));
}

#[test]
fn scalars_example_runs() {
    scalars::run_example().expect("scalars example");
}

#[test]
fn normal_forms_example_runs() {
    normal_forms::run_example().expect("normal_forms example");
}

#[test]
fn hopf_axioms_example_runs() {
    hopf_axioms::run_example().expect("hopf_axioms example");
}

#[test]
fn antipode_synthesis_example_runs() {
    antipode_synthesis::run_example().expect("antipode_synthesis example");
}

#[test]
fn coinvariants_example_runs() {
    coinvariants::run_example().expect("coinvariants example");
}

#[test]
fn galois_certificate_example_runs() {
    galois_certificate::run_example().expect("galois_certificate example");
}

#[test]
fn duality_example_runs() {
    duality::run_example().expect("duality example");
}

#[test]
fn koppinen_example_runs() {
    koppinen::run_example().expect("koppinen example");
}

#[test]
fn corpus_run_example_runs() {
    corpus_run::run_example().expect("corpus_run example");
}

#[test]
fn oracle_example_runs() {
    oracle::run_example().expect("oracle example");
}

#[test]
fn cli_report_example_runs() {
    cli_report::run_example().expect("cli_report example");
}
