// Driving the `hgx` command line in-process and reading its JSON report.

use hgx::corpus;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("hgx-example-{}", std::process::id()));
    corpus::export(&dir)?;
    let file = dir.join("taft-subgroup.hgx");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = hgx::cli::run(
        ["hgx", "certify-qpb", file.to_str().ok_or("path")?, "--report", "json"],
        &mut out,
        &mut err,
    );
    let report: serde_json::Value = serde_json::from_slice(&out)?;
    println!("exit {code}");
    for c in report["checks"].as_array().ok_or("checks")? {
        println!("{} {}", c["verdict"].as_str().unwrap_or("?"), c["name"].as_str().unwrap_or("?"));
    }
    std::fs::remove_dir_all(&dir)?;
    assert_eq!(code, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
