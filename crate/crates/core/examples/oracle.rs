// Cross-checking the rewriting engine against dense structure constants.

use hgx::corpus;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["fs3", "os3", "taft-subgroup"] {
        let set = corpus::oracle_for(name)?;
        let env = corpus::load(name)?;
        let verdicts = set.compare(&env)?;
        let failed: Vec<_> = verdicts.iter().filter(|v| !v.pass).collect();
        println!("{name}: {} comparisons, {} disagreements", verdicts.len(), failed.len());
        assert!(failed.is_empty());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
