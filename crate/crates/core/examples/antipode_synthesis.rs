// Recovering an antipode from the inverse of the canonical map.

use hgx::corpus;
use hgx::galois::{antipode_from_can, GaloisError};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let env = corpus::load("laurent")?;
    let h = env.structure("Laurent").ok_or("no Laurent")?;
    let s = antipode_from_can(h, 3, 3)?;
    for (w, v) in s.values.iter().filter(|(w, _)| w.len() == 1) {
        println!("S({}) = {}", h.fmt_word(w), h.fmt_poly(v));
    }
    assert!(s.verdict.pass);

    let env = corpus::load("fx")?;
    let fx = env.structure("FX").ok_or("no FX")?;
    match antipode_from_can(fx, 3, 2) {
        Err(GaloisError::NoAntipode(w)) => println!("F[X]: no antipode ({w})"),
        other => return Err(format!("unexpected: {:?}", other.map(|s| s.verdict)).into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
