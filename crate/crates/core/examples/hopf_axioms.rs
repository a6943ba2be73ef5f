// Axiom checks and antipode powers for Sweedler's algebra and H'_4.

use hgx::corpus;
use hgx::presentation::NcPoly;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let env = corpus::load("taft-h4prime")?;
    let h = env.structure("Taft").ok_or("no Taft")?;
    for v in h.check_level(4, h.level()) {
        println!("{:<12} {}", v.name, if v.pass { "pass" } else { "FAIL" });
        assert!(v.pass);
    }
    let b = h.mono("b");
    for n in 0..=4 {
        println!("S^{n}(b) = {}", h.fmt_poly(&h.antipode_power(n, &b)?));
    }
    let basis = h.full_basis().ok_or("infinite")?;
    let order4 = basis.iter().all(|w| {
        let x = NcPoly::word(w.clone());
        h.antipode_power(4, &x).map(|y| y == x).unwrap_or(false)
    });
    println!("S^4 = id on all {} basis words: {order4}", basis.len());
    assert!(order4);
    println!("grouplikes: {:?}", h.find_grouplikes(3).iter().map(|g| h.fmt_word(g)).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
