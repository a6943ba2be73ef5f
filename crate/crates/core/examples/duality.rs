// The pairing of O(Z_3) with F[Z_3] and the action it transposes.

use hgx::comodule::HopfAction;
use hgx::corpus;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let env = corpus::load("graded-z3")?;
    let p = env.pairing("PZ3").ok_or("no pairing")?;
    for v in p.check_duality(2) {
        println!("{:<28} {}", v.name, v.pass);
        assert!(v.pass);
    }
    println!("nondegenerate: {}", p.check_nondegenerate().pass);
    let c = env.coaction("grading").ok_or("no coaction")?;
    let act = HopfAction::transposed(c, p)?;
    assert!(act.check_hopf_action(3).iter().all(|v| v.pass));
    let inv = act.invariants(3);
    println!("invariants: {:?}", inv.iter().map(|x| c.pres().fmt_poly(x)).collect::<Vec<_>>());
    println!("coinvariants: dim {}", c.coinvariants(3).dim());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
