// Coinvariants of the plane under the linear SL(2) coaction.

use hgx::corpus;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (entry, name) in [("plane-sl2", "linear"), ("quantum-plane", "linear"), ("tensor-extension", "right")] {
        let env = corpus::load(entry)?;
        let c = env.coaction(name).ok_or("no coaction")?;
        assert!(c.check_coaction(3).iter().all(|v| v.pass));
        let b = c.coinvariants(3);
        let shown: Vec<String> = b.basis.iter().map(|x| c.pres().fmt_poly(x)).collect();
        println!("{entry}: coinvariants up to degree 3 = span{{{}}}", shown.join(", "));
    }
    let env = corpus::load("plane-sl2")?;
    let c = env.coaction("linear").ok_or("no coaction")?;
    println!("delta(X1*X2) = {}", c.fmt_tensor(&c.delta(&c.pres().mono("X1*X2"))));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
