// Deglex rewriting in SL_q(2): normal forms and a confluence check.

use hgx::corpus;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let env = corpus::load("slq2")?;
    let p = env.presentation("SLq2").ok_or("no SLq2")?;
    let da = p.mono("d*a");
    println!("d*a = {}", p.fmt_poly(&da));
    let ba = p.mul(&p.mono("b"), &p.mono("a"));
    println!("b*a = {}", p.fmt_poly(&ba));
    let ambiguities = p.check_local_confluence(4);
    println!("unresolved overlaps up to length 4: {}", ambiguities.len());
    assert!(ambiguities.is_empty());
    for k in 0..=3 {
        println!("normal words of length {k}: {}", p.words_of_len(k).len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
