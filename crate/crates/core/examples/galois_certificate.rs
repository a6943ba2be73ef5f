// H'_4 as a quantum principal bundle over its quotient Z_2.

use hgx::corpus;
use hgx::galois::certify_quantum_principal_bundle;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let env = corpus::load("taft-subgroup")?;
    let pi = env.subgroup("pi").ok_or("no pi")?;
    let r = certify_quantum_principal_bundle(&pi.h, &pi.hp, &pi.map, 4, 2)?;
    let cert = &r.certificate;
    println!("coinvariants: dim {}", r.coinvariants.dim());
    println!("H ⊗_B H: dim {}, target dim {}, rank {}", cert.source_dim(), cert.target_dim, cert.rank);
    for v in r.verdicts() {
        println!("{:<12} {}", v.name, v.pass);
    }
    for (h, x) in cert.translation_table() {
        println!("tau({}) = {}", r.coaction.hopf().fmt_word(h), cert.fmt_coords(x));
    }
    assert!(r.pass());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
