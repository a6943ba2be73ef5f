// Arithmetic in Q(i)(q) and exact linear algebra over it.

use hgx::exactfield::{ExactMatrix, Gaussian, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Scalar::q();
    let qi = q.inv()?;
    let qn = &q - &qi;
    println!("q - q^-1 = {qn}");
    println!("1/(q - q^-1) = {}", qn.inv()?);
    println!("at q = 2: {}", qn.eval_q(&Gaussian::from_int(2))?);
    assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));

    // a quantum-dependent matrix with a one-dimensional kernel
    let m = ExactMatrix::from_rows(vec![
        vec![Scalar::one(), q.clone(), Scalar::zero()],
        vec![qi.clone(), Scalar::one(), Scalar::zero()],
        vec![Scalar::zero(), Scalar::zero(), Scalar::i()],
    ])?;
    let kernel = m.kernel();
    println!("rank {} kernel {:?}", m.rank(), kernel.iter().map(|v| v.iter().map(|s| s.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    assert_eq!(m.rank(), 2);
    assert_eq!(kernel.len(), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
