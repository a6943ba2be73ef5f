// Koppinen's correspondence between End(H) and End(H ⊗ H) on Sweedler's algebra.

use hgx::comodule::Coaction;
use hgx::corpus;
use hgx::galois::{koppinen_r, koppinen_t, TensorEndo};
use hgx::hopfcore::LinMap;
use hgx::presentation::NcPoly;
use hgx::tensorspace::TensorElement;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let env = corpus::load("sweedler-h4")?;
    let h = env.structure("H4").ok_or("no H4")?;
    let basis = h.full_basis().ok_or("infinite")?;
    let pairs: Vec<_> = basis.iter().flat_map(|u| basis.iter().map(move |v| (u.clone(), v.clone()))).collect();

    let id = LinMap::identity(basis.clone());
    let r_id = koppinen_r(&id, h.algebra(), h, pairs.clone())?;
    let c = Coaction::regular(h)?;
    let can = TensorEndo::from_fn(pairs.clone(), |u, v| {
        let x = TensorElement::pure(vec![u.clone(), hgx::presentation::Word::empty()]);
        x.tensor_mul(&c.delta(&NcPoly::word(v.clone())), &[h.algebra(), h.algebra()]).expect("arity 2")
    })?;
    println!("R(id) = can: {}", r_id == can);
    let t = koppinen_t(&can, h, basis.clone(), basis.clone())?;
    println!("T(can) = id: {}", t == id);
    assert!(r_id == can && t == id);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
