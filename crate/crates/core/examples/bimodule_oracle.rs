// Tensor products of actual bimodules over k ⊕ k[x]/(x²), decomposed into
// indecomposables, agree with the table built from the Cartan matrix.

use std::error::Error;

use fiatcells::bimodule::{cartan_of, realize_ca, verify_exm2, Algebra, DEFAULT_MAX_DIM};
use fiatcells::constructors::make_ca;
use fiatcells::serialize_multicat;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let algebras = [Algebra::field(), Algebra::dual_numbers()];
    let realized = realize_ca(&algebras, DEFAULT_MAX_DIM)?;
    let formula = make_ca(&cartan_of(&algebras)?)?;
    println!("{}", serialize_multicat(&realized));
    println!(
        "realized table equals formula table: {}",
        realized == formula
    );

    let report = verify_exm2();
    for r in &report.relations {
        println!("{}: {}", r.name, r.holds);
    }
    println!("hom dimensions {:?}", report.hom_dims);
    if realized != formula || !report.all_pass() {
        return Err("bimodule computation disagrees".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
