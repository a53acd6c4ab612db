// Nontrivial Kazhdan-Lusztig polynomials of S4 and their mu-coefficients.

use std::error::Error;

use fiatcells::constructors::{format_q_poly, kl_table};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let table = kl_table(4);
    let mut nontrivial = 0;
    for w in 0..table.len() {
        for x in 0..table.len() {
            let p = table.p_coeffs(x, w);
            if p.len() > 1 {
                nontrivial += 1;
                println!(
                    "P[{}, {}] = {}   mu = {}",
                    table.element(x),
                    table.element(w),
                    format_q_poly(p),
                    table.mu(x, w)
                );
            }
        }
    }
    println!("{nontrivial} pairs with a non-constant polynomial");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
