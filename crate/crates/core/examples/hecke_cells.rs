// Kazhdan-Lusztig cells of S4 from the positive structure constants of
// the canonical basis.

use std::error::Error;

use fiatcells::constructors::{hecke_label, make_hecke, Permutation};
use fiatcells::{m_table, CellStructure};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 4;
    let cat = make_hecke(n)?;
    let s = CellStructure::new(&cat);
    println!(
        "S{n}: {} right cells, {} two-sided cells",
        s.right.len(),
        s.two_sided.len()
    );
    for q in 0..s.two_sided.len() {
        let table = m_table(&s, q)?;
        let members = s.two_sided.members(q);
        let diag: Vec<u64> = members.iter().map(|&f| table.diagonal(f)).collect();
        println!("cell of size {:2}: m diagonal {:?}", members.len(), diag);
    }

    let w0 = Permutation::from_one_line(&[4, 3, 2, 1])?;
    let top = cat.find_morph(&hecke_label(&w0)).ok_or("missing w0")?;
    let table = m_table(&s, s.two_sided.class(top))?;
    println!("m(w0,w0) = {}", table.diagonal(top));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
