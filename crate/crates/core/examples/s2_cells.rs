// The smallest nontrivial table: one object, `F ∘ F = 2F`.

use std::error::Error;

use fiatcells::constructors::make_s2;
use fiatcells::{cartan_blocks, m_table, CellKind, CellStructure};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cat = make_s2();
    let s = CellStructure::new(&cat);
    for kind in CellKind::ALL {
        println!("{kind} cells: {:?}", s.partition(kind).labels(&cat));
    }

    let f = cat.find_morph("F").ok_or("no F")?;
    let q = s.two_sided.class(f);
    let table = m_table(&s, q)?;
    println!("m(F,F) = {}", table.diagonal(f));
    for block in cartan_blocks(&s, s.right.class(f))? {
        println!("cartan block {:?}", block.matrix);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
