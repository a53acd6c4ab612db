// Robinson-Schensted tableaux and the cells they classify.

use std::error::Error;

use fiatcells::constructors::{robinson_schensted, rs_cell_check, Permutation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let w = Permutation::parse("3 1 4 2")?;
    let pair = robinson_schensted(&w);
    println!("{w}\nP:\n{}\nQ:\n{}", pair.p, pair.q);

    for n in 2..=5 {
        let report = rs_cell_check(n)?;
        println!(
            "S{n}: {} right cells, {} tableaux, right cells by {:?}, left cells by {:?}",
            report.right_cells, report.standard_tableaux, report.right_by, report.left_by
        );
        if !report.consistent() {
            return Err(format!("cells of S{n} are not classified by tableaux").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
