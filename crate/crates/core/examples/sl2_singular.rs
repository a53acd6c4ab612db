// Singular block of category O for sl2, analysed end to end.

use std::error::Error;

use fiatcells::constructors::make_sl2_singular;
use fiatcells::report::{render_text, report_analyze, Provenance};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cat = make_sl2_singular();
    let doc = report_analyze(&cat, Provenance::new(None, 0));
    print!("{}", render_text(&doc));
    if !doc.validation.valid
        || doc
            .lint
            .as_ref()
            .is_some_and(|l| l.fiat_certified_impossible)
    {
        return Err("sl2 table should pass every check".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
