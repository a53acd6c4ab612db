use std::error::Error;

use fiatcells::constructors::make_hecke;
use fiatcells::{load_multicat, serialize_multicat};

/// Writes the S3 table in the interchange format and reads it back.
pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cat = make_hecke(3)?;
    let text = serialize_multicat(&cat);
    let back = load_multicat(&text)?;
    println!(
        "{} bytes, {} morphs, round trip exact: {}",
        text.len(),
        back.num_morphs(),
        back == cat
    );
    print!(
        "{}",
        text.lines()
            .take(12)
            .map(|l| format!("{l}\n"))
            .collect::<String>()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
