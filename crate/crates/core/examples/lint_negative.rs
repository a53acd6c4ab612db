// A table that satisfies every axiom but cannot come from a fiat category.
//
// Morphs `P[a,b]` for `a, b in {1, 2}` compose as rescaled matrix units:
// `P[a,b] ∘ P[c,d] = 2 φ(a,b) φ(c,d) / φ(a,d) · P[a,d]` with `φ = 1` on the
// diagonal and `2` off it. Over the rationals this is a change of basis of
// an honest example, but the diagonal m-coefficients on the left cell of
// `P[1,1]` come out as 2 and 8.

use std::error::Error;

use fiatcells::{fiat_lint, load_multicat, validate, Status};

const TABLE: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/tests/fixtures/left_cell_unequal_m.json"
));

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cat = load_multicat(TABLE)?;
    println!("axioms hold: {}", validate(&cat).is_valid());
    let report = fiat_lint(&cat);
    for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
        println!("{} failed: {}", c.name, c.witnesses.join("; "));
    }
    if !report.fiat_certified_impossible {
        return Err("lint should reject this table".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
