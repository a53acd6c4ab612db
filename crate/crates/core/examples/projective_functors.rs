// Projective functors on a finite-dimensional algebra, built from its
// Cartan matrix alone.

use std::error::Error;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fiatcells::constructors::{make_ca, make_sl2_singular, random_cartan_data, CartanData};
use fiatcells::{check_eq62, find_isomorphism, validate, CellStructure};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // k ⊕ k[x]/(x²)
    let data = CartanData::new(vec![vec![vec![1]], vec![vec![2]]])?;
    let cat = make_ca(&data)?;
    let iso = find_isomorphism(&cat, &make_sl2_singular()).ok_or("expected the sl2 table")?;
    for (a, b) in iso.describe(&cat, &make_sl2_singular()) {
        println!("{a} -> {b}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let data = random_cartan_data(&mut rng, 2, 3, 3);
        let cat = make_ca(&data)?;
        let s = CellStructure::new(&cat);
        let top = s.two_sided.len() - 1;
        let eq = check_eq62(&s, top)?;
        println!(
            "{:?}: {} morphs, valid {}, m constant on left cells {}",
            data.components,
            cat.num_morphs(),
            validate(&cat).is_valid(),
            eq.holds
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
