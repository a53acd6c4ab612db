#[allow(dead_code)]
mod s2_cells {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/s2_cells.rs"));
}

#[test]
fn s2_cells_runs() {
    s2_cells::run_example().expect("s2 cells example should run");
}

#[allow(dead_code)]
mod sl2_singular {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sl2_singular.rs"));
}

#[test]
fn sl2_singular_runs() {
    sl2_singular::run_example().expect("sl2 singular example should run");
}

#[allow(dead_code)]
mod projective_functors {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/projective_functors.rs"));
}

#[test]
fn projective_functors_runs() {
    projective_functors::run_example().expect("projective functors example should run");
}

#[allow(dead_code)]
mod hecke_cells {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hecke_cells.rs"));
}

#[test]
fn hecke_cells_runs() {
    hecke_cells::run_example().expect("hecke cells example should run");
}

#[allow(dead_code)]
mod kl_polynomials {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/kl_polynomials.rs"));
}

#[test]
fn kl_polynomials_runs() {
    kl_polynomials::run_example().expect("kl polynomials example should run");
}

#[allow(dead_code)]
mod robinson_schensted {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/robinson_schensted.rs"));
}

#[test]
fn robinson_schensted_runs() {
    robinson_schensted::run_example().expect("robinson schensted example should run");
}

#[allow(dead_code)]
mod bimodule_oracle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bimodule_oracle.rs"));
}

#[test]
fn bimodule_oracle_runs() {
    bimodule_oracle::run_example().expect("bimodule oracle example should run");
}

#[allow(dead_code)]
mod lint_negative {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lint_negative.rs"));
}

#[test]
fn lint_negative_runs() {
    lint_negative::run_example().expect("lint negative example should run");
}

#[allow(dead_code)]
mod table_roundtrip {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/table_roundtrip.rs"));
}

#[test]
fn table_roundtrip_runs() {
    table_roundtrip::run_example().expect("table roundtrip example should run");
}
