//! Emits the power ideal and its monomization as ready-to-paste scripts for
//! Macaulay2 and Singular, so the quotients can be inspected (or the
//! monomization theorem re-verified) in a full computer algebra system.
//!
//! Run with: cargo run --example cas_export

use gparking::export::{monomial_ideal_script, power_ideal_script};
use gparking::{monomize, power_ideal, CasDialect, RootedMultigraph};

fn main() -> gparking::Result<()> {
    let g = RootedMultigraph::complete(3)?;
    let power = power_ideal(&g, 1)?;
    let monomial = monomize(&g, 1)?;

    println!("-- Macaulay2: power ideal of K3, k = 1");
    print!("{}", power_ideal_script(&power, CasDialect::Macaulay2));
    println!("-- hilbertSeries(R/I) should give 1 + 2T + 3T^2 + T^3");

    println!("\n// Singular: the monomization of the same ideal");
    print!("{}", monomial_ideal_script(&monomial, CasDialect::Singular));
    println!("// vdim(std(I)) should give 7");
    Ok(())
}
