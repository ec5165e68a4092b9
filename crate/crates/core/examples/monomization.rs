//! Builds the power ideal of a graph, replaces each power of a linear form
//! by a single monomial of the same degree, and reduces the result to its
//! minimal generating set.
//!
//! Run with: cargo run --example monomization

use gparking::export::monomial_term;
use gparking::{monomize, power_ideal, RootedMultigraph};

fn main() -> gparking::Result<()> {
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let g = gparking::io::read_graph_file(format!("{fixtures}/example4.graph"))?;
    let k = 1;

    let power = power_ideal(&g, k)?;
    let monomial = monomize(&g, k)?;

    println!("one generator per nonempty subset of the non-root vertices:");
    for (p, m) in power.generators().iter().zip(monomial.generators()) {
        let vars = if p.support.len() == 1 { "var" } else { "vars" };
        println!(
            "  {:<12} (sum of {} {vars})^{}  ->  {}",
            p.support.to_string(),
            p.support.len(),
            p.exponent,
            monomial_term(&m.exponents)
        );
    }

    let minimal = monomial.minimal_generators();
    println!(
        "\n{} of the {} monomials survive reduction:",
        minimal.len(),
        monomial.generators().len()
    );
    for m in &minimal {
        println!("  {}", monomial_term(&m.exponents));
    }

    // K5 is the opposite extreme: nothing is redundant.
    let k5 = monomize(&RootedMultigraph::complete(5)?, 1)?;
    println!(
        "\nK5: {} generators, {} minimal",
        k5.generators().len(),
        k5.minimal_generators().len()
    );
    Ok(())
}
