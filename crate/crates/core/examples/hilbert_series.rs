//! Computes the Hilbert series of the quotient by the power ideal in two
//! independent ways — counting standard monomials of the monomization, and
//! exact ranks of the graded pieces — and checks they agree.
//!
//! Run with: cargo run --example hilbert_series

use gparking::{monomize, parking, power_ideal, rank, RootedMultigraph};

fn main() -> gparking::Result<()> {
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let graphs = [
        ("K3".to_string(), RootedMultigraph::complete(3)?),
        (
            "example4 (5 vertices, 7 edges)".to_string(),
            gparking::io::read_graph_file(format!("{fixtures}/example4.graph"))?,
        ),
    ];

    for (name, g) in &graphs {
        println!("{name}, k = 1");
        let by_monomials = parking::hilbert_series(&monomize(g, 1)?)?;
        let by_rank = rank::hilbert_series(&power_ideal(g, 1)?);
        println!("  standard monomials: {by_monomials}");
        println!("  graded ranks:       {by_rank}");
        assert_eq!(by_monomials, by_rank);
        println!("  dim = {}", by_monomials.dimension());
        println!();
    }
    Ok(())
}
