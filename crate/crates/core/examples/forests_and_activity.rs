//! Counts spanning forests and grades them by external activity: with the
//! degree statistic |E| - |F| - activity(F), the distribution reproduces the
//! Hilbert series of the k = 1 quotient, for any edge order.
//!
//! Run with: cargo run --example forests_and_activity

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use gparking::{monomize, parking, HilbertSeries};

fn main() -> gparking::Result<()> {
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let g = gparking::io::read_graph_file(format!("{fixtures}/example4.graph"))?;

    let forests = g.enumerate_forests()?;
    println!("{} spanning forests", forests.len());
    let by_size: Vec<usize> = (0..=g.n())
        .map(|s| forests.iter().filter(|f| f.len() == s).count())
        .collect();
    println!("by edge count: {by_size:?}");

    let series = parking::hilbert_series(&monomize(&g, 1)?)?;
    println!("\nHilbert series: {series}");

    let canonical = g.edge_instances()?;
    let mut orders = vec![("canonical order".to_string(), canonical.clone())];
    for seed in [7, 40] {
        let mut order = canonical.clone();
        order.shuffle(&mut StdRng::seed_from_u64(seed));
        orders.push((format!("shuffle (seed {seed})"), order));
    }
    for (label, order) in &orders {
        let profile = HilbertSeries::from_coeffs(g.activity_profile(order)?);
        println!("activity profile, {label}: {profile}");
        assert_eq!(profile, series);
    }
    println!("\nthe profile is order-independent and equals the series");
    Ok(())
}
