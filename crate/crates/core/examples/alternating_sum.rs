//! Evaluates the alternating sum over chains of nonempty vertex subsets:
//! each chain contributes a product of per-vertex arc counts with sign
//! (-1)^length, and the total collapses to the number of spanning forests.
//!
//! Run with: cargo run --example alternating_sum

use gparking::involution::{chain_term, subset_chains};
use gparking::{alternating_sum, RootedMultigraph};

fn main() -> gparking::Result<()> {
    let g = RootedMultigraph::complete(3)?;
    println!("K3: every chain and its term");
    for chain in subset_chains(g.n()) {
        let term = chain_term(&g, &chain);
        let sign = if chain.len() % 2 == 0 { '+' } else { '-' };
        println!("  {sign}{term:<3} {chain}");
    }
    let report = alternating_sum(&g);
    println!(
        "sum = {} over {} chains ({} nonzero) = number of forests = {}\n",
        report.value,
        report.chain_count,
        report.nonzero_chains,
        g.enumerate_forests()?.len()
    );

    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let g = gparking::io::read_graph_file(format!("{fixtures}/example4.graph"))?;
    let report = alternating_sum(&g);
    println!(
        "example4: sum = {} over {} chains ({} nonzero); forests = {}",
        report.value,
        report.chain_count,
        report.nonzero_chains,
        g.enumerate_forests()?.len()
    );
    Ok(())
}
