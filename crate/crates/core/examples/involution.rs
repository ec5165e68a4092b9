//! Demonstrates the sign-reversing involution behind the alternating-sum
//! identity. States are pairs (functional subgraph, compatible subset
//! chain); the involution toggles the subgraph's special set on and off the
//! end of the chain, flipping the sign. What survives the cancellation are
//! the pairs with an empty chain and no special vertices: the canonically
//! oriented forests.
//!
//! Run with: cargo run --example involution

use gparking::involution::{apply, is_compatible, label_special, subset_chains};
use gparking::RootedMultigraph;

fn main() -> gparking::Result<()> {
    let g = RootedMultigraph::complete(3)?;

    println!("special sets of the {} functional subgraphs of K3:", 9);
    for h in g.enumerate_functional_subgraphs() {
        let labeling = label_special(&h);
        println!("  {h:<14} special = {}", labeling.special_set());
    }

    println!("\npairing off the compatible (subgraph, chain) states:");
    let chains = subset_chains(g.n());
    let mut fixed = 0;
    let mut moved = 0;
    for chain in &chains {
        for h in g
            .enumerate_functional_subgraphs()
            .iter()
            .filter(|h| is_compatible(h, chain))
        {
            let image = apply(h, chain)?;
            if image == *chain {
                fixed += 1;
                println!("  fixed: ({h}, {chain})");
            } else {
                moved += 1;
                assert_eq!(apply(h, &image)?, *chain, "applying twice returns");
            }
        }
    }
    println!("{moved} states cancel in pairs; {fixed} fixed points remain");
    assert_eq!(fixed, g.enumerate_forests()?.len());
    println!("fixed points = canonically oriented forests = {fixed}");
    Ok(())
}
