//! Enumerates (G,k)-parking functions — the standard monomials of the
//! monomized ideal — and shows the classical special case: on a complete
//! graph with k = 0 they are exactly the classical parking functions, and
//! their multisets are counted by the Catalan numbers.
//!
//! Run with: cargo run --example parking_functions

use gparking::parking::{is_classical_parking, is_g_parking, orbit_count};
use gparking::{monomize, standard_monomials, ExponentVector, RootedMultigraph};

fn main() -> gparking::Result<()> {
    let g = RootedMultigraph::complete(3)?;

    for k in [0, 1] {
        let basis = standard_monomials(&monomize(&g, k)?)?;
        println!(
            "K3, k = {k}: {} parking functions: {}",
            basis.len(),
            basis
                .iter()
                .map(|v| format!("({})", v.to_string().replace(' ', ",")))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }

    // Membership can also be tested directly, without enumerating.
    let candidate = ExponentVector::new(vec![1, 2]);
    println!(
        "\n(1,2) is (G,1)-parking for K3: {}",
        is_g_parking(&g, &candidate, 1)
    );

    println!("\ncomplete graphs, k = 0:");
    for n in 1usize..=4 {
        let g = RootedMultigraph::complete(n + 1)?;
        let basis = standard_monomials(&monomize(&g, 0)?)?;
        assert!(basis.iter().all(is_classical_parking));
        println!(
            "  K{}: {} classical parking functions = (n+1)^(n-1), {} multisets (Catalan)",
            n + 1,
            basis.len(),
            orbit_count(&basis)
        );
    }
    Ok(())
}
