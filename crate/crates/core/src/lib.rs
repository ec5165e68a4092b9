//! Power ideals of rooted multigraphs and their parking-function bases.
//!
//! For a multigraph on vertices `{0, 1, …, n}` rooted at `0`, every nonempty
//! subset `I` of the non-root vertices contributes the power generator
//! `(Σ_{i∈I} x_i)^{D_I + k}`, where `D_I` counts the edges leaving `I`
//! (toward the root or any vertex outside `I`). This crate builds those
//! ideals, replaces each power with a single monomial of the same degree
//! (the *monomization*), and exposes several independent ways to compute the
//! dimension and Hilbert series of the quotient:
//!
//! - [`parking::standard_monomials`] enumerates the monomial basis of the
//!   monomized quotient, which coincides with the set of `(G, k)`-parking
//!   functions ([`parking::is_g_parking`]);
//! - [`rank::hilbert_series`] computes graded ranks of the power ideal by
//!   exact fraction-free elimination;
//! - [`graph::RootedMultigraph::enumerate_forests`] and
//!   [`graph::RootedMultigraph::activity_profile`] count spanning forests,
//!   graded by external activity;
//! - [`involution::alternating_sum`] evaluates the signed sum over subset
//!   chains whose cancellation is witnessed by [`involution::apply`].
//!
//! For undirected graphs with `k = 1` all four agree; the [`verify`] module
//! bundles these comparisons (and many smaller invariants) into one
//! check-by-check report.

pub mod cli;
pub mod error;
pub mod export;
pub mod graph;
pub mod ideal;
pub mod involution;
pub mod io;
pub mod parking;
pub mod rank;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use export::CasDialect;
pub use graph::{Forest, FunctionalSubgraph, RootedMultigraph, UndirectedEdge, VertexSubset};
pub use ideal::{
    monomize, power_ideal, MonomialGenerator, MonomialIdeal, PowerGenerator, PowerIdeal,
};
pub use involution::{alternating_sum, AlternatingSumReport, SubsetChain};
pub use parking::{is_classical_parking, is_g_parking, standard_monomials, ExponentVector};
pub use series::HilbertSeries;
