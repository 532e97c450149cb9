//! Group-annihilator graphs of finite abelian groups.
//!
//! For a finite abelian group `G` the graph `Γ(G)` has the elements of `G` as
//! vertices, with `x ~ y` whenever `[x:G][y:G]G = 0`, where
//! `[a:G] = { r ∈ Z : rG ⊆ Za }`. The crate builds these graphs, computes
//! annihilator ideals in closed form and by brute force, recognises threshold
//! structure, and computes adjacency and Laplacian spectra.
//!
//! Numeric code is generic over [`num_traits::Float`]; the aliases below fix
//! the common scalar choices.

pub mod annihilator;
pub mod arith;
pub mod error;
pub mod graph;
pub mod group;
pub mod orbits;
pub mod partition;
pub mod spectra;
pub mod threshold;

pub use annihilator::{annihilator, annihilator_bruteforce, annihilator_cyclic, annihilator_homogeneous, annihilator_rank3};
pub use error::{Error, Result};
pub use graph::{build_graph, AnnGraph, QuotientGraph, SimpleGraph};
pub use group::{FiniteAbelianGroup, GroupElement, IdealZ};
pub use partition::IntPartition;
pub use spectra::{Spectrum, SymMatrix};
pub use threshold::CreationSequence;

pub type Spectrum64 = spectra::Spectrum<f64>;
pub type Spectrum32 = spectra::Spectrum<f32>;
pub type SymMatrix64 = spectra::SymMatrix<f64>;
pub type JacobiConfig64 = spectra::JacobiConfig<f64>;
pub type IntPoly = spectra::poly::Poly<num_bigint::BigInt>;
pub type RatPoly = spectra::poly::Poly<num_rational::BigRational>;
