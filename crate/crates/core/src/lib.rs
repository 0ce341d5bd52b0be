//! Exact computational toolkit for Adinkras.
//!
//! An Adinkra is a bipartite, `N`-regular, properly `N`-edge-colored signed
//! graph in which every bicolored component is a 4-cycle carrying an odd
//! number of negative edges. Every graph admitting such a structure is the
//! quotient of a hypercube by a doubly even binary code, so the crate starts
//! from codes ([`codes`]), builds and dashes the quotient graphs
//! ([`adinkra`]), and then studies their signed Laplacians over exact integer
//! arithmetic ([`exactla`]): Smith normal forms, critical groups, 2-ranks,
//! and the monodromy pairing on the torsion cokernel ([`critical`]).
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! there is no floating point anywhere in the crate.

pub mod adinkra;
pub mod codes;
pub mod critical;
pub mod exactla;
pub mod f2;
pub mod formats;
pub mod par;

pub use adinkra::{Adinkra, ColoredGraph, Edge, Signature, SwitchingClasses, ValidationReport};
pub use codes::{BinaryCode, Coset};
pub use critical::{AbelianGroup, GroupReport, Pairing, PairingValue};
pub use exactla::{IntMatrix, InvariantFactors, Poly, PolyMatrix};
pub use formats::AdinkraDocument;
