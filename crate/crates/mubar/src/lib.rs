//! Exact computation of linking numbers and Milnor invariants for links in
//! the 3-sphere, from PD codes or braid closures.
//!
//! The pipeline: a [`diagram::LinkDiagram`] yields a Wirtinger presentation
//! ([`wirtinger`]), arc generators get rewritten into meridian words of the
//! free group ([`milnor`]), and coefficients of the Magnus expansion
//! ([`magnus`]) of the preferred longitudes are the invariants `mu(I)`,
//! reported modulo their indeterminacy `delta(I)`.
//!
//! A local-move engine ([`diagram::apply_move`]) covers Reidemeister moves,
//! crossing changes, the delta move, component doubling and band sums, so
//! invariance and symmetry laws can be exercised directly.
//!
//! ```
//! use mubar::{fixtures, milnor};
//!
//! let rings = fixtures::borromean();
//! let triple = milnor::mu_bar(&rings, &[1, 2, 3]).unwrap();
//! assert_eq!(triple.value, 1.into());
//! assert!(triple.is_exact());
//! ```

pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod linking;
pub mod magnus;
pub mod milnor;
pub mod wirtinger;
pub mod word;

pub use diagram::LinkDiagram;
pub use magnus::TruncatedSeries;
pub use milnor::{MilnorEngine, MilnorTable, Residue};
pub use word::FreeWord;
