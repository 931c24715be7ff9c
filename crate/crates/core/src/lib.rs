//! Computable algebra behind mapping-space spectral sequences of
//! Eilenberg-MacLane spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`], [`matrix`], [`integer`]: exact linear algebra over `F_p`, `Q` and `Z`.
//! * [`steenrod`]: admissible-basis arithmetic in the mod-`p` Steenrod algebra.
//! * [`unstable`]: free unstable modules, the periodic Bockstein resolution and Ext charts.
//! * [`specseq`]: bigraded pages, page turning, Bockstein spectral sequences, the forced
//!   Eilenberg-MacLane charts and chart rendering.
//! * [`cosimplicial`]: Dold-Kan, cohomotopy, diagonals and the totalization spectral sequence.
//! * [`aq`]: Andre-Quillen cohomology of graded-commutative `Q`-algebras and the genus report.

pub mod aq;
pub mod cosimplicial;
pub mod error;
pub mod field;
pub mod integer;
pub mod matrix;
pub mod specseq;
pub mod steenrod;
pub mod unstable;

pub use error::{Error, Result};
pub use field::{Field, Fp, Rationals};
pub use matrix::Matrix;
