//! Finite cosimplicial and bicosimplicial calculators.
//!
//! Vector-space inputs support conormalization (Dold–Kan), cohomotopy, the
//! diagonal, binormalization and the totalization spectral sequence of a
//! double complex. Set inputs support only `π^0`, as equalizers.
//!
//! Truncation: an object with levels `0..=top` determines `π^s` only for
//! `s < top`; operations refuse to report beyond that.

mod bicosimplicial;
mod complex;
pub mod delta;
mod double;
mod gamma;
mod identities;
pub mod random;
mod sets;
pub mod trials;
mod vector;

pub use bicosimplicial::{kunneth, BicosimplicialVectorSpace, EilenbergZilberReport};
pub use complex::CochainComplex;
pub use double::DoubleCochainComplex;
pub use sets::{FiniteBicosimplicialSet, FiniteCosimplicialSet, Pi00Report};
pub use vector::CosimplicialVectorSpace;
