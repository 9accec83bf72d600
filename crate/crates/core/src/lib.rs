//! Per-genus censuses of small-dilatation monodromies of a fibered
//! hyperbolic 3-manifold.
//!
//! The inputs are a polyhedral Thurston norm (dual vertex form), its fibered
//! faces and one Teichmüller polynomial per face. From these the crate
//! enumerates fiber classes, computes genera and certified dilatations, and
//! counts the classes whose normalized dilatation `genus * log(lambda)` is at
//! most a threshold `L`.

pub mod census;
pub mod conegeom;
pub mod dilatation;
pub mod emit;
pub mod error;
pub mod hyplen;
pub mod lattice;
pub mod manifold;
pub mod rational;

pub use conegeom::{FiberedFace, IntegralClass, NormData};
pub use dilatation::{RealInterval, RootInterval, TeichPoly};
pub use error::{Error, Result};
