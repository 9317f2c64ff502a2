//! Goldman bracket and Turaev cobracket on cyclic words, computed from the
//! planar structure of the universal-cover tree of a fat rose, together with
//! the defect operators of the Lie bialgebra identities.
//!
//! With the sign normalization `[a, b] = +ab` on the one-holed torus
//! `(a, b, A, B)`:
//!
//! ```
//! use stringtop_core::bialgebra::StringOperators;
//! use stringtop_core::surface::{FatRose, SurfacePreset};
//! use stringtop_core::words::{Combo, CyclicWord};
//!
//! let torus = FatRose::preset(SurfacePreset::OneHoledTorus).unwrap();
//! let ops = StringOperators::new(&torus);
//! let a = Combo::basis(CyclicWord::parse("a").unwrap());
//! let b = Combo::basis(CyclicWord::parse("b").unwrap());
//! assert_eq!(ops.bracket(&a, &b).to_string(), "+1 ab");
//! ```

pub mod crossing;
mod operators;
pub mod rays;

pub use crossing::{crossing_sign, linking_sign, CountingRule, CrossingVerdict, Pairing};
pub use operators::{e_operator, goldman_bracket, turaev_cobracket, AlphabetMismatch, StringOperators};
pub use rays::{end_order, ray_compare, Direction, Ray, RayComparison};
