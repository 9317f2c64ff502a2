//! Combinatorial string topology on oriented surfaces with boundary: the
//! Goldman–Turaev Lie bialgebra on cyclic words, and the surgery calculus of
//! generalized chord diagrams.

pub mod bialgebra;
pub mod diagrams;
pub mod sampling;
pub mod surface;
pub mod words;
