//! Polynomial vector invariants of orthogonal groups in characteristic 2.

pub mod algebra;
pub mod cli;
pub mod groups;
pub mod invariants;
pub mod invspace;
pub mod witt;
