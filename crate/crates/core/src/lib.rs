//! Flips and mutations of finite posets and lattices.
//!
//! Reversing every cover relation between a down-set `A` and its complement
//! `B` is a *flip*; when both ends are lattices it is a *mutation*. This crate
//! implements that calculus together with the objects it is exercised on:
//! weak orders of type A and B, Cambrian lattices built from triangulations,
//! weighted quivers, and exhaustive searches over their mutation classes.

pub mod cambrian;
pub mod coxeter;
pub mod exploration;
pub mod flip;
pub mod order;
pub mod quiver;

pub use order::{as_lattice, Lattice, OrderError, Poset};
