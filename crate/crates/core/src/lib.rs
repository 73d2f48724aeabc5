//! Zen Puzzle Garden: rules engine, solver, and a compiler from cubic planar
//! graphs to gardens whose solvability matches Hamiltonicity.

pub mod garden;
pub mod graph;
pub mod harness;
pub mod layout;
mod prune;
pub mod reduction;
pub mod sandset;
pub mod solver;

pub use garden::{format_moves, parse_garden, parse_moves, Cell, Direction, EndRule, GameState, Garden, Pos};
pub use sandset::SandSet;
pub use solver::{solve, SolveResult, SolverConfig, Verdict};
