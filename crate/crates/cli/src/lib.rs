//! Command-line front end for the exact Chevalley-basis machinery.
//!
//! Four verbs over one input (a named type or a Cartan-matrix file):
//!
//! - `roots`: the root inventory with coordinates, coroots, squared
//!   lengths, heights, and descent depths;
//! - `basis`: the per-root canonical-basis data (γ factors, segment signs
//!   on simple roots, and for matrix-realizable types the sign of each
//!   `k_λ` against the reference frame vector);
//! - `table`: every canonical ordered Tits triple with its structure
//!   constant `N_{λ,μ}`;
//! - `verify`: the proof-by-recomputation suites (Jacobi, matrix oracle,
//!   splitting homomorphism, root strings), exiting 0 only when every
//!   checked identity holds.
//!
//! Outputs are deterministic and independent of how the system was named:
//! a built-in type and a Cartan file with the same matrix produce
//! byte-identical bytes. Exit codes: 0 success, 1 command-line or type-name
//! parse error, 2 invalid input (bad Cartan data, unreadable files,
//! unsupported oracle requests), 3 verification failure.

#![forbid(unsafe_code)]

pub mod args;
pub mod formats;
pub mod run;

pub use run::{run, EXIT_INPUT, EXIT_OK, EXIT_PARSE, EXIT_VERIFY};
