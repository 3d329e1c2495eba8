//! Exact-arithmetic machinery for finite root systems, Kottwitz' canonical
//! splitting of the extended torus-normalizer, and the resulting θ-invariant
//! integral (Chevalley) basis with all structure constants.
//!
//! Everything is computed over the integers. The pipeline is:
//!
//! 1. [`rootsys`] builds the root system from a Cartan matrix: roots,
//!    coroots, lengths, heights, reflection tables, depth chains, and the
//!    length segments with their special roots.
//! 2. [`weyl`] models Weyl group elements as words and as signed
//!    permutations of the root set, with inversion sets `R_w`.
//! 3. [`kottwitz`] computes the pairing term `⟨⟨β,γ⟩⟩`, the mod-2 function
//!    `F(w,β)`, the sign character `τ_w`, and the adjoint action of the
//!    splitting `w△` on the semi-canonical basis `k_λ` and the invariant
//!    basis `𝔢_λ = γ(λ)·k_λ`.
//! 4. [`constants`] derives every structure constant `N_{λ,μ}` by the
//!    simple-reflection recursion over ordered Tits triples, and exposes the
//!    full bracket on the invariant basis.
//! 5. [`oracle`] independently realizes types A and C as explicit integer
//!    matrix algebras and recomputes every constant via commutators.
//! 6. [`verify`] bundles the property suites (Jacobi, splitting, sign
//!    identities, root strings) used by tests and the CLI.
//!
//! The crate is `no_std` (with `alloc`); all state is immutable after
//! construction and safe to share across threads.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod constants;
pub mod error;
pub mod kottwitz;
pub mod oracle;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use constants::{LieElement, StructureTable, TitsTriple};
pub use error::{Error, Result};
pub use kottwitz::{BasisLabel, SignTable};
pub use rootsys::{CartanMatrix, Root, RootSystem};
pub use weyl::{SignedPermutation, WeylWord};
