//! Clifford algebras Cl(3,0) and Cl(1,3) with qubits encoded as elements of
//! minimal left ideals in their tensor products.
//!
//! Gates are algebra elements built as exponentials of a u(2^n) generator
//! basis. The crate also has the discrete spacetime operators acting on
//! two-qubit states, a small supersymmetry sector, the 528-element M-algebra
//! basis over five factors, and octonions. Every construction is checked
//! against a dense Pauli-matrix representation.
//!
//! ## Examples
//!
//! ```bash
//! cargo run --example clifford_basics   # products and the exponential
//! cargo run --example qubit_spinors     # encode/decode, ideal bases
//! cargo run --example gate_synthesis    # X, CNOT, catalog synthesis
//! cargo run --example cpt_operators     # Γ5, parity, C, T on Bell states
//! cargo run --example supersymmetry     # theta bracket and matrices
//! cargo run --release --example m_algebra
//! cargo run --example octonions
//! cargo run --example matrix_oracle     # the Pauli representation as a check
//! ```
//!
//! The `cliffq` binary runs the verification suites in [`verify`].

pub mod algebra;
pub mod clifford;
pub mod error;
pub mod gates;
pub mod malgebra;
pub mod matrix;
pub mod octonion;
pub mod random;
pub mod rank;
pub mod relativistic;
pub mod report;
pub mod spinor;
pub mod susy;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
