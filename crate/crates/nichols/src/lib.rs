//! Exact computation with braidings of diagonal type: Weyl groupoids,
//! Cartan-type classification, real root systems, and an independent
//! brute-force cross-check through braided symmetrizers.
//!
//! A braiding of diagonal type is a square matrix `q` of invertible scalars
//! `q_ij`; it determines a Nichols algebra whose combinatorics this crate
//! computes two ways:
//!
//! * **Reflection side** ([`braiding`], [`reflection`], [`groupoid`],
//!   [`cartan`]): truncation exponents `m_ij`, pseudo-reflections, the
//!   groupoid of reflected braidings with its real roots and Brandt-axiom
//!   checker, plus purely matrix-level Cartan machinery (symmetrizability,
//!   finite type, Weyl groups, trace obstructions).
//! * **Brute-force side** ([`oracle`]): graded dimensions from ranks of
//!   braided symmetrizers over an exact Laurent-polynomial ring, Hilbert
//!   data, restricted-PBW root inference, adjoint powers, skew derivations
//!   and the duality pairing.
//!
//! The two sides share nothing beyond the scalar layer, which is what makes
//! agreement between them meaningful.  Everything is exact: scalars are
//! unit monomials over `Z/N x Z^p` and Laurent polynomials over `Q(zeta_N)`
//! with arbitrary-precision rational coefficients, and there are no
//! tolerances anywhere.
//!
//! Start with [`braiding::BraidingMatrix::parse`] or the constructors in
//! the examples:
//!
//! ```
//! use nichols::braiding::BraidingMatrix;
//! use nichols::groupoid::{self, Caps};
//!
//! let q = BraidingMatrix::parse(
//!     "rank 2\nparams t\n\
//!      entry 1 1 t\nentry 1 2 t^-1\nentry 2 1 1\nentry 2 2 t",
//! )
//! .unwrap();
//! let roots = groupoid::real_roots(&q, &Caps::default()).unwrap();
//! assert_eq!(roots.positive().count(), 3);
//! ```
//!
//! Each major capability has a runnable example under `examples/`; the
//! `nichols` binary wraps the same entry points behind `analyze`,
//! `reflect`, `oracle` and `compare` subcommands.

pub mod braiding;
pub mod cartan;
pub mod groupoid;
pub mod matrix;
pub mod oracle;
pub mod reflection;
pub mod report;
pub mod scalar;
