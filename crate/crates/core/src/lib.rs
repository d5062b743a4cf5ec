//! Exact evaluation and certification of telescoping series over Fibonacci
//! and Lucas numbers.
//!
//! - [`exactnum`]: rationals and exact arithmetic in Q(√5)
//! - [`lucas`]: fast-doubling `(F_n, L_n)` and powers of the golden ratio
//! - [`identities`]: product and sum identities, each checked exactly
//! - [`series`]: summands, telescoping sequences, closed forms, certification
//! - [`oracle`]: exhaustive identity grids and independent cross-checks

pub mod error;
pub mod exactnum;
pub mod identities;
pub mod lucas;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
pub use exactnum::{BigRat, QuadRat};
pub use identities::{IdentityCheck, SeqKind};
pub use lucas::{alpha_pow, binet_roundtrip, fib_lucas, LucasPair};
pub use series::{certify, ConvergenceReport, Family, SeriesSpec, SumMode};
