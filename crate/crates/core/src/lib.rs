//! Exact Alexander polynomials of closed braids via the reduced Burau
//! representation, signatures of alternating block braids, and trapezoid /
//! log-concavity checks on the resulting coefficient sequences.
//!
//! Everything is computed over arbitrary-precision integers; no floating
//! point is involved anywhere.

pub mod braid;
pub mod burau;
pub mod conjecture;
pub mod laurent;
pub mod signature;

pub use braid::{BlockBraid, BraidError, BraidWord, Sign, Syllable};
pub use burau::{alexander, burau_generator, burau_word, AlexanderResult, BurauError, PolyMatrix};
pub use conjecture::{check_conjecture, ConjectureError, ConjectureReport};
pub use laurent::{analyze_shape, LaurentError, LaurentPoly, TrapezoidReport};
pub use signature::{inertia, seifert_oracle_m1, signature_closed_form, SignatureReport};
