//! Stöhr–Voloch order data and explicit optimal curves over finite fields.
//!
//! Modules, bottom up:
//!
//! * [`galois`]: GF(p^n) arithmetic, Frobenius, traces, embeddings.
//! * [`poly`]: dense polynomials over a field.
//! * [`numsg`]: numerical semigroups and the Suzuki gap ledger.
//! * [`ffun`]: function-field elements and Hasse derivatives.
//! * [`curvecat`]: the catalog curves, point enumeration, Riemann–Roch bases.
//! * [`svengine`]: order sequences, Frobenius orders, divisor degrees.
//! * [`zetabounds`]: h-polynomials and the classical bounds.
//! * [`ovoid`]: the Suzuki–Tits ovoid against the embedded Suzuki curve.
//! * [`veritas`]: the claim registry and report writer.

pub mod curvecat;
pub mod error;
pub mod exec;
pub mod ffun;
pub mod galois;
pub mod linalg;
pub mod numsg;
pub mod ovoid;
pub mod poly;
pub mod svengine;
pub mod veritas;
pub mod zetabounds;

pub use error::{Error, Result};
pub use exec::ExecMode;
