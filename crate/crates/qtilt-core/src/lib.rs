//! Computations with iterated tilted algebras of global dimension at most two,
//! rolling of tilting complexes, relation extensions and cluster-tilted algebras
//! of Dynkin type.
//!
//! The crate is organized bottom-up:
//!
//! * [`exactlin`] — exact linear algebra over a generic scalar (instantiated at
//!   arbitrary-precision rationals everywhere in this crate),
//! * [`quiver`] — quivers, paths, admissible relation ideals, chordless cycles,
//!   admissible cuts and presentation isomorphism,
//! * [`forms`] — Euler and Tits quadratic forms with exact positivity tests,
//! * [`repcat`] — explicit representations of Dynkin path algebras, Hom/Ext
//!   spaces, the Auslander-Reiten translate and knitting of all
//!   indecomposables,
//! * [`derived`] — the bounded derived category as the mesh category of the
//!   translation quiver ZQ: graded Hom spaces with composition, the functors
//!   tau, [1] and F, sections, tilting complexes,
//! * [`endoalg`] — endomorphism algebras of complexes as concrete algebras,
//!   presentation extraction, global dimension, relation extensions and the
//!   graded projection pi,
//! * [`rolling`] — the rolling operation on tilting complexes and its iteration
//!   down to a tilted algebra,
//! * [`dynkincut`] — relation synthesis for Dynkin cluster-tilted quivers,
//!   admissible-cut realization and the iterated-tilted decision pipeline.

pub mod error;
pub mod exactlin;
pub mod pathalg;
pub mod quiver;

/// The exact scalar used by every algebraic computation in this crate.
pub type Rat = num_rational::BigRational;

/// Matrices over [`Rat`].
pub type RatMatrix = exactlin::Mat<Rat>;

pub use error::Error;

/// Shorthand for `Rat::from_integer(n.into())`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
