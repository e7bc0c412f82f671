//! Exact character-ring computations for classical Lie superalgebras.
//!
//! The crate builds root data for the gl, sl, osp, q and p families over
//! exact rationals, manipulates compatible positive systems via odd
//! reflections, decides dominance through base tracking, tests membership
//! in the ring cut out by the alternating β-string conditions, solves for
//! the short-basis elements b_λ, and decomposes ring elements against them.
//!
//! Everything is a pure function of immutable values; the library is safe
//! for concurrent read-only use and produces deterministic output.
//!
//! ```
//! use superchar::*;
//!
//! let datum = RootDatum::build(AlgebraDesc::parse("gl(2|1)")?)?;
//! let base = default_base(&datum, BaseKind::Mixed)?;
//! let forest = BaseForest::new(&datum, &base)?;
//!
//! let lam = datum.eps(0);
//! assert!(is_dominant_integrable_in(&datum, &forest, &lam)?);
//!
//! let b = compute_b_in(&datum, &forest, &lam)?;
//! assert_eq!(b.solution_dim, 0);
//! assert!(in_a(&datum, &b.element, Lattice::Full, false)?);
//!
//! let square = &b.element * &b.element;
//! let (coeffs, remainder) = decompose(&datum, &forest, &square)?;
//! assert!(remainder.is_zero());
//! assert!(!coeffs.is_empty());
//! # Ok::<(), Error>(())
//! ```

pub mod base;
pub mod cli;
pub mod cone;
pub mod datum;
pub mod dominance;
pub mod error;
pub mod json;
pub mod linalg;
pub mod rat;
pub mod short;
pub mod suite;
pub mod weight;
pub mod xi;

pub use base::{
    base_from_word, check_pr1, default_base, dynkin_diagram, enumerate_bases, is_mixed,
    odd_reflect, satisfies_coro_hypothesis, satisfies_pr2, word_of_base, Base, BaseForest,
    BaseKind, Diagram, NodeKind,
};
pub use datum::{AlgebraDesc, Family, Root, RootDatum};
pub use dominance::{
    enumerate_y, is_dominant_integrable, is_dominant_integrable_closed,
    is_dominant_integrable_closed_unchecked, is_dominant_integrable_in, track,
    track_highest_weight,
};
pub use error::Error;
pub use rat::Rat;
pub use short::{
    compute_b, compute_b_in, decompose, orbit_sum_b, verify_axioms, AxiomReport, ShortBasisElement,
};
pub use weight::Weight;
pub use xi::{
    ch_xi_c, ev_condition, gl11_character, in_a, in_a_psi, in_r, iota, is_w_invariant,
    recombine_psi, str_split, string_condition, sv_condition, symmetrize, Lattice, RingElement,
    Sign, StringViolation, XiCoeff, XI,
};
