//! Exact computations behind the Tits alternative for generalized triangle
//! groups ⟨x, y | x³ = y⁴ = w(x, y)² = 1⟩.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`algebra`]: rationals, the cyclotomic field Q(ζ₂₄), polynomials,
//!   2×2 matrices, dual numbers and Smith normal form;
//! * [`words`]: relator words x^{α₁}y^{β₁}⋯x^{α_k}y^{β_k}, their
//!   equivalence classes and enumeration;
//! * [`trace`]: exact trace polynomials with an identity-based oracle;
//! * [`groups`]: free-product normal forms, coset enumeration, low-index
//!   subgroups, Reidemeister–Schreier and Stallings foldings;
//! * [`certify`]: the case analysis as executable rules, ending in a
//!   [`certify::Verdict`] per word.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod certify;
pub mod groups;
pub mod trace;
pub mod words;
