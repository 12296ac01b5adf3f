//! Exact-arithmetic toolkit for the even-index integer sequence defined by
//!
//! ```text
//! U_0 = 1,    U_n = -2 * sum_{k=1}^{[n/2]} C(n,2k) U_{n-2k}    (so U_odd = 0)
//! ```
//!
//! together with the classical companions it is entangled with: Euler numbers
//! and polynomials, Bernoulli numbers and polynomials, a Lucas-type sequence
//! `V_m`, and the Newton-recurrence companion `a_n`.
//!
//! The crate generates all of these exactly ([`sequences`]) and mechanically
//! verifies the identities, prime-power congruences, and structural claims
//! that hold for them:
//!
//! * [`identities`] — generating function, the four-way closed form for
//!   `U_{2n}`, an inversion formula, polynomial identities, recursions, and a
//!   high-precision alternating-series check against `pi`.
//! * [`congruences`] — class-number congruence for `U_{(p-1)/2}`,
//!   Fermat-quotient congruences mod `p^2`/`p^3`, and inverse-power-sum
//!   congruences mod `p`.
//! * [`p_regular`] — alternating-difference regularity of
//!   `(1 - (p|3) p^{k(p-1)+b}) U_{k(p-1)+b}`, multi-level congruences,
//!   polynomial fits mod `p^n`, and the 2-adic congruence family.
//! * [`newton_euler`] — Mobius-sum divisibility, prime-power conditions,
//!   partition/determinant integrality, and realizability quotients.
//!
//! Every check returns a [`report::ClaimReport`] with both sides rendered
//! canonically, so sweeps can be audited instance by instance.

pub mod congruences;
pub mod exactnum;
pub mod identities;
pub mod newton_euler;
pub mod p_regular;
pub mod report;
pub mod sequences;

pub use exactnum::{Int, Rat};
pub use report::ClaimReport;
pub use sequences::SeqStore;
