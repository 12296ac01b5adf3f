//! Exact identities tying `U_n` to Euler/Bernoulli polynomials: the
//! generating function, the four-way closed form, the inversion formula,
//! pointwise polynomial identities, five recursions, a sign corollary, and
//! the high-precision alternating-series evaluation against pi.

pub mod bigdec;

use crate::exactnum::{
    binomial, pow_int, pow_rat, rat_int, render_rat, Int, Rat, TruncatedSeries,
};
use crate::report::{params, ClaimReport};
use crate::sequences::SeqStore;
use bigdec::{decimal_string, pi_brackets, sqrt3_brackets, ScaledDecimal};
use num_traits::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum IdentityError {
    #[error("precision of {digits} digits is too low for the requested tolerance (need >= 30)")]
    PrecisionTooLow { digits: u32 },
}

/// The standard sample grid for the pointwise polynomial identities: the 41
/// integers -20..=20 plus two non-integer rationals, 43 points in all.
pub fn default_sample_points() -> Vec<Rat> {
    let mut points: Vec<Rat> = (-20..=20).map(rat_int).collect();
    points.push(Rat::new(Int::from(1), Int::from(2)));
    points.push(Rat::new(Int::from(5), Int::from(7)));
    points
}

/// The reciprocal of `e^t + e^{-t} - 1` has exponential generating
/// coefficients `U_n / n!`: multiply back and demand the constant series 1.
pub fn check_generating_function(store: &SeqStore, order: usize) -> ClaimReport {
    assert!(order >= 1);
    let u_egf = TruncatedSeries::from_fn(order, |n| {
        Rat::new(store.u(n), crate::exactnum::factorial(n as u64))
    });
    let cosh_like = TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            Rat::one()
        } else if n % 2 == 0 {
            Rat::new(Int::from(2), crate::exactnum::factorial(n as u64))
        } else {
            Rat::zero()
        }
    });
    let product = cosh_like.mul(&u_egf).expect("orders match");
    let deviation = (0..=order).find(|&k| {
        let want = if k == 0 { Rat::one() } else { Rat::zero() };
        product.coeff(k) != &want
    });
    let lhs = match deviation {
        None => "1".to_string(),
        Some(k) => format!("1 + deviation at t^{k}: {}", render_rat(product.coeff(k))),
    };
    ClaimReport::new(
        "lem2.1",
        params([("order", order.to_string())]),
        None,
        lhs,
        "1",
        deviation.is_none(),
    )
}

/// Four-way equality for U_{2n}: the Euler-polynomial form and both
/// Bernoulli-polynomial forms must reproduce the recurrence value exactly.
pub fn check_thm21(store: &SeqStore, n: usize) -> ClaimReport {
    assert!(n >= 1);
    let two_n = 2 * n;
    let q1 = Rat::from_integer(store.u(two_n));
    let q2 = pow_rat(&rat_int(3), two_n as u32) * store.euler_poly(two_n, &Rat::new(1.into(), 3.into()));
    let c = Rat::from_integer(pow_int(&Int::from(2), two_n as u32 + 1) + 1);
    let q3 = rat_int(-2) * &c * pow_rat(&rat_int(3), two_n as u32)
        * store.bernoulli_poly(two_n + 1, &Rat::new(1.into(), 3.into()))
        / rat_int(two_n as i64 + 1);
    let q4 = rat_int(-2) * &c * pow_rat(&rat_int(6), two_n as u32)
        / Rat::from_integer(pow_int(&Int::from(2), two_n as u32) + 1)
        * store.bernoulli_poly(two_n + 1, &Rat::new(1.into(), 6.into()))
        / rat_int(two_n as i64 + 1);
    let pass = q1 == q2 && q2 == q3 && q3 == q4;
    ClaimReport::new(
        "thm2.1",
        params([("n", n.to_string())]),
        None,
        render_rat(&q1),
        format!("{};{};{}", render_rat(&q2), render_rat(&q3), render_rat(&q4)),
        pass,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InversionDirection {
    /// Treat the input as the a-sequence: derive b, invert, compare to a.
    Forward,
    /// Treat the input as the b-sequence: derive a, map back, compare to b.
    Reverse,
}

impl std::fmt::Display for InversionDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InversionDirection::Forward => write!(f, "forward"),
            InversionDirection::Reverse => write!(f, "reverse"),
        }
    }
}

fn inversion_b_from_a(a: &[Rat]) -> Vec<Rat> {
    (0..a.len())
        .map(|n| {
            let mut acc = Rat::zero();
            for k in 0..=n / 2 {
                acc += Rat::from_integer(binomial(n as i64, 2 * k as i64)) * &a[n - 2 * k];
            }
            rat_int(2) * acc - &a[n]
        })
        .collect()
}

fn inversion_a_from_b(store: &SeqStore, b: &[Rat]) -> Vec<Rat> {
    (0..b.len())
        .map(|n| {
            let mut acc = Rat::zero();
            for k in 0..=n / 2 {
                acc += Rat::from_integer(binomial(n as i64, 2 * k as i64) * store.u(2 * k))
                    * &b[n - 2 * k];
            }
            acc
        })
        .collect()
}

/// Round-trip the inversion pair
/// `b_n = 2 sum C(n,2k) a_{n-2k} - a_n  <=>  a_n = sum C(n,2k) U_{2k} b_{n-2k}`
/// in the requested direction and compare against the input sequence.
pub fn check_inversion(store: &SeqStore, seq: &[Rat], direction: InversionDirection) -> ClaimReport {
    let round_trip = match direction {
        InversionDirection::Forward => inversion_a_from_b(store, &inversion_b_from_a(seq)),
        InversionDirection::Reverse => inversion_b_from_a(&inversion_a_from_b(store, seq)),
    };
    let render = |v: &[Rat]| v.iter().map(render_rat).collect::<Vec<_>>().join(";");
    ClaimReport::new(
        "thm2.2",
        params([
            ("len", seq.len().to_string()),
            ("direction", direction.to_string()),
        ]),
        None,
        render(&round_trip),
        render(seq),
        round_trip == seq,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm23Variant {
    I,
    II,
    III,
}

impl std::fmt::Display for Thm23Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Thm23Variant::I => write!(f, "i"),
            Thm23Variant::II => write!(f, "ii"),
            Thm23Variant::III => write!(f, "iii"),
        }
    }
}

/// Pointwise polynomial identity at a rational sample point. Each variant
/// pairs a weight `w(m)` applied to the exponent `m = n - 2k` inside
/// `sum_k C(n,2k) U_{2k} w(n-2k)` with its closed right-hand side.
pub fn check_thm23(store: &SeqStore, n: usize, x: &Rat, variant: Thm23Variant) -> ClaimReport {
    let pw = |base: &Rat, m: usize| pow_rat(base, m as u32);
    let weighted_sum = |w: &dyn Fn(usize) -> Rat| {
        let mut acc = Rat::zero();
        for k in 0..=n / 2 {
            let c = binomial(n as i64, 2 * k as i64) * store.u(2 * k);
            if !c.is_zero() {
                acc += Rat::from_integer(c) * w(n - 2 * k);
            }
        }
        acc
    };
    let shift = |d: i64| x + rat_int(d);
    let (lhs, rhs) = match variant {
        Thm23Variant::I => (
            weighted_sum(&|m| pw(&shift(-1), m) - pw(x, m) + pw(&shift(1), m)),
            pw(x, n),
        ),
        Thm23Variant::II => (
            weighted_sum(&|m| pw(x, m) + pw(&shift(3), m)),
            pw(&shift(1), n) + pw(&shift(2), n),
        ),
        Thm23Variant::III => (
            weighted_sum(&|m| pw(&shift(3), m) - pw(&shift(-3), m)),
            pw(&shift(2), n) + pw(&shift(1), n) - pw(&shift(-1), n) - pw(&shift(-2), n),
        ),
    };
    ClaimReport::new(
        format!("thm2.3.{variant}"),
        params([("n", n.to_string()), ("x", render_rat(x))]),
        None,
        render_rat(&lhs),
        render_rat(&rhs),
        lhs == rhs,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm24Variant {
    I,
    II,
    III,
    IV,
    V,
}

impl std::fmt::Display for Thm24Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Thm24Variant::I => "i",
            Thm24Variant::II => "ii",
            Thm24Variant::III => "iii",
            Thm24Variant::IV => "iv",
            Thm24Variant::V => "v",
        };
        write!(f, "{s}")
    }
}

/// The five recursion identities; (v) consumes the Lucas-type sequence V.
pub fn check_thm24(store: &SeqStore, n: usize, variant: Thm24Variant) -> ClaimReport {
    assert!(n >= 1);
    let ipow = |b: i64, e: usize| pow_int(&Int::from(b), e as u32);
    let (lhs, rhs) = match variant {
        Thm24Variant::I => {
            let mut acc = Rat::zero();
            for k in 0..=n / 2 {
                acc += Rat::from_integer(
                    binomial(n as i64, 2 * k as i64) * (ipow(2, n - 2 * k) - 1) * store.u(2 * k),
                );
            }
            (acc, Rat::from_integer(Int::one() - store.u(n)))
        }
        Thm24Variant::II => {
            let mut acc = Rat::zero();
            for k in 0..=(n - 1) / 2 {
                acc += Rat::from_integer(
                    binomial(n as i64, 2 * k as i64) * ipow(6, n - 2 * k) * store.u(2 * k),
                );
            }
            (
                acc,
                Rat::from_integer(ipow(5, n) + ipow(4, n) - ipow(2, n) - 1),
            )
        }
        Thm24Variant::III => {
            let mut acc = Rat::from_integer(Int::one() + ipow(2, 2 * n));
            for k in 0..=n {
                acc -= Rat::from_integer(
                    binomial(2 * n as i64, 2 * k as i64) * ipow(3, 2 * n - 2 * k) * store.u(2 * k),
                );
            }
            (Rat::from_integer(store.u(2 * n)), acc)
        }
        Thm24Variant::IV => {
            let mut acc = Rat::from_integer(Int::from(2) * ipow(-1, n));
            for k in 1..=n / 2 {
                acc -= rat_int(4)
                    * Rat::from_integer(
                        binomial(2 * n as i64, 4 * k as i64)
                            * (pow_int(&Int::from(-4), k as u32) - 1)
                            * store.u(2 * n - 4 * k),
                    );
            }
            (Rat::from_integer(store.u(2 * n)), acc)
        }
        Thm24Variant::V => {
            let mut acc = Rat::from_integer(ipow(4, n - 1))
                + Rat::new(Int::one() + store.lucas_v(2 * n), Int::from(4));
            for k in 1..=n / 3 {
                acc -= Rat::new(Int::from(3), Int::from(4))
                    * Rat::from_integer(
                        binomial(2 * n as i64, 6 * k as i64)
                            * ipow(3, 6 * k)
                            * store.u(2 * n - 6 * k),
                    );
            }
            (Rat::from_integer(store.u(2 * n)), acc)
        }
    };
    ClaimReport::new(
        format!("thm2.4.{variant}"),
        params([("n", n.to_string())]),
        None,
        render_rat(&lhs),
        render_rat(&rhs),
        lhs == rhs,
    )
}

/// Sign alternation: (-1)^n U_{2n} is strictly positive.
pub fn check_cor21(store: &SeqStore, n: usize) -> ClaimReport {
    assert!(n >= 1);
    let v = store.u(2 * n) * pow_int(&Int::from(-1), n as u32);
    let lhs = if v.is_positive() {
        "positive"
    } else if v.is_zero() {
        "zero"
    } else {
        "negative"
    };
    ClaimReport::new(
        "cor2.1",
        params([("n", n.to_string())]),
        None,
        lhs,
        "positive",
        v.is_positive(),
    )
}

/// Numeric data carried alongside the thm2.5 claim report.
#[derive(Debug, Clone)]
pub struct SeriesComparison {
    pub report: ClaimReport,
    pub residual: Rat,
    pub tolerance: Rat,
}

/// Compare the partial sum of `sum_k (1/(6k+1)^{2n+1} - 1/(6k+5)^{2n+1})`
/// against the closed form `(-1)^n U_{2n} pi^{2n+1} / (2 sqrt3 3^{2n} (2n)!)`.
///
/// Everything is certified: the partial sum is a floored fixed-scale decimal
/// with a counted error budget, pi and sqrt 3 enter as rational brackets, and
/// the reported residual is an upper bound on the true |LHS - RHS|. The
/// tolerance is the telescoped tail bound `1/(6T+1)^{2n+1}` plus a
/// `10^-(digits-10)` rounding allowance.
pub fn check_thm25(
    store: &SeqStore,
    n: usize,
    terms: u64,
    digits: u32,
) -> Result<SeriesComparison, IdentityError> {
    assert!(n >= 1);
    assert!(terms >= 10, "at least ten terms are required");
    if digits < 30 {
        return Err(IdentityError::PrecisionTooLow { digits });
    }
    let scale = digits + 10;
    let exp = 2 * n as u32 + 1;

    let mut partial = ScaledDecimal::zero(scale);
    for k in 0..terms {
        partial.add_assign(&ScaledDecimal::recip_pow_floor(6 * k + 1, exp, scale));
        partial.sub_assign(&ScaledDecimal::recip_pow_floor(6 * k + 5, exp, scale));
    }
    let partial_rat = partial.to_rat();
    //  2T floored terms: the true partial sum lies within 2T ulps
    let sum_slack = Rat::new(Int::from(2 * terms), pow_int(&Int::from(10), scale));

    //  closed form as a rational multiple of pi^{2n+1} / sqrt3
    let coeff = Rat::new(
        pow_int(&Int::from(-1), n as u32) * store.u(2 * n),
        Int::from(2) * pow_int(&Int::from(3), 2 * n as u32) * crate::exactnum::factorial(2 * n as u64),
    );
    assert!(coeff.is_positive(), "sign alternation feeds the bracket direction");
    let (pi_lo, pi_hi) = pi_brackets(scale);
    let (s3_lo, s3_hi) = sqrt3_brackets(scale);
    let closed_lo = &coeff * pow_rat(&pi_lo, exp) / &s3_hi;
    let closed_hi = &coeff * pow_rat(&pi_hi, exp) / &s3_lo;

    let residual = (&partial_rat - &closed_lo)
        .abs()
        .max((&partial_rat - &closed_hi).abs())
        + sum_slack;
    let tail = Rat::new(Int::one(), pow_int(&Int::from(6 * terms + 1), exp));
    let tolerance = tail + Rat::new(Int::one(), pow_int(&Int::from(10), digits - 10));
    let pass = residual <= tolerance;

    let closed_mid = (&closed_lo + &closed_hi) / rat_int(2);
    let report = ClaimReport::new(
        "thm2.5",
        params([
            ("n", n.to_string()),
            ("terms", terms.to_string()),
            ("digits", digits.to_string()),
            ("residual", decimal_string(&residual, digits)),
            ("tolerance", decimal_string(&tolerance, digits)),
        ]),
        None,
        decimal_string(&partial_rat, digits),
        decimal_string(&closed_mid, digits),
        pass,
    );
    Ok(SeriesComparison { report, residual, tolerance })
}
