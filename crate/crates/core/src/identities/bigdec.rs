//! Fixed-scale decimal arithmetic and certified rational brackets for the
//! two irrational constants the series check needs (pi and sqrt 3).
//!
//! A [`ScaledDecimal`] is a signed big integer mantissa with a fixed decimal
//! scale: value = mantissa / 10^scale. Summation is exact on mantissas; the
//! only rounding happens when a term is floored into the scale, so a sum of
//! T terms carries at most T units of last-place error — budgeted explicitly
//! by callers.

use crate::exactnum::{pow_int, rat_int, Int, Rat};
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledDecimal {
    mantissa: Int,
    scale: u32,
}

impl ScaledDecimal {
    pub fn zero(scale: u32) -> Self {
        ScaledDecimal { mantissa: Int::zero(), scale }
    }

    /// Largest scale-representable value not exceeding `x`.
    pub fn from_rat_floor(x: &Rat, scale: u32) -> Self {
        let scaled = x * Rat::from_integer(pow_int(&Int::from(10), scale));
        ScaledDecimal { mantissa: scaled.floor().to_integer(), scale }
    }

    /// floor(10^scale / base^exp): one reciprocal power, floored into scale.
    pub fn recip_pow_floor(base: u64, exp: u32, scale: u32) -> Self {
        let num = pow_int(&Int::from(10), scale);
        let den = pow_int(&Int::from(base), exp);
        ScaledDecimal { mantissa: num.div_floor(&den), scale }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.scale, other.scale, "scale mismatch");
        self.mantissa += &other.mantissa;
    }

    pub fn sub_assign(&mut self, other: &Self) {
        assert_eq!(self.scale, other.scale, "scale mismatch");
        self.mantissa -= &other.mantissa;
    }

    pub fn to_rat(&self) -> Rat {
        Rat::new(self.mantissa.clone(), pow_int(&Int::from(10), self.scale))
    }

    /// Canonical fixed-point rendering with exactly `digits` fractional
    /// digits (truncated toward zero).
    pub fn decimal_string(&self, digits: u32) -> String {
        decimal_string(&self.to_rat(), digits)
    }
}

/// Render a rational as sign + fixed-point decimal with `digits` fractional
/// digits, truncated toward zero.
pub fn decimal_string(x: &Rat, digits: u32) -> String {
    let sign = if x.is_negative() { "-" } else { "" };
    let mag = x.abs();
    let scaled = (&mag * Rat::from_integer(pow_int(&Int::from(10), digits)))
        .floor()
        .to_integer();
    let base = pow_int(&Int::from(10), digits);
    let (ip, fp) = scaled.div_rem(&base);
    format!("{sign}{ip}.{fp:0>width$}", width = digits as usize)
}

/// Rational brackets for arctan(1/x), x >= 2, from consecutive partial sums
/// of the alternating series (which straddle the limit). The bracket width
/// is below `10^-(digits+5)`.
fn atan_recip_brackets(x: u64, digits: u32) -> (Rat, Rat) {
    let eps = Rat::new(Int::from(1), pow_int(&Int::from(10), digits + 5));
    let xi = Int::from(x);
    let mut sum = Rat::zero();
    let mut prev;
    let mut k = 0u32;
    loop {
        let term = Rat::new(Int::from(1), rat_int(2 * k as i64 + 1).to_integer() * pow_int(&xi, 2 * k + 1));
        prev = sum.clone();
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        if term < eps {
            break;
        }
        k += 1;
    }
    if sum <= prev {
        (sum, prev)
    } else {
        (prev, sum)
    }
}

/// Certified rational bracket (lo, hi) around pi with width below
/// `10^-(digits+4)`, from the Machin identity
/// pi = 16 arctan(1/5) - 4 arctan(1/239).
pub fn pi_brackets(digits: u32) -> (Rat, Rat) {
    let (a5_lo, a5_hi) = atan_recip_brackets(5, digits);
    let (a239_lo, a239_hi) = atan_recip_brackets(239, digits);
    let lo = rat_int(16) * &a5_lo - rat_int(4) * &a239_hi;
    let hi = rat_int(16) * &a5_hi - rat_int(4) * &a239_lo;
    (lo, hi)
}

/// Certified rational bracket around sqrt 3 with width 10^-digits, from the
/// integer square root of 3 * 10^(2 digits).
pub fn sqrt3_brackets(digits: u32) -> (Rat, Rat) {
    let r = (Int::from(3) * pow_int(&Int::from(10), 2 * digits)).sqrt();
    let den = pow_int(&Int::from(10), digits);
    (Rat::new(r.clone(), den.clone()), Rat::new(r + 1, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn brackets_are_tight_and_ordered() {
        let (lo, hi) = pi_brackets(50);
        assert!(lo < hi);
        let width = &hi - &lo;
        assert!(width < rat(1, 10i64.pow(18)) * rat(1, 10i64.pow(18)) * rat(1, 10i64.pow(18)));
        assert!(decimal_string(&lo, 30).starts_with("3.141592653589793238462643383279"));
        let (slo, shi) = sqrt3_brackets(50);
        assert!(slo < shi);
        assert!(decimal_string(&slo, 30).starts_with("1.732050807568877293527446341505"));
    }

    #[test]
    fn scaled_sum_matches_rational() {
        let mut s = ScaledDecimal::zero(40);
        for k in 1..=5u64 {
            s.add_assign(&ScaledDecimal::recip_pow_floor(k, 3, 40));
        }
        //  sum of 1/k^3, k = 1..5: compare against the exact value
        let exact: Rat = (1..=5i64).map(|k| rat(1, k * k * k)).sum();
        let err = (s.to_rat() - exact).abs();
        assert!(err < rat(6, 10i64.pow(18)) * rat(1, 10i64.pow(18)));
    }

    #[test]
    fn rendering() {
        assert_eq!(decimal_string(&rat(-22, 7), 6), "-3.142857");
        assert_eq!(decimal_string(&rat(1, 8), 4), "0.1250");
        assert_eq!(decimal_string(&rat_int(5), 2), "5.00");
        let d = ScaledDecimal::from_rat_floor(&rat(1, 3), 10);
        assert_eq!(d.decimal_string(10), "0.3333333333");
    }
}
