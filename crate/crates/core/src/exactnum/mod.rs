//! Exact scalar arithmetic: big integers, canonical rationals, p-adic
//! valuation, residue reduction, Kronecker symbols, the Mobius function,
//! binomials, and truncated formal power series.

mod primality;
mod series;

pub use primality::is_prime;
pub use series::{SeriesError, TruncatedSeries};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Exact rational; always stored reduced with positive denominator
/// (guaranteed by the `BigRational` constructors).
pub type Rat = BigRational;

/// Shorthand constructors used throughout the crate.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Render a rational canonically: plain decimal when integral, `num/den`
/// otherwise.
pub fn render_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExactnumError {
    #[error("denominator of {value} is not invertible modulo {modulus}")]
    DenominatorNotInvertible { value: String, modulus: String },
    #[error("{0} is not prime")]
    NotPrime(String),
}

/// A p-adic valuation: finite, or infinite (the valuation of zero).
///
/// The derived ordering places every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    /// True when the valuation is at least `e` (always true for `Infinite`).
    pub fn at_least(self, e: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= e,
            Valuation::Infinite => true,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// A certified prime: construction runs a deterministic Miller-Rabin test
/// (exact for all candidates below 3.3e24, far beyond any sweep here).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(Int);

impl Prime {
    pub fn new(p: Int) -> Result<Self, ExactnumError> {
        if is_prime(&p) {
            Ok(Prime(p))
        } else {
            Err(ExactnumError::NotPrime(p.to_string()))
        }
    }

    pub fn from_u64(p: u64) -> Result<Self, ExactnumError> {
        Self::new(Int::from(p))
    }

    pub fn get(&self) -> &Int {
        &self.0
    }

    /// The prime as a `u64`; every sweep in this crate stays far below that.
    pub fn to_u64(&self) -> u64 {
        self.0.to_u64().expect("prime exceeds u64 range")
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A modulus of the form p^e with p prime and e >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerModulus {
    p: Prime,
    e: u32,
}

impl PrimePowerModulus {
    pub fn new(p: Prime, e: u32) -> Self {
        assert!(e >= 1, "exponent must be at least 1");
        PrimePowerModulus { p, e }
    }

    pub fn prime(&self) -> &Prime {
        &self.p
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    /// The numeric modulus p^e.
    pub fn modulus(&self) -> Int {
        pow_int(self.p.get(), self.e)
    }
}

impl std::fmt::Display for PrimePowerModulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.e == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.e)
        }
    }
}

/// A residue in `[0, p^e)` together with its modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    value: Int,
    modulus: PrimePowerModulus,
}

impl Residue {
    pub fn new(value: Int, modulus: PrimePowerModulus) -> Self {
        let value = value.mod_floor(&modulus.modulus());
        Residue { value, modulus }
    }

    pub fn value(&self) -> &Int {
        &self.value
    }

    pub fn modulus(&self) -> &PrimePowerModulus {
        &self.modulus
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// x^e for big-integer x with small exponent.
pub fn pow_int(x: &Int, e: u32) -> Int {
    let mut acc = Int::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// x^e for rational x with small exponent.
pub fn pow_rat(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// p-adic valuation of a nonzero integer.
fn ord_p_raw(n: &Int, p: &Int) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if r.is_zero() {
            v += 1;
            m = q;
        } else {
            return v;
        }
    }
}

/// p-adic valuation of an integer, `Infinite` for zero.
pub fn ord_p_int(n: &Int, p: &Prime) -> Valuation {
    if n.is_zero() {
        Valuation::Infinite
    } else {
        Valuation::Finite(ord_p_raw(n, p.get()))
    }
}

/// p-adic valuation of a rational, extended as ord(num) - ord(den);
/// `Infinite` for zero.
pub fn ord_p(x: &Rat, p: &Prime) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let vn = ord_p_raw(x.numer(), p.get());
    let vd = ord_p_raw(x.denom(), p.get());
    Valuation::Finite(vn - vd)
}

/// Modular inverse of `a` mod `m`, when gcd(a, m) = 1.
pub fn inv_mod(a: &Int, m: &Int) -> Option<Int> {
    let g = a.extended_gcd(m);
    if g.gcd.is_one() {
        Some(g.x.mod_floor(m))
    } else {
        None
    }
}

/// Reduce a rational to its residue mod p^e; the denominator must be prime
/// to p. Two rationals are congruent mod p^e exactly when their reductions
/// agree (see [`rats_congruent`] for the valuation form that also covers
/// non-reducible inputs).
pub fn reduce_mod(x: &Rat, m: &PrimePowerModulus) -> Result<Residue, ExactnumError> {
    let md = m.modulus();
    let inv = inv_mod(&x.denom().mod_floor(&md), &md).ok_or_else(|| {
        ExactnumError::DenominatorNotInvertible {
            value: render_rat(x),
            modulus: m.to_string(),
        }
    })?;
    let value = (x.numer().mod_floor(&md) * inv).mod_floor(&md);
    Ok(Residue { value, modulus: m.clone() })
}

/// Congruence of rationals mod p^e, defined as ord_p(x - y) >= e. This is
/// total: sides with negative valuation simply compare unequal to p-integral
/// ones, so degenerate claims evaluate to `false` instead of erroring.
pub fn rats_congruent(x: &Rat, y: &Rat, m: &PrimePowerModulus) -> bool {
    ord_p(&(x - y), m.prime()).at_least(m.exponent() as i64)
}

/// Render one side of a congruence: the residue when the value is reducible,
/// a `non-integral(ord=v)` marker otherwise.
pub fn render_mod(x: &Rat, m: &PrimePowerModulus) -> String {
    match reduce_mod(x, m) {
        Ok(r) => r.value().to_string(),
        Err(_) => format!("non-integral(ord={})", ord_p(x, m.prime())),
    }
}

/// Kronecker symbol (a|n), the full extension of the Legendre-Jacobi symbol:
/// (a|0) is 1 only for a = +-1; (a|2) follows the 8-periodic rule; negative
/// lower arguments use (a|-1) = sign(a).
pub fn kronecker(a: &Int, n: &Int) -> i32 {
    if n.is_zero() {
        return if a.magnitude().is_one() { 1 } else { 0 };
    }
    let mut a = a.clone();
    let mut n = n.clone();
    let mut result = 1i32;
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            result = -1;
        }
    }
    //  factor out (a|2) for each power of two in n
    let two = int(2);
    while n.is_even() {
        n = &n / &two;
        match kronecker_two(&a) {
            0 => return 0,
            s => result *= s,
        }
    }
    if n.is_one() {
        return result;
    }
    //  Jacobi symbol for odd n > 1 via reciprocity
    a = a.mod_floor(&n);
    while !a.is_zero() {
        while a.is_even() {
            a = &a / &two;
            let n_mod8 = (&n % 8u32).to_u8().unwrap();
            if n_mod8 == 3 || n_mod8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u8().unwrap() == 3 && (&n % 4u32).to_u8().unwrap() == 3 {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// (a|2): 0 for even a, +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8).
fn kronecker_two(a: &Int) -> i32 {
    if a.is_even() {
        0
    } else {
        match (a % 8u32).mod_floor(&int(8)).to_u8().unwrap() {
            1 | 7 => 1,
            _ => -1,
        }
    }
}

/// Mobius function of a positive integer, by trial-division factorization.
pub fn mobius(n: &Int) -> i32 {
    assert!(n.is_positive(), "mobius requires n >= 1");
    let mut m = n.to_u64().expect("mobius argument exceeds u64 range");
    let mut result = 1i32;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

/// Exact binomial coefficient; 0 outside the range 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> Int {
    assert!(n >= 0, "binomial requires n >= 0");
    if k < 0 || k > n {
        return Int::zero();
    }
    let k = k.min(n - k) as u64;
    let mut acc = Int::one();
    for i in 1..=k {
        acc = acc * Int::from(n as u64 - k + i) / Int::from(i);
    }
    acc
}

/// Exact factorial.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}
