//! Newton-Euler structure of {U_{2n}} and realizability of {(-1)^n U_{2n}}:
//! Mobius-sum divisibility, prime-power congruences, the integer c-sequence
//! with its inversion round-trip, the partition sum over k_1 + 2k_2 + ... =
//! n, and the almost-triangular determinant divided by n!.
//!
//! Every check is generic over the integer sequence b so that sequences
//! which are *not* Newton-Euler (negative controls) demonstrably fail.

use crate::exactnum::{factorial, mobius, Int, Rat, TruncatedSeries};

use crate::report::{params, ClaimReport};
use crate::sequences::SeqStore;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum NewtonEulerError {
    #[error("n = {n} does not divide the Mobius sum {raw_sum}")]
    IntegralityViolation { n: u64, raw_sum: Int },
    #[error("quotient at n = {n} is negative: {quotient}")]
    NegativityViolation { n: u64, quotient: Int },
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut t = 0;
            while n % p == 0 {
                n /= p;
                t += 1;
            }
            out.push((p, t));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The sum over d | n of mu(n/d) b_d, together with its quotient by n; the
/// integrality of the quotient is the claim under test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTransform {
    pub n: u64,
    pub raw_sum: Int,
    pub quotient: Int,
}

pub fn mobius_transform(
    n: u64,
    b: &impl Fn(u64) -> Int,
) -> Result<MobiusTransform, NewtonEulerError> {
    assert!(n >= 1);
    let mut raw_sum = Int::zero();
    for d in divisors(n) {
        raw_sum += Int::from(mobius(&Int::from(n / d))) * b(d);
    }
    let (quotient, rem) = raw_sum.div_rem(&Int::from(n));
    if !rem.is_zero() {
        return Err(NewtonEulerError::IntegralityViolation { n, raw_sum });
    }
    Ok(MobiusTransform { n, raw_sum, quotient })
}

/// n divides the Mobius sum of b over the divisors of n.
pub fn check_newton_euler(n: u64, b: &impl Fn(u64) -> Int) -> ClaimReport {
    assert!(n >= 1);
    let mut raw_sum = Int::zero();
    for d in divisors(n) {
        raw_sum += Int::from(mobius(&Int::from(n / d))) * b(d);
    }
    ClaimReport::divisibility(
        "lem5.1.ii",
        params([("n", n.to_string())]),
        &raw_sum,
        &Int::from(n),
    )
}

/// b_n = b_{n/p} (mod p^t) for every prime power p^t exactly dividing n.
pub fn check_prime_power_condition(n: u64, b: &impl Fn(u64) -> Int) -> ClaimReport {
    assert!(n >= 2);
    let bn = b(n);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut moduli = Vec::new();
    let mut pass = true;
    for (p, t) in factorize(n) {
        let pt = Int::from(p).pow(t);
        let reduced = b(n / p).mod_floor(&pt);
        pass &= bn.mod_floor(&pt) == reduced;
        lhs.push(bn.mod_floor(&pt).to_string());
        rhs.push(reduced.to_string());
        moduli.push(if t == 1 { p.to_string() } else { format!("{p}^{t}") });
    }
    ClaimReport::new(
        "lem5.1.iv",
        params([("n", n.to_string())]),
        Some(moduli.join(";")),
        lhs.join(";"),
        rhs.join(";"),
        pass,
    )
}

/// (1/n) sum_{d|n} mu(n/d) (-1)^d U_{2d}, which must be a nonnegative
/// integer for the sequence to count periodic points of some map.
pub fn realizability_quotient(store: &SeqStore, n: u64) -> Result<Int, NewtonEulerError> {
    let b = |d: u64| {
        let u = store.u(2 * d as usize);
        if d % 2 == 0 {
            u
        } else {
            -u
        }
    };
    let t = mobius_transform(n, &b)?;
    if t.quotient.is_negative() {
        return Err(NewtonEulerError::NegativityViolation { n, quotient: t.quotient });
    }
    Ok(t.quotient)
}

/// c_n from Mobius inversion of b_n = sum_{d|n} d c_d; the round-trip back
/// to b_n is asserted.
pub fn c_sequence(n: u64, b: &impl Fn(u64) -> Int) -> Result<Int, NewtonEulerError> {
    let c_of = |d: u64| mobius_transform(d, b).map(|t| t.quotient);
    let cn = c_of(n)?;
    let mut round_trip = Int::zero();
    for d in divisors(n) {
        round_trip += Int::from(d) * c_of(d)?;
    }
    assert_eq!(round_trip, b(n), "Mobius inversion round-trip must reproduce b_{n}");
    Ok(cn)
}

/// The partition sum over k_1 + 2k_2 + ... + nk_n = n of
/// prod b_i^{k_i} / (i^{k_i} k_i!) is an integer; computed as the t^n
/// coefficient of exp(sum_k b_k t^k / k).
pub fn check_partition_sum(n: u64, b: &impl Fn(u64) -> Int) -> ClaimReport {
    assert!(n >= 1);
    let series = TruncatedSeries::from_fn(n as usize, |k| {
        if k == 0 {
            Rat::zero()
        } else {
            Rat::new(b(k as u64), Int::from(k))
        }
    });
    let value = series
        .exp()
        .expect("constant term is zero by construction")
        .coeff(n as usize)
        .clone();
    let pass = value.is_integer();
    ClaimReport::new(
        "lem5.1.vi",
        params([("n", n.to_string())]),
        None,
        crate::exactnum::render_rat(&value),
        "integer",
        pass,
    )
}

/// Exact determinant by fraction-free elimination (all intermediate
/// divisions are exact), with row pivoting and sign tracking.
fn bareiss_determinant(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num: Int = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free step must divide exactly");
                m[i][j] = q;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// n! divides the determinant of the almost-triangular matrix with first
/// row b_1..b_n, b-diagonals above, and subdiagonal -1, -2, ..., -(n-1).
pub fn check_determinant(n: u64, b: &impl Fn(u64) -> Int) -> ClaimReport {
    assert!(n >= 1);
    let size = n as usize;
    let mut m = vec![vec![Int::zero(); size]; size];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if j >= i {
                *cell = b((j - i + 1) as u64);
            } else if j + 1 == i {
                *cell = -Int::from(i);
            }
        }
    }
    let det = bareiss_determinant(m);
    ClaimReport::divisibility(
        "lem5.1.vii",
        params([("n", n.to_string())]),
        &det,
        &factorial(n),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn u_seq(store: &SeqStore) -> impl Fn(u64) -> Int + '_ {
        |d| store.u(2 * d as usize)
    }

    #[test]
    fn divisor_and_factor_helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn mobius_sums_on_u() {
        let store = SeqStore::new();
        let b = u_seq(&store);
        let r = check_newton_euler(1, &b);
        assert!(r.pass);
        assert_eq!(r.lhs, "-2");
        let r = check_newton_euler(2, &b);
        assert!(r.pass);
        assert_eq!(r.lhs, "24");
        assert!(check_newton_euler(12, &b).pass);
    }

    #[test]
    fn prime_power_condition_on_u() {
        let store = SeqStore::new();
        let b = u_seq(&store);
        let r = check_prime_power_condition(4, &b);
        assert!(r.pass);
        assert_eq!(r.modulus.as_deref(), Some("2^2"));
        assert!(check_prime_power_condition(9, &b).pass);
        let r = check_prime_power_condition(6, &b);
        assert!(r.pass);
        assert_eq!(r.modulus.as_deref(), Some("2;3"));
    }

    #[test]
    fn realizability_values() {
        let store = SeqStore::new();
        assert_eq!(realizability_quotient(&store, 1).unwrap(), int(2));
        assert_eq!(realizability_quotient(&store, 2).unwrap(), int(10));
        assert_eq!(realizability_quotient(&store, 5).unwrap(), int(504600));
    }

    #[test]
    fn c_values_and_round_trip() {
        let store = SeqStore::new();
        let b = u_seq(&store);
        assert_eq!(c_sequence(1, &b).unwrap(), int(-2));
        assert_eq!(c_sequence(2, &b).unwrap(), int(12));
        for n in 1..=20 {
            c_sequence(n, &b).unwrap();
        }
    }

    #[test]
    fn partition_sums_on_u() {
        let store = SeqStore::new();
        let b = u_seq(&store);
        let r = check_partition_sum(2, &b);
        assert!(r.pass);
        assert_eq!(r.lhs, "13");
        assert!(check_partition_sum(10, &b).pass);
    }

    #[test]
    fn determinants_on_u() {
        let store = SeqStore::new();
        let b = u_seq(&store);
        let r = check_determinant(1, &b);
        assert!(r.pass);
        assert_eq!(r.lhs, "-2");
        let r = check_determinant(2, &b);
        assert!(r.pass);
        assert_eq!(r.lhs, "26");
        assert!(check_determinant(8, &b).pass);
    }

    #[test]
    fn linear_control_fails() {
        let b = |d: u64| Int::from(d + 1);
        for n in 2..=6 {
            assert!(!check_newton_euler(n, &b).pass, "n={n}");
        }
        assert!(matches!(
            mobius_transform(2, &b),
            Err(NewtonEulerError::IntegralityViolation { .. })
        ));
    }
}
