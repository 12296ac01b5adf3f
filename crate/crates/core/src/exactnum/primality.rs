//! Deterministic Miller-Rabin primality testing.

use super::Int;
use num_integer::Integer;
use num_traits::One;

/// Witness set that makes Miller-Rabin exact for all n < 3.317e24
/// (Sorenson-Webster); every modulus used by this crate is far smaller.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: &Int) -> bool {
    let two = Int::from(2);
    if n < &two {
        return false;
    }
    for w in WITNESSES {
        let w = Int::from(w);
        if n == &w {
            return true;
        }
        if n.is_multiple_of(&w) {
            return false;
        }
    }
    //  n - 1 = d * 2^s with d odd
    let n_minus_1: Int = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    'witness: for w in WITNESSES {
        let mut x = Int::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_trial_division_below_10000() {
        let trial = |n: u64| n > 1 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0u64..10_000 {
            assert_eq!(is_prime(&Int::from(n)), trial(n), "disagree at {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        //  strong pseudoprimes to base 2
        for n in [2047u64, 3277, 4033, 8321, 65281] {
            assert!(!is_prime(&Int::from(n)), "{n} accepted");
        }
        assert!(is_prime(&Int::from(2u64.pow(61) - 1))); // Mersenne
    }
}
