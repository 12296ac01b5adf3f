//! Helpers shared by the integration suites.
#![allow(dead_code)]

use usequence_core::exactnum::{Int, Prime, Rat};
use usequence_core::SeqStore;

pub fn primes_to(limit: u64) -> Vec<u64> {
    let mut sieve = vec![true; (limit + 1) as usize];
    let mut out = Vec::new();
    for n in 2..=limit {
        if sieve[n as usize] {
            out.push(n);
            let mut m = n * n;
            while m <= limit {
                sieve[m as usize] = false;
                m += n;
            }
        }
    }
    out
}

pub fn prime(p: u64) -> Prime {
    Prime::from_u64(p).unwrap()
}

/// Number of primitive reduced binary quadratic forms ax^2 + bxy + cy^2 of
/// discriminant d < 0: |b| <= a <= c, b = d (mod 2), gcd(a,b,c) = 1, and
/// b >= 0 whenever |b| = a or a = c. This is the form-class count, computed
/// without any character sums so it can referee the character-sum value.
pub fn reduced_form_count(d: i64) -> u64 {
    assert!(d < 0 && (d % 4 == 0 || d.rem_euclid(4) == 1));
    let mut count = 0;
    let mut a = 1i64;
    while a * a * 3 <= -d {
        for b in -a..=a {
            if (b - d) % 2 != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if (b == -a || a == c) && b < 0 {
                continue;
            }
            if gcd(gcd(a.unsigned_abs(), b.unsigned_abs()), c.unsigned_abs()) == 1 {
                count += 1;
            }
        }
        a += 1;
    }
    count
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Partition-sum reference: explicit enumeration over k_1 + 2k_2 + ... = n of
/// prod_i b_i^{k_i} / (i^{k_i} k_i!), exponential cost, for small n only.
pub fn partition_sum_by_enumeration(n: u64, b: &impl Fn(u64) -> Int) -> Rat {
    fn recurse(remaining: u64, max_part: u64, acc: &Rat, b: &impl Fn(u64) -> Int, total: &mut Rat) {
        if remaining == 0 {
            *total += acc;
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            let mut times = 0u64;
            let mut weight = acc.clone();
            let mut used = 0;
            while used + part <= remaining {
                used += part;
                times += 1;
                //  extend the accumulated product by one more copy of `part`
                weight = weight * Rat::new(b(part), Int::from(part) * Int::from(times));
                recurse(remaining - used, part - 1, &weight, b, total);
            }
        }
    }
    let mut total = Rat::new(Int::from(0), Int::from(1));
    recurse(n, n, &Rat::new(Int::from(1), Int::from(1)), b, &mut total);
    total
}

/// A store pre-filled up to `max_u_index`, shareable across parallel checks.
pub fn warmed_store(max_u_index: usize) -> SeqStore {
    let store = SeqStore::new();
    store.u(max_u_index);
    store
}
