//! Memoized exact generation of every sequence the crate works with: the
//! central sequence `U_n`, Euler numbers `E_n`, Bernoulli numbers `B_n`,
//! Bernoulli/Euler polynomials at rational arguments, the Lucas-type `V_m`,
//! and the Newton-recurrence companion `a_n`.

use crate::exactnum::{binomial, rat_int, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::RwLock;

/// Default ceiling on sequence indices; generation cost is quadratic in the
/// index, so the budget is a guard against runaway sweeps, not a soft limit.
pub const DEFAULT_MAX_INDEX: usize = 500;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("n = {n} does not divide the Newton sum {sum} (companion integrality violated)")]
    IntegralityViolation { n: usize, sum: Int },
}

#[derive(Default)]
struct Tables {
    u: Vec<Int>,
    euler: Vec<Int>,
    bernoulli: Vec<Rat>,
    v: Vec<Int>,
    a: Vec<Int>, // a[0] unused; a[n] is the companion value for n >= 1
    euler_poly: HashMap<Rat, Vec<Rat>>,
}

/// Append-only memo store for all sequences. Interior mutability is a single
/// reader-writer lock: concurrent readers share warmed tables, and a miss
/// upgrades to the writer side to extend them. All values are immutable once
/// computed, so checks running in parallel over a shared store are safe.
pub struct SeqStore {
    max_index: usize,
    tables: RwLock<Tables>,
}

impl Default for SeqStore {
    fn default() -> Self {
        Self::new()
    }
}

impl SeqStore {
    pub fn new() -> Self {
        Self::with_max_index(DEFAULT_MAX_INDEX)
    }

    pub fn with_max_index(max_index: usize) -> Self {
        SeqStore { max_index, tables: RwLock::new(Tables::default()) }
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    fn check_budget(&self, n: usize) {
        assert!(
            n <= self.max_index,
            "index {n} exceeds the configured maximum {}; construct the store with a larger budget",
            self.max_index
        );
    }

    /// U_n: U_0 = 1, U_n = -2 sum_{k=1}^{[n/2]} C(n,2k) U_{n-2k}; zero at odd n.
    pub fn u(&self, n: usize) -> Int {
        self.check_budget(n);
        if n % 2 == 1 {
            return Int::zero();
        }
        {
            let t = self.tables.read().unwrap();
            if n < t.u.len() {
                return t.u[n].clone();
            }
        }
        let mut t = self.tables.write().unwrap();
        fill_u(&mut t.u, n);
        t.u[n].clone()
    }

    /// Euler numbers: E_0 = 1, E_n = -sum_{k=1}^{[n/2]} C(n,2k) E_{n-2k}.
    pub fn euler_number(&self, n: usize) -> Int {
        self.check_budget(n);
        if n % 2 == 1 {
            return Int::zero();
        }
        {
            let t = self.tables.read().unwrap();
            if n < t.euler.len() {
                return t.euler[n].clone();
            }
        }
        let mut t = self.tables.write().unwrap();
        fill_euler(&mut t.euler, n);
        t.euler[n].clone()
    }

    /// Bernoulli numbers from sum_{k<n} C(n,k) B_k = 0 (n >= 2), B_0 = 1.
    pub fn bernoulli_number(&self, n: usize) -> Rat {
        self.check_budget(n);
        {
            let t = self.tables.read().unwrap();
            if n < t.bernoulli.len() {
                return t.bernoulli[n].clone();
            }
        }
        let mut t = self.tables.write().unwrap();
        fill_bernoulli(&mut t.bernoulli, n);
        t.bernoulli[n].clone()
    }

    /// B_n(x) = sum_k C(n,k) B_k x^{n-k}, evaluated exactly (Horner form).
    pub fn bernoulli_poly(&self, n: usize, x: &Rat) -> Rat {
        self.check_budget(n);
        //  Horner in x over coefficients C(n,k) B_k, k = 0..n
        let mut acc = Rat::zero();
        for k in 0..=n {
            acc = acc * x + Rat::from_integer(binomial(n as i64, k as i64)) * self.bernoulli_number(k);
        }
        acc
    }

    /// E_n(x) from the rearranged defining relation
    /// E_n(x) = x^n - (1/2) sum_{r<n} C(n,r) E_r(x), memoized per argument.
    pub fn euler_poly(&self, n: usize, x: &Rat) -> Rat {
        self.check_budget(n);
        {
            let t = self.tables.read().unwrap();
            if let Some(tab) = t.euler_poly.get(x) {
                if n < tab.len() {
                    return tab[n].clone();
                }
            }
        }
        let mut t = self.tables.write().unwrap();
        let tab = t.euler_poly.entry(x.clone()).or_default();
        fill_euler_poly(tab, n, x);
        tab[n].clone()
    }

    /// V_0 = 2, V_1 = 1, V_{m+1} = V_m - 7 V_{m-1}.
    pub fn lucas_v(&self, m: usize) -> Int {
        self.check_budget(m);
        {
            let t = self.tables.read().unwrap();
            if m < t.v.len() {
                return t.v[m].clone();
            }
        }
        let mut t = self.tables.write().unwrap();
        fill_v(&mut t.v, m);
        t.v[m].clone()
    }

    /// Companion sequence from the Newton recurrence
    /// n a_n = U_{2n} + a_1 U_{2n-2} + ... + a_{n-1} U_2, a_1 = -2.
    /// The division by n must be exact; a remainder is reported, never
    /// truncated.
    pub fn companion_a(&self, n: usize) -> Result<Int, SequenceError> {
        assert!(n >= 1, "companion sequence starts at n = 1");
        self.check_budget(2 * n);
        {
            let t = self.tables.read().unwrap();
            if n < t.a.len() {
                return Ok(t.a[n].clone());
            }
        }
        let mut t = self.tables.write().unwrap();
        fill_u(&mut t.u, 2 * n);
        let Tables { u, a, .. } = &mut *t;
        fill_a(a, u, n)?;
        Ok(t.a[n].clone())
    }
}

fn fill_u(u: &mut Vec<Int>, n: usize) {
    if u.is_empty() {
        u.push(Int::one());
    }
    while u.len() <= n {
        let m = u.len();
        if m % 2 == 1 {
            u.push(Int::zero());
            continue;
        }
        let mut acc = Int::zero();
        for k in 1..=m / 2 {
            acc += binomial(m as i64, 2 * k as i64) * &u[m - 2 * k];
        }
        u.push(-2 * acc);
    }
}

fn fill_euler(e: &mut Vec<Int>, n: usize) {
    if e.is_empty() {
        e.push(Int::one());
    }
    while e.len() <= n {
        let m = e.len();
        if m % 2 == 1 {
            e.push(Int::zero());
            continue;
        }
        let mut acc = Int::zero();
        for k in 1..=m / 2 {
            acc += binomial(m as i64, 2 * k as i64) * &e[m - 2 * k];
        }
        e.push(-acc);
    }
}

fn fill_bernoulli(b: &mut Vec<Rat>, n: usize) {
    if b.is_empty() {
        b.push(Rat::one());
    }
    while b.len() <= n {
        let m = b.len();
        let mut acc = Rat::zero();
        for k in 0..m {
            acc += Rat::from_integer(binomial(m as i64 + 1, k as i64)) * &b[k];
        }
        let value = -acc / rat_int(m as i64 + 1);
        //  odd-index vanishing beyond B_1 is a consequence of the recurrence;
        //  keep it as a hard cross-check on the fill
        assert!(
            m < 3 || m % 2 == 0 || value.is_zero(),
            "Bernoulli recurrence produced nonzero B_{m}"
        );
        b.push(value);
    }
}

fn fill_euler_poly(tab: &mut Vec<Rat>, n: usize, x: &Rat) {
    if tab.is_empty() {
        tab.push(Rat::one());
    }
    while tab.len() <= n {
        let m = tab.len();
        let mut acc = Rat::zero();
        for r in 0..m {
            acc += Rat::from_integer(binomial(m as i64, r as i64)) * &tab[r];
        }
        let mut xp = Rat::one();
        for _ in 0..m {
            xp *= x;
        }
        tab.push(xp - acc / rat_int(2));
    }
}

fn fill_v(v: &mut Vec<Int>, m: usize) {
    if v.is_empty() {
        v.push(Int::from(2));
        v.push(Int::one());
    }
    while v.len() <= m {
        let k = v.len();
        let next = &v[k - 1] - 7 * &v[k - 2];
        v.push(next);
    }
}

fn fill_a(a: &mut Vec<Int>, u: &[Int], n: usize) -> Result<(), SequenceError> {
    if a.is_empty() {
        a.push(Int::zero()); // index 0 placeholder
        a.push(Int::from(-2));
    }
    while a.len() <= n {
        let m = a.len();
        let mut sum = u[2 * m].clone();
        for i in 1..m {
            sum += &a[i] * &u[2 * m - 2 * i];
        }
        let (q, r) = sum.div_rem(&Int::from(m as i64));
        if !r.is_zero() {
            return Err(SequenceError::IntegralityViolation { n: m, sum });
        }
        a.push(q);
    }
    Ok(())
}
