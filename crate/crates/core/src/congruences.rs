//! Prime and prime-power congruences: the class-number congruence for
//! U_{(p-1)/2}, Fermat-quotient congruences mod p^2/p^3 with binomial
//! coefficients, and the inverse-power-sum congruences mod p.
//!
//! Left-hand sums are always evaluated term-by-term with modular inverses —
//! the sums are the claims, so no closed-form shortcut is taken. Right-hand
//! sides are exact rationals reduced at the end; a side whose denominator is
//! divisible by p renders as `non-integral(ord=v)` and compares unequal, so
//! degenerate instances fail cleanly instead of erroring.

use crate::exactnum::{
    binomial, int, inv_mod, kronecker, ord_p, pow_int, rat_int, rats_congruent,
    render_mod, Int, Prime, PrimePowerModulus, Rat, Valuation,
};
use crate::report::{params, ClaimReport};
use crate::sequences::SeqStore;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("{a} is not coprime to {p}")]
    NotCoprime { a: Int, p: Int },
}

/// q_p(a) = (a^{p-1} - 1)/p, exact by Fermat's little theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermatQuotient {
    pub p: Prime,
    pub a: Int,
    pub value: Int,
}

pub fn fermat_quotient(p: &Prime, a: &Int) -> Result<FermatQuotient, CongruenceError> {
    if a.gcd(p.get()) != Int::one() {
        return Err(CongruenceError::NotCoprime { a: a.clone(), p: p.get().clone() });
    }
    let e = (p.to_u64() - 1) as u32;
    let numer: Int = pow_int(a, e) - 1;
    let (value, rem) = numer.div_rem(p.get());
    assert!(rem.is_zero(), "Fermat quotient must divide exactly");
    Ok(FermatQuotient { p: p.clone(), a: a.clone(), value })
}

/// h(-3p) via the character sum 2 sum_{a <= [p/3]} (p|a).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberH {
    pub p: Prime,
    pub value: Int,
}

pub fn class_number_neg3p(p: &Prime) -> ClassNumberH {
    let pv = p.to_u64();
    assert!(pv > 3, "discriminant -3p needs p > 3");
    let sum: i64 = (1..=pv / 3).map(|a| kronecker(p.get(), &Int::from(a)) as i64).sum();
    let value = Int::from(2 * sum);
    if pv % 4 == 1 {
        assert!(
            value >= Int::one() && value < *p.get(),
            "class number h(-3p) out of the proven range for p = {p}"
        );
    }
    ClassNumberH { p: p.clone(), value }
}

/// A congruence chain a_0 = a_1 = ... = a_n (mod p^e), reported as the left
/// and right member of each link; pass requires every link.
fn chain_report(
    claim_id: impl Into<String>,
    params: Vec<(String, String)>,
    m: &PrimePowerModulus,
    links: &[(Rat, Rat)],
) -> ClaimReport {
    let pass = links.iter().all(|(a, b)| rats_congruent(a, b, m));
    let lhs = links.iter().map(|(a, _)| render_mod(a, m)).collect::<Vec<_>>().join(";");
    let rhs = links.iter().map(|(_, b)| render_mod(b, m)).collect::<Vec<_>>().join(";");
    ClaimReport::new(claim_id, params, Some(m.to_string()), lhs, rhs, pass)
}

/// sum of x^{-k} mod m over the given values, each coprime to m, computed
/// with modular inverses term by term.
fn inverse_power_sum(m: &Int, xs: impl Iterator<Item = u64>, k: u32) -> Int {
    let mut acc = Int::zero();
    for x in xs {
        let xk = pow_int(&Int::from(x), k).mod_floor(m);
        let inv = inv_mod(&xk, m).expect("summand coprime to modulus");
        acc = (acc + inv).mod_floor(m);
    }
    acc
}

fn rat_of(i: Int) -> Rat {
    Rat::from_integer(i)
}

fn legendre3(p: &Prime) -> Rat {
    rat_int(kronecker(p.get(), &int(3)) as i64)
}

/// U_{(p-1)/2} = (1 + 2(-1)^{(p-1)/4}) h(-3p) (mod p), and the nonvanishing
/// it implies; requires p = 1 (mod 4).
pub fn check_thm31(store: &SeqStore, p: &Prime) -> ClaimReport {
    let pv = p.to_u64();
    assert!(pv % 4 == 1 && pv > 3, "p must be 1 (mod 4) and > 3");
    let m = PrimePowerModulus::new(p.clone(), 1);
    let u = rat_of(store.u((pv as usize - 1) / 2));
    let sign = if (pv - 1) / 4 % 2 == 0 { 1 } else { -1 };
    let h = class_number_neg3p(p);
    let rhs = rat_int(1 + 2 * sign) * rat_of(h.value.clone());
    let congruent = rats_congruent(&u, &rhs, &m);
    let nonzero = !ord_p(&u, p).at_least(1);
    ClaimReport::new(
        "thm3.1",
        params([("p", pv.to_string()), ("h", h.value.to_string())]),
        Some(m.to_string()),
        render_mod(&u, &m),
        render_mod(&rhs, &m),
        congruent && nonzero,
    )
}

/// p does not divide U_{(p-1)/2} (p = 1 mod 4).
pub fn check_cor31(store: &SeqStore, p: &Prime) -> ClaimReport {
    let pv = p.to_u64();
    assert!(pv % 4 == 1 && pv > 3, "p must be 1 (mod 4) and > 3");
    let u = store.u((pv as usize - 1) / 2);
    let divisible = matches!(ord_p(&rat_of(u), p), Valuation::Finite(v) if v >= 1);
    ClaimReport::new(
        "cor3.1",
        params([("p", pv.to_string())]),
        Some(p.to_string()),
        if divisible { "0" } else { "nonzero" },
        "nonzero",
        !divisible,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm32Part {
    I,
    II,
    III,
    IVa,
    IVb,
}

impl std::fmt::Display for Thm32Part {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Thm32Part::I => "i",
            Thm32Part::II => "ii",
            Thm32Part::III => "iii",
            Thm32Part::IVa => "iv-a",
            Thm32Part::IVb => "iv-b",
        };
        write!(f, "{s}")
    }
}

/// Fermat-quotient congruences for harmonic sums (mod p^2) and the two
/// central binomial coefficients (mod p^3).
pub fn check_thm32(store: &SeqStore, p: &Prime, part: Thm32Part) -> ClaimReport {
    let pv = p.to_u64();
    assert!(pv > 5, "p must exceed 5");
    let q2 = rat_of(fermat_quotient(p, &int(2)).expect("2 coprime").value);
    let q3 = rat_of(fermat_quotient(p, &int(3)).expect("3 coprime").value);
    let s3 = legendre3(p);
    let u = rat_of(store.u(pv as usize - 3));
    let pr = rat_of(p.get().clone());
    let claim_id = format!("thm3.2.{part}");
    let prms = params([("p", pv.to_string())]);
    match part {
        Thm32Part::I => {
            let m = PrimePowerModulus::new(p.clone(), 2);
            let lhs = rat_of(inverse_power_sum(&m.modulus(), 1..=pv / 6, 1));
            let rhs = rat_int(-2) * &q2 - Rat::new(int(3), int(2)) * &q3
                + &pr * (&q2 * &q2 + Rat::new(int(3), int(4)) * &q3 * &q3)
                - Rat::new(int(5), int(2)) * &pr * &s3 * &u;
            chain_report(claim_id, prms, &m, &[(lhs, rhs)])
        }
        Thm32Part::II => {
            let m = PrimePowerModulus::new(p.clone(), 2);
            let lhs = rat_of(inverse_power_sum(&m.modulus(), 1..=pv / 3, 1));
            let rhs = -Rat::new(int(3), int(2)) * &q3
                + Rat::new(int(3), int(4)) * &pr * &q3 * &q3
                - &pr * &s3 * &u;
            chain_report(claim_id, prms, &m, &[(lhs, rhs)])
        }
        Thm32Part::III => {
            let m = PrimePowerModulus::new(p.clone(), 2);
            let md = m.modulus();
            //  alternating harmonic sum to [2p/3]
            let mut alt = Int::zero();
            for k in 1..=(2 * pv) / 3 {
                let inv = inv_mod(&Int::from(k), &md).expect("k < p");
                alt = if k % 2 == 1 { alt + inv } else { alt - inv };
                alt = alt.mod_floor(&md);
            }
            let mid = rat_int(9)
                * rat_of(inverse_power_sum(&md, (1..pv).filter(|k| (k + pv) % 3 == 0), 1));
            let rhs = rat_int(3) * &pr * &s3 * &u;
            chain_report(claim_id, prms, &m, &[(rat_of(alt), mid.clone()), (mid, rhs)])
        }
        Thm32Part::IVa => {
            let m = PrimePowerModulus::new(p.clone(), 3);
            let idx = (pv / 6) as i64;
            let sign = if idx % 2 == 0 { 1 } else { -1 };
            let lhs = rat_int(sign) * rat_of(binomial(pv as i64 - 1, idx));
            let rhs = rat_int(1)
                + &pr * (rat_int(2) * &q2 + Rat::new(int(3), int(2)) * &q3)
                + &pr * &pr
                    * (&q2 * &q2 + rat_int(3) * &q2 * &q3
                        + Rat::new(int(3), int(8)) * &q3 * &q3
                        - rat_int(5) * &s3 * &u);
            chain_report(claim_id, prms, &m, &[(lhs, rhs)])
        }
        Thm32Part::IVb => {
            let m = PrimePowerModulus::new(p.clone(), 3);
            let idx = (pv / 3) as i64;
            let sign = if idx % 2 == 0 { 1 } else { -1 };
            let lhs = rat_int(sign) * rat_of(binomial(pv as i64 - 1, idx));
            let rhs = rat_int(1) + Rat::new(int(3), int(2)) * &pr * &q3
                + Rat::new(int(3), int(8)) * &pr * &pr * &q3 * &q3
                - &pr * &pr / rat_int(2) * &s3 * &u;
            chain_report(claim_id, prms, &m, &[(lhs, rhs)])
        }
    }
}

fn check_even_k(p: &Prime, k: u32) {
    let pv = p.to_u64();
    assert!(pv > 3, "p must exceed 3");
    assert!(k >= 2 && k % 2 == 0 && (k as u64) <= pv - 3, "k must be even in 2..=p-3");
}

/// Inverse-power-sum chains to [p/6] and [p/3] with their residue-class
/// middle members and closed forms in U_{p-1-k}.
pub fn check_thm33(store: &SeqStore, p: &Prime, k: u32) -> ClaimReport {
    check_even_k(p, k);
    let pv = p.to_u64();
    let m = PrimePowerModulus::new(p.clone(), 1);
    let md = m.modulus();
    let s3u = legendre3(p) * rat_of(store.u((pv - 1 - k as u64) as usize));
    let pow6 = pow_int(&int(6), k);
    let pow2 = pow_int(&int(2), k);
    let denom: Int = int(4) * (pow_int(&int(2), k - 1) + 1);

    let s6 = rat_of(inverse_power_sum(&md, 1..=pv / 6, k));
    let class6 = rat_of(
        (&pow6 * inverse_power_sum(&md, (1..pv).filter(|x| (x + 5 * pv) % 6 == 0), k))
            .mod_floor(&md),
    );
    let closed6 = Rat::new(&pow6 * (&pow2 + 1), denom.clone()) * &s3u;

    let s3 = rat_of(inverse_power_sum(&md, 1..=pv / 3, k));
    let class3 = rat_of(
        (pow_int(&int(3), k) * inverse_power_sum(&md, (1..pv).filter(|x| (x + 2 * pv) % 3 == 0), k))
            .mod_floor(&md),
    );
    let closed3 = Rat::new(pow6, denom) * &s3u;

    chain_report(
        "thm3.3",
        params([("p", pv.to_string()), ("k", k.to_string())]),
        &m,
        &[
            (s6, class6.clone()),
            (class6, closed6),
            (s3, class3.clone()),
            (class3, closed3),
        ],
    )
}

/// Band sum over ([p/6], [p/3]] with closed form, plus the two ratio
/// congruences tying the [p/3] and [p/6] sums together.
pub fn check_cor32(store: &SeqStore, p: &Prime, k: u32) -> ClaimReport {
    check_even_k(p, k);
    let pv = p.to_u64();
    let m = PrimePowerModulus::new(p.clone(), 1);
    let md = m.modulus();
    let s3u = legendre3(p) * rat_of(store.u((pv - 1 - k as u64) as usize));
    let pow2 = pow_int(&int(2), k);

    let band = rat_of(inverse_power_sum(&md, pv / 6 + 1..=pv / 3, k));
    let closed_band =
        -Rat::new(pow_int(&int(12), k), int(4) * (pow_int(&int(2), k - 1) + 1)) * &s3u;

    let s3 = rat_of(inverse_power_sum(&md, 1..=pv / 3, k));
    let s6 = rat_of(inverse_power_sum(&md, 1..=pv / 6, k));
    let ratio6 = &s6 / rat_of(&pow2 + 1);
    let ratio_band = -&band / rat_of(pow2);

    chain_report(
        "cor3.2",
        params([("p", pv.to_string()), ("k", k.to_string())]),
        &m,
        &[
            (band, closed_band),
            (s3, ratio6.clone()),
            (ratio6, ratio_band),
        ],
    )
}

/// Alternating and odd-denominator inverse-power sums with closed forms.
pub fn check_thm34(store: &SeqStore, p: &Prime, k: u32) -> ClaimReport {
    check_even_k(p, k);
    let pv = p.to_u64();
    let m = PrimePowerModulus::new(p.clone(), 1);
    let md = m.modulus();
    let s3u = legendre3(p) * rat_of(store.u((pv - 1 - k as u64) as usize));
    let pow3 = pow_int(&int(3), k);

    let mut alt = Int::zero();
    for x in 1..=pv / 3 {
        let xk = pow_int(&Int::from(x), k).mod_floor(&md);
        let inv = inv_mod(&xk, &md).expect("x < p");
        alt = if x % 2 == 1 { alt + inv } else { alt - inv };
        alt = alt.mod_floor(&md);
    }
    let closed_alt = -Rat::new(pow3.clone(), int(2)) * &s3u;

    let odd = rat_of(inverse_power_sum(&md, (1..=(pv + 3) / 6).map(|x| 2 * x - 1), k));
    let closed_odd = -Rat::new(pow3, pow_int(&int(2), k + 1) + 4) * &s3u;

    chain_report(
        "thm3.4",
        params([("p", pv.to_string()), ("k", k.to_string())]),
        &m,
        &[(rat_of(alt), closed_alt), (odd, closed_odd)],
    )
}

/// U_{(p-1)/2} against the short Kronecker character sum (p = 1 mod 4).
pub fn check_cor33(store: &SeqStore, p: &Prime) -> ClaimReport {
    let pv = p.to_u64();
    assert!(pv % 4 == 1 && pv > 3, "p must be 1 (mod 4) and > 3");
    let m = PrimePowerModulus::new(p.clone(), 1);
    let u = rat_of(store.u((pv as usize - 1) / 2));
    let sign = if (pv - 1) / 4 % 2 == 0 { 1 } else { -1 };
    let charsum: i64 = (1..=(pv + 3) / 6)
        .map(|x| kronecker(p.get(), &Int::from(2 * x - 1)) as i64)
        .sum();
    let rhs = rat_int(-2 * (2 + sign) * charsum);
    chain_report(
        "cor3.3",
        params([("p", pv.to_string())]),
        &m,
        &[(u, rhs)],
    )
}
