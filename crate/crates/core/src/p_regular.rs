//! p-regularity of f(k) = (1 - (p/3)p^{k(p-1)+b}) U_{k(p-1)+b}: alternating
//! binomial sums vanishing to order p^n, the lifted congruences mod p^{mn}
//! and mod p^{m+1}, polynomial fits mod p^n with symmetric coefficients, the
//! explicit mod-27 and mod-3125 polynomials, and the 2-adic behaviour of
//! U_{2n}.

use crate::exactnum::{
    binomial, factorial, int, kronecker, ord_p, ord_p_int, pow_int, rat_int, rats_congruent,
    reduce_mod, render_mod, Int, Prime, PrimePowerModulus, Rat, Valuation,
};
use crate::report::{params, ClaimReport};
use crate::sequences::SeqStore;
use num_traits::{One, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PRegularError {
    #[error("polynomial fit failed for p={p}, n={n}, b={b}: {detail}")]
    FitMismatch { p: u64, n: u32, b: u32, detail: String },
}

/// The function f(k) = (1 - (p/3)p^{k(p-1)+b}) U_{k(p-1)+b}. At p = 3 the
/// Kronecker symbol (3/3) = 0 kills the p-power term, so f(k) = U_{2k+b}.
#[derive(Debug, Clone)]
pub struct RegularFunctionSpec {
    pub p: Prime,
    pub b: u32,
}

impl RegularFunctionSpec {
    pub fn new(p: Prime, b: u32) -> Self {
        assert!(p.to_u64() % 2 == 1, "p must be odd");
        assert!(b % 2 == 0, "b must be even");
        RegularFunctionSpec { p, b }
    }

    fn symbol(&self) -> i64 {
        kronecker(self.p.get(), &int(3)) as i64
    }
}

pub fn f42(store: &SeqStore, spec: &RegularFunctionSpec, k: u32) -> Rat {
    let idx = k as u64 * (spec.p.to_u64() - 1) + spec.b as u64;
    let factor: Int = Int::one() - int(spec.symbol()) * pow_int(spec.p.get(), idx as u32);
    Rat::from_integer(factor * store.u(idx as usize))
}

/// ord_p of the alternating binomial sums of `values` must reach n for every
/// n = 1..=n_max; the report lists the attained valuations against the
/// thresholds.
pub fn check_regular_values(
    claim_id: impl Into<String>,
    prms: Vec<(String, String)>,
    p: &Prime,
    values: &[Rat],
    n_max: u32,
) -> ClaimReport {
    assert!(values.len() > n_max as usize, "need values for k = 0..=n_max");
    let mut attained = Vec::new();
    let mut pass = true;
    for n in 1..=n_max {
        let mut sum = Rat::zero();
        for k in 0..=n {
            let term = Rat::from_integer(binomial(n as i64, k as i64)) * &values[k as usize];
            sum = if k % 2 == 0 { sum + term } else { sum - term };
        }
        let v = ord_p(&sum, p);
        pass &= v.at_least(n as i64);
        attained.push(v.to_string());
    }
    ClaimReport::new(
        claim_id,
        prms,
        Some(p.to_string()),
        attained.join(";"),
        (1..=n_max).map(|n| format!(">={n}")).collect::<Vec<_>>().join(";"),
        pass,
    )
}

pub fn check_p_regular(store: &SeqStore, spec: &RegularFunctionSpec, n_max: u32) -> ClaimReport {
    assert!(n_max >= 1);
    let values: Vec<Rat> = (0..=n_max).map(|k| f42(store, spec, k)).collect();
    check_regular_values(
        "thm4.2",
        params([
            ("p", spec.p.to_u64().to_string()),
            ("b", spec.b.to_string()),
            ("N", n_max.to_string()),
        ]),
        &spec.p,
        &values,
        n_max,
    )
}

fn phi_pm(p: u64, m: u32) -> u64 {
    p.pow(m - 1) * (p - 1)
}

/// f at argument r·phi(p^m) + b, as an exact rational (integer in fact).
fn lifted_f(store: &SeqStore, p: &Prime, sym: i64, phi: u64, b: u32, r: u32) -> Rat {
    let idx = r as u64 * phi + b as u64;
    let factor: Int = Int::one() - int(sym) * pow_int(p.get(), idx as u32);
    Rat::from_integer(factor * store.u(idx as usize))
}

/// Lifted congruence mod p^{mn}: f(k) against the order-n alternating
/// binomial combination of f(0..n-1); for n = 1 also the bare
/// U_{k phi + b} = (1 - (p/3)p^b) U_b form.
pub fn check_thm43(store: &SeqStore, p: &Prime, k: u32, m: u32, n: u32, b: u32) -> ClaimReport {
    assert!(k >= 1 && m >= 1 && n >= 1, "k, m, n must be positive");
    assert!(b % 2 == 0, "b must be even");
    assert!(n == 1 || k >= n, "the order-n combination needs k >= n");
    let pv = p.to_u64();
    let phi = phi_pm(pv, m);
    let sym = kronecker(p.get(), &int(3)) as i64;
    let modulus = PrimePowerModulus::new(p.clone(), m * n);

    let lhs = lifted_f(store, p, sym, phi, b, k);
    let mut rhs = Rat::zero();
    for r in 0..n {
        let coeff = binomial(k as i64 - 1 - r as i64, n as i64 - 1 - r as i64)
            * binomial(k as i64, r as i64);
        let term = Rat::from_integer(coeff) * lifted_f(store, p, sym, phi, b, r);
        rhs = if (n - 1 - r) % 2 == 0 { rhs + term } else { rhs - term };
    }
    let mut pass = rats_congruent(&lhs, &rhs, &modulus);
    let mut lhs_parts = vec![render_mod(&lhs, &modulus)];
    let mut rhs_parts = vec![render_mod(&rhs, &modulus)];
    if n == 1 {
        let u_lhs = Rat::from_integer(store.u((k as u64 * phi + b as u64) as usize));
        let u_rhs = Rat::from_integer(
            (Int::one() - int(sym) * pow_int(p.get(), b)) * store.u(b as usize),
        );
        pass &= rats_congruent(&u_lhs, &u_rhs, &modulus);
        lhs_parts.push(render_mod(&u_lhs, &modulus));
        rhs_parts.push(render_mod(&u_rhs, &modulus));
    }
    ClaimReport::new(
        "thm4.3",
        params([
            ("p", pv.to_string()),
            ("k", k.to_string()),
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("b", b.to_string()),
        ]),
        Some(modulus.to_string()),
        lhs_parts.join(";"),
        rhs_parts.join(";"),
        pass,
    )
}

/// Coefficients of the degree-(n-1) polynomial congruent to f(k) mod p^n,
/// in symmetric representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFit {
    pub p: u64,
    pub n: u32,
    pub b: u32,
    pub coefficients: Vec<Int>,
}

impl PolyFit {
    pub fn eval(&self, k: u32) -> Int {
        let kr = Int::from(k);
        let mut acc = Int::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * &kr + c;
        }
        acc
    }
}

fn symmetric_rep(r: Int, modulus: &Int) -> Int {
    if &(int(2) * &r) > modulus {
        r - modulus
    } else {
        r
    }
}

/// Newton forward-difference fit of f on k = 0..n-1, expanded to monomial
/// coefficients, reduced mod p^n to symmetric representatives, then checked:
/// reproduction on k = 0..2n+4, valuation bounds ord_p(a_s) >= s - ord_p(s!),
/// and agreement with a refit from the shifted node set k = 1..n.
pub fn fit_thm44(store: &SeqStore, p: &Prime, n: u32, b: u32) -> Result<PolyFit, PRegularError> {
    let pv = p.to_u64();
    assert!(pv >= n as u64, "needs p >= n");
    assert!(b % 2 == 0 && n >= 1, "b even, n positive");
    let spec = RegularFunctionSpec::new(p.clone(), b);
    let modulus = PrimePowerModulus::new(p.clone(), n);
    let fail = |detail: String| PRegularError::FitMismatch { p: pv, n, b, detail };

    let coefficients = fit_from_nodes(store, &spec, &modulus, n, 0).map_err(&fail)?;
    let fit = PolyFit { p: pv, n, b, coefficients };

    for k in 0..=2 * n + 4 {
        let expected = f42(store, &spec, k);
        let got = Rat::from_integer(fit.eval(k));
        if !rats_congruent(&expected, &got, &modulus) {
            return Err(fail(format!(
                "value mismatch at k={k}: {} vs {}",
                render_mod(&expected, &modulus),
                render_mod(&got, &modulus)
            )));
        }
    }
    for (s, a) in fit.coefficients.iter().enumerate() {
        let needed = s as i64 - match ord_p_int(&factorial(s as u64), p) {
            Valuation::Finite(v) => v,
            Valuation::Infinite => unreachable!("factorial is nonzero"),
        };
        if !ord_p_int(a, p).at_least(needed) {
            return Err(fail(format!("coefficient a_{s} = {a} too far from zero p-adically")));
        }
    }
    let refit = fit_from_nodes(store, &spec, &modulus, n, 1).map_err(&fail)?;
    if refit != fit.coefficients {
        return Err(fail(format!(
            "node sets disagree: {:?} vs {:?}",
            fit.coefficients, refit
        )));
    }
    Ok(fit)
}

fn fit_from_nodes(
    store: &SeqStore,
    spec: &RegularFunctionSpec,
    modulus: &PrimePowerModulus,
    n: u32,
    first_node: u32,
) -> Result<Vec<Int>, String> {
    //  forward differences at the leftmost node
    let mut row: Vec<Rat> = (first_node..first_node + n).map(|k| f42(store, spec, k)).collect();
    let mut diffs: Vec<Rat> = Vec::with_capacity(n as usize);
    for level in 0..n as usize {
        diffs.push(row[0].clone());
        for i in 0..n as usize - level - 1 {
            row[i] = &row[i + 1] - &row[i];
        }
        row.truncate(n as usize - level - 1);
    }
    //  sum_s diffs[s] * C(k - first_node, s) expanded in powers of k
    let shift = int(first_node as i64);
    let mut coeffs = vec![Rat::zero(); n as usize];
    let mut falling = vec![Int::one()];
    for (s, d) in diffs.iter().enumerate() {
        let scale = d / Rat::from_integer(factorial(s as u64));
        for (i, fc) in falling.iter().enumerate() {
            coeffs[i] += &scale * Rat::from_integer(fc.clone());
        }
        //  multiply the falling factorial by (k - (first_node + s))
        let root: Int = &shift + int(s as i64);
        let mut next = vec![Int::zero(); falling.len() + 1];
        for (i, fc) in falling.iter().enumerate() {
            next[i + 1] += fc;
            next[i] -= fc * &root;
        }
        falling = next;
    }
    let md = modulus.modulus();
    coeffs
        .into_iter()
        .map(|c| {
            reduce_mod(&c, modulus)
                .map(|r| symmetric_rep(r.value().clone(), &md))
                .map_err(|e| format!("non-p-integral coefficient: {e}"))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cor42Part {
    I,
    II,
    III,
}

impl std::fmt::Display for Cor42Part {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Cor42Part::I => "i",
            Cor42Part::II => "ii",
            Cor42Part::III => "iii",
        };
        write!(f, "{s}")
    }
}

/// The explicit polynomial congruences: U_{2k} mod 27, U_{4k} mod 3125
/// (k >= 2), and U_{4k+2} mod 3125.
pub fn check_cor42(store: &SeqStore, k: u32, part: Cor42Part) -> ClaimReport {
    assert!(k >= 1, "k must be positive");
    let kr = int(k as i64);
    let (modulus, idx, poly): (PrimePowerModulus, u64, Int) = match part {
        Cor42Part::I => (
            PrimePowerModulus::new(Prime::from_u64(3).unwrap(), 3),
            2 * k as u64,
            int(-3) * &kr + 1,
        ),
        Cor42Part::II => {
            assert!(k >= 2, "the mod-3125 form for U_{{4k}} needs k >= 2");
            let k2 = &kr * &kr;
            let k3 = &k2 * &kr;
            let k4 = &k2 * &k2;
            (
                PrimePowerModulus::new(Prime::from_u64(5).unwrap(), 5),
                4 * k as u64,
                int(1250) * k4 + int(500) * k3 + int(725) * k2 - int(1205) * &kr + 2,
            )
        }
        Cor42Part::III => {
            let k2 = &kr * &kr;
            let k3 = &k2 * &kr;
            let k4 = &k2 * &k2;
            (
                PrimePowerModulus::new(Prime::from_u64(5).unwrap(), 5),
                4 * k as u64 + 2,
                int(1250) * k4 - int(1125) * k3 - int(675) * k2 - 52,
            )
        }
    };
    let lhs = Rat::from_integer(store.u(idx as usize));
    let rhs = Rat::from_integer(poly);
    ClaimReport::new(
        format!("cor4.2.{part}"),
        params([("k", k.to_string())]),
        Some(modulus.to_string()),
        render_mod(&lhs, &modulus),
        render_mod(&rhs, &modulus),
        rats_congruent(&lhs, &rhs, &modulus),
    )
}

/// One-step lift mod p^{m+1}: U_{k phi(p^m)+b} as a linear interpolation
/// between (1-(p/3)p^b)U_b and (1-(p/3)p^{p-1+b})U_{p-1+b}.
pub fn check_thm45(store: &SeqStore, p: &Prime, k: u32, m: u32, b: u32) -> ClaimReport {
    assert!(k >= 1 && m >= 1 && b % 2 == 0);
    let pv = p.to_u64();
    let phi = phi_pm(pv, m);
    let sym = kronecker(p.get(), &int(3)) as i64;
    let modulus = PrimePowerModulus::new(p.clone(), m + 1);
    let lhs = Rat::from_integer(store.u((k as u64 * phi + b as u64) as usize));
    let kp: Int = int(k as i64) * pow_int(p.get(), m - 1);
    let term_b: Int = (Int::one() - int(sym) * pow_int(p.get(), b)) * store.u(b as usize);
    let shifted = pv - 1 + b as u64;
    let term_s: Int =
        (Int::one() - int(sym) * pow_int(p.get(), shifted as u32)) * store.u(shifted as usize);
    let rhs = Rat::from_integer((Int::one() - &kp) * term_b + kp * term_s);
    ClaimReport::new(
        "thm4.5",
        params([
            ("p", pv.to_string()),
            ("k", k.to_string()),
            ("m", m.to_string()),
            ("b", b.to_string()),
        ]),
        Some(modulus.to_string()),
        render_mod(&lhs, &modulus),
        render_mod(&rhs, &modulus),
        rats_congruent(&lhs, &rhs, &modulus),
    )
}

/// 2-adic congruences for U_{2n} (n >= 3, alpha = ord_2(n)): the base
/// 2/3 form mod 2^{alpha+4}, the refinement mod 2^{alpha+7} (even n) or
/// 2^7 (odd n), and the integer restatements mod 16 and 128.
pub fn check_thm41(store: &SeqStore, n: u32) -> ClaimReport {
    assert!(n >= 3, "needs n >= 3");
    let two = Prime::from_u64(2).unwrap();
    let alpha = match ord_p_int(&int(n as i64), &two) {
        Valuation::Finite(v) => v as u32,
        Valuation::Infinite => unreachable!("n is positive"),
    };
    let u = Rat::from_integer(store.u(2 * n as usize));
    let two_thirds = Rat::new(int(2), int(3));
    let n48 = rat_int(48 * n as i64);
    let mut links: Vec<(PrimePowerModulus, Rat, Rat)> = vec![(
        PrimePowerModulus::new(two.clone(), alpha + 4),
        u.clone(),
        two_thirds.clone(),
    )];
    if n % 2 == 0 {
        links.push((
            PrimePowerModulus::new(two.clone(), alpha + 7),
            u.clone(),
            &n48 + &two_thirds,
        ));
        links.push((
            PrimePowerModulus::new(two.clone(), 7),
            u.clone(),
            &n48 - rat_int(42),
        ));
    } else {
        links.push((PrimePowerModulus::new(two.clone(), 7), u.clone(), &n48 + rat_int(22)));
        links.push((
            PrimePowerModulus::new(two.clone(), 7),
            u.clone(),
            rat_int(-16 * n as i64 - 42),
        ));
    }
    links.push((PrimePowerModulus::new(two, 4), u, rat_int(6)));

    let pass = links.iter().all(|(m, a, b)| rats_congruent(a, b, m));
    let lhs = links.iter().map(|(m, a, _)| render_mod(a, m)).collect::<Vec<_>>().join(";");
    let rhs = links.iter().map(|(m, _, b)| render_mod(b, m)).collect::<Vec<_>>().join(";");
    let moduli = links.iter().map(|(m, _, _)| m.to_string()).collect::<Vec<_>>().join(";");
    ClaimReport::new(
        "thm4.1",
        params([("n", n.to_string()), ("alpha", alpha.to_string())]),
        Some(moduli),
        lhs,
        rhs,
        pass,
    )
}

/// Report wrapper around [`fit_thm44`]: passes when the degree-(n-1)
/// polynomial fit mod p^n exists, reproduces f on k = 0..2n+4, satisfies the
/// coefficient valuation bound, and is independent of the interpolation
/// nodes. The left side renders the coefficients a_0;a_1;... in symmetric
/// representation.
pub fn check_thm44(store: &SeqStore, p: &Prime, n: u32, b: u32) -> ClaimReport {
    let prms = params([
        ("p", p.to_u64().to_string()),
        ("n", n.to_string()),
        ("b", b.to_string()),
    ]);
    let modulus = Some(format!("{p}^{n}"));
    let rhs = format!("interpolates k=0..{}", 2 * n + 4);
    match fit_thm44(store, p, n, b) {
        Ok(fit) => {
            let lhs = fit
                .coefficients
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(";");
            ClaimReport::new("thm4.4", prms, modulus, lhs, rhs, true)
        }
        Err(e) => ClaimReport::new("thm4.4", prms, modulus, e.to_string(), rhs, false),
    }
}

/// Valuation-free restatement of the 2-adic congruences: for n >= 3,
/// U_{2n} = 6 (mod 16), and mod 128 it is 48n - 42 for even n and
/// -16n - 42 for odd n.
pub fn check_cor41(store: &SeqStore, n: u32) -> ClaimReport {
    assert!(n >= 3, "needs n >= 3");
    let two = Prime::from_u64(2).unwrap();
    let u = Rat::from_integer(store.u(2 * n as usize));
    let residue_128 = if n % 2 == 0 {
        rat_int(48 * n as i64 - 42)
    } else {
        rat_int(-16 * n as i64 - 42)
    };
    let links = [
        (PrimePowerModulus::new(two.clone(), 4), u.clone(), rat_int(6)),
        (PrimePowerModulus::new(two, 7), u, residue_128),
    ];
    let pass = links.iter().all(|(m, a, b)| rats_congruent(a, b, m));
    let lhs = links.iter().map(|(m, a, _)| render_mod(a, m)).collect::<Vec<_>>().join(";");
    let rhs = links.iter().map(|(m, _, b)| render_mod(b, m)).collect::<Vec<_>>().join(";");
    let moduli = links.iter().map(|(m, _, _)| m.to_string()).collect::<Vec<_>>().join(";");
    ClaimReport::new(
        "cor4.1",
        params([("n", n.to_string())]),
        Some(moduli),
        lhs,
        rhs,
        pass,
    )
}
