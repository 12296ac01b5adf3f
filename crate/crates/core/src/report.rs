//! Structured outcome of one claim-instance verification.

use crate::exactnum::Int;
use num_integer::Integer;
use num_traits::Zero;

/// One verified instance: which claim, at which parameters, what both sides
/// reduced to, and whether they agreed. `lhs`/`rhs` are canonical renderings;
/// for multi-display claims they are semicolon-joined in display order, and
/// `pass` additionally covers any intermediate chain links.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim_id: String,
    pub params: Vec<(String, String)>,
    pub modulus: Option<String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl ClaimReport {
    pub fn new(
        claim_id: impl Into<String>,
        params: Vec<(String, String)>,
        modulus: Option<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        pass: bool,
    ) -> Self {
        ClaimReport {
            claim_id: claim_id.into(),
            params,
            modulus,
            lhs: lhs.into(),
            rhs: rhs.into(),
            pass,
        }
    }

    /// An exact-equality claim: pass iff the renderings are identical.
    pub fn equality(
        claim_id: impl Into<String>,
        params: Vec<(String, String)>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        let lhs = lhs.into();
        let rhs = rhs.into();
        let pass = lhs == rhs;
        ClaimReport::new(claim_id, params, None, lhs, rhs, pass)
    }

    /// A divisibility claim `d | value`: the right side is the nearest
    /// multiple of `d` (floor), so the sides agree exactly when d divides.
    pub fn divisibility(
        claim_id: impl Into<String>,
        params: Vec<(String, String)>,
        value: &Int,
        d: &Int,
    ) -> Self {
        let rem = value.mod_floor(d);
        let nearest = value - &rem;
        ClaimReport::new(
            claim_id,
            params,
            Some(d.to_string()),
            value.to_string(),
            nearest.to_string(),
            rem.is_zero(),
        )
    }
}

/// Convenience for building the `params` list in a fixed order.
pub fn params<const N: usize>(pairs: [(&str, String); N]) -> Vec<(String, String)> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
