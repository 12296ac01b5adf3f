//! Parsing for the sweep parameter syntax: inclusive `A..B` ranges, comma
//! lists, and the linear control-sequence expressions accepted by
//! `--negative-control`.

use usequence_core::Int;

/// Parse an inclusive range `A..B`; a bare integer `N` means `N..N`.
pub fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let t = text.trim();
    let bad = || format!("malformed range `{t}`: expected `A..B` or a single integer");
    if let Some((lo, hi)) = t.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(format!("malformed range `{t}`: lower endpoint exceeds upper"));
        }
        Ok((lo, hi))
    } else {
        let v: u64 = t.parse().map_err(|_| bad())?;
        Ok((v, v))
    }
}

/// Parse a comma-separated list of integers, preserving order.
pub fn parse_list(text: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let v: u64 = piece
            .trim()
            .parse()
            .map_err(|_| format!("malformed list `{text}`: `{piece}` is not an integer"))?;
        out.push(v);
    }
    if out.is_empty() {
        return Err(format!("malformed list `{text}`: empty"));
    }
    Ok(out)
}

/// A control sequence of the form `scale*n + offset`, e.g. `n+1`, `2*n-3`,
/// `n`, or a constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearControl {
    pub scale: i64,
    pub offset: i64,
    pub text: String,
}

impl LinearControl {
    pub fn parse(text: &str) -> Result<Self, String> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || {
            format!(
                "malformed control expression `{text}`: expected a linear form in n \
                 such as `n+1`, `2*n-3`, or a constant"
            )
        };
        let parse_i64 = |s: &str| s.parse::<i64>().map_err(|_| bad());
        let (scale, rest) = match compact.find('n') {
            None => {
                let offset = parse_i64(&compact)?;
                return Ok(LinearControl { scale: 0, offset, text: text.trim().to_string() });
            }
            Some(pos) => {
                let head = &compact[..pos];
                let scale = match head {
                    "" | "+" => 1,
                    "-" => -1,
                    _ => parse_i64(head.strip_suffix('*').unwrap_or(head))?,
                };
                (scale, &compact[pos + 1..])
            }
        };
        let offset = match rest {
            "" => 0,
            _ if rest.starts_with('+') || rest.starts_with('-') => parse_i64(rest)?,
            _ => return Err(bad()),
        };
        Ok(LinearControl { scale, offset, text: text.trim().to_string() })
    }

    pub fn eval(&self, n: u64) -> Int {
        Int::from(self.scale) * Int::from(n) + Int::from(self.offset)
    }
}
