use std::ops::RangeInclusive;

use hermite_wronskian::{segment, Bound, IndexSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSetError {
    #[error("malformed index set {0:?}: expected a comma list like 1,2,5 or S(p,q)")]
    Malformed(String),
    #[error("duplicate element {0} in index set")]
    Duplicate(usize),
    #[error("index set elements must be positive, got {0}")]
    NonPositive(String),
}

/// Parses `"1,2,5"` or the segment form `"S(p,q)"`.
pub fn parse_set(text: &str) -> Result<IndexSet, ParseSetError> {
    let t = text.trim();
    let malformed = || ParseSetError::Malformed(text.to_string());
    if let Some(body) = t
        .strip_prefix("S(")
        .or_else(|| t.strip_prefix("s("))
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let (p, q) = body.split_once(',').ok_or_else(malformed)?;
        let p: i64 = p.trim().parse().map_err(|_| malformed())?;
        let q: i64 = q.trim().parse().map_err(|_| malformed())?;
        if p < 1 {
            return Err(ParseSetError::NonPositive(p.to_string()));
        }
        if q < 0 {
            return Err(malformed());
        }
        return segment(p as usize, q as usize).map_err(|_| malformed());
    }
    let mut elements = Vec::new();
    for tok in t.split(',') {
        let tok = tok.trim();
        let v: i64 = tok.parse().map_err(|_| malformed())?;
        if v < 1 {
            return Err(ParseSetError::NonPositive(tok.to_string()));
        }
        let v = v as usize;
        if elements.contains(&v) {
            return Err(ParseSetError::Duplicate(v));
        }
        elements.push(v);
    }
    elements.sort_unstable();
    IndexSet::new(elements).map_err(|_| malformed())
}

/// `"3"` or the inclusive range `"1..8"`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got {text:?}");
    match text.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b
                .trim_start_matches('=')
                .trim()
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let a: usize = text.trim().parse().map_err(|_| bad())?;
            Ok(a..=a)
        }
    }
}

/// `"-inf"`, `"inf"`, an integer or a fraction `"a/b"`.
pub fn parse_bound(text: &str) -> Result<Bound, String> {
    let t = text.trim();
    match t {
        "-inf" | "-infinity" => return Ok(Bound::NegInfinity),
        "inf" | "+inf" | "infinity" => return Ok(Bound::PosInfinity),
        _ => {}
    }
    let bad = || format!("expected an integer, a/b, inf or -inf, got {text:?}");
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Bound::Finite(BigRational::new(n, d)))
}

pub fn parse_pair(text: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected a,b, got {text:?}");
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}
