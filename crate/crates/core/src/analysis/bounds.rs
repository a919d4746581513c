//! Closed-form percolation bounds, in exact rational arithmetic.
//!
//! (4.8.8): a side of the ring around `D_t` has `2t + 1` octagons, so it
//! stays uninfected with probability at most `(1-p)^(2t+1)`; over four sides
//! and all later rings the failure probability is at most
//! `4(1-p)^(2t+1) / (1 - (1-p)^2)`. For strips each side has at least `t`
//! seedable faces and the sum runs over six sides: `6(1-p)^t / p`.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tiling::ring::strip_core_size;
use crate::tiling::StripSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundFamily {
    TruncatedSquare,
    Strips,
}

impl FromStr for BoundFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim_matches(|c| c == '(' || c == ')') {
            "4.8.8" | "truncated-square" => Ok(BoundFamily::TruncatedSquare),
            "strips" => Ok(BoundFamily::Strips),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// Parses `1/2` or a plain decimal such as `0.15`, exactly.
pub fn parse_probability(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidConfiguration(format!("not a probability: {s:?}"));
    let value = if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        BigRational::new(n, d)
    } else {
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.chars().any(|c| !c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        BigRational::new(n, BigInt::from(10u32).pow(frac.len() as u32))
    };
    check_open_unit(&value)?;
    Ok(value)
}

fn check_open_unit(p: &BigRational) -> Result<()> {
    if p.is_positive() && p < &BigRational::one() {
        Ok(())
    } else {
        Err(Error::ProbabilityOutOfRange(p.to_f64().unwrap_or(f64::NAN)))
    }
}

pub fn tail_bound(family: BoundFamily, p: &BigRational, t: u32) -> Result<BigRational> {
    check_open_unit(p)?;
    let q = BigRational::one() - p;
    Ok(match family {
        BoundFamily::TruncatedSquare => {
            let num = q.pow(2 * t as i32 + 1) * BigRational::from_integer(4.into());
            num / (BigRational::one() - &q * &q)
        }
        BoundFamily::Strips => q.pow(t as i32) * BigRational::from_integer(6.into()) / p,
    })
}

/// Smallest `t` with `tail_bound < 1`.
pub fn minimal_t(family: BoundFamily, p: &BigRational) -> Result<u32> {
    let one = BigRational::one();
    let mut t = 0;
    while tail_bound(family, p, t)? >= one {
        t += 1;
    }
    Ok(t)
}

/// Faces whose initial infection the bound requires: the `(2t+1)^2`
/// octagons of `D_t`, or all of `A_t`.
pub fn required_faces(family: BoundFamily, t: u32, sequence: &StripSequence) -> usize {
    match family {
        BoundFamily::TruncatedSquare => ((2 * t + 1) as usize).pow(2),
        BoundFamily::Strips => strip_core_size(sequence, t),
    }
}

/// `p^n (1 - tail)`, clamped at zero.
pub fn success_lower_bound(
    family: BoundFamily,
    p: &BigRational,
    t: u32,
    sequence: &StripSequence,
) -> Result<BigRational> {
    let tail = tail_bound(family, p, t)?;
    let rest = BigRational::one() - tail;
    if !rest.is_positive() {
        return Ok(BigRational::zero());
    }
    let n = required_faces(family, t, sequence);
    Ok(p.pow(n as i32) * rest)
}

fn log10_uint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(0.0).log10();
    }
    let shift = bits - 60;
    (x >> shift).to_f64().unwrap_or(0.0).log10() + shift as f64 * std::f64::consts::LOG10_2
}

/// `log10` of a positive rational, without overflow.
pub fn log10(x: &BigRational) -> f64 {
    if !x.is_positive() {
        return f64::NEG_INFINITY;
    }
    log10_uint(x.numer().magnitude()) - log10_uint(x.denom().magnitude())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub family: BoundFamily,
    pub p: String,
    pub t: u32,
    pub tail: String,
    pub tail_f64: f64,
    pub required_faces: usize,
    pub lower_bound_log10: f64,
    pub lower_bound_positive: bool,
    pub minimal_t: u32,
}

pub fn bound_report(
    family: BoundFamily,
    p: &BigRational,
    t: Option<u32>,
    sequence: &StripSequence,
) -> Result<BoundReport> {
    let minimal_t = minimal_t(family, p)?;
    let t = t.unwrap_or(minimal_t);
    let tail = tail_bound(family, p, t)?;
    let bound = success_lower_bound(family, p, t, sequence)?;
    Ok(BoundReport {
        family,
        p: p.to_string(),
        t,
        tail: tail.to_string(),
        tail_f64: tail.to_f64().unwrap_or(f64::INFINITY),
        required_faces: required_faces(family, t, sequence),
        lower_bound_log10: log10(&bound),
        lower_bound_positive: bound.is_positive(),
        minimal_t,
    })
}
