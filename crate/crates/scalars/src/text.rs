//! Text form: `rat[p/q]` for rationals, `cyc(n)[e1:c1, e2:c2, ...]` otherwise.
//!
//! Exponents index the power basis modulo Φ_n and only nonzero terms are
//! written, in increasing exponent order. Parsing accepts any exponents and
//! any conductor and canonicalises, so output of `Display` round-trips.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Cyclotomic, ScalarError};

fn write_ratio(f: &mut fmt::Formatter<'_>, p: &BigInt, q: &BigInt) -> fmt::Result {
    let r = BigRational::new(p.clone(), q.clone());
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, num, den) = self.raw();
        if n == 1 {
            write!(f, "rat[")?;
            write_ratio(f, &num[0], den)?;
            return write!(f, "]");
        }
        write!(f, "cyc({n})[")?;
        let mut first = true;
        for (e, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{e}:")?;
            write_ratio(f, c, den)?;
        }
        write!(f, "]")
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Cyclotomic {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = |why: &str| ScalarError::Parse(format!("{why} in '{s}'"));
        if let Some(rest) = s.strip_prefix("rat[") {
            let body = rest.strip_suffix(']').ok_or_else(|| bad("missing ']'"))?;
            return Ok(Cyclotomic::from_rational(parse_rational(body)?));
        }
        let rest = s.strip_prefix("cyc(").ok_or_else(|| bad("expected 'cyc(' or 'rat['"))?;
        let (n, rest) = rest.split_once(")[").ok_or_else(|| bad("expected ')['"))?;
        let n: u64 = n.trim().parse().map_err(|_| bad("bad conductor"))?;
        if n == 0 {
            return Err(bad("conductor must be positive"));
        }
        let body = rest.strip_suffix(']').ok_or_else(|| bad("missing ']'"))?;
        let mut terms = Vec::new();
        for item in body.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (e, c) = item.split_once(':').ok_or_else(|| bad("expected 'e:c'"))?;
            let e: i64 = e.trim().parse().map_err(|_| bad("bad exponent"))?;
            terms.push((e, parse_rational(c)?));
        }
        Ok(Cyclotomic::from_terms(n, &terms))
    }
}
