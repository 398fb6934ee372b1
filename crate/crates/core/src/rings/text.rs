//! Scalar text formats: `(a,b,c,d)` for ℤ[ω], `(a,b,c,d)/s2^k` for
//! ℤ[ω,1/√2], `(a,b)/s2^k` for ℤ[1/√2]. A bare decimal integer is accepted
//! wherever a scalar is expected, and the `/s2^k` suffix may be omitted
//! for `k = 0`. Whitespace is ignored.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{DOmega, DRoot2, ZOmega, ZRoot2};
use crate::error::Error;

fn parse_int(s: &str) -> Result<BigInt, Error> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("invalid integer {s:?}")))
}

/// Splits `(x1,...,xn)[/s2^k]` into its integer tuple and exponent.
fn parse_tuple(s: &str, arity: usize) -> Result<(Vec<BigInt>, u32), Error> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let (body, k) = match s.split_once('/') {
        Some((body, den)) => {
            let k = den
                .strip_prefix("s2^")
                .ok_or_else(|| Error::Parse(format!("denominator must be s2^k, got {den:?}")))?
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid exponent in {den:?}")))?;
            (body, k)
        }
        None => (s.as_str(), 0),
    };
    if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        let parts = inner
            .split(',')
            .map(parse_int)
            .collect::<Result<Vec<_>, _>>()?;
        if parts.len() != arity {
            return Err(Error::Parse(format!(
                "expected {arity} coefficients, got {}",
                parts.len()
            )));
        }
        Ok((parts, k))
    } else {
        let n = parse_int(body)?;
        let mut parts = vec![BigInt::default(); arity];
        parts[arity - 1] = n;
        if arity == 2 {
            parts.swap(0, 1);
        }
        Ok((parts, k))
    }
}

impl FromStr for ZRoot2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let (v, k) = parse_tuple(s, 2)?;
        if k != 0 {
            return Err(Error::Parse("quadratic integer cannot carry a denominator".into()));
        }
        let [a, b]: [BigInt; 2] = v.try_into().expect("arity checked");
        Ok(ZRoot2 { a, b })
    }
}

impl FromStr for DRoot2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let (v, k) = parse_tuple(s, 2)?;
        let [a, b]: [BigInt; 2] = v.try_into().expect("arity checked");
        Ok(DRoot2::new(ZRoot2 { a, b }, k))
    }
}

impl FromStr for ZOmega {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let (v, k) = parse_tuple(s, 4)?;
        if k != 0 {
            return Err(Error::Parse("cyclotomic integer cannot carry a denominator".into()));
        }
        let [a, b, c, d]: [BigInt; 4] = v.try_into().expect("arity checked");
        Ok(ZOmega { a, b, c, d })
    }
}

impl FromStr for DOmega {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let (v, k) = parse_tuple(s, 4)?;
        let [a, b, c, d]: [BigInt; 4] = v.try_into().expect("arity checked");
        Ok(DOmega::new(ZOmega { a, b, c, d }, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_and_loose_forms() {
        let x: DOmega = "( 1, -2 ,3,5 ) / s2^3".parse().unwrap();
        assert_eq!(x.to_string(), "(1,-2,3,5)/s2^3");
        assert_eq!("-7".parse::<DOmega>().unwrap(), DOmega::from_int(-7));
        assert_eq!("(0,2,0,2)/s2^2".parse::<DOmega>().unwrap().to_string(), "(0,1,0,1)/s2^0");
        let y: DRoot2 = "(1,0)/s2^1".parse().unwrap();
        assert_eq!(y.lde(), 1);
        assert_eq!("5".parse::<DRoot2>().unwrap(), DRoot2::from_int(5));
        assert_eq!("(1,2,3,4)".parse::<ZOmega>().unwrap(), ZOmega::new(1, 2, 3, 4));
    }

    #[test]
    fn rejects_malformed_scalars() {
        for bad in ["", "(1,2,3)", "(1,2,3,4)/2^3", "(1,x,3,4)", "(1,2,3,4)/s2^-1", "((1,2,3,4)"] {
            assert!(bad.parse::<DOmega>().is_err(), "{bad}");
        }
        assert!("(1,2)/s2^1".parse::<ZRoot2>().is_err());
    }
}
