//! Matrix text format: rows separated by `;`, entries by `,`, each entry
//! in the scalar format of [`crate::rings`]. Separators inside parentheses
//! belong to the scalar.

use std::str::FromStr;

use super::{Mat2, Mat3};
use crate::error::{Error, Result};

fn split_top_level(s: &str, sep: char) -> Result<Vec<&str>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut parts = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced ')'".into()));
                }
            }
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced '('".into()));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

fn parse_grid<T: FromStr<Err = Error>, const N: usize>(s: &str) -> Result<[[T; N]; N]> {
    let rows = split_top_level(s.trim(), ';')?;
    if rows.len() != N {
        return Err(Error::Parse(format!("expected {N} rows, got {}", rows.len())));
    }
    let mut parsed = Vec::with_capacity(N);
    for row in rows {
        let cells = split_top_level(row, ',')?;
        if cells.len() != N {
            return Err(Error::Parse(format!("expected {N} entries per row, got {}", cells.len())));
        }
        let vals = cells.into_iter().map(str::parse).collect::<Result<Vec<T>>>()?;
        parsed.push(
            <[T; N]>::try_from(vals).unwrap_or_else(|_| unreachable!("length checked")),
        );
    }
    Ok(<[[T; N]; N]>::try_from(parsed).unwrap_or_else(|_| unreachable!("length checked")))
}

impl FromStr for Mat2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Mat2::new(parse_grid(s)?))
    }
}

impl FromStr for Mat3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Mat3::new(parse_grid(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{bloch, Gate};

    #[test]
    fn t_gate_line() {
        let line = "(0,0,0,1)/s2^0,(0,0,0,0)/s2^0;(0,0,0,0)/s2^0,(0,0,1,0)/s2^0";
        let t: Mat2 = line.parse().unwrap();
        assert_eq!(&t, Gate::T.unitary());
        assert_eq!(t.to_string(), line);
    }

    #[test]
    fn bloch_round_trip() {
        let v = bloch(Gate::T.unitary());
        assert_eq!(v.to_string().parse::<Mat3>().unwrap(), v);
    }

    #[test]
    fn malformed_matrices() {
        for bad in ["1,0;0", "1,0;0,1;0,0", "(1,0,0,0,0;0,1", "1,0;0,x"] {
            assert!(bad.parse::<Mat2>().is_err(), "{bad}");
        }
    }
}
