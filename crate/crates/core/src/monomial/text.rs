//! Plain-text ideal files.
//!
//! ```text
//! # anything after '#' is ignored
//! ring n=4
//! x1^2*x2
//! 2:1 3:1
//! ```
//!
//! The header `ring n=<int>` must come first. Each following nonblank line
//! is one monomial, either compact (`x1^2*x2`, factors joined by `*`, a
//! missing `^e` meaning 1) or as space-separated `var:exp` pairs. `1` is the
//! unit monomial. Variables are 1-based and repeated factors multiply. A file
//! with no monomial lines is the zero ideal.
//!
//! [`format_ideal`] prints the header and the minimal generators in compact
//! form, lexicographically sorted, so parse-then-print is the identity on
//! canonical text.

use super::{ExponentVector, MonomialIdeal, MAX_EXPONENT};
use crate::error::{Error, Result};
use std::fmt::Write;

pub fn format_monomial(u: &ExponentVector) -> String {
    if u.is_one() {
        return "1".to_string();
    }
    let mut s = String::new();
    for (i, &e) in u.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        if e == 1 {
            write!(s, "x{}", i + 1).unwrap();
        } else {
            write!(s, "x{}^{}", i + 1, e).unwrap();
        }
    }
    s
}

pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    let mut s = format!("ring n={}\n", ideal.n());
    for g in ideal.gens() {
        s.push_str(&format_monomial(g));
        s.push('\n');
    }
    s
}

pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    let mut n: Option<usize> = None;
    let mut gens = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match n {
            None => n = Some(parse_header(line, line_no)?),
            Some(n) => gens.push(parse_monomial(line, n, line_no)?),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing `ring n=<int>` header".into(),
    })?;
    MonomialIdeal::minimalize(n, gens)
}

fn parse_header(line: &str, line_no: usize) -> Result<usize> {
    let err = |msg: &str| Error::Parse {
        line: line_no,
        msg: msg.to_string(),
    };
    let rest = line
        .strip_prefix("ring")
        .ok_or_else(|| err("expected `ring n=<int>` header"))?
        .trim_start();
    let value = rest
        .strip_prefix("n=")
        .ok_or_else(|| err("expected `n=<int>` after `ring`"))?;
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| err("variable count is not a positive integer"))?;
    if n == 0 {
        return Err(err("variable count must be positive"));
    }
    Ok(n)
}

/// Parses one monomial in either accepted syntax.
pub fn parse_monomial(line: &str, n: usize, line_no: usize) -> Result<ExponentVector> {
    let err = |msg: String| Error::Parse { line: line_no, msg };
    let line = line.trim();
    let mut exps = vec![0u64; n];
    let mut bump = |var: usize, e: u64| -> Result<()> {
        if var == 0 || var > n {
            return Err(err(format!("variable x{var} outside x1..x{n}")));
        }
        exps[var - 1] += e;
        if exps[var - 1] > MAX_EXPONENT as u64 {
            return Err(Error::Overflow);
        }
        Ok(())
    };
    let num = |s: &str, what: &str| -> Result<u64> {
        s.trim()
            .parse::<u64>()
            .map_err(|_| err(format!("bad {what} `{s}`")))
    };
    if line == "1" {
        // unit monomial
    } else if line.contains(':') {
        for pair in line.split_whitespace() {
            let (v, e) = pair
                .split_once(':')
                .ok_or_else(|| err(format!("expected `var:exp`, found `{pair}`")))?;
            bump(num(v, "variable index")? as usize, num(e, "exponent")?)?;
        }
    } else {
        for factor in line.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| err(format!("expected `x<i>` factor, found `{factor}`")))?;
            let (v, e) = match body.split_once('^') {
                Some((v, e)) => (v, num(e, "exponent")?),
                None => (body, 1),
            };
            bump(num(v, "variable index")? as usize, e)?;
        }
    }
    ExponentVector::new(exps.into_iter().map(|e| e as u32).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn both_syntaxes_parse() {
        let i = parse_ideal("# path ideal\nring n=3\nx1*x2\n2:1 3:1\n").unwrap();
        assert_eq!(format_ideal(&i), "ring n=3\nx2*x3\nx1*x2\n");
        let j = parse_ideal("ring n=2\nx1^2*x2\nx1*x1*x1\n").unwrap();
        assert_eq!(format_ideal(&j), "ring n=2\nx1^2*x2\nx1^3\n");
    }

    #[test]
    fn zero_and_unit_ideals() {
        assert!(parse_ideal("ring n=4\n").unwrap().is_zero());
        let u = parse_ideal("ring n=2\n1\nx1\n").unwrap();
        assert!(u.is_unit());
        assert_eq!(format_ideal(&u), "ring n=2\n1\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_ideal("x1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_ideal("ring n=2\nx1\nx3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_ideal("ring n=2\ny1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal(""), Err(Error::Parse { line: 0, .. })));
        assert!(matches!(parse_ideal("ring n=0\n"), Err(Error::Parse { .. })));
    }

    proptest! {
        #[test]
        fn print_parse_is_identity_on_canonical_forms(
            n in 1usize..6,
            raw in prop::collection::vec(prop::collection::vec(0u32..4, 6), 0..8),
        ) {
            let gens: Vec<ExponentVector> = raw
                .into_iter()
                .map(|v| ExponentVector::new(v[..n].to_vec()).unwrap())
                .collect();
            let i = MonomialIdeal::minimalize(n, gens).unwrap();
            let text = format_ideal(&i);
            let back = parse_ideal(&text).unwrap();
            prop_assert_eq!(&back, &i);
            prop_assert_eq!(format_ideal(&back), text);
        }
    }
}
