//! Text format for polynomial systems.
//!
//! One polynomial per line. A polynomial is a signed sum of terms; a term is
//! a product of factors separated by whitespace or `*`. A factor is either a
//! number (`3`, `-7` only as a leading sign, `1/200` for rationals) or a
//! variable power (`x0`, `x2^3`). `#` starts a comment running to the end of
//! the line; blank lines are skipped.
//!
//! ```text
//! # unit circle, homogenized
//! x0^2 + x1^2 - x2^2
//! ```
//!
//! Every line must be homogeneous (all monomials of one total degree);
//! offending monomials are reported otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::{HomogeneousPoly, PolySystem, SystemError};

#[derive(Debug, thiserror::Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("malformed number `{0}`")]
    BadNumber(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed variable `{0}`")]
    BadVariable(String),
    #[error("term with no factors")]
    EmptyTerm,
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("non-homogeneous polynomial; offending monomials: {}", .0.join(", "))]
    NonHomogeneous(Vec<String>),
    #[error("no polynomials in input")]
    EmptyInput,
    #[error(transparent)]
    System(#[from] SystemError),
}

struct RawTerm {
    col: usize,
    coef: BigRational,
    exps: BTreeMap<usize, u32>,
}

impl RawTerm {
    fn degree(&self) -> usize {
        self.exps.values().map(|&e| e as usize).sum()
    }

    fn monomial_string(&self) -> String {
        if self.exps.is_empty() {
            return "1".into();
        }
        self.exps
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    format!("x{v}")
                } else {
                    format!("x{v}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parse a whole system, one polynomial per line.
pub fn parse_system(input: &str) -> Result<PolySystem, ParseError> {
    let mut lines: Vec<(usize, Vec<RawTerm>, usize)> = Vec::new(); // (line no, terms, degree)
    let mut max_var = 0usize;
    for (idx, raw_line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let body = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        };
        if body.trim().is_empty() {
            continue;
        }
        let terms = parse_line(line_no, body)?;
        let degree = terms[0].degree();
        let offending: Vec<String> = terms
            .iter()
            .filter(|t| t.degree() != degree)
            .map(|t| format!("`{}` (degree {})", t.monomial_string(), t.degree()))
            .collect();
        if !offending.is_empty() {
            return Err(ParseError {
                line: line_no,
                col: terms
                    .iter()
                    .find(|t| t.degree() != degree)
                    .map(|t| t.col)
                    .unwrap_or(1),
                kind: ParseErrorKind::NonHomogeneous(offending),
            });
        }
        for t in &terms {
            if let Some((&v, _)) = t.exps.iter().next_back() {
                max_var = max_var.max(v);
            }
        }
        lines.push((line_no, terms, degree));
    }
    if lines.is_empty() {
        return Err(ParseError {
            line: 0,
            col: 0,
            kind: ParseErrorKind::EmptyInput,
        });
    }
    let nvars = max_var + 1;
    let mut polys = Vec::new();
    for (line_no, terms, degree) in lines {
        let dense: Vec<(Vec<u32>, BigRational)> = terms
            .into_iter()
            .map(|t| {
                let mut alpha = vec![0u32; nvars];
                for (v, e) in t.exps {
                    alpha[v] = e;
                }
                (alpha, t.coef)
            })
            .collect();
        let p = HomogeneousPoly::new(nvars, degree, dense);
        if p.is_zero() {
            return Err(ParseError {
                line: line_no,
                col: 1,
                kind: ParseErrorKind::ZeroPolynomial,
            });
        }
        polys.push(p);
    }
    PolySystem::new(polys).map_err(|e| ParseError {
        line: 0,
        col: 0,
        kind: e.into(),
    })
}

fn parse_line(line_no: usize, body: &str) -> Result<Vec<RawTerm>, ParseError> {
    let err = |col: usize, kind: ParseErrorKind| ParseError {
        line: line_no,
        col,
        kind,
    };
    let chars: Vec<char> = body.chars().collect();
    let mut i = 0usize;
    let mut terms: Vec<RawTerm> = Vec::new();
    let mut cur: Option<RawTerm> = None;
    let mut sign = 1i64;
    let mut pending_sign = true; // a leading sign may precede the first factor
    loop {
        while i < chars.len() && (chars[i].is_whitespace() || chars[i] == '*') {
            i += 1;
        }
        if i == chars.len() {
            break;
        }
        let col = i + 1;
        let c = chars[i];
        if c == '+' || c == '-' {
            if let Some(t) = cur.take() {
                terms.push(t);
            } else if !pending_sign {
                return Err(err(col, ParseErrorKind::EmptyTerm));
            }
            sign = if c == '-' { -sign } else { sign };
            if cur.is_none() && !pending_sign {
                sign = if c == '-' { -1 } else { 1 };
            }
            // successive signs multiply: `- -x0` is `x0`
            if pending_sign {
                // keep accumulated sign
            } else {
                pending_sign = true;
            }
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut text: String = chars[start..i].iter().collect();
            let numer: BigInt = text
                .parse()
                .map_err(|_| err(col, ParseErrorKind::BadNumber(text.clone())))?;
            let mut denom = BigInt::from(1);
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    text.push('/');
                    return Err(err(col, ParseErrorKind::BadNumber(text)));
                }
                let dtext: String = chars[dstart..i].iter().collect();
                text = format!("{text}/{dtext}");
                denom = dtext
                    .parse()
                    .map_err(|_| err(col, ParseErrorKind::BadNumber(text.clone())))?;
                if denom.is_zero() {
                    return Err(err(col, ParseErrorKind::ZeroDenominator(text)));
                }
            }
            let t = cur.get_or_insert_with(|| RawTerm {
                col,
                coef: BigRational::from_integer(BigInt::from(1)),
                exps: BTreeMap::new(),
            });
            t.coef *= BigRational::new(numer, denom);
            if pending_sign {
                t.coef *= BigRational::from_integer(BigInt::from(sign));
                sign = 1;
                pending_sign = false;
            }
            continue;
        }
        if c == 'x' {
            let start = i;
            i += 1;
            let vstart = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if vstart == i {
                let text: String = chars[start..i.min(chars.len())].iter().collect();
                return Err(err(col, ParseErrorKind::BadVariable(text)));
            }
            let var: usize = chars[vstart..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| {
                    let text: String = chars[start..i].iter().collect();
                    err(col, ParseErrorKind::BadVariable(text))
                })?;
            let mut exp = 1u32;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let estart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let etext: String = chars[estart..i].iter().collect();
                exp = etext.parse().map_err(|_| {
                    let text: String = chars[start..i].iter().collect();
                    err(col, ParseErrorKind::BadVariable(text))
                })?;
            }
            let t = cur.get_or_insert_with(|| RawTerm {
                col,
                coef: BigRational::from_integer(BigInt::from(1)),
                exps: BTreeMap::new(),
            });
            if pending_sign {
                t.coef *= BigRational::from_integer(BigInt::from(sign));
                sign = 1;
                pending_sign = false;
            }
            *t.exps.entry(var).or_insert(0) += exp;
            continue;
        }
        return Err(err(col, ParseErrorKind::UnexpectedChar(c)));
    }
    if let Some(t) = cur.take() {
        terms.push(t);
    } else if pending_sign && !terms.is_empty() {
        return Err(err(chars.len(), ParseErrorKind::EmptyTerm));
    }
    if terms.is_empty() {
        return Err(err(1, ParseErrorKind::EmptyTerm));
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integer_and_rational_coefficients() {
        let sys = parse_system("2 * x0^2 - 1/3 x0 x1 + x1^2\n").unwrap();
        assert_eq!(sys.m(), 1);
        assert_eq!(sys.nvars(), 2);
        let p = &sys.polys()[0];
        assert_eq!(p.degree(), 2);
        assert_eq!(p.terms().len(), 3);
        assert_eq!(
            p.terms()[&vec![1, 1]],
            BigRational::new(BigInt::from(-1), BigInt::from(3))
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a conic\n\nx0^2 + x1^2 - x2^2  # homogenized unit circle\n\n";
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.m(), 1);
        assert_eq!(sys.nvars(), 3);
    }

    #[test]
    fn multi_line_system_shares_variables() {
        let sys = parse_system("x0^2 + x1^2 - x3^2\nx2\n").unwrap();
        assert_eq!(sys.m(), 2);
        assert_eq!(sys.nvars(), 4);
        assert_eq!(sys.degrees(), vec![2, 1]);
    }

    #[test]
    fn rejects_non_homogeneous_with_offenders() {
        let e = parse_system("x0^2 + x1\n").unwrap_err();
        assert_eq!(e.line, 1);
        match e.kind {
            ParseErrorKind::NonHomogeneous(ms) => {
                assert_eq!(ms, vec!["`x1` (degree 1)".to_string()]);
            }
            k => panic!("{k:?}"),
        }
    }

    #[test]
    fn rejects_garbage_with_position() {
        let e = parse_system("x0^2 + y^2\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 8));
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedChar('y')));
    }

    #[test]
    fn rejects_zero_denominator() {
        let e = parse_system("1/0 x0\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::ZeroDenominator(_)));
    }

    #[test]
    fn rejects_cancelled_zero_polynomial() {
        let e = parse_system("x0 - x0\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::ZeroPolynomial));
    }

    #[test]
    fn repeated_variables_multiply() {
        let sys = parse_system("x0 x0 x1\n").unwrap();
        assert_eq!(sys.polys()[0].terms().iter().next().unwrap().0, &vec![2, 1]);
    }

    #[test]
    fn double_negation() {
        let sys = parse_system("- - x0 x1\n").unwrap();
        assert_eq!(
            sys.polys()[0].terms()[&vec![1, 1]],
            BigRational::from_integer(BigInt::from(1))
        );
    }
}
