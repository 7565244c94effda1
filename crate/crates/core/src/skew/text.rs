//! Text form of polynomials.
//!
//! ```text
//! poly  := term (('+' | '-') term)*
//! term  := coeff ['*'] ['x' ['^' INT]]  |  'x' ['^' INT]
//! coeff := INT | 'a' | 'a^' INT | tuple
//! ```
//!
//! Printing lists terms by descending degree, e.g. `x^3+a^2*x+a^2`.

use std::fmt;

use super::{SkewPoly, SkewRing};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};

impl SkewPoly {
    /// Text form with coefficients rendered by `fmt_elem`.
    pub fn format_with(&self, fmt_elem: impl Fn(&Field, Fe) -> String) -> String {
        let f = self.ring.field();
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            if c == Fe::ONE && i > 0 {
                out.push_str(&mono);
            } else if i == 0 {
                out.push_str(&fmt_elem(f, c));
            } else {
                out.push_str(&format!("{}*{mono}", fmt_elem(f, c)));
            }
        }
        out
    }

    /// Text form with coefficient tuples, independent of any generator.
    pub fn to_tuple_string(&self) -> String {
        self.format_with(|f, a| f.format_tuple(a))
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|field, a| field.format(a)))
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let is_sep = depth == 0 && (ch == '+' || ch == '-') && prev != Some('^');
        if is_sep {
            if !cur.is_empty() {
                terms.push((negative, std::mem::take(&mut cur)));
            } else if prev.is_some() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            negative = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("missing term in `{s}`")));
    }
    terms.push((negative, cur));
    Ok(terms)
}

impl SkewRing {
    /// Parses the polynomial grammar; `a` is the field generator.
    pub fn parse(&self, s: &str) -> Result<SkewPoly> {
        let f = self.field();
        let mut coeffs: Vec<Fe> = Vec::new();
        for (negative, term) in split_terms(s)? {
            let (coeff_str, deg) = match term.find('x') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let exp = &term[pos + 1..];
                    let deg = if exp.is_empty() {
                        1
                    } else {
                        exp.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in `{term}`")))?
                    };
                    let c = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
                    (c, deg)
                }
            };
            let mut c = if coeff_str.is_empty() {
                Fe::ONE
            } else {
                f.parse_elem(coeff_str)?
            };
            if negative {
                c = f.neg(c);
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Fe::ZERO);
            }
            coeffs[deg] = f.add(coeffs[deg], c);
        }
        Ok(SkewPoly::from_raw(self, coeffs))
    }
}
