//! Text grammar for function specifications.
//!
//! A complex literal is `re,im` (or just `re`); a factor adds `:mult`.
//! Lists are separated by `;`. Whitespace around tokens is ignored.

use std::fmt;

use newton_atlas_core::newton_map::RationalMap;
use newton_atlas_core::{Cx, FactoredRational, Poly};

/// Parse failure inside one flag value, positioned 1-based.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{flag}:{line}:{column}: {message}")]
pub struct ParseError {
    pub flag: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FunctionSpec {
    Factored { roots: Vec<(Cx, u32)>, poles: Vec<(Cx, u32)> },
    /// Ascending coefficients.
    Raw { num: Vec<Cx>, den: Vec<Cx> },
}

impl FunctionSpec {
    pub fn to_factored(&self) -> Option<Result<FactoredRational, newton_atlas_core::Error>> {
        match self {
            FunctionSpec::Factored { roots, poles } => Some(FactoredRational::new(roots.clone(), poles.clone())),
            FunctionSpec::Raw { .. } => None,
        }
    }

    pub fn to_raw_map(&self) -> Option<Result<RationalMap, newton_atlas_core::Error>> {
        match self {
            FunctionSpec::Raw { num, den } => {
                Some(RationalMap::new(Poly::from_coeffs(num.clone()), Poly::from_coeffs(den.clone())))
            }
            FunctionSpec::Factored { .. } => None,
        }
    }
}

/// A token and the byte offset where it starts in the flag value.
struct Piece<'a> {
    text: &'a str,
    offset: usize,
}

fn split<'a>(s: &'a str, sep: char, base: usize) -> Vec<Piece<'a>> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == sep {
            out.push(Piece { text: &s[start..i], offset: base + start });
            start = i + c.len_utf8();
        }
    }
    out.push(Piece { text: &s[start..], offset: base + start });
    out
}

fn trim(p: Piece<'_>) -> Piece<'_> {
    let lead = p.text.len() - p.text.trim_start().len();
    Piece { text: p.text.trim(), offset: p.offset + lead }
}

struct Ctx<'a> {
    flag: &'a str,
    src: &'a str,
}

impl Ctx<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> ParseError {
        let before = &self.src[..offset.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError { flag: self.flag.to_string(), line, column, message: message.into() }
    }

    fn number(&self, p: &Piece<'_>) -> Result<f64, ParseError> {
        if p.text.is_empty() {
            return Err(self.err(p.offset, "expected a number"));
        }
        match p.text.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            Ok(_) => Err(self.err(p.offset, format!("number `{}` is not finite", p.text))),
            Err(_) => Err(self.err(p.offset, format!("invalid number `{}`", p.text))),
        }
    }

    fn complex(&self, p: Piece<'_>) -> Result<Cx, ParseError> {
        let parts = split(p.text, ',', p.offset);
        if parts.len() > 2 {
            return Err(self.err(parts[2].offset - 1, "expected `re,im`"));
        }
        let mut it = parts.into_iter().map(trim);
        let re = self.number(&it.next().expect("split yields one piece"))?;
        let im = match it.next() {
            Some(q) => self.number(&q)?,
            None => 0.0,
        };
        Ok(Cx::new(re, im))
    }

    fn factor(&self, p: Piece<'_>) -> Result<(Cx, u32), ParseError> {
        let mut parts = split(p.text, ':', p.offset).into_iter();
        let z = self.complex(trim(parts.next().expect("split yields one piece")))?;
        let mult = match parts.next().map(trim) {
            None => 1,
            Some(m) => match m.text.parse::<u32>() {
                Ok(k) if k >= 1 => k,
                _ => return Err(self.err(m.offset, format!("multiplicity `{}` is not a positive integer", m.text))),
            },
        };
        if let Some(extra) = parts.next() {
            return Err(self.err(extra.offset - 1, "unexpected `:`"));
        }
        Ok((z, mult))
    }

    fn entries(&self) -> Vec<Piece<'_>> {
        if self.src.trim().is_empty() {
            return Vec::new();
        }
        split(self.src, ';', 0).into_iter().map(trim).collect()
    }

    fn check_nonempty(&self, p: &Piece<'_>) -> Result<(), ParseError> {
        if p.text.is_empty() {
            return Err(self.err(p.offset, "empty list entry"));
        }
        Ok(())
    }
}

/// Parses `re,im:mult;...`; an empty string is the empty list.
pub fn parse_factors(flag: &str, src: &str) -> Result<Vec<(Cx, u32)>, ParseError> {
    let ctx = Ctx { flag, src };
    ctx.entries()
        .into_iter()
        .map(|p| {
            ctx.check_nonempty(&p)?;
            ctx.factor(p)
        })
        .collect()
}

/// Parses `re[,im];...` coefficients, lowest degree first.
pub fn parse_coeffs(flag: &str, src: &str) -> Result<Vec<Cx>, ParseError> {
    let ctx = Ctx { flag, src };
    let out = ctx
        .entries()
        .into_iter()
        .map(|p| {
            ctx.check_nonempty(&p)?;
            ctx.complex(p)
        })
        .collect::<Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err(ctx.err(0, "expected at least one coefficient"));
    }
    Ok(out)
}

struct Complex(Cx);

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `+ 0.0` folds -0 into 0
        write!(f, "{},{}", self.0.re + 0.0, self.0.im + 0.0)
    }
}

pub fn format_factors(list: &[(Cx, u32)]) -> String {
    list.iter().map(|&(z, k)| format!("{}:{k}", Complex(z))).collect::<Vec<_>>().join(";")
}

pub fn format_coeffs(list: &[Cx]) -> String {
    list.iter().map(|&z| Complex(z).to_string()).collect::<Vec<_>>().join(";")
}
