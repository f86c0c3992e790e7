//! Ordinals below ω^ω in Cantor normal form, extended with a top value `INF`.
//!
//! Every value has exactly one representation: a list of `(exponent,
//! coefficient)` terms with strictly decreasing exponents and non-zero
//! coefficients. Exponents are natural numbers, so only ordinals strictly
//! below ω^ω are representable. That is enough for every construction in
//! this crate; multiplication and exponentiation are deliberately absent.
//!
//! The text notation is
//!
//! ```text
//! expr := "INF" | "0" | term ("+" term)*
//! term := "w" ("^" nat)? ("*" nat)? | nat
//! ```
//!
//! with whitespace ignored. Input terms are combined with ordinal addition,
//! so `3+w` parses to `w`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// One `ω^exponent · coefficient` summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub exponent: u32,
    pub coefficient: u64,
}

/// An ordinal strictly below ω^ω.
///
/// The derived `Ord` is the ordinal order: term lists compare
/// lexicographically on `(exponent, coefficient)` and a proper prefix is
/// smaller.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub const fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn nat(n: u64) -> Self {
        Self::omega_pow_times(0, n)
    }

    pub fn omega() -> Self {
        Self::omega_pow_times(1, 1)
    }

    /// `ω^exponent · coefficient`.
    pub fn omega_pow_times(exponent: u32, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Self::zero();
        }
        Ordinal {
            terms: vec![Term { exponent, coefficient }],
        }
    }

    /// Builds an ordinal from arbitrary terms by summing them left to right.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Self {
        terms.into_iter().fold(Self::zero(), |acc, t| {
            acc + Self::omega_pow_times(t.exponent, t.coefficient)
        })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some(t) if t.exponent == 0)
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.terms.last(), Some(t) if t.exponent > 0)
    }

    /// `Some(ξ)` when `self = ξ + 1`.
    pub fn predecessor(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a last term");
        last.coefficient -= 1;
        if last.coefficient == 0 {
            terms.pop();
        }
        Some(Ordinal { terms })
    }

    /// The value as a natural number, if finite.
    pub fn as_natural(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [Term { exponent: 0, coefficient }] => Some(*coefficient),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_natural().is_some()
    }

    /// Exponent of the leading term; `None` for zero.
    pub fn leading_exponent(&self) -> Option<u32> {
        self.terms.first().map(|t| t.exponent)
    }

    pub fn successor(&self) -> Ordinal {
        self.clone() + Ordinal::nat(1)
    }

    /// Notation text, e.g. `w^2+w*3+1`.
    pub fn notation(&self) -> String {
        self.to_string()
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first().copied() else {
            return self;
        };
        let mut terms: Vec<Term> = self
            .terms
            .into_iter()
            .take_while(|t| t.exponent >= head.exponent)
            .collect();
        let mut rest = rhs.terms.into_iter();
        match terms.last_mut() {
            Some(last) if last.exponent == head.exponent => {
                last.coefficient = last
                    .coefficient
                    .checked_add(head.coefficient)
                    .expect("ordinal coefficient overflow");
                rest.next();
            }
            _ => {}
        }
        terms.extend(rest);
        Ordinal { terms }
    }
}

impl Add for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.clone() + rhs.clone()
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match (t.exponent, t.coefficient) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("w")?,
                (1, c) => write!(f, "w*{c}")?,
                (e, 1) => write!(f, "w^{e}")?,
                (e, c) => write!(f, "w^{e}*{c}")?,
            }
        }
        Ok(())
    }
}

/// An ordinal below ω^ω, or the top value `INF`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtOrdinal {
    Ord(Ordinal),
    Inf,
}

impl ExtOrdinal {
    pub fn zero() -> Self {
        ExtOrdinal::Ord(Ordinal::zero())
    }

    pub fn nat(n: u64) -> Self {
        ExtOrdinal::Ord(Ordinal::nat(n))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, ExtOrdinal::Inf)
    }

    pub fn as_ordinal(&self) -> Option<&Ordinal> {
        match self {
            ExtOrdinal::Ord(o) => Some(o),
            ExtOrdinal::Inf => None,
        }
    }

    pub fn as_natural(&self) -> Option<u64> {
        self.as_ordinal().and_then(Ordinal::as_natural)
    }

    pub fn successor(&self) -> ExtOrdinal {
        self.clone() + ExtOrdinal::nat(1)
    }

    pub fn notation(&self) -> String {
        self.to_string()
    }
}

impl From<Ordinal> for ExtOrdinal {
    fn from(o: Ordinal) -> Self {
        ExtOrdinal::Ord(o)
    }
}

impl From<u64> for ExtOrdinal {
    fn from(n: u64) -> Self {
        ExtOrdinal::nat(n)
    }
}

impl Add for ExtOrdinal {
    type Output = ExtOrdinal;

    fn add(self, rhs: ExtOrdinal) -> ExtOrdinal {
        match (self, rhs) {
            (ExtOrdinal::Ord(a), ExtOrdinal::Ord(b)) => ExtOrdinal::Ord(a + b),
            _ => ExtOrdinal::Inf,
        }
    }
}

impl fmt::Display for ExtOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOrdinal::Ord(o) => o.fmt(f),
            ExtOrdinal::Inf => f.write_str("INF"),
        }
    }
}

/// Total order on extended ordinals; `INF` is above everything.
pub fn compare(a: &ExtOrdinal, b: &ExtOrdinal) -> Ordering {
    a.cmp(b)
}

/// `sup⁺ A`: the least ordinal strictly above every member of `values`.
///
/// The empty set gives `0`; any `INF` member gives `INF`.
pub fn sup_plus<'a, I>(values: I) -> ExtOrdinal
where
    I: IntoIterator<Item = &'a ExtOrdinal>,
{
    values
        .into_iter()
        .map(ExtOrdinal::successor)
        .max()
        .unwrap_or_else(ExtOrdinal::zero)
}

// ---------------------------------------------------------------------------
// parsing

/// Parses ordinal notation into its canonical value.
pub fn parse_ordinal(text: &str) -> Result<ExtOrdinal, Error> {
    Parser::new(text).parse()
}

impl FromStr for ExtOrdinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_ordinal(s)
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match parse_ordinal(s)? {
            ExtOrdinal::Ord(o) => Ok(o),
            ExtOrdinal::Inf => Err(Error::syntax(0, "INF is not an ordinal here")),
        }
    }
}

struct Parser<'a> {
    // (byte offset in the original text, char) with whitespace removed
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            pos: 0,
            text,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(self.text.len())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<ExtOrdinal, Error> {
        if self.chars.is_empty() {
            return Err(Error::syntax(0, "empty ordinal notation"));
        }
        if self.peek() == Some('I') {
            for expected in "INF".chars() {
                if !self.eat(expected) {
                    return Err(Error::syntax(self.offset(), "expected INF"));
                }
            }
            self.finish()?;
            return Ok(ExtOrdinal::Inf);
        }
        let mut acc = self.term()?;
        while self.eat('+') {
            acc = acc + self.term()?;
        }
        self.finish()?;
        Ok(ExtOrdinal::Ord(acc))
    }

    fn finish(&self) -> Result<(), Error> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::syntax(self.offset(), format!("unexpected '{c}'"))),
        }
    }

    fn term(&mut self) -> Result<Ordinal, Error> {
        match self.peek() {
            Some('w') | Some('ω') => {
                self.pos += 1;
                let exponent = if self.eat('^') {
                    let at = self.offset();
                    u32::try_from(self.nat()?)
                        .map_err(|_| Error::syntax(at, "exponent too large"))?
                } else {
                    1
                };
                let coefficient = if self.eat('*') { self.nat()? } else { 1 };
                Ok(Ordinal::omega_pow_times(exponent, coefficient))
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.nat()?)),
            Some(c) => Err(Error::syntax(
                self.offset(),
                format!("expected a term, found '{c}'"),
            )),
            None => Err(Error::syntax(self.offset(), "expected a term")),
        }
    }

    fn nat(&mut self) -> Result<u64, Error> {
        let start = self.offset();
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or_else(|| Error::syntax(start, "number too large"))?;
            digits += 1;
            self.pos += 1;
        }
        if digits == 0 {
            return Err(Error::syntax(start, "expected a natural number"));
        }
        Ok(value)
    }
}

impl Serialize for ExtOrdinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtOrdinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_ordinal(&text).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> ExtOrdinal {
        parse_ordinal(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(o("0"), ExtOrdinal::zero());
        assert_eq!(
            o("w*2+5"),
            ExtOrdinal::Ord(Ordinal::omega_pow_times(1, 2) + Ordinal::nat(5))
        );
        assert_eq!(o("3+w"), ExtOrdinal::Ord(Ordinal::omega()));
        assert_eq!(o(" w ^ 2 * 3 + w + 1 ").to_string(), "w^2*3+w+1");
        assert_eq!(o("INF"), ExtOrdinal::Inf);
        assert_eq!(o("w^0*4"), ExtOrdinal::nat(4));
        assert_eq!(o("w*0+2"), ExtOrdinal::nat(2));
    }

    #[test]
    fn parse_errors_report_position() {
        for (text, pos) in [("w+", 2), ("w^", 2), ("2 + x", 4), ("", 0), ("IN", 2), ("w w", 2)] {
            match parse_ordinal(text) {
                Err(Error::Syntax { position, .. }) => assert_eq!(position, pos, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&o("w"), &o("5")), Ordering::Greater);
        assert_eq!(compare(&o("w+1"), &o("w+1")), Ordering::Equal);
        assert_eq!(compare(&o("w^2"), &o("INF")), Ordering::Less);
        assert!(o("w^2") > o("w*100+100"));
        assert!(o("w*2") > o("w+7"));
    }

    #[test]
    fn add_examples() {
        assert_eq!(o("1") + o("w"), o("w"));
        assert_eq!(o("w") + o("1"), o("w+1"));
        assert_eq!(o("w+3") + o("w*2"), o("w*3"));
        assert_eq!(o("w^2+w") + o("w^2*2+1"), o("w^2*3+1"));
        assert_eq!(o("w") + o("INF"), ExtOrdinal::Inf);
    }

    #[test]
    fn sup_plus_examples() {
        assert_eq!(sup_plus([]), o("0"));
        assert_eq!(sup_plus(&[o("3"), o("w+1")]), o("w+2"));
        assert_eq!(sup_plus(&[o("w"), ExtOrdinal::Inf]), ExtOrdinal::Inf);
    }

    #[test]
    fn predecessor_and_kinds() {
        assert_eq!(Ordinal::nat(1).predecessor(), Some(Ordinal::zero()));
        assert_eq!("w+2".parse::<Ordinal>().unwrap().predecessor().unwrap().to_string(), "w+1");
        assert!("w*2".parse::<Ordinal>().unwrap().is_limit());
        assert!(!Ordinal::zero().is_limit() && !Ordinal::zero().is_successor());
    }

    #[test]
    fn serde_uses_notation() {
        let v = serde_json::to_string(&o("w^2+3")).unwrap();
        assert_eq!(v, "\"w^2+3\"");
        let back: ExtOrdinal = serde_json::from_str(&v).unwrap();
        assert_eq!(back, o("w^2+3"));
        assert_eq!(serde_json::to_string(&ExtOrdinal::Inf).unwrap(), "\"INF\"");
    }
}
