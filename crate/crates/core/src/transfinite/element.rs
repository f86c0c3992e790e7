use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// An element of `G_η`.
///
/// `G_0` is trivial, `G_{ξ+1} = G_ξ ⊕ ℤ/2` and, for limit `η`, `G_η` is the
/// finitely supported sum of the `G_ξ` with `ξ < η`. The identity of every
/// level is `Zero`; the other variants never represent an identity, so each
/// element has a single representation.
///
/// Text form: `0`, `(g,1)` or `(g,0)` for pairs, `{ξ:g, ξ:g}` for limit
/// levels with keys increasing, e.g. `{2:(0,1), w:((0,1),0)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EtaElement {
    Zero,
    Pair(Box<EtaElement>, bool),
    Support(BTreeMap<Ordinal, EtaElement>),
}

impl EtaElement {
    pub fn pair(g: EtaElement, bit: bool) -> Self {
        if g == EtaElement::Zero && !bit {
            EtaElement::Zero
        } else {
            EtaElement::Pair(Box::new(g), bit)
        }
    }

    pub fn support<I: IntoIterator<Item = (Ordinal, EtaElement)>>(entries: I) -> Self {
        let map: BTreeMap<Ordinal, EtaElement> = entries
            .into_iter()
            .filter(|(_, g)| *g != EtaElement::Zero)
            .collect();
        if map.is_empty() {
            EtaElement::Zero
        } else {
            EtaElement::Support(map)
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == EtaElement::Zero
    }

    /// Checks that the element belongs to `G_η`.
    pub fn validate(&self, eta: &Ordinal) -> Result<()> {
        match self {
            EtaElement::Zero => Ok(()),
            EtaElement::Pair(g, _) => match eta.predecessor() {
                Some(xi) => g.validate(&xi),
                None => Err(Error::InvalidElement(format!(
                    "pair {self} at level {eta}, which is not a successor"
                ))),
            },
            EtaElement::Support(map) => {
                if !eta.is_limit() {
                    return Err(Error::InvalidElement(format!(
                        "support map {self} at level {eta}, which is not a limit"
                    )));
                }
                for (xi, g) in map {
                    if xi >= eta {
                        return Err(Error::InvalidElement(format!("key {xi} is not below {eta}")));
                    }
                    g.validate(xi)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for EtaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EtaElement::Zero => write!(f, "0"),
            EtaElement::Pair(g, bit) => write!(f, "({g},{})", u8::from(*bit)),
            EtaElement::Support(map) => {
                write!(f, "{{")?;
                for (i, (xi, g)) in map.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{xi}:{g}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl FromStr for EtaElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = ElementParser { chars, pos: 0, end: s.len() };
        let e = p.element()?;
        if p.pos != p.chars.len() {
            return Err(Error::syntax(p.offset(), "trailing input"));
        }
        Ok(e)
    }
}

struct ElementParser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl ElementParser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |c| c.0)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::syntax(self.offset(), format!("expected '{want}'")))
        }
    }

    fn element(&mut self) -> Result<EtaElement> {
        match self.peek() {
            Some('0') => {
                self.pos += 1;
                Ok(EtaElement::Zero)
            }
            Some('(') => {
                self.pos += 1;
                let g = self.element()?;
                self.expect(',')?;
                let bit = match self.peek() {
                    Some('0') => false,
                    Some('1') => true,
                    _ => return Err(Error::syntax(self.offset(), "expected bit 0 or 1")),
                };
                self.pos += 1;
                self.expect(')')?;
                if g.is_zero() && !bit {
                    return Err(Error::syntax(self.offset(), "the identity is written 0"));
                }
                Ok(EtaElement::Pair(Box::new(g), bit))
            }
            Some('{') => {
                self.pos += 1;
                let mut map = BTreeMap::new();
                loop {
                    let start = self.offset();
                    let mut key = String::new();
                    while let Some(c) = self.peek() {
                        if c == ':' {
                            break;
                        }
                        key.push(c);
                        self.pos += 1;
                    }
                    let xi: Ordinal = key.parse().map_err(|e| match e {
                        Error::Syntax { position, message } => Error::syntax(start + position, message),
                        other => other,
                    })?;
                    self.expect(':')?;
                    let g = self.element()?;
                    if g.is_zero() {
                        return Err(Error::syntax(self.offset(), "support entries must be non-zero"));
                    }
                    if map.insert(xi, g).is_some() {
                        return Err(Error::syntax(start, "duplicate key"));
                    }
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        Some('}') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(Error::syntax(self.offset(), "expected ',' or '}'")),
                    }
                }
                Ok(EtaElement::Support(map))
            }
            _ => Err(Error::syntax(self.offset(), "expected '0', '(' or '{'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for text in ["0", "(0,1)", "((0,1),0)", "{2:(0,1)}", "{1:(0,1), w:{3:((0,1),1)}}"] {
            let e: EtaElement = text.parse().unwrap();
            assert_eq!(e.to_string(), text);
        }
        assert!("(0,0)".parse::<EtaElement>().is_err());
        assert!("{2:0}".parse::<EtaElement>().is_err());
        assert!("(0,2)".parse::<EtaElement>().is_err());
    }

    #[test]
    fn validation_follows_the_level() {
        let w: Ordinal = "w".parse().unwrap();
        let e: EtaElement = "{2:(0,1)}".parse().unwrap();
        assert!(e.validate(&w).is_ok());
        assert!(e.validate(&Ordinal::nat(3)).is_err());
        let e: EtaElement = "{w:(0,1)}".parse().unwrap();
        assert!(e.validate(&w).is_err());
        let pair: EtaElement = "((0,1),1)".parse().unwrap();
        assert!(pair.validate(&Ordinal::nat(2)).is_ok());
        assert!(pair.validate(&Ordinal::nat(1)).is_err());
    }
}
