//! Text form of multivectors: `1 + 2 e12`, `-0.5 e123`, `0.5 - g03`.
//!
//! Blades are written as the signature prefix followed by ascending label
//! digits. Labels above 9 use a braced list, e.g. `e{1,10}`.

use std::fmt;

use super::{Blade, Multivector, Signature};
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    pub(crate) fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    /// Optional sign: `+`, `-`, or U+2212. Returns `None` when absent.
    pub(crate) fn sign(&mut self) -> Option<f64> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(1.0)
            }
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Some(-1.0)
            }
            _ => None,
        }
    }

    /// Unsigned decimal without exponent (the exponent marker would clash
    /// with the `e` blade prefix).
    pub(crate) fn number(&mut self) -> Result<Option<f64>> {
        let start = self.pos;
        let rest = self.rest();
        let len = rest.find(|c: char| !(c.is_ascii_digit() || c == '.')).unwrap_or(rest.len());
        if len == 0 {
            return Ok(None);
        }
        let text = &rest[..len];
        let value: f64 = text.parse().map_err(|_| Error::Parse { pos: start, msg: format!("bad number {text:?}") })?;
        self.pos += len;
        Ok(Some(value))
    }

    /// Blade after its prefix has been seen.
    pub(crate) fn blade(&mut self, sig: &Signature) -> Result<Blade> {
        let start = self.pos;
        let prefix = self.bump().ok_or_else(|| self.error("expected blade"))?;
        if prefix != sig.prefix() {
            return Err(Error::Parse {
                pos: start,
                msg: format!("prefix '{prefix}' does not belong to {sig} (expects '{}')", sig.prefix()),
            });
        }
        let mut labels = Vec::new();
        if self.eat("{") {
            loop {
                self.skip_ws();
                let at = self.pos;
                let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
                if digits.is_empty() {
                    return Err(self.error("expected generator label"));
                }
                self.pos += digits.len();
                labels.push((at, digits.parse::<u32>().map_err(|_| self.error("label too large"))?));
                self.skip_ws();
                if self.eat("}") {
                    break;
                }
                if !self.eat(",") {
                    return Err(self.error("expected ',' or '}'"));
                }
            }
        } else {
            while let Some(c) = self.peek().filter(char::is_ascii_digit) {
                labels.push((self.pos, c.to_digit(10).unwrap()));
                self.bump();
            }
        }
        if labels.is_empty() {
            return Err(self.error("blade prefix without generator labels"));
        }
        let mut mask = 0u32;
        let mut last: Option<usize> = None;
        for (at, label) in labels {
            let position = sig
                .position_of(label)
                .ok_or(Error::Parse { pos: at, msg: format!("generator {}{label} not in {sig}", sig.prefix()) })?;
            if last.is_some_and(|l| position <= l) {
                return Err(Error::Parse { pos: at, msg: "generator labels must be strictly ascending".into() });
            }
            last = Some(position);
            mask |= 1 << position;
        }
        Ok(Blade(mask))
    }

    /// One signed-or-unsigned coefficient/blade term; the leading sign has
    /// already been consumed by the caller.
    pub(crate) fn coefficient_and_blade(&mut self, sig: &Signature) -> Result<(f64, Option<Blade>)> {
        self.skip_ws();
        let coeff = self.number()?;
        self.skip_ws();
        let blade = if self.peek() == Some(sig.prefix()) { Some(self.blade(sig)?) } else { None };
        match (coeff, blade) {
            (None, None) => Err(self.error("expected coefficient or blade")),
            (c, b) => Ok((c.unwrap_or(1.0), b)),
        }
    }
}

pub(crate) fn blade_label(blade: Blade, sig: &Signature) -> String {
    if blade.is_scalar() {
        return "1".into();
    }
    let labels: Vec<u32> = blade.positions().map(|p| sig.label(p)).collect();
    if labels.iter().all(|l| *l < 10) {
        let digits: String = labels.iter().map(|l| char::from_digit(*l, 10).unwrap()).collect();
        format!("{}{digits}", sig.prefix())
    } else {
        let list: Vec<String> = labels.iter().map(u32::to_string).collect();
        format!("{}{{{}}}", sig.prefix(), list.join(","))
    }
}

/// Writes `c0 X0 ± c1 X1 ...` where `render` formats each key.
pub(crate) fn write_terms<K>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (K, f64)>,
    mut render: impl FnMut(&K) -> Option<String>,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        if first {
            if c < 0.0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c < 0.0 { '-' } else { '+' })?;
        }
        match render(&key) {
            // unit coefficients are implied
            Some(label) if c.abs() == 1.0 => write!(f, "{label}")?,
            Some(label) => write!(f, "{} {label}", c.abs())?,
            None => write!(f, "{}", c.abs())?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = self.signature();
        write_terms(f, self.terms().iter().map(|(b, c)| (*b, *c)), |b| (!b.is_scalar()).then(|| blade_label(*b, &sig)))
    }
}

impl Multivector {
    /// Parses the text form in the given signature.
    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let mut terms = Vec::new();
        cur.skip_ws();
        let mut sign = cur.sign().unwrap_or(1.0);
        loop {
            let (c, blade) = cur.coefficient_and_blade(&sig)?;
            terms.push((blade.unwrap_or(Blade::SCALAR), sign * c));
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            sign = cur.sign().ok_or_else(|| cur.error("expected '+' or '-' between terms"))?;
        }
        Ok(Multivector::from_terms(sig, terms))
    }

    /// Parses with the signature chosen by blade prefix: `g` selects Cl(1,3),
    /// anything else Cl(3,0).
    pub fn parse_auto(text: &str) -> Result<Self> {
        let sig = if text.contains('g') { Signature::cl13() } else { Signature::cl30() };
        Self::parse(sig, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let s = Signature::cl30();
        let x = Multivector::parse(s, "1 + 2 e12").unwrap();
        assert_eq!(x, Multivector::from_terms(s, [(Blade(0), 1.0), (Blade(0b11), 2.0)]));
        let y = Multivector::parse(s, "-0.5 e123").unwrap();
        assert_eq!(y, Multivector::from_blade(s, Blade(0b111), -0.5));
        assert_eq!(Multivector::zero(s).to_string(), "0");
    }

    #[test]
    fn non_ascending_rejected() {
        let err = Multivector::parse(Signature::cl13(), "0.5 + 1 g30").unwrap_err();
        match err {
            Error::Parse { pos, .. } => assert_eq!(pos, 10),
            other => panic!("unexpected {other:?}"),
        }
        let ok = Multivector::parse(Signature::cl13(), "0.5 − 1 g03").unwrap();
        assert_eq!(ok.to_string(), "0.5 - g03");
    }

    #[test]
    fn malformed_tokens_report_position() {
        let s = Signature::cl30();
        assert!(matches!(Multivector::parse(s, "1 + "), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(Multivector::parse(s, "1 e4"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(Multivector::parse(s, "2 e1 e2"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(Multivector::parse(s, "g1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn braced_labels_for_large_algebras() {
        let s = Signature::new(11, 0).unwrap();
        let x = Multivector::from_blade(s, Blade(1 | 1 << 10), 3.0);
        assert_eq!(x.to_string(), "3 e{1,11}");
        assert_eq!(Multivector::parse(s, "3 e{1,11}").unwrap(), x);
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(terms in proptest::collection::vec((0u32..16, -64i32..64), 0..10)) {
            let sig = Signature::cl13();
            let x = Multivector::from_terms(sig, terms.iter().map(|(m, c)| (Blade(*m), *c as f64 / 8.0)));
            let text = x.to_string();
            let back = Multivector::parse(sig, &text).unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
