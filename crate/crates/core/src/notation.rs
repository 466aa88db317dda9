//! Text form of presentations.
//!
//! ```text
//! trivial
//! torus(p,q)
//! twobridge(alpha,beta)
//! montesinos(b;a1/b1,a2/b2,...)
//! satellite(twobridge(2a,b);torus(p,q))
//! ```
//!
//! Parsing validates and normalizes; formatting emits the normal form, so
//! `parse(format(k)) == k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Int;
use crate::knot_types::{
    normalize_montesinos, normalize_torus, KnotPresentation, MontesinosKnot, SatelliteTn1, Tangle,
    Torus, TorusKnot, TwoBridge,
};

impl<I: Int> fmt::Display for TorusKnot<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.chirality() {
            crate::knot_types::Chirality::Right => write!(f, "torus({},{})", self.p(), self.q()),
            crate::knot_types::Chirality::Left => write!(f, "torus({},-{})", self.p(), self.q()),
        }
    }
}

impl<I: Int> fmt::Display for TwoBridge<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "twobridge({},{})", self.alpha(), self.beta())
    }
}

impl<I: Int> fmt::Display for MontesinosKnot<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "montesinos({};", self.b)?;
        for (i, t) in self.tangles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}/{}", t.alpha, t.beta)?;
        }
        f.write_str(")")
    }
}

impl<I: Int> fmt::Display for SatelliteTn1<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "satellite({};{})", self.pattern(), self.companion())
    }
}

impl<I: Int> fmt::Display for KnotPresentation<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotPresentation::Trivial => f.write_str("trivial"),
            KnotPresentation::Torus(t) => t.fmt(f),
            KnotPresentation::TwoBridge(t) => t.fmt(f),
            KnotPresentation::Montesinos(m) => m.fmt(f),
            KnotPresentation::Satellite(s) => s.fmt(f),
        }
    }
}

/// Parses a presentation with no cap on integer size.
pub fn parse_presentation<I: Int>(text: &str) -> Result<KnotPresentation<I>> {
    parse_presentation_capped(text, None)
}

/// Parses a presentation, rejecting any integer with `|n| > cap`.
pub fn parse_presentation_capped<I: Int>(text: &str, cap: Option<&I>) -> Result<KnotPresentation<I>> {
    let mut p = Parser { src: text, pos: 0, cap };
    let k = p.presentation()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(k)
}

struct Parser<'a, 'c, I> {
    src: &'a str,
    pos: usize,
    cap: Option<&'c I>,
}

impl<I: Int> Parser<'_, '_, I> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn integer(&mut self) -> Result<I> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.rest().as_bytes();
        let mut len = 0;
        if matches!(bytes.first(), Some(b'-') | Some(b'+')) {
            len += 1;
        }
        let digits = bytes[len..].iter().take_while(|b| b.is_ascii_digit()).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        len += digits;
        let token = &self.src[start..start + len];
        let value = I::from_str_radix(token.trim_start_matches('+'), 10).map_err(|_| Error::Parse {
            position: start,
            message: format!("integer {token} does not fit"),
        })?;
        if let Some(cap) = self.cap {
            if value.abs_c()? > *cap {
                return Err(Error::IntegerCap { value: token.to_string(), cap: cap.to_string() });
            }
        }
        self.pos += len;
        Ok(value)
    }

    fn pair(&mut self) -> Result<(I, I)> {
        self.expect("(")?;
        let a = self.integer()?;
        self.expect(",")?;
        let b = self.integer()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn torus(&mut self) -> Result<Torus<I>> {
        let (p, q) = self.pair()?;
        normalize_torus(&p, &q)
    }

    fn two_bridge(&mut self) -> Result<TwoBridge<I>> {
        let (a, b) = self.pair()?;
        TwoBridge::new(a, b)
    }

    fn presentation(&mut self) -> Result<KnotPresentation<I>> {
        if self.eat("trivial") {
            return Ok(KnotPresentation::Trivial);
        }
        if self.eat("torus") {
            return Ok(match self.torus()? {
                Torus::Trivial => KnotPresentation::Trivial,
                Torus::Knot(t) => KnotPresentation::Torus(t),
            });
        }
        if self.eat("twobridge") {
            let t = self.two_bridge()?;
            return Ok(if t.is_trivial() {
                KnotPresentation::Trivial
            } else {
                KnotPresentation::TwoBridge(t)
            });
        }
        if self.eat("montesinos") {
            self.expect("(")?;
            let b = self.integer()?;
            self.expect(";")?;
            let mut tangles = Vec::new();
            if !self.eat(")") {
                loop {
                    let alpha = self.integer()?;
                    self.expect("/")?;
                    let beta = self.integer()?;
                    tangles.push(Tangle::new(alpha, beta));
                    if self.eat(")") {
                        break;
                    }
                    self.expect(",")?;
                }
            }
            let k = normalize_montesinos(&MontesinosKnot::new(b, tangles))?;
            return Ok(KnotPresentation::Montesinos(k));
        }
        if self.eat("satellite") {
            self.expect("(")?;
            self.expect("twobridge")?;
            let pattern = self.two_bridge()?;
            self.expect(";")?;
            self.expect("torus")?;
            let companion = match self.torus()? {
                Torus::Trivial => {
                    return Err(Error::InvalidSatellite("companion torus knot is trivial".into()))
                }
                Torus::Knot(t) => t,
            };
            self.expect(")")?;
            return Ok(KnotPresentation::Satellite(SatelliteTn1::new(pattern, companion)?));
        }
        Err(self.error("expected trivial, torus, twobridge, montesinos or satellite"))
    }
}
