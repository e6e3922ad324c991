//! Text syntax for monomial ideals.
//!
//! ```text
//! ideal    := "0" | monomial ("," monomial)*
//! monomial := "1" | factor ("*"? factor)*
//! factor   := variable ("^" digits)?
//! ```
//!
//! Variables are matched greedily against the ring's names, longest first,
//! so `x1x2` reads as `x1 * x2` in the ring `x1,x2`. Whitespace may appear
//! between tokens.

use num_bigint::BigUint;

use super::{Monomial, MonomialIdeal, Ring};
use crate::error::{Error, Result};

pub(super) fn parse_ideal(ring: &Ring, text: &str) -> Result<MonomialIdeal> {
    parse_ideal_at(ring, text, 0)
}

/// Like [`parse_ideal`], reporting positions shifted by `offset`.
pub(super) fn parse_ideal_at(ring: &Ring, text: &str, offset: usize) -> Result<MonomialIdeal> {
    let mut p = Parser {
        ring,
        text,
        pos: 0,
        offset,
    };
    p.skip_ws();
    if p.rest().trim() == "0" {
        return Ok(MonomialIdeal::zero(ring.clone()));
    }
    let mut gens = vec![p.monomial()?];
    loop {
        p.skip_ws();
        if p.eat(',') {
            gens.push(p.monomial()?);
        } else if p.rest().is_empty() {
            break;
        } else {
            return Err(p.error("expected `,` or end of input"));
        }
    }
    MonomialIdeal::new(ring.clone(), gens)
}

struct Parser<'a> {
    ring: &'a Ring,
    text: &'a str,
    pos: usize,
    offset: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> Error {
        let rest = self.rest();
        let token = match rest.chars().next() {
            None => "end of input".to_string(),
            Some(c) if c.is_alphanumeric() || c == '_' => rest
                .chars()
                .take_while(|c| c.is_alphanumeric() || *c == '_')
                .collect(),
            Some(c) => c.to_string(),
        };
        Error::Parse {
            position: self.offset + self.pos,
            token,
            message: message.to_string(),
        }
    }

    fn variable(&mut self) -> Option<usize> {
        let rest = self.rest();
        let (idx, len) = self
            .ring
            .variables()
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_str()))
            .map(|(i, v)| (i, v.len()))
            .max_by_key(|&(_, len)| len)?;
        self.pos += len;
        Some(idx)
    }

    fn digits(&mut self) -> Option<BigUint> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let n = self.rest()[..len].parse().ok()?;
        self.pos += len;
        Some(n)
    }

    fn factor(&mut self, exps: &mut [BigUint]) -> Result<()> {
        let Some(i) = self.variable() else {
            return Err(self.error("unknown variable"));
        };
        self.skip_ws();
        let e = if self.eat('^') {
            self.skip_ws();
            self.digits()
                .ok_or_else(|| self.error("expected a nonnegative integer exponent"))?
        } else {
            BigUint::from(1u8)
        };
        exps[i] += e;
        Ok(())
    }

    fn monomial(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let mut exps = vec![BigUint::default(); self.ring.n()];
        if self.rest().starts_with('1') && self.variable_free_one() {
            self.pos += 1;
            return Ok(Monomial::new(exps));
        }
        if self.rest().is_empty() || self.rest().starts_with(',') {
            return Err(self.error("expected a monomial"));
        }
        self.factor(&mut exps)?;
        loop {
            self.skip_ws();
            if self.eat('*') {
                self.skip_ws();
                self.factor(&mut exps)?;
            } else if self.rest().is_empty() || self.rest().starts_with(',') {
                return Ok(Monomial::new(exps));
            } else {
                self.factor(&mut exps)?;
            }
        }
    }

    /// `1` standing alone as a monomial, not the start of a longer number.
    fn variable_free_one(&self) -> bool {
        let after = self.rest()[1..].trim_start();
        after.is_empty() || after.starts_with(',')
    }
}
