//! Recursive-descent parser for the ASCII expression grammar.
//!
//! ```text
//! expr   := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | atom ["^" int]
//! atom   := int ["/" int] | gen | "(" expr ")"
//! gen    := "a_" int | "b_{" int "," int "}" | "d_{" int "," int "}"
//!         | "E_{" intlist "}" | "E0" | "D_{" intlist "}" | "psi_" int
//! ```
//!
//! Whitespace is ignored everywhere. `psi_i` is expanded into boundary
//! divisors on the spot.

use num_bigint::BigInt;
use num_traits::Zero;

use super::element::Element;
use super::generator::{GeneratorId, IndexSet};
use super::Q;
use crate::error::{Result, RingError};

pub fn parse_expression(text: &str, ambient_n: usize) -> Result<Element> {
    if ambient_n < 2 {
        return Err(RingError::Invalid(format!(
            "ambient n = {ambient_n} must be at least 2"
        )));
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n: ambient_n,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> RingError {
        RingError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.int()?;
        usize::try_from(v).map_err(|_| RingError::Syntax {
            pos: start,
            msg: "integer too large".into(),
        })
    }

    fn expr(&mut self) -> Result<Element> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Element> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.int()?;
                let q = if self.eat(b'/') {
                    let at = self.pos;
                    let den = self.int()?;
                    if den.is_zero() {
                        return Err(RingError::Syntax {
                            pos: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    Q::new(num, den)
                } else {
                    Q::from_integer(num)
                };
                Ok(Element::constant(self.n, q))
            }
            Some(_) => self.generator(),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn int_list(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.small()?];
        while self.eat(b',') {
            out.push(self.small()?);
        }
        Ok(out)
    }

    fn index_set(&mut self, items: &[usize], start: usize) -> Result<IndexSet> {
        let mut s = IndexSet::EMPTY;
        for &i in items {
            if i == 0 || i > 31 {
                return Err(RingError::IndexOutOfRange {
                    generator: format!("index {i} at byte {start}"),
                    n: self.n,
                });
            }
            if s.contains(i) {
                return Err(RingError::Syntax {
                    pos: start,
                    msg: format!("repeated index {i}"),
                });
            }
            s.insert(i);
        }
        Ok(s)
    }

    fn checked(&self, g: GeneratorId) -> Result<Element> {
        g.validate(self.n)?;
        Ok(Element::generator(self.n, g))
    }

    fn generator(&mut self) -> Result<Element> {
        let start = self.pos;
        if self.keyword("psi_") {
            let i = self.small()?;
            if i == 0 || i > self.n {
                return Err(RingError::IndexOutOfRange {
                    generator: format!("psi_{i}"),
                    n: self.n,
                });
            }
            return Ok(crate::moduli::psi_class(i, self.n));
        }
        if self.keyword("E0") {
            return self.checked(GeneratorId::exc(IndexSet::EMPTY));
        }
        if self.keyword("a_") {
            let i = self.small()?;
            if i == 0 || i > 255 {
                return Err(RingError::IndexOutOfRange {
                    generator: format!("a_{i}"),
                    n: self.n,
                });
            }
            return self.checked(GeneratorId::A(i as u8));
        }
        for (kw, kind) in [("b_", 'b'), ("d_", 'd')] {
            if self.keyword(kw) {
                self.expect(b'{')?;
                let j = self.small()?;
                self.expect(b',')?;
                let k = self.small()?;
                self.expect(b'}')?;
                if j == k {
                    return Err(RingError::Syntax {
                        pos: start,
                        msg: format!("{kind}_{{{j},{k}}} needs distinct indices"),
                    });
                }
                if j == 0 || k == 0 || j > 255 || k > 255 {
                    return Err(RingError::IndexOutOfRange {
                        generator: format!("{kind}_{{{j},{k}}}"),
                        n: self.n,
                    });
                }
                let g = if kind == 'b' {
                    GeneratorId::b(j, k)
                } else {
                    GeneratorId::d(j, k)
                };
                return self.checked(g);
            }
        }
        for (kw, exc) in [("E_", true), ("D_", false)] {
            if self.keyword(kw) {
                self.expect(b'{')?;
                let items = if self.peek() == Some(b'}') {
                    Vec::new()
                } else {
                    self.int_list()?
                };
                self.expect(b'}')?;
                let s = self.index_set(&items, start)?;
                let g = if exc {
                    GeneratorId::exc(s)
                } else {
                    GeneratorId::bd(s)
                };
                return self.checked(g);
            }
        }
        Err(self.err("expected coefficient, generator or '('"))
    }
}
