//! Text grammar for elements of `U`:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power (['*' | '/'] power)*      juxtaposition multiplies
//! power  := atom ['^' int | '^' '(' int ')']
//! atom   := e<i> | f<i> | k[<int>,...] | q | q[<int>] | <int> | '(' expr ')'
//! ```
//!
//! Indices are 1-based. `e1^(3)` is a divided power, `e1^3` an ordinary one;
//! on scalars both mean ordinary powers and may be negative. Division is
//! only by scalars. The rendering of [`Element`](super::Element) parses back.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::{Algebra, Element};
use crate::cartan::RootVector;
use crate::scalars::{LaurentPoly, Scalar};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    E(usize),
    F(usize),
    K(Vec<i32>),
    Q(i32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut p = 0;
    let err = |pos: usize, msg: &str| ParseError { pos, msg: msg.to_string() };
    let read_int = |p: &mut usize| -> Option<&str> {
        let start = *p;
        if *p < b.len() && b[*p] == b'-' {
            *p += 1;
        }
        while *p < b.len() && b[*p].is_ascii_digit() {
            *p += 1;
        }
        let s = &src[start..*p];
        if s.is_empty() || s == "-" {
            *p = start;
            None
        } else {
            Some(s)
        }
    };
    while p < b.len() {
        let c = b[p];
        let start = p;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                p += 1;
            }
            b'0'..=b'9' => {
                while p < b.len() && b[p].is_ascii_digit() {
                    p += 1;
                }
                out.push((start, Tok::Int(src[start..p].parse().unwrap())));
            }
            b'e' | b'f' => {
                p += 1;
                let s0 = p;
                while p < b.len() && b[p].is_ascii_digit() {
                    p += 1;
                }
                let idx: usize = src[s0..p].parse().map_err(|_| err(start, "expected generator index"))?;
                if idx == 0 {
                    return Err(err(start, "generator indices start at 1"));
                }
                out.push((start, if c == b'e' { Tok::E(idx - 1) } else { Tok::F(idx - 1) }));
            }
            b'k' => {
                p += 1;
                if p >= b.len() || b[p] != b'[' {
                    return Err(err(start, "expected `[` after k"));
                }
                p += 1;
                let mut v = Vec::new();
                loop {
                    while p < b.len() && b[p] == b' ' {
                        p += 1;
                    }
                    let s = read_int(&mut p).ok_or_else(|| err(p, "expected integer in k[...]"))?;
                    v.push(s.parse::<i32>().map_err(|_| err(p, "integer out of range"))?);
                    while p < b.len() && b[p] == b' ' {
                        p += 1;
                    }
                    match b.get(p) {
                        Some(b',') => p += 1,
                        Some(b']') => {
                            p += 1;
                            break;
                        }
                        _ => return Err(err(p, "expected `,` or `]`")),
                    }
                }
                out.push((start, Tok::K(v)));
            }
            b'q' => {
                p += 1;
                if p < b.len() && b[p] == b'[' {
                    p += 1;
                    let s = read_int(&mut p).ok_or_else(|| err(p, "expected exponent"))?;
                    let e = s.parse::<i32>().map_err(|_| err(p, "exponent out of range"))?;
                    if b.get(p) != Some(&b']') {
                        return Err(err(p, "expected `]`"));
                    }
                    p += 1;
                    out.push((start, Tok::Q(e)));
                } else {
                    out.push((start, Tok::Q(1)));
                }
            }
            b'+' => {
                p += 1;
                out.push((start, Tok::Plus));
            }
            b'-' => {
                p += 1;
                out.push((start, Tok::Minus));
            }
            b'*' => {
                p += 1;
                out.push((start, Tok::Star));
            }
            b'/' => {
                p += 1;
                out.push((start, Tok::Slash));
            }
            b'^' => {
                p += 1;
                out.push((start, Tok::Caret));
            }
            b'(' => {
                p += 1;
                out.push((start, Tok::LParen));
            }
            b')' => {
                p += 1;
                out.push((start, Tok::RParen));
            }
            _ => return Err(err(start, &format!("unexpected character `{}`", c as char))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a Algebra,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError { pos: self.here(), msg: msg.into() }
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(t: Option<&Tok>) -> bool {
        matches!(t, Some(Tok::Int(_) | Tok::E(_) | Tok::F(_) | Tok::K(_) | Tok::Q(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = self.alg.mul(&acc, &self.power()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.power()?;
                    let s = d.as_scalar().ok_or_else(|| self.err("division by a non-scalar"))?;
                    let inv = s.inv().ok_or_else(|| self.err("division by zero"))?;
                    acc = acc.scale(&inv);
                }
                t if Self::starts_atom(t) => {
                    acc = self.alg.mul(&acc, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn int_exponent(&mut self) -> Result<(i64, bool), ParseError> {
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.pos += 1;
        }
        let n: i64 = match self.peek() {
            Some(Tok::Int(n)) => i64::try_from(n.clone()).map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected exponent")),
        };
        self.pos += 1;
        if paren {
            if self.peek() != Some(&Tok::RParen) {
                return Err(self.err("expected `)`"));
            }
            self.pos += 1;
        }
        Ok((if neg { -n } else { n }, paren))
    }

    fn power(&mut self) -> Result<Element, ParseError> {
        let start = self.pos;
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let (n, divided) = self.int_exponent()?;
        let generator = match self.toks[start].1 {
            Tok::E(i) => Some((i, true)),
            Tok::F(i) => Some((i, false)),
            _ => None,
        };
        if let (Some((i, positive)), true) = (generator, divided) {
            if n < 0 {
                return Err(self.err("negative divided power"));
            }
            return Ok(self.alg.divided_power(i, n as u32, positive));
        }
        if let Some(s) = base.as_scalar() {
            if n < 0 && s.is_zero() {
                return Err(self.err("negative power of zero"));
            }
            return Ok(self.alg.scalar(s.pow(n as i32)));
        }
        if n < 0 {
            return Err(self.err("negative power of a non-scalar"));
        }
        Ok(self.alg.pow(&base, n as u32))
    }

    fn atom(&mut self) -> Result<Element, ParseError> {
        let rank = self.alg.rank();
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(self.alg.scalar(Scalar::from_laurent(LaurentPoly::constant(BigRational::from_integer(n))))),
            Tok::E(i) | Tok::F(i) if i >= rank => {
                self.pos -= 1;
                Err(self.err(format!("generator index {} exceeds rank {rank}", i + 1)))
            }
            Tok::E(i) => Ok(self.alg.e(i)),
            Tok::F(i) => Ok(self.alg.f(i)),
            Tok::K(v) => {
                if v.len() != rank {
                    self.pos -= 1;
                    return Err(self.err(format!("k[...] needs {rank} entries")));
                }
                Ok(self.alg.k(RootVector(v)))
            }
            Tok::Q(e) => Ok(self.alg.scalar(Scalar::q_pow(e))),
            Tok::LParen => {
                let x = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(x)
            }
            _ => {
                self.pos -= 1;
                Err(self.err("expected an operand"))
            }
        }
    }
}

impl Algebra {
    /// Parses an expression and returns its normal form.
    pub fn parse(&self, src: &str) -> Result<Element, ParseError> {
        let toks = lex(src)?;
        let mut p = Parser { alg: self, toks, pos: 0, end: src.len() };
        if p.peek().is_none() {
            return Err(p.err("empty expression"));
        }
        let x = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(x)
    }

    /// Parses a scalar expression (must not involve generators).
    pub fn parse_scalar(&self, src: &str) -> Result<Scalar, ParseError> {
        let x = self.parse(src)?;
        x.as_scalar().ok_or_else(|| ParseError { pos: 0, msg: "expected a scalar".into() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;
    use proptest::prelude::*;

    fn alg(name: &str) -> Algebra {
        Algebra::new(CartanDatum::preset(name).unwrap())
    }

    #[test]
    fn parses_generators_and_scalars() {
        let a = alg("A2");
        assert_eq!(a.parse("e1 f2").unwrap(), a.mul(&a.e(0), &a.f(1)));
        assert_eq!(a.parse("e1*f2").unwrap(), a.mul(&a.e(0), &a.f(1)));
        assert_eq!(a.parse("k[1,-1]").unwrap(), a.k(RootVector(vec![1, -1])));
        assert_eq!(a.parse_scalar("q^-2").unwrap(), Scalar::q_pow(-2));
        assert_eq!(a.parse_scalar("q[3] q^(2)").unwrap(), Scalar::q_pow(5));
        assert_eq!(a.parse("e1^(2)").unwrap(), a.divided_power(0, 2, true));
        assert_eq!(a.parse("e1^2").unwrap(), a.pow(&a.e(0), 2));
        let x = a.parse("e1 e2 - q^-1 e2 e1").unwrap();
        assert_eq!(x, a.braid_t(0, &a.e(1)));
        assert_eq!(a.parse("(q - q^-1)/(q + q^-1) e1").unwrap().len(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        let a = alg("A2");
        assert!(a.parse("e3").is_err());
        assert!(a.parse("e0").is_err());
        assert!(a.parse("e1 / e2").is_err());
        assert!(a.parse("k[1]").is_err());
        assert!(a.parse("(e1").is_err());
        assert!(a.parse("").is_err());
        assert!(a.parse("1/0").is_err());
        assert!(a.parse("e1 %").is_err());
    }

    #[test]
    fn rendering_round_trips() {
        let a = alg("B2");
        for src in ["e1 f2 + q^3/(q^2 - 1) k[1,-2] e2", "(1/2) e1^(2) f1 - 7", "0", "f2 f1 e1 e1 e2"] {
            let x = a.parse(src).unwrap();
            assert_eq!(a.parse(&x.to_string()).unwrap(), x, "{src} -> {x}");
        }
    }

    fn arb_source() -> impl Strategy<Value = String> {
        let atom = prop_oneof![
            (1usize..=2).prop_map(|i| format!("e{i}")),
            (1usize..=2).prop_map(|i| format!("f{i}")),
            (-2i32..=2, -2i32..=2).prop_map(|(a, b)| format!("k[{a},{b}]")),
            (-3i32..=3).prop_map(|e| format!("q[{e}]")),
            (1i64..5).prop_map(|n| n.to_string()),
            Just("(q + q^-1)".to_string()),
            Just("(1/(q - q^-1))".to_string()),
        ];
        let term = prop::collection::vec(atom, 1..4).prop_map(|v| v.join(" "));
        prop::collection::vec((any::<bool>(), term), 1..4).prop_map(|v| {
            v.into_iter()
                .enumerate()
                .map(|(n, (neg, t))| match (n, neg) {
                    (0, false) => t,
                    (0, true) => format!("-{t}"),
                    (_, false) => format!(" + {t}"),
                    (_, true) => format!(" - {t}"),
                })
                .collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn render_parse_identity(src in arb_source()) {
            let a = alg("A2");
            let x = a.parse(&src).unwrap();
            prop_assert_eq!(a.parse(&x.to_string()).unwrap(), x);
        }
    }
}
