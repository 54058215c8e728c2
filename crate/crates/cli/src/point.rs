//! Evaluation points such as `x1,x2,y*t,y`: one expression per variable,
//! built from integers, the parameters and free variable names.

use macdonald::error::AlgebraError;
use macdonald::exact::Field;
use macdonald::poly::MultiPoly;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Name(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, AlgebraError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = cs[start..i].iter().collect();
            let v = lit
                .parse()
                .map_err(|_| parse_err(s, &format!("integer {lit} is too large")))?;
            out.push(Tok::Int(v));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(cs[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(parse_err(s, &format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

fn parse_err(s: &str, msg: &str) -> AlgebraError {
    AlgebraError::Parse(format!("point entry `{s}`: {msg}"))
}

/// Splits on top-level commas.
fn split_entries(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// A parsed point: its free variables in order of first appearance and one
/// polynomial per entry in those variables.
pub struct Point<F> {
    pub names: Vec<String>,
    pub images: Vec<MultiPoly<F>>,
}

/// Parses `s` with `consts` giving the values of reserved names.
pub fn parse_point<F: Field>(s: &str, consts: &[(&str, F)]) -> Result<Point<F>, AlgebraError> {
    let entries = split_entries(s);
    let mut toks = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for e in &entries {
        let ts = tokenize(e)?;
        if ts.is_empty() {
            return Err(parse_err(e, "empty entry"));
        }
        for t in &ts {
            if let Tok::Name(n) = t {
                if !consts.iter().any(|(c, _)| c == n) && !names.contains(n) {
                    names.push(n.clone());
                }
            }
        }
        toks.push(ts);
    }
    let mut images = Vec::new();
    for (e, ts) in entries.iter().zip(toks) {
        let mut p = Parser {
            src: e,
            toks: ts,
            pos: 0,
            names: &names,
            consts,
        };
        let v = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(parse_err(e, "trailing input"));
        }
        images.push(v);
    }
    Ok(Point { names, images })
}

struct Parser<'a, F> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
    consts: &'a [(&'a str, F)],
}

impl<F: Field> Parser<'_, F> {
    fn nv(&self) -> usize {
        self.names.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> AlgebraError {
        parse_err(self.src, msg)
    }

    fn expr(&mut self) -> Result<MultiPoly<F>, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<F>, AlgebraError> {
        let neg = self.eat('-');
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.mul(&self.power()?);
        }
        Ok(if neg { acc.neg() } else { acc })
    }

    fn power(&mut self) -> Result<MultiPoly<F>, AlgebraError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(e)) => *e,
            _ => return Err(self.err("expected an integer exponent")),
        };
        self.pos += 1;
        if !neg {
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        // negative powers only of nonzero scalars
        let scalar = match base.len() {
            1 if base.degree() == Some(0) => base.coeff_of(&vec![0; self.nv()]),
            _ => return Err(self.err("negative powers need a nonzero scalar base")),
        };
        let inv = scalar
            .pow_i(-e)
            .ok_or_else(|| self.err("zero to a negative power"))?;
        Ok(MultiPoly::constant(self.nv(), inv))
    }

    fn atom(&mut self) -> Result<MultiPoly<F>, AlgebraError> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Int(v) => Ok(MultiPoly::constant(self.nv(), F::from_i64(v))),
            Tok::Name(n) => {
                if let Some((_, c)) = self.consts.iter().find(|(c, _)| *c == n) {
                    return Ok(MultiPoly::constant(self.nv(), c.clone()));
                }
                let k = self.names.iter().position(|x| *x == n).expect("collected");
                Ok(MultiPoly::var(self.nv(), k))
            }
            Tok::Op('(') => {
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(v)
            }
            Tok::Op(c) => Err(self.err(&format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use macdonald::exact::{Params, RatFunc};

    #[test]
    fn clustered_point() {
        let p = Params::generic();
        let consts = [("q", p.q.clone()), ("t", p.t.clone())];
        let pt = parse_point::<RatFunc>("x1, x2, y*t, y", &consts).unwrap();
        assert_eq!(pt.names, ["x1", "x2", "y"]);
        assert_eq!(pt.images[2].to_text_named(&pt.names), "t*y");
        let pt = parse_point::<RatFunc>("(a - 1)^2, q^-1*a", &consts).unwrap();
        assert_eq!(pt.images[0].to_text_named(&pt.names), "a^2 - 2*a + 1");
        assert_eq!(pt.images[1].to_text_named(&pt.names), "q^-1*a");
    }

    #[test]
    fn rejects_bad_input() {
        let none: [(&str, RatFunc); 0] = [];
        assert!(parse_point::<RatFunc>("x1,", &none).is_err());
        assert!(parse_point::<RatFunc>("x1^-1", &none).is_err());
        assert!(parse_point::<RatFunc>("(x1", &none).is_err());
        assert!(parse_point::<RatFunc>("x1 $ 2", &none).is_err());
    }
}
