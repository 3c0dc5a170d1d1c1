//! Expression trees and their text syntax.
//!
//! Grammar: sums and differences of products (`*`) of powers (`^k`) of atoms;
//! an atom is a number (`3`, `-2/5`), a declared variable name or a
//! parenthesized expression.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::basering::{BaseElement, BaseRing};
use crate::error::{Result, SpbwError};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawExpr {
    Const(Scalar),
    BaseVar(usize),
    SkewVar(usize),
    Sum(Vec<RawExpr>),
    Product(Vec<RawExpr>),
    Neg(Box<RawExpr>),
    Pow(Box<RawExpr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt, BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> std::result::Result<Vec<Token>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let num: String = chars[start..k].iter().collect();
            let mut den = BigInt::from(1);
            if k + 1 < chars.len() && chars[k] == '/' && chars[k + 1].is_ascii_digit() {
                k += 1;
                let ds = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                den = chars[ds..k].iter().collect::<String>().parse().unwrap();
            }
            out.push(Token::Num(num.parse().unwrap(), den));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Token::Ident(chars[start..k].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            k += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

/// Resolves identifiers against base and skew variable names.
pub struct ExprParser<'a> {
    pub field: FieldSpec,
    pub base_names: &'a [String],
    pub skew_names: &'a [String],
}

struct Cursor<'p, 'a> {
    parser: &'p ExprParser<'a>,
    tokens: Vec<Token>,
    pos: usize,
}

impl ExprParser<'_> {
    pub fn parse(&self, src: &str) -> Result<RawExpr> {
        let err = |msg: String| SpbwError::Parse { line: 0, msg };
        let tokens = tokenize(src).map_err(err)?;
        if tokens.is_empty() {
            return Err(err("empty expression".into()));
        }
        let mut cur = Cursor {
            parser: self,
            tokens,
            pos: 0,
        };
        let e = cur.expr()?;
        if cur.pos != cur.tokens.len() {
            return Err(err(format!("trailing input in `{src}`")));
        }
        Ok(e)
    }
}

impl Cursor<'_, '_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(SpbwError::Parse {
            line: 0,
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<RawExpr> {
        let mut items = vec![self.term()?];
        while let Some(Token::Op(c)) = self.peek() {
            let c = *c;
            if c != '+' && c != '-' {
                break;
            }
            self.pos += 1;
            let t = self.term()?;
            items.push(if c == '-' { RawExpr::Neg(Box::new(t)) } else { t });
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            RawExpr::Sum(items)
        })
    }

    fn term(&mut self) -> Result<RawExpr> {
        let mut items = vec![self.unary()?];
        while let Some(Token::Op('*')) = self.peek() {
            self.pos += 1;
            items.push(self.unary()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            RawExpr::Product(items)
        })
    }

    fn unary(&mut self) -> Result<RawExpr> {
        if let Some(Token::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(RawExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<RawExpr> {
        let atom = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(n, d)) if d == BigInt::from(1) => {
                    self.pos += 1;
                    let k = u32::try_from(n).or_else(|_| self.fail("exponent too large"))?;
                    return Ok(RawExpr::Pow(Box::new(atom), k));
                }
                _ => return self.fail("expected a nonnegative integer exponent"),
            }
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<RawExpr> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Num(n, d)) => Ok(RawExpr::Const(self.parser.field.from_ratio(&n, &d)?)),
            Some(Token::Ident(name)) => {
                if let Some(j) = self.parser.base_names.iter().position(|x| *x == name) {
                    Ok(RawExpr::BaseVar(j))
                } else if let Some(i) = self.parser.skew_names.iter().position(|x| *x == name) {
                    Ok(RawExpr::SkewVar(i))
                } else {
                    Err(SpbwError::UnknownIdentifier(name))
                }
            }
            Some(Token::Op('(')) => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Token::Op(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.fail("missing `)`"),
                }
            }
            _ => self.fail("expected a number, a variable or `(`"),
        }
    }
}

/// A word in the skew variables with a left base coefficient.
pub type FormalTerm = (BaseElement, Vec<usize>);

/// Expands an expression in the free algebra over `R` without applying any
/// commutation rule. Base factors must stand to the left of skew variables.
pub fn expand_formal(base: &BaseRing, e: &RawExpr) -> Result<BTreeMap<Vec<usize>, BaseElement>> {
    fn collect(base: &BaseRing, terms: Vec<FormalTerm>) -> BTreeMap<Vec<usize>, BaseElement> {
        let mut out: BTreeMap<Vec<usize>, BaseElement> = BTreeMap::new();
        for (r, w) in terms {
            let entry = out.entry(w).or_default();
            *entry = base.add(entry, &r);
        }
        out.retain(|_, r| !r.is_zero());
        out
    }
    fn product(base: &BaseRing, a: Vec<FormalTerm>, b: Vec<FormalTerm>) -> Result<Vec<FormalTerm>> {
        let mut out = Vec::new();
        for (ra, wa) in &a {
            for (rb, wb) in &b {
                if !wa.is_empty() && !rb.is_scalar() {
                    return Err(SpbwError::Parse {
                        line: 0,
                        msg: "base coefficients must be written to the left of skew variables"
                            .into(),
                    });
                }
                let mut w = wa.clone();
                w.extend(wb);
                out.push((base.mul(ra, rb), w));
            }
        }
        Ok(out)
    }
    fn go(base: &BaseRing, e: &RawExpr) -> Result<Vec<FormalTerm>> {
        Ok(match e {
            RawExpr::Const(c) => vec![(base.scalar(c.clone()), vec![])],
            RawExpr::BaseVar(j) => vec![(base.var(*j), vec![])],
            RawExpr::SkewVar(i) => vec![(base.one(), vec![*i])],
            RawExpr::Sum(items) => {
                let mut v = Vec::new();
                for t in items {
                    v.extend(go(base, t)?);
                }
                v
            }
            RawExpr::Product(items) => {
                let mut acc = vec![(base.one(), vec![])];
                for t in items {
                    acc = product(base, acc, go(base, t)?)?;
                }
                acc
            }
            RawExpr::Neg(inner) => go(base, inner)?
                .into_iter()
                .map(|(r, w)| (base.neg(&r), w))
                .collect(),
            RawExpr::Pow(inner, k) => {
                let x = go(base, inner)?;
                let mut acc = vec![(base.one(), vec![])];
                for _ in 0..*k {
                    acc = product(base, acc, x.clone())?;
                }
                acc
            }
        })
    }
    Ok(collect(base, go(base, e)?))
}

/// Parses an expression that must lie in the base ring.
pub fn parse_base_element(base: &BaseRing, src: &str) -> Result<BaseElement> {
    let parser = ExprParser {
        field: base.field(),
        base_names: base.names(),
        skew_names: &[],
    };
    let e = parser.parse(src)?;
    let terms = expand_formal(base, &e)?;
    Ok(terms.get(&Vec::new()).cloned().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basering::BaseRingSpec;

    #[test]
    fn parses_precedence() {
        let base = BaseRing::new(BaseRingSpec::polynomial(FieldSpec::Rationals, &["y"])).unwrap();
        let r = parse_base_element(&base, "2*y^2 - (y - 1/2)").unwrap();
        assert_eq!(base.format(&r), "2*y^2 - y + 1/2");
        let again = parse_base_element(&base, &base.format(&r)).unwrap();
        assert_eq!(again, r);
    }

    #[test]
    fn rejects_unknown_names_and_garbage() {
        let base = BaseRing::new(BaseRingSpec::polynomial(FieldSpec::Rationals, &["y"])).unwrap();
        assert_eq!(
            parse_base_element(&base, "z"),
            Err(SpbwError::UnknownIdentifier("z".into()))
        );
        assert!(parse_base_element(&base, "y +").is_err());
        assert!(parse_base_element(&base, "y $ 2").is_err());
        assert!(parse_base_element(&base, "y^x").is_err());
    }

    #[test]
    fn formal_expansion_keeps_word_order() {
        let base = BaseRing::new(BaseRingSpec::polynomial(FieldSpec::Rationals, &["y"])).unwrap();
        let names = vec!["a".to_string(), "b".to_string()];
        let p = ExprParser {
            field: base.field(),
            base_names: base.names(),
            skew_names: &names,
        };
        let e = p.parse("y*a*b - 3*b*a + a").unwrap();
        let t = expand_formal(&base, &e).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(base.format(&t[&vec![1, 0]]), "-3");
        let bad = p.parse("a*y").unwrap();
        assert!(expand_formal(&base, &bad).is_err());
    }
}
