//! The text syntax for braid expressions.
//!
//! ```text
//! expr   := factor ('*'? factor)*
//! factor := atom ('^' int)?
//! atom   := 's' nat | 'A[' nat ',' nat ']' | 'z' | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! `s<k>` is `σ_k`, `A[i,j]` the pure generator (`A[0,j]` the derived
//! letter), `z` the full twist and `[x,y] = x^-1 y^-1 x y`. Whitespace
//! between tokens is ignored.

use std::fmt;

use crate::braid::{BraidWord, Generator};
use crate::error::{Error, Result};
use crate::pure::{full_twist, PureLetter, PureWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sigma(usize),
    Pure(usize, usize),
    Twist,
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    Commutator(Box<Expr>, Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sigma(k) => write!(f, "s{k}"),
            Expr::Pure(i, j) => write!(f, "A[{i},{j}]"),
            Expr::Twist => f.write_str("z"),
            Expr::Product(xs) => {
                f.write_str("(")?;
                for (pos, x) in xs.iter().enumerate() {
                    if pos > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            Expr::Power(x, e) => write!(f, "{x}^{e}"),
            Expr::Commutator(x, y) => write!(f, "[{x}, {y}]"),
        }
    }
}

/// Parses `text` for a session on `n` strands.
///
/// ```
/// use braidkit::expr::parse;
/// let e = parse("[A[1,2], A[2,3]]^2 s1^-1", 3).unwrap();
/// assert_eq!(e.eval(3).unwrap().len(), 2 * 8 + 1);
/// ```
pub fn parse(text: &str, n: usize) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, n };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(e)
}

/// Parses and evaluates to a braid word.
pub fn eval(text: &str, n: usize) -> Result<BraidWord> {
    parse(text, n)?.eval(n)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        };
        Error::Syntax { position: self.pos, message: format!("{message}, found {found}") }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn starts_atom(c: Option<u8>) -> bool {
        matches!(c, Some(b's' | b'A' | b'z' | b'(' | b'['))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                c if Self::starts_atom(c) => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            return Ok(Expr::Power(Box::new(atom), e));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = self.pos;
        match self.peek() {
            Some(b's') => {
                self.pos += 1;
                let k = self.index()?;
                if k == 0 || k >= self.n {
                    return Err(Error::IndexOutOfRange { index: k, strands: self.n });
                }
                Ok(Expr::Sigma(k))
            }
            Some(b'A') => {
                self.pos += 1;
                self.expect(b'[')?;
                let i = self.nat()?;
                self.expect(b',')?;
                let j = self.nat()?;
                self.expect(b']')?;
                if i.max(j) > self.n {
                    return Err(Error::IndexOutOfRange { index: i.max(j), strands: self.n });
                }
                if i == j {
                    return Err(Error::DiagonalLetter(i));
                }
                Ok(Expr::Pure(i, j))
            }
            Some(b'z') => {
                self.pos += 1;
                if self.n < 2 {
                    return Err(Error::InvalidArgument("z needs at least 2 strands".into()));
                }
                Ok(Expr::Twist)
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(b',')?;
                let y = self.expr()?;
                self.expect(b']')?;
                Ok(Expr::Commutator(Box::new(x), Box::new(y)))
            }
            _ => {
                self.pos = start;
                Err(self.error("expected s<k>, A[i,j], z, '(' or '['"))
            }
        }
    }

    /// Digits directly at the cursor (no leading whitespace inside `s12`).
    fn digits(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| Error::Syntax { position: start, message: "number too large".into() })
    }

    fn index(&mut self) -> Result<usize> {
        let v = self.digits()?;
        usize::try_from(v).map_err(|_| self.error("number too large"))
    }

    fn nat(&mut self) -> Result<usize> {
        self.skip_ws();
        self.index()
    }

    fn int(&mut self) -> Result<i64> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        let v = i64::try_from(self.digits()?)
            .map_err(|_| Error::Syntax { position: start, message: "exponent too large".into() })?;
        Ok(if negative { -v } else { v })
    }
}

impl Expr {
    /// Expands to a braid word on `n` strands.
    pub fn eval(&self, n: usize) -> Result<BraidWord> {
        Ok(match self {
            Expr::Sigma(k) => BraidWord::new(n, vec![Generator::pos(*k)])?,
            Expr::Pure(i, j) => PureWord::new(n, vec![PureLetter::new(*i, *j, 1)?])?.expand(),
            Expr::Twist => full_twist(n)?.expand(),
            Expr::Product(xs) => {
                let words = xs.iter().map(|x| x.eval(n)).collect::<Result<Vec<_>>>()?;
                BraidWord::product(n, &words)?
            }
            Expr::Power(x, e) => x.eval(n)?.pow(*e),
            Expr::Commutator(x, y) => crate::maps::commutator(&x.eval(n)?, &y.eval(n)?)?,
        })
    }

    /// Evaluates in the `A` alphabet; `None` if the expression uses `s<k>`.
    pub fn eval_pure(&self, n: usize) -> Result<Option<PureWord>> {
        Ok(Some(match self {
            Expr::Sigma(_) => return Ok(None),
            Expr::Pure(i, j) => PureWord::new(n, vec![PureLetter::new(*i, *j, 1)?])?,
            Expr::Twist => full_twist(n)?,
            Expr::Product(xs) => {
                let mut out = PureWord::identity(n);
                for x in xs {
                    let Some(w) = x.eval_pure(n)? else { return Ok(None) };
                    out = out.concat(&w)?;
                }
                out
            }
            Expr::Power(x, e) => match x.eval_pure(n)? {
                Some(w) => w.pow(*e),
                None => return Ok(None),
            },
            Expr::Commutator(x, y) => match (x.eval_pure(n)?, y.eval_pure(n)?) {
                (Some(a), Some(b)) => a.commutator(&b)?,
                _ => return Ok(None),
            },
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn sigma_product() {
        assert_eq!(eval("s1 s2^-1", 3).unwrap(), w(3, &[1, -2]));
        assert_eq!(eval("s1*s2^-1", 3).unwrap(), w(3, &[1, -2]));
        assert_eq!(eval(" s1  *  s2 ^ - 1 ", 3).unwrap(), w(3, &[1, -2]));
    }

    #[test]
    fn commutator_desugars() {
        let e = parse("[A[1,2], A[2,3]]", 3).unwrap();
        let (a, b) = (eval("A[1,2]", 3).unwrap(), eval("A[2,3]", 3).unwrap());
        let expected = BraidWord::product(3, [&a.inverse(), &b.inverse(), &a, &b]).unwrap();
        assert_eq!(e.eval(3).unwrap(), expected);
        assert!(eval("[s1,s1]", 3).unwrap().free_cancel().is_empty());
    }

    #[test]
    fn atoms_expand() {
        assert_eq!(eval("A[1,2]", 2).unwrap(), w(2, &[1, 1]));
        let z = full_twist(3).unwrap().expand();
        assert_eq!(eval("z^-2", 3).unwrap(), z.inverse().concat(&z.inverse()).unwrap());
        let e = parse("A[0,2] z^2", 3).unwrap();
        let expected = crate::pure::a0_letter(2, 3).unwrap().concat(&full_twist(3).unwrap().pow(2)).unwrap();
        assert_eq!(e.eval_pure(3).unwrap().unwrap(), expected);
        assert!(Oracle::default().equal(&e.eval(3).unwrap(), &expected.expand()).unwrap());
    }

    #[test]
    fn zero_exponent_is_empty() {
        assert!(eval("s1^0", 3).unwrap().is_empty());
        assert!(eval("A[1,2]^0", 3).unwrap().is_empty());
    }

    #[test]
    fn pure_evaluation_needs_pure_atoms() {
        assert!(parse("A[1,2] s1", 3).unwrap().eval_pure(3).unwrap().is_none());
        assert_eq!(parse("A[2,1]", 3).unwrap().eval_pure(3).unwrap().unwrap().to_string(), "A[1,2]");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("s3", 3), Err(Error::IndexOutOfRange { index: 3, strands: 3 })));
        assert!(matches!(parse("s0", 3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse("A[1,4]", 3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse("A[2,2]", 3), Err(Error::DiagonalLetter(2))));
        assert!(matches!(parse("s1 )", 3), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse("", 3), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse("[s1 s2]", 3), Err(Error::Syntax { position: 6, .. })));
        assert!(matches!(parse("s1^", 3), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse("s 1", 3), Err(Error::Syntax { .. })));
    }

    #[test]
    fn printed_words_reparse() {
        let u = w(4, &[1, -3, 2, 2]);
        assert_eq!(eval(&u.to_string(), 4).unwrap(), u);
        assert!(eval(&BraidWord::identity(3).to_string(), 3).unwrap().is_empty());
        let p = PureWord::from_triples(4, &[(1, 3, 1), (0, 2, -1), (2, 4, 1)]).unwrap();
        assert_eq!(parse(&p.to_string(), 4).unwrap().eval_pure(4).unwrap().unwrap(), p);
    }
}
