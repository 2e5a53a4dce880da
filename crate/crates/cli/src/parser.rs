//! Expression syntax for free-algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := scalar factor* | factor+
//! factor := gen | '(' expr ')' | '[' expr ',' expr ']' ('_' atom)?
//! gen    := ('e'|'f'|'h'|'k'|'kb'|'kbar'|'L'|'Lb'|'Lbar') INT | 'a' INT ('+'|'-') | '1'
//! atom   := 'q' ('^' INT)? | RATIONAL | '(' sexpr ')'
//! ```
//!
//! `sexpr` is a rational expression in `q` with `+ - * /`, parentheses and
//! integer powers.

use std::fmt;

use qcag::{Alphabet, GenSymbol, Poly, RatFunc};

#[derive(Debug, Clone, PartialEq)]
pub enum ExprAST {
    Gen(GenSymbol),
    Scalar(RatFunc),
    Sum(Box<ExprAST>, Box<ExprAST>),
    Difference(Box<ExprAST>, Box<ExprAST>),
    Product(Box<ExprAST>, Box<ExprAST>),
    Bracket(Box<ExprAST>, Box<ExprAST>, RatFunc),
}

impl ExprAST {
    pub fn lower(&self) -> Poly {
        match self {
            ExprAST::Gen(g) => Poly::gen(*g),
            ExprAST::Scalar(c) => Poly::scalar(c.clone()),
            ExprAST::Sum(a, b) => &a.lower() + &b.lower(),
            ExprAST::Difference(a, b) => &a.lower() - &b.lower(),
            ExprAST::Product(a, b) => &a.lower() * &b.lower(),
            ExprAST::Bracket(a, b, x) => Poly::bracket(&a.lower(), &b.lower(), x),
        }
    }

    /// Largest generator index in the tree.
    pub fn max_index(&self) -> u32 {
        match self {
            ExprAST::Gen(g) => g.index().unwrap_or(0),
            ExprAST::Scalar(_) => 0,
            ExprAST::Sum(a, b) | ExprAST::Difference(a, b) | ExprAST::Product(a, b) | ExprAST::Bracket(a, b, _) => {
                a.max_index().max(b.max_index())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { pos: usize, expected: String },
    NotInAlphabet { pos: usize, symbol: String, alphabet: String },
    IndexOutOfRange { pos: usize, symbol: String, n: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, expected } => write!(f, "syntax error at {pos}: expected {expected}"),
            ParseError::NotInAlphabet { pos, symbol, alphabet } => {
                write!(f, "{symbol} not in source alphabet {alphabet} (at {pos})")
            }
            ParseError::IndexOutOfRange { pos, symbol, n } => {
                write!(f, "index of {symbol} out of range 1..={n} (at {pos})")
            }
        }
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;
type IndexedSymbol = fn(u32) -> GenSymbol;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alphabet: Option<&'a Alphabet>,
    n: Option<usize>,
}

fn q_pow(m: i64) -> RatFunc {
    RatFunc::q_pow(m)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn peek_raw(&self) -> Option<u8> {
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

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{}'", c as char)))
        }
    }

    fn error(&mut self, expected: &str) -> ParseError {
        self.skip_ws();
        let what = if self.pos >= self.src.len() {
            format!("{expected} (end of input)")
        } else {
            expected.to_string()
        };
        ParseError::Syntax { pos: self.pos, expected: what }
    }

    fn uint(&mut self) -> PResult<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError::Syntax { pos: start, expected: "integer that fits in 64 bits".into() })
    }

    fn signed_int(&mut self) -> PResult<i64> {
        let neg = self.eat(b'-');
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> PResult<ExprAST> {
        let mut acc = if self.eat(b'-') {
            let t = self.term()?;
            ExprAST::Product(Box::new(ExprAST::Scalar(RatFunc::from_int(-1))), Box::new(t))
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = ExprAST::Sum(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = ExprAST::Difference(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(b'e' | b'f' | b'h' | b'k' | b'L' | b'a' | b'(' | b'['))
            || (self.peek() == Some(b'1') && !self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit() || *c == b'/'))
    }

    fn term(&mut self) -> PResult<ExprAST> {
        let mut factors = Vec::new();
        if let Some(s) = self.try_scalar_prefix()? {
            factors.push(ExprAST::Scalar(s));
        } else {
            factors.push(self.factor()?);
        }
        while self.starts_factor() {
            factors.push(self.factor()?);
        }
        let mut it = factors.into_iter();
        let first = it.next().expect("at least one factor");
        Ok(it.fold(first, |acc, f| ExprAST::Product(Box::new(acc), Box::new(f))))
    }

    /// A leading scalar: `q`, `q^m`, a rational literal, or a parenthesized
    /// scalar expression.
    fn try_scalar_prefix(&mut self) -> PResult<Option<RatFunc>> {
        match self.peek() {
            Some(b'q') => Ok(Some(self.q_atom()?)),
            Some(c) if c.is_ascii_digit() => {
                if c == b'1' && self.starts_unit_word() {
                    return Ok(None);
                }
                Ok(Some(self.rational_literal()?))
            }
            Some(b'(') => {
                let save = self.pos;
                self.pos += 1;
                match self.sexpr() {
                    Ok(s) if self.eat(b')') => Ok(Some(s)),
                    _ => {
                        self.pos = save;
                        Ok(None)
                    }
                }
            }
            _ => Ok(None),
        }
    }

    /// `1` used as the unit word rather than as a scalar literal: followed by
    /// nothing numeric.
    fn starts_unit_word(&mut self) -> bool {
        self.skip_ws();
        !self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit() || *c == b'/')
    }

    fn q_atom(&mut self) -> PResult<RatFunc> {
        self.expect(b'q')?;
        if self.eat(b'^') {
            Ok(q_pow(self.signed_int()?))
        } else {
            Ok(q_pow(1))
        }
    }

    fn rational_literal(&mut self) -> PResult<RatFunc> {
        let num = self.uint()? as i64;
        if self.peek() == Some(b'/') && self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            let den = self.uint()? as i64;
            if den == 0 {
                return Err(ParseError::Syntax { pos: self.pos, expected: "nonzero denominator".into() });
            }
            return Ok(RatFunc::from_int(num).checked_div(&RatFunc::from_int(den)).expect("nonzero"));
        }
        Ok(RatFunc::from_int(num))
    }

    fn sexpr(&mut self) -> PResult<RatFunc> {
        let mut acc = if self.eat(b'-') { -self.sterm()? } else { self.sterm()? };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.sterm()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.sterm()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn sterm(&mut self) -> PResult<RatFunc> {
        let mut acc = self.sfactor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.sfactor()?;
            } else if self.eat(b'/') {
                let pos = self.pos;
                let d = self.sfactor()?;
                acc = acc
                    .checked_div(&d)
                    .map_err(|_| ParseError::Syntax { pos, expected: "nonzero divisor".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn sfactor(&mut self) -> PResult<RatFunc> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.sfactor()?)
            }
            Some(b'q') => self.q_atom(),
            Some(c) if c.is_ascii_digit() => Ok(RatFunc::from_int(self.uint()? as i64)),
            Some(b'(') => {
                self.pos += 1;
                let s = self.sexpr()?;
                self.expect(b')')?;
                Ok(s)
            }
            _ => Err(self.error("scalar")),
        }
    }

    fn factor(&mut self) -> PResult<ExprAST> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                let x = if self.eat(b'_') { self.scalar_atom()? } else { RatFunc::from_int(1) };
                Ok(ExprAST::Bracket(Box::new(a), Box::new(b), x))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(ExprAST::Scalar(RatFunc::from_int(1)))
            }
            Some(_) => self.gen(),
            None => Err(self.error("generator, '(' or '['")),
        }
    }

    fn scalar_atom(&mut self) -> PResult<RatFunc> {
        match self.peek() {
            Some(b'q') => self.q_atom(),
            Some(c) if c.is_ascii_digit() => self.rational_literal(),
            Some(b'(') => {
                self.pos += 1;
                let s = self.sexpr()?;
                self.expect(b')')?;
                Ok(s)
            }
            _ => Err(self.error("bracket parameter")),
        }
    }

    fn gen(&mut self) -> PResult<ExprAST> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let prefixes: [(&[u8], IndexedSymbol); 9] = [
            (b"kbar", GenSymbol::Kbar),
            (b"Lbar", GenSymbol::Lbar),
            (b"kb", GenSymbol::Kbar),
            (b"Lb", GenSymbol::Lbar),
            (b"k", GenSymbol::K),
            (b"L", GenSymbol::L),
            (b"e", GenSymbol::E),
            (b"f", GenSymbol::F),
            (b"h", GenSymbol::H),
        ];
        let sym = if let Some((p, ctor)) = prefixes.iter().find(|(p, _)| rest.starts_with(p)) {
            self.pos += p.len();
            let i = self.index()?;
            ctor(i)
        } else if rest.starts_with(b"a") {
            self.pos += 1;
            let i = self.index()?;
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    GenSymbol::Aplus(i)
                }
                Some(b'-') => {
                    self.pos += 1;
                    GenSymbol::Aminus(i)
                }
                _ => return Err(self.error("'+' or '-' after a CAG index")),
            }
        } else {
            return Err(self.error("generator"));
        };
        self.check_symbol(sym, start)?;
        Ok(ExprAST::Gen(sym))
    }

    fn index(&mut self) -> PResult<u32> {
        if !self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("generator index"));
        }
        let v = self.uint()?;
        u32::try_from(v).map_err(|_| ParseError::Syntax { pos: self.pos, expected: "small index".into() })
    }

    fn check_symbol(&self, sym: GenSymbol, pos: usize) -> PResult<()> {
        let idx = sym.index().unwrap_or(0) as usize;
        if let Some(n) = self.n {
            if idx < 1 || idx > n {
                return Err(ParseError::IndexOutOfRange { pos, symbol: sym.to_string(), n });
            }
        }
        if let Some(a) = self.alphabet {
            if !a.contains(sym) {
                return Err(ParseError::NotInAlphabet { pos, symbol: sym.to_string(), alphabet: a.name().to_string() });
            }
        }
        Ok(())
    }
}

fn run(text: &str, alphabet: Option<&Alphabet>, n: Option<usize>) -> PResult<ExprAST> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, alphabet, n };
    if !text.is_ascii() {
        let pos = text.char_indices().find(|(_, c)| !c.is_ascii()).map_or(0, |(i, _)| i);
        return Err(ParseError::Syntax { pos, expected: "ASCII input".into() });
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

/// Parse against an alphabet; generator indices must lie in `1..=n` when `n`
/// is given.
pub fn parse_expr(text: &str, alphabet: &Alphabet, n: Option<usize>) -> PResult<ExprAST> {
    run(text, Some(alphabet), n)
}

/// Parse without alphabet or rank restrictions.
pub fn parse_any(text: &str) -> PResult<ExprAST> {
    run(text, None, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GenSymbol::*;

    fn g(s: GenSymbol) -> Poly {
        Poly::gen(s)
    }

    #[test]
    fn bracket_default_parameter() {
        let ast = parse_any("[a1+, a2-]").unwrap();
        assert_eq!(
            ast,
            ExprAST::Bracket(Box::new(ExprAST::Gen(Aplus(1))), Box::new(ExprAST::Gen(Aminus(2))), RatFunc::from_int(1))
        );
    }

    #[test]
    fn bracket_with_parameter() {
        let ast = parse_any("[e1, e2]_(1/q)").unwrap();
        let expected = &(&g(E(1)) * &g(E(2))) - &(&g(E(2)) * &g(E(1))).scale(&q_pow(-1));
        assert_eq!(ast.lower(), expected);
        assert_eq!(parse_any("[e1,e2]_q^-1").unwrap().lower(), expected);
    }

    #[test]
    fn syntax_error_at_end() {
        match parse_any("[a1+") {
            Err(ParseError::Syntax { pos, expected }) => {
                assert_eq!(pos, 4);
                assert!(expected.contains("end of input"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn alphabet_and_range_errors() {
        let a = Alphabet::classical_cag(2);
        assert!(matches!(parse_expr("h1", &a, Some(2)), Err(ParseError::NotInAlphabet { .. })));
        assert!(matches!(parse_expr("a3+", &a, Some(2)), Err(ParseError::IndexOutOfRange { .. })));
        assert!(parse_expr("a2+ a1-", &a, Some(2)).is_ok());
    }

    #[test]
    fn printed_forms_reparse() {
        for text in [
            "e1 e2 - (1/q) e2 e1",
            "-q f1 f2 + f2 f1",
            "L2 Lbar1",
            "k1 kbar1 - 1",
            "((q^2 - 1)/(q)) e1",
            "-(3/2) e1",
            "2 a1+ a1- - 1/2",
        ] {
            let p = parse_any(text).unwrap().lower();
            assert_eq!(parse_any(&p.to_string()).unwrap().lower(), p, "{text} -> {p}");
        }
    }

    #[test]
    fn aliases_for_barred_symbols() {
        assert_eq!(parse_any("kb1 Lb2").unwrap().lower(), parse_any("kbar1 Lbar2").unwrap().lower());
    }

    #[test]
    fn scalar_versus_group() {
        let a = parse_any("(e1 + e2) e3").unwrap().lower();
        let b = parse_any("e1 e3 + e2 e3").unwrap().lower();
        assert_eq!(a, b);
        let c = parse_any("(q + 1) e1").unwrap().lower();
        assert_eq!(c, g(E(1)).scale(&(&q_pow(1) + &RatFunc::from_int(1))));
    }
}
