use super::ast::{CarrierExpr, CheckDecl, Ident, NamedArg, OpDecl, Span, Spanned, Value};
use super::diag::{Diagnostic, DiagnosticKind};
use super::lexer::{tokenize, Tok, Token};

#[derive(Debug, Clone)]
pub(crate) enum Stmt {
    Carrier { keyword: Span, expr: CarrierExpr },
    Op(OpDecl),
    Check(CheckDecl),
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    diags: Vec<Diagnostic>,
}

type PResult<T> = Result<T, ()>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&mut self, expected: &str) -> PResult<T> {
        let t = self.peek().clone();
        self.diags.push(Diagnostic::error(
            DiagnosticKind::Syntax,
            t.span,
            format!("expected {expected}, found {}", t.tok.describe()),
        ));
        Err(())
    }

    fn expect(&mut self, tok: Tok) -> PResult<Span> {
        if self.peek().tok == tok {
            Ok(self.bump().span)
        } else {
            self.fail(&tok.describe())
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> PResult<Ident> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                let span = self.bump().span;
                Ok(Spanned::new(s, span))
            }
            _ => self.fail(what),
        }
    }

    fn int(&mut self) -> PResult<Spanned<i64>> {
        match self.peek().tok {
            Tok::Int(v) => {
                let span = self.bump().span;
                Ok(Spanned::new(v, span))
            }
            _ => self.fail("an integer"),
        }
    }

    /// Skips to just past the next `;`.
    fn recover(&mut self) {
        loop {
            match self.bump().tok {
                Tok::Semi | Tok::Eof => return,
                _ => {}
            }
        }
    }

    fn statement(&mut self) -> PResult<Stmt> {
        let kw = self.ident("`carrier`, `op` or `check`")?;
        let stmt = match kw.node.as_str() {
            "carrier" => Stmt::Carrier { keyword: kw.span, expr: self.carrier_expr()? },
            "op" => Stmt::Op(self.op_decl()?),
            "check" => {
                let check = self.ident("a check name")?;
                let mut ops = Vec::new();
                while let Tok::Ident(_) = self.peek().tok {
                    ops.push(self.ident("an operation name")?);
                }
                Stmt::Check(CheckDecl { check, ops })
            }
            _ => {
                self.diags.push(Diagnostic::error(
                    DiagnosticKind::Syntax,
                    kw.span,
                    format!("expected `carrier`, `op` or `check`, found identifier `{}`", kw.node),
                ));
                return Err(());
            }
        };
        self.expect(Tok::Semi)?;
        Ok(stmt)
    }

    fn carrier_expr(&mut self) -> PResult<CarrierExpr> {
        let mut expr = self.carrier_term()?;
        while self.peek().tok == Tok::Ident("x".into()) {
            self.bump();
            let rhs = self.carrier_term()?;
            expr = CarrierExpr::Product(Box::new(expr), Box::new(rhs));
        }
        Ok(expr)
    }

    fn carrier_term(&mut self) -> PResult<CarrierExpr> {
        let name = self.ident("a carrier name")?;
        self.expect(Tok::LParen)?;
        let mut args = vec![self.int()?];
        while self.eat(&Tok::Comma) {
            args.push(self.int()?);
        }
        self.expect(Tok::RParen)?;
        Ok(CarrierExpr::Call { name, args })
    }

    fn op_decl(&mut self) -> PResult<OpDecl> {
        let name = self.ident("an operation name")?;
        self.expect(Tok::Eq)?;
        let ctor = self.ident("a constructor name")?;
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek().tok != Tok::RParen {
            loop {
                let arg = self.ident("an argument name")?;
                self.expect(Tok::Eq)?;
                let value = self.value()?;
                args.push(NamedArg { name: arg, value });
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        Ok(OpDecl { name, ctor, args })
    }

    fn value(&mut self) -> PResult<Spanned<Value>> {
        let span = self.peek().span;
        match self.peek().tok.clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Spanned::new(Value::Int(v), span))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Spanned::new(Value::Ident(s), span))
            }
            Tok::LBracket => {
                self.bump();
                let mut rows = vec![self.row()?];
                while self.eat(&Tok::Comma) {
                    rows.push(self.row()?);
                }
                self.expect(Tok::RBracket)?;
                Ok(Spanned::new(Value::Matrix(rows), span))
            }
            _ => self.fail("an integer, matrix literal or identifier"),
        }
    }

    fn row(&mut self) -> PResult<Vec<i64>> {
        self.expect(Tok::LBracket)?;
        let mut row = vec![self.int()?.node];
        while self.eat(&Tok::Comma) {
            row.push(self.int()?.node);
        }
        self.expect(Tok::RBracket)?;
        Ok(row)
    }
}

/// Syntax pass: statements in source order plus all syntax diagnostics.
/// After an error the parser resumes at the next `;`.
pub(crate) fn parse_statements(text: &str) -> (Vec<Stmt>, Vec<Diagnostic>) {
    let (toks, diags) = tokenize(text);
    let mut p = Parser { toks, pos: 0, diags };
    let mut stmts = Vec::new();
    while p.peek().tok != Tok::Eof {
        match p.statement() {
            Ok(s) => stmts.push(s),
            Err(()) => p.recover(),
        }
    }
    (stmts, p.diags)
}

/// Parses a lone carrier expression such as `gl(2,3)` or `vector(2,2) x gl(2,2)`.
pub(crate) fn parse_carrier_text(text: &str) -> Result<CarrierExpr, Vec<Diagnostic>> {
    let (toks, diags) = tokenize(text);
    let mut p = Parser { toks, pos: 0, diags };
    let expr = p.carrier_expr();
    if expr.is_ok() && p.peek().tok != Tok::Eof {
        let _ = p.fail::<()>("end of input");
    }
    match expr {
        Ok(e) if p.diags.is_empty() => Ok(e),
        _ => Err(p.diags),
    }
}
