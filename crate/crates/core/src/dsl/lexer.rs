use super::ast::Span;
use super::diag::{Diagnostic, DiagnosticKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(v) => format!("integer {v}"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// Splits source text into tokens. Columns count characters, so multi-byte
/// UTF-8 still maps to one column each. A trailing `\r` before `\n` is
/// treated as whitespace.
pub(crate) fn tokenize(text: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut diags = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let start = Span { line, col, len: 1 };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
                continue;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            _ => {}
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(tok) = single {
            tokens.push(Token { tok, span: start });
            i += 1;
            col += 1;
            continue;
        }
        let digit_follows = chars.get(i + 1).is_some_and(|d| d.is_ascii_digit());
        if c.is_ascii_digit() || (c == '-' && digit_follows) {
            let begin = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lexeme: String = chars[begin..i].iter().collect();
            let span = Span { line, col, len: i - begin };
            col += i - begin;
            match lexeme.parse::<i64>() {
                Ok(v) => tokens.push(Token { tok: Tok::Int(v), span }),
                Err(_) => diags.push(Diagnostic::error(
                    DiagnosticKind::Syntax,
                    span,
                    format!("integer literal {lexeme} does not fit in 64 bits"),
                )),
            }
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let begin = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let span = Span { line, col, len: i - begin };
            col += i - begin;
            tokens.push(Token { tok: Tok::Ident(chars[begin..i].iter().collect()), span });
            continue;
        }
        diags.push(Diagnostic::error(DiagnosticKind::Syntax, start, format!("unexpected character `{c}`")));
        i += 1;
        col += 1;
    }
    tokens.push(Token { tok: Tok::Eof, span: Span { line, col, len: 1 } });
    (tokens, diags)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_comments() {
        let (toks, diags) = tokenize("carrier gl(2,-3); # note\r\nop");
        assert!(diags.is_empty());
        let kinds: Vec<_> = toks.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Ident("carrier".into()),
                Tok::Ident("gl".into()),
                Tok::LParen,
                Tok::Int(2),
                Tok::Comma,
                Tok::Int(-3),
                Tok::RParen,
                Tok::Semi,
                Tok::Ident("op".into()),
                Tok::Eof
            ]
        );
        assert_eq!(toks[5].span, Span { line: 1, col: 14, len: 2 });
        assert_eq!(toks[8].span, Span { line: 2, col: 1, len: 2 });
    }

    #[test]
    fn bad_character() {
        let (_, diags) = tokenize("op a = ?;");
        assert_eq!(diags.len(), 1);
        assert_eq!((diags[0].span.line, diags[0].span.col), (1, 8));
    }
}
