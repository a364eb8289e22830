//! Lexer and recursive-descent parser for cobordism words.
//!
//! ```text
//! expr := term { "." term }
//! term := atom { "#" atom }
//! atom := generator | "(" expr ")"
//! ```

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Y1,
    Y2,
    CoY1,
    CoY2,
    I1,
    I2,
    Ci1,
    Ci2,
    Psi,
    PsiBar,
    K,
    P,
    Id,
}

impl Generator {
    pub const ALL: [Generator; 13] = [
        Generator::Y1,
        Generator::Y2,
        Generator::CoY1,
        Generator::CoY2,
        Generator::I1,
        Generator::I2,
        Generator::Ci1,
        Generator::Ci2,
        Generator::Psi,
        Generator::PsiBar,
        Generator::K,
        Generator::P,
        Generator::Id,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Y1 => "Y1",
            Generator::Y2 => "Y2",
            Generator::CoY1 => "coY1",
            Generator::CoY2 => "coY2",
            Generator::I1 => "i1",
            Generator::I2 => "i2",
            Generator::Ci1 => "ci1",
            Generator::Ci2 => "ci2",
            Generator::Psi => "Psi",
            Generator::PsiBar => "PsiBar",
            Generator::K => "K",
            Generator::P => "P",
            Generator::Id => "Id",
        }
    }

    pub fn from_name(s: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.name() == s)
    }

    /// `(inputs, outputs)` counted in solid-torus boundary components.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::Y1 | Generator::Y2 => (2, 1),
            Generator::CoY1 | Generator::CoY2 => (1, 2),
            Generator::I1 | Generator::I2 => (0, 1),
            Generator::Ci1 | Generator::Ci2 => (1, 0),
            Generator::P => (2, 2),
            Generator::Psi | Generator::PsiBar | Generator::K | Generator::Id => (1, 1),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parsed word. `pos` is the byte offset of the node's first token, or of the
/// operator for binary nodes.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Gen { gen: Generator, pos: usize },
    /// `f . g`, f after g.
    Compose { f: Box<Expr>, g: Box<Expr>, pos: usize },
    /// `f # g`, disjoint union.
    Tensor { f: Box<Expr>, g: Box<Expr>, pos: usize },
}

impl Expr {
    pub fn gen(gen: Generator) -> Expr {
        Expr::Gen { gen, pos: 0 }
    }

    pub fn compose(f: Expr, g: Expr) -> Expr {
        Expr::Compose { f: Box::new(f), g: Box::new(g), pos: 0 }
    }

    pub fn tensor(f: Expr, g: Expr) -> Expr {
        Expr::Tensor { f: Box::new(f), g: Box::new(g), pos: 0 }
    }

    pub fn pos(&self) -> usize {
        match self {
            Expr::Gen { pos, .. } | Expr::Compose { pos, .. } | Expr::Tensor { pos, .. } => *pos,
        }
    }

    /// Tree form, e.g. `Compose(Y1, Tensor(Psi, Psi))`.
    pub fn structure(&self) -> String {
        match self {
            Expr::Gen { gen, .. } => gen.name().to_string(),
            Expr::Compose { f, g, .. } => format!("Compose({}, {})", f.structure(), g.structure()),
            Expr::Tensor { f, g, .. } => format!("Tensor({}, {})", f.structure(), g.structure()),
        }
    }

    /// Same tree, positions ignored.
    pub fn same_shape(&self, other: &Expr) -> bool {
        match (self, other) {
            (Expr::Gen { gen: a, .. }, Expr::Gen { gen: b, .. }) => a == b,
            (Expr::Compose { f: f1, g: g1, .. }, Expr::Compose { f: f2, g: g2, .. })
            | (Expr::Tensor { f: f1, g: g1, .. }, Expr::Tensor { f: f2, g: g2, .. }) => {
                f1.same_shape(f2) && g1.same_shape(g2)
            }
            _ => false,
        }
    }
}

/// Prints the word back in the surface syntax, fully parenthesized where the
/// grammar needs it.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen { gen, .. } => write!(f, "{gen}"),
            Expr::Compose { f: a, g: b, .. } => match **a {
                Expr::Compose { .. } => write!(f, "({a}) . {b}"),
                _ => write!(f, "{a} . {b}"),
            },
            Expr::Tensor { f: a, g: b, .. } => {
                let lhs = match **a {
                    Expr::Compose { .. } => format!("({a})"),
                    _ => a.to_string(),
                };
                let rhs = match **b {
                    Expr::Gen { .. } => b.to_string(),
                    _ => format!("({b})"),
                };
                write!(f, "{lhs} # {rhs}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lex,
    Syntax,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{} error at {}: {message}", match .kind { ParseErrorKind::Lex => "lex", ParseErrorKind::Syntax => "parse" }, position_text(.pos, .at_end))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub pos: usize,
    pub at_end: bool,
    pub message: String,
}

fn position_text(pos: &usize, at_end: &bool) -> String {
    if *at_end {
        format!("end of input (position {pos})")
    } else {
        format!("position {pos}")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Gen(Generator),
    Dot,
    Hash,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '.' | '#' | '(' | ')' => {
                chars.next();
                let t = match c {
                    '.' => Tok::Dot,
                    '#' => Tok::Hash,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push((t, i));
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let word = &text[i..end];
                let gen = Generator::from_name(word).ok_or_else(|| ParseError {
                    kind: ParseErrorKind::Lex,
                    pos: i,
                    at_end: false,
                    message: format!("unknown generator `{word}`"),
                })?;
                out.push((Tok::Gen(gen), i));
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::Lex,
                    pos: i,
                    at_end: false,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (tok, pos) = self.peek();
        ParseError { kind: ParseErrorKind::Syntax, pos: *pos, at_end: *tok == Tok::End, message: message.into() }
    }

    // Composition chains nest to the right: `a . b . c` = `a . (b . c)`.
    fn expr(&mut self) -> Result<Expr, ParseError> {
        let head = self.term()?;
        if let (Tok::Dot, pos) = *self.peek() {
            self.bump();
            let rest = self.expr()?;
            return Ok(Expr::Compose { f: Box::new(head), g: Box::new(rest), pos });
        }
        Ok(head)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.atom()?;
        while let (Tok::Hash, pos) = *self.peek() {
            self.bump();
            let rhs = self.atom()?;
            acc = Expr::Tensor { f: Box::new(acc), g: Box::new(rhs), pos };
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            (Tok::Gen(gen), pos) => {
                self.bump();
                Ok(Expr::Gen { gen, pos })
            }
            (Tok::LParen, open) => {
                self.bump();
                let inner = self.expr()?;
                match self.peek() {
                    (Tok::RParen, _) => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(self.error(format!("expected `)` to close `(` at position {open}"))),
                }
            }
            (Tok::End, _) => Err(self.error("expected a generator or `(`")),
            (t, _) => Err(self.error(format!("expected a generator or `(`, found {}", tok_name(&t)))),
        }
    }
}

fn tok_name(t: &Tok) -> String {
    match t {
        Tok::Gen(g) => format!("`{g}`"),
        Tok::Dot => "`.`".into(),
        Tok::Hash => "`#`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.expr()?;
    match p.peek() {
        (Tok::End, _) => Ok(e),
        (t, _) => {
            let t = tok_name(t);
            Err(p.error(format!("unexpected {t}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structural_examples() {
        assert_eq!(parse("Y1 . (Psi # Psi)").unwrap().structure(), "Compose(Y1, Tensor(Psi, Psi))");
        assert_eq!(
            parse("ci1 . Y1 . (i1 # Id)").unwrap().structure(),
            "Compose(ci1, Compose(Y1, Tensor(i1, Id)))"
        );
        assert_eq!(parse("  (((Id)))").unwrap().structure(), "Id");
        assert_eq!(parse("Id#Id#P").unwrap().structure(), "Tensor(Tensor(Id, Id), P)");
    }

    #[test]
    fn dangling_operator() {
        let e = parse("Y1 .").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
        assert!(e.at_end);
        assert_eq!(e.pos, 4);
        assert!(e.to_string().contains("end of input"));
        assert!(parse("Y1 # ").unwrap_err().at_end);
    }

    #[test]
    fn unbalanced_parens() {
        let e = parse("(Y1 . Psi").unwrap_err();
        assert!(e.at_end);
        let e = parse("Y1 . Psi)").unwrap_err();
        assert_eq!(e.pos, 8);
        assert!(!e.at_end);
    }

    #[test]
    fn lex_errors_carry_positions() {
        let e = parse("Y1 . psi").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Lex);
        assert_eq!(e.pos, 5);
        let e = parse("Y1 + Y2").unwrap_err();
        assert_eq!((e.kind, e.pos), (ParseErrorKind::Lex, 3));
    }

    #[test]
    fn display_reparses_to_same_tree() {
        for text in ["Y1 . (Psi # Psi)", "(K # Id) . coY1 . PsiBar", "P . (Psi # Psi) . coY2", "(Y1 . P) # i2"] {
            let e = parse(text).unwrap();
            assert!(parse(&e.to_string()).unwrap().same_shape(&e), "{text}");
        }
    }
}
