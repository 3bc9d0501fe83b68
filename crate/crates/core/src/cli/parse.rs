//! Expression parser and input-file reader.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*' unary)*
//! unary    := '-'? factor
//! factor   := base ('^' natural)?
//! base     := rational | variable | '(' expr ')'
//! variable := ('x' | 'p') natural
//! rational := integer ('/' positive-integer)?
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{power_sum, Poly, Rational};
use crate::reduce::{Constraint, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char, BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "'{v}'"),
            Tok::Var(c, i) => write!(f, "'{c}{i}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, line: usize, column0: usize) -> Result<Vec<Lexed>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |i: usize, message: String| ParseError {
        line,
        column: column0 + i,
        message,
    };
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        let s: String = chars[start..*i].iter().collect();
        s.parse::<BigInt>().ok()
    };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let v = digits(&mut i).expect("at least one digit");
                if i < chars.len() && chars[i] == '.' {
                    return Err(err(start, "decimal numbers are not supported; write a fraction".into()));
                }
                Tok::Int(v)
            }
            'x' | 'p' => {
                i += 1;
                match digits(&mut i) {
                    Some(v) => Tok::Var(c, v),
                    None => return Err(err(start, format!("expected an index after '{c}'"))),
                }
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                i += 1;
                match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                }
            }
            _ => {
                let word: String = chars[i..]
                    .iter()
                    .take_while(|c| c.is_alphanumeric() || **c == '_')
                    .collect();
                let shown = if word.is_empty() { c.to_string() } else { word };
                return Err(err(start, format!("unknown token '{shown}'")));
            }
        };
        out.push(Lexed {
            tok,
            line,
            column: column0 + start,
        });
    }
    out.push(Lexed {
        tok: Tok::End,
        line,
        column: column0 + chars.len(),
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
    /// Index of the most recently consumed token.
    prev: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error_here(&self, message: String) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        self.prev = self.pos;
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Tok::Int(k) => {
                if *self.peek() == Tok::Slash {
                    return Err(self.error_here("exponent must be a nonnegative integer".into()));
                }
                let k = k
                    .to_u32()
                    .ok_or_else(|| self.error_at_prev(format!("exponent {k} is too large")))?;
                Ok(base.pow(k))
            }
            Tok::Minus => Err(self.error_at_prev("exponent must be a nonnegative integer".into())),
            t => Err(self.error_at_prev(format!("expected an exponent, found {t}"))),
        }
    }

    fn error_at_prev(&self, message: String) -> ParseError {
        let t = &self.toks[self.prev];
        ParseError {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn base(&mut self) -> Result<Poly, ParseError> {
        match self.bump() {
            Tok::Int(num) => {
                if *self.peek() != Tok::Slash {
                    return Ok(Poly::constant(self.nvars, Rational::from_integer(num)));
                }
                self.bump();
                match self.bump() {
                    Tok::Int(den) if !den.is_zero() => Ok(Poly::constant(self.nvars, Rational::new(num, den))),
                    Tok::Int(_) => Err(self.error_at_prev("denominator must be positive".into())),
                    t => Err(self.error_at_prev(format!("expected a denominator, found {t}"))),
                }
            }
            Tok::Var('x', idx) => {
                let i = idx
                    .to_usize()
                    .filter(|&i| (1..=self.nvars).contains(&i))
                    .ok_or_else(|| {
                        self.error_at_prev(format!(
                            "variable x{idx} is out of range; indices run from 1 to {}",
                            self.nvars
                        ))
                    })?;
                Ok(Poly::var(self.nvars, i - 1))
            }
            // p_i with i > n is still a symmetric polynomial in n variables
            Tok::Var(_, idx) => {
                let i = idx.to_u32().filter(|&i| i >= 1).ok_or_else(|| {
                    self.error_at_prev(format!("power sum p{idx} is out of range; indices start at 1"))
                })?;
                Ok(power_sum(self.nvars, i))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    t => Err(self.error_at_prev(format!("expected ')', found {t}"))),
                }
            }
            t => Err(self.error_at_prev(format!("expected a number, variable or '(', found {t}"))),
        }
    }
}

fn parse_at(text: &str, nvars: usize, line: usize, column0: usize) -> Result<Poly, ParseError> {
    let mut p = Parser {
        toks: lex(text, line, column0)?,
        pos: 0,
        prev: 0,
        nvars,
    };
    let f = p.expr()?;
    match p.peek() {
        Tok::End => Ok(f),
        t => Err(p.error_here(format!("unexpected {t}"))),
    }
}

/// Parses one expression in `nvars` variables; `p<i>` expands to the power
/// sum `x1^i + ... + xn^i`.
pub fn parse_expression(text: &str, nvars: usize) -> Result<Poly, ParseError> {
    parse_at(text, nvars, 1, 1)
}

/// A parsed input: constraints with relations and an optional objective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputSystem {
    pub nvars: usize,
    pub constraints: Vec<Constraint>,
    pub objective: Option<Poly>,
}

const RELATIONS: [(&str, Relation, bool); 6] = [
    ("!=", Relation::Ne, false),
    (">=", Relation::Ge, false),
    ("<=", Relation::Ge, true),
    ("=", Relation::Eq, false),
    (">", Relation::Gt, false),
    ("<", Relation::Gt, true),
];

/// Locates the relation operator in a statement: byte offset, operator
/// length, relation, and whether the sides swap.
fn find_relation(s: &str) -> Option<(usize, usize, Relation, bool)> {
    s.char_indices().find_map(|(i, _)| {
        RELATIONS
            .iter()
            .find(|(op, _, _)| s[i..].starts_with(op))
            .map(|&(op, rel, flip)| (i, op.len(), rel, flip))
    })
}

enum Statement {
    Constraint(Constraint),
    Objective(Poly),
}

/// `lhs <op> rhs` becomes `lhs - rhs <op> 0`; `<` and `<=` swap sides. A
/// statement without a relation is the objective.
fn parse_statement(s: &str, nvars: usize, line: usize, column0: usize) -> Result<Statement, ParseError> {
    let trimmed_start = s.len() - s.trim_start().len();
    let body = s.trim();
    let col = column0 + s[..trimmed_start].chars().count();
    if let Some(rest) = body.strip_prefix("objective:") {
        let offset = body.len() - rest.len();
        let f = parse_at(rest, nvars, line, col + body[..offset].chars().count())?;
        return Ok(Statement::Objective(f));
    }
    let Some((at, len, relation, flip)) = find_relation(body) else {
        return Ok(Statement::Objective(parse_at(body, nvars, line, col)?));
    };
    let lhs_text = &body[..at];
    let rhs_text = &body[at + len..];
    let rhs_col = col + body[..at + len].chars().count();
    if lhs_text.trim().is_empty() {
        return Err(ParseError {
            line,
            column: col,
            message: "missing expression before the relation".into(),
        });
    }
    let lhs = parse_at(lhs_text, nvars, line, col)?;
    let rhs = if rhs_text.trim().is_empty() {
        return Err(ParseError {
            line,
            column: rhs_col,
            message: "missing right-hand side after the relation".into(),
        });
    } else {
        parse_at(rhs_text, nvars, line, rhs_col)?
    };
    let poly = if flip { &rhs - &lhs } else { &lhs - &rhs };
    Ok(Statement::Constraint(Constraint::new(poly, relation)))
}

fn push_statement(sys: &mut InputSystem, st: Statement, line: usize) -> Result<(), ParseError> {
    match st {
        Statement::Constraint(c) => sys.constraints.push(c),
        Statement::Objective(f) => {
            if sys.objective.is_some() {
                return Err(ParseError {
                    line,
                    column: 1,
                    message: "more than one objective".into(),
                });
            }
            sys.objective = Some(f);
        }
    }
    Ok(())
}

/// Inline input: statements separated by `;`.
pub fn parse_inline(text: &str, nvars: usize) -> Result<InputSystem, ParseError> {
    let mut sys = InputSystem {
        nvars,
        constraints: Vec::new(),
        objective: None,
    };
    let mut column = 1;
    for chunk in text.split(';') {
        if !chunk.trim().is_empty() {
            let st = parse_statement(chunk, nvars, 1, column)?;
            push_statement(&mut sys, st, 1)?;
        }
        column += chunk.chars().count() + 1;
    }
    Ok(sys)
}

/// Input file: an `nvars: <n>` header, `#` comments, one statement per line.
/// `nvars` given on the command line must agree with the header when both
/// are present.
pub fn parse_system(text: &str, nvars_flag: Option<usize>) -> Result<InputSystem, ParseError> {
    let mut nvars = None;
    let mut pending = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let t = content.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix("nvars:") {
            let column = raw.find("nvars:").unwrap_or(0) + 1;
            let n: usize = rest.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| ParseError {
                line,
                column,
                message: format!("nvars must be a positive integer, got '{}'", rest.trim()),
            })?;
            if nvars.is_some() {
                return Err(ParseError {
                    line,
                    column,
                    message: "duplicate nvars header".into(),
                });
            }
            if let Some(flag) = nvars_flag.filter(|&f| f != n) {
                return Err(ParseError {
                    line,
                    column,
                    message: format!("header says nvars: {n} but --nvars {flag} was given"),
                });
            }
            nvars = Some(n);
            continue;
        }
        pending.push((line, content));
    }
    let nvars = nvars.or(nvars_flag).ok_or(ParseError {
        line: 1,
        column: 1,
        message: "missing 'nvars: <n>' header".into(),
    })?;
    let mut sys = InputSystem {
        nvars,
        constraints: Vec::new(),
        objective: None,
    };
    for (line, content) in pending {
        let st = parse_statement(content, nvars, line, 1)?;
        push_statement(&mut sys, st, line)?;
    }
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{elem_sym, ratio};

    #[test]
    fn power_sum_tokens_expand() {
        let f = parse_expression("p1^2 - 2*p2", 3).unwrap();
        let x: Vec<Poly> = (0..3).map(|i| Poly::var(3, i)).collect();
        let s = &(&x[0] + &x[1]) + &x[2];
        let q = &(&x[0].pow(2) + &x[1].pow(2)) + &x[2].pow(2);
        assert_eq!(f, &s.pow(2) - &q.scale(&Rational::from_integer(2.into())));
    }

    #[test]
    fn scaled_elementary() {
        let f = parse_expression("3/2*x1*x2 + 3/2*x1*x3 + 3/2*x2*x3", 3).unwrap();
        assert_eq!(f, elem_sym(3, 2).unwrap().scale(&ratio(3, 2)));
    }

    #[test]
    fn precedence() {
        let a = parse_expression("-x1^2 + 2*(x1 - 1)", 1).unwrap();
        let x = Poly::var(1, 0);
        let expect = &(-x.pow(2)) + &(&x - &Poly::one(1)).scale(&Rational::from_integer(2.into()));
        assert_eq!(a, expect);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_expression("x1 + y2", 2).unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        assert!(e.message.contains("unknown token 'y2'"));
        let e = parse_expression("x1 + x3", 2).unwrap_err();
        assert_eq!(e.column, 6);
        assert!(e.message.contains("out of range"));
        let e = parse_expression("x1^-2", 2).unwrap_err();
        assert!(e.message.contains("nonnegative integer"));
        let e = parse_expression("x1^1.5", 2).unwrap_err();
        assert!(e.message.contains("decimal"));
        assert!(parse_expression("x1^3/2", 2).is_err());
        assert!(parse_expression("2 x1", 2).is_err());
        assert!(parse_expression("x0", 2).is_err());
        assert!(parse_expression("p0", 2).is_err());
        assert_eq!(parse_expression("p3", 2).unwrap(), power_sum(2, 3));
        assert!(parse_expression("1/0", 2).is_err());
        assert!(parse_expression("(x1", 2).is_err());
        assert!(parse_expression("", 2).is_err());
        assert!(parse_expression("--x1", 2).is_err());
    }

    #[test]
    fn system_file() {
        let text = "# demo\nnvars: 3\np2 - 1 = 0\np1 >= 1  # comment\nx1*x2*x3 < 1\nobjective: p4\n";
        let sys = parse_system(text, None).unwrap();
        assert_eq!(sys.nvars, 3);
        assert_eq!(sys.constraints.len(), 3);
        assert_eq!(sys.constraints[0].relation, Relation::Eq);
        assert_eq!(sys.constraints[1].poly, &power_sum(3, 1) - &Poly::one(3));
        assert_eq!(sys.constraints[2].relation, Relation::Gt);
        assert_eq!(sys.constraints[2].poly, &Poly::one(3) - &elem_sym(3, 3).unwrap());
        assert_eq!(sys.objective, Some(power_sum(3, 4)));

        let e = parse_system("nvars: 2\n\n  x1 + q", None).unwrap_err();
        assert_eq!((e.line, e.column), (3, 8));
        assert!(parse_system("x1 = 0", None).is_err());
        assert!(parse_system("nvars: 2\nx1 = 0", Some(3)).is_err());
        assert!(parse_system("nvars: 0", None).is_err());
        assert!(parse_system("x1 = 0", Some(1)).is_ok());
    }

    #[test]
    fn inline_statements() {
        let sys = parse_inline("p1 = 0; p2 = 2", 2).unwrap();
        assert_eq!(sys.constraints.len(), 2);
        assert!(sys.objective.is_none());
        let sys = parse_inline("3*p4 - p2^2", 3).unwrap();
        assert!(sys.constraints.is_empty() && sys.objective.is_some());
        let e = parse_inline("p1 = 0; p2 = y", 2).unwrap_err();
        assert_eq!(e.column, 14);
    }
}
