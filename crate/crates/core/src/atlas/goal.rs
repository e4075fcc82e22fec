//! Boolean goals over space and set predicates, e.g.
//! `softly-pigdhat & !quasi-pigdhat` or `pigdhat-closed(A) & !closed(A)`.

use std::fmt;

use crate::error::TokenError;
use crate::genclass::{ClassTable, SchemeEvaluator, SetProperty};
use crate::normality::{is_normal_kind, separation_axiom, NormalityKind, SeparationAxiom};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    Space(NormalityKind),
    Axiom(SeparationAxiom),
    /// A property of the single set variable `A`.
    Set(SetProperty),
}

impl Atom {
    fn parse(token: &str) -> Result<Atom, TokenError> {
        let bare = token
            .strip_suffix("(A)")
            .or_else(|| token.strip_suffix("(a)"))
            .unwrap_or(token);
        if bare == token {
            if let Ok(k) = token.parse::<NormalityKind>() {
                return Ok(Atom::Space(k));
            }
            let axiom = match token {
                "t1" | "pigdhat-t1" => Some(SeparationAxiom::T1),
                "t2" | "pigdhat-t2" => Some(SeparationAxiom::T2),
                "t3" | "pigdhat-t3" => Some(SeparationAxiom::T3),
                _ => None,
            };
            if let Some(a) = axiom {
                return Ok(Atom::Axiom(a));
            }
        }
        bare.parse::<SetProperty>()
            .map(Atom::Set)
            .map_err(|_| TokenError::Unknown(token.to_string()))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Space(k) => write!(f, "{k}"),
            Atom::Axiom(a) => write!(f, "{}", a.token()),
            Atom::Set(p) => write!(f, "{p}(A)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Goal {
    Atom(Atom),
    Not(Box<Goal>),
    And(Box<Goal>, Box<Goal>),
    Or(Box<Goal>, Box<Goal>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<Tok>, TokenError> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '!' | '¬' | '~' => {
                chars.next();
                out.push(Tok::Not);
            }
            '&' | '∧' => {
                chars.next();
                out.push(Tok::And);
            }
            '|' | '∨' => {
                chars.next();
                out.push(Tok::Or);
            }
            '(' => {
                chars.next();
                out.push(Tok::Open);
            }
            ')' => {
                chars.next();
                out.push(Tok::Close);
            }
            c if c.is_ascii_alphanumeric() || c == '-' => {
                let mut w = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '-' {
                        w.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                // a set argument `(A)` glued to the word
                let rest: String = chars.clone().take(3).collect();
                if rest == "(A)" || rest == "(a)" {
                    chars.nth(2);
                    w.push_str("(A)");
                }
                out.push(Tok::Word(w));
            }
            other => {
                return Err(TokenError::Malformed(format!(
                    "unexpected character `{other}`"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn or(&mut self) -> Result<Goal, TokenError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            lhs = Goal::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Goal, TokenError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            lhs = Goal::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Goal, TokenError> {
        let tok = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Not) => Ok(Goal::Not(Box::new(self.unary()?))),
            Some(Tok::Open) => {
                let inner = self.or()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(TokenError::Malformed("missing `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Word(w)) => Atom::parse(&w).map(Goal::Atom),
            Some(other) => Err(TokenError::Malformed(format!("unexpected {other:?}"))),
            None => Err(TokenError::Malformed("expression ends early".into())),
        }
    }
}

impl std::str::FromStr for Goal {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            toks: lex(s)?,
            pos: 0,
        };
        let g = p.or()?;
        if p.pos != p.toks.len() {
            return Err(TokenError::Malformed(format!("trailing input in `{s}`")));
        }
        Ok(g)
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Goal::Atom(a) => write!(f, "{a}"),
            Goal::Not(g) => write!(f, "!{g}"),
            Goal::And(a, b) => write!(f, "({a} & {b})"),
            Goal::Or(a, b) => write!(f, "({a} | {b})"),
        }
    }
}

/// Answers atoms for one space; set atoms are asked about `A`.
pub trait AtomOracle {
    fn holds(&mut self, atom: Atom, a: Subset) -> bool;
}

/// Backed by a prebuilt [`ClassTable`].
pub struct TableOracle<'t> {
    table: &'t ClassTable,
    cache: Vec<Option<bool>>,
}

impl<'t> TableOracle<'t> {
    pub fn new(table: &'t ClassTable) -> Self {
        TableOracle {
            table,
            cache: vec![None; NormalityKind::ALL.len() + 3],
        }
    }
}

impl AtomOracle for TableOracle<'_> {
    fn holds(&mut self, atom: Atom, a: Subset) -> bool {
        let table = self.table;
        match atom {
            Atom::Set(p) => table.has(p, a),
            Atom::Space(k) => {
                *self.cache[k as usize].get_or_insert_with(|| is_normal_kind(table, k).holds)
            }
            Atom::Axiom(x) => *self.cache[NormalityKind::ALL.len() + x as usize]
                .get_or_insert_with(|| separation_axiom(table, x).holds),
        }
    }
}

/// Set atoms decided by the top-down scheme evaluator, independent of the
/// table families; used to replay miner witnesses.
pub struct SchemeOracle<'t> {
    pub table: &'t ClassTable,
    pub eval: SchemeEvaluator<'t>,
}

impl AtomOracle for SchemeOracle<'_> {
    fn holds(&mut self, atom: Atom, a: Subset) -> bool {
        match atom {
            Atom::Set(p) => self.eval.has(p, a),
            Atom::Space(k) => is_normal_kind(self.table, k).holds,
            Atom::Axiom(x) => separation_axiom(self.table, x).holds,
        }
    }
}

impl Goal {
    pub fn uses_set(&self) -> bool {
        match self {
            Goal::Atom(Atom::Set(_)) => true,
            Goal::Atom(_) => false,
            Goal::Not(g) => g.uses_set(),
            Goal::And(a, b) | Goal::Or(a, b) => a.uses_set() || b.uses_set(),
        }
    }

    pub fn eval(&self, oracle: &mut dyn AtomOracle, a: Subset) -> bool {
        match self {
            Goal::Atom(atom) => oracle.holds(*atom, a),
            Goal::Not(g) => !g.eval(oracle, a),
            Goal::And(x, y) => x.eval(oracle, a) && y.eval(oracle, a),
            Goal::Or(x, y) => x.eval(oracle, a) || y.eval(oracle, a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_precedence_and_sets() {
        let g: Goal = "softly-pigdhat & !quasi-pigdhat | normal".parse().unwrap();
        assert_eq!(
            g.to_string(),
            "((softly-pigdhat & !quasi-pigdhat) | normal)"
        );
        assert!(!g.uses_set());
        let g: Goal = "pigdhat-closed(A) ∧ ¬closed(A)".parse().unwrap();
        assert!(g.uses_set());
        assert_eq!(g.to_string(), "(pigdhat-closed(A) & !closed(A))");
        let g: Goal = "!(t1 & t3)".parse().unwrap();
        assert_eq!(g.to_string(), "!(pigdhat-t1 & pigdhat-t3)");
    }

    #[test]
    fn rejects_unknown_and_malformed() {
        assert_eq!(
            "softly & bogus".parse::<Goal>(),
            Err(TokenError::Unknown("bogus".into()))
        );
        assert!(matches!(
            "(normal".parse::<Goal>(),
            Err(TokenError::Malformed(_))
        ));
        assert!(matches!(
            "normal &".parse::<Goal>(),
            Err(TokenError::Malformed(_))
        ));
        assert!(matches!(
            "normal, quasi".parse::<Goal>(),
            Err(TokenError::Malformed(_))
        ));
    }
}
