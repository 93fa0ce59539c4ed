//! Counterexample mining: a boolean expression language over the named
//! checkers, evaluated exhaustively over an enumerated instance stream.
//!
//! Expressions combine checker names with `&`, `|`, `!`, and parentheses.
//! Quantification is implicit: the engine enumerates carriers and
//! morphisms. Expressions built only from the epimorphism checkers range
//! over surjections; any point- or pair-level atom switches the stream to
//! generalized points. Hits are re-validated with the definition-literal
//! checkers before they are reported.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::par;
use crate::points::{self, literal, GeneralizedPoint};
use crate::verify::corpus::Corpus;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    SchreierEpi,
    RegularSchreier,
    SchreierPoint,
    StrongGp,
    SchreierGp,
    Split,
}

impl Atom {
    fn parse(name: &str) -> Result<Atom> {
        match name {
            "schreier-epi" => Ok(Atom::SchreierEpi),
            "regular-schreier" => Ok(Atom::RegularSchreier),
            "schreier-point" => Ok(Atom::SchreierPoint),
            "strong-gp" => Ok(Atom::StrongGp),
            "schreier-gp" => Ok(Atom::SchreierGp),
            "split" => Ok(Atom::Split),
            other => Err(Error::Expr(format!(
                "unknown checker `{other}`; known: schreier-epi, regular-schreier, \
                 schreier-point, strong-gp, schreier-gp, split"
            ))),
        }
    }

    /// Whether the atom only inspects the epimorphism `f`.
    fn epi_only(self) -> bool {
        matches!(self, Atom::SchreierEpi | Atom::RegularSchreier)
    }
}

#[derive(Debug, Clone)]
pub enum Expr {
    Atom(Atom),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut parser = Parser { tokens, pos: 0 };
        let expr = parser.or_expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Expr(format!(
                "unexpected trailing input at token {}",
                parser.pos
            )));
        }
        Ok(expr)
    }

    fn needs_gp_stream(&self) -> bool {
        match self {
            Expr::Atom(a) => !a.epi_only(),
            Expr::Not(e) => e.needs_gp_stream(),
            Expr::And(l, r) | Expr::Or(l, r) => l.needs_gp_stream() || r.needs_gp_stream(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '!' => {
                chars.next();
                out.push(Token::Not);
            }
            '&' => {
                chars.next();
                out.push(Token::And);
            }
            '|' => {
                chars.next();
                out.push(Token::Or);
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            c if c.is_ascii_lowercase() || c == '-' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_lowercase() || c == '-' || c.is_ascii_digit() {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Name(name));
            }
            other => {
                return Err(Error::Expr(format!("unexpected character `{other}`")));
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Expr("empty expression".into()));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn or_expr(&mut self) -> Result<Expr> {
        let mut left = self.and_expr()?;
        while self.eat(&Token::Or) {
            let right = self.and_expr()?;
            left = Expr::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and_expr(&mut self) -> Result<Expr> {
        let mut left = self.not_expr()?;
        while self.eat(&Token::And) {
            let right = self.not_expr()?;
            left = Expr::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn not_expr(&mut self) -> Result<Expr> {
        if self.eat(&Token::Not) {
            return Ok(Expr::Not(Box::new(self.not_expr()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.or_expr()?;
                if !self.eat(&Token::Close) {
                    return Err(Error::Expr("missing closing parenthesis".into()));
                }
                Ok(inner)
            }
            Some(Token::Name(name)) => {
                self.pos += 1;
                Ok(Expr::Atom(Atom::parse(&name)?))
            }
            other => Err(Error::Expr(format!("expected a checker name, got {other:?}"))),
        }
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.tokens.get(self.pos) == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
}

/// One instance examined by the search engine.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Surjection { f: Hom },
    Gp { gp: GeneralizedPoint },
}

impl Instance {
    pub fn total_order(&self) -> usize {
        match self {
            Instance::Surjection { f } => f.dom().order() + f.cod().order(),
            Instance::Gp { gp } => {
                gp.apex().order() + gp.base().order() + gp.source().order()
            }
        }
    }
}

fn eval(expr: &Expr, instance: &Instance, fast: bool) -> bool {
    match expr {
        Expr::Not(e) => !eval(e, instance, fast),
        Expr::And(l, r) => eval(l, instance, fast) && eval(r, instance, fast),
        Expr::Or(l, r) => eval(l, instance, fast) || eval(r, instance, fast),
        Expr::Atom(atom) => {
            let f = match instance {
                Instance::Surjection { f } => f,
                Instance::Gp { gp } => gp.f(),
            };
            match atom {
                Atom::SchreierEpi => {
                    if fast {
                        points::is_schreier_epi(f).expect("stream is surjective").holds
                    } else {
                        literal::is_schreier_epi(f).expect("stream is surjective").holds
                    }
                }
                Atom::RegularSchreier => {
                    if fast {
                        points::is_regular_schreier_epi(f)
                            .expect("stream is surjective")
                            .holds
                    } else {
                        literal::is_regular_schreier_epi(f)
                            .expect("stream is surjective")
                            .holds
                    }
                }
                Atom::Split => match instance {
                    Instance::Surjection { .. } => false,
                    Instance::Gp { gp } => gp.is_split(),
                },
                Atom::SchreierPoint => match instance {
                    Instance::Surjection { .. } => false,
                    Instance::Gp { gp } => match gp.as_point() {
                        None => false,
                        Some(p) => {
                            if fast {
                                points::is_schreier_point(&p).holds
                            } else {
                                literal::is_schreier_point(&p).holds
                            }
                        }
                    },
                },
                Atom::StrongGp => match instance {
                    Instance::Surjection { .. } => false,
                    Instance::Gp { gp } => points::is_strong_gp(gp).holds,
                },
                Atom::SchreierGp => match instance {
                    Instance::Surjection { .. } => false,
                    Instance::Gp { gp } => {
                        if fast {
                            points::is_schreier_gp(gp).holds
                        } else {
                            literal::is_schreier_gp(gp).holds
                        }
                    }
                },
            }
        }
    }
}

/// A hit, with its serialized instance frozen for stable ordering.
#[derive(Debug, Clone, Serialize)]
pub struct SearchHit {
    pub total_order: usize,
    pub instance: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub expr: String,
    pub checked: u64,
    pub hits: Vec<SearchHit>,
}

/// Evaluates the expression over the corpus stream, smallest total order
/// first. Every hit is re-validated by the definition-literal checkers;
/// a disagreement aborts the search with an error.
pub fn search(expr_src: &str, corpus: &Corpus) -> Result<SearchOutcome> {
    let expr = Expr::parse(expr_src)?;
    let instances: Vec<Instance> = if expr.needs_gp_stream() {
        corpus
            .gp_tasks()
            .iter()
            .flat_map(|task| {
                corpus
                    .gps_for_task(task)
                    .into_iter()
                    .map(|gp| Instance::Gp { gp })
            })
            .collect()
    } else {
        corpus
            .surjections()
            .into_iter()
            .map(|f| Instance::Surjection { f })
            .collect()
    };
    let checked = instances.len() as u64;
    let flags = par::map_collect(&instances, |inst| eval(&expr, inst, true));
    let mut hits = Vec::new();
    for (inst, hit) in instances.into_iter().zip(flags) {
        if !hit {
            continue;
        }
        if !eval(&expr, &inst, false) {
            return Err(Error::CheckerDisagreement {
                context: serde_json::to_string(&inst)?,
            });
        }
        hits.push(SearchHit {
            total_order: inst.total_order(),
            instance: serde_json::to_value(&inst)?,
        });
    }
    hits.sort_by(|a, b| {
        (a.total_order, a.instance.to_string()).cmp(&(b.total_order, b.instance.to_string()))
    });
    Ok(SearchOutcome {
        expr: expr_src.into(),
        checked,
        hits,
    })
}
