//! A small expression language for algebra elements.
//!
//! Grammar (no parentheses; labels are opaque tokens):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := atom ('*' atom)*
//! atom   := factor ['^' uint]
//! factor := uint | 'w' | basis label
//! ```
//!
//! `w` denotes the multiplicative generator of a proper field extension
//! (the class of the variable in the defining polynomial); integers are
//! reduced into the prime field. Labels may contain any characters except
//! whitespace and the four operator characters, so group-element labels
//! like `(123)` and path labels like `a*g` (which re-parse as products)
//! both work.

use exactcore::{FMatrix, Scalar};
use thiserror::Error;

use crate::core::Algebra;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty expression or term")]
    Empty,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("malformed expression near `{0}`")]
    Malformed(String),
    #[error("`w` is only defined over proper field extensions")]
    NoGenerator,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Atom {
    pub name: String,
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub negated: bool,
    pub atoms: Vec<Atom>,
}

/// Parse into a list of signed product terms.
pub fn parse_expression(src: &str) -> Result<Vec<Term>, ParseError> {
    let tokens = tokenize(src);
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut terms = Vec::new();
    let mut i = 0;
    let mut negated = false;
    if tokens[0] == "-" {
        negated = true;
        i = 1;
    } else if tokens[0] == "+" {
        i = 1;
    }
    loop {
        let (term, next) = parse_term(&tokens, i, negated)?;
        terms.push(term);
        i = next;
        if i == tokens.len() {
            return Ok(terms);
        }
        match tokens[i].as_str() {
            "+" => negated = false,
            "-" => negated = true,
            t => return Err(ParseError::Malformed(t.to_string())),
        }
        i += 1;
    }
}

fn parse_term(tokens: &[String], mut i: usize, negated: bool) -> Result<(Term, usize), ParseError> {
    let mut atoms = Vec::new();
    loop {
        if i >= tokens.len() || is_operator(&tokens[i]) {
            return Err(ParseError::Empty);
        }
        let name = tokens[i].clone();
        i += 1;
        let mut power = 1u32;
        if i + 1 < tokens.len() && tokens[i] == "^" {
            power = tokens[i + 1]
                .parse::<u32>()
                .map_err(|_| ParseError::Malformed(tokens[i + 1].clone()))?;
            i += 2;
        } else if i < tokens.len() && tokens[i] == "^" {
            return Err(ParseError::Malformed("^".to_string()));
        }
        atoms.push(Atom { name, power });
        if i < tokens.len() && tokens[i] == "*" {
            i += 1;
            continue;
        }
        return Ok((Term { negated, atoms }, i));
    }
}

fn is_operator(t: &str) -> bool {
    matches!(t, "+" | "-" | "*" | "^")
}

fn tokenize(src: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    for ch in src.chars() {
        if ch.is_whitespace() || matches!(ch, '+' | '-' | '*' | '^') {
            if !cur.is_empty() {
                tokens.push(std::mem::take(&mut cur));
            }
            if !ch.is_whitespace() {
                tokens.push(ch.to_string());
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    tokens
}

/// What an atom token denotes during evaluation.
pub enum Resolved {
    Scalar(Scalar),
    Element(FMatrix),
}

/// Evaluate a parsed expression with a caller-supplied symbol resolver.
/// The resolver sees each atom name; scalars multiply into the term
/// coefficient, elements multiply left-to-right.
pub fn eval_terms(
    a: &Algebra,
    terms: &[Term],
    resolve: impl Fn(&str) -> Result<Resolved, ParseError>,
) -> Result<FMatrix, ParseError> {
    let mut acc = a.zero();
    for term in terms {
        let mut coeff: Scalar = 1;
        let mut prod = a.one();
        for atom in &term.atoms {
            match resolve(&atom.name)? {
                Resolved::Scalar(s) => {
                    coeff = a.field.mul(coeff, a.field.pow(s, atom.power as u64));
                }
                Resolved::Element(el) => {
                    for _ in 0..atom.power {
                        prod = a.mul(&prod, &el);
                    }
                }
            }
        }
        if term.negated {
            coeff = a.field.neg(coeff);
        }
        acc = acc.add(&prod.scale(coeff));
    }
    Ok(acc)
}

/// Resolve atoms against the algebra's own basis labels, plus integer
/// literals and the extension generator `w`.
pub fn parse_element(a: &Algebra, src: &str) -> Result<FMatrix, ParseError> {
    let terms = parse_expression(src)?;
    eval_terms(a, &terms, |name| {
        if let Some(i) = a.labels.iter().position(|l| l == name) {
            return Ok(Resolved::Element(a.basis_el(i)));
        }
        if name == "w" {
            if a.field.m() < 2 {
                return Err(ParseError::NoGenerator);
            }
            return Ok(Resolved::Scalar(a.field.gen()));
        }
        if let Ok(n) = name.parse::<i64>() {
            return Ok(Resolved::Scalar(a.field.from_int(n)));
        }
        Err(ParseError::UnknownSymbol(name.to_string()))
    })
}
