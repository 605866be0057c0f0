//! Bound quiver algebras: path enumeration up to a nilpotency bound,
//! the relation ideal as an echelonized subspace, and the quotient algebra
//! on the surviving path monomials.
//!
//! The bound is load-bearing: we compute in the truncation of the path
//! algebra at paths of length `nilpotency_bound` and verify that every path
//! of exactly that length falls in the relation ideal. If one does not, the
//! truncation would silently change the algebra, so construction fails with
//! `BoundTooSmall` instead.

use std::collections::HashMap;

use exactcore::{Echelonizer, FMatrix, Field, Quotient, Scalar};
use thiserror::Error;

use crate::core::Algebra;
use crate::parse::{parse_expression, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: usize,
    /// (label, source vertex, target vertex), vertices 1-based.
    pub arrows: Vec<(String, usize, usize)>,
    /// Relation expressions in the arrow labels (and e1..ek for vertices).
    pub relations: Vec<String>,
    /// All paths of this length must lie in the relation ideal.
    pub nilpotency_bound: usize,
}

#[derive(Debug, Error, PartialEq)]
pub enum QuiverError {
    #[error("a path of length {bound} survives the relations: `{path}`")]
    BoundTooSmall { bound: usize, path: String },
    #[error("invalid quiver: {0}")]
    BadQuiver(String),
    #[error("relation `{src}`: {err}")]
    Relation { src: String, err: ParseError },
    #[error("path count exceeds {0}; lower the nilpotency bound")]
    TooManyPaths(usize),
}

const MAX_PATHS: usize = 200_000;

/// A path, stored as its arrow index word; vertex paths have empty words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Path {
    start: usize,
    word: Vec<u16>,
}

struct PathSpace {
    list: Vec<Path>,
    index: HashMap<Path, usize>,
    arrows: Vec<(String, usize, usize)>, // 0-based vertices
}

impl PathSpace {
    fn target(&self, p: &Path) -> usize {
        match p.word.last() {
            None => p.start,
            Some(&a) => self.arrows[a as usize].2,
        }
    }

    /// Concatenate: None means the product is zero (not composable) or the
    /// result exceeds the truncation (valid to drop once the bound checks).
    fn concat(&self, p: &Path, q: &Path, bound: usize) -> Option<usize> {
        if self.target(p) != q.start {
            return None;
        }
        if p.word.len() + q.word.len() > bound {
            return None;
        }
        let mut word = p.word.clone();
        word.extend_from_slice(&q.word);
        let key = Path { start: p.start, word };
        self.index.get(&key).copied()
    }

    fn label(&self, p: &Path) -> String {
        if p.word.is_empty() {
            format!("e{}", p.start + 1)
        } else {
            let parts: Vec<&str> =
                p.word.iter().map(|&a| self.arrows[a as usize].0.as_str()).collect();
            parts.join("*")
        }
    }
}

fn enumerate_paths(
    vertices: usize,
    arrows: &[(String, usize, usize)],
    bound: usize,
) -> Result<PathSpace, QuiverError> {
    let mut space = PathSpace {
        list: Vec::new(),
        index: HashMap::new(),
        arrows: arrows.to_vec(),
    };
    for v in 0..vertices {
        let p = Path { start: v, word: Vec::new() };
        space.index.insert(p.clone(), space.list.len());
        space.list.push(p);
    }
    let mut level_start = 0;
    for _len in 1..=bound {
        let level_end = space.list.len();
        for i in level_start..level_end {
            let p = space.list[i].clone();
            let at = space.target(&p);
            for (a, arrow) in arrows.iter().enumerate() {
                if arrow.1 != at {
                    continue;
                }
                let mut word = p.word.clone();
                word.push(a as u16);
                let q = Path { start: p.start, word };
                space.index.insert(q.clone(), space.list.len());
                space.list.push(q);
                if space.list.len() > MAX_PATHS {
                    return Err(QuiverError::TooManyPaths(MAX_PATHS));
                }
            }
        }
        level_start = level_end;
    }
    Ok(space)
}

/// Evaluate one relation expression into a dense row over the path space.
fn relation_row(
    field: &Field,
    space: &PathSpace,
    vertices: usize,
    bound: usize,
    src: &str,
) -> Result<FMatrix, QuiverError> {
    let terms = parse_expression(src).map_err(|err| QuiverError::Relation {
        src: src.to_string(),
        err,
    })?;
    let n = space.list.len();
    let mut out = FMatrix::zeros(field, 1, n);
    for term in &terms {
        // a sparse element of the truncated path algebra: (path, coeff)
        let mut value: Vec<(usize, Scalar)> = (0..vertices).map(|v| (v, 1 as Scalar)).collect();
        let mut coeff: Scalar = 1;
        for atom in &term.atoms {
            let resolved: Result<Option<usize>, QuiverError> = (|| {
                if let Some(a) = space.arrows.iter().position(|(l, _, _)| l == &atom.name) {
                    let key = Path {
                        start: space.arrows[a].1,
                        word: vec![a as u16],
                    };
                    return Ok(Some(space.index[&key]));
                }
                if let Some(v) = atom.name.strip_prefix('e') {
                    if let Ok(v) = v.parse::<usize>() {
                        if v >= 1 && v <= vertices {
                            return Ok(Some(v - 1));
                        }
                    }
                }
                if atom.name == "w" {
                    if field.m() < 2 {
                        return Err(QuiverError::Relation {
                            src: src.to_string(),
                            err: ParseError::NoGenerator,
                        });
                    }
                    coeff = field.mul(coeff, field.pow(field.gen(), atom.power as u64));
                    return Ok(None);
                }
                if let Ok(k) = atom.name.parse::<i64>() {
                    coeff = field.mul(coeff, field.pow(field.from_int(k), atom.power as u64));
                    return Ok(None);
                }
                Err(QuiverError::Relation {
                    src: src.to_string(),
                    err: ParseError::UnknownSymbol(atom.name.clone()),
                })
            })();
            let Some(pidx) = resolved? else { continue };
            for _ in 0..atom.power {
                let mut next: Vec<(usize, Scalar)> = Vec::new();
                for &(t, c) in &value {
                    if let Some(r) = space.concat(&space.list[t], &space.list[pidx], bound) {
                        match next.iter_mut().find(|(i, _)| *i == r) {
                            Some((_, acc)) => *acc = field.add(*acc, c),
                            None => next.push((r, c)),
                        }
                    }
                }
                value = next;
            }
        }
        if term.negated {
            coeff = field.neg(coeff);
        }
        for &(t, c) in &value {
            let cur = out.get(0, t);
            out.set(0, t, field.add(cur, field.mul(coeff, c)));
        }
    }
    Ok(out)
}

/// Build the bound quiver algebra. Basis elements are the path monomials
/// outside the relation ideal; labels are `e1..ek` for vertices and
/// `*`-joined arrow labels for longer paths (so labels re-parse to the
/// elements they name).
pub fn quiver_algebra(field: &Field, pres: &QuiverPresentation) -> Result<Algebra, QuiverError> {
    if pres.vertices == 0 {
        return Err(QuiverError::BadQuiver("no vertices".to_string()));
    }
    let mut arrows = Vec::with_capacity(pres.arrows.len());
    for (label, s, t) in &pres.arrows {
        if *s < 1 || *s > pres.vertices || *t < 1 || *t > pres.vertices {
            return Err(QuiverError::BadQuiver(format!("arrow `{label}` endpoint out of range")));
        }
        if arrows.iter().any(|(l, _, _): &(String, usize, usize)| l == label) {
            return Err(QuiverError::BadQuiver(format!("duplicate arrow label `{label}`")));
        }
        if label.starts_with('e') && label[1..].chars().all(|c| c.is_ascii_digit()) {
            return Err(QuiverError::BadQuiver(format!(
                "arrow label `{label}` collides with vertex path names"
            )));
        }
        arrows.push((label.clone(), s - 1, t - 1));
    }
    let bound = pres.nilpotency_bound;
    let space = enumerate_paths(pres.vertices, &arrows, bound)?;
    let n = space.list.len();

    // ideal closure: seed with the relation rows, close under left and
    // right multiplication by vertices and arrows
    let mut ideal = Echelonizer::new(field, n);
    let mut worklist: Vec<FMatrix> = Vec::new();
    for rel in &pres.relations {
        worklist.push(relation_row(field, &space, pres.vertices, bound, rel)?);
    }
    let gen_paths: Vec<usize> = (0..pres.vertices + arrows.len()).collect();
    while let Some(row) = worklist.pop() {
        if ideal.insert(&row, 0).is_none() {
            continue;
        }
        let vals = row.get_row(0);
        for &g in &gen_paths {
            let gp = &space.list[g];
            for side in 0..2 {
                let mut prod = FMatrix::zeros(field, 1, n);
                let mut any = false;
                for (t, &c) in vals.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let r = if side == 0 {
                        space.concat(gp, &space.list[t], bound)
                    } else {
                        space.concat(&space.list[t], gp, bound)
                    };
                    if let Some(r) = r {
                        let cur = prod.get(0, r);
                        prod.set(0, r, field.add(cur, c));
                        any = true;
                    }
                }
                if any {
                    worklist.push(prod);
                }
            }
        }
    }

    // the truncation is only faithful if every maximal-length path died
    for (i, p) in space.list.iter().enumerate() {
        if p.word.len() == bound && !ideal.is_pivot(i) {
            return Err(QuiverError::BoundTooSmall {
                bound,
                path: space.label(p),
            });
        }
    }

    let quo = Quotient::new(ideal);
    let dim = quo.dim();
    let basis_paths: Vec<usize> = quo.comp_positions().to_vec();
    let labels: Vec<String> =
        basis_paths.iter().map(|&i| space.label(&space.list[i])).collect();
    let mut unit = vec![0 as Scalar; dim];
    for v in 0..pres.vertices {
        let mut amb = vec![0 as Scalar; n];
        amb[v] = 1;
        for (k, c) in quo.project(&amb).into_iter().enumerate() {
            unit[k] = field.add(unit[k], c);
        }
    }
    let quo2 = &quo;
    let space2 = &space;
    let alg = Algebra::from_mult_table(field, labels, &unit, |i, j| {
        let (p, q) = (&space2.list[basis_paths[i]], &space2.list[basis_paths[j]]);
        match space2.concat(p, q, bound) {
            None => vec![0 as Scalar; dim],
            Some(r) => {
                let mut amb = vec![0 as Scalar; n];
                amb[r] = 1;
                quo2.project(&amb)
            }
        }
    });
    Ok(alg)
}
